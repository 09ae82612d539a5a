//! Density operators, pure or mixed.

use crate::error::Error;
use crate::linalg::{bloch_matrix, CMatrix, CVector, Complex};
use crate::observable::{DichotomicObservable, Outcome};
use crate::{tol, Result};

/// A quantum state as a density operator, remembering the state vector when
/// the operator is rank one.
#[derive(Debug, Clone)]
pub struct QuantumState {
    rho: CMatrix,
    pure: Option<CVector>,
}

impl QuantumState {
    /// State from a normalized ket.
    pub fn from_pure(psi: &CVector) -> Result<Self> {
        psi.check_normalized(tol::IDENTITY)?;
        let psi = psi.phase_fixed();
        Ok(Self {
            rho: psi.outer(&psi),
            pure: Some(psi),
        })
    }

    /// State from a density matrix; validates unit trace, Hermiticity and
    /// positivity, and recovers the ket when the operator is rank one.
    pub fn from_density(rho: CMatrix) -> Result<Self> {
        if rho.hermiticity_deviation() > tol::IDENTITY {
            return Err(Error::NotDensityMatrix {
                reason: "not Hermitian",
            });
        }
        if libm::fabs(rho.trace().re - 1.0) > tol::IDENTITY || libm::fabs(rho.trace().im) > tol::IDENTITY
        {
            return Err(Error::NotDensityMatrix {
                reason: "trace is not one",
            });
        }
        if min_eigenvalue_bound(&rho) < -tol::IDENTITY {
            return Err(Error::NotDensityMatrix {
                reason: "negative eigenvalue",
            });
        }
        let purity = rho.matmul(&rho).expect("square").trace().re;
        let pure = if libm::fabs(purity - 1.0) <= tol::IDENTITY {
            let psi = extract_ket(&rho);
            debug_assert!(psi.outer(&psi).approx_eq(&rho, tol::IDENTITY));
            Some(psi)
        } else {
            None
        };
        Ok(Self { rho, pure })
    }

    /// Qubit state with Bloch vector `b`, |b| <= 1.
    pub fn from_bloch(b: [f64; 3]) -> Result<Self> {
        let len = libm::sqrt(b[0] * b[0] + b[1] * b[1] + b[2] * b[2]);
        if len > 1.0 + tol::IDENTITY {
            return Err(Error::NotDensityMatrix {
                reason: "Bloch vector longer than one",
            });
        }
        let rho = CMatrix::identity(2).add(&bloch_matrix(b)).scale_re(0.5);
        Self::from_density(rho)
    }

    /// Bloch parameterization: polar/azimuth angles plus radial purity.
    pub fn from_bloch_angles(theta: f64, phi: f64, purity: f64) -> Result<Self> {
        let st = libm::sin(theta);
        Self::from_bloch([
            purity * st * libm::cos(phi),
            purity * st * libm::sin(phi),
            purity * libm::cos(theta),
        ])
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        Self {
            rho: CMatrix::identity(dim).scale_re(1.0 / dim as f64),
            pure: None,
        }
    }

    pub fn rho(&self) -> &CMatrix {
        &self.rho
    }

    pub fn dim(&self) -> usize {
        self.rho.dim()
    }

    pub fn is_pure(&self) -> bool {
        self.pure.is_some()
    }

    /// The ket when the state is rank one.
    pub fn ket(&self) -> Option<&CVector> {
        self.pure.as_ref()
    }

    /// tr(rho A).
    pub fn expectation(&self, a: &CMatrix) -> Complex {
        self.rho.matmul(a).expect("dimension checked").trace()
    }

    /// tr(rho A) for Hermitian A; the imaginary part must be noise.
    pub fn expect_real(&self, a: &CMatrix) -> f64 {
        let e = self.expectation(a);
        debug_assert!(libm::fabs(e.im) < tol::CHAINED, "expectation not real");
        e.re
    }

    /// Born probability tr(pi_m rho).
    pub fn born_probability(&self, obs: &DichotomicObservable, m: Outcome) -> f64 {
        self.expect_real(obs.projector(m))
    }
}

/// Lower bound on the smallest eigenvalue of a Hermitian matrix. Exact for
/// qubits; larger dimensions fall back to Gershgorin discs, which is
/// sufficient for the composite oracles used in tests.
fn min_eigenvalue_bound(h: &CMatrix) -> f64 {
    if h.dim() == 2 {
        let t = h.trace().re;
        let det = (h.get(0, 0) * h.get(1, 1) - h.get(0, 1) * h.get(1, 0)).re;
        let disc = libm::sqrt(libm::fmax(t * t / 4.0 - det, 0.0));
        t / 2.0 - disc
    } else {
        (0..h.dim())
            .map(|r| {
                let off: f64 = (0..h.dim())
                    .filter(|&c| c != r)
                    .map(|c| h.get(r, c).norm())
                    .sum();
                h.get(r, r).re - off
            })
            .fold(f64::INFINITY, f64::min)
    }
}

/// Normalized largest column of a rank-1 Hermitian operator.
fn extract_ket(rho: &CMatrix) -> CVector {
    let mut best = rho.column(0);
    for c in 1..rho.dim() {
        let col = rho.column(c);
        if col.norm() > best.norm() {
            best = col;
        }
    }
    best.normalized().expect("rank-1 operator").phase_fixed()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::sigma_z;
    use alloc::vec;
    use approx::assert_abs_diff_eq;

    #[test]
    fn pure_state_round_trips_through_density() {
        let psi = CVector::new(vec![
            Complex::new(0.6, 0.0),
            Complex::new(0.0, 0.8),
        ]);
        let s = QuantumState::from_pure(&psi).unwrap();
        let again = QuantumState::from_density(s.rho().clone()).unwrap();
        assert!(again.is_pure());
        let k = again.ket().unwrap();
        assert!(k.approx_eq(s.ket().unwrap(), tol::IDENTITY));
    }

    #[test]
    fn maximally_mixed_is_not_pure() {
        let s = QuantumState::maximally_mixed(2);
        assert!(!s.is_pure());
        assert_abs_diff_eq!(s.expect_real(&sigma_z()), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn bloch_state_expectations() {
        let s = QuantumState::from_bloch([0.0, 0.0, 0.5]).unwrap();
        assert_abs_diff_eq!(s.expect_real(&sigma_z()), 0.5, epsilon = tol::IDENTITY);
        assert!(!s.is_pure());
        let p = QuantumState::from_bloch([0.0, 0.0, 1.0]).unwrap();
        assert!(p.is_pure());
    }

    #[test]
    fn invalid_density_matrices_are_rejected() {
        // Trace two.
        let bad = CMatrix::identity(2);
        assert!(QuantumState::from_density(bad).is_err());
        // Negative eigenvalue: diag(1.5, -0.5).
        let mut neg = CMatrix::zeros(2);
        neg.set(0, 0, Complex::new(1.5, 0.0));
        neg.set(1, 1, Complex::new(-0.5, 0.0));
        assert!(matches!(
            QuantumState::from_density(neg),
            Err(Error::NotDensityMatrix { .. })
        ));
        // Bloch vector outside the ball.
        assert!(QuantumState::from_bloch([0.9, 0.9, 0.9]).is_err());
    }

    #[test]
    fn unnormalized_ket_is_rejected() {
        let psi = CVector::new(vec![Complex::ONE, Complex::ONE]);
        assert!(matches!(
            QuantumState::from_pure(&psi),
            Err(Error::NotNormalized { .. })
        ));
    }
}
