//! Dichotomic qubit observables and their measurement bases.

use alloc::vec;

use crate::error::Error;
use crate::linalg::{bloch_matrix, CMatrix, CVector, Complex};
use crate::{tol, Result};

/// One of the two outcomes of a dichotomic measurement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    Plus,
    Minus,
}

impl Outcome {
    pub const BOTH: [Outcome; 2] = [Outcome::Plus, Outcome::Minus];

    /// +1.0 or -1.0.
    pub fn sign(self) -> f64 {
        match self {
            Outcome::Plus => 1.0,
            Outcome::Minus => -1.0,
        }
    }

    /// Table index: Plus -> 0, Minus -> 1.
    pub fn index(self) -> usize {
        match self {
            Outcome::Plus => 0,
            Outcome::Minus => 1,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Outcome::Plus => Outcome::Minus,
            Outcome::Minus => Outcome::Plus,
        }
    }

    pub fn from_sign(value: i32) -> Result<Self> {
        match value {
            1 => Ok(Outcome::Plus),
            -1 => Ok(Outcome::Minus),
            other => Err(Error::InvalidOutcome { value: other }),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Outcome::Plus => "+",
            Outcome::Minus => "-",
        }
    }
}

/// An orthonormal pair of qubit kets {|+m>, |-m>} used as a measurement basis.
#[derive(Debug, Clone)]
pub struct MeasurementBasis {
    kets: [CVector; 2],
}

impl MeasurementBasis {
    /// Validates orthonormality before accepting the pair.
    pub fn new(plus: CVector, minus: CVector) -> Result<Self> {
        if plus.dim() != minus.dim() {
            return Err(Error::DimensionMismatch {
                left: plus.dim(),
                right: minus.dim(),
            });
        }
        let dev = [
            libm::fabs(plus.norm() - 1.0),
            libm::fabs(minus.norm() - 1.0),
            plus.dot(&minus).norm(),
        ]
        .into_iter()
        .fold(0.0, f64::max);
        if dev > tol::IDENTITY {
            return Err(Error::NotOrthonormal { deviation: dev });
        }
        Ok(Self {
            kets: [plus, minus],
        })
    }

    pub fn ket(&self, m: Outcome) -> &CVector {
        &self.kets[m.index()]
    }

    /// Rank-1 projector |m><m|.
    pub fn projector(&self, m: Outcome) -> CMatrix {
        let k = self.ket(m);
        k.outer(k)
    }

    pub fn dim(&self) -> usize {
        self.kets[0].dim()
    }
}

/// A two-outcome qubit observable M = n . sigma for a unit Bloch vector n.
///
/// Construction fixes eigenvector phases (first significant component real
/// positive) so quasiprobability tables are identical across runs.
#[derive(Debug, Clone)]
pub struct DichotomicObservable {
    bloch: [f64; 3],
    matrix: CMatrix,
    projectors: [CMatrix; 2],
    basis: MeasurementBasis,
}

impl DichotomicObservable {
    /// Builds the observable from a (not necessarily normalized) Bloch
    /// direction. Errors on a zero vector.
    pub fn from_bloch(direction: [f64; 3]) -> Result<Self> {
        let len = libm::sqrt(
            direction[0] * direction[0] + direction[1] * direction[1] + direction[2] * direction[2],
        );
        if len < tol::OVERLAP {
            return Err(Error::ZeroBlochVector);
        }
        let n = [direction[0] / len, direction[1] / len, direction[2] / len];
        let matrix = bloch_matrix(n);
        let id = CMatrix::identity(2);
        let proj_plus = id.add(&matrix).scale_re(0.5);
        let proj_minus = id.sub(&matrix).scale_re(0.5);
        let plus = rank1_eigenvector(&proj_plus);
        let minus = rank1_eigenvector(&proj_minus);
        let basis = MeasurementBasis::new(plus, minus)?;
        Ok(Self {
            bloch: n,
            matrix,
            projectors: [proj_plus, proj_minus],
            basis,
        })
    }

    pub fn sigma_z() -> Self {
        Self::from_bloch([0.0, 0.0, 1.0]).expect("unit vector")
    }

    pub fn sigma_x() -> Self {
        Self::from_bloch([1.0, 0.0, 0.0]).expect("unit vector")
    }

    /// Direction at polar angle `theta`, azimuth `phi`.
    pub fn from_angles(theta: f64, phi: f64) -> Self {
        let st = libm::sin(theta);
        Self::from_bloch([st * libm::cos(phi), st * libm::sin(phi), libm::cos(theta)])
            .expect("unit vector")
    }

    pub fn bloch(&self) -> [f64; 3] {
        self.bloch
    }

    /// The observable matrix n . sigma.
    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    /// Projector (I + m M)/2 onto the outcome-`m` eigenspace.
    pub fn projector(&self, m: Outcome) -> &CMatrix {
        &self.projectors[m.index()]
    }

    pub fn eigenvector(&self, m: Outcome) -> &CVector {
        self.basis.ket(m)
    }

    pub fn basis(&self) -> &MeasurementBasis {
        &self.basis
    }
}

/// Extracts the normalized range vector of a rank-1 projector: the larger
/// column, normalized, with the phase convention applied.
fn rank1_eigenvector(projector: &CMatrix) -> CVector {
    let c0 = projector.column(0);
    let c1 = projector.column(1);
    let col = if c0.norm() >= c1.norm() { c0 } else { c1 };
    col.normalized().expect("rank-1 projector").phase_fixed()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::sigma_y;
    use approx::assert_abs_diff_eq;

    #[test]
    fn observable_invariants_hold_on_a_spread_of_directions() {
        let dirs = [
            [0.0, 0.0, 1.0],
            [1.0, 0.0, 0.0],
            [0.0, 1.0, 0.0],
            [0.6, -0.8, 0.0],
            [0.3, 0.4, -0.87],
            [-0.2, 0.5, 0.9],
        ];
        let id = CMatrix::identity(2);
        for d in dirs {
            let obs = DichotomicObservable::from_bloch(d).unwrap();
            let m = obs.matrix();
            // Hermitian, squares to the identity.
            assert!(m.hermiticity_deviation() <= tol::IDENTITY);
            assert!(m.matmul(m).unwrap().approx_eq(&id, tol::IDENTITY));
            // Projectors are idempotent and resolve the identity.
            for o in Outcome::BOTH {
                let p = obs.projector(o);
                assert!(p.matmul(p).unwrap().approx_eq(p, tol::IDENTITY));
                assert!(p.hermiticity_deviation() <= tol::IDENTITY);
                // Projector equals the outer product of its eigenvector.
                let v = obs.eigenvector(o);
                assert!(p.approx_eq(&v.outer(v), tol::IDENTITY));
                // M |m> = m |m>.
                let mv = m.apply(v);
                assert!(mv.approx_eq(&v.scale(Complex::new(o.sign(), 0.0)), tol::IDENTITY));
            }
            let sum = obs
                .projector(Outcome::Plus)
                .add(obs.projector(Outcome::Minus));
            assert!(sum.approx_eq(&id, tol::IDENTITY));
        }
    }

    #[test]
    fn zero_bloch_vector_is_rejected() {
        assert_eq!(
            DichotomicObservable::from_bloch([0.0, 0.0, 0.0]).err(),
            Some(Error::ZeroBlochVector)
        );
    }

    #[test]
    fn sigma_y_eigenvector_phase_is_canonical() {
        let obs = DichotomicObservable::from_bloch([0.0, 1.0, 0.0]).unwrap();
        let v = obs.eigenvector(Outcome::Plus);
        // First component real positive by convention.
        assert!(v.get(0).im.abs() < 1e-14 && v.get(0).re > 0.0);
        assert!(obs
            .matrix()
            .approx_eq(&sigma_y(), tol::IDENTITY));
    }

    #[test]
    fn measurement_basis_rejects_non_orthonormal_pairs() {
        let a = CVector::new(vec![Complex::ONE, Complex::ZERO]);
        let b = CVector::new(vec![
            Complex::new(0.8, 0.0),
            Complex::new(0.6, 0.0),
        ]);
        assert!(matches!(
            MeasurementBasis::new(a, b),
            Err(Error::NotOrthonormal { .. })
        ));
    }

    #[test]
    fn angles_constructor_matches_bloch_direction() {
        let theta = 2.0 * core::f64::consts::PI / 3.0;
        let obs = DichotomicObservable::from_angles(theta, 0.0);
        let n = obs.bloch();
        assert_abs_diff_eq!(n[0], libm::sin(theta), epsilon = 1e-15);
        assert_abs_diff_eq!(n[2], libm::cos(theta), epsilon = 1e-15);
    }
}
