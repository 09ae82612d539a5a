//! A three-time measurement scenario on a precessing qubit.

use crate::error::Error;
use crate::linalg::{bloch_components, bloch_matrix, unitary_evolution, CMatrix};
use crate::observable::DichotomicObservable;
use crate::state::QuantumState;
use crate::{tol, Result};

/// Initial state, Hamiltonian, three measurement times, the observable
/// measured at t1, and the unsharpness of the first measurement of each
/// sequential pair.
///
/// The observables at later times follow the Heisenberg picture,
/// M_j = U^dag M_1 U with U = exp(-i H (t_j - t_1)); they are generated once
/// at construction.
#[derive(Debug, Clone)]
pub struct LgScenario {
    initial: QuantumState,
    hamiltonian: CMatrix,
    times: [f64; 3],
    lambda: f64,
    observables: [DichotomicObservable; 3],
}

impl LgScenario {
    pub fn new(
        initial: QuantumState,
        hamiltonian: CMatrix,
        times: [f64; 3],
        base: DichotomicObservable,
        lambda: f64,
    ) -> Result<Self> {
        if initial.dim() != 2 || hamiltonian.dim() != 2 {
            return Err(Error::DimensionMismatch {
                left: initial.dim(),
                right: hamiltonian.dim(),
            });
        }
        hamiltonian.check_hermitian(tol::IDENTITY)?;
        if !(times[0] <= times[1] && times[1] <= times[2]) {
            return Err(Error::UnorderedTimes);
        }
        if !(lambda > 0.0 && lambda <= 1.0) {
            return Err(Error::InvalidLambda { lambda });
        }
        let evolve = |dt: f64| -> Result<DichotomicObservable> {
            let u = unitary_evolution(&hamiltonian, dt)?;
            let m = u.adjoint().matmul(base.matrix())?.matmul(&u)?;
            DichotomicObservable::from_bloch(bloch_components(&m))
        };
        let observables = [
            base.clone(),
            evolve(times[1] - times[0])?,
            evolve(times[2] - times[0])?,
        ];
        Ok(Self {
            initial,
            hamiltonian,
            times,
            lambda,
            observables,
        })
    }

    /// Standard precession family: state from Bloch angles, Hamiltonian
    /// (axis . sigma)/2 with unit frequency, base observable sigma_z, and
    /// times (0, theta12, theta12 + theta23) so the arguments are the
    /// dimensionless evolution angles directly.
    #[allow(clippy::too_many_arguments)]
    pub fn precession(
        state_theta: f64,
        state_phi: f64,
        purity: f64,
        axis_theta: f64,
        axis_phi: f64,
        theta12: f64,
        theta23: f64,
        lambda: f64,
    ) -> Result<Self> {
        let initial = QuantumState::from_bloch_angles(state_theta, state_phi, purity)?;
        let sa = libm::sin(axis_theta);
        let axis = [
            sa * libm::cos(axis_phi),
            sa * libm::sin(axis_phi),
            libm::cos(axis_theta),
        ];
        let hamiltonian = bloch_matrix(axis).scale_re(0.5);
        Self::new(
            initial,
            hamiltonian,
            [0.0, theta12, theta12 + theta23],
            DichotomicObservable::sigma_z(),
            lambda,
        )
    }

    pub fn state(&self) -> &QuantumState {
        &self.initial
    }

    pub fn hamiltonian(&self) -> &CMatrix {
        &self.hamiltonian
    }

    pub fn times(&self) -> [f64; 3] {
        self.times
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// Observable measured at time `index` (1-based, as in M_1, M_2, M_3).
    pub fn observable(&self, index: usize) -> Result<&DichotomicObservable> {
        if !(1..=3).contains(&index) {
            return Err(Error::InvalidTimeIndex { index });
        }
        Ok(&self.observables[index - 1])
    }

    /// Validates an ordered pair of measurement indices.
    pub fn pair(&self, i: usize, j: usize) -> Result<(&DichotomicObservable, &DichotomicObservable)> {
        let oi = self.observable(i)?;
        let oj = self.observable(j)?;
        if i >= j {
            return Err(Error::IndexOrder { i, j });
        }
        Ok((oi, oj))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{sigma_y, unitary_evolution};
    use approx::assert_abs_diff_eq;
    use core::f64::consts::PI;

    fn precession_scenario(theta12: f64, theta23: f64) -> LgScenario {
        LgScenario::precession(0.0, 0.0, 0.0, 0.0, 0.0, theta12, theta23, 1.0).unwrap()
    }

    #[test]
    fn heisenberg_chain_is_consistent() {
        // Evolving M2 by (t3 - t2) must reproduce M3 exactly.
        let sc = LgScenario::precession(0.3, 1.1, 0.7, PI / 2.0, PI / 2.0, 0.9, 1.4, 1.0).unwrap();
        let u = unitary_evolution(sc.hamiltonian(), sc.times()[2] - sc.times()[1]).unwrap();
        let m2 = sc.observable(2).unwrap().matrix();
        let chained = u.adjoint().matmul(m2).unwrap().matmul(&u).unwrap();
        assert!(chained.approx_eq(sc.observable(3).unwrap().matrix(), tol::IDENTITY));
    }

    #[test]
    fn precession_angles_show_up_in_bloch_vectors() {
        // Axis defaults: theta = 0 puts the axis on z; pick y instead.
        let sc = LgScenario::precession(0.0, 0.0, 1.0, PI / 2.0, PI / 2.0, PI / 3.0, PI / 3.0, 1.0)
            .unwrap();
        assert!(sc
            .hamiltonian()
            .approx_eq(&sigma_y().scale_re(0.5), tol::IDENTITY));
        let n2 = sc.observable(2).unwrap().bloch();
        assert_abs_diff_eq!(n2[2], libm::cos(PI / 3.0), epsilon = tol::IDENTITY);
        let n3 = sc.observable(3).unwrap().bloch();
        assert_abs_diff_eq!(n3[2], libm::cos(2.0 * PI / 3.0), epsilon = tol::IDENTITY);
    }

    #[test]
    fn index_validation() {
        let sc = precession_scenario(0.5, 0.5);
        assert!(matches!(
            sc.observable(0),
            Err(Error::InvalidTimeIndex { index: 0 })
        ));
        assert!(matches!(
            sc.observable(4),
            Err(Error::InvalidTimeIndex { index: 4 })
        ));
        assert!(matches!(sc.pair(2, 2), Err(Error::IndexOrder { .. })));
        assert!(sc.pair(1, 3).is_ok());
    }

    #[test]
    fn constructor_rejects_bad_inputs() {
        let state = QuantumState::maximally_mixed(2);
        let h = sigma_y().scale_re(0.5);
        let base = DichotomicObservable::sigma_z();
        assert!(matches!(
            LgScenario::new(state.clone(), h.clone(), [0.0, 2.0, 1.0], base.clone(), 1.0),
            Err(Error::UnorderedTimes)
        ));
        assert!(matches!(
            LgScenario::new(state, h, [0.0, 1.0, 2.0], base, 0.0),
            Err(Error::InvalidLambda { .. })
        ));
    }
}
