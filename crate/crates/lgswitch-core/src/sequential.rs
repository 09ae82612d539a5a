//! Sequential (possibly unsharp) measurement statistics.
//!
//! The first measurement of a pair is an unsharp two-outcome POVM with
//! effects E(+/-) = ((1 +/- lambda)/2) pi(+/-) + ((1 -/+ lambda)/2) pi(-/+);
//! the second is projective. The joint probability follows the square-root
//! update rule P(m_i, m_j) = tr[(sqrt(E) rho sqrt(E)) pi_j], and the signed
//! correlation built from it collapses to (lambda/2) tr[rho {M_i, M_j}] - an
//! identity this module asserts on every evaluation.

use crate::error::Error;
use crate::linalg::CMatrix;
use crate::observable::{DichotomicObservable, Outcome};
use crate::scenario::LgScenario;
use crate::state::QuantumState;
use crate::{tol, Result};

/// The unsharp effects (E^+, E^-) for a dichotomic observable.
///
/// Both are positive, they sum to the identity, and lambda = 1 reduces them
/// to the projectors.
pub fn povm_effects(
    obs: &DichotomicObservable,
    lambda: f64,
) -> Result<(CMatrix, CMatrix)> {
    check_lambda(lambda)?;
    let plus = obs.projector(Outcome::Plus);
    let minus = obs.projector(Outcome::Minus);
    let e_plus = plus
        .scale_re((1.0 + lambda) / 2.0)
        .add(&minus.scale_re((1.0 - lambda) / 2.0));
    let e_minus = plus
        .scale_re((1.0 - lambda) / 2.0)
        .add(&minus.scale_re((1.0 + lambda) / 2.0));
    Ok((e_plus, e_minus))
}

/// sqrt(E) for the outcome-`m` effect; spectral form on the projectors.
pub fn sqrt_effect(obs: &DichotomicObservable, lambda: f64, m: Outcome) -> Result<CMatrix> {
    check_lambda(lambda)?;
    let (a, b) = match m {
        Outcome::Plus => ((1.0 + lambda) / 2.0, (1.0 - lambda) / 2.0),
        Outcome::Minus => ((1.0 - lambda) / 2.0, (1.0 + lambda) / 2.0),
    };
    Ok(obs
        .projector(Outcome::Plus)
        .scale_re(libm::sqrt(a))
        .add(&obs.projector(Outcome::Minus).scale_re(libm::sqrt(b))))
}

/// Joint probability of outcomes (m_i, m_j) when M_i is measured unsharply
/// (scenario lambda) at t_i and M_j sharply at t_j, i < j.
pub fn sequential_joint_prob(
    scenario: &LgScenario,
    i: usize,
    j: usize,
    m_i: Outcome,
    m_j: Outcome,
) -> Result<f64> {
    let (obs_i, obs_j) = scenario.pair(i, j)?;
    Ok(joint_prob_raw(
        scenario.state(),
        obs_i,
        obs_j,
        scenario.lambda(),
        m_i,
        m_j,
    )?)
}

fn joint_prob_raw(
    state: &QuantumState,
    obs_i: &DichotomicObservable,
    obs_j: &DichotomicObservable,
    lambda: f64,
    m_i: Outcome,
    m_j: Outcome,
) -> Result<f64> {
    let root = sqrt_effect(obs_i, lambda, m_i)?;
    let updated = root.matmul(state.rho())?.matmul(&root)?;
    let p = updated.matmul(obs_j.projector(m_j))?.trace();
    debug_assert!(libm::fabs(p.im) < tol::IDENTITY);
    Ok(p.re)
}

/// Symmetrized correlation (1/2) tr[rho {M_i, M_j}] at full sharpness.
pub fn anticommutator_correlation(
    state: &QuantumState,
    obs_i: &DichotomicObservable,
    obs_j: &DichotomicObservable,
) -> f64 {
    let anti = obs_i
        .matrix()
        .anticommutator(obs_j.matrix())
        .expect("qubit observables");
    state.expect_real(&anti) / 2.0
}

/// Sequential correlation <M_i M_j> at the scenario's unsharpness.
///
/// Evaluated twice - as the signed sum over the four joint probabilities and
/// as (lambda/2) tr[rho {M_i, M_j}] - and the two routes are asserted to
/// agree before the value is returned.
pub fn sequential_correlation(scenario: &LgScenario, i: usize, j: usize) -> Result<f64> {
    let (obs_i, obs_j) = scenario.pair(i, j)?;
    let state = scenario.state();
    let lambda = scenario.lambda();
    let mut from_joints = 0.0;
    for m_i in Outcome::BOTH {
        for m_j in Outcome::BOTH {
            from_joints +=
                m_i.sign() * m_j.sign() * joint_prob_raw(state, obs_i, obs_j, lambda, m_i, m_j)?;
        }
    }
    let from_anticommutator = lambda * anticommutator_correlation(state, obs_i, obs_j);
    assert!(
        libm::fabs(from_joints - from_anticommutator) <= tol::IDENTITY,
        "sequential-correlation routes disagree"
    );
    Ok(from_joints)
}

/// Sharp (lambda = 1) sequential correlation for a scenario pair; this is
/// the moment entering every inequality.
pub fn sharp_correlation(scenario: &LgScenario, i: usize, j: usize) -> Result<f64> {
    let (obs_i, obs_j) = scenario.pair(i, j)?;
    Ok(anticommutator_correlation(scenario.state(), obs_i, obs_j))
}

fn check_lambda(lambda: f64) -> Result<()> {
    if !(lambda > 0.0 && lambda <= 1.0) || !lambda.is_finite() {
        return Err(Error::InvalidLambda { lambda });
    }
    Ok(())
}
