//! Kirkwood and Margenau-Hill quasiprobabilities over two and three bases.
//!
//! The two-basis complex value is k(m_i, m_j) = <m_i|m_j><m_j|rho|m_i>, whose
//! real part is the (possibly negative) Margenau-Hill distribution. The
//! three-basis extension k(m1, m2, m3) = <m1|m2><m2|rho|m3><m3|m1> is stored
//! without any prefactor, so the eight real values sum to one and every
//! marginal identity below holds exactly; complex values are kept alongside
//! because the pure-state factorization conjugates them.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::linalg::{CMatrix, Complex};
use crate::observable::{MeasurementBasis, Outcome};
use crate::scenario::LgScenario;
use crate::sequential::{self, sharp_correlation};
use crate::state::QuantumState;
use crate::{tol, Result};

/// All (m_i, m_j) pairs in table order.
pub const PAIRS: [(Outcome, Outcome); 4] = [
    (Outcome::Plus, Outcome::Plus),
    (Outcome::Plus, Outcome::Minus),
    (Outcome::Minus, Outcome::Plus),
    (Outcome::Minus, Outcome::Minus),
];

/// All (m1, m2, m3) triples in table order.
pub const TRIPLES: [(Outcome, Outcome, Outcome); 8] = [
    (Outcome::Plus, Outcome::Plus, Outcome::Plus),
    (Outcome::Plus, Outcome::Plus, Outcome::Minus),
    (Outcome::Plus, Outcome::Minus, Outcome::Plus),
    (Outcome::Plus, Outcome::Minus, Outcome::Minus),
    (Outcome::Minus, Outcome::Plus, Outcome::Plus),
    (Outcome::Minus, Outcome::Plus, Outcome::Minus),
    (Outcome::Minus, Outcome::Minus, Outcome::Plus),
    (Outcome::Minus, Outcome::Minus, Outcome::Minus),
];

/// Indexed complex Kirkwood values over outcome tuples; real parts are the
/// quasiprobabilities.
#[derive(Debug, Clone)]
pub struct QuasiprobTable {
    order: usize,
    kirkwood: Vec<Complex>,
}

impl QuasiprobTable {
    fn new(order: usize) -> Self {
        Self {
            order,
            kirkwood: vec![Complex::ZERO; 1 << order],
        }
    }

    fn slot(&self, outcomes: &[Outcome]) -> usize {
        assert_eq!(outcomes.len(), self.order, "tuple length != table order");
        outcomes
            .iter()
            .fold(0usize, |acc, m| (acc << 1) | m.index())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Complex Kirkwood value at an outcome tuple.
    pub fn kirkwood(&self, outcomes: &[Outcome]) -> Complex {
        self.kirkwood[self.slot(outcomes)]
    }

    /// Real quasiprobability at an outcome tuple.
    pub fn q(&self, outcomes: &[Outcome]) -> f64 {
        self.kirkwood(outcomes).re
    }

    /// Sum of the real values (one, up to rounding).
    pub fn sum(&self) -> f64 {
        self.kirkwood.iter().map(|k| k.re).sum()
    }

    /// Most negative entry.
    pub fn min_q(&self) -> f64 {
        self.kirkwood
            .iter()
            .map(|k| k.re)
            .fold(f64::INFINITY, f64::min)
    }

    /// Sum of q over all tuples with `position` (1-based) fixed at `m`.
    pub fn marginal_single(&self, position: usize, m: Outcome) -> Result<f64> {
        self.check_position(position)?;
        Ok(self
            .iter_tuples()
            .filter(|(t, _)| t[position - 1] == m)
            .map(|(_, k)| k.re)
            .sum())
    }

    /// 2x2 marginal over the two kept positions (1-based, ascending).
    pub fn marginal_pair(
        &self,
        keep_a: usize,
        keep_b: usize,
        m_a: Outcome,
        m_b: Outcome,
    ) -> Result<f64> {
        self.check_position(keep_a)?;
        self.check_position(keep_b)?;
        if keep_a >= keep_b {
            return Err(Error::IndexOrder {
                i: keep_a,
                j: keep_b,
            });
        }
        Ok(self
            .iter_tuples()
            .filter(|(t, _)| t[keep_a - 1] == m_a && t[keep_b - 1] == m_b)
            .map(|(_, k)| k.re)
            .sum())
    }

    /// Signed pair moment sum m_j m_k q over the whole table.
    pub fn correlation(&self, j: usize, k: usize) -> Result<f64> {
        self.check_position(j)?;
        self.check_position(k)?;
        if j >= k {
            return Err(Error::IndexOrder { i: j, j: k });
        }
        Ok(self
            .iter_tuples()
            .map(|(t, v)| t[j - 1].sign() * t[k - 1].sign() * v.re)
            .sum())
    }

    /// Signed full moment: product of all outcome signs times q.
    pub fn odd_moment(&self) -> f64 {
        self.iter_tuples()
            .map(|(t, v)| t.iter().map(|m| m.sign()).product::<f64>() * v.re)
            .sum()
    }

    fn check_position(&self, position: usize) -> Result<()> {
        if position == 0 || position > self.order {
            return Err(Error::InvalidTimeIndex { index: position });
        }
        Ok(())
    }

    fn iter_tuples(&self) -> impl Iterator<Item = (Vec<Outcome>, Complex)> + '_ {
        (0..self.kirkwood.len()).map(move |idx| {
            let tuple: Vec<Outcome> = (0..self.order)
                .map(|p| {
                    if (idx >> (self.order - 1 - p)) & 1 == 0 {
                        Outcome::Plus
                    } else {
                        Outcome::Minus
                    }
                })
                .collect();
            (tuple, self.kirkwood[idx])
        })
    }
}

// ---------------------------------------------------------------------------
// Two-basis distribution
// ---------------------------------------------------------------------------

/// Complex Kirkwood value and its real part for one outcome pair.
pub fn mh_quasiprob(
    state: &QuantumState,
    basis_i: &MeasurementBasis,
    basis_j: &MeasurementBasis,
    m_i: Outcome,
    m_j: Outcome,
) -> (Complex, f64) {
    let ket_i = basis_i.ket(m_i);
    let ket_j = basis_j.ket(m_j);
    let k = ket_i.dot(ket_j) * state.rho().sandwich(ket_j, ket_i);
    (k, k.re)
}

/// The full 4-entry two-basis table.
pub fn two_time_table(
    state: &QuantumState,
    basis_i: &MeasurementBasis,
    basis_j: &MeasurementBasis,
) -> QuasiprobTable {
    let mut table = QuasiprobTable::new(2);
    for (m_i, m_j) in PAIRS {
        let (k, _) = mh_quasiprob(state, basis_i, basis_j, m_i, m_j);
        let slot = table.slot(&[m_i, m_j]);
        table.kirkwood[slot] = k;
    }
    table
}

/// Two-basis table for a scenario measurement pair (i, j), i < j.
pub fn scenario_two_time_table(scenario: &LgScenario, i: usize, j: usize) -> Result<QuasiprobTable> {
    let (obs_i, obs_j) = scenario.pair(i, j)?;
    Ok(two_time_table(scenario.state(), obs_i.basis(), obs_j.basis()))
}

/// Moment expansion q = (1 + m_i <M_i> + m_j <M_j> + m_i m_j <M_i M_j>)/4,
/// with the pair moment taken as the sharp symmetrized correlation. Equals
/// the Margenau-Hill value for every outcome pair.
pub fn quasiprob_moment_form(
    scenario: &LgScenario,
    i: usize,
    j: usize,
    m_i: Outcome,
    m_j: Outcome,
) -> Result<f64> {
    let (obs_i, obs_j) = scenario.pair(i, j)?;
    let state = scenario.state();
    let ei = state.expect_real(obs_i.matrix());
    let ej = state.expect_real(obs_j.matrix());
    let cij = sharp_correlation(scenario, i, j)?;
    Ok(0.25 * (1.0 + m_i.sign() * ei + m_j.sign() * ej + m_i.sign() * m_j.sign() * cij))
}

// ---------------------------------------------------------------------------
// Operational non-invasiveness (two-time)
// ---------------------------------------------------------------------------

/// Marginal residuals of the two-basis quasiprobability against the Born
/// probabilities, together with the same marginal gap for the *sequential*
/// joint probabilities, which generally does not close.
#[derive(Debug, Clone)]
pub struct NsitTwoTimeReport {
    /// |sum_mi q(m_i, m_j) - tr(pi_mj rho)| indexed by m_j.
    pub quasiprob_later: [f64; 2],
    /// |sum_mj q(m_i, m_j) - tr(pi_mi rho)| indexed by m_i.
    pub quasiprob_earlier: [f64; 2],
    /// |sum_mi p_seq(m_i, m_j) - tr(pi_mj rho)| indexed by m_j.
    pub sequential_gap: [f64; 2],
}

impl NsitTwoTimeReport {
    pub fn max_quasiprob_residual(&self) -> f64 {
        self.quasiprob_later
            .iter()
            .chain(&self.quasiprob_earlier)
            .fold(0.0_f64, |a, &b| a.max(b))
    }

    pub fn max_sequential_gap(&self) -> f64 {
        self.sequential_gap[0].max(self.sequential_gap[1])
    }
}

/// Quasiprobability marginals reproduce single-time Born statistics; the
/// sequential-probability marginals are reported for contrast.
pub fn nsit_check_two_time(scenario: &LgScenario, i: usize, j: usize) -> Result<NsitTwoTimeReport> {
    let (obs_i, obs_j) = scenario.pair(i, j)?;
    let state = scenario.state();
    let table = two_time_table(state, obs_i.basis(), obs_j.basis());

    let mut quasiprob_later = [0.0; 2];
    let mut sequential_gap = [0.0; 2];
    for m_j in Outcome::BOTH {
        let born = state.born_probability(obs_j, m_j);
        let q_marg = table.marginal_single(2, m_j)?;
        quasiprob_later[m_j.index()] = libm::fabs(q_marg - born);
        let p_marg: f64 = Outcome::BOTH
            .into_iter()
            .map(|m_i| {
                sequential::sequential_joint_prob(scenario, i, j, m_i, m_j).expect("valid pair")
            })
            .sum();
        sequential_gap[m_j.index()] = libm::fabs(p_marg - born);
    }

    let mut quasiprob_earlier = [0.0; 2];
    for m_i in Outcome::BOTH {
        let born = state.born_probability(obs_i, m_i);
        let q_marg = table.marginal_single(1, m_i)?;
        quasiprob_earlier[m_i.index()] = libm::fabs(q_marg - born);
    }

    Ok(NsitTwoTimeReport {
        quasiprob_later,
        quasiprob_earlier,
        sequential_gap,
    })
}

// ---------------------------------------------------------------------------
// Weak values
// ---------------------------------------------------------------------------

/// Weak value of the projector |m_i><m_i| with pre-selection psi and
/// post-selection |m_j>: <m_j|m_i><m_i|psi> / <m_j|psi>.
///
/// Satisfies q(m_i, m_j) = Re(weak value) * |<psi|m_j>|^2 for pure states.
pub fn weak_value_projector(
    state: &QuantumState,
    basis_i: &MeasurementBasis,
    basis_j: &MeasurementBasis,
    m_i: Outcome,
    m_j: Outcome,
) -> Result<Complex> {
    let psi = state.ket().ok_or(Error::NotPure)?;
    let ket_i = basis_i.ket(m_i);
    let ket_j = basis_j.ket(m_j);
    let post = ket_j.dot(psi);
    if post.norm() <= tol::OVERLAP {
        return Err(Error::VanishingOverlap);
    }
    Ok(ket_j.dot(ket_i) * ket_i.dot(psi) / post)
}

// ---------------------------------------------------------------------------
// Three-basis distribution
// ---------------------------------------------------------------------------

/// The 8-entry three-basis table k(m1, m2, m3) = <m1|m2><m2|rho|m3><m3|m1>.
pub fn triple_quasiprob(
    state: &QuantumState,
    bases: [&MeasurementBasis; 3],
) -> QuasiprobTable {
    let mut table = QuasiprobTable::new(3);
    for (m1, m2, m3) in TRIPLES {
        let k1 = bases[0].ket(m1);
        let k2 = bases[1].ket(m2);
        let k3 = bases[2].ket(m3);
        let value = k1.dot(k2) * state.rho().sandwich(k2, k3) * k3.dot(k1);
        let slot = table.slot(&[m1, m2, m3]);
        table.kirkwood[slot] = value;
    }
    table
}

/// Three-basis table built from a scenario's generated observables.
pub fn scenario_triple_table(scenario: &LgScenario) -> Result<QuasiprobTable> {
    let b1 = scenario.observable(1)?.basis();
    let b2 = scenario.observable(2)?.basis();
    let b3 = scenario.observable(3)?.basis();
    Ok(triple_quasiprob(scenario.state(), [b1, b2, b3]))
}

/// Pure-state factorization of one three-basis value:
/// Re[k(m1, m3) conj(k(m2, m3))] / |<psi|m3>|^2, with the same normalization
/// convention as `triple_quasiprob`.
pub fn triple_pure_form_value(
    state: &QuantumState,
    bases: [&MeasurementBasis; 3],
    m1: Outcome,
    m2: Outcome,
    m3: Outcome,
) -> Result<f64> {
    let psi = state.ket().ok_or(Error::NotPure)?;
    let overlap = psi.dot(bases[2].ket(m3));
    if overlap.norm() <= tol::OVERLAP {
        return Err(Error::VanishingOverlap);
    }
    let (k13, _) = mh_quasiprob(state, &clone_basis(bases[0]), &clone_basis(bases[2]), m1, m3);
    let (k23, _) = mh_quasiprob(state, &clone_basis(bases[1]), &clone_basis(bases[2]), m2, m3);
    Ok((k13 * k23.conj()).re / overlap.norm_sqr())
}

// MeasurementBasis is cheap to clone; this keeps the borrow story simple in
// the factorized evaluation above.
fn clone_basis(b: &MeasurementBasis) -> MeasurementBasis {
    b.clone()
}

/// Result of cross-checking the pure-state factorization against the direct
/// three-basis values over all eight tuples.
#[derive(Debug, Clone)]
pub struct PureFormComparison {
    /// Pure-form values per tuple, in `TRIPLES` order.
    pub values: [f64; 8],
    /// Direct-table values per tuple, same order.
    pub direct: [f64; 8],
    /// max |pure-form - direct|; the factorized expression reorders the
    /// operator cycle, so a nonzero discrepancy is recorded, not hidden.
    pub max_discrepancy: f64,
}

/// Computes every pure-form value and measures the discrepancy against the
/// direct table. The two expressions trace different operator orderings, so
/// agreement is an empirical question the report answers per scenario.
pub fn triple_pure_form(
    state: &QuantumState,
    bases: [&MeasurementBasis; 3],
) -> Result<PureFormComparison> {
    let direct_table = triple_quasiprob(state, bases);
    let mut values = [0.0; 8];
    let mut direct = [0.0; 8];
    let mut max_discrepancy = 0.0_f64;
    for (idx, (m1, m2, m3)) in TRIPLES.into_iter().enumerate() {
        let v = triple_pure_form_value(state, bases, m1, m2, m3)?;
        let d = direct_table.q(&[m1, m2, m3]);
        values[idx] = v;
        direct[idx] = d;
        max_discrepancy = max_discrepancy.max(libm::fabs(v - d));
    }
    Ok(PureFormComparison {
        values,
        direct,
        max_discrepancy,
    })
}

// ---------------------------------------------------------------------------
// Three-basis marginals
// ---------------------------------------------------------------------------

/// Lueders sharp joint probability tr(pi_i rho pi_i pi_j) for basis pairs.
pub fn lueders_joint(
    state: &QuantumState,
    basis_i: &MeasurementBasis,
    basis_j: &MeasurementBasis,
    m_i: Outcome,
    m_j: Outcome,
) -> f64 {
    let pi = basis_i.projector(m_i);
    let pj = basis_j.projector(m_j);
    let updated = pi
        .matmul(state.rho())
        .and_then(|m| m.matmul(&pi))
        .and_then(|m| m.matmul(&pj))
        .expect("same dimension");
    updated.trace().re
}

/// Marginal structure of the three-basis table: single-outcome marginals
/// against Born probabilities (identities), and pairwise marginals against
/// two candidate referents - the two-basis Margenau-Hill values and the
/// Lueders sequential joints - with residuals reported for both.
#[derive(Debug, Clone)]
pub struct TripleMarginalReport {
    /// max_m |sum q - tr(pi_m rho)| for position 2.
    pub born_residual_m2: f64,
    /// Same for position 3.
    pub born_residual_m3: f64,
    /// Pair (2,3) marginal (sum over m1) vs two-basis MH values.
    pub pair23_vs_mh: f64,
    /// Pair (2,3) marginal vs Lueders sequential joints.
    pub pair23_vs_lueders: f64,
    /// Pair (1,2) marginal (sum over m3) vs two-basis MH values.
    pub pair12_vs_mh: f64,
    /// Pair (1,2) marginal vs Lueders sequential joints.
    pub pair12_vs_lueders: f64,
}

pub fn triple_marginals(
    state: &QuantumState,
    bases: [&MeasurementBasis; 3],
) -> Result<TripleMarginalReport> {
    let table = triple_quasiprob(state, bases);

    let born = |basis: &MeasurementBasis, m: Outcome| -> f64 {
        state.rho().sandwich(basis.ket(m), basis.ket(m)).re
    };

    let mut born_residual_m2 = 0.0_f64;
    let mut born_residual_m3 = 0.0_f64;
    for m in Outcome::BOTH {
        born_residual_m2 = born_residual_m2
            .max(libm::fabs(table.marginal_single(2, m)? - born(bases[1], m)));
        born_residual_m3 = born_residual_m3
            .max(libm::fabs(table.marginal_single(3, m)? - born(bases[2], m)));
    }

    let mut pair23_vs_mh = 0.0_f64;
    let mut pair23_vs_lueders = 0.0_f64;
    let mut pair12_vs_mh = 0.0_f64;
    let mut pair12_vs_lueders = 0.0_f64;
    for (ma, mb) in PAIRS {
        let marg23 = table.marginal_pair(2, 3, ma, mb)?;
        let (_, mh23) = mh_quasiprob(state, bases[1], bases[2], ma, mb);
        pair23_vs_mh = pair23_vs_mh.max(libm::fabs(marg23 - mh23));
        pair23_vs_lueders = pair23_vs_lueders
            .max(libm::fabs(marg23 - lueders_joint(state, bases[1], bases[2], ma, mb)));

        let marg12 = table.marginal_pair(1, 2, ma, mb)?;
        let (_, mh12) = mh_quasiprob(state, bases[0], bases[1], ma, mb);
        pair12_vs_mh = pair12_vs_mh.max(libm::fabs(marg12 - mh12));
        pair12_vs_lueders = pair12_vs_lueders
            .max(libm::fabs(marg12 - lueders_joint(state, bases[0], bases[1], ma, mb)));
    }

    Ok(TripleMarginalReport {
        born_residual_m2,
        born_residual_m3,
        pair23_vs_mh,
        pair23_vs_lueders,
        pair12_vs_mh,
        pair12_vs_lueders,
    })
}
