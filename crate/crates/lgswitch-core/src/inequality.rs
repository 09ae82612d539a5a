//! Temporal inequality families built from the scenario moments.
//!
//! All pair moments are the sharp symmetrized correlations; the triple
//! moment is defined through the three-basis quasiprobability table. A
//! macrorealistic model keeps every quantity here nonnegative.

use crate::observable::Outcome;
use crate::quasiprob::{quasiprob_moment_form, scenario_triple_table};
use crate::scenario::LgScenario;
use crate::sequential::sharp_correlation;
use crate::Result;

/// Sign patterns (m1, m2, m3) giving the four distinct three-time
/// inequality values (a global flip leaves the pair products unchanged).
pub const K3_PATTERNS: [(Outcome, Outcome, Outcome); 4] = [
    (Outcome::Plus, Outcome::Plus, Outcome::Plus),
    (Outcome::Plus, Outcome::Plus, Outcome::Minus),
    (Outcome::Plus, Outcome::Minus, Outcome::Plus),
    (Outcome::Plus, Outcome::Minus, Outcome::Minus),
];

/// The ordered measurement pairs of a three-time scenario.
pub const PAIR_INDICES: [(usize, usize); 3] = [(1, 2), (2, 3), (1, 3)];

/// Single, pair, and triple moments of a scenario, computed once so sign
/// patterns can be enumerated cheaply.
#[derive(Debug, Clone, Copy)]
pub struct ScenarioMoments {
    /// <M_1>, <M_2>, <M_3>.
    pub singles: [f64; 3],
    /// <M_i M_j> for pairs (1,2), (2,3), (1,3).
    pub pairs: [f64; 3],
    /// <M_1 M_2 M_3> from the three-basis quasiprobability.
    pub triple: f64,
}

impl ScenarioMoments {
    pub fn compute(scenario: &LgScenario) -> Result<Self> {
        let state = scenario.state();
        let singles = [
            state.expect_real(scenario.observable(1)?.matrix()),
            state.expect_real(scenario.observable(2)?.matrix()),
            state.expect_real(scenario.observable(3)?.matrix()),
        ];
        let pairs = [
            sharp_correlation(scenario, 1, 2)?,
            sharp_correlation(scenario, 2, 3)?,
            sharp_correlation(scenario, 1, 3)?,
        ];
        let triple = scenario_triple_table(scenario)?.odd_moment();
        Ok(Self {
            singles,
            pairs,
            triple,
        })
    }

    fn signed_pairs(&self, m: (Outcome, Outcome, Outcome)) -> f64 {
        let (s1, s2, s3) = (m.0.sign(), m.1.sign(), m.2.sign());
        s1 * s2 * self.pairs[0] + s2 * s3 * self.pairs[1] + s1 * s3 * self.pairs[2]
    }

    fn signed_singles(&self, m: (Outcome, Outcome, Outcome)) -> f64 {
        m.0.sign() * self.singles[0] + m.1.sign() * self.singles[1] + m.2.sign() * self.singles[2]
    }

    /// K3 = 1 + m1 m2 <M1 M2> + m2 m3 <M2 M3> + m1 m3 <M1 M3>.
    pub fn k3(&self, m: (Outcome, Outcome, Outcome)) -> f64 {
        1.0 + self.signed_pairs(m)
    }

    /// G3 = (1 + 3 sum m_i <M_i> + sum m_i m_j <M_i M_j> + m1 m2 m3 T)/8,
    /// with the single moments carrying the printed coefficient three.
    pub fn g3(&self, m: (Outcome, Outcome, Outcome)) -> f64 {
        let odd = m.0.sign() * m.1.sign() * m.2.sign();
        0.125 * (1.0 + 3.0 * self.signed_singles(m) + self.signed_pairs(m) + odd * self.triple)
    }

    /// G3 variant with unit coefficient on the single moments. This is the
    /// parity expansion of the three-basis table, so it reproduces
    /// q(m1, m2, m3) exactly.
    pub fn g3_unit_moment(&self, m: (Outcome, Outcome, Outcome)) -> f64 {
        let odd = m.0.sign() * m.1.sign() * m.2.sign();
        0.125 * (1.0 + self.signed_singles(m) + self.signed_pairs(m) + odd * self.triple)
    }

    pub fn min_k3(&self) -> f64 {
        K3_PATTERNS
            .into_iter()
            .map(|p| self.k3(p))
            .fold(f64::INFINITY, f64::min)
    }

    pub fn min_g3(&self) -> f64 {
        all_patterns()
            .into_iter()
            .map(|p| self.g3(p))
            .fold(f64::INFINITY, f64::min)
    }
}

/// All eight (m1, m2, m3) sign patterns.
pub fn all_patterns() -> [(Outcome, Outcome, Outcome); 8] {
    crate::quasiprob::TRIPLES
}

/// Two-time inequality G2 = 1 + m_i <M_i> + m_j <M_j> + m_i m_j <M_i M_j>;
/// equals four times the Margenau-Hill quasiprobability.
pub fn g2(scenario: &LgScenario, i: usize, j: usize, m_i: Outcome, m_j: Outcome) -> Result<f64> {
    Ok(4.0 * quasiprob_moment_form(scenario, i, j, m_i, m_j)?)
}

/// Three-time inequality from pairwise correlations only.
pub fn k3(
    scenario: &LgScenario,
    m1: Outcome,
    m2: Outcome,
    m3: Outcome,
) -> Result<f64> {
    Ok(ScenarioMoments::compute(scenario)?.k3((m1, m2, m3)))
}

/// Three-time inequality with single and triple moments (printed
/// coefficient three on the singles).
pub fn g3(
    scenario: &LgScenario,
    m1: Outcome,
    m2: Outcome,
    m3: Outcome,
) -> Result<f64> {
    Ok(ScenarioMoments::compute(scenario)?.g3((m1, m2, m3)))
}

/// Unit-coefficient variant of `g3`, kept alongside for comparison.
pub fn g3_unit_moment(
    scenario: &LgScenario,
    m1: Outcome,
    m2: Outcome,
    m3: Outcome,
) -> Result<f64> {
    Ok(ScenarioMoments::compute(scenario)?.g3_unit_moment((m1, m2, m3)))
}

/// The paired three-basis quasiprobabilities q(m_i, -m_j, m_k) and
/// q(-m_i, m_j, -m_k), whose sum is a three-time inequality: both entries
/// negative certifies a K3 violation, a single negative entry does not.
#[derive(Debug, Clone, Copy)]
pub struct ComboInequality {
    pub q_first: f64,
    pub q_second: f64,
    pub sum: f64,
    pub both_negative: bool,
}

pub fn combo_inequality(
    scenario: &LgScenario,
    m_i: Outcome,
    m_j: Outcome,
    m_k: Outcome,
) -> Result<ComboInequality> {
    let table = scenario_triple_table(scenario)?;
    let q_first = table.q(&[m_i, m_j.flipped(), m_k]);
    let q_second = table.q(&[m_i.flipped(), m_j, m_k.flipped()]);
    Ok(ComboInequality {
        q_first,
        q_second,
        sum: q_first + q_second,
        both_negative: q_first < 0.0 && q_second < 0.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::sigma_y;
    use crate::observable::DichotomicObservable;
    use crate::quasiprob::{scenario_two_time_table, PAIRS};
    use crate::state::QuantumState;
    use crate::tol;
    use approx::assert_abs_diff_eq;
    use core::f64::consts::PI;

    fn mixed_precession(theta: f64) -> LgScenario {
        LgScenario::precession(0.0, 0.0, 0.0, PI / 2.0, PI / 2.0, theta, theta, 1.0).unwrap()
    }

    #[test]
    fn g2_is_four_times_the_quasiprobability() {
        let sc = LgScenario::precession(1.2, 0.4, 0.85, PI / 2.0, PI / 2.0, 0.7, 1.9, 1.0).unwrap();
        for (i, j) in PAIR_INDICES {
            let table = scenario_two_time_table(&sc, i, j).unwrap();
            for (mi, mj) in PAIRS {
                assert_abs_diff_eq!(
                    g2(&sc, i, j, mi, mj).unwrap(),
                    4.0 * table.q(&[mi, mj]),
                    epsilon = tol::IDENTITY
                );
            }
        }
    }

    #[test]
    fn g2_for_mixed_state_and_orthogonal_observables_is_one() {
        let sc = LgScenario::precession(0.0, 0.0, 0.0, PI / 2.0, PI / 2.0, PI / 2.0, 0.0, 1.0)
            .unwrap();
        for (mi, mj) in PAIRS {
            assert_abs_diff_eq!(g2(&sc, 1, 2, mi, mj).unwrap(), 1.0, epsilon = tol::IDENTITY);
        }
    }

    #[test]
    fn g2_reaches_minus_half_on_the_negativity_witness() {
        // M1 tilted 120 degrees off z toward +x, M2 at -120 degrees, |0>.
        let sc = LgScenario::new(
            QuantumState::from_bloch([0.0, 0.0, 1.0]).unwrap(),
            sigma_y().scale_re(0.5),
            [0.0, 4.0 * PI / 3.0, 4.0 * PI / 3.0],
            DichotomicObservable::from_angles(2.0 * PI / 3.0, 0.0),
            1.0,
        )
        .unwrap();
        assert_abs_diff_eq!(
            g2(&sc, 1, 2, Outcome::Plus, Outcome::Plus).unwrap(),
            -0.5,
            epsilon = tol::IDENTITY
        );
    }

    #[test]
    fn static_system_has_k3_in_zero_and_four() {
        let sc = mixed_precession(0.0);
        let mut values = [0.0; 4];
        for (idx, p) in K3_PATTERNS.into_iter().enumerate() {
            values[idx] = k3(&sc, p.0, p.1, p.2).unwrap();
        }
        assert_abs_diff_eq!(values[0], 4.0, epsilon = tol::IDENTITY);
        for v in &values[1..] {
            assert_abs_diff_eq!(*v, 0.0, epsilon = tol::IDENTITY);
        }
    }

    #[test]
    fn k3_violation_at_one_third_turn() {
        let sc = mixed_precession(PI / 3.0);
        assert_abs_diff_eq!(
            k3(&sc, Outcome::Plus, Outcome::Minus, Outcome::Plus).unwrap(),
            -0.5,
            epsilon = tol::IDENTITY
        );
    }

    #[test]
    fn k3_matches_the_scan_oracle_at_equal_spacing() {
        // For rho = I/2 and equal spacing, the (+,-,+) pattern reads
        // 1 - 2 cos(theta) + cos(2 theta).
        for step in 0..24 {
            let theta = step as f64 * PI / 12.0;
            let sc = mixed_precession(theta);
            let expected = 1.0 - 2.0 * libm::cos(theta) + libm::cos(2.0 * theta);
            assert_abs_diff_eq!(
                k3(&sc, Outcome::Plus, Outcome::Minus, Outcome::Plus).unwrap(),
                expected,
                epsilon = tol::IDENTITY
            );
        }
    }

    #[test]
    fn k3_patterns_sum_to_four() {
        let sc = LgScenario::precession(0.7, 2.2, 0.6, PI / 2.0, PI / 2.0, 1.3, 0.4, 1.0).unwrap();
        let total: f64 = K3_PATTERNS
            .into_iter()
            .map(|p| k3(&sc, p.0, p.1, p.2).unwrap())
            .sum();
        assert_abs_diff_eq!(total, 4.0, epsilon = tol::IDENTITY);
    }

    #[test]
    fn g3_for_identical_observables_on_mixed_state() {
        let sc = mixed_precession(0.0);
        // Moments: singles 0, pairs 1, triple 0.
        assert_abs_diff_eq!(
            g3(&sc, Outcome::Plus, Outcome::Plus, Outcome::Plus).unwrap(),
            0.5,
            epsilon = tol::IDENTITY
        );
        assert_abs_diff_eq!(
            g3(&sc, Outcome::Plus, Outcome::Plus, Outcome::Minus).unwrap(),
            0.0,
            epsilon = tol::IDENTITY
        );
    }

    #[test]
    fn g3_patterns_sum_to_one() {
        let sc = LgScenario::precession(0.4, 5.1, 0.9, PI / 2.0, PI / 2.0, 0.8, 2.1, 1.0).unwrap();
        let total: f64 = all_patterns()
            .into_iter()
            .map(|p| g3(&sc, p.0, p.1, p.2).unwrap())
            .sum();
        assert_abs_diff_eq!(total, 1.0, epsilon = tol::IDENTITY);
    }

    #[test]
    fn unit_moment_g3_reproduces_the_triple_table() {
        // The parity expansion with unit coefficients is the table itself.
        let sc = LgScenario::precession(1.0, 0.9, 0.8, PI / 2.0, PI / 2.0, 1.5, 0.9, 1.0).unwrap();
        let table = scenario_triple_table(&sc).unwrap();
        for p in all_patterns() {
            assert_abs_diff_eq!(
                g3_unit_moment(&sc, p.0, p.1, p.2).unwrap(),
                table.q(&[p.0, p.1, p.2]),
                epsilon = tol::IDENTITY
            );
        }
    }

    #[test]
    fn combo_is_nonnegative_for_identical_bases() {
        let sc = mixed_precession(0.0);
        for p in all_patterns() {
            let combo = combo_inequality(&sc, p.0, p.1, p.2).unwrap();
            assert!(combo.q_first >= -tol::IDENTITY);
            assert!(combo.q_second >= -tol::IDENTITY);
            assert!(combo.sum >= -tol::IDENTITY);
            assert!(!combo.both_negative);
        }
    }

    #[test]
    fn combo_sum_is_a_quarter_of_the_flipped_k3() {
        // q(a,-b,c) + q(-a,b,-c) = K3(a,-b,c)/4: the parity expansion drops
        // every odd term when the two mirrored tuples are added.
        let sc = LgScenario::precession(2.0, 1.3, 0.7, PI / 2.0, PI / 2.0, 1.1, 0.5, 1.0).unwrap();
        for p in all_patterns() {
            let combo = combo_inequality(&sc, p.0, p.1, p.2).unwrap();
            let reference = k3(&sc, p.0, p.1.flipped(), p.2).unwrap();
            assert_abs_diff_eq!(combo.sum, reference / 4.0, epsilon = tol::IDENTITY);
        }
    }

    #[test]
    fn combo_tracks_the_k3_violation_at_one_third_turn() {
        let sc = mixed_precession(PI / 3.0);
        let combo = combo_inequality(&sc, Outcome::Plus, Outcome::Plus, Outcome::Plus).unwrap();
        let reference = k3(&sc, Outcome::Plus, Outcome::Minus, Outcome::Plus).unwrap();
        assert_abs_diff_eq!(combo.sum, reference / 4.0, epsilon = tol::IDENTITY);
        assert_abs_diff_eq!(combo.sum, -0.125, epsilon = tol::IDENTITY);
    }
}
