//! Deterministic search for quasiprobability negativity and inequality
//! violations over the precession scenario family.
//!
//! The landscape is smooth, cheap, and at most seven-dimensional, so the
//! machinery is intentionally plain: an exhaustive grid scan with a fixed
//! evaluation order followed by a compass pattern search, plus a seeded
//! random survey that tests the implication structure between the
//! inequality families on large ensembles.

use alloc::string::String;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::Error;
use crate::inequality::ScenarioMoments;
use crate::quasiprob::scenario_two_time_table;
use crate::scenario::LgScenario;
use crate::{tol, Result};

/// One scenario parameter: pinned to a value or free within bounds.
#[derive(Debug, Clone, Copy)]
pub enum Dim {
    Fixed(f64),
    Free { lo: f64, hi: f64 },
}

impl Dim {
    fn validate(&self) -> Result<()> {
        if let Dim::Free { lo, hi } = self {
            if !(lo < hi) {
                return Err(Error::InvalidBounds { lo: *lo, hi: *hi });
            }
        }
        Ok(())
    }
}

/// Canonical names of the eight scenario parameters, in storage order.
pub const PARAM_NAMES: [&str; 8] = [
    "state_theta",
    "state_phi",
    "purity",
    "axis_theta",
    "axis_phi",
    "theta12",
    "theta23",
    "lambda",
];

/// Parameter box over the precession scenario family.
///
/// The base observable is sigma_z; the state is the Bloch vector at
/// (state_theta, state_phi) scaled by `purity`; the Hamiltonian axis is the
/// unit vector at (axis_theta, axis_phi); `theta12` and `theta23` are the
/// dimensionless evolution angles. With `equal_spacing` set, theta23 mirrors
/// theta12 and drops out of the free coordinates.
#[derive(Debug, Clone)]
pub struct SearchSpace {
    pub state_theta: Dim,
    pub state_phi: Dim,
    pub purity: Dim,
    pub axis_theta: Dim,
    pub axis_phi: Dim,
    pub theta12: Dim,
    pub theta23: Dim,
    pub lambda: Dim,
    pub equal_spacing: bool,
}

const TWO_PI: f64 = 2.0 * core::f64::consts::PI;

impl SearchSpace {
    /// Everything free except sharpness: the survey default.
    pub fn full() -> Self {
        Self {
            state_theta: Dim::Free {
                lo: 0.0,
                hi: core::f64::consts::PI,
            },
            state_phi: Dim::Free { lo: 0.0, hi: TWO_PI },
            purity: Dim::Free { lo: 0.0, hi: 1.0 },
            axis_theta: Dim::Free {
                lo: 0.0,
                hi: core::f64::consts::PI,
            },
            axis_phi: Dim::Free { lo: 0.0, hi: TWO_PI },
            theta12: Dim::Free { lo: 0.0, hi: TWO_PI },
            theta23: Dim::Free { lo: 0.0, hi: TWO_PI },
            lambda: Dim::Fixed(1.0),
            equal_spacing: false,
        }
    }

    /// Equal-spacing slice at the maximally mixed state with a y-axis
    /// Hamiltonian: one free evolution angle.
    pub fn equal_spacing_mixed() -> Self {
        Self {
            state_theta: Dim::Fixed(0.0),
            state_phi: Dim::Fixed(0.0),
            purity: Dim::Fixed(0.0),
            axis_theta: Dim::Fixed(core::f64::consts::FRAC_PI_2),
            axis_phi: Dim::Fixed(core::f64::consts::FRAC_PI_2),
            theta12: Dim::Free { lo: 0.0, hi: TWO_PI },
            theta23: Dim::Fixed(0.0),
            lambda: Dim::Fixed(1.0),
            equal_spacing: true,
        }
    }

    /// Pure state free on the sphere, one free evolution angle, y-axis
    /// Hamiltonian: the two-time negativity slice.
    pub fn two_time_pure() -> Self {
        Self {
            state_theta: Dim::Free {
                lo: 0.0,
                hi: core::f64::consts::PI,
            },
            state_phi: Dim::Free { lo: 0.0, hi: TWO_PI },
            purity: Dim::Fixed(1.0),
            axis_theta: Dim::Fixed(core::f64::consts::FRAC_PI_2),
            axis_phi: Dim::Fixed(core::f64::consts::FRAC_PI_2),
            theta12: Dim::Free { lo: 0.0, hi: TWO_PI },
            theta23: Dim::Fixed(0.0),
            lambda: Dim::Fixed(1.0),
            equal_spacing: false,
        }
    }

    fn dims(&self) -> [Dim; 8] {
        [
            self.state_theta,
            self.state_phi,
            self.purity,
            self.axis_theta,
            self.axis_phi,
            self.theta12,
            self.theta23,
            self.lambda,
        ]
    }

    /// Indices (into the canonical order) of the free coordinates.
    fn free_indices(&self) -> Vec<usize> {
        self.dims()
            .iter()
            .enumerate()
            .filter(|(k, d)| {
                if self.equal_spacing && *k == 6 {
                    return false;
                }
                matches!(d, Dim::Free { .. })
            })
            .map(|(k, _)| k)
            .collect()
    }

    /// Bounds of the free coordinates, validated.
    pub fn free_bounds(&self) -> Result<Vec<(f64, f64)>> {
        for d in self.dims() {
            d.validate()?;
        }
        let dims = self.dims();
        let bounds: Vec<(f64, f64)> = self
            .free_indices()
            .into_iter()
            .map(|k| match dims[k] {
                Dim::Free { lo, hi } => (lo, hi),
                Dim::Fixed(_) => unreachable!("free index"),
            })
            .collect();
        if bounds.is_empty() {
            return Err(Error::EmptySearchSpace);
        }
        Ok(bounds)
    }

    /// Expands a free-coordinate point into the full parameter vector.
    pub fn resolve(&self, point: &[f64]) -> Result<[f64; 8]> {
        let free = self.free_indices();
        if free.len() != point.len() {
            return Err(Error::BadStartPoint {
                expected: free.len(),
                got: point.len(),
            });
        }
        let dims = self.dims();
        let mut params = [0.0; 8];
        for (k, d) in dims.iter().enumerate() {
            params[k] = match d {
                Dim::Fixed(v) => *v,
                Dim::Free { lo, .. } => *lo,
            };
        }
        for (slot, value) in free.iter().zip(point) {
            params[*slot] = *value;
        }
        if self.equal_spacing {
            params[6] = params[5];
        }
        Ok(params)
    }

    /// Builds the scenario at a free-coordinate point.
    pub fn scenario_at(&self, point: &[f64]) -> Result<LgScenario> {
        scenario_from_params(&self.resolve(point)?)
    }
}

/// Scenario from the full eight-parameter vector.
pub fn scenario_from_params(params: &[f64; 8]) -> Result<LgScenario> {
    LgScenario::precession(
        params[0], params[1], params[2], params[3], params[4], params[5], params[6], params[7],
    )
}

// ---------------------------------------------------------------------------
// Objectives
// ---------------------------------------------------------------------------

/// Quantity minimized over the space; negative values witness
/// nonclassicality.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Objective {
    /// Most negative two-basis quasiprobability over the three pairs.
    MinTwoTimeQ,
    /// Most negative two-time inequality value (4x the above).
    MinG2,
    /// Most negative three-time pairwise inequality value.
    MinK3,
    /// Most negative three-time full-moment inequality value.
    MinG3,
}

impl Objective {
    pub fn name(self) -> &'static str {
        match self {
            Objective::MinTwoTimeQ => "min_q2",
            Objective::MinG2 => "min_g2",
            Objective::MinK3 => "min_k3",
            Objective::MinG3 => "min_g3",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "min_q2" => Some(Objective::MinTwoTimeQ),
            "min_g2" => Some(Objective::MinG2),
            "min_k3" => Some(Objective::MinK3),
            "min_g3" => Some(Objective::MinG3),
            _ => None,
        }
    }

    pub fn evaluate(self, scenario: &LgScenario) -> Result<f64> {
        match self {
            Objective::MinTwoTimeQ => min_two_time_q(scenario),
            Objective::MinG2 => Ok(4.0 * min_two_time_q(scenario)?),
            Objective::MinK3 => Ok(ScenarioMoments::compute(scenario)?.min_k3()),
            Objective::MinG3 => Ok(ScenarioMoments::compute(scenario)?.min_g3()),
        }
    }
}

fn min_two_time_q(scenario: &LgScenario) -> Result<f64> {
    let mut best = f64::INFINITY;
    for (i, j) in crate::inequality::PAIR_INDICES {
        best = best.min(scenario_two_time_table(scenario, i, j)?.min_q());
    }
    Ok(best)
}

// ---------------------------------------------------------------------------
// Results
// ---------------------------------------------------------------------------

/// An improving step: evaluation index and the new best value.
#[derive(Debug, Clone, Copy)]
pub struct TraceStep {
    pub evaluation: u64,
    pub value: f64,
}

/// Outcome of a grid scan or refinement.
#[derive(Debug, Clone)]
pub struct SearchResult {
    pub objective: String,
    pub best_value: f64,
    /// Free coordinates of the best point.
    pub best_point: Vec<f64>,
    /// Full resolved parameter vector at the best point.
    pub best_params: [f64; 8],
    pub evaluations: u64,
    pub trace: Vec<TraceStep>,
    pub converged: bool,
}

// ---------------------------------------------------------------------------
// Grid scan
// ---------------------------------------------------------------------------

/// Exhaustive scan at `resolution` points per free dimension, endpoints
/// included, lexicographic order, strict-improvement updates. Deterministic
/// by construction.
pub fn grid_sweep(
    space: &SearchSpace,
    objective: Objective,
    resolution: usize,
) -> Result<SearchResult> {
    if resolution < 2 {
        return Err(Error::InvalidResolution { resolution });
    }
    let bounds = space.free_bounds()?;
    let dims = bounds.len();
    let mut indices = alloc::vec![0usize; dims];
    let mut point = alloc::vec![0.0f64; dims];
    let mut best_value = f64::INFINITY;
    let mut best_point = point.clone();
    let mut evaluations = 0u64;
    let mut trace = Vec::new();
    loop {
        for (d, idx) in indices.iter().enumerate() {
            let (lo, hi) = bounds[d];
            point[d] = lo + (hi - lo) * (*idx as f64) / (resolution - 1) as f64;
        }
        let value = objective.evaluate(&space.scenario_at(&point)?)?;
        evaluations += 1;
        if value < best_value {
            best_value = value;
            best_point.copy_from_slice(&point);
            trace.push(TraceStep {
                evaluation: evaluations,
                value,
            });
        }
        // Odometer increment.
        let mut carry = dims;
        for d in (0..dims).rev() {
            indices[d] += 1;
            if indices[d] < resolution {
                carry = d;
                break;
            }
            indices[d] = 0;
        }
        if carry == dims {
            break;
        }
    }
    finish_result(space, objective, best_point, best_value, evaluations, trace, true)
}

// ---------------------------------------------------------------------------
// Pattern search
// ---------------------------------------------------------------------------

/// Generic compass search over a bounded box: probe +/- step on each
/// coordinate, move to the best improvement, halve the step on failure,
/// stop when the step drops below `tol_step` or the budget runs out.
pub struct PatternSearchOutcome {
    pub best_point: Vec<f64>,
    pub best_value: f64,
    pub evaluations: u64,
    pub trace: Vec<TraceStep>,
    pub converged: bool,
}

pub fn pattern_search<F: FnMut(&[f64]) -> f64>(
    bounds: &[(f64, f64)],
    mut f: F,
    start: &[f64],
    mut step: f64,
    tol_step: f64,
    budget: u64,
) -> PatternSearchOutcome {
    let mut best_point = start.to_vec();
    let mut best_value = f(&best_point);
    let mut evaluations = 1u64;
    let mut trace = alloc::vec![TraceStep {
        evaluation: 1,
        value: best_value,
    }];
    let mut converged = false;
    while evaluations < budget {
        if step < tol_step {
            converged = true;
            break;
        }
        let mut improved = false;
        let mut candidate_point = best_point.clone();
        let mut candidate_value = best_value;
        for d in 0..bounds.len() {
            for sign in [1.0, -1.0] {
                if evaluations >= budget {
                    break;
                }
                let mut probe = best_point.clone();
                probe[d] = (probe[d] + sign * step).clamp(bounds[d].0, bounds[d].1);
                if probe[d] == best_point[d] {
                    continue;
                }
                let value = f(&probe);
                evaluations += 1;
                if value < candidate_value {
                    candidate_value = value;
                    candidate_point = probe;
                    improved = true;
                }
            }
        }
        if improved {
            best_point = candidate_point;
            best_value = candidate_value;
            trace.push(TraceStep {
                evaluation: evaluations,
                value: best_value,
            });
        } else {
            step /= 2.0;
        }
    }
    if step < tol_step {
        converged = true;
    }
    PatternSearchOutcome {
        best_point,
        best_value,
        evaluations,
        trace,
        converged,
    }
}

/// Default refinement budget.
pub const DEFAULT_BUDGET: u64 = 100_000;

/// Pattern-search refinement of an objective from a starting point
/// (typically a grid optimum). Never returns a value worse than the start.
pub fn refine(
    space: &SearchSpace,
    objective: Objective,
    start: &[f64],
    step: f64,
    tol_step: f64,
    budget: u64,
) -> Result<SearchResult> {
    let bounds = space.free_bounds()?;
    if start.len() != bounds.len() {
        return Err(Error::BadStartPoint {
            expected: bounds.len(),
            got: start.len(),
        });
    }
    let outcome = pattern_search(
        &bounds,
        |p| {
            objective
                .evaluate(&space.scenario_at(p).expect("point within bounds"))
                .expect("objective defined on the space")
        },
        start,
        step,
        tol_step,
        budget,
    );
    finish_result(
        space,
        objective,
        outcome.best_point,
        outcome.best_value,
        outcome.evaluations,
        outcome.trace,
        outcome.converged,
    )
}

fn finish_result(
    space: &SearchSpace,
    objective: Objective,
    best_point: Vec<f64>,
    best_value: f64,
    evaluations: u64,
    trace: Vec<TraceStep>,
    converged: bool,
) -> Result<SearchResult> {
    // Fresh evaluation at the reported optimum must reproduce it.
    let revalidated = objective.evaluate(&space.scenario_at(&best_point)?)?;
    assert!(
        libm::fabs(revalidated - best_value) <= tol::IDENTITY,
        "best value failed revalidation"
    );
    let best_params = space.resolve(&best_point)?;
    Ok(SearchResult {
        objective: String::from(objective.name()),
        best_value,
        best_point,
        best_params,
        evaluations,
        trace,
        converged,
    })
}

// ---------------------------------------------------------------------------
// Implication survey
// ---------------------------------------------------------------------------

/// A persisted scenario with its inequality summary.
#[derive(Debug, Clone, Copy)]
pub struct ScenarioRecord {
    pub params: [f64; 8],
    pub min_g2: f64,
    pub min_k3: f64,
    pub min_g3: f64,
    pub both_negative_sum: f64,
}

/// Ensemble statistics over seeded random scenarios.
#[derive(Debug, Clone)]
pub struct SurveyReport {
    pub samples: u64,
    pub seed: u64,
    /// Scenarios where some paired quasiprobabilities are both negative yet
    /// no pairwise three-time inequality is violated. The pairing sums to a
    /// quarter of such an inequality, so this should stay empty.
    pub paired_negativity_counterexamples: u64,
    pub first_counterexample: Option<ScenarioRecord>,
    /// Scenarios violating the full-moment inequality while every two-time
    /// and pairwise three-time inequality holds.
    pub g3_only_witnesses: u64,
    pub first_g3_witness: Option<ScenarioRecord>,
    /// Same count for the unit-coefficient variant, recorded for contrast.
    pub g3_unit_only_witnesses: u64,
}

/// Samples the space with a seeded ChaCha stream: polar angles uniform in
/// the cosine, azimuths and evolution angles uniform, and tabulates the
/// implication structure between the inequality families.
pub fn implication_survey(space: &SearchSpace, samples: u64, seed: u64) -> Result<SurveyReport> {
    if samples == 0 {
        return Err(Error::InvalidSampleCount);
    }
    for d in space.dims() {
        d.validate()?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SurveyReport {
        samples,
        seed,
        paired_negativity_counterexamples: 0,
        first_counterexample: None,
        g3_only_witnesses: 0,
        first_g3_witness: None,
        g3_unit_only_witnesses: 0,
    };
    for _ in 0..samples {
        let params = sample_params(space, &mut rng);
        let scenario = scenario_from_params(&params)?;
        let moments = ScenarioMoments::compute(&scenario)?;
        let table = crate::quasiprob::scenario_triple_table(&scenario)?;
        let min_k3 = moments.min_k3();
        let min_g3 = moments.min_g3();
        let min_g2 = 4.0 * min_two_time_q(&scenario)?;
        let min_g3_unit = crate::inequality::all_patterns()
            .into_iter()
            .map(|p| moments.g3_unit_moment(p))
            .fold(f64::INFINITY, f64::min);

        // Paired-negativity check over all sign patterns.
        let mut both_negative_sum: Option<f64> = None;
        for (m1, m2, m3) in crate::inequality::all_patterns() {
            let first = table.q(&[m1, m2.flipped(), m3]);
            let second = table.q(&[m1.flipped(), m2, m3.flipped()]);
            if first < 0.0 && second < 0.0 {
                both_negative_sum = Some(first + second);
                break;
            }
        }
        let record = |sum: f64| ScenarioRecord {
            params,
            min_g2,
            min_k3,
            min_g3,
            both_negative_sum: sum,
        };
        if let Some(sum) = both_negative_sum {
            if min_k3 >= 0.0 {
                report.paired_negativity_counterexamples += 1;
                report.first_counterexample.get_or_insert(record(sum));
            }
        }
        if min_g3 < 0.0 && min_g2 >= 0.0 && min_k3 >= 0.0 {
            report.g3_only_witnesses += 1;
            report.first_g3_witness.get_or_insert(record(f64::NAN));
        }
        if min_g3_unit < 0.0 && min_g2 >= 0.0 && min_k3 >= 0.0 {
            report.g3_unit_only_witnesses += 1;
        }
    }
    Ok(report)
}

fn sample_params(space: &SearchSpace, rng: &mut ChaCha8Rng) -> [f64; 8] {
    let dims = space.dims();
    let mut params = [0.0; 8];
    for (k, d) in dims.iter().enumerate() {
        params[k] = match d {
            Dim::Fixed(v) => *v,
            Dim::Free { lo, hi } => {
                let u = uniform(rng);
                // Polar angles are drawn uniformly in the cosine for
                // area-uniform directions.
                if k == 0 || k == 3 {
                    let (clo, chi) = (libm::cos(*hi), libm::cos(*lo));
                    libm::acos(clo + (chi - clo) * u)
                } else {
                    lo + (hi - lo) * u
                }
            }
        };
    }
    if space.equal_spacing {
        params[6] = params[5];
    }
    params
}

/// Uniform f64 in [0, 1) from the top 53 bits of the stream.
fn uniform(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use core::f64::consts::PI;

    #[test]
    fn grid_needs_a_free_dimension_and_sane_resolution() {
        let mut space = SearchSpace::equal_spacing_mixed();
        assert!(matches!(
            grid_sweep(&space, Objective::MinK3, 1),
            Err(Error::InvalidResolution { .. })
        ));
        space.theta12 = Dim::Fixed(0.0);
        assert!(matches!(
            grid_sweep(&space, Objective::MinK3, 8),
            Err(Error::EmptySearchSpace)
        ));
        space.theta12 = Dim::Free { lo: 1.0, hi: 1.0 };
        assert!(matches!(
            grid_sweep(&space, Objective::MinK3, 8),
            Err(Error::InvalidBounds { .. })
        ));
    }

    #[test]
    fn flat_landscape_returns_the_first_grid_point() {
        // Zero purity and zero evolution: K3 is constant; the first point
        // (theta12 = 0) must win under strict-improvement updates.
        let mut space = SearchSpace::equal_spacing_mixed();
        space.theta12 = Dim::Free { lo: 0.0, hi: 0.0 + 1e-9 };
        let result = grid_sweep(&space, Objective::MinK3, 4).unwrap();
        assert_abs_diff_eq!(result.best_point[0], 0.0, epsilon = 1e-15);
    }

    #[test]
    fn grid_finds_the_k3_violation_near_one_third_turn() {
        let space = SearchSpace::equal_spacing_mixed();
        let result = grid_sweep(&space, Objective::MinK3, 720).unwrap();
        assert!((result.best_value - (-0.5)).abs() < 1e-4);
        assert!((result.best_point[0] - PI / 3.0).abs() < 0.02);
        assert_eq!(result.evaluations, 720);
        // Trace is monotone and ends at the best value.
        assert!(result
            .trace
            .windows(2)
            .all(|w| w[1].value < w[0].value));
        assert_abs_diff_eq!(
            result.trace.last().unwrap().value,
            result.best_value,
            epsilon = 0.0
        );
    }

    #[test]
    fn refine_polishes_the_k3_minimum() {
        let space = SearchSpace::equal_spacing_mixed();
        let coarse = grid_sweep(&space, Objective::MinK3, 64).unwrap();
        let fine = refine(
            &space,
            Objective::MinK3,
            &coarse.best_point,
            0.1,
            tol::SEARCH_STEP,
            DEFAULT_BUDGET,
        )
        .unwrap();
        assert!(fine.converged);
        assert!(fine.best_value <= coarse.best_value + 1e-15);
        assert_abs_diff_eq!(fine.best_value, -0.5, epsilon = 1e-8);
        assert_abs_diff_eq!(fine.best_params[5], PI / 3.0, epsilon = 1e-6);
    }

    #[test]
    fn pattern_search_converges_on_a_convex_bowl() {
        let bounds = [(-1.0, 1.0), (-1.0, 1.0)];
        let outcome = pattern_search(
            &bounds,
            |p| (p[0] - 0.3) * (p[0] - 0.3) + 2.0 * (p[1] + 0.4) * (p[1] + 0.4),
            &[0.0, 0.0],
            0.5,
            1e-9,
            DEFAULT_BUDGET,
        );
        assert!(outcome.converged);
        assert!(outcome.best_value <= 1e-8);
        assert_abs_diff_eq!(outcome.best_point[0], 0.3, epsilon = 1e-6);
        assert_abs_diff_eq!(outcome.best_point[1], -0.4, epsilon = 1e-6);
    }

    #[test]
    fn pattern_search_respects_the_budget() {
        let bounds = [(-1.0, 1.0)];
        let outcome = pattern_search(&bounds, |p| p[0], &[1.0], 0.25, 1e-12, 5);
        assert!(!outcome.converged);
        assert!(outcome.evaluations <= 5);
    }

    #[test]
    fn two_time_negativity_reaches_minus_one_eighth() {
        let space = SearchSpace::two_time_pure();
        let coarse = grid_sweep(&space, Objective::MinTwoTimeQ, 31).unwrap();
        let fine = refine(
            &space,
            Objective::MinTwoTimeQ,
            &coarse.best_point,
            0.1,
            tol::SEARCH_STEP,
            DEFAULT_BUDGET,
        )
        .unwrap();
        assert_abs_diff_eq!(fine.best_value, -0.125, epsilon = 1e-6);

        // Independent analytic oracle: the planar product
        // cos(x) cos(y) cos(x + y) bottoms out at -1/8.
        let mut oracle = f64::INFINITY;
        for a in 0..720 {
            for b in 0..720 {
                let x = a as f64 * PI / 720.0;
                let y = b as f64 * PI / 720.0;
                oracle = oracle.min(libm::cos(x) * libm::cos(y) * libm::cos(x + y));
            }
        }
        assert_abs_diff_eq!(oracle, -0.125, epsilon = 1e-4);
    }

    #[test]
    fn survey_is_deterministic_and_counts_structure() {
        let space = SearchSpace::full();
        let a = implication_survey(&space, 300, 11).unwrap();
        let b = implication_survey(&space, 300, 11).unwrap();
        assert_eq!(
            a.paired_negativity_counterexamples,
            b.paired_negativity_counterexamples
        );
        assert_eq!(a.g3_only_witnesses, b.g3_only_witnesses);
        assert_eq!(a.paired_negativity_counterexamples, 0);
        if let Some(w) = &a.first_g3_witness {
            // Witness parameters reproduce the violation.
            let sc = scenario_from_params(&w.params).unwrap();
            let moments = ScenarioMoments::compute(&sc).unwrap();
            assert!(moments.min_g3() < 0.0);
            assert!(moments.min_k3() >= 0.0);
        }
    }

    #[test]
    fn survey_rejects_zero_samples() {
        assert!(matches!(
            implication_survey(&SearchSpace::full(), 0, 1),
            Err(Error::InvalidSampleCount)
        ));
    }

    #[test]
    fn resolve_mirrors_equal_spacing() {
        let space = SearchSpace::equal_spacing_mixed();
        let params = space.resolve(&[1.23]).unwrap();
        assert_abs_diff_eq!(params[5], 1.23, epsilon = 0.0);
        assert_abs_diff_eq!(params[6], 1.23, epsilon = 0.0);
        assert!(space.resolve(&[1.0, 2.0]).is_err());
    }
}
