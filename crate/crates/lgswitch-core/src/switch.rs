//! Mach-Zehnder switch interferometer with path-controlled operation order.
//!
//! A polarizing splitter routes the H/V components of the input polarization
//! onto two arms; the two measurement channels are applied in opposite order
//! on the two arms; a phase shifter and a recombining splitter map the arms
//! onto output ports psi3/psi4, and the polarization is analyzed in the
//! +/- basis. Writing the port kets as operator slots applied to the +/-
//! decomposition of the input, the psi3 port carries the anticommutator of
//! the two channel operators on its + slot and their commutator on the -
//! slot (the psi4 port carries the same pair with an i phase), so reading
//! the + slot against the |+> reference recovers the two-basis
//! quasiprobability including its sign.
//!
//! Two readout layers are exposed and must not be confused:
//!
//! * **detector coefficients** - the raw coordinates of the final state;
//!   their squared magnitudes are what counters register, and they sum to
//!   one across outcome branches;
//! * **slot amplitudes** - the operator-slot matrix elements against the
//!   reference input. These carry the signed quasiprobability. They equal
//!   the detector coefficients exactly when the two channel Bloch vectors
//!   lie in the plane orthogonal to the reference axis (the commutator slot
//!   then decouples); in general a detector alone cannot separate the two
//!   slots and an interferometric phase reference is presumed.

use alloc::vec::Vec;

use crate::error::Error;
use crate::linalg::{CMatrix, CVector, Complex};
use crate::observable::{DichotomicObservable, Outcome};
use crate::sequential::sqrt_effect;
use crate::{tol, Result};

const SQRT_HALF: f64 = core::f64::consts::FRAC_1_SQRT_2;
const IM: Complex = Complex::new(0.0, 1.0);

/// Output port after the recombining splitter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Port {
    Psi3,
    Psi4,
}

impl Port {
    pub const BOTH: [Port; 2] = [Port::Psi3, Port::Psi4];

    pub fn index(self) -> usize {
        match self {
            Port::Psi3 => 0,
            Port::Psi4 => 1,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Port::Psi3 => "psi3",
            Port::Psi4 => "psi4",
        }
    }
}

/// Phase-shifter and splitter convention, carried as explicit data so no
/// phase choice is ever silent.
#[derive(Debug, Clone)]
pub struct SplitterConvention {
    /// Phase factor applied to the H arm before recombination.
    pub ps_phase: Complex,
    /// H-arm row: coefficients of (psi3, psi4).
    pub h_row: [Complex; 2],
    /// V-arm row: coefficients of (psi3, psi4).
    pub v_row: [Complex; 2],
}

impl SplitterConvention {
    /// Quarter-wave shifter (phase -i) with rows H -> (i psi3 + psi4)/sqrt2,
    /// V -> (psi3 + i psi4)/sqrt2. Routes the anticommutator combination
    /// onto the psi3 port slots; this is the convention under which the
    /// printed port decomposition holds verbatim, and the default.
    pub fn quarter_shift() -> Self {
        Self {
            ps_phase: -IM,
            h_row: [IM * SQRT_HALF, Complex::new(SQRT_HALF, 0.0)],
            v_row: [Complex::new(SQRT_HALF, 0.0), IM * SQRT_HALF],
        }
    }

    /// Half-wave shifter (phase -1) with the transposed rows
    /// H -> (psi3 + i psi4)/sqrt2, V -> (i psi3 + psi4)/sqrt2. Lands the
    /// same slot structure on permuted ports with extra phases; kept so the
    /// difference can be measured rather than argued about.
    pub fn half_shift() -> Self {
        Self {
            ps_phase: Complex::new(-1.0, 0.0),
            h_row: [Complex::new(SQRT_HALF, 0.0), IM * SQRT_HALF],
            v_row: [IM * SQRT_HALF, Complex::new(SQRT_HALF, 0.0)],
        }
    }

    /// The 2x2 port matrix P[port][arm], phase shifter included.
    fn port_matrix(&self) -> CMatrix {
        let mut p = CMatrix::zeros(2);
        p.set(0, 0, self.h_row[0] * self.ps_phase);
        p.set(1, 0, self.h_row[1] * self.ps_phase);
        p.set(0, 1, self.v_row[0]);
        p.set(1, 1, self.v_row[1]);
        p
    }

    fn check_unitary(&self) -> Result<()> {
        let p = self.port_matrix();
        let dev = p
            .adjoint()
            .matmul(&p)
            .expect("2x2")
            .sub(&CMatrix::identity(2))
            .max_norm();
        if dev > tol::IDENTITY {
            return Err(Error::NotUnitaryConvention { deviation: dev });
        }
        Ok(())
    }
}

impl Default for SplitterConvention {
    fn default() -> Self {
        Self::quarter_shift()
    }
}

/// Measurement operators for the two outcomes of one channel.
#[derive(Debug, Clone)]
pub struct KrausPair {
    ops: [CMatrix; 2],
}

impl KrausPair {
    /// Projective channel: the observable's eigenprojectors.
    pub fn projective(obs: &DichotomicObservable) -> Self {
        Self {
            ops: [
                obs.projector(Outcome::Plus).clone(),
                obs.projector(Outcome::Minus).clone(),
            ],
        }
    }

    /// Unsharp channel: square roots of the lambda-scaled effects.
    pub fn unsharp(obs: &DichotomicObservable, lambda: f64) -> Result<Self> {
        Ok(Self {
            ops: [
                sqrt_effect(obs, lambda, Outcome::Plus)?,
                sqrt_effect(obs, lambda, Outcome::Minus)?,
            ],
        })
    }

    /// Arbitrary operator pair; completeness is checked by `SwitchConfig`.
    pub fn raw(plus: CMatrix, minus: CMatrix) -> Self {
        Self { ops: [plus, minus] }
    }

    pub fn operator(&self, m: Outcome) -> &CMatrix {
        &self.ops[m.index()]
    }

    /// max |N+^dag N+ + N-^dag N- - I|.
    pub fn completeness_deviation(&self) -> f64 {
        let sum = self.ops[0]
            .adjoint()
            .matmul(&self.ops[0])
            .expect("2x2")
            .add(&self.ops[1].adjoint().matmul(&self.ops[1]).expect("2x2"));
        sum.sub(&CMatrix::identity(2)).max_norm()
    }

    /// max over outcomes of |N^2 - N| + |N - N^dag|; zero for projectors.
    pub fn projectivity_deviation(&self) -> f64 {
        self.ops
            .iter()
            .map(|n| {
                let idem = n.matmul(n).expect("2x2").sub(n).max_norm();
                idem + n.hermiticity_deviation()
            })
            .fold(0.0, f64::max)
    }
}

/// Full interferometer configuration.
#[derive(Debug, Clone)]
pub struct SwitchConfig {
    system_input: CVector,
    kraus_i: KrausPair,
    kraus_j: KrausPair,
    convention: SplitterConvention,
}

impl SwitchConfig {
    pub fn new(
        system_input: CVector,
        kraus_i: KrausPair,
        kraus_j: KrausPair,
        convention: SplitterConvention,
    ) -> Result<Self> {
        if system_input.dim() != 2 {
            return Err(Error::DimensionMismatch {
                left: system_input.dim(),
                right: 2,
            });
        }
        system_input.check_normalized(tol::IDENTITY)?;
        for pair in [&kraus_i, &kraus_j] {
            let dev = pair.completeness_deviation();
            if dev > tol::IDENTITY {
                return Err(Error::IncompleteKraus { deviation: dev });
            }
        }
        convention.check_unitary()?;
        Ok(Self {
            system_input,
            kraus_i,
            kraus_j,
            convention,
        })
    }

    /// Projective channels for two observables, |+> input, default
    /// convention.
    pub fn projective(obs_i: &DichotomicObservable, obs_j: &DichotomicObservable) -> Self {
        Self::new(
            CVector::plus(),
            KrausPair::projective(obs_i),
            KrausPair::projective(obs_j),
            SplitterConvention::default(),
        )
        .expect("projectors are complete")
    }

    pub fn system_input(&self) -> &CVector {
        &self.system_input
    }

    pub fn kraus_i(&self) -> &KrausPair {
        &self.kraus_i
    }

    pub fn kraus_j(&self) -> &KrausPair {
        &self.kraus_j
    }

    pub fn convention(&self) -> &SplitterConvention {
        &self.convention
    }

    /// Overlap of the system input with the |+> reference.
    fn reference_overlap(&self) -> Complex {
        CVector::plus().dot(&self.system_input)
    }
}

// ---------------------------------------------------------------------------
// Pipeline stages
// ---------------------------------------------------------------------------

/// Composite index on (port-or-arm, polarization): path major.
fn idx(path: usize, pol: usize) -> usize {
    path * 2 + pol
}

/// Polarizing-splitter stage: H component onto arm H, V onto arm V.
pub fn prepare_input(config: &SwitchConfig) -> Result<CVector> {
    config.system_input.check_normalized(tol::IDENTITY)?;
    let mut state = CVector::zeros(4);
    state.set(idx(0, 0), config.system_input.get(0));
    state.set(idx(1, 1), config.system_input.get(1));
    Ok(state)
}

/// Applies the selected-outcome channel operators in opposite order on the
/// two arms: N_i N_j on arm H, N_j N_i on arm V. The result is the
/// (unnormalized) branch for outcomes (m_i, m_j).
pub fn apply_switch(
    state: &CVector,
    config: &SwitchConfig,
    m_i: Outcome,
    m_j: Outcome,
) -> Result<CVector> {
    let ni = config.kraus_i.operator(m_i);
    let nj = config.kraus_j.operator(m_j);
    let forward = ni.matmul(nj)?;
    let reverse = nj.matmul(ni)?;
    let mut out = CVector::zeros(4);
    for (arm, op) in [(0usize, &forward), (1usize, &reverse)] {
        for r in 0..2 {
            let mut acc = Complex::ZERO;
            for c in 0..2 {
                acc += op.get(r, c) * state.get(idx(arm, c));
            }
            out.set(idx(arm, r), acc);
        }
    }
    Ok(out)
}

/// Phase shifter, recombining splitter, and polarization analysis: maps
/// (arm, H/V) coordinates onto (port, +/-) coordinates. Unitary.
pub fn apply_ps_and_bs(state: &CVector, config: &SwitchConfig) -> CVector {
    let p = config.convention.port_matrix();
    // <s|H>, <s|V> rows of the polarization analyzer.
    let mut r = CMatrix::zeros(2);
    r.set(0, 0, Complex::new(SQRT_HALF, 0.0));
    r.set(0, 1, Complex::new(SQRT_HALF, 0.0));
    r.set(1, 0, Complex::new(SQRT_HALF, 0.0));
    r.set(1, 1, Complex::new(-SQRT_HALF, 0.0));
    p.kron(&r).apply(state)
}

/// The operator attached to the (port, slot) position of the final state:
/// final = sum over (port, s) of |port> (x) SlotOp(port, s) |s>.
pub fn slot_operator(
    config: &SwitchConfig,
    m_i: Outcome,
    m_j: Outcome,
    port: Port,
    slot: Outcome,
) -> Result<CMatrix> {
    let ni = config.kraus_i.operator(m_i);
    let nj = config.kraus_j.operator(m_j);
    let forward = ni.matmul(nj)?;
    let reverse = nj.matmul(ni)?;
    let p = config.convention.port_matrix();
    // <s|H> = 1/sqrt2, <s|V> = +/- 1/sqrt2.
    let rebase = |s: Outcome, arm: usize| -> f64 {
        if arm == 0 {
            SQRT_HALF
        } else {
            SQRT_HALF * s.sign()
        }
    };
    let mut op = CMatrix::zeros(2);
    for (arm, channel) in [(0usize, &forward), (1usize, &reverse)] {
        let coeff = p.get(port.index(), arm)
            * config.system_input.get(arm)
            * Complex::new(rebase(slot, arm), 0.0);
        op = op.add(&channel.scale(coeff));
    }
    Ok(op)
}

// ---------------------------------------------------------------------------
// Runs
// ---------------------------------------------------------------------------

/// Outputs of one outcome branch of the interferometer.
#[derive(Debug, Clone)]
pub struct SwitchRun {
    pub outcomes: (Outcome, Outcome),
    /// Raw final-state coordinates, index (port, pol) path-major.
    pub final_state: CVector,
    /// Slot readout amplitudes <s| SlotOp(port, s) |input>, same indexing.
    pub branch_amplitudes: [Complex; 4],
    /// Squared detector coefficients, same indexing.
    pub branch_probabilities: [f64; 4],
    /// Physical weight of this outcome branch.
    pub branch_norm_sq: f64,
    projectivity_deviation: f64,
    reference_deviation: f64,
}

impl SwitchRun {
    pub fn amplitude(&self, port: Port, pol: Outcome) -> Complex {
        self.branch_amplitudes[idx(port.index(), pol.index())]
    }

    pub fn probability(&self, port: Port, pol: Outcome) -> f64 {
        self.branch_probabilities[idx(port.index(), pol.index())]
    }

    pub fn detector_coefficient(&self, port: Port, pol: Outcome) -> Complex {
        self.final_state.get(idx(port.index(), pol.index()))
    }

    /// sqrt(2) times the (psi3, +) slot amplitude: the two-basis
    /// quasiprobability for the selected outcomes, sign included.
    ///
    /// Only established for projective channels read against the |+>
    /// reference input; anything else is an error, not a silent number.
    pub fn quasiprob_readout(&self) -> Result<f64> {
        if self.projectivity_deviation > tol::IDENTITY {
            return Err(Error::NotProjective {
                deviation: self.projectivity_deviation,
            });
        }
        if self.reference_deviation > tol::CHAINED {
            return Err(Error::WrongReferenceInput {
                overlap: 1.0 - self.reference_deviation,
            });
        }
        let amp = self.amplitude(Port::Psi3, Outcome::Plus);
        debug_assert!(libm::fabs(amp.im) <= tol::IDENTITY);
        Ok(core::f64::consts::SQRT_2 * amp.re)
    }
}

/// Runs the interferometer for one outcome pair.
pub fn run(config: &SwitchConfig, m_i: Outcome, m_j: Outcome) -> Result<SwitchRun> {
    let prepared = prepare_input(config)?;
    let switched = apply_switch(&prepared, config, m_i, m_j)?;
    let final_state = apply_ps_and_bs(&switched, config);

    let mut branch_amplitudes = [Complex::ZERO; 4];
    for port in Port::BOTH {
        for slot in Outcome::BOTH {
            let op = slot_operator(config, m_i, m_j, port, slot)?;
            branch_amplitudes[idx(port.index(), slot.index())] =
                op.sandwich(&analyzer_ket(slot), config.system_input());
        }
    }

    let mut branch_probabilities = [0.0; 4];
    for (k, p) in branch_probabilities.iter_mut().enumerate() {
        *p = final_state.get(k).norm_sqr();
    }

    Ok(SwitchRun {
        outcomes: (m_i, m_j),
        branch_norm_sq: final_state.norm_sq(),
        final_state,
        branch_amplitudes,
        branch_probabilities,
        projectivity_deviation: config
            .kraus_i
            .projectivity_deviation()
            .max(config.kraus_j.projectivity_deviation()),
        reference_deviation: (config.reference_overlap() - Complex::ONE).norm(),
    })
}

/// Polarization analyzer ket |+> or |->.
fn analyzer_ket(slot: Outcome) -> CVector {
    match slot {
        Outcome::Plus => CVector::plus(),
        Outcome::Minus => CVector::new(alloc::vec![
            Complex::new(SQRT_HALF, 0.0),
            Complex::new(-SQRT_HALF, 0.0),
        ]),
    }
}

/// One detector-level probability entry.
#[derive(Debug, Clone, Copy)]
pub struct DetectorEntry {
    pub m_i: Outcome,
    pub m_j: Outcome,
    pub port: Port,
    pub pol: Outcome,
    pub probability: f64,
}

/// Detector probabilities over every outcome branch; total is one.
#[derive(Debug, Clone)]
pub struct DetectorStatistics {
    pub entries: Vec<DetectorEntry>,
    pub total: f64,
}

pub fn detector_statistics(config: &SwitchConfig) -> Result<DetectorStatistics> {
    let mut entries = Vec::with_capacity(16);
    let mut total = 0.0;
    for m_i in Outcome::BOTH {
        for m_j in Outcome::BOTH {
            let branch = run(config, m_i, m_j)?;
            for port in Port::BOTH {
                for pol in Outcome::BOTH {
                    let probability = branch.probability(port, pol);
                    total += probability;
                    entries.push(DetectorEntry {
                        m_i,
                        m_j,
                        port,
                        pol,
                        probability,
                    });
                }
            }
        }
    }
    Ok(DetectorStatistics { entries, total })
}

/// Residuals of the derived slot operators against the printed port
/// decomposition (anticommutator and commutator slots with the 1/(2 sqrt 2)
/// prefactor). Zero under the default convention; reported, never forced.
pub fn printed_form_residuals(
    config: &SwitchConfig,
    m_i: Outcome,
    m_j: Outcome,
) -> Result<[f64; 4]> {
    let ni = config.kraus_i.operator(m_i);
    let nj = config.kraus_j.operator(m_j);
    let anti = ni.anticommutator(nj)?;
    let comm = ni.commutator(nj)?;
    let scale = 1.0 / (2.0 * core::f64::consts::SQRT_2);
    let printed = [
        anti.scale_re(scale),
        comm.scale_re(scale),
        comm.scale_re(-scale).scale(IM),
        anti.scale_re(-scale).scale(IM),
    ];
    let mut residuals = [0.0; 4];
    for (k, (port, slot)) in [
        (Port::Psi3, Outcome::Plus),
        (Port::Psi3, Outcome::Minus),
        (Port::Psi4, Outcome::Plus),
        (Port::Psi4, Outcome::Minus),
    ]
    .into_iter()
    .enumerate()
    {
        let derived = slot_operator(config, m_i, m_j, port, slot)?;
        residuals[k] = derived.sub(&printed[k]).max_norm();
    }
    Ok(residuals)
}
