//! Small dense complex linear algebra.
//!
//! Everything downstream lives on 2x2 operators and their Kronecker
//! composites (4x4 for the interferometer, up to 16x16 in test oracles), so
//! the types here favor clarity and exactness over scale: row-major `Vec`
//! storage, straightforward O(n^3) products, and a closed-form qubit matrix
//! exponential with a scaling-and-squaring series for larger dimensions.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::Error;
use crate::{tol, Result};

/// Complex scalar used throughout the crate.
pub type Complex = Complex64;

const I: Complex = Complex::new(0.0, 1.0);

// ---------------------------------------------------------------------------
// Vectors
// ---------------------------------------------------------------------------

/// Dense complex column vector.
#[derive(Debug, Clone, PartialEq)]
pub struct CVector {
    entries: Vec<Complex>,
}

impl CVector {
    pub fn new(entries: Vec<Complex>) -> Self {
        assert!(!entries.is_empty(), "vector dimension must be >= 1");
        Self { entries }
    }

    pub fn zeros(dim: usize) -> Self {
        Self::new(vec![Complex::ZERO; dim])
    }

    /// Computational basis vector e_k.
    pub fn basis(dim: usize, k: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.entries[k] = Complex::ONE;
        v
    }

    /// The qubit state (|0> + |1>)/sqrt(2).
    pub fn plus() -> Self {
        let s = core::f64::consts::FRAC_1_SQRT_2;
        Self::new(vec![Complex::new(s, 0.0), Complex::new(s, 0.0)])
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, k: usize) -> Complex {
        self.entries[k]
    }

    pub fn set(&mut self, k: usize, value: Complex) {
        self.entries[k] = value;
    }

    pub fn entries(&self) -> &[Complex] {
        &self.entries
    }

    /// Inner product <self|other> (conjugate-linear in `self`).
    pub fn dot(&self, other: &Self) -> Complex {
        assert_eq!(self.dim(), other.dim(), "inner product dimension mismatch");
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn norm_sq(&self) -> f64 {
        self.entries.iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        libm::sqrt(self.norm_sq())
    }

    pub fn scale(&self, s: Complex) -> Self {
        Self::new(self.entries.iter().map(|c| c * s).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        Self::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Returns a unit-norm copy, or an error if the norm is (near) zero.
    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm();
        if n < tol::OVERLAP {
            return Err(Error::NotNormalized { norm: n });
        }
        Ok(self.scale(Complex::new(1.0 / n, 0.0)))
    }

    /// Errors unless the norm is within `eps` of one.
    pub fn check_normalized(&self, eps: f64) -> Result<()> {
        let n = self.norm();
        if libm::fabs(n - 1.0) > eps {
            return Err(Error::NotNormalized { norm: n });
        }
        Ok(())
    }

    /// Fixes the global phase so the first component of magnitude above
    /// 1e-8 is real and positive. Keeps tables reproducible across runs.
    pub fn phase_fixed(&self) -> Self {
        for c in &self.entries {
            if c.norm() > 1e-8 {
                let phase = c.conj() / Complex::new(c.norm(), 0.0);
                return self.scale(phase);
            }
        }
        self.clone()
    }

    /// Outer product |self><other|.
    pub fn outer(&self, other: &Self) -> CMatrix {
        let n = self.dim();
        assert_eq!(n, other.dim());
        let mut m = CMatrix::zeros(n);
        for r in 0..n {
            for c in 0..n {
                m.set(r, c, self.entries[r] * other.entries[c].conj());
            }
        }
        m
    }

    /// Kronecker product of two vectors (self is the major factor).
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.entries {
            for b in &other.entries {
                out.push(a * b);
            }
        }
        Self::new(out)
    }

    pub fn approx_eq(&self, other: &Self, eps: f64) -> bool {
        self.dim() == other.dim()
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(a, b)| (a - b).norm() <= eps)
    }
}

// ---------------------------------------------------------------------------
// Matrices
// ---------------------------------------------------------------------------

/// Dense square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    dim: usize,
    entries: Vec<Complex>,
}

impl CMatrix {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be >= 1");
        Self {
            dim,
            entries: vec![Complex::ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for k in 0..dim {
            m.set(k, k, Complex::ONE);
        }
        m
    }

    /// Builds a matrix from nested row slices.
    pub fn from_rows(rows: &[&[Complex]]) -> Self {
        let dim = rows.len();
        let mut m = Self::zeros(dim);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), dim, "matrix rows must be square");
            for (c, v) in row.iter().enumerate() {
                m.set(r, c, *v);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Complex {
        self.entries[r * self.dim + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: Complex) {
        self.entries[r * self.dim + c] = value;
    }

    /// Standard complex matrix product; errors on dimension mismatch.
    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let n = self.dim;
        let mut out = Self::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a == Complex::ZERO {
                    continue;
                }
                for c in 0..n {
                    let v = out.get(r, c) + a * other.get(k, c);
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for r in 0..n {
            for c in 0..n {
                out.set(r, c, self.get(c, r).conj());
            }
        }
        out
    }

    /// Kronecker product; output dimension is the product of the inputs'.
    pub fn kron(&self, other: &Self) -> Self {
        let (a, b) = (self.dim, other.dim);
        let mut out = Self::zeros(a * b);
        for ra in 0..a {
            for ca in 0..a {
                let va = self.get(ra, ca);
                if va == Complex::ZERO {
                    continue;
                }
                for rb in 0..b {
                    for cb in 0..b {
                        out.set(ra * b + rb, ca * b + cb, va * other.get(rb, cb));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (o, v) in out.entries.iter_mut().zip(&other.entries) {
            *o += v;
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (o, v) in out.entries.iter_mut().zip(&other.entries) {
            *o -= v;
        }
        out
    }

    pub fn scale(&self, s: Complex) -> Self {
        let mut out = self.clone();
        for o in out.entries.iter_mut() {
            *o *= s;
        }
        out
    }

    pub fn scale_re(&self, s: f64) -> Self {
        self.scale(Complex::new(s, 0.0))
    }

    pub fn trace(&self) -> Complex {
        (0..self.dim).map(|k| self.get(k, k)).sum()
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &CVector) -> CVector {
        assert_eq!(self.dim, v.dim(), "matrix-vector dimension mismatch");
        let mut out = CVector::zeros(self.dim);
        for r in 0..self.dim {
            let mut acc = Complex::ZERO;
            for c in 0..self.dim {
                acc += self.get(r, c) * v.get(c);
            }
            out.set(r, acc);
        }
        out
    }

    /// <bra| self |ket>.
    pub fn sandwich(&self, bra: &CVector, ket: &CVector) -> Complex {
        bra.dot(&self.apply(ket))
    }

    /// Anticommutator {self, other}.
    pub fn anticommutator(&self, other: &Self) -> Result<Self> {
        Ok(self.matmul(other)?.add(&other.matmul(self)?))
    }

    /// Commutator [self, other].
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        Ok(self.matmul(other)?.sub(&other.matmul(self)?))
    }

    /// Largest entrywise magnitude.
    pub fn max_norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max)
    }

    /// Maximum absolute column sum (induced 1-norm).
    pub fn one_norm(&self) -> f64 {
        (0..self.dim)
            .map(|c| (0..self.dim).map(|r| self.get(r, c).norm()).sum())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Self, eps: f64) -> bool {
        self.dim == other.dim && self.sub(other).max_norm() <= eps
    }

    /// Deviation from Hermiticity, max |A - A^dagger|.
    pub fn hermiticity_deviation(&self) -> f64 {
        self.sub(&self.adjoint()).max_norm()
    }

    pub fn check_hermitian(&self, eps: f64) -> Result<()> {
        let d = self.hermiticity_deviation();
        if d > eps {
            return Err(Error::NotHermitian { deviation: d });
        }
        Ok(())
    }

    /// Extracts `column` as a vector.
    pub fn column(&self, column: usize) -> CVector {
        CVector::new((0..self.dim).map(|r| self.get(r, column)).collect())
    }
}

// ---------------------------------------------------------------------------
// Pauli matrices and Bloch helpers
// ---------------------------------------------------------------------------

pub fn sigma_x() -> CMatrix {
    CMatrix::from_rows(&[
        &[Complex::ZERO, Complex::ONE],
        &[Complex::ONE, Complex::ZERO],
    ])
}

pub fn sigma_y() -> CMatrix {
    CMatrix::from_rows(&[&[Complex::ZERO, -I], &[I, Complex::ZERO]])
}

pub fn sigma_z() -> CMatrix {
    CMatrix::from_rows(&[
        &[Complex::ONE, Complex::ZERO],
        &[Complex::ZERO, -Complex::ONE],
    ])
}

/// n . sigma for a real 3-vector n.
pub fn bloch_matrix(n: [f64; 3]) -> CMatrix {
    let mut m = sigma_x().scale_re(n[0]);
    m = m.add(&sigma_y().scale_re(n[1]));
    m.add(&sigma_z().scale_re(n[2]))
}

/// Recovers the Bloch components n_k = Re tr(sigma_k A) / 2 of a 2x2 matrix.
pub fn bloch_components(m: &CMatrix) -> [f64; 3] {
    assert_eq!(m.dim(), 2);
    let comp = |s: &CMatrix| s.matmul(m).expect("dim 2").trace().re / 2.0;
    [comp(&sigma_x()), comp(&sigma_y()), comp(&sigma_z())]
}

// ---------------------------------------------------------------------------
// Unitary time evolution
// ---------------------------------------------------------------------------

/// U = exp(-i H t) for Hermitian H (hbar = 1).
///
/// For qubits the exponential is evaluated in closed form through the Pauli
/// decomposition H = h0 I + h . sigma:
/// U = e^{-i h0 t} (cos(|h| t) I - i sin(|h| t) (h/|h|) . sigma).
/// Higher dimensions use a scaling-and-squaring power series truncated at
/// relative tolerance `tol::SERIES_REL`.
pub fn unitary_evolution(hamiltonian: &CMatrix, t: f64) -> Result<CMatrix> {
    hamiltonian.check_hermitian(tol::IDENTITY)?;
    if hamiltonian.dim() == 2 {
        let h0 = hamiltonian.trace().re / 2.0;
        let h = bloch_components(hamiltonian);
        let hn = libm::sqrt(h[0] * h[0] + h[1] * h[1] + h[2] * h[2]);
        let phase = Complex::from_polar(1.0, -h0 * t);
        if hn * libm::fabs(t) < f64::MIN_POSITIVE {
            return Ok(CMatrix::identity(2).scale(phase));
        }
        let (c, s) = (libm::cos(hn * t), libm::sin(hn * t));
        let axis = [h[0] / hn, h[1] / hn, h[2] / hn];
        let u = CMatrix::identity(2)
            .scale_re(c)
            .sub(&bloch_matrix(axis).scale(I * s));
        Ok(u.scale(phase))
    } else {
        Ok(expm(&hamiltonian.scale(-I * t)))
    }
}

/// exp(A) by scaling-and-squaring with a truncated power series.
fn expm(a: &CMatrix) -> CMatrix {
    let norm = a.one_norm();
    let mut squarings = 0u32;
    let mut scaled = a.clone();
    if norm > 0.5 {
        squarings = libm::ceil(libm::log2(norm / 0.5)) as u32;
        scaled = a.scale_re(libm::pow(2.0, -f64::from(squarings)));
    }
    let mut sum = CMatrix::identity(a.dim());
    let mut term = CMatrix::identity(a.dim());
    let mut k = 1.0;
    loop {
        term = term.matmul(&scaled).expect("square").scale_re(1.0 / k);
        sum = sum.add(&term);
        if term.max_norm() <= tol::SERIES_REL * sum.max_norm() {
            break;
        }
        k += 1.0;
        assert!(k < 200.0, "series failed to converge");
    }
    for _ in 0..squarings {
        sum = sum.matmul(&sum).expect("square");
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    /// Deterministic pseudo-random complex matrix for oracle comparisons.
    fn scrambled(dim: usize, seed: u64) -> CMatrix {
        let mut state = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(1);
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        let mut m = CMatrix::zeros(dim);
        for r in 0..dim {
            for col in 0..dim {
                m.set(r, col, c(next(), next()));
            }
        }
        m
    }

    /// Independent triple-loop product, no shortcuts.
    fn matmul_reference(a: &CMatrix, b: &CMatrix) -> CMatrix {
        let n = a.dim();
        let mut out = CMatrix::zeros(n);
        for r in 0..n {
            for col in 0..n {
                let mut acc = Complex::ZERO;
                for k in 0..n {
                    acc += a.get(r, k) * b.get(k, col);
                }
                out.set(r, col, acc);
            }
        }
        out
    }

    /// Plain Taylor series for exp(-iHt), no scaling tricks.
    fn evolution_series_reference(h: &CMatrix, t: f64, terms: usize) -> CMatrix {
        let a = h.scale(-I * t);
        let mut sum = CMatrix::identity(h.dim());
        let mut term = CMatrix::identity(h.dim());
        for k in 1..=terms {
            term = term.matmul(&a).unwrap().scale_re(1.0 / k as f64);
            sum = sum.add(&term);
        }
        sum
    }

    #[test]
    fn matmul_identity() {
        let id = CMatrix::identity(3);
        assert!(id.matmul(&id).unwrap().approx_eq(&id, 0.0));
    }

    #[test]
    fn matmul_pauli_algebra() {
        // sigma_z sigma_x = i sigma_y
        let zx = sigma_z().matmul(&sigma_x()).unwrap();
        assert!(zx.approx_eq(&sigma_y().scale(I), tol::IDENTITY));
    }

    #[test]
    fn matmul_matches_triple_loop_oracle() {
        let a = scrambled(4, 7);
        let b = scrambled(4, 21);
        let fast = a.matmul(&b).unwrap();
        let slow = matmul_reference(&a, &b);
        assert!(fast.approx_eq(&slow, 1e-14));
    }

    #[test]
    fn matmul_dimension_mismatch_is_an_error() {
        let a = CMatrix::identity(2);
        let b = CMatrix::identity(3);
        assert_eq!(
            a.matmul(&b),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn matmul_associativity_on_random_triples() {
        for seed in 0..20 {
            let a = scrambled(3, seed);
            let b = scrambled(3, seed + 100);
            let cm = scrambled(3, seed + 200);
            let left = a.matmul(&b).unwrap().matmul(&cm).unwrap();
            let right = a.matmul(&b.matmul(&cm).unwrap()).unwrap();
            assert!(left.approx_eq(&right, tol::IDENTITY));
        }
    }

    #[test]
    fn trace_cyclic_on_random_pairs() {
        for seed in 0..20 {
            let a = scrambled(4, seed);
            let b = scrambled(4, seed + 50);
            let ab = a.matmul(&b).unwrap().trace();
            let ba = b.matmul(&a).unwrap().trace();
            assert!((ab - ba).norm() <= 1e-13);
        }
    }

    #[test]
    fn adjoint_hermitian_fixed_point() {
        assert!(sigma_y().adjoint().approx_eq(&sigma_y(), 0.0));
    }

    #[test]
    fn adjoint_of_i_times_identity() {
        let m = CMatrix::identity(2).scale(I);
        assert!(m.adjoint().approx_eq(&CMatrix::identity(2).scale(-I), 0.0));
    }

    #[test]
    fn adjoint_is_involutive() {
        let a = scrambled(4, 3);
        assert!(a.adjoint().adjoint().approx_eq(&a, 0.0));
    }

    #[test]
    fn kron_identities() {
        let id2 = CMatrix::identity(2);
        assert!(id2.kron(&id2).approx_eq(&CMatrix::identity(4), 0.0));

        // sigma_z (x) I has blocks I, -I on the diagonal.
        let zi = sigma_z().kron(&id2);
        let mut expected = CMatrix::zeros(4);
        expected.set(0, 0, c(1.0, 0.0));
        expected.set(1, 1, c(1.0, 0.0));
        expected.set(2, 2, c(-1.0, 0.0));
        expected.set(3, 3, c(-1.0, 0.0));
        assert!(zi.approx_eq(&expected, 0.0));
    }

    #[test]
    fn kron_mixed_product_identity() {
        for seed in 0..10 {
            let a = scrambled(2, seed);
            let b = scrambled(2, seed + 31);
            let cc = scrambled(2, seed + 62);
            let d = scrambled(2, seed + 93);
            let lhs = a.kron(&b).matmul(&cc.kron(&d)).unwrap();
            let rhs = a.matmul(&cc).unwrap().kron(&b.matmul(&d).unwrap());
            assert!(lhs.approx_eq(&rhs, 1e-13));
        }
    }

    #[test]
    fn evolution_half_turn_flips_sigma_z() {
        // H = (w/2) sigma_y, w t = pi: U^dag sigma_z U = -sigma_z.
        let h = sigma_y().scale_re(0.5);
        let u = unitary_evolution(&h, core::f64::consts::PI).unwrap();
        let evolved = u
            .adjoint()
            .matmul(&sigma_z())
            .unwrap()
            .matmul(&u)
            .unwrap();
        assert!(evolved.approx_eq(&sigma_z().scale_re(-1.0), tol::IDENTITY));
    }

    #[test]
    fn evolution_at_zero_time_is_identity() {
        let h = sigma_x().scale_re(0.7).add(&sigma_z().scale_re(-0.2));
        let u = unitary_evolution(&h, 0.0).unwrap();
        assert!(u.approx_eq(&CMatrix::identity(2), tol::IDENTITY));
    }

    #[test]
    fn evolution_third_turn_matches_series_oracle() {
        let h = sigma_y().scale_re(0.5);
        let t = core::f64::consts::PI / 3.0;
        let u = unitary_evolution(&h, t).unwrap();
        let oracle = evolution_series_reference(&h, t, 40);
        assert!(u.approx_eq(&oracle, tol::IDENTITY));

        // Bloch angle of the evolved observable is pi/3 off the z axis.
        let evolved = u
            .adjoint()
            .matmul(&sigma_z())
            .unwrap()
            .matmul(&u)
            .unwrap();
        let n = bloch_components(&evolved);
        assert_abs_diff_eq!(n[2], libm::cos(t), epsilon = tol::IDENTITY);
        assert_abs_diff_eq!(
            libm::sqrt(n[0] * n[0] + n[1] * n[1]),
            libm::sin(t),
            epsilon = tol::IDENTITY
        );
    }

    #[test]
    fn evolution_is_unitary_with_trace_part() {
        // Hamiltonian with a nonzero trace exercises the global phase.
        let h = CMatrix::identity(2)
            .scale_re(0.9)
            .add(&sigma_x().scale_re(0.4))
            .add(&sigma_y().scale_re(-1.1));
        let u = unitary_evolution(&h, 2.3).unwrap();
        let uu = u.adjoint().matmul(&u).unwrap();
        assert!(uu.approx_eq(&CMatrix::identity(2), tol::IDENTITY));
        let oracle = evolution_series_reference(&h, 2.3, 60);
        assert!(u.approx_eq(&oracle, tol::IDENTITY));
    }

    #[test]
    fn evolution_rejects_non_hermitian() {
        let m = scrambled(2, 5);
        assert!(matches!(
            unitary_evolution(&m, 1.0),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn evolution_general_dimension_agrees_with_series() {
        // 4x4 Hermitian: H = sigma_x (x) sigma_y + 0.3 sigma_z (x) I.
        let h = sigma_x()
            .kron(&sigma_y())
            .add(&sigma_z().kron(&CMatrix::identity(2)).scale_re(0.3));
        let u = unitary_evolution(&h, 1.7).unwrap();
        let uu = u.adjoint().matmul(&u).unwrap();
        assert!(uu.approx_eq(&CMatrix::identity(4), tol::IDENTITY));
        let oracle = evolution_series_reference(&h, 1.7, 80);
        assert!(u.approx_eq(&oracle, 1e-12));
    }

    #[test]
    fn vector_basics() {
        let v = CVector::new(vec![c(3.0, 0.0), c(0.0, 4.0)]);
        assert_abs_diff_eq!(v.norm(), 5.0);
        let n = v.normalized().unwrap();
        assert_abs_diff_eq!(n.norm(), 1.0, epsilon = 1e-15);
        // Phase fixing makes the first significant entry real positive.
        let w = CVector::new(vec![c(0.0, -1.0), c(1.0, 0.0)]).phase_fixed();
        assert!((w.get(0) - c(1.0, 0.0)).norm() < 1e-15);
    }
}
