//! Minimal dense complex linear algebra for small Hermitian problems.
//!
//! Everything in the crate runs through [`ComplexMatrix`]: spin Hamiltonians,
//! step unitaries, basis projectors. Matrices are at most 32x32, so the
//! eigendecomposition route for unitaries (`U = V e^{i s Λ} V†`) is both exact
//! in unitarity and reusable across many durations of the same Hamiltonian.

use nalgebra::DMatrix;
use num_complex::Complex64;
use thiserror::Error;

pub type C64 = Complex64;

/// Maximum allowed deviation `max|M - M†|` for a matrix passed to a
/// Hermitian-only routine.
pub const HERMITICITY_TOL: f64 = 1e-12;

/// Maximum allowed deviation `max|U†U - I|` for matrices produced by
/// [`expm_unitary`].
pub const UNITARITY_TOL: f64 = 1e-10;

/// Largest dimension accepted by [`hermitian_eig`].
pub const MAX_EIG_DIM: usize = 64;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("matrix is not Hermitian: max|M - M†| = {defect:.3e} exceeds tolerance {tol:.1e}")]
    NonHermitian { defect: f64, tol: f64 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// Dense complex matrix with value semantics.
///
/// Entries are logically row-major; storage is delegated to `nalgebra`.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    inner: DMatrix<C64>,
}

impl std::fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ComplexMatrix({}x{})", self.rows(), self.cols())?;
        if self.rows() <= 8 && self.cols() <= 8 {
            for i in 0..self.rows() {
                write!(f, "\n  ")?;
                for j in 0..self.cols() {
                    let z = self.get(i, j);
                    write!(f, "{:+.4}{:+.4}i  ", z.re, z.im)?;
                }
            }
        }
        Ok(())
    }
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            inner: DMatrix::zeros(rows, cols),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            inner: DMatrix::identity(n, n),
        }
    }

    /// Builds from a row-major slice of entries; panics if the length is not
    /// `rows * cols`.
    pub fn from_row_major(rows: usize, cols: usize, entries: &[C64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        Self {
            inner: DMatrix::from_row_slice(rows, cols, entries),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> C64) -> Self {
        Self {
            inner: DMatrix::from_fn(rows, cols, f),
        }
    }

    /// Column vector from a slice of amplitudes.
    pub fn column(entries: &[C64]) -> Self {
        Self {
            inner: DMatrix::from_column_slice(entries.len(), 1, entries),
        }
    }

    pub fn diagonal(values: &[C64]) -> Self {
        let n = values.len();
        Self::from_fn(n, n, |i, j| if i == j { values[i] } else { C64::ZERO })
    }

    pub fn rows(&self) -> usize {
        self.inner.nrows()
    }

    pub fn cols(&self) -> usize {
        self.inner.ncols()
    }

    pub fn is_square(&self) -> bool {
        self.rows() == self.cols()
    }

    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.inner[(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: C64) {
        self.inner[(i, j)] = value;
    }

    /// Entries in row-major order.
    pub fn entries_row_major(&self) -> Vec<C64> {
        let mut out = Vec::with_capacity(self.rows() * self.cols());
        for i in 0..self.rows() {
            for j in 0..self.cols() {
                out.push(self.get(i, j));
            }
        }
        out
    }

    pub fn matmul(&self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.cols(), rhs.rows(), "inner dimensions must agree");
        ComplexMatrix {
            inner: &self.inner * &rhs.inner,
        }
    }

    pub fn add(&self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix {
            inner: &self.inner + &rhs.inner,
        }
    }

    pub fn sub(&self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix {
            inner: &self.inner - &rhs.inner,
        }
    }

    pub fn scale(&self, factor: C64) -> ComplexMatrix {
        ComplexMatrix {
            inner: self.inner.map(|z| z * factor),
        }
    }

    pub fn scale_re(&self, factor: f64) -> ComplexMatrix {
        self.scale(C64::new(factor, 0.0))
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> ComplexMatrix {
        ComplexMatrix {
            inner: self.inner.adjoint(),
        }
    }

    pub fn trace(&self) -> C64 {
        self.inner.trace()
    }

    /// `max_ij |self_ij - rhs_ij|`.
    pub fn max_abs_diff(&self, rhs: &ComplexMatrix) -> f64 {
        assert_eq!(self.rows(), rhs.rows());
        assert_eq!(self.cols(), rhs.cols());
        (&self.inner - &rhs.inner)
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    /// `max_ij |M_ij - conj(M_ji)|`; zero for exactly Hermitian matrices.
    pub fn hermiticity_defect(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let mut worst = 0.0f64;
        for i in 0..self.rows() {
            for j in i..self.cols() {
                let d = (self.get(i, j) - self.get(j, i).conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_defect() <= tol
    }

    /// `max|U†U - I|`.
    pub fn unitarity_defect(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        self.dagger()
            .matmul(self)
            .max_abs_diff(&ComplexMatrix::identity(self.rows()))
    }

    /// Squared Euclidean norm of column `j`.
    pub fn column_norm_sq(&self, j: usize) -> f64 {
        (0..self.rows()).map(|i| self.get(i, j).norm_sqr()).sum()
    }
}

/// Kronecker product; dimensions `(a.rows*b.rows) x (a.cols*b.cols)`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    ComplexMatrix {
        inner: a.inner.kronecker(&b.inner),
    }
}

/// Eigendecomposition of a Hermitian matrix: `h = V diag(λ) V†` with real λ
/// ascending and unitary V.
#[derive(Clone, Debug)]
pub struct HermitianEig {
    pub eigenvalues: Vec<f64>,
    /// Eigenvectors as columns, ordered like `eigenvalues`.
    pub eigenvectors: ComplexMatrix,
}

impl HermitianEig {
    /// `V diag(e^{i·phase_scale·λ}) V†` reusing the stored decomposition.
    pub fn unitary(&self, phase_scale: f64) -> ComplexMatrix {
        let n = self.eigenvalues.len();
        let phases: Vec<C64> = self
            .eigenvalues
            .iter()
            .map(|&lam| C64::from_polar(1.0, phase_scale * lam))
            .collect();
        let v = &self.eigenvectors;
        // V * diag(phases) * V†, with the diagonal product fused into V.
        let mut scaled = v.clone();
        for j in 0..n {
            for i in 0..n {
                scaled.set(i, j, v.get(i, j) * phases[j]);
            }
        }
        scaled.matmul(&v.dagger())
    }
}

/// Hermitian eigendecomposition with an explicit Hermiticity tolerance.
pub fn hermitian_eig_with_tol(h: &ComplexMatrix, tol: f64) -> Result<HermitianEig, AlgebraError> {
    if !h.is_square() {
        return Err(AlgebraError::DimensionMismatch(format!(
            "expected square matrix, got {}x{}",
            h.rows(),
            h.cols()
        )));
    }
    if h.rows() > MAX_EIG_DIM {
        return Err(AlgebraError::DimensionMismatch(format!(
            "dimension {} exceeds supported maximum {}",
            h.rows(),
            MAX_EIG_DIM
        )));
    }
    let defect = h.hermiticity_defect();
    if defect > tol {
        return Err(AlgebraError::NonHermitian { defect, tol });
    }
    let eig = h.inner.clone().symmetric_eigen();
    let n = h.rows();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let eigenvalues: Vec<f64> = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, n, |i, j| eig.eigenvectors[(i, order[j])]);
    Ok(HermitianEig {
        eigenvalues,
        eigenvectors,
    })
}

/// Hermitian eigendecomposition at the default [`HERMITICITY_TOL`].
pub fn hermitian_eig(h: &ComplexMatrix) -> Result<HermitianEig, AlgebraError> {
    hermitian_eig_with_tol(h, HERMITICITY_TOL)
}

/// `V diag(e^{i·phase_scale·λ}) V†` for Hermitian `h`.
///
/// Callers evolving for a duration `t` in `h/J^max` pass `phase_scale = -2π t`.
pub fn expm_unitary(h: &ComplexMatrix, phase_scale: f64) -> Result<ComplexMatrix, AlgebraError> {
    assert!(phase_scale.is_finite(), "phase_scale must be finite");
    let eig = hermitian_eig(h)?;
    Ok(eig.unitary(phase_scale))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    pub(crate) fn pauli_z() -> ComplexMatrix {
        ComplexMatrix::from_row_major(
            2,
            2,
            &[c(1.0, 0.0), C64::ZERO, C64::ZERO, c(-1.0, 0.0)],
        )
    }

    fn pauli_x() -> ComplexMatrix {
        ComplexMatrix::from_row_major(2, 2, &[C64::ZERO, c(1.0, 0.0), c(1.0, 0.0), C64::ZERO])
    }

    fn random_hermitian(n: usize, seed: u64) -> ComplexMatrix {
        // splitmix64: deterministic, no dependency on the rand stack in tests
        let mut state = seed;
        let mut next = move || {
            state = state.wrapping_add(0x9e3779b97f4a7c15);
            let mut z = state;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
            (z ^ (z >> 31)) as f64 / u64::MAX as f64 - 0.5
        };
        let mut m = ComplexMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let re = next();
                let im = if i == j { 0.0 } else { next() };
                m.set(i, j, c(re, im));
                m.set(j, i, c(re, -im));
            }
        }
        m
    }

    /// 30-term Taylor series for exp(i·s·H); the independent oracle for
    /// `expm_unitary`.
    fn expm_taylor(h: &ComplexMatrix, phase_scale: f64) -> ComplexMatrix {
        let n = h.rows();
        let a = h.scale(c(0.0, phase_scale));
        let mut term = ComplexMatrix::identity(n);
        let mut sum = ComplexMatrix::identity(n);
        for k in 1..=30 {
            term = term.matmul(&a).scale_re(1.0 / k as f64);
            sum = sum.add(&term);
        }
        sum
    }

    #[test]
    fn kron_of_identities_is_identity() {
        let i2 = ComplexMatrix::identity(2);
        let i4 = kron(&i2, &i2);
        assert_eq!(i4.max_abs_diff(&ComplexMatrix::identity(4)), 0.0);
    }

    #[test]
    fn kron_pauli_z_with_identity() {
        let got = kron(&pauli_z(), &ComplexMatrix::identity(2));
        let want = ComplexMatrix::diagonal(&[c(1.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0), c(-1.0, 0.0)]);
        assert_eq!(got.max_abs_diff(&want), 0.0);
    }

    #[test]
    fn kron_xx_squares_to_identity() {
        let xx = kron(&pauli_x(), &pauli_x());
        // explicit 4x4 multiplication oracle
        let mut prod = ComplexMatrix::zeros(4, 4);
        for i in 0..4 {
            for j in 0..4 {
                let mut acc = C64::ZERO;
                for k in 0..4 {
                    acc += xx.get(i, k) * xx.get(k, j);
                }
                prod.set(i, j, acc);
            }
        }
        assert!(prod.max_abs_diff(&ComplexMatrix::identity(4)) < 1e-15);
    }

    #[test]
    fn pauli_z_spectrum() {
        let eig = hermitian_eig(&pauli_z()).unwrap();
        assert!((eig.eigenvalues[0] + 1.0).abs() < 1e-14);
        assert!((eig.eigenvalues[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn two_spin_heisenberg_spectrum() {
        // (1/4) σ·σ on two spins: singlet -3/4, triplet +1/4
        let x = kron(&pauli_x(), &pauli_x());
        let y = {
            let py = ComplexMatrix::from_row_major(
                2,
                2,
                &[C64::ZERO, c(0.0, -1.0), c(0.0, 1.0), C64::ZERO],
            );
            kron(&py, &py)
        };
        let z = kron(&pauli_z(), &pauli_z());
        let h = x.add(&y).add(&z).scale_re(0.25);
        let eig = hermitian_eig(&h).unwrap();
        assert!((eig.eigenvalues[0] + 0.75).abs() < 1e-12);
        for k in 1..4 {
            assert!((eig.eigenvalues[k] - 0.25).abs() < 1e-12);
        }
    }

    #[test]
    fn eig_reconstructs_random_hermitian() {
        let h = random_hermitian(6, 42);
        let eig = hermitian_eig(&h).unwrap();
        let lam = ComplexMatrix::diagonal(
            &eig.eigenvalues.iter().map(|&l| c(l, 0.0)).collect::<Vec<_>>(),
        );
        let recon = eig
            .eigenvectors
            .matmul(&lam)
            .matmul(&eig.eigenvectors.dagger());
        assert!(recon.max_abs_diff(&h) < 1e-10);
        assert!(eig.eigenvectors.unitarity_defect() < 1e-10);
        // ascending order
        for w in eig.eigenvalues.windows(2) {
            assert!(w[0] <= w[1]);
        }
    }

    #[test]
    fn eig_rejects_non_hermitian() {
        let mut m = ComplexMatrix::identity(3);
        m.set(0, 1, c(0.5, 0.0));
        match hermitian_eig(&m) {
            Err(AlgebraError::NonHermitian { defect, .. }) => assert!(defect > 0.4),
            other => panic!("expected NonHermitian, got {other:?}"),
        }
    }

    #[test]
    fn expm_zero_phase_is_identity() {
        let h = random_hermitian(5, 7);
        let u = expm_unitary(&h, 0.0).unwrap();
        assert!(u.max_abs_diff(&ComplexMatrix::identity(5)) < 1e-12);
    }

    #[test]
    fn expm_pauli_z_half_analytic() {
        // exp(-iπ σz/2) = diag(e^{-iπ/2}, e^{iπ/2})
        let h = pauli_z().scale_re(0.5);
        let u = expm_unitary(&h, -std::f64::consts::PI).unwrap();
        let want = ComplexMatrix::diagonal(&[c(0.0, -1.0), c(0.0, 1.0)]);
        assert!(u.max_abs_diff(&want) < 1e-12);
    }

    #[test]
    fn expm_matches_taylor_oracle() {
        for seed in 0..20 {
            let h = random_hermitian(6, 1000 + seed);
            let u = expm_unitary(&h, -0.3).unwrap();
            let oracle = expm_taylor(&h, -0.3);
            assert!(u.max_abs_diff(&oracle) < 1e-12);
        }
    }

    #[test]
    fn expm_group_properties() {
        let h = random_hermitian(6, 99);
        for &(s1, s2) in &[(0.7, -0.7), (0.3, 1.1), (-2.0, 0.4)] {
            let u1 = expm_unitary(&h, s1).unwrap();
            let u2 = expm_unitary(&h, s2).unwrap();
            let u12 = expm_unitary(&h, s1 + s2).unwrap();
            assert!(u1.matmul(&u2).max_abs_diff(&u12) < 1e-10);
        }
        // inverse composition
        let u = expm_unitary(&h, 0.9).unwrap();
        let uinv = expm_unitary(&h, -0.9).unwrap();
        assert!(u.matmul(&uinv).max_abs_diff(&ComplexMatrix::identity(6)) < 1e-10);
        assert!(u.unitarity_defect() < UNITARITY_TOL);
    }

    #[test]
    fn kron_mixed_product_property() {
        // kron(A,B)·kron(C,D) = kron(AC, BD) on random 2x2 inputs
        for seed in 0..10 {
            let a = random_hermitian(2, seed);
            let b = random_hermitian(2, seed + 100);
            let c_ = random_hermitian(2, seed + 200);
            let d = random_hermitian(2, seed + 300);
            let lhs = kron(&a, &b).matmul(&kron(&c_, &d));
            let rhs = kron(&a.matmul(&c_), &b.matmul(&d));
            assert!(lhs.max_abs_diff(&rhs) < 1e-13);
        }
    }

    #[test]
    fn kron_is_associative() {
        let a = random_hermitian(2, 1);
        let b = random_hermitian(2, 2);
        let c_ = random_hermitian(2, 3);
        let lhs = kron(&kron(&a, &b), &c_);
        let rhs = kron(&a, &kron(&b, &c_));
        assert!(lhs.max_abs_diff(&rhs) < 1e-15);
    }
}
