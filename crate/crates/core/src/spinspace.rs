//! Finite spin Hilbert space in the number basis.
//!
//! The basis vector `|n⟩` is the Dicke state `|j, -j + n⟩`, `n = 0..=2j`, and
//! the number operator is `N = Jz + j`. Everything here is dense and exact in
//! the sense that matrix elements come straight from the angular-momentum
//! algebra; this module is the brute-force reference the closed forms in
//! [`crate::closedform`] are checked against.

use std::ops::{Add, Mul, Sub};

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Result, SpinError};

/// Largest supported `2j`.
pub const MAX_TWICE_J: u32 = 200;

/// Roundoff floor below which a negative variance is clamped to zero.
pub const VARIANCE_ROUNDOFF: f64 = 1e-12;

const HERMITIAN_TOL: f64 = 1e-12;

/// The `(2j + 1)`-dimensional space of a spin `j`, with `j` held as `2j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SpinSpace {
    twice_j: u32,
}

impl SpinSpace {
    pub fn new(twice_j: u32) -> Result<Self> {
        if twice_j > MAX_TWICE_J {
            return Err(SpinError::Precondition(format!(
                "twice_j = {twice_j} exceeds the supported maximum {MAX_TWICE_J}"
            )));
        }
        Ok(Self { twice_j })
    }

    pub fn twice_j(&self) -> u32 {
        self.twice_j
    }

    pub fn j(&self) -> f64 {
        f64::from(self.twice_j) / 2.0
    }

    pub fn dimension(&self) -> usize {
        self.twice_j as usize + 1
    }

    pub fn is_half_integer(&self) -> bool {
        self.twice_j % 2 == 1
    }

    fn check_same(&self, other: &SpinSpace) -> Result<()> {
        if self.twice_j == other.twice_j {
            Ok(())
        } else {
            Err(SpinError::SpaceMismatch {
                left: self.twice_j,
                right: other.twice_j,
            })
        }
    }
}

/// A normalized pure state, amplitudes indexed by `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinState {
    space: SpinSpace,
    amplitudes: DVector<Complex64>,
}

impl SpinState {
    /// Normalizes `amplitudes` and wraps them. Fails on wrong length or a
    /// zero (or non-finite) norm.
    pub fn from_amplitudes(space: SpinSpace, amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.len() != space.dimension() {
            return Err(SpinError::LengthMismatch {
                expected: space.dimension(),
                got: amplitudes.len(),
            });
        }
        let mut amplitudes = DVector::from_vec(amplitudes);
        let norm = amplitudes.norm();
        if !(norm.is_finite() && norm > 0.0) {
            return Err(SpinError::ZeroNorm);
        }
        amplitudes.unscale_mut(norm);
        Ok(Self { space, amplitudes })
    }

    pub fn space(&self) -> SpinSpace {
        self.space
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        self.amplitudes.as_slice()
    }

    pub fn amplitude(&self, n: usize) -> Complex64 {
        self.amplitudes[n]
    }

    /// `|c_n|²` for every `n`.
    pub fn probabilities(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|c| c.norm_sqr()).collect()
    }

    /// Wraps amplitudes already known to be normalized, e.g. the image of a
    /// normalized state under a unitary map.
    pub(crate) fn from_normalized(space: SpinSpace, amplitudes: Vec<Complex64>) -> Self {
        debug_assert_eq!(amplitudes.len(), space.dimension());
        Self {
            space,
            amplitudes: DVector::from_vec(amplitudes),
        }
    }
}

/// `|n⟩`, the eigenstate of `N` with eigenvalue `n`.
pub fn number_state(space: SpinSpace, n: i64) -> Result<SpinState> {
    if n < 0 || n > i64::from(space.twice_j) {
        return Err(SpinError::IndexOutOfRange {
            n,
            twice_j: space.twice_j,
        });
    }
    let mut amplitudes = vec![Complex64::new(0.0, 0.0); space.dimension()];
    amplitudes[n as usize] = Complex64::new(1.0, 0.0);
    Ok(SpinState {
        space,
        amplitudes: DVector::from_vec(amplitudes),
    })
}

/// Dense operator on a [`SpinSpace`].
///
/// Arithmetic through `+`, `-` and `*` panics when the two sides live on
/// different spaces; [`apply`], [`expectation`] and friends report it as an
/// error instead.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinOperator {
    space: SpinSpace,
    matrix: DMatrix<Complex64>,
}

impl SpinOperator {
    pub fn from_matrix(space: SpinSpace, matrix: DMatrix<Complex64>) -> Result<Self> {
        let dim = space.dimension();
        if matrix.nrows() != dim || matrix.ncols() != dim {
            return Err(SpinError::LengthMismatch {
                expected: dim,
                got: matrix.nrows().max(matrix.ncols()),
            });
        }
        Ok(Self { space, matrix })
    }

    pub fn identity(space: SpinSpace) -> Self {
        let dim = space.dimension();
        Self {
            space,
            matrix: DMatrix::identity(dim, dim),
        }
    }

    fn diagonal(space: SpinSpace, f: impl Fn(usize) -> f64) -> Self {
        let dim = space.dimension();
        let diag = DVector::from_fn(dim, |n, _| Complex64::new(f(n), 0.0));
        Self {
            space,
            matrix: DMatrix::from_diagonal(&diag),
        }
    }

    pub fn space(&self) -> SpinSpace {
        self.space
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.matrix[(row, col)]
    }

    pub fn adjoint(&self) -> Self {
        Self {
            space: self.space,
            matrix: self.matrix.adjoint(),
        }
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            space: self.space,
            matrix: &self.matrix * factor,
        }
    }

    /// `self^k`, with `self^0` the identity.
    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(self.space), |acc, _| &acc * self)
    }

    pub fn is_hermitian(&self) -> bool {
        let scale = self.matrix.iter().map(|z| z.norm()).fold(1.0, f64::max);
        let dim = self.space.dimension();
        (0..dim).all(|a| {
            (a..dim).all(|b| {
                (self.matrix[(a, b)] - self.matrix[(b, a)].conj()).norm() <= HERMITIAN_TOL * scale
            })
        })
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &SpinOperator) -> Result<f64> {
        self.space.check_same(&other.space)?;
        Ok((&self.matrix - &other.matrix)
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max))
    }
}

impl Mul for &SpinOperator {
    type Output = SpinOperator;

    fn mul(self, rhs: &SpinOperator) -> SpinOperator {
        assert_eq!(self.space, rhs.space, "operator spaces differ");
        SpinOperator {
            space: self.space,
            matrix: &self.matrix * &rhs.matrix,
        }
    }
}

impl Add for &SpinOperator {
    type Output = SpinOperator;

    fn add(self, rhs: &SpinOperator) -> SpinOperator {
        assert_eq!(self.space, rhs.space, "operator spaces differ");
        SpinOperator {
            space: self.space,
            matrix: &self.matrix + &rhs.matrix,
        }
    }
}

impl Sub for &SpinOperator {
    type Output = SpinOperator;

    fn sub(self, rhs: &SpinOperator) -> SpinOperator {
        assert_eq!(self.space, rhs.space, "operator spaces differ");
        SpinOperator {
            space: self.space,
            matrix: &self.matrix - &rhs.matrix,
        }
    }
}

/// Lowering operator: `J₋|n⟩ = √(n(2j − n + 1)) |n − 1⟩`.
pub fn op_jminus(space: SpinSpace) -> SpinOperator {
    let dim = space.dimension();
    let twice_j = f64::from(space.twice_j);
    let mut matrix = DMatrix::zeros(dim, dim);
    for n in 1..dim {
        let nf = n as f64;
        matrix[(n - 1, n)] = Complex64::new((nf * (twice_j - nf + 1.0)).sqrt(), 0.0);
    }
    SpinOperator { space, matrix }
}

pub fn op_jplus(space: SpinSpace) -> SpinOperator {
    op_jminus(space).adjoint()
}

/// `N = Jz + j`, diagonal with entries `0..=2j`.
pub fn op_number(space: SpinSpace) -> SpinOperator {
    SpinOperator::diagonal(space, |n| n as f64)
}

pub fn op_jz(space: SpinSpace) -> SpinOperator {
    let j = space.j();
    SpinOperator::diagonal(space, |n| n as f64 - j)
}

/// `(J₊ + J₋) / 2`
pub fn op_jx(space: SpinSpace) -> SpinOperator {
    (&op_jplus(space) + &op_jminus(space)).scale(Complex64::new(0.5, 0.0))
}

/// `(J₊ − J₋) / 2i`
pub fn op_jy(space: SpinSpace) -> SpinOperator {
    (&op_jplus(space) - &op_jminus(space)).scale(Complex64::new(0.0, -0.5))
}

/// `x Jx + y Jy + z Jz` for an arbitrary real direction.
pub fn op_along(space: SpinSpace, direction: [f64; 3]) -> SpinOperator {
    let [x, y, z] = direction;
    let jx = op_jx(space).scale(Complex64::new(x, 0.0));
    let jy = op_jy(space).scale(Complex64::new(y, 0.0));
    let jz = op_jz(space).scale(Complex64::new(z, 0.0));
    &(&jx + &jy) + &jz
}

/// Matrix-vector product, no renormalization.
pub fn apply(op: &SpinOperator, state: &SpinState) -> Result<DVector<Complex64>> {
    op.space.check_same(&state.space)?;
    Ok(&op.matrix * &state.amplitudes)
}

/// `⟨s1|s2⟩`, conjugate-linear in `s1`.
pub fn inner(s1: &SpinState, s2: &SpinState) -> Result<Complex64> {
    s1.space.check_same(&s2.space)?;
    Ok(s1.amplitudes.dotc(&s2.amplitudes))
}

/// `⟨ψ|op|ψ⟩`.
pub fn expectation(state: &SpinState, op: &SpinOperator) -> Result<Complex64> {
    let image = apply(op, state)?;
    Ok(state.amplitudes.dotc(&image))
}

/// `⟨op²⟩ − ⟨op⟩²` for Hermitian `op`, clamped at zero when the deficit is
/// within roundoff.
pub fn variance(state: &SpinState, op: &SpinOperator) -> Result<f64> {
    if !op.is_hermitian() {
        return Err(SpinError::NotHermitian);
    }
    let image = apply(op, state)?;
    // For Hermitian op, ⟨op²⟩ = ‖op ψ‖².
    let second = image.norm_squared();
    let first = state.amplitudes.dotc(&image).re;
    clamp_variance(second - first * first)
}

pub(crate) fn clamp_variance(value: f64) -> Result<f64> {
    if value >= 0.0 {
        Ok(value)
    } else if value >= -VARIANCE_ROUNDOFF {
        Ok(0.0)
    } else {
        Err(SpinError::NegativeVariance { value })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(twice_j: u32) -> SpinSpace {
        SpinSpace::new(twice_j).unwrap()
    }

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn number_state_basis_vector() {
        let s = number_state(space(2), 0).unwrap();
        assert_eq!(s.amplitudes(), &[c(1.0), c(0.0), c(0.0)]);
    }

    #[test]
    fn number_state_is_eigenstate() {
        let sp = space(6);
        let s = number_state(sp, 4).unwrap();
        let n = expectation(&s, &op_number(sp)).unwrap();
        assert_eq!(n, c(4.0));
    }

    #[test]
    fn number_state_out_of_range() {
        assert_eq!(
            number_state(space(5), 6),
            Err(SpinError::IndexOutOfRange { n: 6, twice_j: 5 })
        );
        assert!(number_state(space(5), -1).is_err());
    }

    #[test]
    fn space_limits() {
        assert!(SpinSpace::new(MAX_TWICE_J).is_ok());
        assert!(SpinSpace::new(MAX_TWICE_J + 1).is_err());
        assert_eq!(space(0).dimension(), 1);
        assert!(space(5).is_half_integer());
        assert_eq!(space(5).j(), 2.5);
    }

    #[test]
    fn jminus_spin_half_is_pauli_lowering() {
        let m = op_jminus(space(1));
        assert_eq!(m.entry(0, 1), c(1.0));
        assert_eq!(m.entry(1, 0), c(0.0));
        assert_eq!(m.entry(0, 0), c(0.0));
        assert_eq!(m.entry(1, 1), c(0.0));
    }

    #[test]
    fn jminus_spin_one() {
        let sp = space(2);
        let m = op_jminus(sp);
        let two = apply(&m, &number_state(sp, 2).unwrap()).unwrap();
        let one = apply(&m, &number_state(sp, 1).unwrap()).unwrap();
        let r2 = 2f64.sqrt();
        assert!((two[1] - c(r2)).norm() < 1e-15 && two[0].norm() == 0.0 && two[2].norm() == 0.0);
        assert!((one[0] - c(r2)).norm() < 1e-15 && one[1].norm() == 0.0);
    }

    #[test]
    fn jplus_is_exact_adjoint() {
        for tj in 0..=20 {
            let sp = space(tj);
            assert_eq!(op_jplus(sp), op_jminus(sp).adjoint());
        }
    }

    #[test]
    fn jz_is_number_minus_j() {
        let sp = space(7);
        let shifted = &op_number(sp) - &SpinOperator::identity(sp).scale(c(sp.j()));
        assert_eq!(op_jz(sp).max_abs_diff(&shifted).unwrap(), 0.0);
    }

    #[test]
    fn su2_commutators() {
        let i = Complex64::new(0.0, 1.0);
        for tj in 0..=60 {
            let sp = space(tj);
            let (x, y, z) = (op_jx(sp), op_jy(sp), op_jz(sp));
            let xy = &(&x * &y) - &(&y * &x);
            let yz = &(&y * &z) - &(&z * &y);
            let zx = &(&z * &x) - &(&x * &z);
            assert!(xy.max_abs_diff(&z.scale(i)).unwrap() < 1e-12, "tj={tj}");
            assert!(yz.max_abs_diff(&x.scale(i)).unwrap() < 1e-12, "tj={tj}");
            assert!(zx.max_abs_diff(&y.scale(i)).unwrap() < 1e-12, "tj={tj}");
        }
    }

    #[test]
    fn casimir_is_scalar() {
        for tj in 0..=60 {
            let sp = space(tj);
            let (x, y, z) = (op_jx(sp), op_jy(sp), op_jz(sp));
            let casimir = &(&(&x * &x) + &(&y * &y)) + &(&z * &z);
            let j = sp.j();
            let expected = SpinOperator::identity(sp).scale(c(j * (j + 1.0)));
            assert!(casimir.max_abs_diff(&expected).unwrap() < 1e-10, "tj={tj}");
        }
    }

    #[test]
    fn hermitian_constructors_are_exact() {
        for tj in 0..=30 {
            let sp = space(tj);
            for op in [op_jx(sp), op_jy(sp), op_jz(sp), op_number(sp)] {
                let dim = sp.dimension();
                for a in 0..dim {
                    for b in 0..dim {
                        assert_eq!(op.entry(a, b), op.entry(b, a).conj());
                    }
                }
            }
        }
    }

    #[test]
    fn apply_examples() {
        let sp = space(4);
        let s = SpinState::from_amplitudes(
            sp,
            vec![c(1.0), c(-2.0), Complex64::new(0.5, 3.0), c(0.0), c(1.0)],
        )
        .unwrap();
        let same = apply(&SpinOperator::identity(sp), &s).unwrap();
        assert_eq!(same.as_slice(), s.amplitudes());

        let three = number_state(sp, 3).unwrap();
        let scaled = apply(&op_number(sp), &three).unwrap();
        assert_eq!(scaled[3], c(3.0));

        let bottom = number_state(sp, 0).unwrap();
        assert!(apply(&op_jminus(sp), &bottom)
            .unwrap()
            .iter()
            .all(|z| z.norm() == 0.0));
    }

    #[test]
    fn space_mismatch_is_reported() {
        let a = number_state(space(2), 0).unwrap();
        let b = number_state(space(3), 0).unwrap();
        assert_eq!(
            inner(&a, &b),
            Err(SpinError::SpaceMismatch { left: 2, right: 3 })
        );
        assert!(apply(&op_jz(space(3)), &a).is_err());
        assert!(expectation(&a, &op_jz(space(3))).is_err());
    }

    #[test]
    fn expectation_examples() {
        let sp = space(2);
        let bottom = number_state(sp, 0).unwrap();
        assert_eq!(expectation(&bottom, &op_jz(sp)).unwrap(), c(-1.0));
        for n in 0..=2 {
            let s = number_state(sp, n).unwrap();
            assert_eq!(variance(&s, &op_jz(sp)).unwrap(), 0.0);
        }
    }

    #[test]
    fn casimir_expectation_spin_three() {
        let sp = space(6);
        let s = SpinState::from_amplitudes(
            sp,
            (0..7)
                .map(|n| Complex64::new(n as f64 - 2.5, 0.3 * n as f64))
                .collect(),
        )
        .unwrap();
        let (x, y, z) = (op_jx(sp), op_jy(sp), op_jz(sp));
        let casimir = &(&(&x * &x) + &(&y * &y)) + &(&z * &z);
        let value = expectation(&s, &casimir).unwrap();
        assert!((value - c(12.0)).norm() < 1e-10);
    }

    #[test]
    fn variance_rejects_non_hermitian() {
        let sp = space(3);
        let s = number_state(sp, 1).unwrap();
        assert_eq!(variance(&s, &op_jminus(sp)), Err(SpinError::NotHermitian));
    }

    #[test]
    fn clamp_policy() {
        assert_eq!(clamp_variance(-1e-13), Ok(0.0));
        assert_eq!(clamp_variance(0.25), Ok(0.25));
        assert!(matches!(
            clamp_variance(-1e-6),
            Err(SpinError::NegativeVariance { .. })
        ));
    }

    #[test]
    fn zero_vector_rejected() {
        assert_eq!(
            SpinState::from_amplitudes(space(1), vec![c(0.0), c(0.0)]),
            Err(SpinError::ZeroNorm)
        );
        assert!(matches!(
            SpinState::from_amplitudes(space(1), vec![c(1.0)]),
            Err(SpinError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn pow_matches_repeated_product() {
        let sp = space(5);
        let m = op_jminus(sp);
        assert_eq!(m.pow(0), SpinOperator::identity(sp));
        assert_eq!(m.pow(2), &m * &m);
    }
}
