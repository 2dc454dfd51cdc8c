//! Fixed-size complex linear algebra for one and two qubits.
//!
//! Vectors and matrices carry their dimension in the type, so a `Vec2` can
//! never be paired with a `Mat4`. Basis order is `|0⟩, |1⟩` for a single
//! qubit and `|00⟩, |01⟩, |10⟩, |11⟩` for two qubits; the component of
//! `|ab⟩` sits at index `2a + b`.

use std::f64::consts::FRAC_1_SQRT_2;
use std::ops::{Add, Index, Mul, Neg, Sub};

pub use num_complex::Complex64 as C64;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

/// Column vector of `N` complex amplitudes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vector<const N: usize>([C64; N]);

pub type Vec2 = Vector<2>;
pub type Vec4 = Vector<4>;

impl<const N: usize> Vector<N> {
    pub const fn new(components: [C64; N]) -> Self {
        Self(components)
    }

    pub fn from_real(components: [f64; N]) -> Self {
        Self(components.map(|x| C64::new(x, 0.0)))
    }

    /// Computational basis vector `|index⟩`.
    pub fn basis(index: usize) -> Self {
        assert!(
            index < N,
            "basis index {index} out of range for dimension {N}"
        );
        let mut c = [ZERO; N];
        c[index] = ONE;
        Self(c)
    }

    pub fn components(&self) -> &[C64; N] {
        &self.0
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn scale(&self, factor: C64) -> Self {
        Self(self.0.map(|z| z * factor))
    }

    /// Largest componentwise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

impl<const N: usize> Index<usize> for Vector<N> {
    type Output = C64;

    fn index(&self, i: usize) -> &C64 {
        &self.0[i]
    }
}

impl<const N: usize> Add for Vector<N> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self(std::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }
}

impl<const N: usize> Sub for Vector<N> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Self(std::array::from_fn(|i| self.0[i] - rhs.0[i]))
    }
}

/// `⟨u|v⟩`, conjugate-linear in `u` and linear in `v`.
pub fn inner<const N: usize>(u: &Vector<N>, v: &Vector<N>) -> C64 {
    u.0.iter().zip(v.0.iter()).map(|(a, b)| a.conj() * b).sum()
}

/// `|uv⟩ = |u⟩ ⊗ |v⟩`.
pub fn tensor_vec(u: &Vec2, v: &Vec2) -> Vec4 {
    Vector(std::array::from_fn(|i| u.0[i / 2] * v.0[i % 2]))
}

/// Square `N × N` complex matrix, stored row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix<const N: usize>([[C64; N]; N]);

pub type Mat2 = Matrix<2>;
pub type Mat4 = Matrix<4>;

impl<const N: usize> Matrix<N> {
    pub const fn new(entries: [[C64; N]; N]) -> Self {
        Self(entries)
    }

    pub fn from_real(entries: [[f64; N]; N]) -> Self {
        Self(entries.map(|row| row.map(|x| C64::new(x, 0.0))))
    }

    pub fn zero() -> Self {
        Self([[ZERO; N]; N])
    }

    pub fn identity() -> Self {
        Self(std::array::from_fn(|r| {
            std::array::from_fn(|c| if r == c { ONE } else { ZERO })
        }))
    }

    pub fn entries(&self) -> &[[C64; N]; N] {
        &self.0
    }

    pub fn trace(&self) -> C64 {
        (0..N).map(|i| self.0[i][i]).sum()
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self(std::array::from_fn(|r| {
            std::array::from_fn(|c| self.0[c][r].conj())
        }))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn apply(&self, v: &Vector<N>) -> Vector<N> {
        Vector(std::array::from_fn(|r| {
            (0..N).map(|c| self.0[r][c] * v.0[c]).sum()
        }))
    }

    pub fn scale(&self, factor: C64) -> Self {
        Self(self.0.map(|row| row.map(|z| z * factor)))
    }

    /// `self·other − other·self`.
    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.max_abs_diff(&self.adjoint()) <= tol
    }

    pub fn is_finite(&self) -> bool {
        self.0
            .iter()
            .flatten()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.0
            .iter()
            .flatten()
            .zip(other.0.iter().flatten())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

impl<const N: usize> Index<(usize, usize)> for Matrix<N> {
    type Output = C64;

    fn index(&self, (r, c): (usize, usize)) -> &C64 {
        &self.0[r][c]
    }
}

impl<const N: usize> Mul for Matrix<N> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        Self(std::array::from_fn(|r| {
            std::array::from_fn(|c| (0..N).map(|k| self.0[r][k] * rhs.0[k][c]).sum())
        }))
    }
}

impl<const N: usize> Mul<Vector<N>> for Matrix<N> {
    type Output = Vector<N>;

    fn mul(self, rhs: Vector<N>) -> Vector<N> {
        self.apply(&rhs)
    }
}

impl<const N: usize> Add for Matrix<N> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self(std::array::from_fn(|r| {
            std::array::from_fn(|c| self.0[r][c] + rhs.0[r][c])
        }))
    }
}

impl<const N: usize> Sub for Matrix<N> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Self(std::array::from_fn(|r| {
            std::array::from_fn(|c| self.0[r][c] - rhs.0[r][c])
        }))
    }
}

impl<const N: usize> Neg for Matrix<N> {
    type Output = Self;

    fn neg(self) -> Self {
        Self(self.0.map(|row| row.map(|z| -z)))
    }
}

/// Kronecker product `a ⊗ b` in the fixed two-qubit basis order.
pub fn tensor_mat(a: &Mat2, b: &Mat2) -> Mat4 {
    Matrix(std::array::from_fn(|r| {
        std::array::from_fn(|c| a.0[r / 2][c / 2] * b.0[r % 2][c % 2])
    }))
}

pub fn sigma1() -> Mat2 {
    Matrix::from_real([[0.0, 1.0], [1.0, 0.0]])
}

pub fn sigma2() -> Mat2 {
    Matrix([[ZERO, -I], [I, ZERO]])
}

pub fn sigma3() -> Mat2 {
    Matrix::from_real([[1.0, 0.0], [0.0, -1.0]])
}

pub fn hadamard() -> Mat2 {
    Matrix::from_real([
        [FRAC_1_SQRT_2, FRAC_1_SQRT_2],
        [FRAC_1_SQRT_2, -FRAC_1_SQRT_2],
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const EXACT: f64 = 1e-14;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn vec2() -> impl Strategy<Value = Vec2> {
        prop::array::uniform4(-1.0f64..1.0)
            .prop_map(|x| Vector::new([c(x[0], x[1]), c(x[2], x[3])]))
    }

    fn vec4() -> impl Strategy<Value = Vec4> {
        prop::array::uniform8(-1.0f64..1.0)
            .prop_map(|x| Vector::new([c(x[0], x[1]), c(x[2], x[3]), c(x[4], x[5]), c(x[6], x[7])]))
    }

    fn mat2() -> impl Strategy<Value = Mat2> {
        prop::array::uniform8(-1.0f64..1.0).prop_map(|x| {
            Matrix::new([
                [c(x[0], x[1]), c(x[2], x[3])],
                [c(x[4], x[5]), c(x[6], x[7])],
            ])
        })
    }

    fn mat4() -> impl Strategy<Value = Mat4> {
        prop::array::uniform32(-1.0f64..1.0).prop_map(|x| {
            Matrix::new(std::array::from_fn(|r| {
                std::array::from_fn(|col| c(x[8 * r + 2 * col], x[8 * r + 2 * col + 1]))
            }))
        })
    }

    #[test]
    fn inner_on_basis_and_conjugation() {
        let (k0, k1) = (Vec2::basis(0), Vec2::basis(1));
        assert_eq!(inner(&k0, &k0), ONE);
        assert_eq!(inner(&k0, &k1), ZERO);
        let u = Vector::new([I, ZERO]);
        assert_eq!(inner(&u, &k0), -I);
    }

    #[test]
    fn tensor_vec_basis_products() {
        let (k0, k1) = (Vec2::basis(0), Vec2::basis(1));
        assert_eq!(tensor_vec(&k0, &k1), Vec4::basis(1));
        assert_eq!(tensor_vec(&k1, &k1), Vec4::basis(3));
        let plus = Vec2::from_real([FRAC_1_SQRT_2, FRAC_1_SQRT_2]);
        let expected = Vec4::from_real([FRAC_1_SQRT_2, 0.0, FRAC_1_SQRT_2, 0.0]);
        assert!(tensor_vec(&plus, &k0).max_abs_diff(&expected) <= EXACT);
    }

    #[test]
    fn kronecker_of_sigma3_with_identity() {
        let id = Mat2::identity();
        assert_eq!(tensor_mat(&id, &id), Mat4::identity());

        let diag = |d: [f64; 4]| {
            Mat4::from_real(std::array::from_fn(|r| {
                std::array::from_fn(|col| if r == col { d[r] } else { 0.0 })
            }))
        };
        assert_eq!(tensor_mat(&sigma3(), &id), diag([1.0, 1.0, -1.0, -1.0]));
        assert_eq!(tensor_mat(&id, &sigma3()), diag([1.0, -1.0, 1.0, -1.0]));
    }

    #[test]
    fn plumbing_examples() {
        assert_eq!(sigma1().apply(&Vec2::basis(0)), Vec2::basis(1));
        assert_eq!(sigma2().adjoint(), sigma2());
        assert_eq!(Mat2::zero().frobenius_norm(), 0.0);
        // [σ1, σ2] = 2iσ3
        let comm = sigma1().commutator(&sigma2());
        assert!(comm.max_abs_diff(&sigma3().scale(c(0.0, 2.0))) <= EXACT);
        assert!((comm.frobenius_norm() - 2.0 * 2f64.sqrt()).abs() <= EXACT);
    }

    #[test]
    fn pauli_and_hadamard_are_involutions() {
        for m in [sigma1(), sigma2(), sigma3(), hadamard()] {
            assert!(m.is_hermitian(0.0));
            assert!((m * m).max_abs_diff(&Mat2::identity()) <= EXACT);
        }
    }

    proptest! {
        #[test]
        fn inner_is_positive_and_cauchy_schwarz(u in vec4(), v in vec4()) {
            let uu = inner(&u, &u);
            prop_assert!(uu.im.abs() <= EXACT);
            prop_assert!(uu.re >= 0.0);
            let vv = inner(&v, &v).re;
            prop_assert!(inner(&u, &v).norm_sqr() <= uu.re * vv * (1.0 + 1e-12) + 1e-300);
        }

        #[test]
        fn kronecker_mixed_product(a in mat2(), b in mat2(), u in vec2(), v in vec2()) {
            let lhs = tensor_mat(&a, &b).apply(&tensor_vec(&u, &v));
            let rhs = tensor_vec(&a.apply(&u), &b.apply(&v));
            prop_assert!(lhs.max_abs_diff(&rhs) <= EXACT);
        }

        #[test]
        fn adjoint_is_an_involution(m in mat4()) {
            prop_assert_eq!(m.adjoint().adjoint(), m);
        }

        #[test]
        fn multiplication_is_associative(a in mat4(), b in mat4(), m in mat4()) {
            prop_assert!(((a * b) * m).max_abs_diff(&(a * (b * m))) <= 1e-13);
        }
    }
}
