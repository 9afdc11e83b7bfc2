//! Quaternion scalars, pixel fields, dense quaternion matrices and the
//! structured real-counterpart mapping they all share.
//!
//! A quaternion `a0 + a1 i + a2 j + a3 k` is stored as four reals. Fields
//! keep the four components as planar arrays so that every quaternion
//! convolution reduces to real convolutions on planes. The real counterpart
//! of a quaternion matrix `A = A0 + A1 i + A2 j + A3 k` is the 4x4-block
//! real matrix
//!
//! ```text
//!   [ A0 -A1 -A2 -A3 ]
//!   [ A1  A0 -A3  A2 ]
//!   [ A2  A3  A0 -A1 ]
//!   [ A3 -A2  A1  A0 ]
//! ```
//!
//! which turns quaternion products into real products. Matrices of exactly
//! this block pattern are the JRS-symmetric ones: they commute with the
//! structure matrices built from `i`, `j` and `k` (see [`structure_matrix`]).

use ndarray::{s, Array1, Array2};
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum QcoreError {
    #[error("vector length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("matrix is not 4n x 4m block structured: dims {rows}x{cols}")]
    BadBlockDims { rows: usize, cols: usize },
    #[error("matrix violates the quaternion block pattern (max deviation {max_deviation:.3e}, tolerance {tolerance:.3e})")]
    NotQuaternionStructured { max_deviation: f64, tolerance: f64 },
    #[error("cannot invert the zero quaternion")]
    ZeroInverse,
}

/// Absolute tolerance for structural checks on unit-scale data.
pub const STRUCTURE_TOL: f64 = 1e-12;

// ---------------------------------------------------------------------------
// Scalars
// ---------------------------------------------------------------------------

/// A quaternion scalar `a0 + a1 i + a2 j + a3 k`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion {
    pub a0: f64,
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
}

impl Quaternion {
    pub const fn new(a0: f64, a1: f64, a2: f64, a3: f64) -> Self {
        Self { a0, a1, a2, a3 }
    }

    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Self = Self::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Self = Self::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Self = Self::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Self = Self::new(0.0, 0.0, 0.0, 1.0);

    pub fn conj(self) -> Self {
        Self::new(self.a0, -self.a1, -self.a2, -self.a3)
    }

    pub fn norm_sqr(self) -> f64 {
        self.a0 * self.a0 + self.a1 * self.a1 + self.a2 * self.a2 + self.a3 * self.a3
    }

    pub fn norm(self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Multiplicative inverse `conj(q) / |q|^2`; the zero quaternion has none.
    pub fn inverse(self) -> Result<Self, QcoreError> {
        let n2 = self.norm_sqr();
        if n2 == 0.0 {
            return Err(QcoreError::ZeroInverse);
        }
        Ok(self.conj().scale(1.0 / n2))
    }

    pub fn scale(self, c: f64) -> Self {
        Self::new(self.a0 * c, self.a1 * c, self.a2 * c, self.a3 * c)
    }

    pub fn is_finite(self) -> bool {
        self.a0.is_finite() && self.a1.is_finite() && self.a2.is_finite() && self.a3.is_finite()
    }
}

impl std::ops::Add for Quaternion {
    type Output = Self;
    fn add(self, r: Self) -> Self {
        Self::new(self.a0 + r.a0, self.a1 + r.a1, self.a2 + r.a2, self.a3 + r.a3)
    }
}

impl std::ops::Sub for Quaternion {
    type Output = Self;
    fn sub(self, r: Self) -> Self {
        Self::new(self.a0 - r.a0, self.a1 - r.a1, self.a2 - r.a2, self.a3 - r.a3)
    }
}

impl std::ops::Neg for Quaternion {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a0, -self.a1, -self.a2, -self.a3)
    }
}

/// Hamilton product. Not commutative: `I * J == K` but `J * I == -K`.
impl std::ops::Mul for Quaternion {
    type Output = Self;
    fn mul(self, r: Self) -> Self {
        let (p0, p1, p2, p3) = (self.a0, self.a1, self.a2, self.a3);
        let (q0, q1, q2, q3) = (r.a0, r.a1, r.a2, r.a3);
        Self::new(
            p0 * q0 - p1 * q1 - p2 * q2 - p3 * q3,
            p0 * q1 + p1 * q0 + p2 * q3 - p3 * q2,
            p0 * q2 - p1 * q3 + p2 * q0 + p3 * q1,
            p0 * q3 + p1 * q2 - p2 * q1 + p3 * q0,
        )
    }
}

// ---------------------------------------------------------------------------
// Pixel fields
// ---------------------------------------------------------------------------

/// A quaternion-valued pixel grid stored as four planar real channels.
///
/// Plane 0 holds the real part; planes 1..4 hold the i/j/k parts. For a
/// color image embedded as a pure quaternion field the real plane is zero
/// and i/j/k carry R/G/B.
#[derive(Debug, Clone, PartialEq)]
pub struct QField {
    planes: [Array2<f64>; 4],
}

impl QField {
    pub fn zeros(height: usize, width: usize) -> Self {
        Self {
            planes: std::array::from_fn(|_| Array2::zeros((height, width))),
        }
    }

    /// Builds a field from four equally sized planes. Panics on dim mismatch.
    pub fn from_planes(planes: [Array2<f64>; 4]) -> Self {
        let dim = planes[0].dim();
        assert!(
            planes.iter().all(|p| p.dim() == dim),
            "all planes must share dimensions"
        );
        Self { planes }
    }

    pub fn height(&self) -> usize {
        self.planes[0].nrows()
    }

    pub fn width(&self) -> usize {
        self.planes[0].ncols()
    }

    pub fn dim(&self) -> (usize, usize) {
        self.planes[0].dim()
    }

    pub fn len(&self) -> usize {
        self.planes[0].len()
    }

    pub fn is_empty(&self) -> bool {
        self.planes[0].is_empty()
    }

    pub fn plane(&self, c: usize) -> &Array2<f64> {
        &self.planes[c]
    }

    pub fn plane_mut(&mut self, c: usize) -> &mut Array2<f64> {
        &mut self.planes[c]
    }

    pub fn planes(&self) -> &[Array2<f64>; 4] {
        &self.planes
    }

    pub fn get(&self, row: usize, col: usize) -> Quaternion {
        Quaternion::new(
            self.planes[0][[row, col]],
            self.planes[1][[row, col]],
            self.planes[2][[row, col]],
            self.planes[3][[row, col]],
        )
    }

    pub fn set(&mut self, row: usize, col: usize, q: Quaternion) {
        self.planes[0][[row, col]] = q.a0;
        self.planes[1][[row, col]] = q.a1;
        self.planes[2][[row, col]] = q.a2;
        self.planes[3][[row, col]] = q.a3;
    }

    pub fn is_all_finite(&self) -> bool {
        self.planes.iter().all(|p| p.iter().all(|v| v.is_finite()))
    }

    /// Squared 2-norm over all entries, `sum |q_i|^2`.
    pub fn norm_sqr(&self) -> f64 {
        self.planes
            .iter()
            .map(|p| p.iter().map(|v| v * v).sum::<f64>())
            .sum()
    }

    pub fn norm2(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// F-norm of the real plane alone; diagnostic for "how pure" a field is.
    pub fn real_part_norm(&self) -> f64 {
        self.planes[0].iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// Real inner product `sum Re(conj(x_i) y_i)`. Panics on dim mismatch;
    /// use [`qdot`] for the checked variant.
    pub fn dot(&self, other: &Self) -> f64 {
        debug_assert_eq!(self.dim(), other.dim());
        self.planes
            .iter()
            .zip(other.planes.iter())
            .map(|(a, b)| a.iter().zip(b.iter()).map(|(x, y)| x * y).sum::<f64>())
            .sum()
    }

    /// `self += c * other`
    pub fn axpy(&mut self, c: f64, other: &Self) {
        for (p, q) in self.planes.iter_mut().zip(other.planes.iter()) {
            p.zip_mut_with(q, |a, &b| *a += c * b);
        }
    }

    /// `self = other + c * self` (the CG direction update)
    pub fn xpay(&mut self, other: &Self, c: f64) {
        for (p, q) in self.planes.iter_mut().zip(other.planes.iter()) {
            p.zip_mut_with(q, |a, &b| *a = b + c * *a);
        }
    }

    pub fn scale_in_place(&mut self, c: f64) {
        for p in self.planes.iter_mut() {
            p.mapv_inplace(|v| v * c);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.axpy(1.0, other);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.axpy(-1.0, other);
        out
    }

    pub fn scaled(&self, c: f64) -> Self {
        let mut out = self.clone();
        out.scale_in_place(c);
        out
    }

    /// Flattens to a column quaternion matrix (row-major pixel order).
    pub fn to_column_matrix(&self) -> QMatrix {
        let n = self.len();
        let comps = std::array::from_fn(|c| {
            Array2::from_shape_vec((n, 1), self.planes[c].iter().copied().collect()).unwrap()
        });
        QMatrix::from_components(comps)
    }

    /// Inverse of [`Self::to_column_matrix`] for a given grid shape.
    pub fn from_column_matrix(m: &QMatrix, height: usize, width: usize) -> Self {
        assert_eq!(m.nrows(), height * width);
        assert_eq!(m.ncols(), 1);
        let planes = std::array::from_fn(|c| {
            Array2::from_shape_vec((height, width), m.component(c).iter().copied().collect())
                .unwrap()
        });
        Self::from_planes(planes)
    }
}

/// Checked real inner product of two quaternion fields viewed as vectors.
pub fn qdot(x: &QField, y: &QField) -> Result<f64, QcoreError> {
    if x.dim() != y.dim() {
        return Err(QcoreError::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    Ok(x.dot(y))
}

/// Norm selector for [`qnorm`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Norm {
    /// Sum of entry moduli.
    L1,
    /// Euclidean norm of entry moduli.
    L2,
    /// Frobenius norm; coincides with L2 on vectors/fields.
    Fro,
}

/// Entrywise p-norm of a quaternion field viewed as a vector.
pub fn qnorm(v: &QField, p: Norm) -> f64 {
    match p {
        Norm::L1 => {
            let mut acc = 0.0;
            let [p0, p1, p2, p3] = v.planes();
            for (((a, b), c), d) in p0.iter().zip(p1).zip(p2).zip(p3) {
                acc += (a * a + b * b + c * c + d * d).sqrt();
            }
            acc
        }
        Norm::L2 | Norm::Fro => v.norm2(),
    }
}

// ---------------------------------------------------------------------------
// Dense quaternion matrices
// ---------------------------------------------------------------------------

/// A dense quaternion matrix stored as four real component matrices.
///
/// Dense matrices are used for the small structural checks and oracle
/// solves; the image operators never materialize them.
#[derive(Debug, Clone, PartialEq)]
pub struct QMatrix {
    comps: [Array2<f64>; 4],
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            comps: std::array::from_fn(|_| Array2::zeros((rows, cols))),
        }
    }

    pub fn from_components(comps: [Array2<f64>; 4]) -> Self {
        let dim = comps[0].dim();
        assert!(comps.iter().all(|c| c.dim() == dim));
        Self { comps }
    }

    pub fn from_scalar(q: Quaternion) -> Self {
        Self::from_components([
            Array2::from_elem((1, 1), q.a0),
            Array2::from_elem((1, 1), q.a1),
            Array2::from_elem((1, 1), q.a2),
            Array2::from_elem((1, 1), q.a3),
        ])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.comps[0][[i, i]] = 1.0;
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.comps[0].nrows()
    }

    pub fn ncols(&self) -> usize {
        self.comps[0].ncols()
    }

    pub fn component(&self, c: usize) -> &Array2<f64> {
        &self.comps[c]
    }

    pub fn component_mut(&mut self, c: usize) -> &mut Array2<f64> {
        &mut self.comps[c]
    }

    pub fn get(&self, row: usize, col: usize) -> Quaternion {
        Quaternion::new(
            self.comps[0][[row, col]],
            self.comps[1][[row, col]],
            self.comps[2][[row, col]],
            self.comps[3][[row, col]],
        )
    }

    pub fn set(&mut self, row: usize, col: usize, q: Quaternion) {
        self.comps[0][[row, col]] = q.a0;
        self.comps[1][[row, col]] = q.a1;
        self.comps[2][[row, col]] = q.a2;
        self.comps[3][[row, col]] = q.a3;
    }

    /// Dense quaternion product, component-wise via the Hamilton sign table.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.ncols(), rhs.nrows());
        let [a0, a1, a2, a3] = &self.comps;
        let [b0, b1, b2, b3] = &rhs.comps;
        let c0 = a0.dot(b0) - a1.dot(b1) - a2.dot(b2) - a3.dot(b3);
        let c1 = a0.dot(b1) + a1.dot(b0) + a2.dot(b3) - a3.dot(b2);
        let c2 = a0.dot(b2) - a1.dot(b3) + a2.dot(b0) + a3.dot(b1);
        let c3 = a0.dot(b3) + a1.dot(b2) - a2.dot(b1) + a3.dot(b0);
        Self::from_components([c0, c1, c2, c3])
    }

    /// Conjugate transpose `A^H`.
    pub fn hermitian(&self) -> Self {
        Self::from_components([
            self.comps[0].t().to_owned(),
            -&self.comps[1].t().to_owned(),
            -&self.comps[2].t().to_owned(),
            -&self.comps[3].t().to_owned(),
        ])
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::from_components(std::array::from_fn(|c| &self.comps[c] + &rhs.comps[c]))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self::from_components(std::array::from_fn(|c| &self.comps[c] - &rhs.comps[c]))
    }

    pub fn scale(&self, c: f64) -> Self {
        Self::from_components(std::array::from_fn(|k| self.comps[k].mapv(|v| v * c)))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.comps
            .iter()
            .map(|c| c.iter().map(|v| v * v).sum::<f64>())
            .sum::<f64>()
            .sqrt()
    }
}

// ---------------------------------------------------------------------------
// Real counterpart mapping
// ---------------------------------------------------------------------------

/// Real counterpart of a quaternion matrix: the 4x4-block structured real
/// matrix that represents left multiplication. Multiplicative:
/// `realify(A B) == realify(A) realify(B)`.
pub fn realify(a: &QMatrix) -> Array2<f64> {
    let (n, m) = (a.nrows(), a.ncols());
    let mut out = Array2::zeros((4 * n, 4 * m));
    let [a0, a1, a2, a3] = &a.comps;
    // Block sign/content pattern, rows of blocks top to bottom.
    let pattern: [[(&Array2<f64>, f64); 4]; 4] = [
        [(a0, 1.0), (a1, -1.0), (a2, -1.0), (a3, -1.0)],
        [(a1, 1.0), (a0, 1.0), (a3, -1.0), (a2, 1.0)],
        [(a2, 1.0), (a3, 1.0), (a0, 1.0), (a1, -1.0)],
        [(a3, 1.0), (a2, -1.0), (a1, 1.0), (a0, 1.0)],
    ];
    for (bi, row) in pattern.iter().enumerate() {
        for (bj, (comp, sign)) in row.iter().enumerate() {
            out.slice_mut(s![bi * n..(bi + 1) * n, bj * m..(bj + 1) * m])
                .assign(&comp.mapv(|v| v * sign));
        }
    }
    out
}

/// Column form of the real counterpart: the first block column
/// `[A0; A1; A2; A3]` (a 4n x m real matrix).
pub fn realify_col(a: &QMatrix) -> Array2<f64> {
    let (n, m) = (a.nrows(), a.ncols());
    let mut out = Array2::zeros((4 * n, m));
    for (c, comp) in a.comps.iter().enumerate() {
        out.slice_mut(s![c * n..(c + 1) * n, ..]).assign(comp);
    }
    out
}

/// Column form of a field viewed as a vector (row-major pixel order).
pub fn realify_col_field(f: &QField) -> Array1<f64> {
    let n = f.len();
    let mut out = Array1::zeros(4 * n);
    for (c, plane) in f.planes().iter().enumerate() {
        for (k, v) in plane.iter().enumerate() {
            out[c * n + k] = *v;
        }
    }
    out
}

/// Inverse of [`realify`]. Rejects matrices that do not carry the exact
/// quaternion block pattern within `tol`.
pub fn unrealify(m: &Array2<f64>, tol: f64) -> Result<QMatrix, QcoreError> {
    let (rows, cols) = m.dim();
    if rows % 4 != 0 || cols % 4 != 0 {
        return Err(QcoreError::BadBlockDims { rows, cols });
    }
    let (n, mm) = (rows / 4, cols / 4);
    let comps: [Array2<f64>; 4] =
        std::array::from_fn(|c| m.slice(s![c * n..(c + 1) * n, 0..mm]).to_owned());
    let candidate = QMatrix::from_components(comps);
    let rebuilt = realify(&candidate);
    let max_dev = m
        .iter()
        .zip(rebuilt.iter())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    if max_dev > tol {
        return Err(QcoreError::NotQuaternionStructured {
            max_deviation: max_dev,
            tolerance: tol,
        });
    }
    Ok(candidate)
}

/// Which of the three unitary structure matrices to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Structure {
    J,
    R,
    S,
}

/// The 4n x 4n structure matrix: the real counterpart of `i I`, `j I` or
/// `k I`. A real matrix `M` equals `realify` of some quaternion matrix iff
/// conjugation by all three leaves it fixed.
pub fn structure_matrix(kind: Structure, n: usize) -> Array2<f64> {
    let unit = match kind {
        Structure::J => Quaternion::I,
        Structure::R => Quaternion::J,
        Structure::S => Quaternion::K,
    };
    let mut m = QMatrix::zeros(n, n);
    for i in 0..n {
        m.set(i, i, unit);
    }
    realify(&m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn assert_near(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    fn rng_matrix(rng: &mut impl rand::Rng, n: usize, m: usize) -> QMatrix {
        let comps = std::array::from_fn(|_| {
            Array2::from_shape_fn((n, m), |_| rng.gen_range(-1.0..1.0))
        });
        QMatrix::from_components(comps)
    }

    #[test]
    fn unit_products() {
        assert_eq!(Quaternion::I * Quaternion::J, Quaternion::K);
        assert_eq!(Quaternion::J * Quaternion::K, Quaternion::I);
        assert_eq!(Quaternion::K * Quaternion::I, Quaternion::J);
        assert_eq!(Quaternion::J * Quaternion::I, -Quaternion::K);
        let q = Quaternion::new(0.3, -1.2, 0.7, 2.0);
        assert_eq!(q * Quaternion::ONE, q);
        assert_eq!(Quaternion::ONE * q, q);
    }

    #[test]
    fn inverse_roundtrip() {
        let q = Quaternion::new(0.5, -0.25, 1.5, -2.0);
        let p = q * q.inverse().unwrap();
        assert_near(p.a0, 1.0, 1e-14);
        assert_near(p.a1, 0.0, 1e-14);
        assert_near(p.a2, 0.0, 1e-14);
        assert_near(p.a3, 0.0, 1e-14);
        assert!(Quaternion::ZERO.inverse().is_err());
    }

    #[test]
    fn scalar_mul_matches_real_counterpart() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(7);
        for _ in 0..20 {
            let p = Quaternion::new(
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
            );
            let q = Quaternion::new(
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
            );
            let direct = p * q;
            let via_real = realify(&QMatrix::from_scalar(p))
                .dot(&realify_col(&QMatrix::from_scalar(q)));
            assert_near(direct.a0, via_real[[0, 0]], 1e-13);
            assert_near(direct.a1, via_real[[1, 0]], 1e-13);
            assert_near(direct.a2, via_real[[2, 0]], 1e-13);
            assert_near(direct.a3, via_real[[3, 0]], 1e-13);
            // modulus is multiplicative
            assert_near(direct.norm(), p.norm() * q.norm(), 1e-12);
        }
    }

    #[test]
    fn realify_of_one_is_identity() {
        let r = realify(&QMatrix::from_scalar(Quaternion::ONE));
        assert_eq!(r, Array2::eye(4));
    }

    #[test]
    fn realify_of_i_matches_pattern() {
        let r = realify(&QMatrix::from_scalar(Quaternion::I));
        let expected = ndarray::arr2(&[
            [0.0, -1.0, 0.0, 0.0],
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, -1.0],
            [0.0, 0.0, 1.0, 0.0],
        ]);
        assert_eq!(r, expected);
    }

    #[test]
    fn realify_homomorphism() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(11);
        let a = rng_matrix(&mut rng, 3, 3);
        let b = rng_matrix(&mut rng, 3, 3);
        let lhs = realify(&a.mul(&b));
        let rhs = realify(&a).dot(&realify(&b));
        let dev = lhs
            .iter()
            .zip(rhs.iter())
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max);
        assert!(dev < 1e-12, "homomorphism deviation {dev}");
    }

    #[test]
    fn realify_hermitian_is_transpose() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(3);
        let a = rng_matrix(&mut rng, 4, 2);
        // sign/transpose permutation only, so bit-exact
        assert_eq!(realify(&a.hermitian()), realify(&a).t().to_owned());
    }

    #[test]
    fn unrealify_roundtrip_and_rejection() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(5);
        let a = rng_matrix(&mut rng, 3, 2);
        let r = realify(&a);
        let back = unrealify(&r, STRUCTURE_TOL).unwrap();
        assert_eq!(realify(&back), r);

        let id = unrealify(&Array2::eye(8), STRUCTURE_TOL).unwrap();
        assert_eq!(id, QMatrix::identity(2));

        let mut broken = r.clone();
        broken[[0, 3]] += 1e-6;
        assert!(matches!(
            unrealify(&broken, STRUCTURE_TOL),
            Err(QcoreError::NotQuaternionStructured { .. })
        ));
        assert!(unrealify(&Array2::zeros((3, 3)), STRUCTURE_TOL).is_err());
    }

    #[test]
    fn structure_matrices_relations() {
        let n = 2;
        let j = structure_matrix(Structure::J, n);
        let r = structure_matrix(Structure::R, n);
        let s = structure_matrix(Structure::S, n);
        let eye = Array2::<f64>::eye(4 * n);
        assert_eq!(j.dot(&j), -&eye);
        assert_eq!(j.dot(&r), s);
        assert_eq!(j.dot(&s), -&r);
    }

    #[test]
    fn norms_and_dot() {
        let mut v = QField::zeros(1, 1);
        v.set(0, 0, Quaternion::new(1.0, 1.0, 0.0, 0.0));
        assert_near(qnorm(&v, Norm::L2), 2f64.sqrt(), 1e-15);
        assert_near(qnorm(&v, Norm::L1), 2f64.sqrt(), 1e-15);
        assert_eq!(qnorm(&QField::zeros(4, 3), Norm::L2), 0.0);

        let mut x = QField::zeros(1, 1);
        x.set(0, 0, Quaternion::I);
        assert_near(qdot(&x, &x).unwrap(), 1.0, 1e-15);
        assert!(qdot(&x, &QField::zeros(2, 1)).is_err());
    }

    #[test]
    fn field_norm_matches_column_form() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(21);
        let planes = std::array::from_fn(|_| {
            Array2::from_shape_fn((5, 4), |_| rng.gen_range(-1.0..1.0))
        });
        let f = QField::from_planes(planes);
        let col = realify_col_field(&f);
        let col_norm = col.iter().map(|v| v * v).sum::<f64>().sqrt();
        assert_near(f.norm2(), col_norm, 1e-12);
        // ||v||_2 = (1/2) ||realify(v)||_F
        let m = f.to_column_matrix();
        let full = realify(&m);
        let full_f = full.iter().map(|v| v * v).sum::<f64>().sqrt();
        assert_near(f.norm2(), 0.5 * full_f, 1e-12);
    }

    proptest! {
        #[test]
        fn modulus_multiplicative(p in prop::array::uniform4(-3.0f64..3.0), q in prop::array::uniform4(-3.0f64..3.0)) {
            let a = Quaternion::new(p[0], p[1], p[2], p[3]);
            let b = Quaternion::new(q[0], q[1], q[2], q[3]);
            let lhs = (a * b).norm();
            let rhs = a.norm() * b.norm();
            prop_assert!((lhs - rhs).abs() <= 1e-10 * (1.0 + rhs));
        }

        #[test]
        fn dot_symmetry(p in prop::array::uniform4(-3.0f64..3.0), q in prop::array::uniform4(-3.0f64..3.0)) {
            let mut x = QField::zeros(1, 1);
            let mut y = QField::zeros(1, 1);
            x.set(0, 0, Quaternion::new(p[0], p[1], p[2], p[3]));
            y.set(0, 0, Quaternion::new(q[0], q[1], q[2], q[3]));
            prop_assert!((x.dot(&y) - y.dot(&x)).abs() < 1e-12);
        }
    }
}
