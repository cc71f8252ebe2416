//! Exact linear algebra over the rationals.
//!
//! Everything here works with [`Scalar`] (arbitrary-precision rationals kept in
//! lowest terms). Echelon forms use leftmost-column, topmost-row pivoting so
//! that every derived basis is canonical and reproducible.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Scalar = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("vector is not in the span of the subspace")]
    NotInSpan,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("cannot parse rational {0:?}")]
    Parse(String),
}

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"`, `"p"` or `"-p/q"` into an exact rational.
pub fn parse_scalar(s: &str) -> Result<Scalar, LinalgError> {
    let t = s.trim().replace('\u{2212}', "-");
    let bad = || LinalgError::Parse(s.to_string());
    if let Some((n, d)) = t.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(Scalar::new(n, d))
    } else {
        Ok(Scalar::from_integer(BigInt::from_str(&t).map_err(|_| bad())?))
    }
}

/// Renders a rational as `"p"` or `"p/q"`.
pub fn format_scalar(s: &Scalar) -> String {
    if s.is_integer() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

/// `base^exp` for a possibly negative exponent. Panics on `0^negative`.
pub fn pow(base: &Scalar, exp: i64) -> Scalar {
    let mut acc = Scalar::one();
    let b = if exp < 0 { base.recip() } else { base.clone() };
    for _ in 0..exp.unsigned_abs() {
        acc *= &b;
    }
    acc
}

pub fn sign(parity: u64) -> Scalar {
    if parity % 2 == 0 {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(format_scalar).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    /// Builds a matrix from row vectors. All rows must have length `cols`.
    pub fn from_rows(rows: Vec<Vec<Scalar>>, cols: usize) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            data.extend(r);
        }
        Matrix { rows: n, cols, data }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vec<Scalar>], rows: usize) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "ragged column");
            for (r, x) in col.iter().enumerate() {
                if !x.is_zero() {
                    m.set(r, c, x.clone());
                }
            }
        }
        m
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect(),
            cols,
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &Scalar) {
        self.data[r * self.cols + c] += v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let x = self.get(r, c);
                if !x.is_zero() {
                    t.set(c, r, x.clone());
                }
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "mul_vec dimension mismatch");
        let mut out = vec![Scalar::zero(); self.rows];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                let a = self.get(r, c);
                if !a.is_zero() {
                    *o += a * x;
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.add_to(r, c, &(a * b));
                    }
                }
            }
        }
        out
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        let b = other.get(r2, c2);
                        if !b.is_zero() {
                            out.set(r1 * other.rows + r2, c1 * other.cols + c2, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }

    /// Inverse of a square matrix, `None` if singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut rows: Vec<Vec<Scalar>> = (0..n)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.extend((0..n).map(|c| if c == r { Scalar::one() } else { Scalar::zero() }));
                row
            })
            .collect();
        let pivots = rref_rows(&mut rows, 2 * n);
        if pivots.iter().take_while(|&&p| p < n).count() < n {
            return None;
        }
        Some(Matrix::from_rows(rows.into_iter().map(|r| r[n..].to_vec()).collect(), n))
    }
}

/// Reduced row-echelon form with its pivot columns (increasing).
///
/// Pivots are chosen leftmost column first, topmost available row first.
/// Row operations only touch the nonzero entries of the pivot row, which keeps
/// the sparse differentials of the cochain complex cheap to reduce.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut rows = m.row_vectors();
    let pivots = rref_rows(&mut rows, m.cols);
    (Matrix::from_rows(rows, m.cols), pivots)
}

fn rref_rows(rows: &mut [Vec<Scalar>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..cols {
        if next == rows.len() {
            break;
        }
        let Some(found) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next, found);
        let inv = rows[next][col].recip();
        if !inv.is_one() {
            for x in rows[next].iter_mut().skip(col) {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let support: Vec<(usize, Scalar)> = rows[next]
            .iter()
            .enumerate()
            .skip(col)
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (i, x.clone()))
            .collect();
        for r in 0..rows.len() {
            if r == next || rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            for (i, x) in &support {
                let delta = &factor * x;
                rows[r][*i] -= delta;
            }
        }
        pivots.push(col);
        next += 1;
    }
    pivots
}

/// A linear subspace of `Q^ambient_dim`, stored as a reduced row-echelon basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}) [", self.dim(), self.ambient_dim)?;
        for b in &self.basis {
            let row: Vec<String> = b.iter().map(format_scalar).collect();
            write!(f, " [{}]", row.join(", "))?;
        }
        write!(f, " ]")
    }
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::span(ambient_dim, Matrix::identity(ambient_dim).row_vectors())
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn span(ambient_dim: usize, vectors: Vec<Vec<Scalar>>) -> Self {
        let mut rows: Vec<Vec<Scalar>> = vectors
            .into_iter()
            .inspect(|v| assert_eq!(v.len(), ambient_dim, "vector length mismatch"))
            .filter(|v| !is_zero_vec(v))
            .collect();
        let pivots = rref_rows(&mut rows, ambient_dim);
        rows.truncate(pivots.len());
        Subspace {
            ambient_dim,
            basis: rows,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Canonical remainder of `v` modulo the subspace: zero at every pivot column.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient_dim, "vector length mismatch");
        let mut out = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let factor = out[p].clone();
            for (i, x) in b.iter().enumerate().skip(p) {
                if !x.is_zero() {
                    out[i] -= &factor * x;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient_dim, vs)
    }

    /// Orthogonal complement under the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::full(self.ambient_dim);
        }
        kernel_basis(&Matrix::from_rows(self.basis.clone(), self.ambient_dim))
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        self.annihilator().sum(&other.annihilator()).annihilator()
    }
}

/// Null space `{v : m v = 0}` as an echelonized subspace of `Q^cols`.
pub fn kernel_basis(m: &Matrix) -> Subspace {
    let (r, pivots) = rref(m);
    let n = m.cols();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut vectors = Vec::new();
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Scalar::zero(); n];
        v[free] = Scalar::one();
        for (row, &p) in pivots.iter().enumerate() {
            let x = r.get(row, free);
            if !x.is_zero() {
                v[p] = -x.clone();
            }
        }
        vectors.push(v);
    }
    Subspace::span(n, vectors)
}

/// Column space of `m` as an echelonized subspace of `Q^rows`.
pub fn image_basis(m: &Matrix) -> Subspace {
    let t = m.transpose();
    Subspace::span(m.rows(), t.row_vectors())
}

/// Coordinates of `v` against the echelon basis of `s`.
pub fn express_in_span(v: &[Scalar], s: &Subspace) -> Result<Vec<Scalar>, LinalgError> {
    if v.len() != s.ambient_dim {
        return Err(LinalgError::DimensionMismatch {
            expected: s.ambient_dim,
            got: v.len(),
        });
    }
    if !s.contains(v) {
        return Err(LinalgError::NotInSpan);
    }
    Ok(s.pivots.iter().map(|&p| v[p].clone()).collect())
}

/// Coset representatives of `Q^ambient_dim / sub`: the standard basis vectors
/// at the non-pivot coordinates of `sub`.
pub fn quotient_basis(sub: &Subspace, ambient_dim: usize) -> Vec<Vec<Scalar>> {
    assert_eq!(sub.ambient_dim, ambient_dim, "ambient dimension mismatch");
    quotient_indices(sub)
        .into_iter()
        .map(|i| {
            let mut v = vec![Scalar::zero(); ambient_dim];
            v[i] = Scalar::one();
            v
        })
        .collect()
}

/// Non-pivot coordinates of `sub`, increasing.
pub fn quotient_indices(sub: &Subspace) -> Vec<usize> {
    let mut is_pivot = vec![false; sub.ambient_dim];
    for &p in &sub.pivots {
        is_pivot[p] = true;
    }
    (0..sub.ambient_dim).filter(|&i| !is_pivot[i]).collect()
}

/// Some solution of `m x = b`, if one exists.
pub fn solve(m: &Matrix, b: &[Scalar]) -> Option<Vec<Scalar>> {
    assert_eq!(b.len(), m.rows());
    let mut rows: Vec<Vec<Scalar>> = (0..m.rows())
        .map(|r| {
            let mut row = m.row(r).to_vec();
            row.push(b[r].clone());
            row
        })
        .collect();
    let pivots = rref_rows(&mut rows, m.cols() + 1);
    if pivots.last() == Some(&m.cols()) {
        return None;
    }
    let mut x = vec![Scalar::zero(); m.cols()];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = rows[row][m.cols()].clone();
    }
    Some(x)
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .sum()
}

pub fn is_negative(s: &Scalar) -> bool {
    s.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_i64(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        assert!(Matrix::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_none());
        assert_eq!(Matrix::zeros(0, 0).inverse(), Some(Matrix::zeros(0, 0)));
    }

    #[test]
    fn rref_identity_is_fixed() {
        let id = Matrix::identity(3);
        let (r, p) = rref(&id);
        assert_eq!(r, id);
        assert_eq!(p, vec![0, 1, 2]);
    }

    #[test]
    fn rref_rank_one() {
        let m = Matrix::from_i64(&[&[2, 4], &[1, 2]]);
        let (r, p) = rref(&m);
        assert_eq!(r, Matrix::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn kernel_of_zero_and_identity() {
        assert_eq!(kernel_basis(&Matrix::zeros(2, 3)).dim(), 3);
        assert_eq!(kernel_basis(&Matrix::identity(4)).dim(), 0);
    }

    #[test]
    fn image_of_zero_and_identity() {
        assert_eq!(image_basis(&Matrix::zeros(3, 2)).dim(), 0);
        assert_eq!(image_basis(&Matrix::identity(3)), Subspace::full(3));
    }

    #[test]
    fn express_in_span_cases() {
        let s = Subspace::span(3, vec![vec![int(1), int(0), int(2)], vec![int(0), int(1), int(-1)]]);
        let b0 = s.basis()[0].clone();
        let b1 = s.basis()[1].clone();
        assert_eq!(express_in_span(&b0, &s).unwrap(), vec![int(1), int(0)]);
        assert_eq!(express_in_span(&[int(0), int(0), int(0)], &s).unwrap(), vec![int(0), int(0)]);
        let v: Vec<Scalar> = b0.iter().zip(&b1).map(|(a, b)| a + int(2) * b).collect();
        assert_eq!(express_in_span(&v, &s).unwrap(), vec![int(1), int(2)]);
        assert_eq!(
            express_in_span(&[int(0), int(0), int(1)], &s),
            Err(LinalgError::NotInSpan)
        );
    }

    #[test]
    fn quotient_basis_extremes() {
        assert_eq!(quotient_basis(&Subspace::zero(3), 3).len(), 3);
        assert!(quotient_basis(&Subspace::full(3), 3).is_empty());
    }

    #[test]
    fn intersection_of_planes() {
        let a = Subspace::span(3, vec![vec![int(1), int(0), int(0)], vec![int(0), int(1), int(0)]]);
        let b = Subspace::span(3, vec![vec![int(0), int(1), int(0)], vec![int(0), int(0), int(1)]]);
        let i = a.intersection(&b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&[int(0), int(5), int(0)]));
    }

    #[test]
    fn parse_and_format_round_trip() {
        assert_eq!(parse_scalar("-3/6").unwrap(), rat(-1, 2));
        assert_eq!(parse_scalar("7").unwrap(), int(7));
        assert_eq!(format_scalar(&rat(-1, 2)), "-1/2");
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
    }

    #[test]
    fn negative_powers() {
        assert_eq!(pow(&int(2), -3), rat(1, 8));
        assert_eq!(pow(&int(-1), 3), int(-1));
    }
}
