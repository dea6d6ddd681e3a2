//! Exact dense linear algebra over the rationals.
//!
//! Everything here is Gauss-Jordan elimination with the first nonzero entry
//! of each column as pivot. With exact arithmetic there is no need for
//! numerical pivoting, and the fixed pivot rule makes every output
//! deterministic.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact scalar. `BigRational` keeps numerator and denominator reduced with a
/// positive denominator after every operation, so `==` is structural.
pub type Rational = BigRational;

/// `n / d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Renders a rational as `"numerator/denominator"`, always with both parts.
pub fn format_ratio(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `"p/q"` or a bare integer `"p"`.
pub fn parse_ratio(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Dense row-major rectangular matrix. Zero rows or zero columns are allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RectMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RectMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// The `rows x cols` matrix `diag(I_r, 0)`.
    pub fn rank_normal(rows: usize, cols: usize, r: usize) -> Self {
        assert!(r <= rows.min(cols), "rank {r} exceeds {rows}x{cols}");
        let mut m = Self::zeros(rows, cols);
        for i in 0..r {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Matrix with a single 1 at `(i, j)`.
    pub fn unit(rows: usize, cols: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(rows, cols);
        m[(i, j)] = Rational::one();
        m
    }

    /// Builds a matrix from rows of equal length. `cols` is needed so that
    /// an empty row list still has a definite shape.
    pub fn from_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::ShapeMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            entries.extend(row);
        }
        Ok(Self {
            rows: n,
            cols,
            entries,
        })
    }

    /// Integer convenience constructor, mostly for tests.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect();
        Self::from_rows(rows, cols).expect("ragged integer matrix")
    }

    /// Matrix whose columns are the given vectors of length `len`.
    pub fn from_columns(columns: &[Vec<Rational>], len: usize) -> Result<Self> {
        let mut m = Self::zeros(len, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != len {
                return Err(Error::DimensionMismatch {
                    expected: len,
                    found: col.len(),
                });
            }
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = &self[(i, j)];
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * s).collect(),
        }
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .sum()
    }

    /// Copies the `rows x cols` block whose top-left corner is `(r0, c0)`.
    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        assert!(r0 + rows <= self.rows && c0 + cols <= self.cols);
        let mut out = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out[(i, j)] = self[(r0 + i, c0 + j)].clone();
            }
        }
        out
    }

    /// Writes `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &RectMatrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(r0 + i, c0 + j)] = block[(i, j)].clone();
            }
        }
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(parts: &[RectMatrix], cols: usize) -> Result<Self> {
        let mut entries = Vec::new();
        let mut rows = 0;
        for p in parts {
            if p.cols != cols {
                return Err(Error::ShapeMismatch(format!(
                    "cannot stack a {}-column block onto {cols} columns",
                    p.cols
                )));
            }
            rows += p.rows;
            entries.extend(p.entries.iter().cloned());
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length vs matrix columns");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn checked_mul(&self, rhs: &RectMatrix) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    fn zip_with(&self, rhs: &RectMatrix, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        assert!(
            self.rows == rhs.rows && self.cols == rhs.cols,
            "shape mismatch: {}x{} vs {}x{}",
            self.rows,
            self.cols,
            rhs.rows,
            rhs.cols
        );
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }
}

impl std::ops::Index<(usize, usize)> for RectMatrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RectMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.entries[i * self.cols + j]
    }
}

impl Mul for &RectMatrix {
    type Output = RectMatrix;

    fn mul(self, rhs: &RectMatrix) -> RectMatrix {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Add for &RectMatrix {
    type Output = RectMatrix;

    fn add(self, rhs: &RectMatrix) -> RectMatrix {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &RectMatrix {
    type Output = RectMatrix;

    fn sub(self, rhs: &RectMatrix) -> RectMatrix {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &RectMatrix {
    type Output = RectMatrix;

    fn neg(self) -> RectMatrix {
        RectMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| -x).collect(),
        }
    }
}

impl fmt::Debug for RectMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RectMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Result of Gauss-Jordan elimination on `M`: `transform * M == rref`.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub rref: RectMatrix,
    /// Column index of the leading 1 in each nonzero row, in row order.
    pub pivots: Vec<usize>,
    /// Invertible `rows x rows` matrix recording the row operations.
    pub transform: RectMatrix,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Reduced row echelon form. When `record` is false the returned transform
/// is left as the identity and no work is spent maintaining it.
fn gauss_jordan(m: &RectMatrix, record: bool) -> Echelon {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut t = RectMatrix::identity(if record { rows } else { 0 });
    let mut pivots = Vec::new();
    let mut pr = 0;

    for c in 0..cols {
        if pr == rows {
            break;
        }
        let Some(p) = (pr..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if p != pr {
            swap_rows(&mut a, p, pr);
            if record {
                swap_rows(&mut t, p, pr);
            }
        }
        let inv = a[(pr, c)].recip();
        scale_row(&mut a, pr, &inv);
        if record {
            scale_row(&mut t, pr, &inv);
        }
        for i in 0..rows {
            if i == pr || a[(i, c)].is_zero() {
                continue;
            }
            let factor = a[(i, c)].clone();
            axpy_row(&mut a, i, pr, &factor);
            if record {
                axpy_row(&mut t, i, pr, &factor);
            }
        }
        pivots.push(c);
        pr += 1;
    }

    Echelon {
        rref: a,
        pivots,
        transform: if record {
            t
        } else {
            RectMatrix::identity(rows)
        },
    }
}

fn swap_rows(a: &mut RectMatrix, i: usize, j: usize) {
    let cols = a.cols;
    for c in 0..cols {
        a.entries.swap(i * cols + c, j * cols + c);
    }
}

fn scale_row(a: &mut RectMatrix, i: usize, s: &Rational) {
    for c in 0..a.cols {
        let x = &mut a[(i, c)];
        if !x.is_zero() {
            *x *= s;
        }
    }
}

/// row[target] -= factor * row[source]
fn axpy_row(a: &mut RectMatrix, target: usize, source: usize, factor: &Rational) {
    for c in 0..a.cols {
        let s = &a[(source, c)];
        if s.is_zero() {
            continue;
        }
        let delta = factor * s;
        a[(target, c)] -= delta;
    }
}

/// Reduced row echelon form together with the recorded row transform.
pub fn echelon(m: &RectMatrix) -> Echelon {
    gauss_jordan(m, true)
}

pub fn rank(m: &RectMatrix) -> usize {
    let mut red = RowReducer::new(m.cols);
    for i in 0..m.rows {
        red.insert(m.row(i).to_vec());
    }
    red.rank()
}

/// Rank of a list of vectors of common length `len`, taken as rows.
pub fn rank_of_vectors(vectors: &[Vec<Rational>], len: usize) -> usize {
    let mut red = RowReducer::new(len);
    for v in vectors {
        assert_eq!(v.len(), len, "vectors of equal length");
        red.insert(v.clone());
    }
    red.rank()
}

/// Reduced row echelon basis of a row space, built one row at a time.
/// Only the independent rows are ever stored.
#[derive(Clone, Debug)]
pub struct RowReducer {
    len: usize,
    /// Kept sorted by pivot column; each pivot column is zero in other rows.
    rows: Vec<(usize, Vec<Rational>)>,
}

impl RowReducer {
    pub fn new(len: usize) -> Self {
        Self {
            len,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(p, _)| *p).collect()
    }

    /// Subtracts the basis component of `v` in place, leaving zeros in
    /// every pivot column.
    pub fn reduce(&self, v: &mut [Rational]) {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            sub_scaled(v, row, &f);
        }
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        is_zero_vector(&w)
    }

    /// Adds `v` to the row space; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<Rational>) -> bool {
        debug_assert_eq!(v.len(), self.len);
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip();
        for x in v.iter_mut().filter(|x| !x.is_zero()) {
            *x *= &inv;
        }
        for (_, row) in &mut self.rows {
            if !row[p].is_zero() {
                let f = row[p].clone();
                sub_scaled(row, &v, &f);
            }
        }
        let at = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(at, (p, v));
        true
    }

    /// The reduced rows, in pivot order.
    pub fn into_rows(self) -> Vec<Vec<Rational>> {
        self.rows.into_iter().map(|(_, r)| r).collect()
    }

    /// Basis of the vectors orthogonal to every row, one per free column.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let mut is_pivot = vec![false; self.len];
        for (p, _) in &self.rows {
            is_pivot[*p] = true;
        }
        (0..self.len)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![Rational::zero(); self.len];
                v[f] = Rational::one();
                for (p, row) in &self.rows {
                    if !row[f].is_zero() {
                        v[*p] = -&row[f];
                    }
                }
                v
            })
            .collect()
    }
}

/// v -= f * w
fn sub_scaled(v: &mut [Rational], w: &[Rational], f: &Rational) {
    for (x, y) in v.iter_mut().zip(w) {
        if !y.is_zero() {
            *x -= f * y;
        }
    }
}

/// Invertible `(P_left, P_right)` with `P_left * M * P_right = diag(I_r, 0)`.
pub fn rank_normal_transforms(m: &RectMatrix) -> (RectMatrix, RectMatrix) {
    let ech = echelon(m);
    let r = ech.rank();
    let cols = m.cols;

    // Column permutation moving the pivot columns to the front, in order.
    let mut order = ech.pivots.clone();
    order.extend((0..cols).filter(|c| !ech.pivots.contains(c)));
    let mut perm = RectMatrix::zeros(cols, cols);
    for (new, &old) in order.iter().enumerate() {
        perm[(old, new)] = Rational::one();
    }

    // rref * perm = [I_r F; 0 0]; clear F with [I -F; 0 I].
    let moved = &ech.rref * &perm;
    let mut clear = RectMatrix::identity(cols);
    for i in 0..r {
        for j in r..cols {
            clear[(i, j)] = -&moved[(i, j)];
        }
    }
    (ech.transform, &perm * &clear)
}

/// Basis of `{v : M v = 0}`, one vector per non-pivot column.
pub fn nullspace(m: &RectMatrix) -> Vec<Vec<Rational>> {
    nullspace_of_rows((0..m.rows).map(|i| m.row(i).to_vec()), m.cols)
}

/// Kernel of the matrix whose rows are `rows`, each of length `len`.
pub fn nullspace_of_rows(
    rows: impl IntoIterator<Item = Vec<Rational>>,
    len: usize,
) -> Vec<Vec<Rational>> {
    let mut red = RowReducer::new(len);
    for r in rows {
        red.insert(r);
        if red.rank() == len {
            break;
        }
    }
    red.kernel()
}

pub fn invert(m: &RectMatrix) -> Result<RectMatrix> {
    if !m.is_square() {
        return Err(Error::NonSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let ech = echelon(m);
    if ech.rank() < m.rows {
        return Err(Error::SingularMatrix {
            rank: ech.rank(),
            dim: m.rows,
        });
    }
    Ok(ech.transform)
}

/// Solves `M x = b` for one particular solution, if any exists.
pub fn solve(m: &RectMatrix, b: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(b.len(), m.rows);
    let ech = echelon(m);
    let tb = ech.transform.mul_vec(b);
    if tb[ech.rank()..].iter().any(|x| !x.is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); m.cols];
    for (row, &p) in ech.pivots.iter().enumerate() {
        x[p] = tb[row].clone();
    }
    Some(x)
}

/// Determinant by Gaussian elimination.
pub fn determinant(m: &RectMatrix) -> Result<Rational> {
    if !m.is_square() {
        return Err(Error::NonSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    let mut a = m.clone();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[(i, c)].is_zero()) else {
            return Ok(Rational::zero());
        };
        if p != c {
            swap_rows(&mut a, p, c);
            det = -det;
        }
        let pivot = a[(c, c)].clone();
        det *= &pivot;
        for i in c + 1..n {
            if a[(i, c)].is_zero() {
                continue;
            }
            let factor = &a[(i, c)] / &pivot;
            axpy_row(&mut a, i, c, &factor);
        }
    }
    Ok(det)
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_small_cases() {
        assert_eq!(rank(&RectMatrix::zeros(2, 3)), 0);
        assert_eq!(rank(&RectMatrix::identity(3)), 3);
        assert_eq!(rank(&RectMatrix::from_i64(&[&[0, 1], &[1, 1]])), 2);
        assert_eq!(rank(&RectMatrix::zeros(0, 4)), 0);
        assert_eq!(rank(&RectMatrix::zeros(3, 0)), 0);
    }

    #[test]
    fn normal_transforms_of_zero_are_identities() {
        let (pl, pr) = rank_normal_transforms(&RectMatrix::zeros(2, 2));
        assert!(pl.is_identity());
        assert!(pr.is_identity());
    }

    #[test]
    fn normal_transforms_scalar() {
        let m = RectMatrix::from_i64(&[&[2]]);
        let (pl, pr) = rank_normal_transforms(&m);
        assert_eq!(pl[(0, 0)], rat(1, 2));
        assert_eq!(pr[(0, 0)], int(1));
    }

    #[test]
    fn normal_transforms_swap() {
        let m = RectMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        let (pl, pr) = rank_normal_transforms(&m);
        assert!((&(&pl * &m) * &pr).is_identity());
    }

    #[test]
    fn normal_transforms_with_free_columns() {
        let m = RectMatrix::from_i64(&[&[1, 2, 3], &[2, 4, 7]]);
        let (pl, pr) = rank_normal_transforms(&m);
        let out = &(&pl * &m) * &pr;
        assert_eq!(out, RectMatrix::rank_normal(2, 3, 2));
    }

    #[test]
    fn nullspace_cases() {
        assert!(nullspace(&RectMatrix::identity(3)).is_empty());
        let full = nullspace(&RectMatrix::zeros(2, 2));
        assert_eq!(full, vec![vec![int(1), int(0)], vec![int(0), int(1)]]);
        let one = nullspace(&RectMatrix::from_i64(&[&[1, 1]]));
        assert_eq!(one, vec![vec![int(-1), int(1)]]);
    }

    #[test]
    fn invert_cases() {
        assert!(invert(&RectMatrix::identity(4)).unwrap().is_identity());
        let d = RectMatrix::from_i64(&[&[2, 0], &[0, 4]]);
        let di = invert(&d).unwrap();
        assert_eq!(di[(0, 0)], rat(1, 2));
        assert_eq!(di[(1, 1)], rat(1, 4));
        let u = RectMatrix::from_i64(&[&[1, 1], &[0, 1]]);
        assert_eq!(
            invert(&u).unwrap(),
            RectMatrix::from_i64(&[&[1, -1], &[0, 1]])
        );
    }

    #[test]
    fn invert_errors() {
        assert!(matches!(
            invert(&RectMatrix::zeros(2, 3)),
            Err(Error::NonSquare { rows: 2, cols: 3 })
        ));
        assert!(matches!(
            invert(&RectMatrix::from_i64(&[&[1, 2], &[2, 4]])),
            Err(Error::SingularMatrix { rank: 1, dim: 2 })
        ));
    }

    #[test]
    fn solve_and_determinant() {
        let m = RectMatrix::from_i64(&[&[2, 1], &[1, 3]]);
        assert_eq!(determinant(&m).unwrap(), int(5));
        let x = solve(&m, &[int(3), int(4)]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![int(3), int(4)]);
        let singular = RectMatrix::from_i64(&[&[1, 1], &[1, 1]]);
        assert!(solve(&singular, &[int(1), int(2)]).is_none());
    }

    #[test]
    fn ratio_text_roundtrip() {
        let q = rat(-6, 4);
        assert_eq!(format_ratio(&q), "-3/2");
        assert_eq!(parse_ratio("-3/2"), Some(q));
        assert_eq!(parse_ratio("5"), Some(int(5)));
        assert_eq!(parse_ratio("1/0"), None);
        assert_eq!(format_ratio(&int(1)), "1/1");
    }
}
