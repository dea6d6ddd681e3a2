//! The derived bracket `[[X, Y]]_B = [X, [B, Y]]` on g_{-1} and the Lie
//! algebras it defines.
//!
//! Basis of g_{-1}: `F_{ij}` is the matrix with a single 1 in block C at row
//! `i` (1..=n) and column `j` (1..=m). Basis vectors are ordered
//! lexicographically by `(i, j)`, so `F_{ij}` has index `(i-1)*m + (j-1)`.
//! Every coordinate vector in this crate uses that order.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Rational, RectMatrix};
use crate::superalg::{is_in_minus_one, super_bracket, SuperMatrix, SuperShape};

/// Odd element `B` of g_1, stored through its `m x n` block `b`.
///
/// `B^2 = 0` holds for every such element: the product of two strictly
/// upper block-triangular matrices has no room to be nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddGenerator {
    shape: SuperShape,
    b: RectMatrix,
}

impl OddGenerator {
    pub fn new(shape: SuperShape, b: RectMatrix) -> Result<Self> {
        if b.rows() != shape.m() || b.cols() != shape.n() {
            return Err(Error::ShapeMismatch(format!(
                "generator block for {shape} must be {}x{}, got {}x{}",
                shape.m(),
                shape.n(),
                b.rows(),
                b.cols()
            )));
        }
        Ok(Self { shape, b })
    }

    /// The rank-`r` normal form `b = diag(I_r, 0)`.
    pub fn normal(shape: SuperShape, r: usize) -> Result<Self> {
        shape.check_rank(r)?;
        Ok(Self {
            shape,
            b: RectMatrix::rank_normal(shape.m(), shape.n(), r),
        })
    }

    pub fn shape(&self) -> SuperShape {
        self.shape
    }

    pub fn block(&self) -> &RectMatrix {
        &self.b
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.b)
    }

    pub fn to_super(&self) -> SuperMatrix {
        SuperMatrix::upper(self.shape, self.b.clone()).expect("block shape checked at construction")
    }
}

/// Invertible `p_m`, `p_n` with `p_m * b * p_n = diag(I_r, 0)`.
#[derive(Clone, Debug)]
pub struct NormalFormCertificate {
    pub p_m: RectMatrix,
    pub p_n: RectMatrix,
    pub b_normal: RectMatrix,
    pub rank: usize,
}

impl NormalFormCertificate {
    pub fn holds_for(&self, b: &OddGenerator) -> bool {
        &(&self.p_m * b.block()) * &self.p_n == self.b_normal
            && self.b_normal == RectMatrix::rank_normal(b.b.rows(), b.b.cols(), self.rank)
    }
}

pub fn normal_form(b: &OddGenerator) -> NormalFormCertificate {
    let (p_m, p_n) = linalg::rank_normal_transforms(&b.b);
    let b_normal = &(&p_m * &b.b) * &p_n;
    let rank = (0..b_normal.rows().min(b_normal.cols()))
        .take_while(|&i| !b_normal[(i, i)].is_zero())
        .count();
    NormalFormCertificate {
        p_m,
        p_n,
        b_normal,
        rank,
    }
}

/// `[X, [B, Y]]` evaluated literally with two super commutators.
pub fn derived_bracket_raw(
    x: &SuperMatrix,
    y: &SuperMatrix,
    b: &OddGenerator,
) -> Result<SuperMatrix> {
    if x.shape() != b.shape || y.shape() != b.shape {
        return Err(Error::ShapeMismatch(format!(
            "{} and {} bracketed through a generator of {}",
            x.shape(),
            y.shape(),
            b.shape
        )));
    }
    if !is_in_minus_one(x) || !is_in_minus_one(y) {
        return Err(Error::NotDegreeMinusOne);
    }
    let by = super_bracket(&b.to_super(), y)?;
    super_bracket(x, &by)
}

/// One-based position of a basis vector of g_{-1} inside block C.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisLabel {
    pub row: usize,
    pub col: usize,
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}_{}", self.row, self.col)
    }
}

impl std::str::FromStr for BasisLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::MalformedConstants(format!("bad basis label {s:?}"));
        let rest = s.strip_prefix("F_").ok_or_else(bad)?;
        let (i, j) = rest.split_once('_').ok_or_else(bad)?;
        Ok(BasisLabel {
            row: i.parse().map_err(|_| bad())?,
            col: j.parse().map_err(|_| bad())?,
        })
    }
}

pub fn basis_labels(shape: SuperShape) -> Vec<BasisLabel> {
    (1..=shape.n())
        .flat_map(|row| (1..=shape.m()).map(move |col| BasisLabel { row, col }))
        .collect()
}

pub fn basis_index(shape: SuperShape, label: BasisLabel) -> Option<usize> {
    let ok = (1..=shape.n()).contains(&label.row) && (1..=shape.m()).contains(&label.col);
    ok.then(|| (label.row - 1) * shape.m() + (label.col - 1))
}

/// The g_{-1} element with the given coordinates.
pub fn element_of(shape: SuperShape, coords: &[Rational]) -> Result<SuperMatrix> {
    let dim = shape.m() * shape.n();
    if coords.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: coords.len(),
        });
    }
    let c = RectMatrix::new(shape.n(), shape.m(), coords.to_vec())?;
    SuperMatrix::lower(shape, c)
}

/// Coordinates of the C block of `x`; the other blocks are ignored.
pub fn coords_of(x: &SuperMatrix) -> Vec<Rational> {
    x.c().entries().to_vec()
}

pub fn basis_element(shape: SuperShape, index: usize) -> SuperMatrix {
    let m = shape.m();
    SuperMatrix::lower(shape, RectMatrix::unit(shape.n(), m, index / m, index % m))
        .expect("unit has block shape")
}

/// Sparse linear combination of basis vectors, sorted by index, no zeros.
pub type Terms = Vec<(usize, Rational)>;

fn terms_of(v: &[Rational]) -> Terms {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(k, x)| (k, x.clone()))
        .collect()
}

/// Bracket `[[F_u, F_v]]` in normal form of rank `r`, read off the block
/// formula: `[[F_ij, F_kl]] = [j<=r] d_jk F_il - [l<=r] d_li F_kj`.
pub fn closed_form_bracket(shape: SuperShape, r: usize, u: usize, v: usize) -> Terms {
    let m = shape.m();
    let (i, j) = (u / m, u % m);
    let (k, l) = (v / m, v % m);
    let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
    if j < r && j == k {
        *acc.entry(i * m + l).or_insert_with(Rational::zero) += linalg::int(1);
    }
    if l < r && l == i {
        *acc.entry(k * m + j).or_insert_with(Rational::zero) -= linalg::int(1);
    }
    acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
}

/// A finite-dimensional Lie algebra on g_{-1} given by structure constants.
///
/// Only brackets `[[F_u, F_v]]` with `u < v` are stored; the others follow
/// from antisymmetry. Pairs with a zero bracket are absent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedAlgebra {
    shape: SuperShape,
    rank_r: usize,
    labels: Vec<BasisLabel>,
    constants: BTreeMap<(usize, usize), Terms>,
}

pub fn build_algebra(shape: SuperShape, r: usize) -> Result<DerivedAlgebra> {
    let b = OddGenerator::normal(shape, r)?;
    Ok(build_algebra_from_generator(&b))
}

/// Structure constants of g^B_{-1} for an arbitrary (not necessarily
/// normal) generator, evaluated through `derived_bracket_raw`.
pub fn build_algebra_from_generator(b: &OddGenerator) -> DerivedAlgebra {
    let shape = b.shape;
    let dim = shape.m() * shape.n();
    let basis: Vec<SuperMatrix> = (0..dim).map(|u| basis_element(shape, u)).collect();
    // [B, F_v] is shared by every u; the outer bracket is what derived_bracket_raw does.
    let big_b = b.to_super();
    let by: Vec<SuperMatrix> = basis
        .par_iter()
        .map(|y| super_bracket(&big_b, y).expect("same shape"))
        .collect();
    let constants = (0..dim)
        .into_par_iter()
        .flat_map_iter(|u| {
            let (basis, by) = (&basis, &by);
            (u + 1..dim).filter_map(move |v| {
                let z = super_bracket(&basis[u], &by[v]).expect("same shape");
                let terms = terms_of(&coords_of(&z));
                (!terms.is_empty()).then_some(((u, v), terms))
            })
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    DerivedAlgebra {
        shape,
        rank_r: b.rank(),
        labels: basis_labels(shape),
        constants,
    }
}

/// First failure found by [`DerivedAlgebra::check_lie_axioms`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LieAxiomViolation {
    Antisymmetry { u: usize, v: usize },
    Jacobi { a: usize, b: usize, c: usize },
}

impl fmt::Display for LieAxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieAxiomViolation::Antisymmetry { u, v } => {
                write!(f, "antisymmetry fails on basis pair ({u}, {v})")
            }
            LieAxiomViolation::Jacobi { a, b, c } => {
                write!(f, "Jacobi identity fails on basis triple ({a}, {b}, {c})")
            }
        }
    }
}

impl DerivedAlgebra {
    /// Assembles an algebra from explicit bracket entries `(u, v, terms)`.
    ///
    /// Entries with `u > v` are stored negated as `(v, u)`. A nonzero
    /// self-bracket, an out-of-range index, or two entries for the same pair
    /// that disagree under antisymmetry are rejected.
    pub fn from_brackets(
        shape: SuperShape,
        rank_r: usize,
        entries: impl IntoIterator<Item = (usize, usize, Terms)>,
    ) -> Result<Self> {
        shape.check_rank(rank_r)?;
        let dim = shape.m() * shape.n();
        let mut constants: BTreeMap<(usize, usize), Terms> = BTreeMap::new();
        for (u, v, terms) in entries {
            let mut dense = vec![Rational::zero(); dim];
            for (k, x) in terms {
                if k >= dim {
                    return Err(Error::MalformedConstants(format!(
                        "basis index {k} out of range"
                    )));
                }
                dense[k] += x;
            }
            if u >= dim || v >= dim {
                return Err(Error::MalformedConstants(format!(
                    "basis pair ({u}, {v}) out of range"
                )));
            }
            if u == v {
                if linalg::is_zero_vector(&dense) {
                    continue;
                }
                return Err(Error::MalformedConstants(format!(
                    "nonzero self-bracket of basis {u}"
                )));
            }
            let (key, terms) = if u < v {
                ((u, v), terms_of(&dense))
            } else {
                let neg: Vec<Rational> = dense.iter().map(|x| -x).collect();
                ((v, u), terms_of(&neg))
            };
            if let Some(prev) = constants.get(&key) {
                if *prev != terms {
                    return Err(Error::MalformedConstants(format!(
                        "conflicting entries for basis pair {key:?}"
                    )));
                }
            }
            constants.insert(key, terms);
        }
        constants.retain(|_, t| !t.is_empty());
        Ok(Self {
            shape,
            rank_r,
            labels: basis_labels(shape),
            constants,
        })
    }

    pub fn shape(&self) -> SuperShape {
        self.shape
    }

    pub fn rank_r(&self) -> usize {
        self.rank_r
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn basis_labels(&self) -> &[BasisLabel] {
        &self.labels
    }

    /// Nonzero brackets `[[F_u, F_v]]`, `u < v`, in lexicographic order.
    pub fn constants(&self) -> impl Iterator<Item = (usize, usize, &Terms)> {
        self.constants.iter().map(|(&(u, v), t)| (u, v, t))
    }

    pub fn is_abelian(&self) -> bool {
        self.constants.is_empty()
    }

    /// `[[F_u, F_v]]` as sparse terms, with antisymmetry applied for `u >= v`.
    pub fn bracket_terms(&self, u: usize, v: usize) -> Terms {
        use std::cmp::Ordering::*;
        match u.cmp(&v) {
            Equal => Vec::new(),
            Less => self.constants.get(&(u, v)).cloned().unwrap_or_default(),
            Greater => self
                .constants
                .get(&(v, u))
                .map(|t| t.iter().map(|(k, x)| (*k, -x)).collect())
                .unwrap_or_default(),
        }
    }

    pub fn bracket_basis(&self, u: usize, v: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (k, x) in self.bracket_terms(u, v) {
            out[k] = x;
        }
        out
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket_coords(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        let dim = self.dim();
        for len in [x.len(), y.len()] {
            if len != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: len,
                });
            }
        }
        let support =
            |w: &[Rational]| -> Vec<usize> { (0..dim).filter(|&k| !w[k].is_zero()).collect() };
        let (sx, sy) = (support(x), support(y));
        let mut out = vec![Rational::zero(); dim];
        // sum over u in supp x, v in supp y of x_u y_v [[F_u, F_v]]
        for &u in &sx {
            for &v in &sy {
                let (key, sign) = match u.cmp(&v) {
                    std::cmp::Ordering::Less => ((u, v), false),
                    std::cmp::Ordering::Greater => ((v, u), true),
                    std::cmp::Ordering::Equal => continue,
                };
                let Some(terms) = self.constants.get(&key) else {
                    continue;
                };
                let mut coef = &x[u] * &y[v];
                if sign {
                    coef = -coef;
                }
                for (k, c) in terms {
                    out[*k] += &coef * c;
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `ad F_u`: column `v` holds the coordinates of `[[F_u, F_v]]`.
    pub fn ad_basis(&self, u: usize) -> RectMatrix {
        let dim = self.dim();
        let mut ad = RectMatrix::zeros(dim, dim);
        for v in 0..dim {
            for (k, x) in self.bracket_terms(u, v) {
                ad[(k, v)] = x;
            }
        }
        ad
    }

    /// Matrix of `ad x` for an arbitrary element.
    pub fn ad(&self, x: &[Rational]) -> Result<RectMatrix> {
        let dim = self.dim();
        if x.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: x.len(),
            });
        }
        let mut ad = RectMatrix::zeros(dim, dim);
        for (u, xu) in x.iter().enumerate() {
            if xu.is_zero() {
                continue;
            }
            for v in 0..dim {
                for (k, c) in self.bracket_terms(u, v) {
                    ad[(k, v)] += xu * &c;
                }
            }
        }
        Ok(ad)
    }

    /// Dense table `t[u][v]` of `[[F_u, F_v]]`, for repeated lookups.
    pub fn dense_table(&self) -> Vec<Vec<Vec<Rational>>> {
        (0..self.dim())
            .map(|u| (0..self.dim()).map(|v| self.bracket_basis(u, v)).collect())
            .collect()
    }

    /// Checks antisymmetry on every basis pair and the Jacobi identity
    /// `[a,[b,c]] + [b,[c,a]] + [c,[a,b]] = 0` on every ordered basis triple.
    #[allow(clippy::needless_range_loop)]
    pub fn check_lie_axioms(&self) -> Result<(), LieAxiomViolation> {
        let dim = self.dim();
        let table = self.dense_table();
        for u in 0..dim {
            for v in u..dim {
                let ok = table[u][v]
                    .iter()
                    .zip(&table[v][u])
                    .all(|(p, q)| (p + q).is_zero());
                if !ok || (u == v && !linalg::is_zero_vector(&table[u][u])) {
                    return Err(LieAxiomViolation::Antisymmetry { u, v });
                }
            }
        }

        // Sparse rows of the table make the inner contraction cheap.
        let sparse: Vec<Vec<Terms>> = table
            .iter()
            .map(|row| row.iter().map(|t| terms_of(t)).collect())
            .collect();
        let nested = |a: usize, inner: &Terms, acc: &mut Vec<Rational>| {
            for (k, x) in inner {
                for (l, y) in &sparse[a][*k] {
                    acc[*l] += x * y;
                }
            }
        };
        let violation = (0..dim).into_par_iter().find_map_first(|a| {
            let mut acc = vec![Rational::zero(); dim];
            for b in 0..dim {
                for c in 0..dim {
                    acc.iter_mut().for_each(|x| x.set_zero());
                    nested(a, &sparse[b][c], &mut acc);
                    nested(b, &sparse[c][a], &mut acc);
                    nested(c, &sparse[a][b], &mut acc);
                    if !linalg::is_zero_vector(&acc) {
                        return Some(LieAxiomViolation::Jacobi { a, b, c });
                    }
                }
            }
            None
        });
        match violation {
            Some(v) => Err(v),
            None => Ok(()),
        }
    }
}

/// Serialized structure constants: exact rationals as `"p/q"` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstantsRecord {
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketRecord {
    pub left: String,
    pub right: String,
    pub terms: Vec<TermRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub basis: String,
    pub coeff: String,
}

impl DerivedAlgebra {
    pub fn to_record(&self) -> ConstantsRecord {
        let name = |k: usize| self.labels[k].to_string();
        ConstantsRecord {
            m: self.shape.m(),
            n: self.shape.n(),
            r: self.rank_r,
            basis: self.labels.iter().map(ToString::to_string).collect(),
            brackets: self
                .constants()
                .map(|(u, v, terms)| BracketRecord {
                    left: name(u),
                    right: name(v),
                    terms: terms
                        .iter()
                        .map(|(k, x)| TermRecord {
                            basis: name(*k),
                            coeff: linalg::format_ratio(x),
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn from_record(rec: &ConstantsRecord) -> Result<Self> {
        let shape = SuperShape::new(rec.m, rec.n)?;
        let expected: Vec<String> = basis_labels(shape)
            .iter()
            .map(ToString::to_string)
            .collect();
        if rec.basis != expected {
            return Err(Error::MalformedConstants(
                "basis must list F_i_j in lexicographic (i, j) order".into(),
            ));
        }
        let index = |s: &str| -> Result<usize> {
            let label: BasisLabel = s.parse()?;
            basis_index(shape, label).ok_or_else(|| {
                Error::MalformedConstants(format!("basis label {s} outside {shape}"))
            })
        };
        let mut entries = Vec::with_capacity(rec.brackets.len());
        for br in &rec.brackets {
            let mut terms = Vec::with_capacity(br.terms.len());
            for t in &br.terms {
                let coeff = linalg::parse_ratio(&t.coeff).ok_or_else(|| {
                    Error::MalformedConstants(format!("bad coefficient {:?}", t.coeff))
                })?;
                terms.push((index(&t.basis)?, coeff));
            }
            entries.push((index(&br.left)?, index(&br.right)?, terms));
        }
        Self::from_brackets(shape, rec.r, entries)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_record()).expect("record serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let rec: ConstantsRecord =
            serde_json::from_str(s).map_err(|e| Error::MalformedConstants(e.to_string()))?;
        Self::from_record(&rec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn shape(m: usize, n: usize) -> SuperShape {
        SuperShape::new(m, n).unwrap()
    }

    #[test]
    fn normal_form_cases() {
        let s = shape(2, 2);
        let zero = OddGenerator::new(s, RectMatrix::zeros(2, 2)).unwrap();
        let cert = normal_form(&zero);
        assert!(cert.p_m.is_identity() && cert.p_n.is_identity());
        assert_eq!(cert.rank, 0);

        let already = OddGenerator::normal(shape(3, 2), 1).unwrap();
        let cert = normal_form(&already);
        assert!(cert.p_m.is_identity() && cert.p_n.is_identity());
        assert_eq!(&cert.b_normal, already.block());

        let g = OddGenerator::new(s, RectMatrix::from_i64(&[&[0, 1], &[1, 1]])).unwrap();
        let cert = normal_form(&g);
        assert!(cert.b_normal.is_identity());
        assert_eq!(cert.rank, 2);
        assert!(cert.holds_for(&g));
    }

    #[test]
    fn generator_shape_checked() {
        assert!(OddGenerator::new(shape(2, 3), RectMatrix::zeros(3, 2)).is_err());
        assert!(matches!(
            OddGenerator::normal(shape(2, 3), 3),
            Err(Error::RankOutOfRange { m: 2, n: 3, r: 3 })
        ));
    }

    #[test]
    fn square_of_generator_vanishes() {
        let g = OddGenerator::new(shape(2, 3), RectMatrix::from_i64(&[&[1, 2, 3], &[4, 5, 6]]))
            .unwrap();
        let sq = g.to_super().matmul(&g.to_super()).unwrap();
        assert!(sq.is_zero());
    }

    #[test]
    fn raw_bracket_examples() {
        let s = shape(2, 2);
        let b = OddGenerator::normal(s, 1).unwrap();
        let x = basis_element(s, 0); // F_11
        let y = basis_element(s, 1); // F_12
        let z = derived_bracket_raw(&x, &y, &b).unwrap();
        assert_eq!(z, y);
        let zero = SuperMatrix::zeros(s);
        assert!(derived_bracket_raw(&x, &zero, &b).unwrap().is_zero());

        let one = shape(1, 1);
        let b = OddGenerator::normal(one, 1).unwrap();
        let x = element_of(one, &[int(3)]).unwrap();
        let y = element_of(one, &[int(-7)]).unwrap();
        assert!(derived_bracket_raw(&x, &y, &b).unwrap().is_zero());
    }

    #[test]
    fn raw_bracket_errors() {
        let s = shape(2, 2);
        let b = OddGenerator::normal(s, 1).unwrap();
        let even = SuperMatrix::identity(s);
        let x = basis_element(s, 0);
        assert_eq!(
            derived_bracket_raw(&even, &x, &b),
            Err(Error::NotDegreeMinusOne)
        );
        let other = basis_element(shape(2, 1), 0);
        assert!(matches!(
            derived_bracket_raw(&other, &x, &b),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn rank_two_by_two_constants() {
        let s = shape(2, 2);
        let alg = build_algebra(s, 1).unwrap();
        let f = |i: usize, j: usize| basis_index(s, BasisLabel { row: i, col: j }).unwrap();
        assert_eq!(alg.bracket_terms(f(1, 1), f(1, 2)), vec![(f(1, 2), int(1))]);
        assert_eq!(
            alg.bracket_terms(f(1, 1), f(2, 1)),
            vec![(f(2, 1), int(-1))]
        );
        assert_eq!(
            alg.bracket_terms(f(1, 2), f(2, 1)),
            vec![(f(2, 2), int(-1))]
        );
    }

    #[test]
    fn degenerate_algebras_are_abelian() {
        assert!(build_algebra(shape(3, 2), 0).unwrap().is_abelian());
        assert!(build_algebra(shape(1, 1), 1).unwrap().is_abelian());
        assert!(!build_algebra(shape(1, 2), 1).unwrap().is_abelian());
        assert!(matches!(
            build_algebra(shape(1, 2), 2),
            Err(Error::RankOutOfRange { .. })
        ));
    }

    #[test]
    fn bracket_coords_basics() {
        let s = shape(2, 3);
        let alg = build_algebra(s, 2).unwrap();
        let dim = alg.dim();
        let zero = vec![Rational::zero(); dim];
        let u: Vec<Rational> = (0..dim as i64).map(|k| int(k - 2)).collect();
        assert!(linalg::is_zero_vector(
            &alg.bracket_coords(&u, &zero).unwrap()
        ));
        assert!(linalg::is_zero_vector(&alg.bracket_coords(&u, &u).unwrap()));
        for a in 0..dim {
            for b in 0..dim {
                let ea: Vec<Rational> = (0..dim).map(|k| int((k == a) as i64)).collect();
                let eb: Vec<Rational> = (0..dim).map(|k| int((k == b) as i64)).collect();
                assert_eq!(
                    alg.bracket_coords(&ea, &eb).unwrap(),
                    alg.bracket_basis(a, b)
                );
            }
        }
        assert!(matches!(
            alg.bracket_coords(&u[..3], &u),
            Err(Error::DimensionMismatch {
                expected: 6,
                found: 3
            })
        ));
    }

    #[test]
    fn from_brackets_validation() {
        let s = shape(1, 2);
        assert!(DerivedAlgebra::from_brackets(s, 1, vec![(0, 0, vec![(1, int(1))])]).is_err());
        assert!(DerivedAlgebra::from_brackets(s, 1, vec![(0, 5, vec![])]).is_err());
        let conflict = vec![(0, 1, vec![(1, int(1))]), (1, 0, vec![(1, int(1))])];
        assert!(DerivedAlgebra::from_brackets(s, 1, conflict).is_err());
        let reversed =
            DerivedAlgebra::from_brackets(s, 1, vec![(1, 0, vec![(1, int(1))])]).unwrap();
        assert_eq!(reversed, build_algebra(s, 1).unwrap());
    }

    #[test]
    fn corrupted_table_breaks_jacobi() {
        let s = shape(2, 2);
        let good = build_algebra(s, 2).unwrap();
        assert!(good.check_lie_axioms().is_ok());
        let mut entries: Vec<_> = good
            .constants()
            .map(|(u, v, t)| (u, v, t.clone()))
            .collect();
        entries[0].2[0].1 = int(2);
        let bad = DerivedAlgebra::from_brackets(s, 2, entries).unwrap();
        assert!(matches!(
            bad.check_lie_axioms(),
            Err(LieAxiomViolation::Jacobi { .. })
        ));
    }

    #[test]
    fn json_roundtrip() {
        let alg = build_algebra(shape(2, 3), 2).unwrap();
        let back = DerivedAlgebra::from_json(&alg.to_json()).unwrap();
        assert_eq!(back, alg);
        assert!(DerivedAlgebra::from_json("{\"m\":1}").is_err());
    }

    #[test]
    fn labels() {
        let s = shape(3, 2);
        let labels = basis_labels(s);
        assert_eq!(labels.len(), 6);
        assert_eq!(labels[4].to_string(), "F_2_2");
        for (k, l) in labels.iter().enumerate() {
            assert_eq!(basis_index(s, *l), Some(k));
            assert_eq!(l.to_string().parse::<BasisLabel>().unwrap(), *l);
        }
        assert_eq!(basis_index(s, BasisLabel { row: 3, col: 1 }), None);
        assert!("G_1_1".parse::<BasisLabel>().is_err());
    }
}
