//! Center, derived series, Killing form, radical and Levi factor.
//!
//! Each structural piece is available twice: from the block formulas for
//! normal-form algebras (`*_closed_form`) and from generic linear algebra
//! on the structure constants. The two routes share nothing beyond the
//! linear-algebra kernel, so agreement between them is a real check.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::derived::{build_algebra, DerivedAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{self, Rational, RectMatrix, RowReducer};
use crate::superalg::SuperShape;

/// Linearly independent vectors spanning a subspace of `K^ambient_dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rational>>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn whole(ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim)
            .map(|k| unit_vector(ambient_dim, k))
            .collect();
        Self { ambient_dim, basis }
    }

    /// Takes the vectors as a basis; they must be independent.
    pub fn from_basis(ambient_dim: usize, basis: Vec<Vec<Rational>>) -> Result<Self> {
        check_lengths(ambient_dim, &basis)?;
        if linalg::rank_of_vectors(&basis, ambient_dim) != basis.len() {
            return Err(Error::VerificationFailure(
                "basis vectors are linearly dependent".into(),
            ));
        }
        Ok(Self { ambient_dim, basis })
    }

    /// Span of arbitrary vectors, reduced to an echelon basis.
    pub fn span(ambient_dim: usize, vectors: &[Vec<Rational>]) -> Result<Self> {
        check_lengths(ambient_dim, vectors)?;
        let mut red = RowReducer::new(ambient_dim);
        for v in vectors {
            red.insert(v.clone());
        }
        Ok(Self::from_reducer(ambient_dim, red))
    }

    fn from_reducer(ambient_dim: usize, red: RowReducer) -> Self {
        Self {
            ambient_dim,
            basis: red.into_rows(),
        }
    }

    fn reducer(&self) -> RowReducer {
        let mut red = RowReducer::new(self.ambient_dim);
        for v in &self.basis {
            red.insert(v.clone());
        }
        red
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        linalg::is_zero_vector(v) || self.reducer().contains(v)
    }

    /// `self + other`.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.same_ambient(other)?;
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient_dim, &all)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        if self.ambient_dim != other.ambient_dim {
            return false;
        }
        let red = other.reducer();
        self.basis.iter().all(|v| red.contains(v))
    }

    /// Equality of spans, by inclusion both ways.
    pub fn same_span(&self, other: &Subspace) -> bool {
        self.is_subspace_of(other) && other.is_subspace_of(self)
    }

    pub fn intersection_dim(&self, other: &Subspace) -> Result<usize> {
        Ok(self.dim() + other.dim() - self.sum(other)?.dim())
    }

    fn same_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(())
    }
}

fn check_lengths(dim: usize, vectors: &[Vec<Rational>]) -> Result<()> {
    match vectors.iter().find(|v| v.len() != dim) {
        Some(v) => Err(Error::DimensionMismatch {
            expected: dim,
            found: v.len(),
        }),
        None => Ok(()),
    }
}

fn unit_vector(dim: usize, k: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); dim];
    v[k] = Rational::one();
    v
}

fn index(shape: SuperShape, i: usize, j: usize) -> usize {
    i * shape.m() + j
}

/// `sum_{i<r} F_ii`, the image of the scalar matrix in the top-left block.
fn scalar_pattern(shape: SuperShape, r: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); shape.m() * shape.n()];
    for i in 0..r {
        v[index(shape, i, i)] = Rational::one();
    }
    v
}

/// Symmetric bilinear form given by its Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    gram: RectMatrix,
}

impl BilinearForm {
    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &RectMatrix {
        &self.gram
    }

    pub fn is_symmetric(&self) -> bool {
        self.gram == self.gram.transpose()
    }

    pub fn is_zero(&self) -> bool {
        self.gram.is_zero()
    }

    pub fn is_nondegenerate(&self) -> bool {
        linalg::rank(&self.gram) == self.dim()
    }

    pub fn eval(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let gy = self.gram.mul_vec(y);
        x.iter().zip(&gy).map(|(a, b)| a * b).sum()
    }

    /// Gram matrix of the restriction to the span of `vectors`.
    pub fn restrict(&self, vectors: &[Vec<Rational>]) -> BilinearForm {
        let k = vectors.len();
        let mut gram = RectMatrix::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                gram[(i, j)] = self.eval(&vectors[i], &vectors[j]);
            }
        }
        BilinearForm { gram }
    }
}

/// `{W : [[F_u, W]] = 0 for every u}`: nullspace of all `ad F_u` stacked.
pub fn center_bruteforce(alg: &DerivedAlgebra) -> Subspace {
    let dim = alg.dim();
    let rows = (0..dim).flat_map(|u| {
        let ad = alg.ad_basis(u);
        (0..dim).map(move |k| ad.row(k).to_vec())
    });
    Subspace {
        ambient_dim: dim,
        basis: linalg::nullspace_of_rows(rows, dim),
    }
}

/// Center of the rank-`r` normal-form algebra from the block formulas.
///
/// * `r = m = n`: the scalar line `sum F_ii`;
/// * `r = m` or `r = n`, not both: zero;
/// * otherwise (including `r = 0`): all `F_ij` with `i > r` and `j > r`.
pub fn center_closed_form(shape: SuperShape, r: usize) -> Result<Subspace> {
    shape.check_rank(r)?;
    let (m, n) = (shape.m(), shape.n());
    let dim = m * n;
    let basis = if r == m && r == n {
        vec![scalar_pattern(shape, r)]
    } else if r == m || r == n {
        Vec::new()
    } else {
        let mut b = Vec::new();
        for i in r..n {
            for j in r..m {
                b.push(unit_vector(dim, index(shape, i, j)));
            }
        }
        b
    };
    Ok(Subspace {
        ambient_dim: dim,
        basis,
    })
}

/// `[V, V]`, the span of brackets of basis pairs of `V`.
pub fn bracket_span(alg: &DerivedAlgebra, v: &Subspace, w: &Subspace) -> Result<Subspace> {
    let dim = alg.dim();
    let mut red = RowReducer::new(dim);
    for x in v.basis() {
        for y in w.basis() {
            red.insert(alg.bracket_coords(x, y)?);
        }
    }
    Ok(Subspace::from_reducer(dim, red))
}

pub fn is_subalgebra(alg: &DerivedAlgebra, v: &Subspace) -> Result<bool> {
    Ok(bracket_span(alg, v, v)?.is_subspace_of(v))
}

/// `[A, V] ⊆ V`.
pub fn is_ideal(alg: &DerivedAlgebra, v: &Subspace) -> Result<bool> {
    let whole = Subspace::whole(alg.dim());
    Ok(bracket_span(alg, &whole, v)?.is_subspace_of(v))
}

/// `V ⊇ V^(1) ⊇ V^(2) ⊇ ...`, stopping once a term no longer shrinks. The
/// stable term is not repeated, so a perfect `V` gives `[V]`.
pub fn derived_series(alg: &DerivedAlgebra, v: &Subspace) -> Result<Vec<Subspace>> {
    if v.ambient_dim() != alg.dim() {
        return Err(Error::DimensionMismatch {
            expected: alg.dim(),
            found: v.ambient_dim(),
        });
    }
    if !is_subalgebra(alg, v)? {
        return Err(Error::NotASubalgebra);
    }
    let mut series = vec![v.clone()];
    loop {
        let last = series.last().expect("series is nonempty");
        let next = bracket_span(alg, last, last)?;
        if next.dim() == last.dim() {
            return Ok(series);
        }
        series.push(next);
    }
}

pub fn is_solvable(alg: &DerivedAlgebra, v: &Subspace) -> Result<bool> {
    let series = derived_series(alg, v)?;
    Ok(series.last().is_none_or(|s| s.dim() == 0))
}

/// `kappa(F_u, F_v) = tr(ad F_u ad F_v)`.
pub fn killing_form(alg: &DerivedAlgebra) -> BilinearForm {
    let dim = alg.dim();
    // Column-sparse ad matrices: ad[u][v] lists (k, c) with ad F_u e_v = sum c e_k.
    let ads: Vec<Vec<Vec<(usize, Rational)>>> = (0..dim)
        .map(|u| (0..dim).map(|v| alg.bracket_terms(u, v)).collect())
        .collect();
    let mut gram = RectMatrix::zeros(dim, dim);
    for u in 0..dim {
        for v in u..dim {
            // tr(ad_u ad_v) = sum_a sum_k ad_u[k][a] ad_v[a][k]
            //              = sum over columns a of ad_u, entries (k, c): c * ad_v[a][k]
            let mut t = Rational::zero();
            for (a, col) in ads[u].iter().enumerate() {
                for (k, c) in col {
                    if let Some((_, d)) = ads[v][*k].iter().find(|(row, _)| *row == a) {
                        t += c * d;
                    }
                }
            }
            gram[(u, v)] = t.clone();
            gram[(v, u)] = t;
        }
    }
    BilinearForm { gram }
}

/// Radical as the Killing-orthogonal of the derived algebra,
/// `{x : kappa(x, y) = 0 for all y in [A, A]}`; valid in characteristic 0.
pub fn radical_via_killing(alg: &DerivedAlgebra) -> Subspace {
    let dim = alg.dim();
    let whole = Subspace::whole(dim);
    let derived = bracket_span(alg, &whole, &whole).expect("dimensions agree");
    if derived.dim() == 0 {
        return whole;
    }
    let kappa = killing_form(alg);
    // Row y^T G for each y in [A, A]; x is orthogonal iff (y^T G) x = 0.
    let gt = kappa.gram.transpose();
    let rows: Vec<Vec<Rational>> = derived.basis().iter().map(|y| gt.mul_vec(y)).collect();
    let m = RectMatrix::from_rows(rows, dim).expect("rows have ambient length");
    Subspace {
        ambient_dim: dim,
        basis: linalg::nullspace(&m),
    }
}

/// Radical of the rank-`r` normal-form algebra: the scalar pattern in the
/// top-left `r x r` block plus every `F_ij` with `i > r` or `j > r`.
pub fn radical_closed_form(shape: SuperShape, r: usize) -> Result<Subspace> {
    shape.check_rank(r)?;
    if r == 0 {
        return Err(Error::RankOutOfRange {
            m: shape.m(),
            n: shape.n(),
            r,
        });
    }
    let dim = shape.m() * shape.n();
    let mut basis = vec![scalar_pattern(shape, r)];
    for i in 0..shape.n() {
        for j in 0..shape.m() {
            if i >= r || j >= r {
                basis.push(unit_vector(dim, index(shape, i, j)));
            }
        }
    }
    Ok(Subspace {
        ambient_dim: dim,
        basis,
    })
}

/// Levi factor of the rank-`r` normal-form algebra: traceless `r x r`
/// patterns in the top-left block. Basis: off-diagonal `F_ij` and
/// `F_ii - F_{i+1,i+1}`.
pub fn levi_closed_form(shape: SuperShape, r: usize) -> Result<Subspace> {
    shape.check_rank(r)?;
    if r == 0 {
        return Err(Error::RankOutOfRange {
            m: shape.m(),
            n: shape.n(),
            r,
        });
    }
    let dim = shape.m() * shape.n();
    let mut basis = Vec::new();
    for i in 0..r {
        for j in 0..r {
            if i != j {
                basis.push(unit_vector(dim, index(shape, i, j)));
            }
        }
    }
    for i in 0..r - 1 {
        let mut v = unit_vector(dim, index(shape, i, i));
        v[index(shape, i + 1, i + 1)] = -Rational::one();
        basis.push(v);
    }
    Ok(Subspace {
        ambient_dim: dim,
        basis,
    })
}

/// Killing form of `A/R`, realised on a complement `S` of the ideal `R`:
/// brackets of `S` are projected onto `S` along `R`.
pub fn quotient_killing_form(
    alg: &DerivedAlgebra,
    s: &Subspace,
    r: &Subspace,
) -> Result<BilinearForm> {
    let dim = alg.dim();
    let k = s.dim();
    // Columns: basis of S then basis of R. Solving in this basis and keeping
    // the first k coordinates is the projection along R.
    let mut cols: Vec<Vec<Rational>> = s.basis().to_vec();
    cols.extend(r.basis().iter().cloned());
    let frame = RectMatrix::from_columns(&cols, dim)?;
    let inv = linalg::invert(&frame)
        .map_err(|_| Error::VerificationFailure("S and R do not span the algebra".into()))?;
    let to_s = inv.submatrix(0, 0, k, dim);
    let project = |v: &[Rational]| -> Vec<Rational> { to_s.mul_vec(v) };
    // ad on the quotient: ad_s[:, j] = coordinates of [s, s_j] in S.
    let ads: Vec<RectMatrix> = s
        .basis()
        .iter()
        .map(|x| {
            let columns: Vec<Vec<Rational>> = s
                .basis()
                .iter()
                .map(|y| project(&alg.bracket_coords(x, y).expect("lengths match")))
                .collect();
            RectMatrix::from_columns(&columns, k).expect("projected columns have length k")
        })
        .collect();
    let mut gram = RectMatrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            gram[(i, j)] = (&ads[i] * &ads[j]).trace();
        }
    }
    Ok(BilinearForm { gram })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub m: usize,
    pub n: usize,
    pub rank_r: usize,
    pub dim_total: usize,
    pub dim_levi: usize,
    pub dim_radical: usize,
    pub dim_center: usize,
    pub is_abelian: bool,
    pub is_solvable: bool,
}

impl DecompositionReport {
    /// `sl(r)`, or `0` when the Levi factor is trivial.
    pub fn levi_name(&self) -> String {
        if self.dim_levi == 0 {
            "0".to_string()
        } else {
            format!("sl({})", self.rank_r)
        }
    }
}

fn require(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::VerificationFailure(what()))
    }
}

/// Builds the rank-`r` normal-form algebra, checks its Levi decomposition
/// against generic computations, and reports the dimensions.
///
/// Checked, in order: `S + R` is everything and `S ∩ R = 0`; `R` is an
/// ideal; `R^(3) = 0`; `R^(2)` lies in the center; `S` is a subalgebra and
/// perfect for `r >= 2`; `S` brackets like `sl(r)` under the commutator;
/// the Killing-form radical equals `R`; the center matches its block
/// formula; the Killing form of `A/R` is nondegenerate for `r >= 2`.
pub fn verify_levi_decomposition(shape: SuperShape, r: usize) -> Result<DecompositionReport> {
    let alg = build_algebra(shape, r)?;
    let dim = alg.dim();
    let (m, n) = (shape.m(), shape.n());
    let at = |what: &str| format!("{shape}, r={r}: {what}");

    let center = center_bruteforce(&alg);
    require(center.same_span(&center_closed_form(shape, r)?), || {
        at("center differs from block formula")
    })?;
    let killing_radical = radical_via_killing(&alg);

    let (levi, radical) = if r == 0 {
        (Subspace::zero(dim), Subspace::whole(dim))
    } else {
        (levi_closed_form(shape, r)?, radical_closed_form(shape, r)?)
    };

    require(levi.sum(&radical)?.dim() == dim, || {
        at("S + R is not the whole algebra")
    })?;
    require(levi.intersection_dim(&radical)? == 0, || {
        at("S and R intersect")
    })?;
    require(is_ideal(&alg, &radical)?, || at("R is not an ideal"))?;

    let series = derived_series(&alg, &radical)?;
    require(series.last().is_none_or(|t| t.dim() == 0), || {
        at("R is not solvable")
    })?;
    require(series.len() <= 4, || at("R^(3) is nonzero"))?;
    if let Some(r2) = series.get(2) {
        require(r2.is_subspace_of(&center), || at("R^(2) is not central"))?;
    }
    require(killing_radical.same_span(&radical), || {
        at("Killing-form radical differs from R")
    })?;

    require(is_subalgebra(&alg, &levi)?, || at("S is not a subalgebra"))?;
    if r >= 2 {
        require(bracket_span(&alg, &levi, &levi)?.same_span(&levi), || {
            at("S is not perfect")
        })?;
        require(levi_matches_sl(&alg, &levi, r)?, || {
            at("S does not bracket like sl(r)")
        })?;
        let q = quotient_killing_form(&alg, &levi, &radical)?;
        require(q.is_nondegenerate(), || {
            at("Killing form of A/R is degenerate")
        })?;
    }

    Ok(DecompositionReport {
        m,
        n,
        rank_r: r,
        dim_total: dim,
        dim_levi: levi.dim(),
        dim_radical: radical.dim(),
        dim_center: center.dim(),
        is_abelian: alg.is_abelian(),
        is_solvable: is_solvable(&alg, &Subspace::whole(dim))?,
    })
}

/// Reads the top-left `r x r` block of a coordinate vector as a matrix.
fn top_left_block(shape: SuperShape, r: usize, v: &[Rational]) -> RectMatrix {
    let mut out = RectMatrix::zeros(r, r);
    for i in 0..r {
        for j in 0..r {
            out[(i, j)] = v[index(shape, i, j)].clone();
        }
    }
    out
}

/// The identification `S -> sl(r)` sending a pattern to its `r x r` block is
/// a bijection onto traceless matrices that carries the derived bracket to
/// the matrix commutator.
fn levi_matches_sl(alg: &DerivedAlgebra, levi: &Subspace, r: usize) -> Result<bool> {
    let shape = alg.shape();
    let blocks: Vec<RectMatrix> = levi
        .basis()
        .iter()
        .map(|v| top_left_block(shape, r, v))
        .collect();
    if blocks.iter().any(|b| !b.trace().is_zero()) {
        return Ok(false);
    }
    let flat: Vec<Vec<Rational>> = blocks.iter().map(|b| b.entries().to_vec()).collect();
    if linalg::rank_of_vectors(&flat, r * r) != r * r - 1 {
        return Ok(false);
    }
    for (x, bx) in levi.basis().iter().zip(&blocks) {
        for (y, by) in levi.basis().iter().zip(&blocks) {
            let z = alg.bracket_coords(x, y)?;
            let commutator = &(bx * by) - &(by * bx);
            if !levi.contains(&z) || top_left_block(shape, r, &z) != commutator {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
