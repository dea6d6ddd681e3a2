//! The general linear Lie superalgebra gl(m|n).
//!
//! An element is an `(m+n) x (m+n)` matrix split into blocks
//!
//! ```text
//!        m   n
//!   m  [ A   B ]
//!   n  [ C   D ]
//! ```
//!
//! The even part is block-diagonal (A, D), the odd part block-antidiagonal
//! (B, C). The short Z-grading puts C in degree -1, A and D in degree 0 and
//! B in degree +1.

use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Rational, RectMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SuperShape {
    m: usize,
    n: usize,
}

impl SuperShape {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidShape { m, n });
        }
        Ok(Self { m, n })
    }

    /// Dimension of the even part of the underlying super vector space.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Dimension of the odd part.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.m + self.n
    }

    /// The shape with even and odd parts exchanged, gl(n|m).
    pub fn flipped(&self) -> Self {
        Self {
            m: self.n,
            n: self.m,
        }
    }

    pub fn check_rank(&self, r: usize) -> Result<()> {
        if r > self.m.min(self.n) {
            return Err(Error::RankOutOfRange {
                m: self.m,
                n: self.n,
                r,
            });
        }
        Ok(())
    }
}

impl fmt::Display for SuperShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gl({}|{})", self.m, self.n)
    }
}

/// Degree in the short Z-grading.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ZDegree {
    MinusOne,
    Zero,
    PlusOne,
}

impl ZDegree {
    pub fn value(self) -> i32 {
        match self {
            ZDegree::MinusOne => -1,
            ZDegree::Zero => 0,
            ZDegree::PlusOne => 1,
        }
    }
}

impl TryFrom<i32> for ZDegree {
    type Error = Error;

    fn try_from(d: i32) -> Result<Self> {
        match d {
            -1 => Ok(ZDegree::MinusOne),
            0 => Ok(ZDegree::Zero),
            1 => Ok(ZDegree::PlusOne),
            _ => Err(Error::ShapeMismatch(format!(
                "no graded component of degree {d}"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    fn is_odd(self) -> bool {
        self == Parity::Odd
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GradeTag {
    MinusOne,
    Zero,
    PlusOne,
    Even,
    Odd,
    Mixed,
}

/// Finest grade of a supermatrix. The zero matrix lies in every graded
/// component; it is reported with `is_zero` set and tag `MinusOne`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Grade {
    pub tag: GradeTag,
    pub is_zero: bool,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SuperMatrix {
    shape: SuperShape,
    a: RectMatrix,
    b: RectMatrix,
    c: RectMatrix,
    d: RectMatrix,
}

impl SuperMatrix {
    pub fn zeros(shape: SuperShape) -> Self {
        let (m, n) = (shape.m, shape.n);
        Self {
            shape,
            a: RectMatrix::zeros(m, m),
            b: RectMatrix::zeros(m, n),
            c: RectMatrix::zeros(n, m),
            d: RectMatrix::zeros(n, n),
        }
    }

    pub fn identity(shape: SuperShape) -> Self {
        Self {
            a: RectMatrix::identity(shape.m),
            d: RectMatrix::identity(shape.n),
            ..Self::zeros(shape)
        }
    }

    pub fn from_blocks(
        shape: SuperShape,
        a: RectMatrix,
        b: RectMatrix,
        c: RectMatrix,
        d: RectMatrix,
    ) -> Result<Self> {
        let (m, n) = (shape.m, shape.n);
        let want = [(m, m), (m, n), (n, m), (n, n)];
        for (name, blk, (r, cc)) in [
            ("A", &a, want[0]),
            ("B", &b, want[1]),
            ("C", &c, want[2]),
            ("D", &d, want[3]),
        ] {
            if blk.rows() != r || blk.cols() != cc {
                return Err(Error::ShapeMismatch(format!(
                    "block {name} of {shape} must be {r}x{cc}, got {}x{}",
                    blk.rows(),
                    blk.cols()
                )));
            }
        }
        Ok(Self { shape, a, b, c, d })
    }

    /// Splits a full `(m+n) x (m+n)` matrix into blocks.
    pub fn from_full(shape: SuperShape, full: &RectMatrix) -> Result<Self> {
        let (m, n) = (shape.m, shape.n);
        if full.rows() != m + n || full.cols() != m + n {
            return Err(Error::ShapeMismatch(format!(
                "{shape} needs a {0}x{0} matrix, got {1}x{2}",
                m + n,
                full.rows(),
                full.cols()
            )));
        }
        Ok(Self {
            shape,
            a: full.submatrix(0, 0, m, m),
            b: full.submatrix(0, m, m, n),
            c: full.submatrix(m, 0, n, m),
            d: full.submatrix(m, m, n, n),
        })
    }

    pub fn to_full(&self) -> RectMatrix {
        let (m, n) = (self.shape.m, self.shape.n);
        let mut full = RectMatrix::zeros(m + n, m + n);
        full.set_block(0, 0, &self.a);
        full.set_block(0, m, &self.b);
        full.set_block(m, 0, &self.c);
        full.set_block(m, m, &self.d);
        full
    }

    /// Matrix unit `E_{row,col}` of the full matrix, zero-based indices.
    pub fn unit(shape: SuperShape, row: usize, col: usize) -> Self {
        let s = shape.size();
        assert!(
            row < s && col < s,
            "matrix unit ({row},{col}) outside {shape}"
        );
        Self::from_full(shape, &RectMatrix::unit(s, s, row, col)).expect("shape is consistent")
    }

    /// Element of g_{-1} with the given `n x m` block C.
    pub fn lower(shape: SuperShape, c: RectMatrix) -> Result<Self> {
        let z = Self::zeros(shape);
        Self::from_blocks(shape, z.a, z.b, c, z.d)
    }

    /// Element of g_1 with the given `m x n` block B.
    pub fn upper(shape: SuperShape, b: RectMatrix) -> Result<Self> {
        let z = Self::zeros(shape);
        Self::from_blocks(shape, z.a, b, z.c, z.d)
    }

    pub fn shape(&self) -> SuperShape {
        self.shape
    }

    pub fn a(&self) -> &RectMatrix {
        &self.a
    }

    pub fn b(&self) -> &RectMatrix {
        &self.b
    }

    pub fn c(&self) -> &RectMatrix {
        &self.c
    }

    pub fn d(&self) -> &RectMatrix {
        &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn even_part(&self) -> Self {
        Self {
            b: RectMatrix::zeros(self.shape.m, self.shape.n),
            c: RectMatrix::zeros(self.shape.n, self.shape.m),
            ..self.clone()
        }
    }

    pub fn odd_part(&self) -> Self {
        Self {
            a: RectMatrix::zeros(self.shape.m, self.shape.m),
            d: RectMatrix::zeros(self.shape.n, self.shape.n),
            ..self.clone()
        }
    }

    /// Parity of a homogeneous element, or `None` for a mixed one. The zero
    /// matrix is reported as even.
    pub fn parity(&self) -> Option<Parity> {
        let even = !(self.a.is_zero() && self.d.is_zero());
        let odd = !(self.b.is_zero() && self.c.is_zero());
        match (even, odd) {
            (true, true) => None,
            (false, true) => Some(Parity::Odd),
            _ => Some(Parity::Even),
        }
    }

    /// Ordinary matrix product.
    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        self.same_shape(rhs)?;
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&rhs.a, &rhs.b, &rhs.c, &rhs.d);
        Ok(Self {
            shape: self.shape,
            a: &(a * a2) + &(b * c2),
            b: &(a * b2) + &(b * d2),
            c: &(c * a2) + &(d * c2),
            d: &(c * b2) + &(d * d2),
        })
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self {
            shape: self.shape,
            a: self.a.scale(s),
            b: self.b.scale(s),
            c: self.c.scale(s),
            d: self.d.scale(s),
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.same_shape(rhs)?;
        Ok(self.zip(rhs, |x, y| x + y))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.same_shape(rhs)?;
        Ok(self.zip(rhs, |x, y| x - y))
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    fn zip(&self, rhs: &Self, f: impl Fn(&RectMatrix, &RectMatrix) -> RectMatrix) -> Self {
        Self {
            shape: self.shape,
            a: f(&self.a, &rhs.a),
            b: f(&self.b, &rhs.b),
            c: f(&self.c, &rhs.c),
            d: f(&self.d, &rhs.d),
        }
    }

    fn same_shape(&self, rhs: &Self) -> Result<()> {
        if self.shape != rhs.shape {
            return Err(Error::ShapeMismatch(format!(
                "{} vs {}",
                self.shape, rhs.shape
            )));
        }
        Ok(())
    }
}

impl fmt::Debug for SuperMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SuperMatrix")
            .field("shape", &self.shape)
            .field("A", &self.a)
            .field("B", &self.b)
            .field("C", &self.c)
            .field("D", &self.d)
            .finish()
    }
}

/// Bracket of two homogeneous elements of known parity.
fn homogeneous_bracket(
    x: &SuperMatrix,
    px: Parity,
    y: &SuperMatrix,
    py: Parity,
) -> Result<SuperMatrix> {
    let xy = x.matmul(y)?;
    let yx = y.matmul(x)?;
    if px.is_odd() && py.is_odd() {
        xy.checked_add(&yx)
    } else {
        xy.checked_sub(&yx)
    }
}

/// The super commutator `XY - (-1)^{|X||Y|} YX`.
///
/// Inputs of mixed parity are split into even and odd parts and the bracket
/// is extended bilinearly.
pub fn super_bracket(x: &SuperMatrix, y: &SuperMatrix) -> Result<SuperMatrix> {
    x.same_shape(y)?;
    let parts = |z: &SuperMatrix| match z.parity() {
        Some(p) => vec![(z.clone(), p)],
        None => vec![(z.even_part(), Parity::Even), (z.odd_part(), Parity::Odd)],
    };
    let mut out = SuperMatrix::zeros(x.shape);
    for (xp, px) in parts(x) {
        for (yp, py) in parts(y) {
            out = out.checked_add(&homogeneous_bracket(&xp, px, &yp, py)?)?;
        }
    }
    Ok(out)
}

/// Keeps only the graded component of the given degree. For degree -1 this is
/// the projection onto g_{-1}.
pub fn z_component(x: &SuperMatrix, degree: ZDegree) -> SuperMatrix {
    let (m, n) = (x.shape.m, x.shape.n);
    let mut out = SuperMatrix::zeros(x.shape);
    match degree {
        ZDegree::MinusOne => out.c = x.c.clone(),
        ZDegree::Zero => {
            out.a = x.a.clone();
            out.d = x.d.clone();
        }
        ZDegree::PlusOne => out.b = x.b.clone(),
    }
    debug_assert_eq!((out.a.rows(), out.b.cols()), (m, n));
    out
}

/// Projection onto g_{-1}.
pub fn project_minus_one(x: &SuperMatrix) -> SuperMatrix {
    z_component(x, ZDegree::MinusOne)
}

pub fn grade_of(x: &SuperMatrix) -> Grade {
    let nz = |m: &RectMatrix| !m.is_zero();
    let (a, b, c, d) = (nz(&x.a), nz(&x.b), nz(&x.c), nz(&x.d));
    let tag = match (a || d, b, c) {
        (false, false, false) => {
            return Grade {
                tag: GradeTag::MinusOne,
                is_zero: true,
            }
        }
        (false, false, true) => GradeTag::MinusOne,
        (false, true, false) => GradeTag::PlusOne,
        (true, false, false) => GradeTag::Zero,
        (false, true, true) => GradeTag::Odd,
        (true, _, _) => GradeTag::Mixed,
    };
    Grade {
        tag,
        is_zero: false,
    }
}

/// Z-degree of a nonzero element lying in a single graded component.
pub fn z_degree(x: &SuperMatrix) -> Option<ZDegree> {
    let g = grade_of(x);
    if g.is_zero {
        return None;
    }
    match g.tag {
        GradeTag::MinusOne => Some(ZDegree::MinusOne),
        GradeTag::Zero | GradeTag::Even => Some(ZDegree::Zero),
        GradeTag::PlusOne => Some(ZDegree::PlusOne),
        GradeTag::Odd | GradeTag::Mixed => None,
    }
}

/// All `(m+n)^2` matrix units of gl(m|n), each paired with its parity.
pub fn matrix_units(shape: SuperShape) -> Vec<(SuperMatrix, Parity)> {
    let s = shape.size();
    let m = shape.m;
    let mut out = Vec::with_capacity(s * s);
    for i in 0..s {
        for j in 0..s {
            let parity = if (i < m) == (j < m) {
                Parity::Even
            } else {
                Parity::Odd
            };
            out.push((SuperMatrix::unit(shape, i, j), parity));
        }
    }
    out
}

/// Sign `(-1)^{|a||b|}` of the graded identities.
pub fn koszul_sign(pa: Parity, pb: Parity) -> Rational {
    if pa.is_odd() && pb.is_odd() {
        -Rational::one()
    } else {
        Rational::one()
    }
}

/// True if only the block C can be nonzero.
pub fn is_in_minus_one(x: &SuperMatrix) -> bool {
    x.a.is_zero() && x.b.is_zero() && x.d.is_zero()
}
