//! Seeded random generators `B` for the non-normal-form checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::derived::OddGenerator;
use crate::linalg::{rat, Rational, RectMatrix};
use crate::superalg::SuperShape;

/// Reproducible stream for one shape: the same `(seed, shape)` always gives
/// the same generators.
pub fn shape_rng(seed: u64, shape: SuperShape) -> ChaCha8Rng {
    let salt = (shape.m() as u64) << 32 | shape.n() as u64;
    ChaCha8Rng::seed_from_u64(seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Small rational with numerator in `-3..=3` and denominator in `1..=3`.
pub fn random_rational(rng: &mut impl Rng) -> Rational {
    rat(rng.gen_range(-3..=3), rng.gen_range(1..=3))
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> RectMatrix {
    let entries = (0..rows * cols).map(|_| random_rational(rng)).collect();
    RectMatrix::new(rows, cols, entries).expect("entry count matches")
}

/// Random generator of positive rank that is not already in normal form.
///
/// `b` is a product of random `m x k` and `k x n` factors with `k` drawn from
/// `1..=min(m, n)`, so every rank up to `min(m, n)` occurs.
pub fn random_generator(rng: &mut impl Rng, shape: SuperShape) -> OddGenerator {
    let (m, n) = (shape.m(), shape.n());
    loop {
        let k = rng.gen_range(1..=m.min(n));
        let b = &random_matrix(rng, m, k) * &random_matrix(rng, k, n);
        let r = crate::linalg::rank(&b);
        if r == 0 || b == RectMatrix::rank_normal(m, n, r) {
            continue;
        }
        return OddGenerator::new(shape, b).expect("block has generator shape");
    }
}

pub fn random_generators(seed: u64, shape: SuperShape, count: usize) -> Vec<OddGenerator> {
    let mut rng = shape_rng(seed, shape);
    (0..count)
        .map(|_| random_generator(&mut rng, shape))
        .collect()
}
