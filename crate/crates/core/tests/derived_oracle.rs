//! Structure constants recomputed from full (m+n)x(m+n) matrices, without
//! the block-level bracket code.

use dbracket::derived::{build_algebra_from_generator, OddGenerator};
use dbracket::linalg::{int, RectMatrix};
use dbracket::random::random_generators;
use dbracket::structure::{center_bruteforce, derived_series, radical_closed_form};
use dbracket::{build_algebra, DerivedAlgebra, SuperShape};

fn shapes(max: usize) -> Vec<SuperShape> {
    (1..=max)
        .flat_map(|m| (1..=max).map(move |n| SuperShape::new(m, n).unwrap()))
        .collect()
}

/// Full matrix with `c` in the lower-left n x m corner.
fn lower(m: usize, n: usize, c: &RectMatrix) -> RectMatrix {
    let mut full = RectMatrix::zeros(m + n, m + n);
    full.set_block(m, 0, c);
    full
}

fn upper(m: usize, n: usize, b: &RectMatrix) -> RectMatrix {
    let mut full = RectMatrix::zeros(m + n, m + n);
    full.set_block(0, m, b);
    full
}

/// `[X, [B, Y]]` with X, Y, B odd: the inner bracket is the anticommutator
/// and the outer one a commutator, since `[B, Y]` is even.
fn oracle_bracket(m: usize, n: usize, b: &RectMatrix, u: usize, v: usize) -> RectMatrix {
    let x = lower(m, n, &RectMatrix::unit(n, m, u / m, u % m));
    let y = lower(m, n, &RectMatrix::unit(n, m, v / m, v % m));
    let bb = upper(m, n, b);
    let w = &(&bb * &y) + &(&y * &bb);
    &(&x * &w) - &(&w * &x)
}

fn assert_matches_oracle(alg: &DerivedAlgebra, b: &RectMatrix) {
    let (m, n) = (alg.shape().m(), alg.shape().n());
    for u in 0..alg.dim() {
        for v in 0..alg.dim() {
            let full = oracle_bracket(m, n, b, u, v);
            let c = full.submatrix(m, 0, n, m);
            assert_eq!(
                full,
                lower(m, n, &c),
                "{}: bracket leaves g_-1",
                alg.shape()
            );
            assert_eq!(
                alg.bracket_basis(u, v),
                c.entries(),
                "{} b={b:?} ({u},{v})",
                alg.shape()
            );
        }
    }
}

#[test]
fn normal_form_constants_match_full_matrices() {
    for s in shapes(4) {
        for r in 0..=s.m().min(s.n()) {
            let alg = build_algebra(s, r).unwrap();
            assert_matches_oracle(&alg, &RectMatrix::rank_normal(s.m(), s.n(), r));
        }
    }
}

#[test]
fn random_generator_constants_match_full_matrices() {
    for s in shapes(3) {
        for g in random_generators(11, s, 5) {
            assert_matches_oracle(&build_algebra_from_generator(&g), g.block());
        }
    }
}

#[test]
fn explicit_generator() {
    // b = [[1, 2], [2, 4]] has rank 1 in gl(2|2).
    let s = SuperShape::new(2, 2).unwrap();
    let b = RectMatrix::from_i64(&[&[1, 2], &[2, 4]]);
    let g = OddGenerator::new(s, b.clone()).unwrap();
    assert_eq!(g.rank(), 1);
    let alg = build_algebra_from_generator(&g);
    assert_matches_oracle(&alg, &b);
    // [F_11, F_11] is zero; [F_11, F_12] = F_11 b F_12 - F_12 b F_11 in the C block.
    let f11 = RectMatrix::unit(2, 2, 0, 0);
    let f12 = RectMatrix::unit(2, 2, 0, 1);
    let want = &(&(&f11 * &b) * &f12) - &(&(&f12 * &b) * &f11);
    assert_eq!(alg.bracket_basis(0, 1), want.entries());
    assert_eq!(want[(0, 1)], int(1));
}

#[test]
fn second_derived_radical_is_central() {
    for s in shapes(4) {
        for r in 1..=s.m().min(s.n()) {
            let alg = build_algebra(s, r).unwrap();
            let rad = radical_closed_form(s, r).unwrap();
            let series = derived_series(&alg, &rad).unwrap();
            assert!(
                series.len() <= 4,
                "{s} r={r}: derived length {}",
                series.len()
            );
            assert_eq!(series.last().unwrap().dim(), 0, "{s} r={r}");
            if let Some(r2) = series.get(2) {
                assert!(r2.is_subspace_of(&center_bruteforce(&alg)), "{s} r={r}");
            }
        }
    }
}
