use dbracket::linalg::{self, int, rank, rank_normal_transforms, RectMatrix, RowReducer};
use proptest::prelude::*;

fn matrix(max: usize) -> impl Strategy<Value = RectMatrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        // Small entries with many zeros so that low ranks come up often.
        proptest::collection::vec(prop_oneof![3 => Just(0i64), 2 => -3i64..=3], r * c)
            .prop_map(move |v| RectMatrix::new(r, c, v.into_iter().map(int).collect()).unwrap())
    })
}

/// Rank by fraction-free Bareiss elimination over i128, independent of the
/// rational code.
fn bareiss_rank(m: &RectMatrix) -> usize {
    let mut a: Vec<Vec<i128>> = (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|x| x.numer().try_into().unwrap())
                .collect()
        })
        .collect();
    let (rows, cols) = (m.rows(), m.cols());
    let mut r = 0;
    let mut prev = 1i128;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

proptest! {
    #[test]
    fn rank_matches_transpose_and_integer_elimination(m in matrix(6)) {
        let r = rank(&m);
        prop_assert_eq!(r, rank(&m.transpose()));
        prop_assert_eq!(r, bareiss_rank(&m));
    }

    #[test]
    fn normal_form_transforms(m in matrix(6)) {
        let r = rank(&m);
        let (pl, pr) = rank_normal_transforms(&m);
        prop_assert_eq!(&(&pl * &m) * &pr, RectMatrix::rank_normal(m.rows(), m.cols(), r));
        let il = linalg::invert(&pl).unwrap();
        let ir = linalg::invert(&pr).unwrap();
        prop_assert!((&il * &pl).is_identity() && (&pl * &il).is_identity());
        prop_assert!((&ir * &pr).is_identity() && (&pr * &ir).is_identity());
    }

    #[test]
    fn nullspace_is_kernel_of_full_dimension(m in matrix(6)) {
        let ker = linalg::nullspace(&m);
        prop_assert_eq!(ker.len(), m.cols() - rank(&m));
        for v in &ker {
            prop_assert!(linalg::is_zero_vector(&m.mul_vec(v)));
        }
        prop_assert_eq!(linalg::rank_of_vectors(&ker, m.cols()), ker.len());
    }

    #[test]
    fn reducer_matches_batch_echelon(m in matrix(6)) {
        let mut red = RowReducer::new(m.cols());
        for i in 0..m.rows() {
            red.insert(m.row(i).to_vec());
        }
        let ech = linalg::echelon(&m);
        prop_assert_eq!(red.pivots(), ech.pivots.clone());
        let rows = red.into_rows();
        for (i, row) in rows.iter().enumerate() {
            prop_assert_eq!(row.as_slice(), ech.rref.row(i));
        }
    }

    #[test]
    fn solve_and_determinant(m in matrix(5)) {
        if m.is_square() {
            let det = linalg::determinant(&m).unwrap();
            prop_assert_eq!(det == int(0), rank(&m) < m.rows());
            let b: Vec<_> = (0..m.rows() as i64).map(int).collect();
            if let Some(x) = linalg::solve(&m, &b) {
                prop_assert_eq!(m.mul_vec(&x), b);
            }
        }
    }
}
