//! Algebraic laws over random inputs.

use proptest::prelude::*;
use symalg::construct::{build, random_params, Kind};
use symalg::decompose::split;
use symalg::format::{parse_matrix, to_json};
use symalg::verify::trial_rng;
use symalg::{classify, conjugate_j, from_block, to_block, Matrix, Scalar, SplitKind};

fn scalar() -> impl Strategy<Value = Scalar> {
    (-20i64..20, 1i64..6, -20i64..20, 1i64..6).prop_map(|(a, b, c, d)| Scalar::from_parts((a, b), (c, d)))
}

fn int_matrix(n: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(-9i64..=9, n * n)
        .prop_map(move |xs| Matrix::from_fn(n, n, |i, j| Scalar::from_int(xs[i * n + j])))
}

fn sized_matrix() -> impl Strategy<Value = Matrix> {
    (1usize..=6).prop_flat_map(int_matrix)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_laws(x in scalar(), y in scalar(), z in scalar()) {
        prop_assert_eq!(&(&x + &y) * &z, &(&x * &z) + &(&y * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.inverse().unwrap(), Scalar::one());
        }
        prop_assert_eq!(x.to_string().parse::<Scalar>().unwrap(), x);
    }

    #[test]
    fn block_round_trip(m in sized_matrix()) {
        prop_assert_eq!(from_block(&to_block(&m).unwrap()), m);
    }

    #[test]
    fn half_turn_is_involution(m in sized_matrix()) {
        prop_assert_eq!(conjugate_j(&conjugate_j(&m).unwrap()).unwrap(), m);
    }

    #[test]
    fn splits_recombine_into_graded_parts(m in sized_matrix()) {
        for kind in SplitKind::ALL {
            if kind == SplitKind::Qp && m.rows() % 2 == 1 {
                continue;
            }
            let pair = split(&m, kind).unwrap();
            let (even, odd) = kind.spaces();
            prop_assert_eq!(pair.recombine(), m.clone());
            prop_assert!(even.contains(&pair.even_part).unwrap());
            prop_assert!(odd.contains(&pair.odd_part).unwrap());
            // Splitting a part again leaves it in place.
            prop_assert_eq!(split(&pair.even_part, kind).unwrap().even_part, pair.even_part);
        }
    }

    #[test]
    fn classify_never_disagrees(m in sized_matrix()) {
        prop_assert!(classify(&m).is_ok());
    }

    #[test]
    fn json_round_trip(n in 1usize..=5, xs in proptest::collection::vec(scalar(), 25)) {
        let m = Matrix::from_fn(n, n, |i, j| xs[i * 5 + j].clone());
        prop_assert_eq!(parse_matrix(&to_json(&m)).unwrap(), m);
    }

    #[test]
    fn constructors_are_sound(seed in any::<u64>(), n in 1usize..=7, k in 0usize..12) {
        let kind = Kind::ALL[k];
        prop_assume!(!(kind.requires_even() && n % 2 == 1));
        let mut rng = trial_rng(seed, 0);
        let m = symalg::construct::random_member(kind, n, &mut rng).unwrap();
        prop_assert!(kind.space().contains(&m).unwrap());
        if n > 1 {
            let p = random_params(kind, n, &mut rng).unwrap();
            let text = serde_json::to_string(&p).unwrap();
            let back = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(build(&back, n).unwrap(), build(&p, n).unwrap());
        }
    }
}
