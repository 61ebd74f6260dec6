use proptest::prelude::*;
use thrallkit_core::combinatorics::{lie_dim, lyndon_words, Word};
use thrallkit_core::free_lie::{exp_truncated, is_lie_element, log_truncated, lyndon_bracketing, LieElement};
use thrallkit_core::group_algebra::higher_lie_idempotents;
use thrallkit_core::permutation::Permutation;
use thrallkit_core::scalar::{ratio, Scalar};
use thrallkit_core::shuffle::{is_group_like, shuffle, signature, PiecewiseLinearPath, WordFunctional};
use thrallkit_core::tensor::Tensor;

fn rational() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

fn lie_element(dim: usize, k_max: usize) -> impl Strategy<Value = LieElement> {
    let words: Vec<Word> = (1..=k_max).flat_map(|k| lyndon_words(dim, k)).collect();
    proptest::collection::vec(rational(), words.len()).prop_map(move |cs| {
        LieElement::from_terms(dim, k_max, words.iter().cloned().zip(cs)).unwrap()
    })
}

fn path(dim: usize) -> impl Strategy<Value = PiecewiseLinearPath> {
    proptest::collection::vec(proptest::collection::vec(rational(), dim), 1..4)
        .prop_map(|points| PiecewiseLinearPath::new(points).unwrap())
}

fn functional(dim: usize, k: usize) -> impl Strategy<Value = WordFunctional> {
    let n = dim.pow(k as u32);
    proptest::collection::vec(-3i64..=3, n).prop_map(move |cs| {
        let terms = cs.into_iter().enumerate().map(|(i, c)| (Word::from_index(dim, k, i), ratio(c, 1)));
        WordFunctional::from_terms(dim, terms).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn exponentials_of_lie_series_are_group_like(l in lie_element(2, 4)) {
        prop_assert!(is_group_like(&exp_truncated(&l.to_series()).unwrap()).unwrap());
    }

    #[test]
    fn log_inverts_exp(l in lie_element(2, 4)) {
        let series = l.to_series();
        prop_assert_eq!(log_truncated(&exp_truncated(&series).unwrap()).unwrap(), series);
    }

    #[test]
    fn chen_identity(a in path(2), b in path(2)) {
        let joined = a.concat(&b).unwrap();
        let product = signature(&a, 4).product(&signature(&b, 4)).unwrap();
        prop_assert_eq!(signature(&joined, 4), product);
    }

    #[test]
    fn log_signatures_are_lie(p in path(3)) {
        let log = log_truncated(&signature(&p, 3)).unwrap();
        for i in 1..=3 {
            prop_assert!(is_lie_element(log.level(i)));
        }
    }

    #[test]
    fn reversal_cancels(p in path(2)) {
        let round_trip = signature(&p, 3).product(&signature(&p.reversed(), 3)).unwrap();
        prop_assert_eq!(round_trip, thrallkit_core::tensor::TensorSeries::unit(2, 3));
    }

    #[test]
    fn shuffle_is_commutative(a in functional(2, 2), b in functional(2, 1)) {
        prop_assert_eq!(shuffle(&a, &b).unwrap(), shuffle(&b, &a).unwrap());
    }

    #[test]
    fn shuffle_is_dual_to_group_likeness(l in lie_element(2, 3), a in functional(2, 1), b in functional(2, 2)) {
        let s = exp_truncated(&l.to_series()).unwrap();
        let lhs = shuffle(&a, &b).unwrap().evaluate(&s).unwrap();
        prop_assert_eq!(lhs, a.evaluate(&s).unwrap() * b.evaluate(&s).unwrap());
    }

    #[test]
    fn inverse_composes_to_identity(images in Just((1..=5usize).collect::<Vec<_>>()).prop_shuffle()) {
        let p = Permutation::from_images(&images).unwrap();
        prop_assert!(p.compose(&p.inverse()).is_identity());
        prop_assert_eq!(p.inverse().sign(), p.sign());
    }

    #[test]
    fn powers_have_rank_one_flattenings(v in proptest::collection::vec(rational(), 3)) {
        prop_assume!(v.iter().any(|c| *c != ratio(0, 1)));
        let t = Tensor::power(&Tensor::vector(&v), 3);
        for split in [[1usize].as_slice(), &[2], &[1, 3]] {
            prop_assert_eq!(t.flattening_rank(split).unwrap(), 1);
        }
    }

    #[test]
    fn idempotents_fix_their_thrall_pieces(l in lie_element(2, 3)) {
        let idempotents = higher_lie_idempotents(3).unwrap();
        let level = l.level(3);
        let e3 = &idempotents[&"3".parse().unwrap()];
        prop_assert_eq!(e3.act(&level).unwrap(), level.clone());
        for (lambda, e) in &idempotents {
            if lambda.len() > 1 {
                prop_assert!(e.act(&level).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn lyndon_counts_match_necklace_formula() {
    for dim in 1..=3 {
        for k in 1..=7 {
            assert_eq!(lyndon_words(dim, k).len() as u128, lie_dim(dim, k));
            for w in lyndon_words(dim, k) {
                assert!(is_lie_element(&lyndon_bracketing(&w, dim).unwrap()));
            }
        }
    }
}
