use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thrallkit_core::free_lie::{phi_k, LieElement};
use thrallkit_core::linalg::{Matrix, SpanBasis};
use thrallkit_core::rank_variety::*;
use thrallkit_core::scalar::{self, Scalar};
use thrallkit_core::shuffle::PiecewiseLinearPath;
use thrallkit_core::tensor::{Tensor, TensorSeries};

fn level_one_part(l: &LieElement) -> LieElement {
    let terms = l.coeffs().iter().filter(|(w, _)| w.len() == 1).map(|(w, c)| (w.clone(), c.clone()));
    LieElement::from_terms(l.dim(), l.k_max(), terms).unwrap()
}

#[test]
fn symmetric_iff_rank_one_on_signature_levels() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let mut seen = [0usize; 2];
    for n in 0..50 {
        let d = 2 + n % 2;
        let k = 3 + (n / 2) % 2;
        let mut l = LieElement::random(d, k, &mut rng);
        if n % 3 == 0 {
            l = level_one_part(&l);
        }
        let t = phi_k(&l, k).unwrap();
        let report = signature_rank_one_check(&t, true).unwrap();
        assert!(report.agree, "d={} k={} L={:?}", d, k, l);
        seen[report.symmetric as usize] += 1;
    }
    assert!(seen[0] > 0 && seen[1] > 0);
}

#[test]
fn rank_one_factor_convention() {
    let v: Vec<Scalar> = vec![scalar::int(2), scalar::ratio(-1, 3)];
    let t = Tensor::power(&Tensor::vector(&v), 3);
    let f = rank_one_factors(&t).unwrap().unwrap();
    assert_eq!(f[0], vec![scalar::int(8), scalar::ratio(-4, 3)]);
    assert_eq!(f[1], vec![scalar::int(1), scalar::ratio(-1, 6)]);
    assert_eq!(f[1], f[2]);
}

#[test]
fn off_scope_symmetric_tensors_are_flagged_not_failed() {
    let mut t = Tensor::zeros(2, 2);
    t.set(&"12".parse().unwrap(), scalar::int(1));
    t.set(&"21".parse().unwrap(), scalar::int(1));
    let report = signature_rank_one_check(&t, false).unwrap();
    assert!(report.symmetric && !report.rank_one && report.consistent());
}

#[test]
fn segment_proposition() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..10 {
        let l = LieElement::random(2, 4, &mut rng);
        if l.level(1).is_zero() {
            continue;
        }
        for k in 2..=4 {
            assert!(symmetric_level_implies_segment(&l.to_series(), k).unwrap().holds());
            let seg = level_one_part(&l).to_series();
            let report = symmetric_level_implies_segment(&seg, k).unwrap();
            assert!(report.level_k_symmetric && report.higher_levels_zero && report.all_levels_symmetric);
        }
    }
    let no_level_one = LieElement::from_terms(2, 2, [("12".parse().unwrap(), scalar::int(1))]).unwrap();
    assert!(symmetric_level_implies_segment(&no_level_one.to_series(), 2).is_err());
    let mut not_lie = TensorSeries::zero(2, 2);
    *not_lie.level_mut(1) = Tensor::vector(&[scalar::int(1), scalar::int(0)]);
    not_lie.level_mut(2).set(&"11".parse().unwrap(), scalar::int(1));
    assert!(symmetric_level_implies_segment(&not_lie, 2).is_err());
}

fn collinear_path(rng: &mut ChaCha8Rng) -> PiecewiseLinearPath {
    let dir: Vec<Scalar> = (0..2).map(|_| scalar::random_small(rng)).collect();
    let mut points = vec![vec![Scalar::zero(), Scalar::zero()]];
    let mut t = Scalar::zero();
    for _ in 0..rng.gen_range(1..4) {
        t += scalar::random_small(rng);
        points.push(dir.iter().map(|x| x * &t).collect());
    }
    PiecewiseLinearPath::new(points).unwrap()
}

#[test]
fn straight_line_criteria() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let mut checked = 0;
    while checked < 50 {
        let path = if checked % 3 == 0 {
            collinear_path(&mut rng)
        } else {
            PiecewiseLinearPath::random(2, rng.gen_range(1..4), &mut rng)
        };
        let Ok(report) = fls_check(&path, 4) else { continue };
        assert!(report.agree());
        assert_eq!(report.criterion_a, path.is_collinear());
        checked += 1;
    }
    let staircase = PiecewiseLinearPath::from_integers(&[&[0, 0], &[1, 0], &[1, 1]]).unwrap();
    let report = fls_check(&staircase, 4).unwrap();
    assert!(!report.criterion_a && !report.criterion_b && !report.criterion_c);
    assert_eq!(report.first_failure, Some(2));
    let there_and_back = PiecewiseLinearPath::from_integers(&[&[0, 0], &[1, 2], &[0, 0]]).unwrap();
    assert!(fls_check(&there_and_back, 3).is_err());
}

#[test]
fn skew_plus_rank_one_lemma() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..100 {
        let d = rng.gen_range(1..=5);
        let a = random_skew(d, rng.gen_range(0..=2), &mut rng);
        let x: Vec<Scalar> = if rng.gen_bool(0.5) {
            // A combination of rows of A, so x lies in the row space.
            let mut x = vec![Scalar::zero(); d];
            for i in 0..d {
                let c = scalar::random_int(&mut rng);
                for j in 0..d {
                    x[j] += &c * &a[(i, j)];
                }
            }
            x
        } else {
            (0..d).map(|_| scalar::random_int(&mut rng)).collect()
        };
        let mut sum = a.clone();
        for i in 0..d {
            for j in 0..d {
                sum[(i, j)] += &x[i] * &x[j];
            }
        }
        assert_eq!(skew_plus_rank_one_rank(&a, &x).unwrap(), sum.rank());
    }
}

#[test]
fn determinant_lemma_for_full_rank_skew() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    let mut checked = 0;
    while checked < 20 {
        let d = if checked % 2 == 0 { 2 } else { 4 };
        let a = random_skew(d, d / 2, &mut rng);
        if a.rank() != d {
            continue;
        }
        let mut rows = SpanBasis::new(d);
        for i in 0..d {
            rows.insert(a.row(i).to_vec());
        }
        let x: Vec<Scalar> = (0..d).map(|_| scalar::random_small(&mut rng)).collect();
        assert!(rows.contains(&x));
        let mut sum = a.clone();
        for i in 0..d {
            for j in 0..d {
                sum[(i, j)] += &x[i] * &x[j];
            }
        }
        assert_eq!(sum.determinant(), a.determinant());
        checked += 1;
    }
}

fn bound_by_floats(d: usize, k: usize) -> i64 {
    let (df, kf) = (d as f64, k as f64);
    let num = df.powf(kf) * (df - 1.0) - df * (df.powf(kf / 2.0) - 1.0);
    let den = (df - 1.0) * kf * (kf * df - kf + 1.0);
    (num / den).ceil() as i64 - 1
}

#[test]
fn rank_bound_against_floating_point() {
    for d in 2..=6 {
        for k in 2..=9 {
            assert_eq!(generic_rank_lower_bound(d, k).unwrap(), BigInt::from(bound_by_floats(d, k)), "d={} k={}", d, k);
        }
    }
    assert_eq!(generic_rank_lower_bound(2, 4).unwrap(), BigInt::from(0));
    assert_eq!(generic_rank_lower_bound(3, 6).unwrap(), BigInt::from(bound_by_floats(3, 6)));
}

#[test]
fn hyperdeterminant_examples() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let v = Tensor::vector(&[scalar::int(3), scalar::ratio(1, 2)]);
    assert!(hyperdeterminant_2x2x2(&Tensor::power(&v, 3)).unwrap().is_zero());
    let t = Tensor::from_entries(2, 3, (0..8).map(|_| scalar::random_small(&mut rng)).collect()).unwrap();
    assert!(!hyperdeterminant_2x2x2(&t).unwrap().is_zero());
    assert!(hyperdeterminant_2x2x2(&Tensor::zeros(2, 2)).is_err());
    let s = |n: i64| scalar::int(n);
    let zero = Scalar::zero();
    for (s1, s2, t12) in [(s(1), s(2), zero.clone()), (s(3), s(-1), s(2))] {
        let l = plane_lie_element(&s1, &s2, &t12, &zero, &zero);
        assert!(hyperdeterminant_2x2x2(&phi_k(&l, 3).unwrap()).unwrap().is_zero());
        assert!(hdet_pullback_polynomial(&s1, &s2, &t12, &zero, &zero).is_zero());
    }
}

#[test]
fn pullback_constant_is_seed_independent() {
    for seed in 0..5 {
        let report = hdet_pullback_check(seed, 20).unwrap();
        assert!(report.passed, "{:?}", report.counterexample);
        assert_eq!(report.constant, Some(scalar::ratio(1, 3)));
    }
}

#[test]
fn matrix_shapes_are_checked() {
    let a = Matrix::zeros(2, 3);
    assert!(skew_plus_rank_one_rank(&a, &[Scalar::zero(), Scalar::zero()]).is_err());
}
