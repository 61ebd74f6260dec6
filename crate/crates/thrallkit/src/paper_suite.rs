//! Regression table of the published worked examples.
//!
//! Each check recomputes a printed value from scratch and compares it
//! exactly. `run` evaluates the checks on the current rayon pool and keeps
//! their order.

use rayon::prelude::*;
use thrallkit_core::combinatorics::{lie_dim, lyndon_words_up_to, schur_dim, thrall_module_dim, Partition, Word, YoungTableau};
use thrallkit_core::free_lie::{f_lambda, lyndon_bracketing, phi_k, LieElement};
use thrallkit_core::group_algebra::{
    from_cycle_table, higher_lie_idempotent, intersection_projector, young_symmetrizer,
    young_symmetrizer_transposed, GroupAlgebraElement,
};
use thrallkit_core::invariants::{alternating_signature, lie_invariants, path_invariants, sl_invariant_space};
use thrallkit_core::linalg::{same_span, Matrix, SpanBasis};
use thrallkit_core::rank_variety::{fls_check, hdet_pullback_check, skew_plus_rank_one_rank};
use thrallkit_core::scalar::{int, ratio};
use thrallkit_core::shuffle::{levy_functional, log_signature, shuffle, shuffle_words, PiecewiseLinearPath, WordFunctional};
use thrallkit_core::symfun::{higher_lie_character, lie_character, thrall_coefficients, SymFun};
use thrallkit_core::{Scalar, Tensor};

pub type Check = fn() -> Result<(), String>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: Option<String>,
}

pub fn checks() -> Vec<(&'static str, Check)> {
    vec![
        ("lyndon words in the plane up to length 3", lyndon_plane),
        ("free Lie dimensions 2, 1, 2 and (d^3-d)/3", lie_dimensions),
        ("union of partitions", partition_union),
        ("Schur and Thrall dimensions at k=3", module_dimensions),
        ("E_(3), E_(2,1), E_(1,1,1) coefficients", degree_three_idempotents),
        ("E_(3) is idempotent and fixes Lie^3", e3_properties),
        ("intersection projectors E_(2,1);1 and E_(2,1);2", intersection_projectors),
        ("tableau images: W_(3) and W_(2,1);2", tableau_images),
        ("printed span of c_tau for the hook tableau", hook_tableau_span),
        ("Lie characters and Thrall table at k=3", degree_three_characters),
        ("a^(4,1)_(3,1,1) = 2 and k<=4 multiplicity-free", thrall_remark),
        ("h_2[l_2] = s_(2,2) + s_(1,1,1,1)", sym_wedge_two),
        ("l_2 l_1 = s_(2,1) + s_(1,1,1)", two_one_character),
        ("Lie brackets [1,2] and Lyndon basis at length 3", brackets),
        ("phi_2 and phi_3 in terms of v, A, L", low_degree_signatures),
        ("f_lambda components at k=3", f_lambda_components),
        ("12 shuffle 34", shuffle_12_34),
        ("Levy functional squared is 4 beta_(2,2)", levy_squared),
        ("invariant basis at d=2, k=4", isotypic_basis),
        ("Levy functional spans the invariants at d=2, k=2", levy_invariant),
        ("graded invariants beta_(2,2) and beta_(3,1)", graded_invariants),
        ("Lie invariants vanish at (3,1), (2,2), (3,2) but not (2,3)", lie_invariant_pattern),
        ("alternating signature in the plane is the signed area", signed_area),
        ("straight paths satisfy all three criteria", straight_paths),
        ("rank of a generic odd skew plus rank one", odd_skew_rank),
        ("hyperdeterminant pullback", hyperdeterminant),
    ]
}

pub fn run() -> Vec<Outcome> {
    checks()
        .into_par_iter()
        .map(|(name, check)| match check() {
            Ok(()) => Outcome { name, passed: true, detail: None },
            Err(detail) => Outcome { name, passed: false, detail: Some(detail) },
        })
        .collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn eq<T: PartialEq + std::fmt::Debug>(found: T, expected: T, what: &str) -> Result<(), String> {
    ensure(found == expected, || format!("{}: expected {:?}, found {:?}", what, expected, found))
}

fn part(s: &str) -> Partition {
    s.parse().expect("literal partition")
}

fn word(s: &str) -> Word {
    s.parse().expect("literal word")
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn table(k: usize, rows: &[(&str, (i64, i64))]) -> GroupAlgebraElement {
    let t: Vec<(&str, Scalar)> = rows.iter().map(|(p, (a, b))| (*p, ratio(*a, *b))).collect();
    from_cycle_table(k, &t).expect("literal table")
}

fn functional(d: usize, terms: &[(&str, i64)]) -> WordFunctional {
    WordFunctional::from_terms(d, terms.iter().map(|(w, c)| (word(w), int(*c)))).expect("literal functional")
}

fn image(x: &GroupAlgebraElement, d: usize) -> Vec<Vec<Scalar>> {
    x.action_image(d).into_iter().map(Tensor::into_entries).collect()
}

fn schur(f: &SymFun) -> Vec<(Partition, Scalar)> {
    f.schur_expand().into_iter().collect()
}

fn lyndon_plane() -> Result<(), String> {
    let found: Vec<String> = lyndon_words_up_to(2, 3).iter().map(Word::to_string).collect();
    let mut found = found;
    found.sort();
    eq(found, vec!["1".into(), "112".into(), "12".into(), "122".into(), "2".into()], "Lyndon words")
}

fn lie_dimensions() -> Result<(), String> {
    eq((1..=3).map(|k| lie_dim(2, k)).collect::<Vec<_>>(), vec![2, 1, 2], "lie_dim(2, 1..=3)")?;
    for d in 1..=6u128 {
        eq(lie_dim(d as usize, 3), (d * d * d - d) / 3, "lie_dim(d, 3)")?;
    }
    Ok(())
}

fn partition_union() -> Result<(), String> {
    eq(part("3,2,1").union(&part("2,2")), part("3,2,2,2,1"), "union")
}

fn module_dimensions() -> Result<(), String> {
    for d in 1..=6u128 {
        let du = d as usize;
        eq(thrall_module_dim(&part("3"), du), (d * d * d - d) / 3, "dim W_(3)")?;
        eq(schur_dim(&part("2,1"), du), (d * d * d - d) / 3, "dim S_(2,1)")?;
        let wedge = if d >= 3 { d * (d - 1) * (d - 2) / 6 } else { 0 };
        eq(schur_dim(&part("1,1,1"), du), wedge, "dim of the third exterior power")?;
    }
    Ok(())
}

fn degree_three_idempotents() -> Result<(), String> {
    let e3 = table(3, &[("id", (1, 3)), ("(12)", (-1, 6)), ("(23)", (-1, 6)), ("(123)", (-1, 6)), ("(132)", (-1, 6)), ("(13)", (1, 3))]);
    let e21 = table(3, &[("id", (1, 2)), ("(13)", (-1, 2))]);
    eq(higher_lie_idempotent(&part("3")).map_err(err)?, e3, "E_(3)")?;
    eq(higher_lie_idempotent(&part("2,1")).map_err(err)?, e21, "E_(2,1)")?;
    eq(
        higher_lie_idempotent(&part("1,1,1")).map_err(err)?,
        GroupAlgebraElement::symmetrizer(3).scale(&ratio(1, 6)),
        "E_(1,1,1)",
    )
}

fn e3_properties() -> Result<(), String> {
    let e3 = higher_lie_idempotent(&part("3")).map_err(err)?;
    ensure(e3.is_idempotent(), || "E_(3) is not idempotent".into())?;
    for w in ["112", "122"] {
        let l = lyndon_bracketing(&word(w), 2).map_err(err)?;
        eq(e3.act(&l).map_err(err)?, l, "E_(3) on a Lie bracket")?;
    }
    Ok(())
}

fn intersection_projectors() -> Result<(), String> {
    let e1 = table(3, &[("id", (1, 6)), ("(12)", (-1, 6)), ("(23)", (-1, 6)), ("(123)", (1, 6)), ("(132)", (1, 6)), ("(13)", (-1, 6))]);
    let e2 = table(3, &[("id", (1, 3)), ("(12)", (1, 6)), ("(23)", (1, 6)), ("(123)", (-1, 6)), ("(132)", (-1, 6)), ("(13)", (-1, 3))]);
    eq(intersection_projector(&part("2,1"), &part("1,1,1")).map_err(err)?, e1, "E_(2,1);1")?;
    eq(intersection_projector(&part("2,1"), &part("2,1")).map_err(err)?, e2, "E_(2,1);2")?;
    ensure(intersection_projector(&part("3"), &part("3")).map_err(err)?.is_zero(), || {
        "W_(3) has a Sym^3 part".into()
    })
}

fn tableau_images() -> Result<(), String> {
    let e3 = higher_lie_idempotent(&part("3")).map_err(err)?;
    let e212 = intersection_projector(&part("2,1"), &part("2,1")).map_err(err)?;
    let t132 = YoungTableau::new(vec![vec![1, 3], vec![2]]).map_err(err)?;
    let t123 = YoungTableau::new(vec![vec![1, 2], vec![3]]).map_err(err)?;
    for d in [2, 3] {
        let n = d * d * d;
        ensure(same_span(&image(&young_symmetrizer(&t132), d), &image(&e3, d), n), || {
            format!("c_tau image differs from W_(3) at d={}", d)
        })?;
        ensure(same_span(&image(&young_symmetrizer_transposed(&t123), d), &image(&e212, d), n), || {
            format!("column-first symmetrizer image differs from W_(2,1);2 at d={}", d)
        })?;
    }
    Ok(())
}

/// The printed spanning vector lives in the image of the opposite action,
/// i.e. of the antipode of `c_τ` under ours.
fn hook_tableau_span() -> Result<(), String> {
    let t123 = YoungTableau::new(vec![vec![1, 2], vec![3]]).map_err(err)?;
    let c = young_symmetrizer(&t123).antipode();
    let mut span = SpanBasis::new(27);
    for t in c.action_image(3) {
        span.insert(t.into_entries());
    }
    let v = functional(3, &[("123", 1), ("213", 1), ("321", -1), ("312", -1)]).to_tensor(3);
    ensure(span.contains(v.entries()), || "printed vector not in the image".into())
}

fn degree_three_characters() -> Result<(), String> {
    let third = ratio(1, 3);
    let expected = SymFun::power_sum(part("1,1,1")).scale(&third).add(&SymFun::power_sum(part("3")).scale(&-third.clone()));
    eq(lie_character(3), expected.clone(), "l_3")?;
    eq(schur(&expected), vec![(part("2,1"), int(1))], "l_3 in Schur functions")?;
    let table = |l: &str| thrall_coefficients(&part(l)).map(|m| m.into_iter().collect::<Vec<_>>());
    eq(table("3").map_err(err)?, vec![(part("2,1"), 1)], "W_(3)")?;
    eq(table("2,1").map_err(err)?, vec![(part("1,1,1"), 1), (part("2,1"), 1)], "W_(2,1)")?;
    eq(table("1,1,1").map_err(err)?, vec![(part("3"), 1)], "W_(1,1,1)")
}

fn thrall_remark() -> Result<(), String> {
    let a = thrall_coefficients(&part("4,1")).map_err(err)?;
    eq(a.get(&part("3,1,1")).copied(), Some(2), "a^(4,1)_(3,1,1)")?;
    for k in 1..=4 {
        for lambda in thrallkit_core::combinatorics::partitions(k) {
            let a = thrall_coefficients(&lambda).map_err(err)?;
            ensure(a.values().all(|&c| c == 1), || format!("W_{} has multiplicities", lambda))?;
        }
    }
    Ok(())
}

fn sym_wedge_two() -> Result<(), String> {
    let h2 = lie_character(2).plethysm_h(2);
    eq(schur(&h2), vec![(part("1,1,1,1"), int(1)), (part("2,2"), int(1))], "h_2[l_2]")?;
    eq(schur(&higher_lie_character(&part("2,2"))), schur(&h2), "character of W_(2,2)")
}

fn two_one_character() -> Result<(), String> {
    eq(
        schur(&higher_lie_character(&part("2,1"))),
        vec![(part("1,1,1"), int(1)), (part("2,1"), int(1))],
        "character of W_(2,1)",
    )
}

fn brackets() -> Result<(), String> {
    let b = lyndon_bracketing(&word("12"), 2).map_err(err)?;
    let expected = functional(2, &[("12", 1), ("21", -1)]).to_tensor(2);
    eq(b, expected, "[e1, e2]")?;
    let level3: Vec<_> = lyndon_words_up_to(2, 3).into_iter().filter(|w| w.len() == 3).map(|w| w.to_string()).collect();
    eq(level3, vec!["112".to_string(), "122".to_string()], "Lyndon words of length 3")
}

/// `L = v + A + L3` with generic rational coordinates.
fn sample_lie() -> LieElement {
    let terms = [("1", ratio(2, 3)), ("2", int(-1)), ("12", ratio(5, 2)), ("112", int(3)), ("122", ratio(-1, 4))];
    LieElement::from_terms(2, 3, terms.into_iter().map(|(w, c)| (word(w), c))).expect("literal Lie element")
}

fn low_degree_signatures() -> Result<(), String> {
    let l = sample_lie();
    let (v, a, l3) = (l.level(1), l.level(2), l.level(3));
    let half = ratio(1, 2);
    let vv = v.tensor_product(&v).map_err(err)?;
    eq(phi_k(&l, 2).map_err(err)?, &vv.scale(&half) + &a, "phi_2")?;
    let vvv = vv.tensor_product(&v).map_err(err)?;
    let mixed = &a.tensor_product(&v).map_err(err)? + &v.tensor_product(&a).map_err(err)?;
    let expected = &(&vvv.scale(&ratio(1, 6)) + &mixed.scale(&half)) + &l3;
    eq(phi_k(&l, 3).map_err(err)?, expected, "phi_3")
}

fn f_lambda_components() -> Result<(), String> {
    let l = sample_lie();
    let (v, a) = (l.level(1), l.level(2));
    let vvv = Tensor::power(&v, 3);
    eq(f_lambda(&l, &part("1,1,1")).map_err(err)?, vvv.scale(&ratio(1, 6)), "f_(1,1,1)")?;
    let mixed = &a.tensor_product(&v).map_err(err)? + &v.tensor_product(&a).map_err(err)?;
    eq(f_lambda(&l, &part("2,1")).map_err(err)?, mixed.scale(&ratio(1, 2)), "f_(2,1)")?;
    eq(f_lambda(&l, &part("3")).map_err(err)?, l.level(3), "f_(3)")
}

fn shuffle_12_34() -> Result<(), String> {
    let found = shuffle_words(&word("12"), &word("34"), 4).map_err(err)?;
    let expected = functional(4, &[("1234", 1), ("1324", 1), ("1342", 1), ("3124", 1), ("3142", 1), ("3412", 1)]);
    eq(found, expected, "12 shuffle 34")
}

fn beta22() -> WordFunctional {
    functional(2, &[("1122", 1), ("1221", -1), ("2112", -1), ("2211", 1)]).scale(&ratio(1, 4))
}

fn levy_squared() -> Result<(), String> {
    let levy = levy_functional();
    eq(shuffle(&levy, &levy).map_err(err)?, beta22().scale(&int(4)), "Levy shuffle Levy")
}

fn vectors(fs: &[WordFunctional], k: usize) -> Vec<Vec<Scalar>> {
    fs.iter().map(|f| f.to_tensor(k).into_entries()).collect()
}

fn isotypic_basis() -> Result<(), String> {
    let printed = [
        functional(2, &[("1212", 1), ("1221", -1), ("2112", -1), ("2121", 1)]),
        functional(2, &[("1122", 1), ("1221", -1), ("2112", -1), ("2211", 1)]),
    ];
    let computed = sl_invariant_space(2, 4);
    eq(computed.len(), 2, "dimension")?;
    ensure(same_span(&vectors(&computed, 4), &vectors(&printed, 4), 16), || "spans differ".into())
}

fn levy_invariant() -> Result<(), String> {
    eq(sl_invariant_space(2, 2), vec![levy_functional().normalized()], "invariants at k=2")
}

fn graded_invariants() -> Result<(), String> {
    let graded = path_invariants(2, 2).map_err(err)?;
    let beta31 = functional(2, &[("1122", -2), ("1212", 1), ("1221", 1), ("2112", 1), ("2121", 1), ("2211", -2)])
        .scale(&ratio(1, 3));
    eq(graded[&part("2,2")].clone(), vec![beta22().normalized()], "U_(2,2)")?;
    eq(graded[&part("3,1")].clone(), vec![beta31.normalized()], "U_(3,1)")?;
    for l in ["4", "2,1,1", "1,1,1,1"] {
        ensure(graded[&part(l)].is_empty(), || format!("U_({}) is not zero", l))?;
    }
    Ok(())
}

fn lie_invariant_pattern() -> Result<(), String> {
    for (d, ell) in [(3, 1), (2, 2), (3, 2)] {
        eq(lie_invariants(d, ell).len(), 0, &format!("dim U_(dl) at d={} l={}", d, ell))?;
    }
    ensure(!lie_invariants(2, 3).is_empty(), || "U_(6) vanishes at d=2".into())
}

fn signed_area() -> Result<(), String> {
    let mut t = Tensor::zeros(2, 2);
    for (w, c) in [("11", 3), ("12", 5), ("21", -2), ("22", 7)] {
        t.set(&word(w), int(c));
    }
    eq(alternating_signature(&t).map_err(err)?, int(7), "T_12 - T_21")
}

fn straight_paths() -> Result<(), String> {
    let collinear = PiecewiseLinearPath::from_integers(&[&[0, 0], &[1, 2], &[3, 6], &[2, 4]]).map_err(err)?;
    let r = fls_check(&collinear, 4).map_err(err)?;
    ensure(r.criterion_a && r.criterion_b && r.criterion_c, || format!("{:?}", r))?;
    let segment = PiecewiseLinearPath::from_integers(&[&[1, 1], &[4, -1]]).map_err(err)?;
    let log = log_signature(&segment, 4);
    eq(log.level(1).entries().to_vec(), vec![int(3), int(-2)], "log level 1")?;
    ensure((2..=4).all(|i| log.level(i).is_zero()), || "higher log levels of a segment".into())
}

fn odd_skew_rank() -> Result<(), String> {
    let a = Matrix::from_rows(vec![
        vec![int(0), int(2), int(-1)],
        vec![int(-2), int(0), int(3)],
        vec![int(1), int(-3), int(0)],
    ]);
    eq(skew_plus_rank_one_rank(&a, &[int(1), int(0), int(0)]).map_err(err)?, 3, "rank")
}

fn hyperdeterminant() -> Result<(), String> {
    let r = hdet_pullback_check(0, 20).map_err(err)?;
    ensure(r.passed, || r.counterexample.clone().unwrap_or_default())
}
