//! `SL(V)`-invariant linear functionals on tensor levels and their grading
//! by Thrall modules.
//!
//! Invariance is tested infinitesimally: `β` is `SL_d`-invariant iff it is
//! supported on words of content `(ℓ, …, ℓ)` and killed by every
//! `E_ab`, `a ≠ b`, acting as a derivation across the slots.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::combinatorics::{lyndon_words, partitions, Partition, Word};
use crate::error::{Error, Result};
use crate::free_lie::{lyndon_bracketing, LieElement};
use crate::group_algebra::{higher_lie_idempotents, K_MAX};
use crate::linalg::{Matrix, SpanBasis};
use crate::permutation::Permutation;
use crate::scalar::{self, Scalar};
use crate::shuffle::WordFunctional;
use crate::tensor::Tensor;

/// Words of length `dℓ` using every letter exactly `ℓ` times.
fn balanced_words(d: usize, ell: usize) -> Vec<Word> {
    let k = d * ell;
    (0..d.pow(k as u32))
        .map(|i| Word::from_index(d, k, i))
        .filter(|w| w.content(d).iter().all(|&c| c == ell))
        .collect()
}

/// Rows of the linear system `β(E_ab·e_u) = 0` on the coordinates
/// `coords` (balanced words), for all `a ≠ b` and all relevant `u`.
fn sl_equations(d: usize, coords: &[Word]) -> Vec<Vec<Scalar>> {
    let position: BTreeMap<&Word, usize> = coords.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut rows = Vec::new();
    for a in 1..=d as u8 {
        for b in 1..=d as u8 {
            if a == b {
                continue;
            }
            // E_ab e_u = Σ_{j: u_j = b} e_{u[j→a]}; the targets are balanced
            // exactly when u has one `a` too few and one `b` too many. Such u
            // arise as w[j→b] for balanced w with w_j = a.
            let mut seen: BTreeMap<Word, ()> = BTreeMap::new();
            for w in coords {
                for (j, &l) in w.letters().iter().enumerate() {
                    if l != a {
                        continue;
                    }
                    let mut u = w.letters().to_vec();
                    u[j] = b;
                    let u = Word::new(u);
                    if seen.insert(u.clone(), ()).is_some() {
                        continue;
                    }
                    let mut row = vec![Scalar::zero(); coords.len()];
                    for (i, &m) in u.letters().iter().enumerate() {
                        if m == b {
                            let mut t = u.letters().to_vec();
                            t[i] = a;
                            row[position[&Word::new(t)]] += Scalar::one();
                        }
                    }
                    rows.push(row);
                }
            }
        }
    }
    rows
}

/// Basis of the `SL_d`-invariant functionals on `(Q^d)^{⊗k}`, each
/// normalized to coprime integers with positive leading coefficient.
pub fn sl_invariant_space(d: usize, k: usize) -> Vec<WordFunctional> {
    if d == 0 || !k.is_multiple_of(d) {
        return Vec::new();
    }
    if k == 0 {
        return vec![WordFunctional::unit(d)];
    }
    let ell = k / d;
    let coords = balanced_words(d, ell);
    let rows = sl_equations(d, &coords);
    let m = if rows.is_empty() {
        Matrix::zeros(1, coords.len())
    } else {
        Matrix::from_rows(rows)
    };
    m.nullspace()
        .into_iter()
        .map(|v| {
            WordFunctional::from_terms(d, coords.iter().cloned().zip(v))
                .expect("balanced words are in range")
                .normalized()
        })
        .collect()
}

/// For every `λ ⊢ dℓ`, a basis of `U_λ = I(V) ∩ W_λ(V*)`: the functionals
/// `T ↦ β(E_λ·T)` for `β` running over the invariant space.
pub fn path_invariants(d: usize, ell: usize) -> Result<BTreeMap<Partition, Vec<WordFunctional>>> {
    let k = d * ell;
    if k > K_MAX {
        return Err(Error::ResourceLimit { requested: k, max: K_MAX });
    }
    let invariants = sl_invariant_space(d, k);
    let idempotents = higher_lie_idempotents(k)?;
    let mut out = BTreeMap::new();
    for lambda in partitions(k) {
        let e = &idempotents[&lambda];
        let mut span = SpanBasis::new(d.pow(k as u32));
        let mut basis = Vec::new();
        for beta in &invariants {
            let projected = e.act_dual(&beta.to_tensor(k))?;
            if span.insert(projected.entries().to_vec()) {
                basis.push(WordFunctional::from_tensor(&projected).normalized());
            }
        }
        out.insert(lambda, basis);
    }
    Ok(out)
}

/// Basis of the `SL_d`-invariant Lie polynomials in `Lie^{dℓ}(Q^d)`.
///
/// Works for any degree: it only needs the Lyndon words of content
/// `(ℓ, …, ℓ)` and the derivations `E_ab`, which preserve `Lie(V)`. Its
/// dimension equals `dim U_{(dℓ)}`.
pub fn lie_invariants(d: usize, ell: usize) -> Vec<LieElement> {
    let k = d * ell;
    if d == 0 || k == 0 {
        return Vec::new();
    }
    let words: Vec<Word> = lyndon_words(d, k)
        .into_iter()
        .filter(|w| w.content(d).iter().all(|&c| c == ell))
        .collect();
    if words.is_empty() {
        return Vec::new();
    }
    let basis: Vec<Tensor> = words
        .iter()
        .map(|w| lyndon_bracketing(w, d).expect("generated words are Lyndon"))
        .collect();
    // Stack E_ab·b(w) over all a ≠ b, as columns indexed by the Lyndon words.
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for a in 1..=d as u8 {
        for b in 1..=d as u8 {
            if a == b {
                continue;
            }
            let images: Vec<BTreeMap<Word, Scalar>> =
                basis.iter().map(|t| derivation(t, a, b)).collect();
            let mut targets: Vec<&Word> = images.iter().flat_map(|m| m.keys()).collect();
            targets.sort();
            targets.dedup();
            for target in targets {
                rows.push(
                    images
                        .iter()
                        .map(|m| m.get(target).cloned().unwrap_or_else(Scalar::zero))
                        .collect(),
                );
            }
        }
    }
    let m = if rows.is_empty() { Matrix::zeros(1, words.len()) } else { Matrix::from_rows(rows) };
    m.nullspace()
        .into_iter()
        .map(|v| {
            LieElement::from_terms(d, k, words.iter().cloned().zip(v))
                .expect("Lyndon words of the right length")
        })
        .collect()
}

/// `E_ab·T`: replace one occurrence of `b` by `a`, summed over slots.
fn derivation(t: &Tensor, a: u8, b: u8) -> BTreeMap<Word, Scalar> {
    let mut out: BTreeMap<Word, Scalar> = BTreeMap::new();
    for (w, c) in t.terms() {
        for (j, &l) in w.letters().iter().enumerate() {
            if l == b {
                let mut u = w.letters().to_vec();
                u[j] = a;
                *out.entry(Word::new(u)).or_insert_with(Scalar::zero) += c;
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `Σ_σ sgn(σ) T_{σ(1)…σ(d)}` for a tensor with `k = d`.
pub fn alternating_signature(t: &Tensor) -> Result<Scalar> {
    if t.order() != t.dim() {
        return Err(Error::OrderMismatch { expected: t.dim(), found: t.order() });
    }
    let d = t.dim();
    Ok(Permutation::all(d)
        .iter()
        .map(|p| {
            let w = Word::new(p.one_line().into_iter().map(|i| i as u8).collect());
            t.get(&w) * scalar::int(p.sign())
        })
        .fold(Scalar::zero(), |a, b| a + b))
}

/// `Σ_{σ ∈ S_2e} sgn(σ) Π_i T_{σ(2i−1) σ(2i)}` on a level-2 tensor.
pub fn pfaffian_form(t2: &Tensor) -> Result<Scalar> {
    if t2.order() != 2 {
        return Err(Error::OrderMismatch { expected: 2, found: t2.order() });
    }
    let d = t2.dim();
    if !d.is_multiple_of(2) {
        return Err(Error::Precondition("the Pfaffian form needs an even dimension".into()));
    }
    Ok(Permutation::all(d)
        .iter()
        .map(|p| {
            let img = p.one_line();
            let prod = img.chunks(2).fold(Scalar::one(), |acc, pair| {
                acc * t2.get(&Word::new(vec![pair[0] as u8, pair[1] as u8]))
            });
            prod * scalar::int(p.sign())
        })
        .fold(Scalar::zero(), |a, b| a + b))
}

/// `Σ_{σ ∈ S_{2e+1}} sgn(σ) T_{σ(1)} Π_i T_{σ(2i) σ(2i+1)}` on level-1 and
/// level-2 tensors.
pub fn alternating_odd_form(t1: &Tensor, t2: &Tensor) -> Result<Scalar> {
    if t1.order() != 1 || t2.order() != 2 {
        return Err(Error::Precondition("expected a level-1 and a level-2 tensor".into()));
    }
    let d = t1.dim();
    if d % 2 != 1 || t2.dim() != d {
        return Err(Error::Precondition("the odd form needs matching odd dimensions".into()));
    }
    Ok(Permutation::all(d)
        .iter()
        .map(|p| {
            let img = p.one_line();
            let head = t1.get(&Word::new(vec![img[0] as u8])).clone();
            let prod = img[1..].chunks(2).fold(head, |acc, pair| {
                acc * t2.get(&Word::new(vec![pair[0] as u8, pair[1] as u8]))
            });
            prod * scalar::int(p.sign())
        })
        .fold(Scalar::zero(), |a, b| a + b))
}

/// `β(g·T) = β(T)` for a determinant-one `g`.
pub fn check_invariance(beta: &WordFunctional, g: &Matrix, t: &Tensor) -> Result<bool> {
    if g.rows() != g.cols() || g.rows() != t.dim() {
        return Err(Error::DimensionMismatch { left: t.dim(), right: g.rows() });
    }
    if !g.determinant().is_one() {
        return Err(Error::Precondition("the group element must have determinant 1".into()));
    }
    Ok(beta.evaluate_tensor(&t.transformed(g)?)? == beta.evaluate_tensor(t)?)
}

/// Product of random integer shears: an integer matrix of determinant 1.
pub fn random_unimodular<R: rand::Rng + ?Sized>(d: usize, rng: &mut R) -> Matrix {
    let mut g = Matrix::identity(d);
    if d < 2 {
        return g;
    }
    for _ in 0..2 * d {
        let i = rng.gen_range(0..d);
        let mut j = rng.gen_range(0..d - 1);
        if j >= i {
            j += 1;
        }
        let mut shear = Matrix::identity(d);
        shear[(i, j)] = scalar::int(rng.gen_range(-3..=3));
        g = g.mul(&shear);
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::num_standard;
    use crate::linalg::same_span;
    use crate::scalar::int;
    use crate::symfun::thrall_coefficients;

    fn wf(d: usize, terms: &[(&str, i64)]) -> WordFunctional {
        WordFunctional::from_terms(d, terms.iter().map(|(s, c)| (s.parse().unwrap(), int(*c)))).unwrap()
    }

    fn vecs(fs: &[WordFunctional], k: usize) -> Vec<Vec<Scalar>> {
        fs.iter().map(|f| f.to_tensor(k).into_entries()).collect()
    }

    #[test]
    fn invariant_space_dimensions() {
        for (d, ell) in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)] {
            let dim = sl_invariant_space(d, d * ell).len() as u128;
            assert_eq!(dim, num_standard(&Partition::rectangle(d, ell)), "d={} ell={}", d, ell);
        }
        assert!(sl_invariant_space(2, 3).is_empty());
    }

    #[test]
    fn levy_and_isotypic_basis() {
        assert_eq!(sl_invariant_space(2, 2), vec![wf(2, &[("12", 1), ("21", -1)])]);
        let basis = sl_invariant_space(2, 4);
        let printed = vec![
            wf(2, &[("1212", 1), ("1221", -1), ("2112", -1), ("2121", 1)]),
            wf(2, &[("1122", 1), ("1221", -1), ("2112", -1), ("2211", 1)]),
        ];
        assert!(same_span(&vecs(&basis, 4), &vecs(&printed, 4), 16));
    }

    #[test]
    fn graded_invariants_for_the_plane() {
        let graded = path_invariants(2, 2).unwrap();
        let beta22 = wf(2, &[("1122", 1), ("1221", -1), ("2112", -1), ("2211", 1)]);
        let beta31 = wf(2, &[("1122", 2), ("1212", -1), ("1221", -1), ("2112", -1), ("2121", -1), ("2211", 2)]);
        assert_eq!(graded[&"2,2".parse().unwrap()], vec![beta22]);
        assert_eq!(graded[&"3,1".parse().unwrap()], vec![beta31]);
        for (lambda, basis) in &graded {
            let a = thrall_coefficients(lambda).unwrap();
            let expected = a.get(&Partition::rectangle(2, 2)).copied().unwrap_or(0);
            assert_eq!(basis.len() as u64, expected, "lambda={}", lambda);
        }
    }

    #[test]
    fn lie_invariants_agree_with_thrall_coefficients() {
        for (d, ell) in [(2, 1), (3, 1), (2, 2), (2, 3), (3, 2)] {
            let k = d * ell;
            let a = thrall_coefficients(&Partition::rectangle(1, k)).unwrap();
            let expected = a.get(&Partition::rectangle(d, ell)).copied().unwrap_or(0);
            assert_eq!(lie_invariants(d, ell).len() as u64, expected, "d={} ell={}", d, ell);
        }
    }

    #[test]
    fn invariance_checks() {
        let beta = wf(2, &[("12", 1), ("21", -1)]);
        let g = Matrix::from_rows(vec![vec![int(1), int(2)], vec![int(0), int(1)]]);
        let mut t = Tensor::zeros(2, 2);
        for i in 0..4 {
            *t.entry_mut(i) = int(i as i64 + 1);
        }
        assert!(check_invariance(&beta, &g, &t).unwrap());
        let not_inv = wf(2, &[("11", 1)]);
        let shear = Matrix::from_rows(vec![vec![int(1), int(1)], vec![int(0), int(1)]]);
        assert!(!check_invariance(&not_inv, &shear, &t).unwrap());
        let scaling = Matrix::from_rows(vec![vec![int(2), int(0)], vec![int(0), int(1)]]);
        assert!(check_invariance(&beta, &scaling, &t).is_err());
    }

    #[test]
    fn pfaffian_in_the_plane() {
        let a = int(3);
        let mut t2 = Tensor::zeros(2, 2);
        t2.set(&"12".parse().unwrap(), a.clone());
        t2.set(&"21".parse().unwrap(), -a.clone());
        assert_eq!(pfaffian_form(&t2).unwrap(), int(6));
        assert!(pfaffian_form(&Tensor::zeros(2, 2)).unwrap().is_zero());
        assert!(pfaffian_form(&Tensor::zeros(3, 2)).is_err());
    }
}
