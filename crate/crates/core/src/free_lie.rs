//! The free Lie algebra in the Lyndon basis, truncated exp/log, the maps
//! `phi_k` and `f_λ`, and the Thrall decomposition of tensors.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::combinatorics::{
    lyndon_words, next_permutation, partitions, Partition, Word,
};
use crate::error::{Error, Result};
use crate::group_algebra::{higher_lie_idempotents, K_MAX};
use crate::linalg::Matrix;
use crate::scalar::{self, Scalar};
use crate::tensor::{Tensor, TensorSeries};

type Poly = BTreeMap<Word, Scalar>;

fn poly_commutator(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (u, x) in a {
        for (v, y) in b {
            *out.entry(u.concat(v)).or_insert_with(Scalar::zero) += x * y;
            *out.entry(v.concat(u)).or_insert_with(Scalar::zero) -= x * y;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Standard factorization `w = uv`, `v` the longest proper Lyndon suffix.
pub fn standard_factorization(w: &Word) -> Result<(Word, Word)> {
    if !w.is_lyndon() || w.len() < 2 {
        return Err(Error::NotLyndon(w.to_string()));
    }
    let letters = w.letters();
    let split = (1..letters.len())
        .find(|&i| crate::combinatorics::is_lyndon(&letters[i..]))
        .expect("the last letter is a Lyndon suffix");
    Ok((Word::from(&letters[..split]), Word::from(&letters[split..])))
}

/// Expansion of the Lyndon bracketing `b(w)` as a word combination.
pub fn lyndon_bracket_terms(w: &Word) -> Result<BTreeMap<Word, Scalar>> {
    if !w.is_lyndon() {
        return Err(Error::NotLyndon(w.to_string()));
    }
    if w.len() == 1 {
        let mut p = Poly::new();
        p.insert(w.clone(), Scalar::one());
        return Ok(p);
    }
    let (u, v) = standard_factorization(w)?;
    Ok(poly_commutator(&lyndon_bracket_terms(&u)?, &lyndon_bracket_terms(&v)?))
}

/// `b(w)` as a tensor over `Q^dim`.
pub fn lyndon_bracketing(w: &Word, dim: usize) -> Result<Tensor> {
    let w = Word::checked(w.letters().to_vec(), dim)?;
    let mut t = Tensor::zeros(dim, w.len());
    for (word, c) in lyndon_bracket_terms(&w)? {
        t.set(&word, c);
    }
    Ok(t)
}

/// Bracketings of all Lyndon words of length `k`: a basis of `Lie^k(Q^dim)`.
pub fn lie_basis(dim: usize, k: usize) -> Vec<Tensor> {
    lyndon_words(dim, k)
        .iter()
        .map(|w| lyndon_bracketing(w, dim).expect("generated words are Lyndon"))
        .collect()
}

/// Element of `Lie^{≤k_max}(Q^dim)` in Lyndon coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieElement {
    dim: usize,
    k_max: usize,
    coeffs: BTreeMap<Word, Scalar>,
}

impl LieElement {
    pub fn zero(dim: usize, k_max: usize) -> Self {
        LieElement { dim, k_max, coeffs: BTreeMap::new() }
    }

    /// Keys must be Lyndon words over `{1..dim}` of length `1..=k_max`.
    pub fn from_terms<I>(dim: usize, k_max: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Word, Scalar)>,
    {
        let mut coeffs = BTreeMap::new();
        for (w, c) in terms {
            let w = Word::checked(w.letters().to_vec(), dim)?;
            if !w.is_lyndon() {
                return Err(Error::NotLyndon(w.to_string()));
            }
            if w.len() > k_max {
                return Err(Error::OrderMismatch { expected: k_max, found: w.len() });
            }
            if !c.is_zero() {
                coeffs.insert(w, c);
            }
        }
        Ok(LieElement { dim, k_max, coeffs })
    }

    /// Random coordinates on every Lyndon word up to `k_max`.
    pub fn random<R: rand::Rng + ?Sized>(dim: usize, k_max: usize, rng: &mut R) -> Self {
        let coeffs = (1..=k_max)
            .flat_map(|k| lyndon_words(dim, k))
            .map(|w| (w, scalar::random_small(rng)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        LieElement { dim, k_max, coeffs }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn k_max(&self) -> usize {
        self.k_max
    }

    pub fn coeffs(&self) -> &BTreeMap<Word, Scalar> {
        &self.coeffs
    }

    pub fn coefficient(&self, w: &Word) -> Scalar {
        self.coeffs.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    /// The degree-`i` part `T_(i)` as a tensor.
    pub fn level(&self, i: usize) -> Tensor {
        let mut t = Tensor::zeros(self.dim, i);
        for (w, c) in self.coeffs.iter().filter(|(w, _)| w.len() == i) {
            let b = lyndon_bracketing(w, self.dim).expect("keys are Lyndon");
            t += &b.scale(c);
        }
        t
    }

    /// Replaces the degree-`i` part by `scale` times itself.
    pub fn scale_level(&self, i: usize, factor: &Scalar) -> LieElement {
        let mut out = self.clone();
        for (w, c) in out.coeffs.iter_mut() {
            if w.len() == i {
                *c *= factor;
            }
        }
        out.coeffs.retain(|_, c| !c.is_zero());
        out
    }

    /// Embedding into the tensor algebra, level 0 zero.
    pub fn to_series(&self) -> TensorSeries {
        let mut levels = vec![Tensor::zeros(self.dim, 0)];
        levels.extend((1..=self.k_max).map(|i| self.level(i)));
        TensorSeries::from_levels(self.dim, levels).expect("levels have matching orders")
    }

    /// Reads Lyndon coordinates off a series whose level 0 vanishes and
    /// whose other levels are Lie polynomials.
    pub fn from_series(s: &TensorSeries) -> Result<LieElement> {
        if !s.constant().is_zero() {
            return Err(Error::Precondition("level 0 of a Lie series must vanish".into()));
        }
        let mut coeffs = BTreeMap::new();
        for i in 1..=s.k_max() {
            let coords = lie_coordinates(s.level(i))?.ok_or_else(|| {
                Error::Precondition(format!("level {} is not a Lie polynomial", i))
            })?;
            coeffs.extend(coords.into_iter().filter(|(_, c)| !c.is_zero()));
        }
        Ok(LieElement { dim: s.dim(), k_max: s.k_max(), coeffs })
    }

    pub fn add(&self, other: &LieElement) -> Result<LieElement> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: other.dim });
        }
        let mut coeffs = self.coeffs.clone();
        for (w, c) in &other.coeffs {
            *coeffs.entry(w.clone()).or_insert_with(Scalar::zero) += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        Ok(LieElement { dim: self.dim, k_max: self.k_max.max(other.k_max), coeffs })
    }

    /// `[a, b]` truncated at `max(k_max)`, computed through tensors.
    pub fn bracket(&self, other: &LieElement) -> Result<LieElement> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: other.dim });
        }
        let k = self.k_max.max(other.k_max);
        let a = self.with_k_max(k).to_series();
        let b = other.with_k_max(k).to_series();
        let ab = a.product(&b)?;
        let ba = b.product(&a)?;
        LieElement::from_series(&ab.sub(&ba)?)
    }

    fn with_k_max(&self, k_max: usize) -> LieElement {
        LieElement {
            dim: self.dim,
            k_max,
            coeffs: self.coeffs.iter().filter(|(w, _)| w.len() <= k_max).map(|(w, c)| (w.clone(), c.clone())).collect(),
        }
    }
}

/// Coordinates of `t` in the Lyndon basis of `Lie^k`, or `None` if `t` is
/// not a Lie polynomial.
pub fn lie_coordinates(t: &Tensor) -> Result<Option<BTreeMap<Word, Scalar>>> {
    let k = t.order();
    if k == 0 {
        return Ok(if t.is_zero() { Some(BTreeMap::new()) } else { None });
    }
    let words = lyndon_words(t.dim(), k);
    if words.is_empty() {
        return Ok(if t.is_zero() { Some(BTreeMap::new()) } else { None });
    }
    let columns: Vec<Vec<Scalar>> =
        lie_basis(t.dim(), k).into_iter().map(Tensor::into_entries).collect();
    let m = Matrix::from_columns(&columns);
    Ok(m.solve(t.entries()).map(|x| words.into_iter().zip(x).collect()))
}

/// `Σ_{n=0..k_max} L^n / n!`.
pub fn exp_truncated(l: &TensorSeries) -> Result<TensorSeries> {
    if !l.constant().is_zero() {
        return Err(Error::Precondition("exp needs a series with zero constant term".into()));
    }
    let mut acc = TensorSeries::unit(l.dim(), l.k_max());
    let mut term = acc.clone();
    for n in 1..=l.k_max() {
        term = term.product(l)?.scale(&scalar::ratio(1, n as i64));
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

/// `Σ_{n≥1} (−1)^{n+1} (S − 1)^n / n`, truncated.
pub fn log_truncated(s: &TensorSeries) -> Result<TensorSeries> {
    if !s.constant().is_one() {
        return Err(Error::Precondition("log needs a series with constant term 1".into()));
    }
    let x = s.sub(&TensorSeries::unit(s.dim(), s.k_max()))?;
    let mut acc = TensorSeries::zero(s.dim(), s.k_max());
    let mut power = TensorSeries::unit(s.dim(), s.k_max());
    for n in 1..=s.k_max() {
        power = power.product(&x)?;
        let sign = if n % 2 == 1 { 1 } else { -1 };
        acc = acc.add(&power.scale(&scalar::ratio(sign, n as i64)))?;
    }
    Ok(acc)
}

/// Level `k` of `exp(L)`: the universal signature map.
pub fn phi_k(l: &LieElement, k: usize) -> Result<Tensor> {
    if k > l.k_max() {
        return Err(Error::OrderMismatch { expected: l.k_max(), found: k });
    }
    let series = l.with_k_max(k).to_series();
    Ok(exp_truncated(&series)?.level(k).clone())
}

/// The `λ`-part of `phi_k`: `(1/ℓ!) Σ T_(α_1) ⊗ … ⊗ T_(α_ℓ)` over the
/// distinct orderings `α` of the parts of `λ`.
pub fn f_lambda(l: &LieElement, lambda: &Partition) -> Result<Tensor> {
    let k = lambda.weight();
    if k > l.k_max() {
        return Err(Error::OrderMismatch { expected: l.k_max(), found: k });
    }
    let levels: Vec<Tensor> = (0..=k).map(|i| l.level(i)).collect();
    let mut acc = Tensor::zeros(l.dim(), k);
    for ordering in lambda.distinct_orderings() {
        let mut prod = Tensor::scalar(l.dim(), Scalar::one());
        for &part in &ordering {
            prod = prod.tensor_product_unchecked(&levels[part]);
        }
        acc += &prod;
    }
    Ok(acc.scale(&scalar::factorial(lambda.len()).recip()))
}

/// Basis of `W_λ(Q^dim) ⊂ (Q^dim)^{⊗k}`: for every multiset of Lyndon words
/// whose lengths are the parts of `λ`, the sum over distinct orderings of
/// the tensor products of their bracketings.
pub fn w_lambda_basis(lambda: &Partition, dim: usize) -> Vec<Tensor> {
    let mut per_size: Vec<Vec<Vec<Word>>> = Vec::new();
    for (size, count) in lambda.multiplicities() {
        per_size.push(multisets(&lyndon_words(dim, size), count));
    }
    let mut picks: Vec<Vec<Word>> = vec![Vec::new()];
    for options in &per_size {
        picks = picks
            .into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |o| {
                    let mut next = prefix.clone();
                    next.extend(o.iter().cloned());
                    next
                })
            })
            .collect();
    }
    let mut cache: BTreeMap<Word, Tensor> = BTreeMap::new();
    picks
        .into_iter()
        .map(|mut words| {
            for w in &words {
                cache
                    .entry(w.clone())
                    .or_insert_with(|| lyndon_bracketing(w, dim).expect("generated words are Lyndon"));
            }
            words.sort();
            let mut acc = Tensor::zeros(dim, lambda.weight());
            loop {
                let mut prod = Tensor::scalar(dim, Scalar::one());
                for w in &words {
                    prod = prod.tensor_product_unchecked(&cache[w]);
                }
                acc += &prod;
                if !next_permutation(&mut words) {
                    break;
                }
            }
            acc
        })
        .collect()
}

/// Multisets of size `count` from `items`, as sorted index-respecting lists.
fn multisets(items: &[Word], count: usize) -> Vec<Vec<Word>> {
    fn go(items: &[Word], start: usize, count: usize, cur: &mut Vec<Word>, out: &mut Vec<Vec<Word>>) {
        if count == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i].clone());
            go(items, i, count - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, 0, count, &mut Vec::new(), &mut out);
    out
}

/// How [`thrall_decompose`] computes the components.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecomposeBackend {
    /// Act with the higher Lie idempotents; needs `k ≤ K_MAX`.
    Idempotent,
    /// Solve against the stacked `W_λ` bases, one weight space at a time.
    BasisSolve,
}

/// The unique `T = Σ_λ T_λ` with `T_λ ∈ W_λ(V)`. Zero components are kept.
pub fn thrall_decompose(
    t: &Tensor,
    backend: DecomposeBackend,
) -> Result<BTreeMap<Partition, Tensor>> {
    let k = t.order();
    match backend {
        DecomposeBackend::Idempotent => {
            if k > K_MAX {
                return Err(Error::ResourceLimit { requested: k, max: K_MAX });
            }
            higher_lie_idempotents(k)?
                .into_iter()
                .map(|(lambda, e)| Ok((lambda, e.act(t)?)))
                .collect()
        }
        DecomposeBackend::BasisSolve => decompose_by_solve(t),
    }
}

fn decompose_by_solve(t: &Tensor) -> Result<BTreeMap<Partition, Tensor>> {
    let (d, k) = (t.dim(), t.order());
    // Every basis vector of W_λ is a weight vector: group by letter content.
    let mut blocks: BTreeMap<Vec<usize>, Vec<(Partition, Tensor)>> = BTreeMap::new();
    for lambda in partitions(k) {
        for b in w_lambda_basis(&lambda, d) {
            let (w, _) = b.terms().next().expect("basis vectors are nonzero");
            blocks.entry(w.content(d)).or_default().push((lambda.clone(), b));
        }
    }
    let mut out: BTreeMap<Partition, Tensor> =
        partitions(k).into_iter().map(|l| (l, Tensor::zeros(d, k))).collect();
    for (content, basis) in blocks {
        let words: Vec<usize> = (0..d.pow(k as u32))
            .filter(|&i| Word::from_index(d, k, i).content(d) == content)
            .collect();
        let columns: Vec<Vec<Scalar>> = basis
            .iter()
            .map(|(_, b)| words.iter().map(|&i| b.get_index(i).clone()).collect())
            .collect();
        let rhs: Vec<Scalar> = words.iter().map(|&i| t.get_index(i).clone()).collect();
        let coords = Matrix::from_columns(&columns).solve(&rhs).ok_or_else(|| {
            Error::InvariantViolation("Thrall bases do not span a weight space".into())
        })?;
        for ((lambda, b), c) in basis.iter().zip(coords) {
            if !c.is_zero() {
                let slot = out.get_mut(lambda).expect("all partitions present");
                *slot += &b.scale(&c);
            }
        }
    }
    Ok(out)
}

/// Left-normed bracketing of slots, `θ(e_{i_1…i_k}) = [[…[e_{i_1}, e_{i_2}], …], e_{i_k}]`.
pub fn dynkin_map(t: &Tensor) -> Tensor {
    let (d, k) = (t.dim(), t.order());
    let mut out = Tensor::zeros(d, k);
    for (w, c) in t.terms() {
        let letters = w.letters();
        let mut poly: Vec<(Vec<u8>, i64)> = vec![(vec![letters[0]], 1)];
        for &a in &letters[1..] {
            let mut next = Vec::with_capacity(poly.len() * 2);
            for (u, s) in &poly {
                let mut left = u.clone();
                left.push(a);
                next.push((left, *s));
                let mut right = vec![a];
                right.extend_from_slice(u);
                next.push((right, -s));
            }
            poly = next;
        }
        for (u, s) in poly {
            let idx = Word::new(u).index(d);
            *out.entry_mut(idx) += c * scalar::int(s);
        }
    }
    out
}

/// Dynkin–Specht–Wever: `T ∈ Lie^k` iff `θ(T) = k·T`.
pub fn is_lie_element(t: &Tensor) -> bool {
    let k = t.order();
    if k == 0 {
        return t.is_zero();
    }
    dynkin_map(t) == t.scale(&scalar::int(k as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::thrall_module_dim;
    use crate::linalg::rank_of;
    use crate::scalar::{int, ratio};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn from_words(d: usize, terms: &[(&str, i64)]) -> Tensor {
        let mut t = Tensor::zeros(d, terms[0].0.len());
        for (s, c) in terms {
            t.set(&w(s), int(*c));
        }
        t
    }

    #[test]
    fn bracketings() {
        assert_eq!(lyndon_bracketing(&w("12"), 2).unwrap(), from_words(2, &[("12", 1), ("21", -1)]));
        assert_eq!(lyndon_bracketing(&w("1"), 2).unwrap(), Tensor::basis(2, &w("1")));
        assert_eq!(
            lyndon_bracketing(&w("112"), 2).unwrap(),
            from_words(2, &[("112", 1), ("121", -2), ("211", 1)])
        );
        assert!(lyndon_bracketing(&w("21"), 2).is_err());
        assert_eq!(standard_factorization(&w("1122")).unwrap(), (w("1"), w("122")));
        assert!(standard_factorization(&w("1212")).is_err());
        assert_eq!(standard_factorization(&w("12122")).unwrap(), (w("12"), w("122")));
    }

    #[test]
    fn lie_bases_are_independent_lie_elements() {
        assert_eq!(lie_basis(2, 2).len(), 1);
        assert_eq!(lie_basis(2, 3).len(), 2);
        for (d, k) in [(3, 3), (2, 4), (2, 5), (3, 4)] {
            let basis = lie_basis(d, k);
            let vecs: Vec<_> = basis.iter().map(|t| t.entries().to_vec()).collect();
            assert_eq!(rank_of(&vecs), basis.len());
            assert!(basis.iter().all(is_lie_element));
        }
        assert_eq!(lie_basis(3, 3).len(), 8);
    }

    #[test]
    fn dynkin_rejects_non_lie_tensors() {
        let v = Tensor::vector(&[int(1), int(2)]);
        assert!(!is_lie_element(&Tensor::power(&v, 2)));
        assert!(is_lie_element(&v));
    }

    #[test]
    fn exp_of_vector_and_area() {
        let v = Tensor::vector(&[int(1), int(2)]);
        let a = lyndon_bracketing(&w("12"), 2).unwrap().scale(&int(3));
        let mut s = TensorSeries::zero(2, 3);
        *s.level_mut(1) = v.clone();
        *s.level_mut(2) = a.clone();
        let e = exp_truncated(&s).unwrap();
        let half = ratio(1, 2);
        let expected2 = &Tensor::power(&v, 2).scale(&half) + &a;
        assert_eq!(e.level(2), &expected2);
        let av = a.tensor_product(&v).unwrap();
        let va = v.tensor_product(&a).unwrap();
        let expected3 = &Tensor::power(&v, 3).scale(&ratio(1, 6)) + &(&av + &va).scale(&half);
        assert_eq!(e.level(3), &expected3);
    }

    #[test]
    fn exp_log_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..5 {
            let l = LieElement::random(2, 5, &mut rng).to_series();
            let back = log_truncated(&exp_truncated(&l).unwrap()).unwrap();
            assert_eq!(back, l);
        }
        assert!(exp_truncated(&TensorSeries::unit(2, 2)).is_err());
        assert!(log_truncated(&TensorSeries::zero(2, 2)).is_err());
    }

    #[test]
    fn f_lambda_degree_three() {
        let l = LieElement::from_terms(
            2,
            3,
            [(w("1"), int(1)), (w("2"), int(2)), (w("12"), int(3)), (w("112"), int(4)), (w("122"), int(5))],
        )
        .unwrap();
        let v = l.level(1);
        let a = l.level(2);
        assert_eq!(f_lambda(&l, &p("1,1,1")).unwrap(), Tensor::power(&v, 3).scale(&ratio(1, 6)));
        let av = a.tensor_product(&v).unwrap();
        let va = v.tensor_product(&a).unwrap();
        assert_eq!(f_lambda(&l, &p("2,1")).unwrap(), (&av + &va).scale(&ratio(1, 2)));
        assert_eq!(f_lambda(&l, &p("3")).unwrap(), l.level(3));
        assert_eq!(phi_k(&l, 2).unwrap(), &Tensor::power(&v, 2).scale(&ratio(1, 2)) + &a);
    }

    #[test]
    fn phi_is_sum_of_f_lambda() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for k in 1..=5 {
            let l = LieElement::random(2, k, &mut rng);
            let mut sum = Tensor::zeros(2, k);
            for lambda in partitions(k) {
                sum += &f_lambda(&l, &lambda).unwrap();
            }
            assert_eq!(sum, phi_k(&l, k).unwrap());
        }
    }

    #[test]
    fn w_lambda_dimensions() {
        for d in 1..=3 {
            for k in 1..=5 {
                let mut total = 0;
                for lambda in partitions(k) {
                    let basis = w_lambda_basis(&lambda, d);
                    let vecs: Vec<_> = basis.iter().map(|t| t.entries().to_vec()).collect();
                    assert_eq!(basis.len() as u128, thrall_module_dim(&lambda, d));
                    assert_eq!(rank_of(&vecs), basis.len(), "d={} lambda={}", d, lambda);
                    total += basis.len();
                }
                assert_eq!(total, d.pow(k as u32));
            }
        }
        assert_eq!(w_lambda_basis(&p("3"), 2), lie_basis(2, 3));
    }

    #[test]
    fn decomposition_backends_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for k in 1..=4 {
            let mut t = Tensor::zeros(2, k);
            for i in 0..t.entries().len() {
                *t.entry_mut(i) = scalar::random_small(&mut rng);
            }
            let a = thrall_decompose(&t, DecomposeBackend::Idempotent).unwrap();
            let b = thrall_decompose(&t, DecomposeBackend::BasisSolve).unwrap();
            assert_eq!(a, b);
            let mut sum = Tensor::zeros(2, k);
            for c in a.values() {
                sum += c;
            }
            assert_eq!(sum, t);
        }
    }

    #[test]
    fn lie_element_round_trip_and_bracket() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let l = LieElement::random(3, 3, &mut rng);
        assert_eq!(LieElement::from_series(&l.to_series()).unwrap(), l);
        let e1 = LieElement::from_terms(2, 3, [(w("1"), int(1))]).unwrap();
        let e2 = LieElement::from_terms(2, 3, [(w("2"), int(1))]).unwrap();
        let e12 = e1.bracket(&e2).unwrap();
        assert_eq!(e12.coeffs().iter().collect::<Vec<_>>(), vec![(&w("12"), &int(1))]);
        let e112 = e1.bracket(&e12).unwrap();
        assert_eq!(e112.coefficient(&w("112")), int(1));
    }
}
