//! Word functionals, the shuffle product, group-likeness, and signatures
//! of piecewise-linear paths.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::combinatorics::{binomial, Partition, Word};
use crate::error::{Error, Result};
use crate::free_lie::{exp_truncated, log_truncated};
use crate::group_algebra::higher_lie_idempotent;
use crate::linalg::{Matrix, SpanBasis};
use crate::scalar::{self, Scalar};
use crate::tensor::{Tensor, TensorSeries};

/// Finite combination `Σ c_w T_w` of coordinate functionals, possibly
/// mixing word lengths.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WordFunctional {
    dim: usize,
    terms: BTreeMap<Word, Scalar>,
}

impl WordFunctional {
    pub fn zero(dim: usize) -> Self {
        WordFunctional { dim, terms: BTreeMap::new() }
    }

    /// The functional `T ↦ T_w`.
    pub fn word(dim: usize, w: Word) -> Result<Self> {
        WordFunctional::from_terms(dim, [(w, Scalar::one())])
    }

    /// The empty-word functional, unit of the shuffle product.
    pub fn unit(dim: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Word::empty(), Scalar::one());
        WordFunctional { dim, terms }
    }

    pub fn from_terms<I>(dim: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Word, Scalar)>,
    {
        let mut out = WordFunctional::zero(dim);
        for (w, c) in terms {
            let w = Word::checked(w.letters().to_vec(), dim)?;
            out.add_term(w, c);
        }
        Ok(out)
    }

    /// Reads the coefficients of a homogeneous functional off a tensor.
    pub fn from_tensor(t: &Tensor) -> Self {
        WordFunctional {
            dim: t.dim(),
            terms: t.terms().map(|(w, c)| (w, c.clone())).collect(),
        }
    }

    /// Coefficient tensor of the degree-`k` part.
    pub fn to_tensor(&self, k: usize) -> Tensor {
        let mut t = Tensor::zeros(self.dim, k);
        for (w, c) in self.terms.iter().filter(|(w, _)| w.len() == k) {
            t.set(w, c.clone());
        }
        t
    }

    fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let remove = {
            let entry = self.terms.entry(w.clone()).or_insert_with(Scalar::zero);
            *entry += c;
            entry.is_zero()
        };
        if remove {
            self.terms.remove(&w);
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &BTreeMap<Word, Scalar> {
        &self.terms
    }

    pub fn coefficient(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common length of all words, if there is one.
    pub fn degree(&self) -> Option<usize> {
        let mut lens = self.terms.keys().map(Word::len);
        let first = lens.next()?;
        lens.all(|l| l == first).then_some(first)
    }

    /// Sum of coefficients; for a shuffle of two words it counts the
    /// interleavings.
    pub fn mass(&self) -> Scalar {
        self.terms.values().fold(Scalar::zero(), |a, b| a + b)
    }

    pub fn add(&self, other: &WordFunctional) -> Result<WordFunctional> {
        check_dims(self.dim, other.dim)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> WordFunctional {
        let mut out = WordFunctional::zero(self.dim);
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x * c);
        }
        out
    }

    /// Value on a tensor series; every word must fit under `k_max`.
    pub fn evaluate(&self, s: &TensorSeries) -> Result<Scalar> {
        check_dims(self.dim, s.dim())?;
        let mut acc = Scalar::zero();
        for (w, c) in &self.terms {
            if w.len() > s.k_max() {
                return Err(Error::OrderMismatch { expected: s.k_max(), found: w.len() });
            }
            acc += c * s.coefficient(w);
        }
        Ok(acc)
    }

    /// Value on a single tensor; words of other lengths contribute zero.
    pub fn evaluate_tensor(&self, t: &Tensor) -> Result<Scalar> {
        check_dims(self.dim, t.dim())?;
        Ok(self
            .terms
            .iter()
            .filter(|(w, _)| w.len() == t.order())
            .fold(Scalar::zero(), |acc, (w, c)| acc + c * t.get(w)))
    }

    /// Integer multiple with coprime integer coefficients and positive
    /// first coefficient in word order. Zero stays zero.
    pub fn normalized(&self) -> WordFunctional {
        use num_integer::Integer;
        let Some(first) = self.terms.values().next() else {
            return self.clone();
        };
        let mut den = num_bigint::BigInt::one();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
        }
        let mut num_gcd = num_bigint::BigInt::zero();
        for c in self.terms.values() {
            let n = c.numer() * (&den / c.denom());
            num_gcd = num_gcd.gcd(&n);
        }
        let mut factor = Scalar::new(den, num_gcd);
        if first.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }
}

fn check_dims(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::DimensionMismatch { left: a, right: b });
    }
    Ok(())
}

/// All interleavings of `i` and `j` that keep each word's internal order,
/// with multiplicity.
pub fn shuffle_words(i: &Word, j: &Word, dim: usize) -> Result<WordFunctional> {
    let i = Word::checked(i.letters().to_vec(), dim)?;
    let j = Word::checked(j.letters().to_vec(), dim)?;
    let mut out = WordFunctional::zero(dim);
    let (a, b) = (i.letters(), j.letters());
    let n = a.len() + b.len();
    // Each step takes the next letter from either word.
    let mut buf = vec![0u8; n];
    fn go(
        a: &[u8],
        b: &[u8],
        pos: usize,
        buf: &mut Vec<u8>,
        out: &mut WordFunctional,
    ) {
        if a.is_empty() && b.is_empty() {
            out.add_term(Word::new(buf.clone()), Scalar::one());
            return;
        }
        if let Some((&x, rest)) = a.split_first() {
            buf[pos] = x;
            go(rest, b, pos + 1, buf, out);
        }
        if let Some((&y, rest)) = b.split_first() {
            buf[pos] = y;
            go(a, rest, pos + 1, buf, out);
        }
    }
    go(a, b, 0, &mut buf, &mut out);
    debug_assert_eq!(
        out.mass(),
        scalar::int(binomial(n as u128, a.len() as u128) as i64)
    );
    Ok(out)
}

/// Bilinear extension of [`shuffle_words`].
pub fn shuffle(beta: &WordFunctional, gamma: &WordFunctional) -> Result<WordFunctional> {
    check_dims(beta.dim, gamma.dim)?;
    let mut out = WordFunctional::zero(beta.dim);
    for (u, x) in &beta.terms {
        for (v, y) in &gamma.terms {
            let s = shuffle_words(u, v, beta.dim)?;
            let xy = x * y;
            for (w, c) in s.terms {
                out.add_term(w, c * &xy);
            }
        }
    }
    Ok(out)
}

/// A pair of words on which the shuffle identity fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShuffleViolation {
    pub left: Word,
    pub right: Word,
    /// `S(I ⧢ J)`.
    pub shuffled: Scalar,
    /// `S_I · S_J`.
    pub product: Scalar,
}

/// First pair `I ≤ J` of nonempty words with `|I| + |J| ≤ k_max` where
/// `S(I ⧢ J) ≠ S_I S_J`, if any.
pub fn shuffle_identity_violation(s: &TensorSeries) -> Result<Option<ShuffleViolation>> {
    if !s.constant().is_one() {
        return Err(Error::Precondition("group-likeness needs constant term 1".into()));
    }
    let d = s.dim();
    let k = s.k_max();
    let words: Vec<Word> = (1..k)
        .flat_map(|len| (0..d.pow(len as u32)).map(move |i| Word::from_index(d, len, i)))
        .collect();
    for (a, left) in words.iter().enumerate() {
        for right in &words[a..] {
            if left.len() + right.len() > k {
                continue;
            }
            let shuffled = shuffle_words(left, right, d)?.evaluate(s)?;
            let product = s.coefficient(left) * s.coefficient(right);
            if shuffled != product {
                return Ok(Some(ShuffleViolation {
                    left: left.clone(),
                    right: right.clone(),
                    shuffled,
                    product,
                }));
            }
        }
    }
    Ok(None)
}

/// `S(I ⧢ J) = S_I S_J` for every admissible word pair.
pub fn is_group_like(s: &TensorSeries) -> Result<bool> {
    Ok(shuffle_identity_violation(s)?.is_none())
}

/// Path through rational vertices, linear between consecutive vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiecewiseLinearPath {
    dim: usize,
    points: Vec<Vec<Scalar>>,
}

impl PiecewiseLinearPath {
    pub fn new(points: Vec<Vec<Scalar>>) -> Result<Self> {
        let Some(first) = points.first() else {
            return Err(Error::Precondition("a path needs at least one point".into()));
        };
        let dim = first.len();
        if let Some(bad) = points.iter().find(|p| p.len() != dim) {
            return Err(Error::DimensionMismatch { left: dim, right: bad.len() });
        }
        Ok(PiecewiseLinearPath { dim, points })
    }

    /// Integer vertices, convenient for fixtures.
    pub fn from_integers(points: &[&[i64]]) -> Result<Self> {
        PiecewiseLinearPath::new(
            points.iter().map(|p| p.iter().map(|&x| scalar::int(x)).collect()).collect(),
        )
    }

    /// `n_segments` random steps with small rational coordinates.
    pub fn random<R: rand::Rng + ?Sized>(dim: usize, n_segments: usize, rng: &mut R) -> Self {
        let mut points = vec![vec![Scalar::zero(); dim]];
        for _ in 0..n_segments {
            let last = points.last().expect("nonempty").clone();
            points.push(last.iter().map(|x| x + scalar::random_small(rng)).collect());
        }
        PiecewiseLinearPath { dim, points }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vec<Scalar>] {
        &self.points
    }

    pub fn increments(&self) -> Vec<Vec<Scalar>> {
        self.points
            .windows(2)
            .map(|w| w[1].iter().zip(&w[0]).map(|(b, a)| b - a).collect())
            .collect()
    }

    pub fn total_increment(&self) -> Vec<Scalar> {
        let first = &self.points[0];
        let last = self.points.last().expect("nonempty");
        last.iter().zip(first).map(|(b, a)| b - a).collect()
    }

    /// `self` followed by `other` translated to start at our endpoint.
    pub fn concat(&self, other: &PiecewiseLinearPath) -> Result<PiecewiseLinearPath> {
        check_dims(self.dim, other.dim)?;
        let mut points = self.points.clone();
        let mut pos = points.last().expect("nonempty").clone();
        for inc in other.increments() {
            pos = pos.iter().zip(&inc).map(|(a, b)| a + b).collect();
            points.push(pos.clone());
        }
        Ok(PiecewiseLinearPath { dim: self.dim, points })
    }

    pub fn reversed(&self) -> PiecewiseLinearPath {
        let mut points = self.points.clone();
        points.reverse();
        PiecewiseLinearPath { dim: self.dim, points }
    }

    /// Applies `g` to every vertex.
    pub fn transformed(&self, g: &Matrix) -> Result<PiecewiseLinearPath> {
        if g.cols() != self.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: g.cols() });
        }
        Ok(PiecewiseLinearPath {
            dim: g.rows(),
            points: self.points.iter().map(|p| g.mul_vec(p)).collect(),
        })
    }

    /// Every increment lies on one line through the origin.
    pub fn is_collinear(&self) -> bool {
        let mut span = SpanBasis::new(self.dim);
        for inc in self.increments() {
            span.insert(inc);
        }
        span.rank() <= 1
    }
}

/// `Π_s exp(Δ_s)` over the segments in path order (Chen's identity).
pub fn signature(path: &PiecewiseLinearPath, k_max: usize) -> TensorSeries {
    let d = path.dim();
    let mut acc = TensorSeries::unit(d, k_max);
    for inc in path.increments() {
        let mut l = TensorSeries::zero(d, k_max);
        if k_max >= 1 {
            *l.level_mut(1) = Tensor::vector(&inc);
        }
        let seg = exp_truncated(&l).expect("zero constant term");
        acc = acc.product(&seg).expect("matching shapes");
    }
    acc
}

pub fn log_signature(path: &PiecewiseLinearPath, k_max: usize) -> TensorSeries {
    log_truncated(&signature(path, k_max)).expect("signatures have constant term 1")
}

/// `(S_12 − S_21) / 2` for a planar series.
pub fn levy_area(s: &TensorSeries) -> Result<Scalar> {
    if s.dim() != 2 {
        return Err(Error::DimensionMismatch { left: 2, right: s.dim() });
    }
    if s.k_max() < 2 {
        return Err(Error::OrderMismatch { expected: 2, found: s.k_max() });
    }
    let w = |x: &str| -> Word { x.parse().expect("literal word") };
    Ok((s.coefficient(&w("12")) - s.coefficient(&w("21"))) * scalar::ratio(1, 2))
}

/// The Lévy functional `(T_12 − T_21)/2`.
pub fn levy_functional() -> WordFunctional {
    let w = |x: &str| -> Word { x.parse().expect("literal word") };
    WordFunctional::from_terms(2, [(w("12"), scalar::ratio(1, 2)), (w("21"), scalar::ratio(-1, 2))])
        .expect("letters within the plane")
}

/// Projection of a homogeneous functional onto its `W_λ(V*)` part: the
/// functional `T ↦ β(E_λ·T)`.
pub fn project_functional(beta: &WordFunctional, lambda: &Partition) -> Result<WordFunctional> {
    let k = lambda.weight();
    let e = higher_lie_idempotent(lambda)?;
    Ok(WordFunctional::from_tensor(&e.act_dual(&beta.to_tensor(k))?))
}

/// Whether a homogeneous functional lies in `W_λ(V*)`.
pub fn is_graded(beta: &WordFunctional, lambda: &Partition) -> Result<bool> {
    if beta.is_zero() {
        return Ok(true);
    }
    if beta.degree() != Some(lambda.weight()) {
        return Ok(false);
    }
    Ok(&project_functional(beta, lambda)? == beta)
}

/// Checks that `β ⧢ γ ∈ W_{λ∪μ}(V*)` for `β ∈ W_λ(V*)`, `γ ∈ W_μ(V*)`.
pub fn shuffle_grading_check(
    beta: &WordFunctional,
    gamma: &WordFunctional,
    lambda: &Partition,
    mu: &Partition,
) -> Result<bool> {
    for (f, p) in [(beta, lambda), (gamma, mu)] {
        if !is_graded_or_unit(f, p)? {
            return Err(Error::Precondition(format!("functional is not graded by {}", p)));
        }
    }
    let product = shuffle(beta, gamma)?;
    is_graded_or_unit(&product, &lambda.union(mu))
}

fn is_graded_or_unit(f: &WordFunctional, p: &Partition) -> Result<bool> {
    if p.is_empty() {
        return Ok(f.degree().is_none_or(|d| d == 0));
    }
    is_graded(f, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_lie::{is_lie_element, LieElement};
    use crate::scalar::{int, ratio};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn wf(d: usize, terms: &[(&str, i64)]) -> WordFunctional {
        WordFunctional::from_terms(d, terms.iter().map(|(s, c)| (w(s), int(*c)))).unwrap()
    }

    #[test]
    fn shuffle_of_words() {
        let s = shuffle_words(&w("12"), &w("34"), 4).unwrap();
        let expected = wf(4, &[("1234", 1), ("1324", 1), ("1342", 1), ("3124", 1), ("3142", 1), ("3412", 1)]);
        assert_eq!(s, expected);
        assert_eq!(shuffle_words(&w("1"), &w("2"), 2).unwrap(), wf(2, &[("12", 1), ("21", 1)]));
        assert_eq!(shuffle_words(&w("1"), &w("1"), 1).unwrap(), wf(1, &[("11", 2)]));
        assert!(shuffle_words(&w("3"), &w("1"), 2).is_err());
    }

    #[test]
    fn shuffle_unit_and_commutativity() {
        let b = wf(2, &[("12", 3), ("1", -1)]);
        let g = wf(2, &[("2", 2), ("211", 5)]);
        assert_eq!(shuffle(&b, &WordFunctional::unit(2)).unwrap(), b);
        assert_eq!(shuffle(&b, &g).unwrap(), shuffle(&g, &b).unwrap());
    }

    #[test]
    fn levy_square() {
        let l = levy_functional();
        let sq = shuffle(&l, &l).unwrap();
        let beta22 = WordFunctional::from_terms(
            2,
            [("1122", 1), ("1221", -1), ("2112", -1), ("2211", 1)]
                .iter()
                .map(|(s, c)| (w(s), ratio(*c, 4))),
        )
        .unwrap();
        assert_eq!(sq, beta22.scale(&int(4)));
    }

    #[test]
    fn staircase_signature() {
        let path = PiecewiseLinearPath::from_integers(&[&[0, 0], &[1, 0], &[1, 1]]).unwrap();
        let s = signature(&path, 2);
        assert_eq!(s.level(1).entries(), &[int(1), int(1)]);
        assert_eq!(s.level(2).entries(), &[ratio(1, 2), int(1), int(0), ratio(1, 2)]);
        assert_eq!(levy_area(&s).unwrap(), ratio(1, 2));
        assert_eq!(levy_area(&signature(&path.reversed(), 2)).unwrap(), ratio(-1, 2));
        let log = log_signature(&path, 3);
        let half_bracket = &Tensor::basis(2, &w("12")).scale(&ratio(1, 2)) - &Tensor::basis(2, &w("21")).scale(&ratio(1, 2));
        assert_eq!(log.level(2), &half_bracket);
    }

    #[test]
    fn constant_path_and_retracing() {
        let path = PiecewiseLinearPath::from_integers(&[&[3, 1]]).unwrap();
        assert_eq!(signature(&path, 3), TensorSeries::unit(2, 3));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let x = PiecewiseLinearPath::random(3, 3, &mut rng);
        let there_and_back = x.concat(&x.reversed()).unwrap();
        assert_eq!(log_signature(&there_and_back, 4), TensorSeries::zero(3, 4));
    }

    #[test]
    fn group_likeness() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let l = LieElement::random(2, 4, &mut rng);
        assert!(is_group_like(&exp_truncated(&l.to_series()).unwrap()).unwrap());
        assert!(is_group_like(&TensorSeries::unit(2, 4)).unwrap());
        let bad = TensorSeries::one_plus(&Tensor::basis(2, &w("12")), 4);
        let v = shuffle_identity_violation(&bad).unwrap().unwrap();
        assert_eq!((v.left, v.right), (w("1"), w("2")));
        assert!(is_group_like(&TensorSeries::zero(2, 2)).is_err());
    }

    #[test]
    fn log_signature_levels_are_lie() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let path = PiecewiseLinearPath::random(2, 4, &mut rng);
        let log = log_signature(&path, 4);
        assert!(log.levels()[1..].iter().all(is_lie_element));
    }

    #[test]
    fn normalization() {
        let f = WordFunctional::from_terms(2, [(w("12"), ratio(-2, 3)), (w("21"), ratio(4, 9))]).unwrap();
        assert_eq!(f.normalized(), wf(2, &[("12", 3), ("21", -2)]));
    }

    #[test]
    fn levy_area_is_sl_invariant() {
        let path = PiecewiseLinearPath::from_integers(&[&[0, 0], &[2, 1], &[1, 3], &[-1, 1]]).unwrap();
        let g = Matrix::from_rows(vec![vec![int(2), int(3)], vec![int(1), int(2)]]);
        let before = levy_area(&signature(&path, 2)).unwrap();
        let after = levy_area(&signature(&path.transformed(&g).unwrap(), 2)).unwrap();
        assert_eq!(before, after);
    }
}
