//! Rank and symmetry diagnostics for signature tensors.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::combinatorics::Word;
use crate::error::{Error, Result};
use crate::free_lie::{exp_truncated, is_lie_element, phi_k, LieElement};
use crate::linalg::{Matrix, SpanBasis};
use crate::scalar::{self, Scalar};
use crate::shuffle::{log_signature, signature, PiecewiseLinearPath};
use crate::tensor::{Tensor, TensorSeries};

/// Factors `v_1, …, v_k` with `T = v_1 ⊗ … ⊗ v_k`, or `None` if some
/// one-slot flattening has rank above one.
///
/// Scale convention: with `w0` the first nonzero coordinate of `T`, every
/// factor after the first has coordinate 1 at its letter of `w0`.
pub fn rank_one_factors(t: &Tensor) -> Result<Option<Vec<Vec<Scalar>>>> {
    if t.is_zero() {
        return Err(Error::Precondition("the zero tensor has rank 0".into()));
    }
    let k = t.order();
    if k == 0 {
        return Ok(Some(Vec::new()));
    }
    if k > 1 {
        for slot in 1..=k {
            if t.flattening_rank(&[slot])? != 1 {
                return Ok(None);
            }
        }
    }
    let d = t.dim();
    let i0 = (0..t.entries().len()).find(|&i| !t.get_index(i).is_zero()).expect("nonzero tensor");
    let w0 = Word::from_index(d, k, i0);
    let pivot = t.get_index(i0).clone();
    let factors: Vec<Vec<Scalar>> = (0..k)
        .map(|slot| {
            let fiber: Vec<Scalar> = (1..=d as u8)
                .map(|l| {
                    let mut w = w0.letters().to_vec();
                    w[slot] = l;
                    t.get(&Word::new(w)).clone()
                })
                .collect();
            if slot == 0 {
                fiber
            } else {
                fiber.into_iter().map(|c| c / &pivot).collect()
            }
        })
        .collect();
    let rebuilt = factors
        .iter()
        .fold(Tensor::scalar(d, Scalar::one()), |acc, v| {
            acc.tensor_product(&Tensor::vector(v)).expect("same dimension")
        });
    if &rebuilt != t {
        return Err(Error::InvariantViolation(
            "rank-one flattenings did not reassemble the tensor".into(),
        ));
    }
    Ok(Some(factors))
}

pub fn is_rank_one(t: &Tensor) -> Result<bool> {
    Ok(rank_one_factors(t)?.is_some())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankOneReport {
    pub symmetric: bool,
    pub rank_one: bool,
    /// Whether the caller vouched that the tensor is a signature level.
    pub asserted_in_u: bool,
    pub agree: bool,
}

impl RankOneReport {
    /// Disagreement only matters when the tensor was asserted to be a
    /// signature level.
    pub fn consistent(&self) -> bool {
        self.agree || !self.asserted_in_u
    }
}

/// Compares symmetry with rank one. The zero tensor counts as symmetric
/// and as having rank at most one.
pub fn signature_rank_one_check(t: &Tensor, asserted_in_u: bool) -> Result<RankOneReport> {
    let symmetric = t.is_symmetric();
    let rank_one = t.is_zero() || is_rank_one(t)?;
    Ok(RankOneReport { symmetric, rank_one, asserted_in_u, agree: symmetric == rank_one })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegmentReport {
    pub level_k_symmetric: bool,
    /// `L_(i) = 0` for `2 ≤ i ≤ k`.
    pub higher_levels_zero: bool,
    /// Every level `≤ k` of `exp(L)` is symmetric.
    pub all_levels_symmetric: bool,
    pub transcript: Vec<String>,
}

impl SegmentReport {
    pub fn holds(&self) -> bool {
        !self.level_k_symmetric || (self.higher_levels_zero && self.all_levels_symmetric)
    }
}

/// If level `k` of `exp(L)` is symmetric, then `L` is its level-1 part up
/// to level `k`.
pub fn symmetric_level_implies_segment(l: &TensorSeries, k: usize) -> Result<SegmentReport> {
    if k == 0 || k > l.k_max() {
        return Err(Error::OrderMismatch { expected: l.k_max(), found: k });
    }
    if !l.constant().is_zero() {
        return Err(Error::Precondition("a Lie series has zero constant term".into()));
    }
    for i in 1..=l.k_max() {
        if !is_lie_element(l.level(i)) {
            return Err(Error::Precondition(format!("level {} is not a Lie polynomial", i)));
        }
    }
    if l.level(1).is_zero() {
        return Err(Error::Precondition("level 1 must be nonzero".into()));
    }
    let s = exp_truncated(&l.truncated(k))?;
    let mut transcript = Vec::new();
    let level_k_symmetric = s.level(k).is_symmetric();
    transcript.push(format!("level {} of exp(L) symmetric: {}", k, level_k_symmetric));
    let mut higher_levels_zero = true;
    for i in 2..=k {
        let zero = l.level(i).is_zero();
        transcript.push(format!("L_({}) = 0: {}", i, zero));
        higher_levels_zero &= zero;
    }
    let mut all_levels_symmetric = true;
    for i in 1..=k {
        let sym = s.level(i).is_symmetric();
        transcript.push(format!("level {} symmetric: {}", i, sym));
        all_levels_symmetric &= sym;
    }
    Ok(SegmentReport { level_k_symmetric, higher_levels_zero, all_levels_symmetric, transcript })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlsReport {
    /// `L_(i) = 0` for `1 < i ≤ k_max`.
    pub criterion_a: bool,
    /// Every signature level is symmetric.
    pub criterion_b: bool,
    /// Every signature level has rank at most one.
    pub criterion_c: bool,
    /// Lowest level at which some criterion fails.
    pub first_failure: Option<usize>,
}

impl FlsReport {
    pub fn agree(&self) -> bool {
        self.criterion_a == self.criterion_b && self.criterion_b == self.criterion_c
    }
}

/// Straight-line criteria for a path with nonzero total increment.
pub fn fls_check(path: &PiecewiseLinearPath, k_max: usize) -> Result<FlsReport> {
    if path.total_increment().iter().all(Zero::is_zero) {
        return Err(Error::Precondition("the total increment is zero".into()));
    }
    let log = log_signature(path, k_max);
    let sig = signature(path, k_max);
    let (mut a, mut b, mut c) = (true, true, true);
    let mut first_failure = None;
    for i in 1..=k_max {
        let ai = i == 1 || log.level(i).is_zero();
        let bi = sig.level(i).is_symmetric();
        let ci = sig.level(i).is_zero() || is_rank_one(sig.level(i))?;
        if first_failure.is_none() && !(ai && bi && ci) {
            first_failure = Some(i);
        }
        a &= ai;
        b &= bi;
        c &= ci;
    }
    Ok(FlsReport { criterion_a: a, criterion_b: b, criterion_c: c, first_failure })
}

/// Rank of `A + x xᵀ` for skew `A`, cross-checked against the case split
/// `rank A` (x in the row space) or `rank A + 1`.
pub fn skew_plus_rank_one_rank(a: &Matrix, x: &[Scalar]) -> Result<usize> {
    let d = a.rows();
    if a.cols() != d {
        return Err(Error::DimensionMismatch { left: d, right: a.cols() });
    }
    if x.len() != d {
        return Err(Error::DimensionMismatch { left: d, right: x.len() });
    }
    for i in 0..d {
        for j in 0..d {
            if a[(i, j)] != -a[(j, i)].clone() {
                return Err(Error::Precondition("the matrix is not skew-symmetric".into()));
            }
        }
    }
    let mut sum = a.clone();
    for i in 0..d {
        for j in 0..d {
            sum[(i, j)] += &x[i] * &x[j];
        }
    }
    let rank = sum.rank();
    let mut rows = SpanBasis::new(d);
    for i in 0..d {
        rows.insert(a.row(i).to_vec());
    }
    let predicted = if rows.contains(x) { rows.rank() } else { rows.rank() + 1 };
    if rank != predicted {
        return Err(Error::InvariantViolation(format!(
            "rank(A + xx^T) = {} but the case split predicts {}",
            rank, predicted
        )));
    }
    Ok(rank)
}

/// `⌈(d^k(d−1) − d(d^{k/2} − 1)) / ((d−1) k (kd−k+1))⌉ − 1`, exactly.
pub fn generic_rank_lower_bound(d: usize, k: usize) -> Result<BigInt> {
    if d < 2 || k < 2 {
        return Err(Error::Precondition("need d >= 2 and k >= 2".into()));
    }
    let dd = BigInt::from(d);
    let dk = num_traits::pow(dd.clone(), k);
    let denom = (&dd - BigInt::one()) * BigInt::from(k) * BigInt::from(k * d - k + 1);
    let half = num_traits::pow(dd.clone(), k / 2);
    if k.is_multiple_of(2) {
        let num = &dk * (&dd - BigInt::one()) - &dd * (half - BigInt::one());
        return Ok(Scalar::new(num, denom).ceil().to_integer() - 1);
    }
    // Odd k: value = (A − B·√d) / D with A = d^k(d−1) + d, B = d·d^{(k−1)/2}.
    let a = &dk * (&dd - BigInt::one()) + &dd;
    let b = &dd * half;
    let root = dd.sqrt();
    if &root * &root == dd {
        let num = a - b * root;
        return Ok(Scalar::new(num, denom).ceil().to_integer() - 1);
    }
    // √d is irrational, so the value is never an integer and lies strictly
    // inside every bracket.
    let mut lo = Scalar::from_integer(root.clone());
    let mut hi = Scalar::from_integer(root + 1);
    let target = Scalar::from_integer(dd);
    let value_at = |r: &Scalar| {
        (Scalar::from_integer(a.clone()) - Scalar::from_integer(b.clone()) * r)
            / Scalar::from_integer(denom.clone())
    };
    loop {
        let upper = value_at(&lo);
        let lower = value_at(&hi);
        let fl = lower.floor().to_integer();
        // ceil(value) − 1 = floor(value) once both ends share a floor.
        if fl == upper.floor().to_integer() && !upper.is_integer() {
            return Ok(fl);
        }
        for _ in 0..8 {
            let mid = (&lo + &hi) / scalar::int(2);
            if &mid * &mid < target {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    }
}

fn entry(t: &Tensor, i: usize, j: usize, k: usize) -> Scalar {
    t.get(&Word::new(vec![i as u8 + 1, j as u8 + 1, k as u8 + 1])).clone()
}

fn det2(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> Scalar {
    a * d - b * c
}

/// Cayley's hyperdeterminant of a `2×2×2` tensor, with `a_{ijk}` read at
/// the word `(i+1)(j+1)(k+1)`.
pub fn hyperdeterminant_2x2x2(t: &Tensor) -> Result<Scalar> {
    if t.dim() != 2 || t.order() != 3 {
        return Err(Error::Precondition(format!(
            "expected a 2x2x2 tensor, found dim {} order {}",
            t.dim(),
            t.order()
        )));
    }
    let a = |i, j, k| entry(t, i, j, k);
    let first = det2(a(0, 0, 0), a(0, 1, 1), a(1, 0, 0), a(1, 1, 1))
        + det2(a(0, 1, 0), a(0, 0, 1), a(1, 1, 0), a(1, 0, 1));
    let second = det2(a(0, 0, 0), a(0, 0, 1), a(1, 0, 0), a(1, 0, 1))
        * det2(a(0, 1, 0), a(0, 1, 1), a(1, 1, 0), a(1, 1, 1));
    Ok(&first * &first - second * scalar::int(4))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HdetReport {
    pub passed: bool,
    /// Ratio fixed by the first sample where the right side is nonzero.
    pub constant: Option<Scalar>,
    pub samples: usize,
    pub counterexample: Option<String>,
}

/// `(s2·u112 + s1·u122)² (3·t12² − 4·s2·u112 − 4·s1·u122)`.
pub fn hdet_pullback_polynomial(s1: &Scalar, s2: &Scalar, t12: &Scalar, u112: &Scalar, u122: &Scalar) -> Scalar {
    let lin = s2 * u112 + s1 * u122;
    let quad = t12 * t12 * scalar::int(3) - s2 * u112 * scalar::int(4) - s1 * u122 * scalar::int(4);
    &lin * &lin * quad
}

/// The Lie element in the plane with the given Lyndon coordinates.
pub fn plane_lie_element(s1: &Scalar, s2: &Scalar, t12: &Scalar, u112: &Scalar, u122: &Scalar) -> LieElement {
    let terms = [("1", s1), ("2", s2), ("12", t12), ("112", u112), ("122", u122)];
    LieElement::from_terms(2, 3, terms.iter().map(|(w, c)| (w.parse::<Word>().expect("literal"), (*c).clone())))
        .expect("Lyndon words in the plane")
}

/// Checks `Hdet(phi_3(L)) = c · polynomial` at seeded random points.
pub fn hdet_pullback_check(seed: u64, samples: usize) -> Result<HdetReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut constant: Option<Scalar> = None;
    for n in 0..samples {
        let v: Vec<Scalar> = (0..5).map(|_| scalar::random_small(&mut rng)).collect();
        let l = plane_lie_element(&v[0], &v[1], &v[2], &v[3], &v[4]);
        let lhs = hyperdeterminant_2x2x2(&phi_k(&l, 3)?)?;
        let rhs = hdet_pullback_polynomial(&v[0], &v[1], &v[2], &v[3], &v[4]);
        let ok = if rhs.is_zero() {
            lhs.is_zero()
        } else {
            let ratio = &lhs / &rhs;
            match &constant {
                Some(c) => *c == ratio,
                None => {
                    constant = Some(ratio);
                    true
                }
            }
        };
        if !ok {
            return Ok(HdetReport {
                passed: false,
                constant,
                samples: n + 1,
                counterexample: Some(format!(
                    "s1={} s2={} t12={} u112={} u122={}: hdet={} polynomial={}",
                    v[0], v[1], v[2], v[3], v[4], lhs, rhs
                )),
            });
        }
    }
    Ok(HdetReport { passed: true, constant, samples, counterexample: None })
}

/// Random skew matrix with small integer entries and a prescribed rank
/// bound: `Σ_{i<r} (u_i v_iᵀ − v_i u_iᵀ)`.
pub fn random_skew<R: rand::Rng + ?Sized>(d: usize, pairs: usize, rng: &mut R) -> Matrix {
    let mut m = Matrix::zeros(d, d);
    for _ in 0..pairs {
        let u: Vec<Scalar> = (0..d).map(|_| scalar::random_int(rng)).collect();
        let v: Vec<Scalar> = (0..d).map(|_| scalar::random_int(rng)).collect();
        for i in 0..d {
            for j in 0..d {
                let delta = &u[i] * &v[j] - &v[i] * &u[j];
                m[(i, j)] += delta;
            }
        }
    }
    m
}
