//! Dense tensors in `(Q^d)^{⊗k}` and truncated tensor series.
//!
//! Slot action convention: `(σ·T)_{i_1…i_k} = T_{i_σ(1)…i_σ(k)}`, so that
//! `σ·(v_1⊗…⊗v_k) = v_{σ⁻¹(1)}⊗…⊗v_{σ⁻¹(k)}` and `(στ)·T = σ·(τ·T)`.
//! Every group-algebra action in the crate goes through
//! [`Tensor::permute_slots`].

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use crate::combinatorics::Word;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::permutation::Permutation;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor {
    dim: usize,
    order: usize,
    entries: Vec<Scalar>,
}

impl Tensor {
    pub fn zeros(dim: usize, order: usize) -> Self {
        Tensor { dim, order, entries: vec![Scalar::zero(); dim.pow(order as u32)] }
    }

    /// Order-0 tensor holding `value`.
    pub fn scalar(dim: usize, value: Scalar) -> Self {
        Tensor { dim, order: 0, entries: vec![value] }
    }

    pub fn from_entries(dim: usize, order: usize, entries: Vec<Scalar>) -> Result<Self> {
        let expected = dim.pow(order as u32);
        if entries.len() != expected {
            return Err(Error::DimensionMismatch { left: expected, right: entries.len() });
        }
        Ok(Tensor { dim, order, entries })
    }

    /// Order-1 tensor from coordinates.
    pub fn vector(coords: &[Scalar]) -> Self {
        Tensor { dim: coords.len(), order: 1, entries: coords.to_vec() }
    }

    /// `e_{w_1} ⊗ … ⊗ e_{w_k}`.
    pub fn basis(dim: usize, word: &Word) -> Self {
        let mut t = Tensor::zeros(dim, word.len());
        t.entries[word.index(dim)] = Scalar::one();
        t
    }

    /// `v ⊗ … ⊗ v` with `order` factors.
    pub fn power(v: &Tensor, order: usize) -> Self {
        let mut acc = Tensor::scalar(v.dim, Scalar::one());
        for _ in 0..order {
            acc = acc.tensor_product_unchecked(v);
        }
        acc
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.entries
    }

    pub fn get(&self, word: &Word) -> &Scalar {
        &self.entries[word.index(self.dim)]
    }

    pub fn get_index(&self, index: usize) -> &Scalar {
        &self.entries[index]
    }

    pub fn set(&mut self, word: &Word, value: Scalar) {
        let i = word.index(self.dim);
        self.entries[i] = value;
    }

    pub fn entry_mut(&mut self, index: usize) -> &mut Scalar {
        &mut self.entries[index]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Nonzero entries with their words, in lexicographic word order.
    pub fn terms(&self) -> impl Iterator<Item = (Word, &Scalar)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(move |(i, x)| (Word::from_index(self.dim, self.order, i), x))
    }

    pub fn scale(&self, c: &Scalar) -> Tensor {
        Tensor {
            dim: self.dim,
            order: self.order,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    fn check_same_shape(&self, other: &Tensor) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: other.dim });
        }
        if self.order != other.order {
            return Err(Error::OrderMismatch { expected: self.order, found: other.order });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Tensor) -> Result<Tensor> {
        self.check_same_shape(other)?;
        Ok(self + other)
    }

    /// Entry at word `IJ` is `A_I · B_J`.
    pub fn tensor_product(&self, other: &Tensor) -> Result<Tensor> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: other.dim });
        }
        Ok(self.tensor_product_unchecked(other))
    }

    pub(crate) fn tensor_product_unchecked(&self, other: &Tensor) -> Tensor {
        debug_assert_eq!(self.dim, other.dim);
        let n = other.entries.len();
        let mut entries = vec![Scalar::zero(); self.entries.len() * n];
        for (i, a) in self.entries.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.entries.iter().enumerate() {
                if !b.is_zero() {
                    entries[i * n + j] = a * b;
                }
            }
        }
        Tensor { dim: self.dim, order: self.order + other.order, entries }
    }

    /// `σ·T`, see the module docs for the convention.
    pub fn permute_slots(&self, sigma: &Permutation) -> Result<Tensor> {
        if sigma.degree() != self.order {
            return Err(Error::OrderMismatch { expected: self.order, found: sigma.degree() });
        }
        Ok(self.permute_slots_unchecked(sigma))
    }

    pub(crate) fn permute_slots_unchecked(&self, sigma: &Permutation) -> Tensor {
        let k = self.order;
        let d = self.dim;
        let images = sigma.images0();
        // place[j] = d^(k-1-j): weight of slot j in the flat index.
        let place: Vec<usize> = (0..k).map(|j| d.pow((k - 1 - j) as u32)).collect();
        let mut digits = vec![0usize; k];
        let mut out = vec![Scalar::zero(); self.entries.len()];
        for (idx, slot) in out.iter_mut().enumerate() {
            let mut rest = idx;
            for j in (0..k).rev() {
                digits[j] = rest % d;
                rest /= d;
            }
            let src: usize = (0..k).map(|j| digits[images[j]] * place[j]).sum();
            *slot = self.entries[src].clone();
        }
        Tensor { dim: d, order: k, entries: out }
    }

    /// Invariant under every slot permutation (checked on adjacent
    /// transpositions, which generate `S_k`).
    pub fn is_symmetric(&self) -> bool {
        (1..self.order).all(|i| {
            let t = Permutation::transposition(self.order, i, i + 1);
            self.permute_slots_unchecked(&t) == *self
        })
    }

    /// Average over all slot permutations.
    pub fn symmetrize(&self) -> Tensor {
        let all = Permutation::all(self.order);
        let n = Scalar::from_integer(all.len().into());
        let mut acc = Tensor::zeros(self.dim, self.order);
        for p in &all {
            acc += &self.permute_slots_unchecked(p);
        }
        acc.scale(&n.recip())
    }

    /// Matrix with the slots in `split` (1-based) as row index and the
    /// remaining slots as column index, both in increasing slot order.
    pub fn flattening(&self, split: &[usize]) -> Result<Matrix> {
        let k = self.order;
        let mut in_rows = vec![false; k];
        for &s in split {
            if s == 0 || s > k || in_rows[s - 1] {
                return Err(Error::InvalidSplit(format!("{:?} for order {}", split, k)));
            }
            in_rows[s - 1] = true;
        }
        if split.is_empty() || split.len() == k {
            return Err(Error::InvalidSplit(format!(
                "{:?} must be a nonempty proper subset of 1..={}",
                split, k
            )));
        }
        let d = self.dim;
        let nrows = d.pow(split.len() as u32);
        let ncols = d.pow((k - split.len()) as u32);
        let mut m = Matrix::zeros(nrows, ncols);
        for idx in 0..self.entries.len() {
            if self.entries[idx].is_zero() {
                continue;
            }
            let w = Word::from_index(d, k, idx);
            let (mut r, mut c) = (0, 0);
            for (j, &l) in w.letters().iter().enumerate() {
                if in_rows[j] {
                    r = r * d + (l as usize - 1);
                } else {
                    c = c * d + (l as usize - 1);
                }
            }
            m[(r, c)] = self.entries[idx].clone();
        }
        Ok(m)
    }

    pub fn flattening_rank(&self, split: &[usize]) -> Result<usize> {
        Ok(self.flattening(split)?.rank())
    }

    /// `g^{⊗k} · T` for a `d × d` matrix `g`.
    pub fn transformed(&self, g: &Matrix) -> Result<Tensor> {
        let d = self.dim;
        if g.rows() != d || g.cols() != d {
            return Err(Error::DimensionMismatch { left: d, right: g.rows() });
        }
        let k = self.order;
        let mut cur = self.entries.clone();
        for slot in 0..k {
            let stride = d.pow((k - 1 - slot) as u32);
            let mut next = vec![Scalar::zero(); cur.len()];
            for (idx, out) in next.iter_mut().enumerate() {
                let digit = (idx / stride) % d;
                let base = idx - digit * stride;
                for j in 0..d {
                    let src = &cur[base + j * stride];
                    let coef = &g[(digit, j)];
                    if !src.is_zero() && !coef.is_zero() {
                        *out += coef * src;
                    }
                }
            }
            cur = next;
        }
        Ok(Tensor { dim: d, order: k, entries: cur })
    }
}

impl<'a> Add<&'a Tensor> for &'a Tensor {
    type Output = Tensor;
    /// Panics on shape mismatch; use [`Tensor::try_add`] to get an error.
    fn add(self, rhs: &'a Tensor) -> Tensor {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a Tensor> for &'a Tensor {
    type Output = Tensor;
    fn sub(self, rhs: &'a Tensor) -> Tensor {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl AddAssign<&Tensor> for Tensor {
    fn add_assign(&mut self, rhs: &Tensor) {
        assert!(self.dim == rhs.dim && self.order == rhs.order, "tensor shape mismatch");
        for (a, b) in self.entries.iter_mut().zip(&rhs.entries) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl SubAssign<&Tensor> for Tensor {
    fn sub_assign(&mut self, rhs: &Tensor) {
        assert!(self.dim == rhs.dim && self.order == rhs.order, "tensor shape mismatch");
        for (a, b) in self.entries.iter_mut().zip(&rhs.entries) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

impl Neg for &Tensor {
    type Output = Tensor;
    fn neg(self) -> Tensor {
        Tensor {
            dim: self.dim,
            order: self.order,
            entries: self.entries.iter().map(|x| -x).collect(),
        }
    }
}

/// Truncated element `T_0 + T_1 + … + T_{k_max}` of the tensor algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorSeries {
    dim: usize,
    levels: Vec<Tensor>,
}

impl TensorSeries {
    pub fn zero(dim: usize, k_max: usize) -> Self {
        TensorSeries { dim, levels: (0..=k_max).map(|i| Tensor::zeros(dim, i)).collect() }
    }

    pub fn unit(dim: usize, k_max: usize) -> Self {
        let mut s = TensorSeries::zero(dim, k_max);
        s.levels[0] = Tensor::scalar(dim, Scalar::one());
        s
    }

    /// Level `i` must have order `i`.
    pub fn from_levels(dim: usize, levels: Vec<Tensor>) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::Precondition("a tensor series needs level 0".into()));
        }
        for (i, t) in levels.iter().enumerate() {
            if t.order() != i {
                return Err(Error::OrderMismatch { expected: i, found: t.order() });
            }
            if t.dim() != dim {
                return Err(Error::DimensionMismatch { left: dim, right: t.dim() });
            }
        }
        Ok(TensorSeries { dim, levels })
    }

    /// `1 + v` truncated at `k_max`.
    pub fn one_plus(v: &Tensor, k_max: usize) -> Self {
        let mut s = TensorSeries::unit(v.dim(), k_max);
        if v.order() <= k_max {
            s.levels[v.order()] += v;
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn k_max(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, i: usize) -> &Tensor {
        &self.levels[i]
    }

    pub fn level_mut(&mut self, i: usize) -> &mut Tensor {
        &mut self.levels[i]
    }

    pub fn levels(&self) -> &[Tensor] {
        &self.levels
    }

    pub fn constant(&self) -> &Scalar {
        self.levels[0].get_index(0)
    }

    pub fn truncated(&self, k_max: usize) -> TensorSeries {
        TensorSeries { dim: self.dim, levels: self.levels[..=k_max.min(self.k_max())].to_vec() }
    }

    fn check_compatible(&self, other: &TensorSeries) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: other.dim });
        }
        if self.k_max() != other.k_max() {
            return Err(Error::OrderMismatch { expected: self.k_max(), found: other.k_max() });
        }
        Ok(())
    }

    /// Level `m` is `Σ_{i+j=m} S_i ⊗ T_j`; levels above `k_max` are dropped.
    pub fn product(&self, other: &TensorSeries) -> Result<TensorSeries> {
        self.check_compatible(other)?;
        let mut out = TensorSeries::zero(self.dim, self.k_max());
        for (i, a) in self.levels.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.levels.iter().enumerate().take(self.k_max() + 1 - i) {
                if !b.is_zero() {
                    out.levels[i + j] += &a.tensor_product_unchecked(b);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &TensorSeries) -> Result<TensorSeries> {
        self.check_compatible(other)?;
        Ok(TensorSeries {
            dim: self.dim,
            levels: self.levels.iter().zip(&other.levels).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &TensorSeries) -> Result<TensorSeries> {
        self.check_compatible(other)?;
        Ok(TensorSeries {
            dim: self.dim,
            levels: self.levels.iter().zip(&other.levels).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, c: &Scalar) -> TensorSeries {
        TensorSeries { dim: self.dim, levels: self.levels.iter().map(|t| t.scale(c)).collect() }
    }

    /// Coefficient of a word of any length `≤ k_max`.
    pub fn coefficient(&self, word: &Word) -> &Scalar {
        self.levels[word.len()].get(word)
    }

    /// Applies `g` to every level.
    pub fn transformed(&self, g: &Matrix) -> Result<TensorSeries> {
        let levels = self
            .levels
            .iter()
            .map(|t| t.transformed(g))
            .collect::<Result<Vec<_>>>()?;
        Ok(TensorSeries { dim: self.dim, levels })
    }
}
