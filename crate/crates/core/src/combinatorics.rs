//! Words, Lyndon words, partitions and Young tableaux.
//!
//! Letters are 1-based (`1..=d`); flat tensor indices are 0-based with the
//! leftmost letter as the most significant base-`d` digit.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};

/// A word over the alphabet `{1..d}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: Vec<u8>) -> Self {
        Word(letters)
    }

    /// Checks that every letter lies in `1..=dim`.
    pub fn checked(letters: Vec<u8>, dim: usize) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&l| l == 0 || l as usize > dim) {
            return Err(Error::LetterOutOfRange { letter: bad as usize, dim });
        }
        Ok(Word(letters))
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_letter(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0) as usize
    }

    /// Base-`dim` flat index, leftmost letter most significant.
    pub fn index(&self, dim: usize) -> usize {
        self.0.iter().fold(0, |acc, &l| acc * dim + (l as usize - 1))
    }

    pub fn from_index(dim: usize, len: usize, mut index: usize) -> Self {
        let mut letters = vec![0u8; len];
        for slot in letters.iter_mut().rev() {
            *slot = (index % dim) as u8 + 1;
            index /= dim;
        }
        Word(letters)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// Letter counts, `content[l - 1]` = occurrences of `l`.
    pub fn content(&self, dim: usize) -> Vec<usize> {
        let mut counts = vec![0; dim];
        for &l in &self.0 {
            counts[l as usize - 1] += 1;
        }
        counts
    }

    pub fn is_lyndon(&self) -> bool {
        is_lyndon(&self.0)
    }
}

impl From<&[u8]> for Word {
    fn from(letters: &[u8]) -> Self {
        Word(letters.to_vec())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &l in &self.0 {
            write!(f, "{}", l)?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses a digit string such as `"1122"`; letters are `1..=9`.
    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .chars()
            .map(|c| match c.to_digit(10) {
                Some(d) if d >= 1 => Ok(d as u8),
                _ => Err(Error::Precondition(format!("bad letter {:?} in word {:?}", c, s))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Word(letters))
    }
}

/// Strictly smaller than every nontrivial rotation.
pub fn is_lyndon(w: &[u8]) -> bool {
    if w.is_empty() {
        return false;
    }
    (1..w.len()).all(|i| {
        let rotated = w[i..].iter().chain(w[..i].iter());
        w.iter().cmp(rotated) == core::cmp::Ordering::Less
    })
}

/// All Lyndon words of length exactly `len` over `{1..dim}`, in
/// lexicographic order.
pub fn lyndon_words(dim: usize, len: usize) -> Vec<Word> {
    lyndon_words_up_to(dim, len)
        .into_iter()
        .filter(|w| w.len() == len)
        .collect()
}

/// All Lyndon words of length `1..=max_len`, in lexicographic order
/// (Duval's generation algorithm).
pub fn lyndon_words_up_to(dim: usize, max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    if dim == 0 || max_len == 0 {
        return out;
    }
    let top = dim as u8;
    let mut w: Vec<u8> = vec![1];
    while !w.is_empty() {
        out.push(Word(w.clone()));
        let period = w.len();
        while w.len() < max_len {
            let next = w[w.len() - period];
            w.push(next);
        }
        while w.last() == Some(&top) {
            w.pop();
        }
        if let Some(last) = w.last_mut() {
            *last += 1;
        }
    }
    out
}

/// Number-theoretic Möbius function.
pub fn moebius(n: u64) -> i8 {
    assert!(n >= 1, "moebius is defined for n >= 1");
    let mut n = n;
    let mut sign = 1i8;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

pub fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|t| n.is_multiple_of(*t)).collect()
}

/// `dim Lie^k(C^d) = (1/k) sum_{t | k} mu(t) d^(k/t)`.
pub fn lie_dim(dim: usize, len: usize) -> u128 {
    assert!(len >= 1, "lie_dim needs k >= 1");
    let total: i128 = divisors(len)
        .into_iter()
        .map(|t| moebius(t as u64) as i128 * (dim as i128).pow((len / t) as u32))
        .sum();
    debug_assert_eq!(total % len as i128, 0);
    (total / len as i128) as u128
}

pub fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Number of multisets of size `k` drawn from `n` kinds.
pub fn multichoose(n: u128, k: u128) -> u128 {
    if k == 0 {
        return 1;
    }
    if n == 0 {
        return 0;
    }
    binomial(n + k - 1, k)
}

/// An integer partition: weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{:?} has a zero part", parts)));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{:?} is not weakly decreasing", parts)));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_parts_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(cols^rows)`, e.g. `rectangle(2, 3) = (3,3)`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Partition::empty();
        }
        Partition(vec![cols; rows])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `a_i`: the number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    /// `(i, a_i)` for every part size present, ascending in `i`.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in self.0.iter().rev() {
            match out.last_mut() {
                Some((size, count)) if *size == p => *count += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Partition whose multiplicity profile is the sum of both profiles.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::from_parts_unsorted(parts)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition((0..width).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    /// Multiply every part by `factor`.
    pub fn scaled(&self, factor: usize) -> Partition {
        Partition(self.0.iter().map(|p| p * factor).collect())
    }

    /// Hook length of box `(row, col)`, 0-based.
    pub fn hook(&self, row: usize, col: usize) -> usize {
        let arm = self.0[row] - col - 1;
        let leg = self.0[row + 1..].iter().filter(|&&p| p > col).count();
        arm + leg + 1
    }

    /// Centralizer order `z = prod_i i^(a_i) a_i!` of the conjugacy class
    /// with this cycle type.
    pub fn centralizer_order(&self) -> BigUint {
        let mut acc = BigUint::one();
        for (size, count) in self.multiplicities() {
            for j in 1..=count {
                acc *= BigUint::from(size) * BigUint::from(j);
            }
        }
        acc
    }

    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }

    /// All distinct orderings of the parts, lexicographically sorted.
    pub fn distinct_orderings(&self) -> Vec<Vec<usize>> {
        let mut current: Vec<usize> = self.0.clone();
        current.sort_unstable();
        let mut out = vec![current.clone()];
        while next_permutation(&mut current) {
            out.push(current.clone());
        }
        out
    }
}

/// Advances to the next lexicographic permutation; false when exhausted.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `"2,1"`, `"(2,1)"`, `"2 1"`; `""` and `"()"` are empty.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = trimmed
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("cannot parse part {:?}", t)))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `k`, reverse-lexicographic: `(3), (2,1), (1,1,1)`.
pub fn partitions(k: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_partitions(k, k, &mut current, &mut out);
    out
}

fn fill_partitions(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for part in (1..=rest.min(max)).rev() {
        current.push(part);
        fill_partitions(rest - part, part, current, out);
        current.pop();
    }
}

/// A filling of a Young diagram with `{1..k}`, each used once.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct YoungTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl YoungTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|e| Error::InvalidTableau(format!("row lengths: {}", e)))?;
        let k = shape.weight();
        let mut seen = vec![false; k + 1];
        for &entry in rows.iter().flatten() {
            if entry == 0 || entry > k || seen[entry] {
                return Err(Error::InvalidTableau(format!(
                    "filling {:?} is not a bijection onto 1..={}",
                    rows, k
                )));
            }
            seen[entry] = true;
        }
        Ok(YoungTableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width)
            .map(|j| self.rows.iter().filter_map(|r| r.get(j).copied()).collect())
            .collect()
    }

    pub fn size(&self) -> usize {
        self.shape.weight()
    }

    /// Rows and columns strictly increase.
    pub fn is_standard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self.columns().iter().all(|c| c.windows(2).all(|w| w[0] < w[1]));
        rows_ok && cols_ok
    }
}

impl fmt::Display for YoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{:?}", row)?;
        }
        write!(f, "]")
    }
}

/// All standard tableaux of shape `shape`.
pub fn standard_tableaux(shape: &Partition) -> Vec<YoungTableau> {
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.len()];
    place_next(shape, 1, &mut rows, &mut out);
    out
}

fn place_next(
    shape: &Partition,
    next: usize,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<YoungTableau>,
) {
    if next > shape.weight() {
        out.push(YoungTableau { shape: shape.clone(), rows: rows.clone() });
        return;
    }
    for r in 0..shape.len() {
        let len = rows[r].len();
        let fits = len < shape.parts()[r] && (r == 0 || rows[r - 1].len() > len);
        if fits {
            rows[r].push(next);
            place_next(shape, next + 1, rows, out);
            rows[r].pop();
        }
    }
}

/// Hook length formula `k! / prod hooks`; equals the Schur-Weyl
/// multiplicity of `S_shape` in `V^{⊗k}`.
pub fn num_standard(shape: &Partition) -> u128 {
    let mut num = BigUint::one();
    for i in 2..=shape.weight() {
        num *= BigUint::from(i);
    }
    let mut den = BigUint::one();
    for (r, c) in shape.boxes() {
        den *= BigUint::from(shape.hook(r, c));
    }
    (num / den).to_u128().expect("standard tableaux count fits in u128")
}

/// `dim S_shape(C^dim)` by the hook-content formula; zero when the shape
/// has more than `dim` rows.
pub fn schur_dim(shape: &Partition, dim: usize) -> u128 {
    if shape.len() > dim {
        return 0;
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (r, c) in shape.boxes() {
        num *= BigUint::from(dim + c - r);
        den *= BigUint::from(shape.hook(r, c));
    }
    (num / den).to_u128().expect("Schur module dimension fits in u128")
}

/// `dim W_λ(C^d) = prod_i multichoose(lie_dim(d, i), a_i(λ))`.
pub fn thrall_module_dim(shape: &Partition, dim: usize) -> u128 {
    shape
        .multiplicities()
        .into_iter()
        .map(|(size, count)| multichoose(lie_dim(dim, size), count as u128))
        .product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn brute_force_lyndon(dim: usize, len: usize) -> Vec<Word> {
        (0..dim.pow(len as u32))
            .map(|i| Word::from_index(dim, len, i))
            .filter(|w| {
                let l = w.letters();
                (1..l.len()).all(|r| {
                    let mut rot = l[r..].to_vec();
                    rot.extend_from_slice(&l[..r]);
                    l < &rot[..]
                })
            })
            .collect()
    }

    fn words(list: &[&str]) -> Vec<Word> {
        list.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn lyndon_words_binary_up_to_three() {
        let all: Vec<Word> = (1..=3).flat_map(|k| lyndon_words(2, k)).collect();
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(sorted, words(&["1", "112", "12", "122", "2"]));
        assert_eq!(lyndon_words_up_to(2, 3), words(&["1", "112", "12", "122", "2"]));
    }

    #[test]
    fn lyndon_words_small_cases() {
        assert_eq!(lyndon_words(1, 1), words(&["1"]));
        assert!(lyndon_words(1, 3).is_empty());
        assert_eq!(lyndon_words(3, 2), words(&["12", "13", "23"]));
        assert_eq!(brute_force_lyndon(3, 2), words(&["12", "13", "23"]));
    }

    #[test]
    fn lyndon_generation_matches_rotation_test_and_necklace_count() {
        for d in 1..=4usize {
            for k in 1..=8 {
                if d.pow(k as u32) > 70_000 {
                    continue;
                }
                let generated = lyndon_words(d, k);
                assert_eq!(generated, brute_force_lyndon(d, k), "d={} k={}", d, k);
                assert_eq!(generated.len() as u128, lie_dim(d, k), "d={} k={}", d, k);
            }
        }
    }

    #[test]
    fn lie_dims() {
        assert_eq!([lie_dim(2, 1), lie_dim(2, 2), lie_dim(2, 3)], [2, 1, 2]);
        assert_eq!(lie_dim(5, 1), 5);
        assert_eq!(lie_dim(3, 3), 8);
        for d in 1..=6u128 {
            assert_eq!(lie_dim(d as usize, 3), (d * d * d - d) / 3);
        }
    }

    #[test]
    fn moebius_values() {
        assert_eq!(moebius(1), 1);
        assert_eq!(moebius(4), 0);
        assert_eq!(moebius(6), 1);
        assert_eq!(moebius(30), -1);
        assert_eq!(moebius(7), -1);
    }

    #[test]
    fn partition_enumeration() {
        let p3: Vec<Vec<usize>> = partitions(3).iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(p3, vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
        assert_eq!(partitions(0), vec![Partition::empty()]);
        assert_eq!(partitions(5).len(), 7);
        assert_eq!(partitions(8).len(), 22);
    }

    #[test]
    fn partition_union_adds_multiplicities() {
        let a: Partition = "3,2,1".parse().unwrap();
        let b: Partition = "2,2".parse().unwrap();
        assert_eq!(a.union(&b).parts(), &[3, 2, 2, 2, 1]);
        assert_eq!(a.union(&Partition::empty()), a);
        let one: Partition = "1".parse().unwrap();
        assert_eq!(one.union(&one).parts(), &[1, 1]);
    }

    #[test]
    fn partition_parsing_rejects_bad_input() {
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("(2, 1)".parse::<Partition>().unwrap().parts(), &[2, 1]);
    }

    #[test]
    fn standard_tableaux_of_two_one() {
        let shape: Partition = "2,1".parse().unwrap();
        let tabs = standard_tableaux(&shape);
        let rows: Vec<_> = tabs.iter().map(|t| t.rows().to_vec()).collect();
        assert_eq!(rows, vec![vec![vec![1, 2], vec![3]], vec![vec![1, 3], vec![2]]]);
        assert!(tabs.iter().all(YoungTableau::is_standard));
        assert_eq!(standard_tableaux(&"4".parse().unwrap()).len(), 1);
        assert_eq!(num_standard(&"2,2".parse().unwrap()), 2);
        assert_eq!(standard_tableaux(&"2,2".parse().unwrap()).len(), 2);
    }

    #[test]
    fn hook_formula_matches_enumeration() {
        for k in 0..=7 {
            for shape in partitions(k) {
                assert_eq!(num_standard(&shape), standard_tableaux(&shape).len() as u128);
            }
        }
    }

    #[test]
    fn tableau_validation() {
        assert!(YoungTableau::new(vec![vec![1, 2], vec![2]]).is_err());
        assert!(YoungTableau::new(vec![vec![1], vec![2, 3]]).is_err());
        let t = YoungTableau::new(vec![vec![2, 1], vec![3]]).unwrap();
        assert!(!t.is_standard());
        assert_eq!(t.columns(), vec![vec![2, 3], vec![1]]);
    }

    #[test]
    fn schur_dims() {
        let hook: Partition = "2,1".parse().unwrap();
        let column: Partition = "1,1,1".parse().unwrap();
        for d in 1..=7u128 {
            assert_eq!(schur_dim(&hook, d as usize), (d * d * d - d) / 3);
            assert_eq!(schur_dim(&column, d as usize), binomial(d, 3));
        }
        assert_eq!(schur_dim(&"1,1".parse().unwrap(), 1), 0);
    }

    #[test]
    fn schur_weyl_dimension_count() {
        for d in 1..=4usize {
            for k in 0..=6usize {
                let total: u128 = partitions(k)
                    .iter()
                    .map(|mu| num_standard(mu) * schur_dim(mu, d))
                    .sum();
                assert_eq!(total, (d as u128).pow(k as u32), "d={} k={}", d, k);
            }
        }
    }

    #[test]
    fn word_index_round_trip() {
        for d in 1..=3usize {
            for k in 0..=6 {
                for i in 0..d.pow(k as u32) {
                    let w = Word::from_index(d, k, i);
                    assert_eq!(w.index(d), i);
                    assert!(Word::checked(w.letters().to_vec(), d).is_ok());
                }
            }
        }
        assert_eq!(Word::from_index(2, 3, 1).to_string(), "112");
        assert!(Word::checked(vec![1, 3], 2).is_err());
    }

    #[test]
    fn thrall_module_dims_sum_to_tensor_dim() {
        for d in 1..=3usize {
            for k in 1..=6usize {
                let total: u128 = partitions(k).iter().map(|l| thrall_module_dim(l, d)).sum();
                assert_eq!(total, (d as u128).pow(k as u32));
            }
        }
    }

    #[test]
    fn centralizer_orders() {
        let z = |s: &str| s.parse::<Partition>().unwrap().centralizer_order();
        assert_eq!(z("1,1,1"), BigUint::from(6u32));
        assert_eq!(z("2,1"), BigUint::from(2u32));
        assert_eq!(z("3"), BigUint::from(3u32));
        assert_eq!(z("2,2"), BigUint::from(8u32));
    }

    #[test]
    fn distinct_orderings_of_parts() {
        let p: Partition = "2,1,1".parse().unwrap();
        assert_eq!(p.distinct_orderings(), vec![vec![1, 1, 2], vec![1, 2, 1], vec![2, 1, 1]]);
    }
}
