//! Permutations of `{1..k}`.
//!
//! Composition is right-to-left: `(s.compose(t))(i) = s(t(i))`. Display uses
//! cycle notation, `(12)(34)`, and `id` for the identity.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::combinatorics::{next_permutation, Partition};
use crate::error::{Error, Result};

/// Stored in one-line form with 0-based images.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(k: usize) -> Self {
        Permutation((0..k).collect())
    }

    /// From 1-based one-line notation: `images[i-1] = σ(i)`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let k = images.len();
        let mut seen = alloc::vec![false; k];
        for &img in images {
            if img == 0 || img > k || seen[img - 1] {
                return Err(Error::InvalidPermutation(format!("{:?} is not a bijection", images)));
            }
            seen[img - 1] = true;
        }
        Ok(Permutation(images.iter().map(|i| i - 1).collect()))
    }

    /// Product of 1-based cycles, e.g. `[[1, 3], [2, 4]]`.
    pub fn from_cycles(k: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..k).collect();
        let mut touched = alloc::vec![false; k];
        for cycle in cycles {
            for &c in cycle {
                if c == 0 || c > k || touched[c - 1] {
                    return Err(Error::InvalidPermutation(format!(
                        "cycles {:?} are not disjoint cycles on 1..={}",
                        cycles, k
                    )));
                }
                touched[c - 1] = true;
            }
            for (i, &c) in cycle.iter().enumerate() {
                images[c - 1] = cycle[(i + 1) % cycle.len()] - 1;
            }
        }
        Ok(Permutation(images))
    }

    pub fn transposition(k: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..k).collect();
        images.swap(a - 1, b - 1);
        Permutation(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// `σ(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1] + 1
    }

    /// 0-based images.
    pub(crate) fn images0(&self) -> &[usize] {
        &self.0
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|i| i + 1).collect()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "composing permutations of different degree");
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0; self.0.len()];
        for (i, &img) in self.0.iter().enumerate() {
            inv[img] = i;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// Nontrivial cycles, each starting at its smallest element, 1-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = alloc::vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.0[i];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        let nontrivial = self.cycles();
        let moved: usize = nontrivial.iter().map(Vec::len).sum();
        let mut parts: Vec<usize> = nontrivial.iter().map(Vec::len).collect();
        parts.extend(core::iter::repeat_n(1, self.degree() - moved));
        Partition::from_parts_unsorted(parts)
    }

    pub fn sign(&self) -> i64 {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// All of `S_k` in lexicographic one-line order.
    pub fn all(k: usize) -> Vec<Permutation> {
        let mut current: Vec<usize> = (0..k).collect();
        let mut out = alloc::vec![Permutation(current.clone())];
        while next_permutation(&mut current) {
            out.push(Permutation(current.clone()));
        }
        out
    }

    /// Permutations preserving each block of `blocks` setwise.
    pub fn block_stabilizer(k: usize, blocks: &[Vec<usize>]) -> Vec<Permutation> {
        let mut out = alloc::vec![Permutation::identity(k)];
        for block in blocks {
            let mut ordered = block.clone();
            ordered.sort_unstable();
            let mut arrangement = ordered.clone();
            let mut local = Vec::new();
            loop {
                let mut images: Vec<usize> = (0..k).collect();
                for (src, dst) in ordered.iter().zip(arrangement.iter()) {
                    images[src - 1] = dst - 1;
                }
                local.push(Permutation(images));
                if !next_permutation(&mut arrangement) {
                    break;
                }
            }
            out = out
                .iter()
                .flat_map(|p| local.iter().map(move |q| p.compose(q)))
                .collect();
        }
        out.sort();
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "id");
        }
        let spaced = self.degree() > 9;
        for cycle in cycles {
            write!(f, "(")?;
            for (i, c) in cycle.iter().enumerate() {
                if spaced && i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", c)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Parses cycle notation for a given degree: `"id"`, `"(132)"`,
/// `"(13)(24)"`, or space separated entries `"(1 10)"`.
pub fn parse_cycles(k: usize, s: &str) -> Result<Permutation> {
    let s = s.trim();
    if s == "id" || s.is_empty() {
        return Ok(Permutation::identity(k));
    }
    let mut cycles = Vec::new();
    for chunk in s.split(')') {
        let chunk = chunk.trim();
        if chunk.is_empty() {
            continue;
        }
        let body = chunk
            .strip_prefix('(')
            .ok_or_else(|| Error::InvalidPermutation(format!("malformed cycle notation {:?}", s)))?;
        let entries: Vec<usize> = if body.contains(|c: char| c.is_whitespace() || c == ',') {
            body.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>())
                .collect::<core::result::Result<_, _>>()
                .map_err(|_| Error::InvalidPermutation(format!("bad cycle {:?}", body)))?
        } else {
            body.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<_>>()
                .ok_or_else(|| Error::InvalidPermutation(format!("bad cycle {:?}", body)))?
        };
        cycles.push(entries);
    }
    Permutation::from_cycles(k, &cycles)
}

impl FromStr for Permutation {
    type Err = Error;

    /// One-line notation, `"2 1 3"` or `"[2,1,3]"`.
    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .trim()
            .trim_start_matches('[')
            .trim_end_matches(']')
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>())
            .collect::<core::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidPermutation(String::from(s)))?;
        Permutation::from_images(&images)
    }
}
