//! Symmetric functions stored in the power-sum basis.
//!
//! Plethysm with a power sum is a relabelling here, `p_j[p_m] = p_{jm}`, so
//! the Schur basis is only needed at the boundary, through the characters
//! `p_ρ = Σ_μ χ_μ(ρ) s_μ`.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::combinatorics::{divisors, moebius, partitions, Partition};
use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// Homogeneous symmetric function `Σ c_ρ p_ρ` of a fixed degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFun {
    degree: usize,
    coeffs: BTreeMap<Partition, Scalar>,
}

impl SymFun {
    pub fn zero(degree: usize) -> Self {
        SymFun { degree, coeffs: BTreeMap::new() }
    }

    /// The constant `1`.
    pub fn one() -> Self {
        SymFun::power_sum(Partition::empty())
    }

    /// `p_ρ`.
    pub fn power_sum(rho: Partition) -> Self {
        let degree = rho.weight();
        let mut coeffs = BTreeMap::new();
        coeffs.insert(rho, Scalar::one());
        SymFun { degree, coeffs }
    }

    /// Complete homogeneous `h_k = Σ_ρ p_ρ / z_ρ`.
    pub fn complete(k: usize) -> Self {
        let mut f = SymFun::zero(k);
        for rho in partitions(k) {
            let z = Scalar::from_integer(BigInt::from(rho.centralizer_order()));
            f.add_term(rho, z.recip());
        }
        f
    }

    /// Elementary `e_k = Σ_ρ sgn(ρ) p_ρ / z_ρ`.
    pub fn elementary(k: usize) -> Self {
        let mut f = SymFun::zero(k);
        for rho in partitions(k) {
            let z = Scalar::from_integer(BigInt::from(rho.centralizer_order()));
            f.add_term(rho.clone(), scalar::int(class_sign(&rho)) / z);
        }
        f
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, Scalar> {
        &self.coeffs
    }

    pub fn coefficient(&self, rho: &Partition) -> Scalar {
        self.coeffs.get(rho).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_term(&mut self, rho: Partition, c: Scalar) {
        debug_assert_eq!(rho.weight(), self.degree);
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(rho) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &SymFun) -> SymFun {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        assert_eq!(self.degree, other.degree, "adding symmetric functions of different degree");
        let mut out = self.clone();
        for (rho, c) in &other.coeffs {
            out.add_term(rho.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> SymFun {
        let mut out = SymFun::zero(self.degree);
        for (rho, x) in &self.coeffs {
            out.add_term(rho.clone(), x * c);
        }
        out
    }

    /// Product, `p_ρ p_σ = p_{ρ∪σ}`.
    pub fn mul(&self, other: &SymFun) -> SymFun {
        let mut out = SymFun::zero(self.degree + other.degree);
        for (a, x) in &self.coeffs {
            for (b, y) in &other.coeffs {
                out.add_term(a.union(b), x * y);
            }
        }
        out
    }

    /// `p_j[f]`: substitute `p_m ↦ p_{jm}`.
    pub fn plethysm_p(&self, j: usize) -> SymFun {
        let mut out = SymFun::zero(self.degree * j);
        for (rho, c) in &self.coeffs {
            out.add_term(rho.scaled(j), c.clone());
        }
        out
    }

    /// `h_a[f]` by Newton's identity `a·h_a[f] = Σ_{j=1..a} p_j[f]·h_{a−j}[f]`.
    pub fn plethysm_h(&self, a: usize) -> SymFun {
        let mut hs: Vec<SymFun> = Vec::with_capacity(a + 1);
        hs.push(SymFun::one());
        for n in 1..=a {
            let mut acc = SymFun::zero(n * self.degree);
            for j in 1..=n {
                acc = acc.add(&self.plethysm_p(j).mul(&hs[n - j]));
            }
            hs.push(acc.scale(&scalar::ratio(1, n as i64)));
        }
        hs.pop().expect("h_0 is always present")
    }

    /// Value at `p_m ↦ d` for every `m`: the dimension of the
    /// corresponding `GL_d` representation.
    pub fn specialize(&self, d: usize) -> Scalar {
        self.coeffs
            .iter()
            .map(|(rho, c)| c * scalar::pow(&scalar::int(d as i64), rho.len()))
            .fold(Scalar::zero(), |a, b| a + b)
    }

    /// Coefficients in the Schur basis, `coeff(s_μ) = Σ_ρ c_ρ χ_μ(ρ)`.
    /// Zero coefficients are omitted.
    pub fn schur_expand(&self) -> BTreeMap<Partition, Scalar> {
        let mut out = BTreeMap::new();
        for mu in partitions(self.degree) {
            let c = self
                .coeffs
                .iter()
                .map(|(rho, c)| c * scalar::int(sn_character(&mu, rho)))
                .fold(Scalar::zero(), |a, b| a + b);
            if !c.is_zero() {
                out.insert(mu, c);
            }
        }
        out
    }
}

/// Sign of a permutation of cycle type `rho`.
pub fn class_sign(rho: &Partition) -> i64 {
    let even_cycles = rho.parts().iter().filter(|&&p| p % 2 == 0).count();
    if even_cycles % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Irreducible `S_k` character `χ_μ` on the class of cycle type `ρ`, by the
/// Murnaghan–Nakayama rule on beta-sets.
pub fn sn_character(mu: &Partition, rho: &Partition) -> i64 {
    assert_eq!(mu.weight(), rho.weight(), "character arguments must have equal weight");
    let n = mu.len();
    let beta: Vec<usize> = mu.parts().iter().enumerate().map(|(i, &p)| p + n - 1 - i).collect();
    mn_recurse(&beta, rho.parts())
}

fn mn_recurse(beta: &[usize], parts: &[usize]) -> i64 {
    let Some((&r, rest)) = parts.split_first() else {
        return 1;
    };
    let mut total = 0;
    for &b in beta {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > b - r && x < b).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        let moved: Vec<usize> = beta.iter().map(|&x| if x == b { b - r } else { x }).collect();
        total += sign * mn_recurse(&moved, rest);
    }
    total
}

/// Character of `Lie^k V`: `ℓ_k = (1/k) Σ_{t | k} μ(t) p_t^{k/t}`.
pub fn lie_character(k: usize) -> SymFun {
    assert!(k >= 1, "lie_character needs k >= 1");
    let mut f = SymFun::zero(k);
    for t in divisors(k) {
        let m = moebius(t as u64);
        if m != 0 {
            f.add_term(Partition::rectangle(k / t, t), scalar::ratio(m as i64, k as i64));
        }
    }
    f
}

/// Character of the Thrall module `W_λ(V)`: `Π_i h_{a_i}[ℓ_i]`.
pub fn higher_lie_character(lambda: &Partition) -> SymFun {
    lambda
        .multiplicities()
        .into_iter()
        .fold(SymFun::one(), |acc, (size, count)| {
            acc.mul(&lie_character(size).plethysm_h(count))
        })
}

/// Thrall coefficients `a^λ_μ`, the multiplicity of `S_μ(V)` in `W_λ(V)`.
/// Only nonzero entries are returned.
pub fn thrall_coefficients(lambda: &Partition) -> Result<BTreeMap<Partition, u64>> {
    let mut out = BTreeMap::new();
    for (mu, c) in higher_lie_character(lambda).schur_expand() {
        if !c.is_integer() || c.is_negative() {
            return Err(Error::InvariantViolation(format!(
                "Thrall coefficient a^{}_{} = {} is not a nonnegative integer",
                lambda, mu, c
            )));
        }
        let value = c.to_integer().to_u64().ok_or_else(|| {
            Error::InvariantViolation(format!("Thrall coefficient {} does not fit in u64", c))
        })?;
        out.insert(mu, value);
    }
    Ok(out)
}
