//! The rational group algebra `Q[S_k]` and its action on `V^{⊗k}`.
//!
//! Products compose right-to-left, `(στ)(i) = σ(τ(i))`, and an element acts
//! by `x·T = Σ_σ x_σ (σ·T)` with the slot action of
//! [`Tensor::permute_slots`]. This is a left action, `(xy)·T = x·(y·T)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::combinatorics::{num_standard, partitions, Partition, Word, YoungTableau};
use crate::error::{Error, Result};
use crate::free_lie::lyndon_bracket_terms;
use crate::linalg::{Matrix, SpanBasis};
use crate::permutation::Permutation;
use crate::scalar::{self, Scalar};
use crate::symfun::sn_character;
use crate::tensor::Tensor;

/// Largest degree for which higher Lie idempotents are solved for.
pub const K_MAX: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    degree: usize,
    coeffs: BTreeMap<Permutation, Scalar>,
}

impl GroupAlgebraElement {
    pub fn zero(degree: usize) -> Self {
        GroupAlgebraElement { degree, coeffs: BTreeMap::new() }
    }

    pub fn identity(degree: usize) -> Self {
        GroupAlgebraElement::from_permutation(Permutation::identity(degree))
    }

    pub fn from_permutation(p: Permutation) -> Self {
        let degree = p.degree();
        let mut coeffs = BTreeMap::new();
        coeffs.insert(p, Scalar::one());
        GroupAlgebraElement { degree, coeffs }
    }

    pub fn from_terms<I>(degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Permutation, Scalar)>,
    {
        let mut x = GroupAlgebraElement::zero(degree);
        for (p, c) in terms {
            if p.degree() != degree {
                return Err(Error::OrderMismatch { expected: degree, found: p.degree() });
            }
            x.add_term(p, c);
        }
        Ok(x)
    }

    /// `Σ_σ σ` over all of `S_k`.
    pub fn symmetrizer(degree: usize) -> Self {
        let mut x = GroupAlgebraElement::zero(degree);
        for p in Permutation::all(degree) {
            x.add_term(p, Scalar::one());
        }
        x
    }

    /// `Σ_σ sgn(σ) σ`.
    pub fn antisymmetrizer(degree: usize) -> Self {
        let mut x = GroupAlgebraElement::zero(degree);
        for p in Permutation::all(degree) {
            let s = scalar::int(p.sign());
            x.add_term(p, s);
        }
        x
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coefficient(&self, p: &Permutation) -> Scalar {
        self.coeffs.get(p).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Nonzero terms in one-line lexicographic order of the permutations.
    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Scalar)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_term(&mut self, p: Permutation, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let remove = {
            let entry = self.coeffs.entry(p.clone()).or_insert_with(Scalar::zero);
            *entry += c;
            entry.is_zero()
        };
        if remove {
            self.coeffs.remove(&p);
        }
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::OrderMismatch { expected: self.degree, found: other.degree });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (p, c) in &other.coeffs {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = GroupAlgebraElement::zero(self.degree);
        for (p, x) in &self.coeffs {
            out.add_term(p.clone(), x * c);
        }
        out
    }

    /// Convolution product `Σ x_σ y_τ (στ)`.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = GroupAlgebraElement::zero(self.degree);
        for (s, x) in &self.coeffs {
            for (t, y) in &other.coeffs {
                out.add_term(s.compose(t), x * y);
            }
        }
        Ok(out)
    }

    /// The anti-automorphism `σ ↦ σ⁻¹`.
    pub fn antipode(&self) -> Self {
        GroupAlgebraElement {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|(p, c)| (p.inverse(), c.clone())).collect(),
        }
    }

    pub fn is_idempotent(&self) -> bool {
        &(self * self) == self
    }

    /// Commutes with every transposition `(i i+1)`, hence with all of `S_k`.
    pub fn is_central(&self) -> bool {
        (1..self.degree).all(|i| {
            let t = GroupAlgebraElement::from_permutation(Permutation::transposition(
                self.degree,
                i,
                i + 1,
            ));
            &t * self == self * &t
        })
    }

    /// `x·T`.
    pub fn act(&self, t: &Tensor) -> Result<Tensor> {
        if t.order() != self.degree {
            return Err(Error::OrderMismatch { expected: self.degree, found: t.order() });
        }
        let mut acc = Tensor::zeros(t.dim(), t.order());
        for (p, c) in &self.coeffs {
            acc += &t.permute_slots_unchecked(p).scale(c);
        }
        Ok(acc)
    }

    /// Coefficient vector of the functional `T ↦ β(x·T)` where `beta` holds
    /// the coefficients of `β`. Equals `antipode(x)·β`.
    pub fn act_dual(&self, beta: &Tensor) -> Result<Tensor> {
        self.antipode().act(beta)
    }

    /// `x·e_u` as a sparse word combination.
    fn act_on_word(&self, u: &Word) -> BTreeMap<Word, Scalar> {
        let mut out: BTreeMap<Word, Scalar> = BTreeMap::new();
        let letters = u.letters();
        for (p, c) in &self.coeffs {
            // σ·e_u = e_{u∘σ⁻¹}
            let inv = p.inverse();
            let w: Vec<u8> = inv.images0().iter().map(|&j| letters[j]).collect();
            *out.entry(Word::new(w)).or_insert_with(Scalar::zero) += c;
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Basis of the image of `T ↦ x·T` on `(Q^dim)^{⊗k}`. The action
    /// preserves letter content, so the work is done one weight space at a
    /// time.
    pub fn action_image(&self, dim: usize) -> Vec<Tensor> {
        let k = self.degree;
        let mut out = Vec::new();
        for block in weight_spaces(dim, k) {
            let position: BTreeMap<&Word, usize> =
                block.iter().enumerate().map(|(i, w)| (w, i)).collect();
            let mut span = SpanBasis::new(block.len());
            for u in &block {
                let mut v = vec![Scalar::zero(); block.len()];
                for (w, c) in self.act_on_word(u) {
                    v[position[&w]] = c;
                }
                span.insert(v);
            }
            for v in span.basis() {
                let mut t = Tensor::zeros(dim, k);
                for (x, w) in v.iter().zip(&block) {
                    if !x.is_zero() {
                        t.set(w, x.clone());
                    }
                }
                out.push(t);
            }
        }
        out
    }

    /// Rank of `T ↦ x·T` on `(Q^dim)^{⊗k}`.
    pub fn action_rank(&self, dim: usize) -> usize {
        self.action_image(dim).len()
    }
}

/// Words of length `k` over `{1..dim}` grouped by letter content.
fn weight_spaces(dim: usize, k: usize) -> Vec<Vec<Word>> {
    let mut blocks: BTreeMap<Vec<usize>, Vec<Word>> = BTreeMap::new();
    for i in 0..dim.pow(k as u32) {
        let w = Word::from_index(dim, k, i);
        blocks.entry(w.content(dim)).or_default().push(w);
    }
    blocks.into_values().collect()
}

impl<'a> Mul<&'a GroupAlgebraElement> for &'a GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    /// Panics on degree mismatch; see [`GroupAlgebraElement::try_mul`].
    fn mul(self, rhs: &'a GroupAlgebraElement) -> GroupAlgebraElement {
        self.try_mul(rhs).expect("group algebra degree mismatch")
    }
}

impl<'a> Add<&'a GroupAlgebraElement> for &'a GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn add(self, rhs: &'a GroupAlgebraElement) -> GroupAlgebraElement {
        self.try_add(rhs).expect("group algebra degree mismatch")
    }
}

impl<'a> Sub<&'a GroupAlgebraElement> for &'a GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn sub(self, rhs: &'a GroupAlgebraElement) -> GroupAlgebraElement {
        self.try_add(&rhs.scale(&-Scalar::one())).expect("group algebra degree mismatch")
    }
}

impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{} {}", c, p)?;
        }
        Ok(())
    }
}

fn stabilizer_sum(k: usize, blocks: &[Vec<usize>], signed: bool) -> GroupAlgebraElement {
    let mut x = GroupAlgebraElement::zero(k);
    for p in Permutation::block_stabilizer(k, blocks) {
        let c = if signed { scalar::int(p.sign()) } else { Scalar::one() };
        x.add_term(p, c);
    }
    x
}

/// `c_τ = (Σ_{t ∈ R_τ} t)(Σ_{s ∈ C_τ} sgn(s) s)`.
pub fn young_symmetrizer(tableau: &YoungTableau) -> GroupAlgebraElement {
    let k = tableau.size();
    let rows = stabilizer_sum(k, tableau.rows(), false);
    let cols = stabilizer_sum(k, &tableau.columns(), true);
    &rows * &cols
}

/// `c̃_τ = (Σ_{s ∈ C_τ} sgn(s) s)(Σ_{t ∈ R_τ} t)`.
pub fn young_symmetrizer_transposed(tableau: &YoungTableau) -> GroupAlgebraElement {
    let k = tableau.size();
    let rows = stabilizer_sum(k, tableau.rows(), false);
    let cols = stabilizer_sum(k, &tableau.columns(), true);
    &cols * &rows
}

/// `z_μ = (f_μ / k!) Σ_σ χ_μ(σ) σ`, the projector onto the
/// `S_μ`-isotypic component.
pub fn central_idempotent(mu: &Partition) -> GroupAlgebraElement {
    let k = mu.weight();
    let scale = scalar::int(num_standard(mu) as i64) / scalar::factorial(k);
    let mut character: BTreeMap<Partition, i64> = BTreeMap::new();
    let mut x = GroupAlgebraElement::zero(k);
    for p in Permutation::all(k) {
        let ty = p.cycle_type();
        let chi = *character.entry(ty.clone()).or_insert_with(|| sn_character(mu, &ty));
        x.add_term(p, &scale * scalar::int(chi));
    }
    x
}

/// `E_λ`: identity on `W_λ(V)` and zero on every other Thrall module.
pub fn higher_lie_idempotent(lambda: &Partition) -> Result<GroupAlgebraElement> {
    let all = higher_lie_idempotents(lambda.weight())?;
    Ok(all.get(lambda).cloned().expect("every partition of k has an idempotent"))
}

/// `E_λ` for every `λ ⊢ k` from a single linear solve.
///
/// The solve lives in the multilinear weight space of `(Q^k)^{⊗k}`, spanned
/// by the `k!` words using each letter once. That space is the regular
/// representation of `S_k`, so a `GL`-equivariant projection is determined
/// by its value on `e_{12…k}`, and `x·e_{12…k} = Σ_σ x_σ e_{σ⁻¹}`.
pub fn higher_lie_idempotents(k: usize) -> Result<BTreeMap<Partition, GroupAlgebraElement>> {
    if k > K_MAX {
        return Err(Error::ResourceLimit { requested: k, max: K_MAX });
    }
    let perms = Permutation::all(k);
    let position: BTreeMap<Word, usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (permutation_word(p), i))
        .collect();

    let mut columns: Vec<Vec<Scalar>> = Vec::new();
    let mut owner: Vec<Partition> = Vec::new();
    for lambda in partitions(k) {
        for poly in multilinear_thrall_basis(&lambda)? {
            let mut v = vec![Scalar::zero(); perms.len()];
            for (w, c) in poly {
                v[position[&w]] = c;
            }
            columns.push(v);
            owner.push(lambda.clone());
        }
    }
    if columns.len() != perms.len() {
        return Err(Error::InvariantViolation(format!(
            "multilinear Thrall bases have {} vectors, expected {}",
            columns.len(),
            perms.len()
        )));
    }

    let m = Matrix::from_columns(&columns);
    let mut target = vec![Scalar::zero(); perms.len()];
    target[position[&permutation_word(&Permutation::identity(k))]] = Scalar::one();
    let coords = m.solve(&target).ok_or_else(|| {
        Error::InvariantViolation("Thrall change of basis is singular".into())
    })?;
    if columns.len() != m.rank() {
        return Err(Error::InvariantViolation("Thrall change of basis is singular".into()));
    }

    let mut out = BTreeMap::new();
    for lambda in partitions(k) {
        let mut projected = vec![Scalar::zero(); perms.len()];
        for ((col, c), who) in columns.iter().zip(&coords).zip(&owner) {
            if who != &lambda || c.is_zero() {
                continue;
            }
            for (acc, x) in projected.iter_mut().zip(col) {
                if !x.is_zero() {
                    *acc += c * x;
                }
            }
        }
        let mut e = GroupAlgebraElement::zero(k);
        for p in &perms {
            let c = projected[position[&permutation_word(&p.inverse())]].clone();
            e.add_term(p.clone(), c);
        }
        out.insert(lambda, e);
    }
    Ok(out)
}

/// `E_λ z_μ`: projector onto the `S_μ`-isotypic part of `W_λ(V)`.
pub fn intersection_projector(lambda: &Partition, mu: &Partition) -> Result<GroupAlgebraElement> {
    if lambda.weight() != mu.weight() {
        return Err(Error::OrderMismatch { expected: lambda.weight(), found: mu.weight() });
    }
    Ok(&higher_lie_idempotent(lambda)? * &central_idempotent(mu))
}

/// Checks a proposed splitting `whole = Σ parts` into idempotents: each part
/// idempotent, parts pairwise orthogonal, and the sum exact.
pub fn verify_refinement(
    parts: &[GroupAlgebraElement],
    whole: &GroupAlgebraElement,
) -> core::result::Result<(), alloc::string::String> {
    let mut sum = GroupAlgebraElement::zero(whole.degree());
    for (i, a) in parts.iter().enumerate() {
        if a.degree() != whole.degree() {
            return Err(format!("part {} has degree {}", i, a.degree()));
        }
        if !a.is_idempotent() {
            return Err(format!("part {} is not idempotent", i));
        }
        for (j, b) in parts.iter().enumerate() {
            if i != j && !(a * b).is_zero() {
                return Err(format!("parts {} and {} are not orthogonal", i, j));
            }
        }
        sum = &sum + a;
    }
    if &sum != whole {
        return Err("parts do not sum to the whole".into());
    }
    Ok(())
}

/// One-line notation read as a word.
fn permutation_word(p: &Permutation) -> Word {
    Word::new(p.one_line().into_iter().map(|i| i as u8).collect())
}

/// Basis of `W_λ(Q^k)` intersected with the multilinear weight space.
///
/// For every set partition of `{1..k}` into blocks with sizes the parts of
/// `λ`, and every choice of a multilinear Lyndon word on each block, the
/// symmetrized product of the bracketings.
fn multilinear_thrall_basis(lambda: &Partition) -> Result<Vec<BTreeMap<Word, Scalar>>> {
    let k = lambda.weight();
    let mut sizes: Vec<usize> = lambda.parts().to_vec();
    sizes.reverse();
    let mut set_partitions = Vec::new();
    let mut used = vec![false; k + 1];
    collect_set_partitions(&mut sizes, &mut used, &mut Vec::new(), &mut set_partitions);

    let mut out = Vec::new();
    for blocks in set_partitions {
        let mut choices: Vec<Vec<BTreeMap<Word, Scalar>>> = Vec::new();
        for block in &blocks {
            let (first, rest) = block.split_first().expect("blocks are nonempty");
            let mut arrangement = rest.to_vec();
            let mut polys = Vec::new();
            loop {
                let mut letters = vec![*first as u8];
                letters.extend(arrangement.iter().map(|&l| l as u8));
                polys.push(lyndon_bracket_terms(&Word::new(letters))?);
                if !crate::combinatorics::next_permutation(&mut arrangement) {
                    break;
                }
            }
            choices.push(polys);
        }
        for pick in cartesian(&choices) {
            out.push(symmetrized_product(&pick));
        }
    }
    Ok(out)
}

/// Set partitions into blocks whose sizes use up `sizes` (a multiset); each
/// block is listed in increasing order and blocks are ordered by minimum.
fn collect_set_partitions(
    sizes: &mut Vec<usize>,
    used: &mut Vec<bool>,
    current: &mut Vec<Vec<usize>>,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    let k = used.len() - 1;
    let Some(start) = (1..=k).find(|&i| !used[i]) else {
        out.push(current.clone());
        return;
    };
    let mut distinct = sizes.clone();
    distinct.sort_unstable();
    distinct.dedup();
    for size in distinct {
        let pos = sizes.iter().position(|&s| s == size).expect("size present");
        sizes.remove(pos);
        used[start] = true;
        let free: Vec<usize> = (start + 1..=k).filter(|&i| !used[i]).collect();
        for others in combinations(&free, size - 1) {
            for &o in &others {
                used[o] = true;
            }
            let mut block = vec![start];
            block.extend_from_slice(&others);
            current.push(block);
            collect_set_partitions(sizes, used, current, out);
            current.pop();
            for &o in &others {
                used[o] = false;
            }
        }
        used[start] = false;
        sizes.insert(pos, size);
    }
}

fn combinations(items: &[usize], r: usize) -> Vec<Vec<usize>> {
    if r == 0 {
        return vec![Vec::new()];
    }
    if items.len() < r {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (i, &first) in items.iter().enumerate() {
        for mut tail in combinations(&items[i + 1..], r - 1) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

fn cartesian<T: Clone>(choices: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for options in choices {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<T>| {
                options.iter().map(move |o| {
                    let mut next = prefix.clone();
                    next.push(o.clone());
                    next
                })
            })
            .collect();
    }
    out
}

/// `Σ_{orderings π} f_{π(1)} ⊗ … ⊗ f_{π(ℓ)}` with concatenation product.
fn symmetrized_product(factors: &[BTreeMap<Word, Scalar>]) -> BTreeMap<Word, Scalar> {
    let mut order: Vec<usize> = (0..factors.len()).collect();
    let mut total: BTreeMap<Word, Scalar> = BTreeMap::new();
    loop {
        let mut prod: BTreeMap<Word, Scalar> = BTreeMap::new();
        prod.insert(Word::empty(), Scalar::one());
        for &i in &order {
            let mut next = BTreeMap::new();
            for (a, x) in &prod {
                for (b, y) in &factors[i] {
                    *next.entry(a.concat(b)).or_insert_with(Scalar::zero) += x * y;
                }
            }
            prod = next;
        }
        for (w, c) in prod {
            *total.entry(w).or_insert_with(Scalar::zero) += c;
        }
        if !crate::combinatorics::next_permutation(&mut order) {
            break;
        }
    }
    total.retain(|_, c| !c.is_zero());
    total
}

/// Cycle-notation coefficient table, handy for fixtures: `[("(12)", "1/2")]`.
pub fn from_cycle_table(k: usize, table: &[(&str, Scalar)]) -> Result<GroupAlgebraElement> {
    let terms = table
        .iter()
        .map(|(cycles, c)| Ok((crate::permutation::parse_cycles(k, cycles)?, c.clone())))
        .collect::<Result<Vec<_>>>()?;
    GroupAlgebraElement::from_terms(k, terms)
}
