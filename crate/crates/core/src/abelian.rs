//! Finite abelian groups `Z_{n_1} ⊕ … ⊕ Z_{n_k}` in invariant-factor form,
//! their elements, subgroups, automorphisms and characters.
//!
//! Every group is stored canonically with `n_1 | n_2 | … | n_k` and every
//! `n_i ≥ 2`. Elements are residue vectors in those coordinates, and a
//! character is the vector of dual residues `c` acting by
//! `χ(g) = exp(2πi Σ c_i g_i / n_i)`, kept as an exact [`Rotation`].

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rotation::Rotation;
use crate::snf;

/// Largest group order for which automorphisms are enumerated by default.
pub const DEFAULT_AUTOMORPHISM_BOUND: u64 = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("cyclic factor {0} is not allowed (factors must be positive)")]
    InvalidFactor(u64),
    #[error("{factors:?} is not in invariant-factor form (expected {canonical:?})")]
    NotCanonical { factors: Vec<u64>, canonical: Vec<u64> },
    #[error("element {element:?} does not belong to {group}")]
    ElementMismatch { element: Vec<u64>, group: AbelianGroup },
    #[error("character {character:?} does not belong to the dual of {group}")]
    CharacterMismatch { character: Vec<u64>, group: AbelianGroup },
    #[error("subgroup of {found} used where a subgroup of {expected} was required")]
    ParentMismatch { expected: AbelianGroup, found: AbelianGroup },
    #[error("element set is not closed under the group law")]
    NotClosed,
    #[error("group of order {order} exceeds the automorphism enumeration bound {bound}")]
    BoundExceeded { order: u64, bound: u64 },
    #[error("cannot parse group shorthand {0:?}")]
    Parse(String),
}

/// A finite abelian group in invariant-factor form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct AbelianGroup {
    factors: Vec<u64>,
}

/// A group element as a residue vector.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Element(Vec<u64>);

/// A character given by its dual residues.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Character(Vec<u64>);

impl Element {
    pub fn residues(&self) -> &[u64] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|&r| r == 0)
    }
}

impl Character {
    pub fn dual_residues(&self) -> &[u64] {
        &self.0
    }

    pub fn is_trivial(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "χ")?;
        write_tuple(f, &self.0)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, v: &[u64]) -> fmt::Result {
    write!(f, "(")?;
    for (i, r) in v.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{r}")?;
    }
    write!(f, ")")
}

impl TryFrom<Vec<u64>> for AbelianGroup {
    type Error = GroupError;

    fn try_from(factors: Vec<u64>) -> Result<Self, GroupError> {
        AbelianGroup::from_invariant_factors(factors)
    }
}

impl From<AbelianGroup> for Vec<u64> {
    fn from(g: AbelianGroup) -> Vec<u64> {
        g.factors
    }
}

impl AbelianGroup {
    /// Normalizes an arbitrary direct sum of cyclic groups `⊕ Z_{m_i}` into
    /// invariant-factor form. Factors equal to 1 are dropped.
    pub fn new(cyclic_factors: &[u64]) -> Result<Self, GroupError> {
        if let Some(&bad) = cyclic_factors.iter().find(|&&m| m == 0) {
            return Err(GroupError::InvalidFactor(bad));
        }
        let k = cyclic_factors.len();
        let rows: Vec<Vec<i64>> = (0..k)
            .map(|i| {
                let mut row = vec![0; k];
                row[i] = cyclic_factors[i] as i64;
                row
            })
            .collect();
        let factors = snf::cokernel_invariants(&rows, k).expect("finite by construction");
        Ok(AbelianGroup { factors })
    }

    /// Accepts only lists already in invariant-factor form, so that element
    /// coordinates are unambiguous.
    pub fn from_invariant_factors(factors: Vec<u64>) -> Result<Self, GroupError> {
        let canonical = AbelianGroup::new(&factors)?;
        if canonical.factors != factors {
            return Err(GroupError::NotCanonical { factors, canonical: canonical.factors });
        }
        Ok(canonical)
    }

    pub fn trivial() -> Self {
        AbelianGroup { factors: Vec::new() }
    }

    pub fn cyclic(n: u64) -> Self {
        AbelianGroup::new(&[n]).expect("positive order")
    }

    /// `Z_p^k` style power of a cyclic group.
    pub fn power(n: u64, k: usize) -> Self {
        AbelianGroup::new(&vec![n; k]).expect("positive order")
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn exponent(&self) -> u64 {
        self.factors.last().copied().unwrap_or(1)
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// All abelian groups of order `n`, ordered by invariant-factor list.
    pub fn all_of_order(n: u64) -> Vec<AbelianGroup> {
        fn chains(remaining: u64, last: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
            if remaining == 1 {
                out.push(prefix.clone());
                return;
            }
            // the next factor is a multiple of `last` and its cofactor must
            // still be a multiple of it (so the chain can continue or stop)
            let mut d = last;
            while d <= remaining {
                if remaining.is_multiple_of(d) && (remaining / d == 1 || (remaining / d).is_multiple_of(d)) {
                    prefix.push(d);
                    chains(remaining / d, d, prefix, out);
                    prefix.pop();
                }
                d += last;
            }
        }
        if n == 0 {
            return Vec::new();
        }
        if n == 1 {
            return vec![AbelianGroup::trivial()];
        }
        let mut out = Vec::new();
        let mut d = 2;
        while d <= n {
            if n.is_multiple_of(d) && (n / d == 1 || (n / d).is_multiple_of(d)) {
                let mut prefix = vec![d];
                chains(n / d, d, &mut prefix, &mut out);
            }
            d += 1;
        }
        let mut groups: Vec<AbelianGroup> =
            out.into_iter().map(|factors| AbelianGroup { factors }).collect();
        groups.sort();
        groups
    }

    /// All abelian groups of order `1..=n`, by order then invariant factors.
    pub fn all_up_to(n: u64) -> Vec<AbelianGroup> {
        (1..=n).flat_map(AbelianGroup::all_of_order).collect()
    }

    // ---- elements -------------------------------------------------------

    pub fn identity(&self) -> Element {
        Element(vec![0; self.rank()])
    }

    /// The `i`-th standard generator.
    pub fn basis(&self, i: usize) -> Element {
        let mut v = vec![0; self.rank()];
        v[i] = 1 % self.factors[i];
        Element(v)
    }

    /// Builds an element from residues that must already be reduced.
    pub fn element(&self, residues: Vec<u64>) -> Result<Element, GroupError> {
        let g = Element(residues);
        self.check(&g)?;
        Ok(g)
    }

    /// Reduces arbitrary integers componentwise modulo the invariant factors.
    pub fn reduce(&self, values: &[i64]) -> Result<Element, GroupError> {
        if values.len() != self.rank() {
            return Err(GroupError::ElementMismatch {
                element: values.iter().map(|&v| v as u64).collect(),
                group: self.clone(),
            });
        }
        Ok(Element(
            values
                .iter()
                .zip(&self.factors)
                .map(|(&v, &n)| v.mod_floor(&(n as i64)) as u64)
                .collect(),
        ))
    }

    pub fn contains(&self, g: &Element) -> bool {
        g.0.len() == self.rank() && g.0.iter().zip(&self.factors).all(|(&r, &n)| r < n)
    }

    pub fn check(&self, g: &Element) -> Result<(), GroupError> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(GroupError::ElementMismatch { element: g.0.clone(), group: self.clone() })
        }
    }

    pub fn add(&self, g: &Element, h: &Element) -> Result<Element, GroupError> {
        self.check(g)?;
        self.check(h)?;
        Ok(self.add_raw(g, h))
    }

    pub(crate) fn add_raw(&self, g: &Element, h: &Element) -> Element {
        Element(
            g.0.iter()
                .zip(&h.0)
                .zip(&self.factors)
                .map(|((&a, &b), &n)| (a + b) % n)
                .collect(),
        )
    }

    pub fn neg(&self, g: &Element) -> Result<Element, GroupError> {
        self.check(g)?;
        Ok(self.neg_raw(g))
    }

    pub(crate) fn neg_raw(&self, g: &Element) -> Element {
        Element(g.0.iter().zip(&self.factors).map(|(&a, &n)| (n - a) % n).collect())
    }

    /// `k · g` for any integer `k`.
    pub fn scale(&self, k: i64, g: &Element) -> Result<Element, GroupError> {
        self.check(g)?;
        Ok(self.scale_raw(k, g))
    }

    pub(crate) fn scale_raw(&self, k: i64, g: &Element) -> Element {
        Element(
            g.0.iter()
                .zip(&self.factors)
                .map(|(&a, &n)| {
                    let n = n as i128;
                    ((k as i128 * a as i128).rem_euclid(n)) as u64
                })
                .collect(),
        )
    }

    pub fn sum<'a, I>(&self, elements: I) -> Result<Element, GroupError>
    where
        I: IntoIterator<Item = &'a Element>,
    {
        let mut acc = self.identity();
        for g in elements {
            self.check(g)?;
            acc = self.add_raw(&acc, g);
        }
        Ok(acc)
    }

    /// Least `m ≥ 1` with `m · g = 0`.
    pub fn element_order(&self, g: &Element) -> Result<u64, GroupError> {
        self.check(g)?;
        Ok(self.order_raw(g))
    }

    pub(crate) fn order_raw(&self, g: &Element) -> u64 {
        g.0.iter().zip(&self.factors).fold(1u64, |acc, (&r, &n)| acc.lcm(&(n / n.gcd(&r))))
    }

    /// Position of `g` in [`AbelianGroup::elements`].
    pub(crate) fn index_of(&self, g: &Element) -> usize {
        g.0.iter().zip(&self.factors).fold(0usize, |acc, (&r, &n)| acc * n as usize + r as usize)
    }

    pub(crate) fn element_at(&self, mut idx: usize) -> Element {
        let mut v = vec![0u64; self.rank()];
        for (slot, &n) in v.iter_mut().zip(&self.factors).rev() {
            *slot = (idx % n as usize) as u64;
            idx /= n as usize;
        }
        Element(v)
    }

    /// All elements in lexicographic order of residue vectors.
    pub fn elements(&self) -> Vec<Element> {
        (0..self.order() as usize).map(|i| self.element_at(i)).collect()
    }

    // ---- subgroups ------------------------------------------------------

    /// Smallest subgroup containing `gens`, computed by closure.
    pub fn subgroup_generated(&self, gens: &[Element]) -> Result<Subgroup, GroupError> {
        for g in gens {
            self.check(g)?;
        }
        Ok(self.subgroup_generated_raw(gens))
    }

    pub(crate) fn subgroup_generated_raw(&self, gens: &[Element]) -> Subgroup {
        let n = self.order() as usize;
        let mut member = vec![false; n];
        let mut frontier = vec![self.identity()];
        member[0] = true;
        while let Some(x) = frontier.pop() {
            for s in gens {
                let y = self.add_raw(&x, s);
                let idx = self.index_of(&y);
                if !member[idx] {
                    member[idx] = true;
                    frontier.push(y);
                }
            }
        }
        let elements =
            member.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| self.element_at(i)).collect();
        Subgroup { parent: self.clone(), elements }
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup { parent: self.clone(), elements: self.elements() }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup { parent: self.clone(), elements: vec![self.identity()] }
    }

    /// Invariant factors of `G / ⟨gens⟩`, via Smith normal form of the
    /// relation matrix.
    pub fn quotient_type(&self, gens: &[Element]) -> Result<AbelianGroup, GroupError> {
        for g in gens {
            self.check(g)?;
        }
        Ok(self.quotient_type_raw(gens))
    }

    pub(crate) fn quotient_type_raw(&self, gens: &[Element]) -> AbelianGroup {
        let k = self.rank();
        let mut rows: Vec<Vec<i64>> = (0..k)
            .map(|i| {
                let mut row = vec![0; k];
                row[i] = self.factors[i] as i64;
                row
            })
            .collect();
        rows.extend(gens.iter().map(|g| g.0.iter().map(|&r| r as i64).collect()));
        let factors = snf::cokernel_invariants(&rows, k).expect("quotient of a finite group");
        AbelianGroup { factors }
    }

    // ---- characters -----------------------------------------------------

    pub fn character(&self, dual_residues: Vec<u64>) -> Result<Character, GroupError> {
        let chi = Character(dual_residues);
        self.check_character(&chi)?;
        Ok(chi)
    }

    pub fn trivial_character(&self) -> Character {
        Character(vec![0; self.rank()])
    }

    fn check_character(&self, chi: &Character) -> Result<(), GroupError> {
        let ok = chi.0.len() == self.rank() && chi.0.iter().zip(&self.factors).all(|(&c, &n)| c < n);
        if ok {
            Ok(())
        } else {
            Err(GroupError::CharacterMismatch { character: chi.0.clone(), group: self.clone() })
        }
    }

    /// `χ(g)` as the rotation number `Σ c_i g_i / n_i mod 1`.
    pub fn char_eval(&self, chi: &Character, g: &Element) -> Result<Rotation, GroupError> {
        self.check_character(chi)?;
        self.check(g)?;
        Ok(self.char_eval_raw(chi, g))
    }

    pub(crate) fn char_eval_raw(&self, chi: &Character, g: &Element) -> Rotation {
        // all n_i divide the exponent, so work over the common denominator
        let e = self.exponent() as i64;
        let num: i64 = chi
            .0
            .iter()
            .zip(&g.0)
            .zip(&self.factors)
            .map(|((&c, &r), &n)| ((c * r) % n) as i64 * (e / n as i64))
            .sum();
        Rotation::new(num, e)
    }

    /// `χ(g) = 1`.
    pub(crate) fn char_fixes_raw(&self, chi: &Character, g: &Element) -> bool {
        self.char_eval_raw(chi, g).is_zero()
    }

    /// Complex conjugate character `χ̄`.
    pub fn conjugate(&self, chi: &Character) -> Result<Character, GroupError> {
        self.check_character(chi)?;
        Ok(self.conjugate_raw(chi))
    }

    pub(crate) fn conjugate_raw(&self, chi: &Character) -> Character {
        Character(chi.0.iter().zip(&self.factors).map(|(&c, &n)| (n - c) % n).collect())
    }

    /// Order of `χ` in the dual group.
    pub fn character_order(&self, chi: &Character) -> Result<u64, GroupError> {
        self.check_character(chi)?;
        Ok(chi.0.iter().zip(&self.factors).fold(1u64, |acc, (&c, &n)| acc.lcm(&(n / n.gcd(&c)))))
    }

    /// `ker χ = {g : χ(g) = 1}`.
    pub fn kernel(&self, chi: &Character) -> Result<Subgroup, GroupError> {
        self.check_character(chi)?;
        Ok(self.kernel_raw(chi))
    }

    pub(crate) fn kernel_raw(&self, chi: &Character) -> Subgroup {
        let elements = self.elements().into_iter().filter(|g| self.char_fixes_raw(chi, g)).collect();
        Subgroup { parent: self.clone(), elements }
    }

    /// All `|G|` characters in lexicographic order of dual residues.
    pub fn all_characters(&self) -> Vec<Character> {
        self.elements().into_iter().map(|g| Character(g.0)).collect()
    }

    // ---- automorphisms --------------------------------------------------

    pub fn automorphisms(&self) -> Result<Vec<Automorphism>, GroupError> {
        self.automorphisms_bounded(DEFAULT_AUTOMORPHISM_BOUND)
    }

    /// Every automorphism, by brute force over images of the standard
    /// generators. Refuses groups larger than `bound`.
    pub fn automorphisms_bounded(&self, bound: u64) -> Result<Vec<Automorphism>, GroupError> {
        let order = self.order();
        if order > bound {
            return Err(GroupError::BoundExceeded { order, bound });
        }
        let all = self.elements();
        // e_i may go to any x with n_i · x = 0
        let candidates: Vec<Vec<&Element>> = self
            .factors
            .iter()
            .map(|&n| all.iter().filter(|x| n % self.order_raw(x) == 0).collect())
            .collect();

        let mut out = Vec::new();
        let mut choice = vec![0usize; self.rank()];
        let mut seen = vec![false; order as usize];
        'outer: loop {
            let images: Vec<Element> =
                choice.iter().zip(&candidates).map(|(&c, cands)| cands[c].clone()).collect();
            let aut = Automorphism { group: self.clone(), images };
            seen.iter_mut().for_each(|s| *s = false);
            let mut injective = true;
            for g in &all {
                let idx = self.index_of(&aut.apply(g));
                if seen[idx] {
                    injective = false;
                    break;
                }
                seen[idx] = true;
            }
            if injective {
                out.push(aut);
            }
            // odometer over candidate tuples, last generator fastest
            for pos in (0..choice.len()).rev() {
                choice[pos] += 1;
                if choice[pos] < candidates[pos].len() {
                    continue 'outer;
                }
                choice[pos] = 0;
            }
            break;
        }
        Ok(out)
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "Z1");
        }
        let mut runs: Vec<(u64, usize)> = Vec::new();
        for &n in &self.factors {
            match runs.last_mut() {
                Some((m, c)) if *m == n => *c += 1,
                _ => runs.push((n, 1)),
            }
        }
        for (i, (n, c)) in runs.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            if *c == 1 {
                write!(f, "Z{n}")?;
            } else {
                write!(f, "Z{n}^{c}")?;
            }
        }
        Ok(())
    }
}

/// Parses shorthand such as `Z4`, `Z2^3`, `Z2xZ4`; the result is normalized,
/// so `Z2xZ3` gives `Z6`.
impl FromStr for AbelianGroup {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, GroupError> {
        let bad = || GroupError::Parse(s.to_string());
        let s = s.trim();
        if s.is_empty() {
            return Err(bad());
        }
        let mut cyclic = Vec::new();
        for part in s.split(['x', '×']) {
            let body = part.trim().strip_prefix('Z').ok_or_else(bad)?;
            let (n, k) = match body.split_once('^') {
                Some((n, k)) => (n, k.parse::<usize>().map_err(|_| bad())?),
                None => (body, 1),
            };
            let n: u64 = n.parse().map_err(|_| bad())?;
            if n == 0 {
                return Err(bad());
            }
            cyclic.extend(std::iter::repeat_n(n, k));
        }
        AbelianGroup::new(&cyclic)
    }
}

/// A subgroup, with elements sorted by residue vector.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subgroup {
    parent: AbelianGroup,
    elements: Vec<Element>,
}

impl Subgroup {
    /// Checks closure before accepting `elements` as a subgroup.
    pub fn from_elements(parent: &AbelianGroup, elements: Vec<Element>) -> Result<Self, GroupError> {
        for g in &elements {
            parent.check(g)?;
        }
        let mut elements = elements;
        elements.sort();
        elements.dedup();
        if !is_closed(parent, &elements) {
            return Err(GroupError::NotClosed);
        }
        Ok(Subgroup { parent: parent.clone(), elements })
    }

    pub fn parent(&self) -> &AbelianGroup {
        &self.parent
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn contains(&self, g: &Element) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn intersection(&self, other: &Subgroup) -> Result<Subgroup, GroupError> {
        if self.parent != other.parent {
            return Err(GroupError::ParentMismatch {
                expected: self.parent.clone(),
                found: other.parent.clone(),
            });
        }
        let elements = self.elements.iter().filter(|g| other.contains(g)).cloned().collect();
        Ok(Subgroup { parent: self.parent.clone(), elements })
    }

    /// Abstract type of the subgroup, from its element-order multiset.
    pub fn isomorphism_type(&self) -> AbelianGroup {
        type_from_orders(self.elements.iter().map(|g| self.parent.order_raw(g)))
    }

    /// Image under an automorphism of the parent group.
    pub fn transport(&self, aut: &Automorphism) -> Subgroup {
        let mut elements: Vec<Element> = self.elements.iter().map(|g| aut.apply(g)).collect();
        elements.sort();
        Subgroup { parent: self.parent.clone(), elements }
    }
}

impl Serialize for Subgroup {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.elements.serialize(serializer)
    }
}

fn is_closed(parent: &AbelianGroup, sorted: &[Element]) -> bool {
    if sorted.binary_search(&parent.identity()).is_err() {
        return false;
    }
    sorted.iter().all(|a| sorted.iter().all(|b| sorted.binary_search(&parent.add_raw(a, b)).is_ok()))
}

/// Isomorphism type of a finite set of elements of `parent`, checking that
/// it is a subgroup first.
pub fn isomorphism_type(parent: &AbelianGroup, elements: &[Element]) -> Result<AbelianGroup, GroupError> {
    Ok(Subgroup::from_elements(parent, elements.to_vec())?.isomorphism_type())
}

/// Reconstructs a finite abelian group from the multiset of its element
/// orders. For each prime `p`, the number of elements killed by `p^k` is
/// `p^{Σ_i min(λ_i, k)}` where `λ` is the partition of the `p`-part.
fn type_from_orders(orders: impl Iterator<Item = u64>) -> AbelianGroup {
    let orders: Vec<u64> = orders.collect();
    let n = orders.len() as u64;
    let mut primary: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for p in prime_factors(n) {
        let mut parts = Vec::new();
        let mut prev_log = 0u32;
        let mut k = 1u32;
        loop {
            let pk = p.pow(k);
            let killed = orders.iter().filter(|&&o| pk % o == 0).count() as u64;
            let log = ilog_exact(killed, p);
            if log == prev_log {
                break;
            }
            // log - prev_log parts have size ≥ k
            parts.push(log - prev_log);
            prev_log = log;
            k += 1;
        }
        // parts[k-1] = #{i : λ_i ≥ k}; convert to the partition λ
        let count = parts.first().copied().unwrap_or(0) as usize;
        let mut lambda = vec![0u32; count];
        for (k, &c) in parts.iter().enumerate() {
            for slot in lambda.iter_mut().take(c as usize) {
                *slot = k as u32 + 1;
            }
        }
        primary.insert(p, lambda);
    }
    // combine primary parts, largest with largest
    let width = primary.values().map(Vec::len).max().unwrap_or(0);
    let mut factors = vec![1u64; width];
    for (p, lambda) in &primary {
        for (slot, &e) in factors.iter_mut().zip(lambda) {
            *slot *= p.pow(e);
        }
    }
    factors.reverse();
    AbelianGroup { factors }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn ilog_exact(mut v: u64, p: u64) -> u32 {
    let mut k = 0;
    while v > 1 {
        debug_assert_eq!(v % p, 0, "count of p-torsion must be a power of p");
        v /= p;
        k += 1;
    }
    k
}

/// An automorphism, recorded by the images of the standard generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Automorphism {
    group: AbelianGroup,
    images: Vec<Element>,
}

impl Automorphism {
    pub fn images(&self) -> &[Element] {
        &self.images
    }

    pub fn apply(&self, g: &Element) -> Element {
        let mut acc = self.group.identity();
        for (&r, img) in g.0.iter().zip(&self.images) {
            if r != 0 {
                acc = self.group.add_raw(&acc, &self.group.scale_raw(r as i64, img));
            }
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        (0..self.group.rank()).all(|i| self.images[i] == self.group.basis(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2_3() -> AbelianGroup {
        AbelianGroup::power(2, 3)
    }

    fn el(g: &AbelianGroup, v: &[u64]) -> Element {
        g.element(v.to_vec()).unwrap()
    }

    #[test]
    fn normalization() {
        assert_eq!(AbelianGroup::new(&[2, 3]).unwrap().invariant_factors(), &[6]);
        assert_eq!(AbelianGroup::new(&[4, 2]).unwrap().invariant_factors(), &[2, 4]);
        assert_eq!(AbelianGroup::new(&[1, 1]).unwrap(), AbelianGroup::trivial());
        assert!(AbelianGroup::new(&[0]).is_err());
        assert!(AbelianGroup::from_invariant_factors(vec![4, 2]).is_err());
        assert!(AbelianGroup::from_invariant_factors(vec![2, 4]).is_ok());
    }

    #[test]
    fn shorthand() {
        assert_eq!("Z2^3".parse::<AbelianGroup>().unwrap(), z2_3());
        assert_eq!("Z2xZ4".parse::<AbelianGroup>().unwrap().invariant_factors(), &[2, 4]);
        assert_eq!("Z2xZ3".parse::<AbelianGroup>().unwrap().invariant_factors(), &[6]);
        assert_eq!("Z1".parse::<AbelianGroup>().unwrap(), AbelianGroup::trivial());
        assert!("Q8".parse::<AbelianGroup>().is_err());
        assert!("Z".parse::<AbelianGroup>().is_err());
        assert_eq!(z2_3().to_string(), "Z2^3");
        assert_eq!(AbelianGroup::new(&[2, 4]).unwrap().to_string(), "Z2xZ4");
        assert_eq!(AbelianGroup::power(2, 2).to_string(), "Z2^2");
    }

    #[test]
    fn groups_of_small_order() {
        let names = |n| {
            AbelianGroup::all_of_order(n).iter().map(|g| g.to_string()).collect::<Vec<_>>()
        };
        assert_eq!(names(1), vec!["Z1"]);
        assert_eq!(names(4), vec!["Z2^2", "Z4"]);
        assert_eq!(names(8), vec!["Z2^3", "Z2xZ4", "Z8"]);
        assert_eq!(names(16).len(), 5);
        assert_eq!(names(36).len(), 4);
        assert_eq!(AbelianGroup::all_up_to(8).len(), 1 + 1 + 1 + 2 + 1 + 1 + 1 + 3);
    }

    #[test]
    fn addition() {
        let g = z2_3();
        assert_eq!(g.add(&g.basis(0), &g.basis(0)).unwrap(), g.identity());
        assert_eq!(g.add(&g.basis(0), &g.basis(1)).unwrap(), el(&g, &[1, 1, 0]));
        let z4 = AbelianGroup::cyclic(4);
        assert_eq!(z4.add(&el(&z4, &[1]), &el(&z4, &[3])).unwrap(), z4.identity());
        assert!(g.add(&g.basis(0), &el(&z4, &[1])).is_err());
        assert!(g.element(vec![2, 0, 0]).is_err());
        assert_eq!(g.reduce(&[3, -1, 4]).unwrap(), el(&g, &[1, 1, 0]));
    }

    #[test]
    fn orders() {
        let g = z2_3();
        assert_eq!(g.element_order(&g.identity()).unwrap(), 1);
        assert_eq!(g.element_order(&g.basis(0)).unwrap(), 2);
        let z4 = AbelianGroup::cyclic(4);
        assert_eq!(z4.element_order(&el(&z4, &[1])).unwrap(), 4);
        let h = AbelianGroup::new(&[2, 4]).unwrap();
        assert_eq!(h.element_order(&el(&h, &[1, 2])).unwrap(), 2);
        assert_eq!(h.element_order(&el(&h, &[1, 3])).unwrap(), 4);
    }

    #[test]
    fn generated_subgroups() {
        let g = z2_3();
        assert_eq!(g.subgroup_generated(&[]).unwrap().order(), 1);
        let k = g.subgroup_generated(&[el(&g, &[1, 1, 0]), el(&g, &[1, 0, 1])]).unwrap();
        assert_eq!(k.order(), 4);
        let z4 = AbelianGroup::cyclic(4);
        let h = z4.subgroup_generated(&[el(&z4, &[2])]).unwrap();
        assert_eq!(h.elements(), &[el(&z4, &[0]), el(&z4, &[2])]);
    }

    #[test]
    fn characters_and_kernels() {
        let g = z2_3();
        let all_ones = g.character(vec![1, 1, 1]).unwrap();
        assert_eq!(g.char_eval(&all_ones, &g.basis(0)).unwrap(), Rotation::new(1, 2));
        assert!(g.char_eval(&g.trivial_character(), &el(&g, &[1, 1, 1])).unwrap().is_zero());
        let z4 = AbelianGroup::cyclic(4);
        let prim = z4.character(vec![1]).unwrap();
        assert_eq!(z4.char_eval(&prim, &el(&z4, &[1])).unwrap(), Rotation::new(1, 4));

        let ker = g.kernel(&all_ones).unwrap();
        let expected: Vec<Element> =
            [[0, 0, 0], [0, 1, 1], [1, 0, 1], [1, 1, 0]].iter().map(|v| el(&g, v)).collect();
        assert_eq!(ker.elements(), &expected[..]);
        assert_eq!(ker.isomorphism_type(), AbelianGroup::power(2, 2));

        // χ(e1) = χ(e2) = -1, χ(e3) = 1
        let chi = g.character(vec![1, 1, 0]).unwrap();
        let ker = g.kernel(&chi).unwrap();
        let expected: Vec<Element> =
            [[0, 0, 0], [0, 0, 1], [1, 1, 0], [1, 1, 1]].iter().map(|v| el(&g, v)).collect();
        assert_eq!(ker.elements(), &expected[..]);
        assert_eq!(g.kernel(&g.trivial_character()).unwrap().order(), 8);
    }

    #[test]
    fn character_counts() {
        assert_eq!(AbelianGroup::trivial().all_characters().len(), 1);
        assert_eq!(z2_3().all_characters().len(), 8);
        assert_eq!(AbelianGroup::new(&[2, 4]).unwrap().all_characters().len(), 8);
    }

    #[test]
    fn isomorphism_types() {
        let g = z2_3();
        assert_eq!(g.trivial_subgroup().isomorphism_type(), AbelianGroup::trivial());
        let z4 = AbelianGroup::cyclic(4);
        assert_eq!(z4.whole().isomorphism_type(), z4);
        let h = AbelianGroup::new(&[2, 4]).unwrap();
        assert_eq!(h.whole().isomorphism_type(), h);
        let z12 = AbelianGroup::new(&[2, 6]).unwrap();
        assert_eq!(z12.whole().isomorphism_type(), z12);
        let not_closed = vec![g.identity(), g.basis(0), g.basis(1)];
        assert_eq!(isomorphism_type(&g, &not_closed), Err(GroupError::NotClosed));
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(AbelianGroup::cyclic(2).automorphisms().unwrap().len(), 1);
        assert_eq!(AbelianGroup::power(2, 2).automorphisms().unwrap().len(), 6);
        assert_eq!(AbelianGroup::cyclic(4).automorphisms().unwrap().len(), 2);
        assert_eq!(z2_3().automorphisms().unwrap().len(), 168);
        assert_eq!(AbelianGroup::new(&[2, 4]).unwrap().automorphisms().unwrap().len(), 8);
        assert_eq!(AbelianGroup::trivial().automorphisms().unwrap().len(), 1);
        let big = AbelianGroup::cyclic(17);
        assert!(matches!(big.automorphisms(), Err(GroupError::BoundExceeded { .. })));
        assert_eq!(big.automorphisms_bounded(17).unwrap().len(), 16);
    }

    #[test]
    fn quotient_types() {
        let g = z2_3();
        assert_eq!(g.quotient_type(&[g.basis(0)]).unwrap(), AbelianGroup::power(2, 2));
        let z8 = AbelianGroup::cyclic(8);
        assert_eq!(z8.quotient_type(&[el(&z8, &[2])]).unwrap(), AbelianGroup::cyclic(2));
        assert_eq!(z8.quotient_type(&[el(&z8, &[3])]).unwrap(), AbelianGroup::trivial());
    }
}
