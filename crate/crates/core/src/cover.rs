//! Branch data of abelian `G`-covers `C → C/G` of a smooth base curve.
//!
//! A datum records the base genus `h`, the branch elements `g_1, …, g_r`
//! (the images of the loops around the branch points, which generate the
//! stabilizers of the points above them) and optionally the images of the
//! `2h` handle generators. For abelian `G` a cover exists exactly when the
//! branch elements sum to zero and everything together generates `G`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::abelian::{AbelianGroup, Automorphism, Character, Element, GroupError, Subgroup};

/// Why a datum does not define a connected `G`-cover.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoverViolation {
    #[error("branch element #{index} is the identity")]
    IdentityBranchElement { index: usize },
    #[error("branch elements sum to {sum}, not zero")]
    SumNonzero { sum: Element },
    #[error("data do not generate the group (quotient by the generated subgroup is {quotient})")]
    NotGenerating { quotient: AbelianGroup },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoverError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("invalid branch datum: {0}")]
    Invalid(#[from] CoverViolation),
    #[error("expected {expected} handle images for base genus {base_genus}, got {found}")]
    HandleCount { base_genus: u32, expected: usize, found: usize },
    #[error("cover has genus {genus}; eigenspace dimensions need genus at least 2")]
    GenusTooSmall { genus: u64 },
    #[error("Riemann-Hurwitz gives non-integral genus (2g-2 = {twice_minus_two})")]
    NonIntegralGenus { twice_minus_two: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoverDatum {
    group: AbelianGroup,
    base_genus: u32,
    handles: Option<Vec<Element>>,
    branch: Vec<Element>,
}

/// Serialized form of a [`CoverDatum`]; the group is stored alongside.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoverDoc {
    pub base_genus: u32,
    pub branch: Vec<Element>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub handles: Option<Vec<Element>>,
}

impl CoverDoc {
    /// Residue vectors are checked against `group` but not reduced.
    pub fn to_datum(&self, group: &AbelianGroup) -> Result<CoverDatum, CoverError> {
        let datum = CoverDatum::new(group.clone(), self.base_genus, self.branch.clone())?;
        match &self.handles {
            Some(h) => datum.with_handles(h.clone()),
            None => Ok(datum),
        }
    }
}

impl From<&CoverDatum> for CoverDoc {
    fn from(d: &CoverDatum) -> Self {
        CoverDoc { base_genus: d.base_genus, branch: d.branch.clone(), handles: d.handles.clone() }
    }
}

impl CoverDatum {
    /// Branch elements are stored sorted; their order never matters.
    pub fn new(group: AbelianGroup, base_genus: u32, branch: Vec<Element>) -> Result<Self, CoverError> {
        for g in &branch {
            group.check(g)?;
        }
        let mut branch = branch;
        branch.sort();
        Ok(CoverDatum { group, base_genus, handles: None, branch })
    }

    /// Attaches explicit images `a_1, b_1, …, a_h, b_h` of the handle loops.
    pub fn with_handles(mut self, handles: Vec<Element>) -> Result<Self, CoverError> {
        let expected = 2 * self.base_genus as usize;
        if handles.len() != expected {
            return Err(CoverError::HandleCount {
                base_genus: self.base_genus,
                expected,
                found: handles.len(),
            });
        }
        for g in &handles {
            self.group.check(g)?;
        }
        self.handles = Some(handles);
        Ok(self)
    }

    pub(crate) fn from_parts_unchecked(group: AbelianGroup, base_genus: u32, branch: Vec<Element>) -> Self {
        CoverDatum { group, base_genus, handles: None, branch }
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn base_genus(&self) -> u32 {
        self.base_genus
    }

    pub fn handles(&self) -> Option<&[Element]> {
        self.handles.as_deref()
    }

    pub fn branch(&self) -> &[Element] {
        &self.branch
    }

    pub fn branch_count(&self) -> usize {
        self.branch.len()
    }

    /// Riemann existence check for abelian monodromy.
    ///
    /// Without handle images, generation means `G/⟨g_1, …, g_r⟩` needs at
    /// most `2h` generators, since the handles can then be chosen freely.
    pub fn validate(&self) -> Result<(), CoverViolation> {
        let g = &self.group;
        if let Some(index) = self.branch.iter().position(Element::is_identity) {
            return Err(CoverViolation::IdentityBranchElement { index });
        }
        let sum = self.branch.iter().fold(g.identity(), |acc, x| g.add_raw(&acc, x));
        if !sum.is_identity() {
            return Err(CoverViolation::SumNonzero { sum });
        }
        let quotient = match &self.handles {
            Some(handles) => {
                let gens: Vec<Element> = handles.iter().chain(&self.branch).cloned().collect();
                g.quotient_type_raw(&gens)
            }
            None => {
                let q = g.quotient_type_raw(&self.branch);
                if q.rank() <= 2 * self.base_genus as usize {
                    return Ok(());
                }
                q
            }
        };
        if quotient.is_trivial() {
            Ok(())
        } else {
            Err(CoverViolation::NotGenerating { quotient })
        }
    }

    /// `g(C)` from Riemann–Hurwitz:
    /// `2g(C) − 2 = |G|(2h − 2) + Σ_j (|G|/m_j)(m_j − 1)`, `m_j = ord(g_j)`.
    pub fn total_genus(&self) -> Result<u64, CoverError> {
        self.validate()?;
        genus_from_orders(
            self.group.order(),
            self.base_genus,
            self.branch.iter().map(|g| self.group.order_raw(g)),
        )
    }

    /// `dim H¹(C, ℂ)^χ`.
    ///
    /// For `χ = 1` this is `2h`; otherwise
    /// `(2h − 2 + r) − #{j : χ(g_j) = 1}`, which needs `g(C) ≥ 2`.
    pub fn char_dim(&self, chi: &Character) -> Result<u64, CoverError> {
        self.group.character(chi.dual_residues().to_vec())?;
        let genus = self.total_genus()?;
        self.char_dim_unchecked(chi, genus)
    }

    pub(crate) fn char_dim_unchecked(&self, chi: &Character, genus: u64) -> Result<u64, CoverError> {
        let h = self.base_genus as i64;
        if chi.is_trivial() {
            return Ok(2 * h as u64);
        }
        if genus < 2 {
            return Err(CoverError::GenusTooSmall { genus });
        }
        let fixed = self.branch.iter().filter(|g| self.group.char_fixes_raw(chi, g)).count() as i64;
        let dim = 2 * h - 2 + self.branch.len() as i64 - fixed;
        assert!(dim >= 0, "negative eigenspace dimension for a valid datum");
        Ok(dim as u64)
    }

    /// Table of `dim H¹(C, ℂ)^χ` over all characters, in the order of
    /// [`AbelianGroup::all_characters`].
    pub fn char_dims(&self) -> Result<Vec<(Character, u64)>, CoverError> {
        let genus = self.total_genus()?;
        self.group
            .all_characters()
            .into_iter()
            .map(|chi| {
                let d = self.char_dim_unchecked(&chi, genus)?;
                Ok((chi, d))
            })
            .collect()
    }

    /// Whether `H¹(C, ℂ)^χ ≠ 0`, decided by counting branch elements not
    /// fixed by `χ`: at least one when `h = 1`, at least three when `h = 0`.
    /// Other base genera use the dimension formula.
    pub fn has_nonzero_char_space(&self, chi: &Character) -> Result<bool, CoverError> {
        self.group.character(chi.dual_residues().to_vec())?;
        let genus = self.total_genus()?;
        if !chi.is_trivial() && genus < 2 {
            return Err(CoverError::GenusTooSmall { genus });
        }
        let moved = || self.branch.iter().filter(|g| !self.group.char_fixes_raw(chi, g)).count();
        match self.base_genus {
            0 => Ok(!chi.is_trivial() && moved() >= 3),
            1 => Ok(chi.is_trivial() || moved() >= 1),
            _ => Ok(self.char_dim_unchecked(chi, genus)? > 0),
        }
    }

    /// Nonidentity elements with fixed points on `C`: `∪_j ⟨g_j⟩ \ {0}`.
    pub fn stabilizer_union(&self) -> BTreeSet<Element> {
        let mut out = BTreeSet::new();
        for g in &self.branch {
            let mut x = g.clone();
            while !x.is_identity() {
                out.insert(x.clone());
                x = self.group.add_raw(&x, g);
            }
        }
        out
    }

    /// Genus of `C/H`, from the induced `G/H`-cover of the same base whose
    /// branch monodromy is `g_j mod H` (points where it becomes trivial
    /// are no longer branched).
    pub fn quotient_genus(&self, subgroup: &Subgroup) -> Result<u64, CoverError> {
        if subgroup.parent() != &self.group {
            return Err(GroupError::ParentMismatch {
                expected: self.group.clone(),
                found: subgroup.parent().clone(),
            }
            .into());
        }
        self.validate()?;
        let quotient_order = self.group.order() / subgroup.order();
        let orders_mod = self.branch.iter().map(|g| order_modulo(&self.group, g, subgroup));
        genus_from_orders(quotient_order, self.base_genus, orders_mod.filter(|&m| m > 1))
    }

    /// The datum with every branch and handle element moved by `aut`.
    pub fn transport(&self, aut: &Automorphism) -> CoverDatum {
        let mut branch: Vec<Element> = self.branch.iter().map(|g| aut.apply(g)).collect();
        branch.sort();
        CoverDatum {
            group: self.group.clone(),
            base_genus: self.base_genus,
            handles: self.handles.as_ref().map(|hs| hs.iter().map(|g| aut.apply(g)).collect()),
            branch,
        }
    }
}

/// Smallest `k ≥ 1` with `k·g ∈ H`.
fn order_modulo(group: &AbelianGroup, g: &Element, subgroup: &Subgroup) -> u64 {
    let mut x = g.clone();
    let mut k = 1;
    while !subgroup.contains(&x) {
        x = group.add_raw(&x, g);
        k += 1;
    }
    k
}

pub(crate) fn genus_from_orders(
    group_order: u64,
    base_genus: u32,
    orders: impl Iterator<Item = u64>,
) -> Result<u64, CoverError> {
    let n = group_order as i64;
    let mut rhs = n * (2 * base_genus as i64 - 2);
    for m in orders {
        rhs += (n / m as i64) * (m as i64 - 1);
    }
    if rhs % 2 != 0 || rhs < -2 {
        return Err(CoverError::NonIntegralGenus { twice_minus_two: rhs });
    }
    Ok(((rhs + 2) / 2) as u64)
}
