//! Surfaces `S = (C × D)/G` isogenous to a product of unmixed type, for
//! abelian `G` acting diagonally.
//!
//! For such a surface
//! `K² = 8χ(O_S) = 8(g(C) − 1)(g(D) − 1)/|G|` and `q = g(C/G) + g(D/G)`,
//! and `H²(S, ℂ)` splits as `W ⊕ ⊕_χ H¹(C)^χ ⊗ H¹(D)^χ̄` with `dim W = 2`.
//! An element `σ` of `(G × G)/Δ_G ≅ G` acts trivially on `H*(S, ℚ)`
//! exactly when `χ(σ) = 1` for every `χ` with both factors nonzero.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::abelian::{AbelianGroup, Automorphism, Character, Element, GroupError, Subgroup};
use crate::cover::{CoverDatum, CoverError};
use crate::fiber::{self, FiberError, FiberModel};
use crate::rotation::Rotation;

/// Largest trivial kernel compatible with the bound `|Aut₀S| ≤ 4` for `q = 1`.
pub const AUT0_BOUND: u64 = 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurfaceError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error(transparent)]
    Fiber(#[from] FiberError),
    #[error("covers are over different groups ({c} and {d})")]
    GroupMismatch { c: AbelianGroup, d: AbelianGroup },
    #[error("curve {factor} has genus {genus}; both curves need genus at least 2")]
    GenusTooSmall { factor: char, genus: u64 },
    #[error("diagonal action is not free: {witness} has fixed points on both curves")]
    NotFree { witness: Element },
    #[error("(g(C)-1)(g(D)-1) = {numerator} is not divisible by |G| = {order}")]
    NonIntegralChi { numerator: u64, order: u64 },
    #[error("operation needs irregularity 1 with base genera (1, 0) or (0, 1); got ({c}, {d})")]
    BaseSplit { c: u32, d: u32 },
    #[error("eigenvalue table has no {side} entry for {character}")]
    MissingEigenvalue { character: Character, side: &'static str },
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProductQuotient {
    cover_c: CoverDatum,
    cover_d: CoverDatum,
    genus_c: u64,
    genus_d: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Freeness {
    Free,
    FixedPoints { witness: Element },
}

impl Freeness {
    pub fn is_free(&self) -> bool {
        matches!(self, Freeness::Free)
    }
}

/// Numerical invariants of `S` and its cohomologically trivial diagonal
/// subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SurfaceRecordRepr", into = "SurfaceRecordRepr")]
pub struct SurfaceRecord {
    pub g_c: u64,
    pub g_d: u64,
    pub q: u64,
    pub chi: u64,
    pub k2: u64,
    pub pg: u64,
    pub e: u64,
    pub b2: u64,
    pub trivial_kernel: Subgroup,
    pub trivial_kernel_type: AbelianGroup,
    pub albanese_fiber_genus: Option<u64>,
}

#[derive(Serialize, Deserialize)]
struct SurfaceRecordRepr {
    group: AbelianGroup,
    g_c: u64,
    g_d: u64,
    q: u64,
    chi: u64,
    k2: u64,
    pg: u64,
    e: u64,
    b2: u64,
    trivial_kernel: Vec<Element>,
    trivial_kernel_type: AbelianGroup,
    #[serde(default)]
    albanese_fiber_genus: Option<u64>,
}

impl From<SurfaceRecord> for SurfaceRecordRepr {
    fn from(r: SurfaceRecord) -> Self {
        SurfaceRecordRepr {
            group: r.trivial_kernel.parent().clone(),
            g_c: r.g_c,
            g_d: r.g_d,
            q: r.q,
            chi: r.chi,
            k2: r.k2,
            pg: r.pg,
            e: r.e,
            b2: r.b2,
            trivial_kernel: r.trivial_kernel.elements().to_vec(),
            trivial_kernel_type: r.trivial_kernel_type,
            albanese_fiber_genus: r.albanese_fiber_genus,
        }
    }
}

impl TryFrom<SurfaceRecordRepr> for SurfaceRecord {
    type Error = GroupError;

    fn try_from(r: SurfaceRecordRepr) -> Result<Self, GroupError> {
        Ok(SurfaceRecord {
            g_c: r.g_c,
            g_d: r.g_d,
            q: r.q,
            chi: r.chi,
            k2: r.k2,
            pg: r.pg,
            e: r.e,
            b2: r.b2,
            trivial_kernel: Subgroup::from_elements(&r.group, r.trivial_kernel)?,
            trivial_kernel_type: r.trivial_kernel_type,
            albanese_fiber_genus: r.albanese_fiber_genus,
        })
    }
}

impl SurfaceRecord {
    pub fn kernel_order(&self) -> u64 {
        self.trivial_kernel.order()
    }
}

/// A singular fiber of the Albanese fibration, sitting over a branch point
/// of the cover with elliptic base.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularFiber {
    pub branch_index: usize,
    pub stabilizer: Element,
    pub model: FiberModel,
}

/// Eigenvalues of one automorphism `a × b` of `C × D` on the character
/// spaces: `v` on `H¹(C)^χ` and `u` on `H¹(D)^χ`, as rotation numbers.
/// The automorphism is assumed to commute with `G`, so that it acts on each
/// character space by a scalar.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenEntry {
    pub character: Character,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<Rotation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u: Option<Rotation>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenTable {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub entries: Vec<EigenEntry>,
}

impl EigenTable {
    pub fn v(&self, chi: &Character) -> Option<Rotation> {
        self.entries.iter().find(|e| &e.character == chi).and_then(|e| e.v)
    }

    pub fn u(&self, chi: &Character) -> Option<Rotation> {
        self.entries.iter().find(|e| &e.character == chi).and_then(|e| e.u)
    }
}

impl ProductQuotient {
    /// Both covers must be valid, over the same group, of genus at least 2.
    /// Freeness is checked separately by [`ProductQuotient::freeness`].
    pub fn new(cover_c: CoverDatum, cover_d: CoverDatum) -> Result<Self, SurfaceError> {
        if cover_c.group() != cover_d.group() {
            return Err(SurfaceError::GroupMismatch {
                c: cover_c.group().clone(),
                d: cover_d.group().clone(),
            });
        }
        let genus_c = cover_c.total_genus()?;
        let genus_d = cover_d.total_genus()?;
        for (factor, genus) in [('C', genus_c), ('D', genus_d)] {
            if genus < 2 {
                return Err(SurfaceError::GenusTooSmall { factor, genus });
            }
        }
        Ok(ProductQuotient { cover_c, cover_d, genus_c, genus_d })
    }

    pub fn group(&self) -> &AbelianGroup {
        self.cover_c.group()
    }

    pub fn cover_c(&self) -> &CoverDatum {
        &self.cover_c
    }

    pub fn cover_d(&self) -> &CoverDatum {
        &self.cover_d
    }

    pub fn genus_c(&self) -> u64 {
        self.genus_c
    }

    pub fn genus_d(&self) -> u64 {
        self.genus_d
    }

    pub fn irregularity(&self) -> u64 {
        self.cover_c.base_genus() as u64 + self.cover_d.base_genus() as u64
    }

    /// Free iff no nonidentity element has fixed points on both curves.
    pub fn freeness(&self) -> Freeness {
        let on_c = self.cover_c.stabilizer_union();
        let on_d = self.cover_d.stabilizer_union();
        match on_c.intersection(&on_d).next() {
            Some(w) => Freeness::FixedPoints { witness: w.clone() },
            None => Freeness::Free,
        }
    }

    pub fn is_free(&self) -> bool {
        self.freeness().is_free()
    }

    fn require_free(&self) -> Result<(), SurfaceError> {
        match self.freeness() {
            Freeness::Free => Ok(()),
            Freeness::FixedPoints { witness } => Err(SurfaceError::NotFree { witness }),
        }
    }

    /// `(χ, dim H¹(C)^χ, dim H¹(D)^χ̄)` for every character.
    pub fn eigen_dimensions(&self) -> Result<Vec<(Character, u64, u64)>, SurfaceError> {
        let g = self.group();
        g.all_characters()
            .into_iter()
            .map(|chi| {
                let v = self.cover_c.char_dim_unchecked(&chi, self.genus_c)?;
                let u = self.cover_d.char_dim_unchecked(&g.conjugate_raw(&chi), self.genus_d)?;
                Ok((chi, v, u))
            })
            .collect()
    }

    /// Characters with `H¹(C)^χ ≠ 0` and `H¹(D)^χ̄ ≠ 0`.
    pub fn doubly_nonzero_characters(&self) -> Result<Vec<Character>, SurfaceError> {
        Ok(self
            .eigen_dimensions()?
            .into_iter()
            .filter(|(_, v, u)| *v > 0 && *u > 0)
            .map(|(chi, _, _)| chi)
            .collect())
    }

    /// `dim H²(S, ℂ) = 2 + Σ_χ dim H¹(C)^χ · dim H¹(D)^χ̄`.
    pub fn h2_dimension(&self) -> Result<u64, SurfaceError> {
        self.require_free()?;
        Ok(2 + self.eigen_dimensions()?.iter().map(|(_, v, u)| v * u).sum::<u64>())
    }

    /// Elements of `(G × G)/Δ_G ≅ G` acting trivially on `H*(S, ℚ)`: the
    /// intersection of `ker χ` over the doubly nonzero characters.
    pub fn trivial_kernel(&self) -> Result<Subgroup, SurfaceError> {
        self.require_free()?;
        let g = self.group();
        let mut kernel = g.whole();
        for chi in self.doubly_nonzero_characters()? {
            kernel = kernel.intersection(&g.kernel_raw(&chi))?;
        }
        Ok(kernel)
    }

    pub fn invariants(&self) -> Result<SurfaceRecord, SurfaceError> {
        self.require_free()?;
        let order = self.group().order();
        let numerator = (self.genus_c - 1) * (self.genus_d - 1);
        if !numerator.is_multiple_of(order) {
            return Err(SurfaceError::NonIntegralChi { numerator, order });
        }
        let chi = numerator / order;
        let q = self.irregularity();
        let e = 4 * chi;
        let trivial_kernel = self.trivial_kernel()?;
        let trivial_kernel_type = trivial_kernel.isomorphism_type();
        let albanese_fiber_genus = match self.albanese_split() {
            Ok(_) => Some(self.albanese_fiber_genus()?),
            Err(_) => None,
        };
        Ok(SurfaceRecord {
            g_c: self.genus_c,
            g_d: self.genus_d,
            q,
            chi,
            k2: 8 * chi,
            pg: chi + q - 1,
            e,
            b2: e + 4 * q - 2,
            trivial_kernel,
            trivial_kernel_type,
            albanese_fiber_genus,
        })
    }

    /// Which factor lies over the elliptic base when the base genera are
    /// `(1, 0)` or `(0, 1)`: returns `(elliptic-base cover, rational-base cover)`.
    fn albanese_split(&self) -> Result<(&CoverDatum, &CoverDatum), SurfaceError> {
        match (self.cover_c.base_genus(), self.cover_d.base_genus()) {
            (1, 0) => Ok((&self.cover_c, &self.cover_d)),
            (0, 1) => Ok((&self.cover_d, &self.cover_c)),
            (c, d) => Err(SurfaceError::BaseSplit { c, d }),
        }
    }

    /// Genus of the general fiber of the Albanese map `S → C/G`, namely the
    /// curve over the rational base.
    pub fn albanese_fiber_genus(&self) -> Result<u64, SurfaceError> {
        let (_, fiber_cover) = self.albanese_split()?;
        Ok(fiber_cover.total_genus()?)
    }

    /// Singular fibers of the Albanese fibration. Over the `j`-th branch
    /// point of the elliptic-base cover the fiber is `m·(D/⟨g_j⟩)` with
    /// `m = ord(g_j)`; freeness makes `⟨g_j⟩` act freely on `D`, so the
    /// reduced fiber is smooth.
    pub fn singular_fibers(&self) -> Result<Vec<SingularFiber>, SurfaceError> {
        self.require_free()?;
        let (base_cover, fiber_cover) = self.albanese_split()?;
        let g = self.group();
        base_cover
            .branch()
            .iter()
            .enumerate()
            .map(|(branch_index, s)| {
                let stabilizer = g.subgroup_generated_raw(std::slice::from_ref(s));
                let h = fiber_cover.quotient_genus(&stabilizer)?;
                let m = g.order_raw(s) as u32;
                Ok(SingularFiber {
                    branch_index,
                    stabilizer: s.clone(),
                    model: FiberModel::MultipleOfSmooth { m, h: h as u32 },
                })
            })
            .collect()
    }

    /// `e(S)` recomputed from the singular fibers of the Albanese fibration.
    pub fn euler_ledger(&self) -> Result<i64, SurfaceError> {
        let fibers: Vec<FiberModel> = self.singular_fibers()?.into_iter().map(|f| f.model).collect();
        let genus = self.albanese_fiber_genus()? as u32;
        Ok(fiber::euler_ledger(&fibers, genus, 1)?)
    }

    /// Whether an automorphism `a × b` normalizing the diagonal action acts
    /// trivially on `H*(S, ℂ)`, given its eigenvalues on the character
    /// spaces. It acts on `W` trivially, on `H¹(S) = H¹(C)^G ⊕ H¹(D)^G`
    /// through the trivial-character entries, and on each
    /// `H¹(C)^χ ⊗ H¹(D)^χ̄` by `v(χ)·u(χ̄)`.
    pub fn extended_triviality(&self, table: &EigenTable) -> Result<bool, SurfaceError> {
        self.require_free()?;
        let g = self.group();
        let missing = |character: &Character, side| SurfaceError::MissingEigenvalue {
            character: character.clone(),
            side,
        };
        let mut trivial = true;
        for (chi, v_dim, u_dim) in self.eigen_dimensions()? {
            if v_dim == 0 || u_dim == 0 {
                continue;
            }
            let conj = g.conjugate_raw(&chi);
            let v = table.v(&chi).ok_or_else(|| missing(&chi, "v"))?;
            let u = table.u(&conj).ok_or_else(|| missing(&conj, "u"))?;
            if !(v + u).is_zero() {
                trivial = false;
            }
        }
        let one = g.trivial_character();
        if self.cover_c.base_genus() > 0 {
            let v = table.v(&one).ok_or_else(|| missing(&one, "v"))?;
            trivial &= v.is_zero();
        }
        if self.cover_d.base_genus() > 0 {
            let u = table.u(&one).ok_or_else(|| missing(&one, "u"))?;
            trivial &= u.is_zero();
        }
        Ok(trivial)
    }

    /// Both covers moved by the same automorphism of `G`.
    pub fn transport(&self, aut: &Automorphism) -> ProductQuotient {
        ProductQuotient {
            cover_c: self.cover_c.transport(aut),
            cover_d: self.cover_d.transport(aut),
            genus_c: self.genus_c,
            genus_d: self.genus_d,
        }
    }

    /// `(D × C)/G`.
    pub fn swapped(&self) -> ProductQuotient {
        ProductQuotient {
            cover_c: self.cover_d.clone(),
            cover_d: self.cover_c.clone(),
            genus_c: self.genus_d,
            genus_d: self.genus_c,
        }
    }

    /// Nonidentity elements with fixed points on `C` and on `D` respectively.
    pub fn fixed_point_sets(&self) -> (BTreeSet<Element>, BTreeSet<Element>) {
        (self.cover_c.stabilizer_union(), self.cover_d.stabilizer_union())
    }
}
