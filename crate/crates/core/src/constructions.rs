//! Explicit families of irregular surfaces with a large cohomologically
//! trivial automorphism group, all with `q = 1`.
//!
//! * [`fiber_genus_five`]: `G = Z2^3`, Albanese fiber genus 5, `χ = 2r`.
//! * [`fiber_genus_three`]: `G = Z2^3`, Albanese fiber genus 3, `χ = r`.
//! * [`cyclic_aut0`]: `G = Z2^2`, Albanese fiber genus 3, `χ = n`; here the
//!   full trivial group is cyclic of order 4 and is generated by a
//!   non-diagonal automorphism, see [`cyclic_aut0_eigenvalues`].

use crate::abelian::{AbelianGroup, Element};
use crate::cover::CoverDatum;
use crate::prodquot::{EigenEntry, EigenTable, ProductQuotient};
use crate::rotation::Rotation;

fn el(g: &AbelianGroup, v: &[u64]) -> Element {
    g.element(v.to_vec()).expect("residues in range")
}

/// `C → E` branched over `2r` points with stabilizer `⟨e1⟩` (handles
/// `e2, e3`), and `D → P¹` branched over six points with stabilizers
/// `⟨e2⟩, ⟨e2⟩, ⟨e3⟩, ⟨e3⟩, ⟨e1+e2+e3⟩, ⟨e1+e2+e3⟩`.
pub fn fiber_genus_five(r: usize) -> ProductQuotient {
    assert!(r >= 1);
    let g = AbelianGroup::power(2, 3);
    let c = CoverDatum::new(g.clone(), 1, vec![el(&g, &[1, 0, 0]); 2 * r])
        .and_then(|c| c.with_handles(vec![el(&g, &[0, 1, 0]), el(&g, &[0, 0, 1])]))
        .expect("valid datum");
    let d_branch = [[0, 1, 0], [0, 1, 0], [0, 0, 1], [0, 0, 1], [1, 1, 1], [1, 1, 1]];
    let d = CoverDatum::new(g.clone(), 0, d_branch.iter().map(|v| el(&g, v)).collect()).expect("valid datum");
    ProductQuotient::new(c, d).expect("genera at least 2")
}

/// `C → E` branched over `2r` points with stabilizer `⟨e1+e3⟩`, and
/// `D → P¹` branched over five points with stabilizers
/// `⟨e1⟩, ⟨e1⟩, ⟨e2⟩, ⟨e3⟩, ⟨e2+e3⟩`.
pub fn fiber_genus_three(r: usize) -> ProductQuotient {
    assert!(r >= 1);
    let g = AbelianGroup::power(2, 3);
    let c = CoverDatum::new(g.clone(), 1, vec![el(&g, &[1, 0, 1]); 2 * r]).expect("valid datum");
    let d_branch = [[1, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1], [0, 1, 1]];
    let d = CoverDatum::new(g.clone(), 0, d_branch.iter().map(|v| el(&g, v)).collect()).expect("valid datum");
    ProductQuotient::new(c, d).expect("genera at least 2")
}

/// `C`, the normalized fiber product of two double covers of an elliptic
/// curve, with `e1, e2` acting freely and `e1+e2` fixing points over the
/// `2n` branch points; `D: y² = (x⁴+1)(x⁴+a)` with `e1` the hyperelliptic
/// involution and `e2 = γ²` for `γ(x, y) = (ix, y)`.
pub fn cyclic_aut0(n: usize) -> ProductQuotient {
    assert!(n >= 1);
    let g = AbelianGroup::power(2, 2);
    let c = CoverDatum::new(g.clone(), 1, vec![el(&g, &[1, 1]); 2 * n]).expect("valid datum");
    let d_branch = [[1, 0], [1, 0], [1, 0], [1, 0], [0, 1], [0, 1]];
    let d = CoverDatum::new(g.clone(), 0, d_branch.iter().map(|v| el(&g, v)).collect()).expect("valid datum");
    ProductQuotient::new(c, d).expect("genera at least 2")
}

/// Eigenvalues of `β₃ × γ` on the character spaces needed to decide its
/// action on cohomology of [`cyclic_aut0`]. `β₃ = e1+e2` acts on
/// `H¹(C)^χ` by `χ(e1+e2)`; `γ*ω₁ = -ω₁` and `γ` fixes nothing in
/// `H¹(D)^G = 0`.
pub fn cyclic_aut0_eigenvalues() -> EigenTable {
    let g = AbelianGroup::power(2, 2);
    let half = Rotation::new(1, 2);
    EigenTable {
        label: Some("beta3 x gamma".to_string()),
        entries: vec![
            EigenEntry { character: g.trivial_character(), v: Some(Rotation::ZERO), u: None },
            // ker χ = ⟨e2⟩; H¹(D)^χ = ⟨ω₁, ω̄₁⟩
            EigenEntry { character: g.character(vec![1, 0]).unwrap(), v: Some(half), u: Some(half) },
        ],
    }
}
