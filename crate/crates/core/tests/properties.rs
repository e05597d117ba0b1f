use std::collections::BTreeSet;

use isoprod::constructions::{cyclic_aut0, fiber_genus_five, fiber_genus_three};
use isoprod::document::ConstructionDocument;
use isoprod::search::{canonicalize, enumerate_covers, run_census_serial, SearchParams};
use isoprod::{AbelianGroup, CoverDatum, Element, ProductQuotient, Rotation};
use proptest::prelude::*;

fn group_strategy() -> impl Strategy<Value = AbelianGroup> {
    let groups: Vec<AbelianGroup> = AbelianGroup::all_up_to(8).into_iter().filter(|g| !g.is_trivial()).collect();
    proptest::sample::select(groups)
}

fn element_of(g: &AbelianGroup, seed: u64) -> Element {
    let all = g.elements();
    all[(seed % all.len() as u64) as usize].clone()
}

/// A valid cover of genus at least 2 over `g`, or `None`.
fn cover_from_seeds(g: &AbelianGroup, h: u32, seeds: &[u64]) -> Option<CoverDatum> {
    let mut branch: Vec<Element> =
        seeds.iter().map(|&s| element_of(g, s)).filter(|x| !x.is_identity()).collect();
    if !branch.is_empty() {
        let sum = g.sum(&branch).unwrap();
        if sum.is_identity() {
            // already balanced
        } else {
            branch.push(g.neg(&sum).unwrap());
        }
    }
    let d = CoverDatum::new(g.clone(), h, branch).ok()?;
    d.validate().ok()?;
    (d.total_genus().ok()? >= 2).then_some(d)
}

fn surfaces() -> Vec<ProductQuotient> {
    vec![fiber_genus_five(1), fiber_genus_five(2), fiber_genus_three(1), fiber_genus_three(2), cyclic_aut0(1), cyclic_aut0(2)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rotation_addition_is_exact(a in -50i64..50, b in 1i64..30, c in -50i64..50, d in 1i64..30) {
        let x = Rotation::new(a, b);
        let y = Rotation::new(c, d);
        prop_assert_eq!(x + y, Rotation::new(a * d + c * b, b * d));
        prop_assert!((x - x).is_zero());
        prop_assert_eq!(x + (-x), Rotation::ZERO);
    }

    #[test]
    fn normalization_preserves_order(factors in proptest::collection::vec(1u64..9, 0..4)) {
        let g = AbelianGroup::new(&factors).unwrap();
        prop_assert_eq!(g.order(), factors.iter().product::<u64>());
        let inv = g.invariant_factors();
        for w in inv.windows(2) {
            prop_assert_eq!(w[1] % w[0], 0);
        }
        prop_assert_eq!(AbelianGroup::new(inv).unwrap(), g);
    }

    #[test]
    fn characters_are_homomorphisms(g in group_strategy(), s in any::<u64>(), t in any::<u64>(), u in any::<u64>()) {
        let chars = g.all_characters();
        let chi = &chars[(u % chars.len() as u64) as usize];
        let (x, y) = (element_of(&g, s), element_of(&g, t));
        let lhs = g.char_eval(chi, &g.add(&x, &y).unwrap()).unwrap();
        let rhs = g.char_eval(chi, &x).unwrap() + g.char_eval(chi, &y).unwrap();
        prop_assert_eq!(lhs, rhs);
        let kernel = g.kernel(chi).unwrap();
        prop_assert_eq!(kernel.order() * g.character_order(chi).unwrap(), g.order());
    }

    #[test]
    fn broughton_dimensions_sum_to_twice_genus(
        g in group_strategy(),
        h in 0u32..3,
        seeds in proptest::collection::vec(any::<u64>(), 0..7),
    ) {
        if let Some(d) = cover_from_seeds(&g, h, &seeds) {
            let dims = d.char_dims().unwrap();
            prop_assert_eq!(dims.iter().map(|(_, k)| k).sum::<u64>(), 2 * d.total_genus().unwrap());
        }
    }

    #[test]
    fn automorphisms_preserve_invariants(which in 0usize..6, pick in any::<u64>()) {
        let s = &surfaces()[which];
        let auts = s.group().automorphisms().unwrap();
        let a = &auts[(pick % auts.len() as u64) as usize];
        let t = s.transport(a);
        let (r, rt) = (s.invariants().unwrap(), t.invariants().unwrap());
        prop_assert_eq!((r.g_c, r.g_d, r.chi, r.k2, r.e, r.b2), (rt.g_c, rt.g_d, rt.chi, rt.k2, rt.e, rt.b2));
        prop_assert_eq!(rt.trivial_kernel, r.trivial_kernel.transport(a));
        prop_assert_eq!(t.h2_dimension().unwrap(), s.h2_dimension().unwrap());
    }

    #[test]
    fn canonical_form_is_an_orbit_invariant(which in 0usize..6, pick in any::<u64>()) {
        let s = &surfaces()[which];
        let auts = s.group().automorphisms().unwrap();
        let a = &auts[(pick % auts.len() as u64) as usize];
        let base = canonicalize(s.cover_c(), s.cover_d(), 16).unwrap();
        let moved = canonicalize(&s.cover_c().transport(a), &s.cover_d().transport(a), 16).unwrap();
        prop_assert_eq!(&moved, &base);
        prop_assert_eq!(canonicalize(&base.0, &base.1, 16).unwrap(), base);
    }

    #[test]
    fn enumerated_covers_are_valid_and_sorted(g in group_strategy(), h in 0u32..2, r in 0usize..5) {
        let covers = enumerate_covers(&g, h, r);
        let mut seen = BTreeSet::new();
        for c in &covers {
            prop_assert!(c.validate().is_ok());
            prop_assert!(c.branch_count() <= r);
            prop_assert!(c.branch().windows(2).all(|w| w[0] <= w[1]));
            prop_assert!(seen.insert(c.branch().to_vec()));
        }
    }
}

#[test]
fn swapping_the_factors() {
    for s in surfaces() {
        let t = s.swapped();
        let (r, rt) = (s.invariants().unwrap(), t.invariants().unwrap());
        assert_eq!((r.g_c, r.g_d), (rt.g_d, rt.g_c));
        assert_eq!((r.chi, r.k2, r.e, r.b2, r.q), (rt.chi, rt.k2, rt.e, rt.b2, rt.q));
        assert_eq!(r.trivial_kernel, rt.trivial_kernel);
        assert_eq!(s.h2_dimension().unwrap(), t.h2_dimension().unwrap());
    }
}

#[test]
fn document_round_trip_is_idempotent() {
    for s in surfaces() {
        let doc = ConstructionDocument::from_surface(Some("round trip".into()), &s);
        let once = doc.canonical_json().unwrap();
        let twice = ConstructionDocument::parse(&once).unwrap().canonical_json().unwrap();
        assert_eq!(once, twice);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn tighter_bounds_shrink_the_census(chi in 1u64..4, branch in 2usize..7, mask in 1u8..16) {
        let pool = ["Z2", "Z3", "Z2^2", "Z4"];
        let wide = SearchParams {
            groups: pool.iter().map(|s| s.parse().unwrap()).collect(),
            max_branch_points: 7,
            max_chi: 4,
            ..SearchParams::default()
        };
        let narrow = SearchParams {
            groups: pool.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, s)| s.parse().unwrap()).collect(),
            max_branch_points: branch,
            max_chi: chi,
            ..SearchParams::default()
        };
        let key = |p: &SearchParams| -> BTreeSet<String> {
            run_census_serial(p).unwrap().entries.iter().map(|e| serde_json::to_string(e).unwrap()).collect()
        };
        let (w, n) = (key(&wide), key(&narrow));
        prop_assert!(n.is_subset(&w));
    }
}
