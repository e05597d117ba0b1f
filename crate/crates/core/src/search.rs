//! Bounded census of product quotients `(C × D)/G` over small abelian
//! groups, deduplicated up to `Aut(G)` acting on both covers at once.
//!
//! Handle images are never enumerated: a branch multiset is kept when some
//! choice of handle images completes it to a generating datum.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::io;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::abelian::{AbelianGroup, Automorphism, Element, GroupError, DEFAULT_AUTOMORPHISM_BOUND};
use crate::cover::{CoverDatum, CoverDoc};
use crate::prodquot::{ProductQuotient, SurfaceError, SurfaceRecord, AUT0_BOUND};

pub const CENSUS_CAVEAT: &str =
    "handle images are not enumerated; branch multisets are kept when some handle images complete them to a generating datum";

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("invalid search parameters: {0}")]
    Params(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchParams {
    pub groups: Vec<AbelianGroup>,
    /// Base genera `(g(C/G), g(D/G))`.
    pub base_split: (u32, u32),
    pub max_branch_points: usize,
    pub max_chi: u64,
    pub require_free: bool,
    pub automorphism_bound: u64,
}

impl Default for SearchParams {
    fn default() -> Self {
        SearchParams {
            groups: AbelianGroup::all_up_to(8),
            base_split: (1, 0),
            max_branch_points: 8,
            max_chi: 4,
            require_free: true,
            automorphism_bound: DEFAULT_AUTOMORPHISM_BOUND,
        }
    }
}

impl SearchParams {
    pub fn validate(&self) -> Result<(), SearchError> {
        if self.max_chi == 0 {
            return Err(SearchError::Params("max_chi must be positive".into()));
        }
        if let Some(g) = self.groups.iter().find(|g| g.order() > self.automorphism_bound) {
            return Err(SearchError::Params(format!(
                "group {g} exceeds the automorphism bound {}",
                self.automorphism_bound
            )));
        }
        Ok(())
    }

    /// Base splits `(a, b)` with `a + b = q` and `a ≥ b`; swapping the
    /// factors gives the same surfaces.
    pub fn splits_for_irregularity(q: u32) -> Vec<(u32, u32)> {
        (0..=q / 2).map(|b| (q - b, b)).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Serial,
    Parallel,
}

/// One census surface, with both covers in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusEntry {
    pub group: AbelianGroup,
    pub cover_c: CoverDoc,
    pub cover_d: CoverDoc,
    pub record: SurfaceRecord,
    pub kernel_order: u64,
    pub kernel_type: AbelianGroup,
    /// Kernel larger than the bound `|Aut₀S| ≤ 4` for `q = 1`.
    pub anomaly: bool,
}

impl CensusEntry {
    pub fn surface(&self) -> Result<ProductQuotient, SurfaceError> {
        ProductQuotient::new(self.cover_c.to_datum(&self.group)?, self.cover_d.to_datum(&self.group)?)
    }

    fn sort_key(&self) -> (u64, &[u64], u64, u64, &CoverDoc, &CoverDoc) {
        (
            self.group.order(),
            self.group.invariant_factors(),
            self.record.chi,
            self.kernel_order,
            &self.cover_c,
            &self.cover_d,
        )
    }
}

/// A canonical pair rejected because `witness` fixes points on both curves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonFreePair {
    pub group: AbelianGroup,
    pub cover_c: CoverDoc,
    pub cover_d: CoverDoc,
    pub witness: Element,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCount {
    pub kernel_type: AbelianGroup,
    pub fiber_genus: Option<u64>,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub params: SearchParams,
    pub caveat: String,
    pub entries: Vec<CensusEntry>,
    /// Only filled when `require_free` is off.
    pub non_free: Vec<NonFreePair>,
}

impl Census {
    pub fn anomalies(&self) -> impl Iterator<Item = &CensusEntry> {
        self.entries.iter().filter(|e| e.anomaly)
    }

    /// One JSON object per line, in census order.
    pub fn write_jsonl<W: io::Write>(&self, mut w: W) -> io::Result<()> {
        for e in &self.entries {
            serde_json::to_writer(&mut w, e)?;
            w.write_all(b"\n")?;
        }
        Ok(())
    }

    pub fn jsonl(&self) -> String {
        let mut buf = Vec::new();
        self.write_jsonl(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("JSON is UTF-8")
    }

    /// Counts per `(kernel type, Albanese fiber genus)`, ordered by kernel
    /// order, then type, then fiber genus.
    pub fn summary(&self) -> Vec<ClassCount> {
        let mut counts: BTreeMap<(u64, AbelianGroup, Option<u64>), usize> = BTreeMap::new();
        for e in &self.entries {
            let key = (e.kernel_order, e.kernel_type.clone(), e.record.albanese_fiber_genus);
            *counts.entry(key).or_default() += 1;
        }
        counts
            .into_iter()
            .map(|((_, kernel_type, fiber_genus), count)| ClassCount { kernel_type, fiber_genus, count })
            .collect()
    }

    pub fn summary_table(&self) -> String {
        let mut out = String::new();
        let p = &self.params;
        let groups: Vec<String> = p.groups.iter().map(ToString::to_string).collect();
        writeln!(
            out,
            "# groups {}; base split ({}, {}); max branch points {}; max chi {}; require free {}",
            groups.join(","),
            p.base_split.0,
            p.base_split.1,
            p.max_branch_points,
            p.max_chi,
            p.require_free
        )
        .unwrap();
        writeln!(out, "# caveat: {}", self.caveat).unwrap();
        writeln!(out, "{:<14}{:>13}{:>8}", "kernel_type", "fiber_genus", "count").unwrap();
        for c in self.summary() {
            let fg = c.fiber_genus.map_or("-".to_string(), |g| g.to_string());
            writeln!(out, "{:<14}{:>13}{:>8}", c.kernel_type.to_string(), fg, c.count).unwrap();
        }
        let anomalies = self.anomalies().count();
        writeln!(out, "entries {}; non-free pairs {}; ANOMALY {}", self.entries.len(), self.non_free.len(), anomalies)
            .unwrap();
        out
    }
}

/// All valid data with base genus `h` and at most `r_max` branch points,
/// each multiset once in sorted order; ordered by branch count, then
/// lexicographically.
pub fn enumerate_covers(group: &AbelianGroup, h: u32, r_max: usize) -> Vec<CoverDatum> {
    let mut nonzero: Vec<Element> = group.elements().into_iter().filter(|g| !g.is_identity()).collect();
    nonzero.sort();
    let mut out = Vec::new();
    let mut current = Vec::new();
    extend_multisets(group, h, r_max, &nonzero, 0, &mut current, &group.identity(), &mut out);
    out.sort_by(|a, b| (a.branch_count(), a.branch()).cmp(&(b.branch_count(), b.branch())));
    out
}

#[allow(clippy::too_many_arguments)]
fn extend_multisets(
    group: &AbelianGroup,
    h: u32,
    r_max: usize,
    nonzero: &[Element],
    start: usize,
    current: &mut Vec<Element>,
    sum: &Element,
    out: &mut Vec<CoverDatum>,
) {
    let free_rank = 2 * h as usize;
    if sum.is_identity() {
        let datum = CoverDatum::from_parts_unchecked(group.clone(), h, current.clone());
        if datum.validate().is_ok() {
            out.push(datum);
        }
    }
    let remaining = r_max - current.len();
    if remaining == 0 {
        return;
    }
    // k more elements summing to -sum lower the quotient rank by at most k - 1
    if group.quotient_type_raw(current).rank() > free_rank + remaining - 1 {
        return;
    }
    if remaining == 1 {
        let last = group.neg_raw(sum);
        if let Some(i) = nonzero[start..].iter().position(|x| *x == last) {
            current.push(last);
            extend_multisets(group, h, r_max, nonzero, start + i, current, &group.identity(), out);
            current.pop();
        }
        return;
    }
    for i in start..nonzero.len() {
        current.push(nonzero[i].clone());
        let next = group.add_raw(sum, &nonzero[i]);
        extend_multisets(group, h, r_max, nonzero, i, current, &next, out);
        current.pop();
    }
}

/// The lexicographically least image of `(c, d)` under `Aut(G)`, also
/// trying the swapped pair when the base genera agree.
pub fn canonicalize(c: &CoverDatum, d: &CoverDatum, bound: u64) -> Result<(CoverDatum, CoverDatum), SearchError> {
    if c.group() != d.group() {
        return Err(SearchError::Surface(SurfaceError::GroupMismatch {
            c: c.group().clone(),
            d: d.group().clone(),
        }));
    }
    let auts = c.group().automorphisms_bounded(bound)?;
    Ok(canonical_pair(&auts, c, d))
}

fn canonical_pair(auts: &[Automorphism], c: &CoverDatum, d: &CoverDatum) -> (CoverDatum, CoverDatum) {
    let symmetric = c.base_genus() == d.base_genus();
    let mut best: Option<(CoverDatum, CoverDatum)> = None;
    for a in auts {
        let (tc, td) = (c.transport(a), d.transport(a));
        let mut candidates = vec![(tc.clone(), td.clone())];
        if symmetric {
            candidates.push((td, tc));
        }
        for cand in candidates {
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.expect("Aut(G) contains the identity")
}

pub fn run_census(params: &SearchParams) -> Result<Census, SearchError> {
    run_census_with(params, Mode::Parallel)
}

pub fn run_census_serial(params: &SearchParams) -> Result<Census, SearchError> {
    run_census_with(params, Mode::Serial)
}

struct Candidate {
    datum: CoverDatum,
    genus_minus_one: u64,
    stabilizers: BTreeSet<Element>,
}

fn candidates(group: &AbelianGroup, h: u32, r_max: usize) -> Vec<Candidate> {
    enumerate_covers(group, h, r_max)
        .into_iter()
        .filter_map(|datum| {
            let genus = datum.total_genus().ok()?;
            (genus >= 2).then(|| Candidate {
                stabilizers: datum.stabilizer_union(),
                genus_minus_one: genus - 1,
                datum,
            })
        })
        .collect()
}

enum PairOutcome {
    Free(CoverDatum, CoverDatum),
    NotFree(CoverDatum, CoverDatum, Element),
}

pub fn run_census_with(params: &SearchParams, mode: Mode) -> Result<Census, SearchError> {
    params.validate()?;
    let (hc, hd) = params.base_split;
    let mut entries = Vec::new();
    let mut non_free = Vec::new();
    for group in &params.groups {
        let auts = group.automorphisms_bounded(params.automorphism_bound)?;
        let cs = candidates(group, hc, params.max_branch_points);
        let ds = if hc == hd { None } else { Some(candidates(group, hd, params.max_branch_points)) };
        let ds = ds.as_ref().unwrap_or(&cs);
        let limit = params.max_chi * group.order();

        let pairs_for = |c: &Candidate| -> Vec<PairOutcome> {
            let mut out = Vec::new();
            for d in ds {
                let product = c.genus_minus_one * d.genus_minus_one;
                if product > limit {
                    continue;
                }
                match c.stabilizers.intersection(&d.stabilizers).next() {
                    None => {
                        let (cc, cd) = canonical_pair(&auts, &c.datum, &d.datum);
                        out.push(PairOutcome::Free(cc, cd));
                    }
                    Some(_) if !params.require_free => {
                        let (cc, cd) = canonical_pair(&auts, &c.datum, &d.datum);
                        let witness = cc
                            .stabilizer_union()
                            .intersection(&cd.stabilizer_union())
                            .next()
                            .cloned()
                            .expect("fixed points survive transport");
                        out.push(PairOutcome::NotFree(cc, cd, witness));
                    }
                    Some(_) => {}
                }
            }
            out
        };
        let outcomes: Vec<PairOutcome> = match mode {
            Mode::Serial => cs.iter().flat_map(pairs_for).collect(),
            Mode::Parallel => cs.par_iter().flat_map_iter(pairs_for).collect(),
        };

        let mut free = BTreeSet::new();
        let mut fixed = BTreeMap::new();
        for o in outcomes {
            match o {
                PairOutcome::Free(c, d) => {
                    free.insert((c, d));
                }
                PairOutcome::NotFree(c, d, w) => {
                    fixed.insert((c, d), w);
                }
            }
        }
        let free: Vec<(CoverDatum, CoverDatum)> = free.into_iter().collect();
        let build = |(c, d): &(CoverDatum, CoverDatum)| census_entry(c, d);
        let built: Result<Vec<CensusEntry>, SearchError> = match mode {
            Mode::Serial => free.iter().map(build).collect(),
            Mode::Parallel => free.par_iter().map(build).collect(),
        };
        entries.extend(built?);
        non_free.extend(fixed.into_iter().map(|((c, d), witness)| NonFreePair {
            group: group.clone(),
            cover_c: CoverDoc::from(&c),
            cover_d: CoverDoc::from(&d),
            witness,
        }));
    }
    entries.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    Ok(Census { params: params.clone(), caveat: CENSUS_CAVEAT.to_string(), entries, non_free })
}

fn census_entry(c: &CoverDatum, d: &CoverDatum) -> Result<CensusEntry, SearchError> {
    let surface = ProductQuotient::new(c.clone(), d.clone())?;
    let record = surface.invariants()?;
    let kernel_order = record.kernel_order();
    Ok(CensusEntry {
        group: c.group().clone(),
        cover_c: CoverDoc::from(c),
        cover_d: CoverDoc::from(d),
        kernel_type: record.trivial_kernel_type.clone(),
        anomaly: record.q == 1 && kernel_order > AUT0_BOUND,
        kernel_order,
        record,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{fiber_genus_five, fiber_genus_three};

    fn el(g: &AbelianGroup, v: &[u64]) -> Element {
        g.element(v.to_vec()).unwrap()
    }

    #[test]
    fn z2_over_elliptic_base() {
        let g = AbelianGroup::cyclic(2);
        let covers = enumerate_covers(&g, 1, 2);
        let branches: Vec<&[Element]> = covers.iter().map(|c| c.branch()).collect();
        let e1 = el(&g, &[1]);
        assert_eq!(branches, vec![&[][..], &[e1.clone(), e1][..]]);
    }

    #[test]
    fn z2_cubed_needs_three_generators() {
        let g = AbelianGroup::power(2, 3);
        let covers = enumerate_covers(&g, 0, 4);
        assert!(!covers.is_empty());
        for c in &covers {
            assert!(c.branch_count() >= 4);
            assert!(g.quotient_type(c.branch()).unwrap().is_trivial());
        }
    }

    #[test]
    fn two_points_over_the_line() {
        for g in AbelianGroup::all_up_to(8) {
            let covers = enumerate_covers(&g, 0, 2);
            for c in &covers {
                let b = c.branch();
                if g.is_trivial() {
                    assert!(b.is_empty());
                    continue;
                }
                assert_eq!(b.len(), 2);
                assert_eq!(g.add(&b[0], &b[1]).unwrap(), g.identity());
                assert_eq!(g.subgroup_generated(&b[..1]).unwrap().order(), g.order());
            }
            let generators = g.elements().into_iter().filter(|x| g.element_order(x).unwrap() == g.order()).count();
            let expected = match (g.is_trivial(), g.rank()) {
                (true, _) => 1,
                (false, 1) => generators.div_ceil(2),
                _ => 0,
            };
            assert_eq!(covers.len(), expected, "{g}");
        }
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let g = AbelianGroup::new(&[2, 4]).unwrap();
        for h in 0..=1 {
            let fast: BTreeSet<Vec<Element>> =
                enumerate_covers(&g, h, 5).into_iter().map(|c| c.branch().to_vec()).collect();
            let nonzero: Vec<Element> = g.elements().into_iter().filter(|x| !x.is_identity()).collect();
            let mut slow = BTreeSet::new();
            let mut stack: Vec<Vec<Element>> = vec![vec![]];
            while let Some(cur) = stack.pop() {
                let datum = CoverDatum::new(g.clone(), h, cur.clone()).unwrap();
                if datum.validate().is_ok() {
                    slow.insert(datum.branch().to_vec());
                }
                if cur.len() < 5 {
                    for x in &nonzero {
                        if cur.last().is_none_or(|l| l <= x) {
                            let mut next = cur.clone();
                            next.push(x.clone());
                            stack.push(next);
                        }
                    }
                }
            }
            assert_eq!(fast, slow, "h = {h}");
        }
    }

    #[test]
    fn canonical_form_is_idempotent_and_orbit_invariant() {
        let s = fiber_genus_five(1);
        let (c, d) = canonicalize(s.cover_c(), s.cover_d(), 16).unwrap();
        assert_eq!(canonicalize(&c, &d, 16).unwrap(), (c.clone(), d.clone()));
        let g = s.group();
        for a in g.automorphisms().unwrap() {
            let moved = canonicalize(&s.cover_c().transport(&a), &s.cover_d().transport(&a), 16).unwrap();
            assert_eq!(moved, (c.clone(), d.clone()));
        }
    }

    #[test]
    fn swapping_two_basis_vectors() {
        let s = fiber_genus_five(1);
        let g = s.group();
        let swap = g
            .automorphisms()
            .unwrap()
            .into_iter()
            .find(|a| a.images() == [el(g, &[1, 0, 0]), el(g, &[0, 0, 1]), el(g, &[0, 1, 0])])
            .unwrap();
        assert_eq!(
            canonicalize(&s.cover_c().transport(&swap), &s.cover_d().transport(&swap), 16).unwrap(),
            canonicalize(s.cover_c(), s.cover_d(), 16).unwrap()
        );
    }

    #[test]
    fn small_census_finds_both_z2_cubed_families() {
        let params = SearchParams {
            groups: vec![AbelianGroup::power(2, 3)],
            max_chi: 2,
            ..SearchParams::default()
        };
        let census = run_census_serial(&params).unwrap();
        assert_eq!(census.anomalies().count(), 0);
        let classes: Vec<(String, Option<u64>)> = census
            .summary()
            .into_iter()
            .filter(|c| c.kernel_type.order() == 4)
            .map(|c| (c.kernel_type.to_string(), c.fiber_genus))
            .collect();
        assert!(classes.contains(&("Z2^2".to_string(), Some(3))));
        assert!(classes.contains(&("Z2^2".to_string(), Some(5))));

        for s in [fiber_genus_three(1), fiber_genus_five(1)] {
            // the census never stores handles
            let c = CoverDatum::new(s.group().clone(), 1, s.cover_c().branch().to_vec()).unwrap();
            let (cc, cd) = canonicalize(&c, s.cover_d(), 16).unwrap();
            assert!(census
                .entries
                .iter()
                .any(|e| e.cover_c == CoverDoc::from(&cc) && e.cover_d == CoverDoc::from(&cd)));
        }
    }

    #[test]
    fn no_branch_points_means_no_surfaces() {
        let params = SearchParams { max_branch_points: 0, ..SearchParams::default() };
        assert!(run_census(&params).unwrap().entries.is_empty());
    }

    #[test]
    fn parameter_checks() {
        assert!(SearchParams { max_chi: 0, ..SearchParams::default() }.validate().is_err());
        let big = SearchParams { groups: vec![AbelianGroup::cyclic(17)], ..SearchParams::default() };
        assert!(big.validate().is_err());
        assert_eq!(SearchParams::splits_for_irregularity(1), vec![(1, 0)]);
        assert_eq!(SearchParams::splits_for_irregularity(2), vec![(2, 0), (1, 1)]);
    }

    #[test]
    fn non_free_pairs_reported_when_asked() {
        let params = SearchParams {
            groups: vec![AbelianGroup::cyclic(2)],
            max_branch_points: 6,
            max_chi: 2,
            require_free: false,
            ..SearchParams::default()
        };
        let census = run_census_serial(&params).unwrap();
        assert!(!census.non_free.is_empty());
        for p in &census.non_free {
            assert!(!p.witness.is_identity());
        }
    }
}
