//! Topological defect `δ(F) = e(F) + 2p_a(F) − 2` of fibers of a fibration.
//!
//! The model language covers the cases where `δ` is determined exactly:
//! reduced curves whose singularities are all ordinary, where each point
//! of multiplicity `μ` contributes `(μ − 1)²`, and pure multiples `mF′`,
//! which add `(m − 1)(2g − 2)/m` for a fibration of genus `g`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FiberError {
    #[error("a configuration needs at least one component")]
    NoComponents,
    #[error("singular point #{point} lists {found} branch counts for {expected} components")]
    IncidenceLength { point: usize, expected: usize, found: usize },
    #[error("singular point #{point} has multiplicity {mu}; ordinary singular points need at least 2")]
    PointMultiplicity { point: usize, mu: u32 },
    #[error("configuration is disconnected")]
    Disconnected,
    #[error("multiplicity {m} is not allowed for a multiple fiber (need m >= 2)")]
    MultiplicityTooSmall { m: u32 },
    #[error("multiplicity {m} does not divide 2g-2 = {twice_minus_two}")]
    Divisibility { m: u32, twice_minus_two: i64 },
    #[error("fiber has arithmetic genus {found} but the fibration has genus {expected}")]
    AmbientMismatch { expected: i64, found: i64 },
    #[error("classification tables need fibration genus at least 3, got {0}")]
    GenusTooSmall(u32),
    #[error("model with defect {delta} matches {matches} classification rows")]
    NoUniqueRow { delta: u64, matches: usize },
}

/// One ordinary singular point: the number of local branches on each
/// component. Its multiplicity is the total branch count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularPoint {
    pub branches: Vec<u32>,
}

impl SingularPoint {
    pub fn multiplicity(&self) -> u32 {
        self.branches.iter().sum()
    }
}

/// A reduced curve with ordinary singularities: the geometric genera of its
/// irreducible components and its singular points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedConfig {
    pub components: Vec<u32>,
    pub points: Vec<SingularPoint>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FiberModel {
    Smooth { h: u32 },
    MultipleOfSmooth { m: u32, h: u32 },
    ReducedConfig(ReducedConfig),
    MultipleOfReduced { m: u32, config: ReducedConfig },
    /// Irreducible curve with a single ordinary cusp. Not checked: the
    /// model language has no cuspidal configurations, so this variant is
    /// taken on trust.
    AssertedCusp { normalization_genus: u32 },
}

/// Row of the `δ = 1` and `δ = 2` classification tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Classification {
    Smooth,
    /// irreducible, one node
    Delta1Nodal,
    /// two smooth components meeting transversally once
    Delta1TwoComponents,
    /// `2C` with `C` smooth of genus 2, fibration genus 3
    Delta2DoubleGenus2,
    /// irreducible, two nodes
    Delta2TwoNodes,
    /// irreducible, one cusp
    Delta2Cusp,
    /// two components meeting once, exactly one of them nodal
    Delta2NodalPlusComponent,
    /// two smooth components meeting transversally twice
    Delta2TwoPoints,
    /// chain of three smooth components
    Delta2Chain,
    Unclassified,
}

impl Classification {
    pub fn tag(&self) -> &'static str {
        match self {
            Classification::Smooth => "smooth",
            Classification::Delta1Nodal => "δ1(i)",
            Classification::Delta1TwoComponents => "δ1(ii)",
            Classification::Delta2DoubleGenus2 => "δ2(i)",
            Classification::Delta2TwoNodes => "δ2(ii)",
            Classification::Delta2Cusp => "δ2(iii)",
            Classification::Delta2NodalPlusComponent => "δ2(iv)",
            Classification::Delta2TwoPoints => "δ2(v)",
            Classification::Delta2Chain => "δ2(vi)",
            Classification::Unclassified => "unclassified",
        }
    }

    /// The `δ` value of the table row, if it is one.
    pub fn table_delta(&self) -> Option<u64> {
        match self {
            Classification::Delta1Nodal | Classification::Delta1TwoComponents => Some(1),
            Classification::Smooth | Classification::Unclassified => None,
            _ => Some(2),
        }
    }

    pub fn from_tag(tag: &str) -> Option<Classification> {
        ALL_CLASSES.iter().copied().find(|c| c.tag() == tag)
    }
}

const ALL_CLASSES: [Classification; 10] = [
    Classification::Smooth,
    Classification::Delta1Nodal,
    Classification::Delta1TwoComponents,
    Classification::Delta2DoubleGenus2,
    Classification::Delta2TwoNodes,
    Classification::Delta2Cusp,
    Classification::Delta2NodalPlusComponent,
    Classification::Delta2TwoPoints,
    Classification::Delta2Chain,
    Classification::Unclassified,
];

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl Serialize for Classification {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

impl<'de> Deserialize<'de> for Classification {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let tag = String::deserialize(d)?;
        Classification::from_tag(&tag)
            .ok_or_else(|| serde::de::Error::custom(format!("unknown classification {tag:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefectReport {
    /// `e(F′)` of the reduced curve, which is also `e(F)`.
    pub euler: i64,
    /// `p_a(F)`; for multiple fibers this is the fibration genus.
    pub arithmetic_genus: i64,
    pub delta: u64,
    pub classification: Classification,
    /// Set for models accepted without verification.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub unchecked: bool,
}

impl ReducedConfig {
    pub fn new(components: Vec<u32>, points: Vec<SingularPoint>) -> Result<Self, FiberError> {
        let config = ReducedConfig { components, points };
        config.validate()?;
        Ok(config)
    }

    /// Irreducible curve of geometric genus `h` with `nodes` nodes.
    pub fn nodal_irreducible(h: u32, nodes: usize) -> Self {
        ReducedConfig {
            components: vec![h],
            points: vec![SingularPoint { branches: vec![2] }; nodes],
        }
    }

    pub fn validate(&self) -> Result<(), FiberError> {
        let n = self.components.len();
        if n == 0 {
            return Err(FiberError::NoComponents);
        }
        for (i, p) in self.points.iter().enumerate() {
            if p.branches.len() != n {
                return Err(FiberError::IncidenceLength { point: i, expected: n, found: p.branches.len() });
            }
            if p.multiplicity() < 2 {
                return Err(FiberError::PointMultiplicity { point: i, mu: p.multiplicity() });
            }
        }
        if !self.is_connected() {
            return Err(FiberError::Disconnected);
        }
        Ok(())
    }

    fn is_connected(&self) -> bool {
        let n = self.components.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for p in &self.points {
            let on: Vec<usize> = (0..n).filter(|&i| p.branches[i] > 0).collect();
            for w in on.windows(2) {
                let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                parent[a] = b;
            }
        }
        let root = find(&mut parent, 0);
        (1..n).all(|i| find(&mut parent, i) == root)
    }

    /// `e = Σ(2 − 2g̃_i) − Σ_p (μ_p − 1)`: the normalization with the
    /// `μ_p` preimages of each point glued to one.
    pub fn euler(&self) -> i64 {
        let normalization: i64 = self.components.iter().map(|&g| 2 - 2 * g as i64).sum();
        normalization - self.points.iter().map(|p| p.multiplicity() as i64 - 1).sum::<i64>()
    }

    /// `p_a = Σ g̃_i + Σ_p μ_p(μ_p − 1)/2 − #components + 1`.
    pub fn arithmetic_genus(&self) -> i64 {
        let genera: i64 = self.components.iter().map(|&g| g as i64).sum();
        let deltas: i64 = self
            .points
            .iter()
            .map(|p| {
                let mu = p.multiplicity() as i64;
                mu * (mu - 1) / 2
            })
            .sum();
        genera + deltas - self.components.len() as i64 + 1
    }

    /// `Σ_p (μ_p − 1)²`.
    pub fn local_defect_sum(&self) -> u64 {
        self.points.iter().map(|p| (p.multiplicity() as u64 - 1).pow(2)).sum()
    }

    /// Intersection number of two distinct components, from the branch
    /// counts at shared points.
    pub fn intersection(&self, a: usize, b: usize) -> u64 {
        self.points.iter().map(|p| p.branches[a] as u64 * p.branches[b] as u64).sum()
    }
}

impl FiberModel {
    pub fn validate(&self) -> Result<(), FiberError> {
        match self {
            FiberModel::Smooth { .. } | FiberModel::AssertedCusp { .. } => Ok(()),
            FiberModel::MultipleOfSmooth { m, .. } => check_multiplicity(*m),
            FiberModel::ReducedConfig(c) => c.validate(),
            FiberModel::MultipleOfReduced { m, config } => {
                check_multiplicity(*m)?;
                config.validate()
            }
        }
    }

    /// `Smooth`, or a reduced model with one component and no singular
    /// points.
    pub fn is_smooth(&self) -> bool {
        match self {
            FiberModel::Smooth { .. } => true,
            FiberModel::ReducedConfig(c) => c.components.len() == 1 && c.points.is_empty(),
            _ => false,
        }
    }

    pub fn summary(&self) -> String {
        match self {
            FiberModel::Smooth { h } => format!("smooth genus {h}"),
            FiberModel::MultipleOfSmooth { m, h } => format!("{m}C, C smooth genus {h}"),
            FiberModel::ReducedConfig(c) => format!("reduced {}", config_summary(c)),
            FiberModel::MultipleOfReduced { m, config } => format!("{m}·({})", config_summary(config)),
            FiberModel::AssertedCusp { normalization_genus } => {
                format!("cuspidal, normalization genus {normalization_genus} (asserted)")
            }
        }
    }
}

fn config_summary(c: &ReducedConfig) -> String {
    let mus: Vec<String> = c.points.iter().map(|p| p.multiplicity().to_string()).collect();
    format!("components {:?}, point multiplicities [{}]", c.components, mus.join(","))
}

fn check_multiplicity(m: u32) -> Result<(), FiberError> {
    if m < 2 {
        Err(FiberError::MultiplicityTooSmall { m })
    } else {
        Ok(())
    }
}

/// `(m − 1)(2g − 2)/m`, with `m` required to divide `2g − 2`.
fn multiple_excess(m: u32, genus: u32) -> Result<u64, FiberError> {
    let k = 2 * genus as i64 - 2;
    if k % m as i64 != 0 {
        return Err(FiberError::Divisibility { m, twice_minus_two: k });
    }
    Ok(((m as i64 - 1) * k / m as i64) as u64)
}

/// `δ` of a fiber in a fibration of genus `genus`, together with `e`, `p_a`
/// and the classification row (only assigned when `genus ≥ 3`).
pub fn defect(fiber: &FiberModel, genus: u32) -> Result<DefectReport, FiberError> {
    fiber.validate()?;
    let g = genus as i64;
    let (euler, arithmetic_genus, delta) = match fiber {
        FiberModel::Smooth { h } => {
            ambient(*h as i64, g)?;
            (2 - 2 * g, g, 0)
        }
        FiberModel::ReducedConfig(c) => {
            let pa = c.arithmetic_genus();
            ambient(pa, g)?;
            (c.euler(), pa, c.local_defect_sum())
        }
        FiberModel::MultipleOfSmooth { m, h } => {
            // F′² = 0 forces K·F = m·K·F′, i.e. 2g − 2 = m(2h − 2)
            ambient(*m as i64 * (*h as i64 - 1) + 1, g)?;
            let excess = multiple_excess(*m, genus)?;
            (2 - 2 * *h as i64, g, excess)
        }
        FiberModel::MultipleOfReduced { m, config } => {
            ambient(*m as i64 * (config.arithmetic_genus() - 1) + 1, g)?;
            let excess = multiple_excess(*m, genus)?;
            (config.euler(), g, config.local_defect_sum() + excess)
        }
        FiberModel::AssertedCusp { normalization_genus } => {
            // unibranch, so e equals that of the normalization; p_a = g̃ + 1
            let pa = *normalization_genus as i64 + 1;
            ambient(pa, g)?;
            (2 - 2 * *normalization_genus as i64, pa, 2)
        }
    };
    debug_assert_eq!(euler + 2 * arithmetic_genus - 2, delta as i64);
    let classification = if fiber.is_smooth() {
        Classification::Smooth
    } else if genus >= 3 {
        classify_with_delta(fiber, genus, delta)?
    } else {
        Classification::Unclassified
    };
    Ok(DefectReport {
        euler,
        arithmetic_genus,
        delta,
        classification,
        unchecked: matches!(fiber, FiberModel::AssertedCusp { .. }),
    })
}

fn ambient(found: i64, expected: i64) -> Result<(), FiberError> {
    if found == expected {
        Ok(())
    } else {
        Err(FiberError::AmbientMismatch { expected, found })
    }
}

/// Row of the `δ = 1` / `δ = 2` tables matching the model, for a
/// fibration of genus `genus ≥ 3`.
pub fn classify(fiber: &FiberModel, genus: u32) -> Result<Classification, FiberError> {
    if genus < 3 {
        return Err(FiberError::GenusTooSmall(genus));
    }
    Ok(defect(fiber, genus)?.classification)
}

type RowTest = fn(&FiberModel, u32) -> bool;

const DELTA1_ROWS: [(Classification, RowTest); 2] = [
    (Classification::Delta1Nodal, |f, _| {
        reduced_shape(f).is_some_and(|s| s.components == 1 && s.self_nodes == 1 && s.bridges.is_empty())
    }),
    (Classification::Delta1TwoComponents, |f, _| {
        reduced_shape(f).is_some_and(|s| s.components == 2 && s.self_nodes == 0 && s.bridges.len() == 1)
    }),
];

const DELTA2_ROWS: [(Classification, RowTest); 6] = [
    (Classification::Delta2DoubleGenus2, |f, g| {
        let double_genus_two = match f {
            FiberModel::MultipleOfSmooth { m, h } => *m == 2 && *h == 2,
            FiberModel::MultipleOfReduced { m, config } => {
                *m == 2 && config.points.is_empty() && config.components == [2]
            }
            _ => false,
        };
        double_genus_two && g == 3
    }),
    (Classification::Delta2TwoNodes, |f, g| {
        reduced_shape(f).is_some_and(|s| {
            s.components == 1 && s.self_nodes == 2 && s.genus_sum + 2 == g as i64
        })
    }),
    (Classification::Delta2Cusp, |f, g| {
        matches!(f, FiberModel::AssertedCusp { normalization_genus } if normalization_genus + 1 == g)
    }),
    (Classification::Delta2NodalPlusComponent, |f, _| {
        reduced_shape(f).is_some_and(|s| s.components == 2 && s.self_nodes == 1 && s.bridges.len() == 1)
    }),
    (Classification::Delta2TwoPoints, |f, g| {
        reduced_shape(f).is_some_and(|s| {
            s.components == 2 && s.self_nodes == 0 && s.bridges.len() == 2 && s.genus_sum == g as i64 - 1
        })
    }),
    (Classification::Delta2Chain, |f, g| {
        reduced_shape(f).is_some_and(|s| {
            if s.components != 3 || s.self_nodes != 0 || s.bridges.len() != 2 {
                return false;
            }
            // C1C2 = C2C3 = 1 and C1C3 = 0 for some labelling
            let (a, b) = (s.bridges[0], s.bridges[1]);
            let shares = a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1;
            shares && a != b && s.genus_sum == g as i64
        })
    }),
];

fn classify_with_delta(fiber: &FiberModel, genus: u32, delta: u64) -> Result<Classification, FiberError> {
    let rows: &[(Classification, RowTest)] = match delta {
        1 => &DELTA1_ROWS,
        2 => &DELTA2_ROWS,
        _ => return Ok(Classification::Unclassified),
    };
    // rows are tried in table order and must match exactly once
    let hits: Vec<Classification> =
        rows.iter().filter(|(_, test)| test(fiber, genus)).map(|(c, _)| *c).collect();
    match hits.as_slice() {
        [only] => Ok(*only),
        _ => Err(FiberError::NoUniqueRow { delta, matches: hits.len() }),
    }
}

/// Node structure of a reduced model all of whose singular points are
/// nodes (`μ = 2`).
struct NodalShape {
    components: usize,
    self_nodes: usize,
    bridges: Vec<(usize, usize)>,
    genus_sum: i64,
}

fn reduced_shape(fiber: &FiberModel) -> Option<NodalShape> {
    let FiberModel::ReducedConfig(c) = fiber else {
        return None;
    };
    let mut shape = NodalShape {
        components: c.components.len(),
        self_nodes: 0,
        bridges: Vec::new(),
        genus_sum: c.components.iter().map(|&g| g as i64).sum(),
    };
    for p in &c.points {
        if p.multiplicity() != 2 {
            return None;
        }
        let on: Vec<usize> = (0..c.components.len()).filter(|&i| p.branches[i] > 0).collect();
        match on.as_slice() {
            [_] => shape.self_nodes += 1,
            [a, b] => shape.bridges.push((*a, *b)),
            _ => unreachable!("a node has two branches"),
        }
    }
    Some(shape)
}

/// `e(S) = e(F)e(B) + Σ δ(F_b)` for a fibration of genus `genus` over a
/// base of genus `base_genus`, given its singular fibers.
pub fn euler_ledger(fibers: &[FiberModel], genus: u32, base_genus: u32) -> Result<i64, FiberError> {
    let mut total = (2 - 2 * genus as i64) * (2 - 2 * base_genus as i64);
    for f in fibers {
        total += defect(f, genus)?.delta as i64;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(b: &[u32]) -> SingularPoint {
        SingularPoint { branches: b.to_vec() }
    }

    fn reduced(components: &[u32], points: &[&[u32]]) -> FiberModel {
        FiberModel::ReducedConfig(
            ReducedConfig::new(components.to_vec(), points.iter().map(|b| pt(b)).collect()).unwrap(),
        )
    }

    #[test]
    fn smooth_has_no_defect() {
        let r = defect(&FiberModel::Smooth { h: 5 }, 5).unwrap();
        assert_eq!(r.delta, 0);
        assert_eq!(r.classification, Classification::Smooth);
        assert!(matches!(defect(&FiberModel::Smooth { h: 4 }, 5), Err(FiberError::AmbientMismatch { .. })));
    }

    #[test]
    fn double_fibers() {
        let r = defect(&FiberModel::MultipleOfSmooth { m: 2, h: 2 }, 3).unwrap();
        assert_eq!((r.delta, r.classification), (2, Classification::Delta2DoubleGenus2));
        assert_eq!(r.euler + 2 * r.arithmetic_genus - 2, 2);
        let r = defect(&FiberModel::MultipleOfSmooth { m: 2, h: 3 }, 5).unwrap();
        assert_eq!(r.delta, 4);
        assert_eq!(r.classification, Classification::Unclassified);
        assert!(matches!(
            defect(&FiberModel::MultipleOfSmooth { m: 3, h: 2 }, 3),
            Err(FiberError::AmbientMismatch { .. })
        ));
        let as_reduced = FiberModel::MultipleOfReduced { m: 2, config: ReducedConfig::new(vec![2], vec![]).unwrap() };
        assert_eq!(defect(&as_reduced, 3).unwrap().classification, Classification::Delta2DoubleGenus2);
        let one_component = FiberModel::ReducedConfig(ReducedConfig::new(vec![4], vec![]).unwrap());
        assert_eq!(defect(&one_component, 4).unwrap().classification, Classification::Smooth);
        assert!(matches!(
            defect(&FiberModel::MultipleOfSmooth { m: 2, h: 2 }, 5),
            Err(FiberError::AmbientMismatch { .. })
        ));
        assert!(matches!(
            defect(&FiberModel::MultipleOfSmooth { m: 1, h: 3 }, 3),
            Err(FiberError::MultiplicityTooSmall { m: 1 })
        ));
    }

    #[test]
    fn delta_one_rows() {
        let nodal = FiberModel::ReducedConfig(ReducedConfig::nodal_irreducible(3, 1));
        let r = defect(&nodal, 4).unwrap();
        assert_eq!((r.delta, r.classification), (1, Classification::Delta1Nodal));
        let two = reduced(&[1, 2], &[&[1, 1]]);
        let r = defect(&two, 3).unwrap();
        assert_eq!((r.delta, r.classification), (1, Classification::Delta1TwoComponents));
        assert_eq!(r.arithmetic_genus, 3);
    }

    #[test]
    fn delta_two_rows() {
        let cases = [
            (reduced(&[2], &[&[2], &[2]]), 4, Classification::Delta2TwoNodes),
            (reduced(&[1, 2], &[&[1, 1], &[2, 0]]), 4, Classification::Delta2NodalPlusComponent),
            (reduced(&[1, 1], &[&[1, 1], &[1, 1]]), 3, Classification::Delta2TwoPoints),
            (reduced(&[1, 1, 1], &[&[1, 1, 0], &[0, 1, 1]]), 3, Classification::Delta2Chain),
            (FiberModel::AssertedCusp { normalization_genus: 3 }, 4, Classification::Delta2Cusp),
        ];
        for (model, g, class) in cases {
            let r = defect(&model, g).unwrap();
            assert_eq!(r.delta, 2, "{model:?}");
            assert_eq!(r.classification, class, "{model:?}");
            assert_eq!(classify(&model, g).unwrap(), class);
        }
        let cusp = defect(&FiberModel::AssertedCusp { normalization_genus: 3 }, 4).unwrap();
        assert!(cusp.unchecked);
    }

    #[test]
    fn chain_labelling_is_free() {
        // middle component listed first
        let m = reduced(&[2, 0, 1], &[&[1, 1, 0], &[1, 0, 1]]);
        assert_eq!(classify(&m, 3).unwrap(), Classification::Delta2Chain);
        assert_eq!(
            match &m {
                FiberModel::ReducedConfig(c) => (c.intersection(1, 2), c.intersection(0, 1)),
                _ => unreachable!(),
            },
            (0, 1)
        );
    }

    #[test]
    fn triple_point() {
        let m = reduced(&[0, 0, 1], &[&[1, 1, 1]]);
        let r = defect(&m, 2).unwrap();
        assert_eq!(r.delta, 4);
        assert_eq!(r.euler + 2 * r.arithmetic_genus - 2, 4);
    }

    #[test]
    fn invalid_configs() {
        assert_eq!(ReducedConfig::new(vec![], vec![]), Err(FiberError::NoComponents));
        assert_eq!(ReducedConfig::new(vec![1, 1], vec![]), Err(FiberError::Disconnected));
        assert!(matches!(
            ReducedConfig::new(vec![1], vec![pt(&[1])]),
            Err(FiberError::PointMultiplicity { .. })
        ));
        assert!(matches!(
            ReducedConfig::new(vec![1], vec![pt(&[1, 1])]),
            Err(FiberError::IncidenceLength { .. })
        ));
        assert_eq!(classify(&FiberModel::Smooth { h: 2 }, 2), Err(FiberError::GenusTooSmall(2)));
    }

    #[test]
    fn ledgers() {
        assert_eq!(euler_ledger(&[], 4, 1).unwrap(), 0);
        let two = vec![FiberModel::MultipleOfSmooth { m: 2, h: 2 }; 2];
        assert_eq!(euler_ledger(&two, 3, 1).unwrap(), 4);
        let two = vec![FiberModel::MultipleOfSmooth { m: 2, h: 3 }; 2];
        assert_eq!(euler_ledger(&two, 5, 1).unwrap(), 8);
        // a smooth genus-2 fibration over P^1 with no singular fibers
        assert_eq!(euler_ledger(&[], 2, 0).unwrap(), -4);
    }

    #[test]
    fn json_shape() {
        let m = FiberModel::MultipleOfSmooth { m: 2, h: 2 };
        assert_eq!(serde_json::to_string(&m).unwrap(), r#"{"MultipleOfSmooth":{"m":2,"h":2}}"#);
        let parsed: FiberModel =
            serde_json::from_str(r#"{"ReducedConfig":{"components":[3],"points":[{"branches":[2]}]}}"#).unwrap();
        assert_eq!(parsed, FiberModel::ReducedConfig(ReducedConfig::nodal_irreducible(3, 1)));
        let tag = serde_json::to_string(&Classification::Delta2Chain).unwrap();
        assert_eq!(tag, "\"δ2(vi)\"");
        assert_eq!(serde_json::from_str::<Classification>(&tag).unwrap(), Classification::Delta2Chain);
    }
}
