//! JSON construction documents and their verification reports.
//!
//! A document names a group, the two covers, optionally the eigenvalues of
//! an extra automorphism, and optionally a block of expected invariants.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::abelian::{AbelianGroup, Element};
use crate::cover::{CoverDatum, CoverDoc, CoverError};
use crate::fiber::{defect, DefectReport, FiberError, FiberModel};
use crate::prodquot::{EigenTable, Freeness, ProductQuotient, SurfaceError, SurfaceRecord};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed document: {0}")]
    Schema(#[from] serde_json::Error),
    #[error("unsupported schema version {found} (expected {SCHEMA_VERSION})")]
    Version { found: u32 },
    #[error("cover {factor}: {source}")]
    Cover { factor: char, source: CoverError },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstructionDocument {
    pub schema_version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub group: AbelianGroup,
    pub cover_c: CoverDoc,
    pub cover_d: CoverDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eigen_table: Option<EigenTable>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
}

/// Asserted values; absent fields are not checked.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g_c: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g_d: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k2: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pg: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b2: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kernel: Option<Vec<Element>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kernel_type: Option<AbelianGroup>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub albanese_fiber_genus: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub singular_fibers: Option<Vec<FiberModel>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub euler_ledger: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extended_triviality: Option<bool>,
}

impl ConstructionDocument {
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let doc: ConstructionDocument = serde_json::from_str(text)?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(DocumentError::Version { found: doc.schema_version });
        }
        Ok(doc)
    }

    pub fn from_surface(name: Option<String>, surface: &ProductQuotient) -> Self {
        ConstructionDocument {
            schema_version: SCHEMA_VERSION,
            name,
            group: surface.group().clone(),
            cover_c: CoverDoc::from(surface.cover_c()),
            cover_d: CoverDoc::from(surface.cover_d()),
            eigen_table: None,
            expected: None,
        }
    }

    /// Both covers checked against the group; branch lists come back sorted.
    pub fn covers(&self) -> Result<(CoverDatum, CoverDatum), DocumentError> {
        let c = self.cover_c.to_datum(&self.group).map_err(|source| DocumentError::Cover { factor: 'C', source })?;
        let d = self.cover_d.to_datum(&self.group).map_err(|source| DocumentError::Cover { factor: 'D', source })?;
        Ok((c, d))
    }

    /// Branch lists sorted, pretty-printed; a fixed point of parse then
    /// serialize.
    pub fn canonical_json(&self) -> Result<String, DocumentError> {
        let (c, d) = self.covers()?;
        let doc = ConstructionDocument { cover_c: CoverDoc::from(&c), cover_d: CoverDoc::from(&d), ..self.clone() };
        Ok(serde_json::to_string_pretty(&doc)? + "\n")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberLine {
    pub branch_index: usize,
    pub stabilizer: Element,
    pub model: FiberModel,
    pub report: DefectReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LedgerCheck {
    pub total: i64,
    pub expected: i64,
    pub ok: bool,
}

/// Everything `verify` prints. `problems` empty means the document is a
/// valid free action; `mismatches` lists failed expectations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub name: Option<String>,
    pub group: AbelianGroup,
    pub problems: Vec<String>,
    pub fixed_point_witness: Option<Element>,
    pub record: Option<SurfaceRecord>,
    pub kernel_elements: Vec<Element>,
    pub singular_fibers: Vec<FiberLine>,
    pub euler_ledger: Option<LedgerCheck>,
    pub extended_triviality: Option<bool>,
    pub mismatches: Vec<String>,
}

impl VerifyReport {
    pub fn is_valid(&self) -> bool {
        self.problems.is_empty()
    }
}

pub fn verify(doc: &ConstructionDocument) -> VerifyReport {
    let mut report = VerifyReport {
        name: doc.name.clone(),
        group: doc.group.clone(),
        problems: Vec::new(),
        fixed_point_witness: None,
        record: None,
        kernel_elements: Vec::new(),
        singular_fibers: Vec::new(),
        euler_ledger: None,
        extended_triviality: None,
        mismatches: Vec::new(),
    };
    if let Err(e) = fill(doc, &mut report) {
        report.problems.push(e.to_string());
    }
    if report.is_valid() {
        if let Some(exp) = &doc.expected {
            report.mismatches = compare(exp, &report);
        }
    }
    report
}

#[derive(Debug, Error)]
enum FillError {
    #[error(transparent)]
    Document(#[from] DocumentError),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error(transparent)]
    Fiber(#[from] FiberError),
}

fn fill(doc: &ConstructionDocument, report: &mut VerifyReport) -> Result<(), FillError> {
    let (c, d) = doc.covers()?;
    for (factor, datum) in [('C', &c), ('D', &d)] {
        if let Err(v) = datum.validate() {
            report.problems.push(format!("cover {factor}: {v}"));
        }
    }
    if !report.problems.is_empty() {
        return Ok(());
    }
    let surface = ProductQuotient::new(c, d)?;
    if let Freeness::FixedPoints { witness } = surface.freeness() {
        report.problems.push(format!("action is not free: {witness} fixes points on both curves"));
        report.fixed_point_witness = Some(witness);
        return Ok(());
    }
    let record = surface.invariants()?;
    report.kernel_elements = record.trivial_kernel.elements().to_vec();
    if record.albanese_fiber_genus.is_some() {
        let genus = surface.albanese_fiber_genus()? as u32;
        for f in surface.singular_fibers()? {
            report.singular_fibers.push(FiberLine {
                report: defect(&f.model, genus)?,
                branch_index: f.branch_index,
                stabilizer: f.stabilizer,
                model: f.model,
            });
        }
        let total = surface.euler_ledger()?;
        let expected = record.e as i64;
        report.euler_ledger = Some(LedgerCheck { total, expected, ok: total == expected });
        if total != expected {
            report.problems.push(format!("Euler ledger {total} differs from e(S) = {expected}"));
        }
    }
    let h2 = surface.h2_dimension()?;
    if h2 != record.b2 {
        report.problems.push(format!("h2 = {h2} differs from b2 = {}", record.b2));
    }
    if let Some(table) = &doc.eigen_table {
        report.extended_triviality = Some(surface.extended_triviality(table)?);
    }
    report.record = Some(record);
    Ok(())
}

fn compare(exp: &Expected, report: &VerifyReport) -> Vec<String> {
    let mut out = Vec::new();
    let Some(r) = &report.record else {
        return out;
    };
    let mut check = |name: &str, want: Option<String>, got: String| {
        if let Some(want) = want {
            if want != got {
                out.push(format!("{name}: expected {want}, found {got}"));
            }
        }
    };
    check("g_c", exp.g_c.map(|v| v.to_string()), r.g_c.to_string());
    check("g_d", exp.g_d.map(|v| v.to_string()), r.g_d.to_string());
    check("q", exp.q.map(|v| v.to_string()), r.q.to_string());
    check("chi", exp.chi.map(|v| v.to_string()), r.chi.to_string());
    check("k2", exp.k2.map(|v| v.to_string()), r.k2.to_string());
    check("pg", exp.pg.map(|v| v.to_string()), r.pg.to_string());
    check("e", exp.e.map(|v| v.to_string()), r.e.to_string());
    check("b2", exp.b2.map(|v| v.to_string()), r.b2.to_string());
    let elements = |v: &[Element]| {
        let mut v = v.to_vec();
        v.sort();
        v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
    };
    check("kernel", exp.kernel.as_deref().map(elements), elements(&report.kernel_elements));
    check("kernel_type", exp.kernel_type.as_ref().map(ToString::to_string), r.trivial_kernel_type.to_string());
    let fg = |v: Option<u64>| v.map_or("none".to_string(), |g| g.to_string());
    check("albanese_fiber_genus", exp.albanese_fiber_genus.map(Some).map(fg), fg(r.albanese_fiber_genus));
    let models = |v: &[FiberModel]| v.iter().map(FiberModel::summary).collect::<Vec<_>>().join("; ");
    let found: Vec<FiberModel> = report.singular_fibers.iter().map(|f| f.model.clone()).collect();
    check("singular_fibers", exp.singular_fibers.as_deref().map(models), models(&found));
    let ledger = report.euler_ledger.as_ref().map_or("none".to_string(), |l| l.total.to_string());
    check("euler_ledger", exp.euler_ledger.map(|v| v.to_string()), ledger);
    let ext = report.extended_triviality.map_or("none".to_string(), |b| b.to_string());
    check("extended_triviality", exp.extended_triviality.map(|b| b.to_string()), ext);
    out
}

/// Human-readable report, one fact per line.
pub fn render_text(report: &VerifyReport) -> String {
    let mut out = String::new();
    if let Some(name) = &report.name {
        writeln!(out, "construction: {name}").unwrap();
    }
    writeln!(out, "group: {}", report.group).unwrap();
    if !report.is_valid() {
        writeln!(out, "validation: FAILED").unwrap();
        for p in &report.problems {
            writeln!(out, "  {p}").unwrap();
        }
        if let Some(w) = &report.fixed_point_witness {
            writeln!(out, "freeness witness: {w}").unwrap();
        }
        return out;
    }
    writeln!(out, "validation: ok (both covers valid, action free)").unwrap();
    let Some(r) = &report.record else {
        return out;
    };
    writeln!(out, "g(C)={} g(D)={} q={} chi={} K^2={} p_g={} e={} b2={}", r.g_c, r.g_d, r.q, r.chi, r.k2, r.pg, r.e, r.b2)
        .unwrap();
    let elems: Vec<String> = report.kernel_elements.iter().map(ToString::to_string).collect();
    writeln!(out, "diagonal kernel order {}: type {} {{{}}}", r.kernel_order(), r.trivial_kernel_type, elems.join(", "))
        .unwrap();
    match r.albanese_fiber_genus {
        Some(g) => writeln!(out, "Albanese fiber genus: {g}").unwrap(),
        None => writeln!(out, "Albanese fiber genus: n/a (base split is not (1,0))").unwrap(),
    }
    for f in &report.singular_fibers {
        writeln!(
            out,
            "singular fiber over branch point {} (stabilizer {}): {}; e={} p_a={} delta={} [{}]",
            f.branch_index,
            f.stabilizer,
            f.model.summary(),
            f.report.euler,
            f.report.arithmetic_genus,
            f.report.delta,
            f.report.classification.tag()
        )
        .unwrap();
    }
    if let Some(l) = &report.euler_ledger {
        writeln!(out, "Euler ledger: sum of defects {} = e(S) {}: {}", l.total, l.expected, l.ok).unwrap();
    }
    if let Some(t) = report.extended_triviality {
        writeln!(out, "extended automorphism acts trivially: {t}").unwrap();
    }
    for m in &report.mismatches {
        writeln!(out, "MISMATCH {m}").unwrap();
    }
    out
}

/// The invariants as a two-column table.
pub fn render_table(report: &VerifyReport) -> String {
    let mut out = String::new();
    let Some(r) = &report.record else {
        return render_text(report);
    };
    let fg = r.albanese_fiber_genus.map_or("-".to_string(), |g| g.to_string());
    let rows = [
        ("g(C)", r.g_c.to_string()),
        ("g(D)", r.g_d.to_string()),
        ("q", r.q.to_string()),
        ("chi", r.chi.to_string()),
        ("K^2", r.k2.to_string()),
        ("p_g", r.pg.to_string()),
        ("e", r.e.to_string()),
        ("b2", r.b2.to_string()),
        ("kernel", r.trivial_kernel_type.to_string()),
        ("kernel order", r.kernel_order().to_string()),
        ("fiber genus", fg),
        ("singular fibers", report.singular_fibers.len().to_string()),
    ];
    for (k, v) in rows {
        writeln!(out, "{k:<16}{v:>8}").unwrap();
    }
    if let Some(t) = report.extended_triviality {
        writeln!(out, "{:<16}{:>8}", "ext. trivial", t).unwrap();
    }
    out
}
