//! Text and JSON rendering of diagonal-property reports and tables.
//!
//! The JSON documents here are the stable machine-readable schema of the
//! tool (`schema: 1`). Field order is fixed by struct order; documents
//! deserialize back into the same types, so output round-trips exactly.

use std::fmt::Write as _;

use diag12_core::diagonal::{DiagonalReport, Witness};
use diag12_core::modring::RingSpec;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDoc {
    pub schema: u32,
    pub ring: RingDoc,
    pub verdict: bool,
    pub method: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub search_bound: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub search_bound_note: Option<String>,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct RingDoc {
    pub n: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vars: Option<usize>,
}

/// Witness payloads: residues appear as JSON numbers, polynomials as their
/// canonical text.
#[derive(Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessDoc {
    Pair {
        a: serde_json::Value,
        b: serde_json::Value,
    },
    Unit {
        unit: serde_json::Value,
        square: serde_json::Value,
    },
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct SurveyDoc {
    pub schema: u32,
    pub reports: Vec<ReportDoc>,
    pub positives: Vec<u64>,
}

fn bound_note(bound: u32) -> String {
    format!("searched total degree <= {bound}; a yes verdict certifies only this range")
}

fn witness_doc(report: &DiagonalReport, witness: &Witness) -> WitnessDoc {
    match witness {
        Witness::ResiduePair { a, b } => WitnessDoc::Pair {
            a: serde_json::json!(a),
            b: serde_json::json!(b),
        },
        Witness::PolynomialPair { a, b } => WitnessDoc::Pair {
            a: serde_json::json!(a.to_string()),
            b: serde_json::json!(b.to_string()),
        },
        Witness::NonInvolutiveResidue { unit } => {
            let ring = RingSpec::new(report.ring().n).expect("report moduli are valid");
            let u = ring.residue(*unit);
            WitnessDoc::Unit {
                unit: serde_json::json!(unit),
                square: serde_json::json!((u * u).value()),
            }
        }
        Witness::NonInvolutiveUnit { unit } => WitnessDoc::Unit {
            unit: serde_json::json!(unit.to_string()),
            square: serde_json::json!((unit * unit).to_string()),
        },
    }
}

pub fn report_doc(report: &DiagonalReport) -> ReportDoc {
    ReportDoc {
        schema: SCHEMA_VERSION,
        ring: RingDoc {
            n: report.ring().n,
            vars: report.ring().vars,
        },
        verdict: report.verdict(),
        method: report.method().as_str().to_string(),
        witness: report.witness().map(|w| witness_doc(report, w)),
        search_bound: report.search_bound(),
        search_bound_note: report.search_bound().map(bound_note),
    }
}

pub fn report_json(report: &DiagonalReport) -> String {
    serde_json::to_string(&report_doc(report)).expect("report documents are serializable")
}

pub fn survey_json(reports: &[DiagonalReport], positives: &[u64]) -> String {
    let doc = SurveyDoc {
        schema: SCHEMA_VERSION,
        reports: reports.iter().map(report_doc).collect(),
        positives: positives.to_vec(),
    };
    serde_json::to_string(&doc).expect("survey documents are serializable")
}

fn witness_text(report: &DiagonalReport, witness: &Witness) -> String {
    match witness {
        Witness::ResiduePair { a, b } => {
            format!("pair ({a}, {b}) with {a}*{b} = 1 (mod {})", report.ring().n)
        }
        Witness::PolynomialPair { a, b } => format!("pair ({a}, {b})"),
        Witness::NonInvolutiveResidue { unit } => {
            let ring = RingSpec::new(report.ring().n).expect("report moduli are valid");
            let u = ring.residue(*unit);
            format!(
                "unit {unit} with {unit}^2 = {} != 1 (mod {})",
                (u * u).value(),
                report.ring().n
            )
        }
        Witness::NonInvolutiveUnit { unit } => {
            format!("unit {unit} with square {}", unit * unit)
        }
    }
}

pub fn report_text(report: &DiagonalReport) -> String {
    let mut out = String::new();
    writeln!(out, "ring: {}", report.ring()).unwrap();
    writeln!(out, "method: {}", report.method()).unwrap();
    writeln!(out, "verdict: {}", if report.verdict() { "yes" } else { "no" }).unwrap();
    if let Some(witness) = report.witness() {
        writeln!(out, "witness: {}", witness_text(report, witness)).unwrap();
    }
    if let Some(bound) = report.search_bound() {
        writeln!(out, "note: {}", bound_note(bound)).unwrap();
    }
    out
}

fn summary_line(report: &DiagonalReport) -> String {
    if report.verdict() {
        "diagonal: yes".to_string()
    } else {
        match report.witness() {
            Some(Witness::ResiduePair { a, b }) => {
                format!("diagonal: no (off-diagonal 1 at ({a},{b}))")
            }
            _ => "diagonal: no".to_string(),
        }
    }
}

/// The `n x n` multiplication table as aligned text, with an optional mark
/// on cells equal to 1 and a trailing verdict summary.
pub fn table_text(ring: &RingSpec, highlight_ones: bool, report: &DiagonalReport) -> String {
    let n = ring.modulus();
    let digits = (n - 1).to_string().len();
    let cell_width = digits + if highlight_ones { 2 } else { 0 };
    let label_width = digits.max(3);
    let mut out = String::new();
    write!(out, "{:>label_width$}", "a\\b").unwrap();
    for b in 0..n {
        write!(out, " {b:>cell_width$}").unwrap();
    }
    out.push('\n');
    for a in 0..n {
        write!(out, "{a:>label_width$}").unwrap();
        for b in 0..n {
            let v = (ring.residue(a) * ring.residue(b)).value();
            if highlight_ones && v == 1 {
                write!(out, " {:>cell_width$}", "[1]").unwrap();
            } else {
                write!(out, " {v:>cell_width$}").unwrap();
            }
        }
        out.push('\n');
    }
    out.push_str(&summary_line(report));
    out.push('\n');
    out
}

/// The multiplication table as CSV: header `a\b,0,1,...`, one row per `a`,
/// no summary line.
pub fn table_csv(ring: &RingSpec) -> String {
    let n = ring.modulus();
    let mut out = String::from("a\\b");
    for b in 0..n {
        write!(out, ",{b}").unwrap();
    }
    out.push('\n');
    for a in 0..n {
        write!(out, "{a}").unwrap();
        for b in 0..n {
            write!(out, ",{}", (ring.residue(a) * ring.residue(b)).value()).unwrap();
        }
        out.push('\n');
    }
    out
}
