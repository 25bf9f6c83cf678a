//! Canonical JSON encodings for both object classes and for the
//! validation and sweep reports.
//!
//! Diagrams serialize as `{"k","n","rows":[...],"plus":[[row,col],...]}`
//! with `plus` sorted by `(row, col)`; necklaces as
//! `{"k","n","terms":[[...],...]}`. Output is compact (no whitespace), so
//! equal objects serialize to identical bytes. Parsing accepts any JSON
//! that matches the field layout and re-checks the combinatorial
//! constraints; plus squares outside the shape are accepted here and
//! reported by validation, mirroring the text grammar's split between
//! parsing and validating.

use crate::diagram::{LeDiagram, LeReport};
use crate::enumerate::{EnumerationReport, InvariantFailure};
use crate::necklace::{GrassmannNecklace, NecklaceReport};
use crate::shape::{LabeledShape, Square};
use crate::text::ParseError;
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize)]
struct DiagramWire {
    k: u32,
    n: u32,
    rows: Vec<u32>,
    plus: Vec<(u32, u32)>,
}

impl DiagramWire {
    fn of(d: &LeDiagram) -> Self {
        DiagramWire {
            k: d.shape().k(),
            n: d.shape().n(),
            rows: d.shape().row_labels().to_vec(),
            plus: d.plus_squares().iter().map(|s| (s.row, s.col)).collect(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct NecklaceWire {
    k: u32,
    n: u32,
    terms: Vec<Vec<u32>>,
}

impl NecklaceWire {
    fn of(nk: &GrassmannNecklace) -> Self {
        NecklaceWire {
            k: nk.k(),
            n: nk.n(),
            terms: nk.terms().to_vec(),
        }
    }
}

fn to_compact<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("wire structs always serialize")
}

fn syntax_error(e: &serde_json::Error) -> ParseError {
    ParseError {
        line: e.line().max(1),
        col: e.column().max(1),
        message: e.to_string(),
    }
}

fn semantic_error(e: crate::error::Error) -> ParseError {
    ParseError {
        line: 1,
        col: 1,
        message: e.to_string(),
    }
}

/// Compact canonical JSON for a diagram.
pub fn diagram_to_json(d: &LeDiagram) -> String {
    to_compact(&DiagramWire::of(d))
}

/// Parse a diagram from its JSON form.
pub fn diagram_from_json(s: &str) -> Result<LeDiagram, ParseError> {
    let wire: DiagramWire = serde_json::from_str(s).map_err(|e| syntax_error(&e))?;
    let shape = LabeledShape::from_rows(wire.k, wire.n, &wire.rows).map_err(semantic_error)?;
    let plus = wire.plus.iter().map(|&(r, c)| Square::new(r, c));
    Ok(LeDiagram::new(shape, plus))
}

/// Compact canonical JSON for a necklace.
pub fn necklace_to_json(nk: &GrassmannNecklace) -> String {
    to_compact(&NecklaceWire::of(nk))
}

/// Parse a necklace from its JSON form.
pub fn necklace_from_json(s: &str) -> Result<GrassmannNecklace, ParseError> {
    let wire: NecklaceWire = serde_json::from_str(s).map_err(|e| syntax_error(&e))?;
    GrassmannNecklace::new(wire.k, wire.n, wire.terms).map_err(semantic_error)
}

#[derive(Serialize)]
struct ViolationWire {
    northeast: (u32, u32),
    southwest: (u32, u32),
    missing: (u32, u32),
}

#[derive(Serialize)]
struct LeReportWire {
    ok: bool,
    out_of_shape: Vec<(u32, u32)>,
    violations: Vec<ViolationWire>,
}

/// JSON form of a filling validation report.
pub fn le_report_to_json(report: &LeReport) -> String {
    let pair = |s: &Square| (s.row, s.col);
    let wire = match report {
        LeReport::Valid => LeReportWire {
            ok: true,
            out_of_shape: Vec::new(),
            violations: Vec::new(),
        },
        LeReport::OutOfShape(squares) => LeReportWire {
            ok: false,
            out_of_shape: squares.iter().map(pair).collect(),
            violations: Vec::new(),
        },
        LeReport::Violations(violations) => LeReportWire {
            ok: false,
            out_of_shape: Vec::new(),
            violations: violations
                .iter()
                .map(|v| ViolationWire {
                    northeast: pair(&v.northeast),
                    southwest: pair(&v.southwest),
                    missing: pair(&v.missing),
                })
                .collect(),
        },
    };
    to_compact(&wire)
}

#[derive(Serialize)]
struct AxiomFailureWire {
    index: u32,
    term: Vec<u32>,
    next: Vec<u32>,
}

#[derive(Serialize)]
struct NecklaceReportWire {
    ok: bool,
    strictness: String,
    failures: Vec<AxiomFailureWire>,
}

/// JSON form of a necklace validation report.
pub fn necklace_report_to_json(report: &NecklaceReport) -> String {
    to_compact(&NecklaceReportWire {
        ok: report.is_valid(),
        strictness: report.strictness.to_string(),
        failures: report
            .failures
            .iter()
            .map(|f| AxiomFailureWire {
                index: f.index,
                term: f.term.clone(),
                next: f.next.clone(),
            })
            .collect(),
    })
}

#[derive(Serialize)]
struct LeRoundtripWire {
    original: DiagramWire,
    via: NecklaceWire,
    returned: DiagramWire,
}

#[derive(Serialize)]
struct NecklaceRoundtripWire {
    original: NecklaceWire,
    via: DiagramWire,
    returned: NecklaceWire,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum InvariantFailureWire {
    ForwardOutputInvalid {
        diagram: DiagramWire,
        first_failure_index: u32,
    },
    PlusCoverage {
        diagram: DiagramWire,
        missing: Vec<(u32, u32)>,
        extra: Vec<(u32, u32)>,
    },
    ConversionError {
        context: String,
        message: String,
    },
}

#[derive(Serialize)]
struct EnumerationReportWire {
    ok: bool,
    k: u32,
    n: u32,
    shapes: usize,
    le_diagrams: usize,
    necklaces: usize,
    le_roundtrip_failures: Vec<LeRoundtripWire>,
    necklace_roundtrip_failures: Vec<NecklaceRoundtripWire>,
    invariant_failures: Vec<InvariantFailureWire>,
}

/// JSON form of an exhaustive sweep report.
pub fn enumeration_report_to_json(report: &EnumerationReport) -> String {
    let pairs = |v: &[Square]| v.iter().map(|s| (s.row, s.col)).collect();
    to_compact(&EnumerationReportWire {
        ok: report.is_passing(),
        k: report.k,
        n: report.n,
        shapes: report.shape_count,
        le_diagrams: report.le_count,
        necklaces: report.necklace_count,
        le_roundtrip_failures: report
            .le_roundtrip_failures
            .iter()
            .map(|f| LeRoundtripWire {
                original: DiagramWire::of(&f.original),
                via: NecklaceWire::of(&f.via),
                returned: DiagramWire::of(&f.returned),
            })
            .collect(),
        necklace_roundtrip_failures: report
            .necklace_roundtrip_failures
            .iter()
            .map(|f| NecklaceRoundtripWire {
                original: NecklaceWire::of(&f.original),
                via: DiagramWire::of(&f.via),
                returned: NecklaceWire::of(&f.returned),
            })
            .collect(),
        invariant_failures: report
            .invariant_failures
            .iter()
            .map(|f| match f {
                InvariantFailure::ForwardOutputInvalid {
                    diagram,
                    first_failure_index,
                } => InvariantFailureWire::ForwardOutputInvalid {
                    diagram: DiagramWire::of(diagram),
                    first_failure_index: *first_failure_index,
                },
                InvariantFailure::PlusCoverage {
                    diagram,
                    missing,
                    extra,
                } => InvariantFailureWire::PlusCoverage {
                    diagram: DiagramWire::of(diagram),
                    missing: pairs(missing),
                    extra: pairs(extra),
                },
                InvariantFailure::ConversionError { context, message } => {
                    InvariantFailureWire::ConversionError {
                        context: context.clone(),
                        message: message.clone(),
                    }
                }
            })
            .collect(),
    })
}

/// One shape as a bare header object, used by shape enumeration output.
pub fn shape_to_json(shape: &LabeledShape) -> String {
    #[derive(Serialize)]
    struct ShapeWire<'a> {
        k: u32,
        n: u32,
        rows: &'a [u32],
    }
    to_compact(&ShapeWire {
        k: shape.k(),
        n: shape.n(),
        rows: shape.row_labels(),
    })
}
