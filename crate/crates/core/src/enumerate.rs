//! Exhaustive enumeration at desk scale, and the round-trip report that
//! certifies the bijection on everything enumerated.
//!
//! The enumerators are deliberately brute force so they can serve as the
//! reference against which the conversions are judged: Le diagrams come
//! from filtering every filling of every shape through the Le check, and
//! necklaces from a depth-first search over the lenient exchange axioms.
//! Both streams are deterministic, so repeated runs emit identical
//! sequences.

use crate::diagram::LeDiagram;
use crate::error::Error;
use crate::forward::{necklace_from_le, path_from};
use crate::necklace::{transition_ok, GrassmannNecklace, Strictness};
use crate::reverse::le_from_necklace;
use crate::shape::{LabeledShape, ShapeType, Square};
use itertools::Itertools;
use std::collections::BTreeSet;

/// Largest ground set the default enumerators accept. A 4x4 box already
/// means 2^16 fillings per shape across 70 shapes; anything bigger is a
/// deliberate choice made through the `_with_limit` variants.
pub const DEFAULT_ENUMERATION_LIMIT: u32 = 8;

fn check_limit(n: u32, limit: u32) -> Result<(), Error> {
    if n > limit {
        return Err(Error::EnumerationLimit { n, limit });
    }
    Ok(())
}

/// All shapes of the type, one per choice of row labels, in lexicographic
/// order of the label sets.
pub fn enumerate_shapes(k: u32, n: u32) -> Result<impl Iterator<Item = LabeledShape>, Error> {
    let ty = ShapeType::new(k, n)?;
    Ok((1..=n).combinations(k as usize).map(move |rows| {
        LabeledShape::with_type(ty, &rows).expect("combination is a valid row set")
    }))
}

/// All Le-valid fillings of all shapes of the type, guarded at
/// [`DEFAULT_ENUMERATION_LIMIT`].
pub fn enumerate_le(k: u32, n: u32) -> Result<impl Iterator<Item = LeDiagram>, Error> {
    enumerate_le_with_limit(k, n, DEFAULT_ENUMERATION_LIMIT)
}

/// Same with an explicit guard, for callers that accept the cost.
pub fn enumerate_le_with_limit(
    k: u32,
    n: u32,
    limit: u32,
) -> Result<impl Iterator<Item = LeDiagram>, Error> {
    check_limit(n, limit)?;
    Ok(enumerate_shapes(k, n)?.flat_map(le_fillings))
}

/// Le-valid fillings of one shape, in ascending bitmask order over the
/// drawing-order square list.
fn le_fillings(shape: LabeledShape) -> impl Iterator<Item = LeDiagram> {
    let squares: Vec<Square> = shape.squares().collect();
    assert!(squares.len() < 64, "shape too large to enumerate fillings");
    // triples (a, b, c): pluses at a and b force a plus at c
    let mut triples: Vec<(usize, usize, usize)> = Vec::new();
    for (a, sa) in squares.iter().enumerate() {
        for (b, sb) in squares.iter().enumerate() {
            if sa.row < sb.row && sa.col < sb.col {
                let missing = Square::new(sb.row, sa.col);
                if shape.contains(missing) {
                    let c = squares
                        .iter()
                        .position(|s| *s == missing)
                        .expect("forced square is in the shape");
                    triples.push((a, b, c));
                }
            }
        }
    }
    (0..1u64 << squares.len()).filter_map(move |mask| {
        let ok = triples
            .iter()
            .all(|&(a, b, c)| mask >> a & 1 == 0 || mask >> b & 1 == 0 || mask >> c & 1 == 1);
        if !ok {
            return None;
        }
        let plus = squares
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, s)| *s);
        Some(LeDiagram::new(shape.clone(), plus))
    })
}

/// All necklaces of the type that pass lenient validation, guarded at
/// [`DEFAULT_ENUMERATION_LIMIT`].
pub fn enumerate_necklaces(k: u32, n: u32) -> Result<Necklaces, Error> {
    enumerate_necklaces_with_limit(k, n, DEFAULT_ENUMERATION_LIMIT)
}

/// Same with an explicit guard.
pub fn enumerate_necklaces_with_limit(k: u32, n: u32, limit: u32) -> Result<Necklaces, Error> {
    check_limit(n, limit)?;
    ShapeType::new(k, n)?;
    let mut stack: Vec<Vec<Vec<u32>>> = (1..=n)
        .combinations(k as usize)
        .map(|first| vec![first])
        .collect();
    stack.reverse();
    Ok(Necklaces { k, n, stack })
}

/// Depth-first stream over term sequences obeying the lenient axioms,
/// first terms in lexicographic order, each extension tried in increasing
/// order of the entering label. The wrap transition back to the first
/// term is checked before a sequence is emitted.
pub struct Necklaces {
    k: u32,
    n: u32,
    stack: Vec<Vec<Vec<u32>>>,
}

impl Iterator for Necklaces {
    type Item = GrassmannNecklace;

    fn next(&mut self) -> Option<GrassmannNecklace> {
        let n = self.n;
        while let Some(prefix) = self.stack.pop() {
            let i = prefix.len() as u32;
            let cur = prefix.last().expect("prefixes are never empty");
            if i == n {
                if transition_ok(Strictness::Lenient, n, cur, &prefix[0]) {
                    let nk = GrassmannNecklace::new(self.k, n, prefix)
                        .expect("search emits well-typed terms");
                    return Some(nk);
                }
                continue;
            }
            if cur.binary_search(&i).is_err() {
                // the axiom forces a copy
                let mut ext = prefix.clone();
                ext.push(cur.clone());
                self.stack.push(ext);
            } else {
                // replace i by j, for j = i or j outside the term; pushed
                // in reverse so smaller j pops first
                for j in (1..=n).rev() {
                    if j == i || cur.binary_search(&j).is_err() {
                        let mut term: Vec<u32> = cur.iter().copied().filter(|&x| x != i).collect();
                        let at = term.partition_point(|&x| x < j);
                        term.insert(at, j);
                        let mut ext = prefix.clone();
                        ext.push(term);
                        self.stack.push(ext);
                    }
                }
            }
        }
        None
    }
}

/// One diagram that did not survive diagram -> necklace -> diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeRoundtripFailure {
    pub original: LeDiagram,
    pub via: GrassmannNecklace,
    pub returned: LeDiagram,
}

/// One necklace that did not survive necklace -> diagram -> necklace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NecklaceRoundtripFailure {
    pub original: GrassmannNecklace,
    pub via: LeDiagram,
    pub returned: GrassmannNecklace,
}

/// Anything else the sweep promises about enumerated objects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvariantFailure {
    /// A converted necklace failed lenient validation.
    ForwardOutputInvalid {
        diagram: LeDiagram,
        first_failure_index: u32,
    },
    /// The union of walk squares over all labels missed or exceeded the
    /// plus set.
    PlusCoverage {
        diagram: LeDiagram,
        missing: Vec<Square>,
        extra: Vec<Square>,
    },
    /// A conversion returned an error; the message is kept as data.
    ConversionError { context: String, message: String },
}

/// Everything the exhaustive sweep of one type found. A passing report
/// has equal Le and necklace counts and all three failure lists empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationReport {
    pub k: u32,
    pub n: u32,
    pub shape_count: usize,
    pub le_count: usize,
    pub necklace_count: usize,
    pub le_roundtrip_failures: Vec<LeRoundtripFailure>,
    pub necklace_roundtrip_failures: Vec<NecklaceRoundtripFailure>,
    pub invariant_failures: Vec<InvariantFailure>,
}

impl EnumerationReport {
    pub fn is_passing(&self) -> bool {
        self.le_count == self.necklace_count
            && self.le_roundtrip_failures.is_empty()
            && self.necklace_roundtrip_failures.is_empty()
            && self.invariant_failures.is_empty()
    }
}

/// Sweep one type, guarded at [`DEFAULT_ENUMERATION_LIMIT`].
pub fn roundtrip_report(k: u32, n: u32) -> Result<EnumerationReport, Error> {
    roundtrip_report_with_limit(k, n, DEFAULT_ENUMERATION_LIMIT)
}

/// Sweep one type: every Le diagram is converted forward, its necklace
/// validated, its walk squares compared against the plus set, and the
/// reverse conversion compared against the original; every enumerated
/// necklace makes the opposite trip. Failures are collected as data, not
/// errors.
pub fn roundtrip_report_with_limit(k: u32, n: u32, limit: u32) -> Result<EnumerationReport, Error> {
    check_limit(n, limit)?;
    let mut report = EnumerationReport {
        k,
        n,
        shape_count: enumerate_shapes(k, n)?.count(),
        le_count: 0,
        necklace_count: 0,
        le_roundtrip_failures: Vec::new(),
        necklace_roundtrip_failures: Vec::new(),
        invariant_failures: Vec::new(),
    };
    for d in enumerate_le_with_limit(k, n, limit)? {
        report.le_count += 1;
        let nk = match necklace_from_le(&d) {
            Ok(nk) => nk,
            Err(e) => {
                report
                    .invariant_failures
                    .push(InvariantFailure::ConversionError {
                        context: format!("diagram -> necklace on {:?}", d.plus_squares()),
                        message: e.to_string(),
                    });
                continue;
            }
        };
        let validation = nk.validate(Strictness::Lenient);
        if !validation.is_valid() {
            report
                .invariant_failures
                .push(InvariantFailure::ForwardOutputInvalid {
                    diagram: d.clone(),
                    first_failure_index: validation.failures[0].index,
                });
        }
        match walk_union(&d) {
            Ok(union) => {
                let missing: Vec<Square> = d.plus_squares().difference(&union).copied().collect();
                let extra: Vec<Square> = union.difference(d.plus_squares()).copied().collect();
                if !missing.is_empty() || !extra.is_empty() {
                    report
                        .invariant_failures
                        .push(InvariantFailure::PlusCoverage {
                            diagram: d.clone(),
                            missing,
                            extra,
                        });
                }
            }
            Err(e) => report
                .invariant_failures
                .push(InvariantFailure::ConversionError {
                    context: "walk union".into(),
                    message: e.to_string(),
                }),
        }
        match le_from_necklace(&nk) {
            Ok(back) if back == d => {}
            Ok(back) => report.le_roundtrip_failures.push(LeRoundtripFailure {
                original: d,
                via: nk,
                returned: back,
            }),
            Err(e) => report
                .invariant_failures
                .push(InvariantFailure::ConversionError {
                    context: "necklace -> diagram on a converted necklace".into(),
                    message: e.to_string(),
                }),
        }
    }
    for nk in enumerate_necklaces_with_limit(k, n, limit)? {
        report.necklace_count += 1;
        let d = match le_from_necklace(&nk) {
            Ok(d) => d,
            Err(e) => {
                report
                    .invariant_failures
                    .push(InvariantFailure::ConversionError {
                        context: format!("necklace -> diagram on {:?}", nk.terms()),
                        message: e.to_string(),
                    });
                continue;
            }
        };
        match necklace_from_le(&d) {
            Ok(back) if back == nk => {}
            Ok(back) => report
                .necklace_roundtrip_failures
                .push(NecklaceRoundtripFailure {
                    original: nk,
                    via: d,
                    returned: back,
                }),
            Err(e) => report
                .invariant_failures
                .push(InvariantFailure::ConversionError {
                    context: "diagram -> necklace on a reconstructed diagram".into(),
                    message: e.to_string(),
                }),
        }
    }
    Ok(report)
}

fn walk_union(d: &LeDiagram) -> Result<BTreeSet<Square>, Error> {
    let mut union = BTreeSet::new();
    for i in 2..=d.shape().n() {
        union.extend(path_from(d, i)?);
    }
    Ok(union)
}
