//! Reverse conversion: from a Grassmann necklace back to the unique
//! Le-valid filling that produces it.
//!
//! The first term fixes the shape. For each later term, the labels that
//! left the first term (taken descending) pair with the labels that
//! entered (ascending); each pair is a plus square. The union over all
//! terms is the filling, which must land inside the shape and pass the Le
//! check or the necklace indexes no diagram.

use crate::diagram::{LeDiagram, LeReport};
use crate::error::Error;
use crate::necklace::{GrassmannNecklace, Strictness};
use crate::shape::{LabeledShape, Square};
use std::collections::BTreeSet;

/// Squares forced by one term against the first term. Both slices must be
/// sorted ascending without duplicates; equal set cardinalities make the
/// two differences equally long.
///
/// # Panics
///
/// If the two difference lists end up with different lengths, which can
/// only happen when the slices are not equal-cardinality sets.
pub fn plus_squares_for_term(first: &[u32], term: &[u32]) -> Vec<Square> {
    let removed: Vec<u32> = first
        .iter()
        .rev()
        .copied()
        .filter(|x| term.binary_search(x).is_err())
        .collect();
    let added: Vec<u32> = term
        .iter()
        .copied()
        .filter(|x| first.binary_search(x).is_err())
        .collect();
    assert_eq!(
        removed.len(),
        added.len(),
        "terms must have equal cardinality"
    );
    removed
        .into_iter()
        .zip(added)
        .map(|(row, col)| Square::new(row, col))
        .collect()
}

/// Diagram indexed by a necklace. The necklace is validated under the
/// lenient axioms first; see [`le_from_necklace_unchecked`] to skip that.
pub fn le_from_necklace(nk: &GrassmannNecklace) -> Result<LeDiagram, Error> {
    let report = nk.validate(Strictness::Lenient);
    if !report.is_valid() {
        return Err(Error::InvalidNecklace {
            failures: report.failures,
        });
    }
    le_from_necklace_unchecked(nk)
}

/// Same construction without validating the exchange axioms, for callers
/// that already did or deliberately accept unvalidated input. The result
/// is still required to be consistent: every forced square must be a box
/// of the first term's shape and the assembled filling must pass the Le
/// check.
pub fn le_from_necklace_unchecked(nk: &GrassmannNecklace) -> Result<LeDiagram, Error> {
    let shape = LabeledShape::with_type(nk.shape_type(), nk.first_term())?;
    let first = nk.first_term();
    let mut plus: BTreeSet<Square> = BTreeSet::new();
    for i in 2..=nk.n() {
        for sq in plus_squares_for_term(first, nk.term(i)) {
            if !shape.contains(sq) {
                return Err(Error::InconsistentNecklace {
                    index: i,
                    square: sq,
                });
            }
            plus.insert(sq);
        }
    }
    let d = LeDiagram::new(shape, plus);
    match d.validate() {
        LeReport::Valid => Ok(d),
        LeReport::Violations(violations) => Err(Error::NotLeDiagram { violations }),
        LeReport::OutOfShape(_) => unreachable!("every square was membership-checked"),
    }
}

/// Dimension of the positroid cell indexed by a Le-valid filling: the
/// number of pluses.
pub fn positroid_dimension(d: &LeDiagram) -> usize {
    d.plus_squares().len()
}
