//! Forward conversion: from a Le-valid filling to its Grassmann necklace.
//!
//! Every border label `i >= 2` owns at most one boundary square. A walk
//! starts at the nearest plus weakly northwest of that square and keeps
//! stepping to the nearest plus strictly northwest; term `i` of the
//! necklace swaps the walked rows out of the first term and the walked
//! columns in. An absent boundary square, or a walk that never finds a
//! plus, leaves term `i` equal to the first term.

use crate::diagram::LeDiagram;
use crate::error::Error;
use crate::necklace::GrassmannNecklace;
use crate::shape::{LabeledShape, Square};
use std::collections::BTreeSet;

/// The square labeled by border step `i`, for `2 <= i <= n`.
///
/// A horizontal step with positive column height labels the bottom square
/// of its column. A vertical step below the top row whose row is nonempty
/// labels the square directly north of that row's easternmost box. Every
/// other step labels nothing.
pub fn boundary_square(shape: &LabeledShape, i: u32) -> Result<Option<Square>, Error> {
    if i < 2 || i > shape.n() {
        return Err(Error::IndexOutOfRange {
            index: i,
            min: 2,
            max: shape.n(),
        });
    }
    let rows = shape.row_labels();
    if rows.binary_search(&i).is_ok() {
        // vertical step: the row above ends directly over this row's
        // easternmost box, which sits in the smallest column beyond i
        let above = match rows.iter().rev().find(|&&r| r < i) {
            Some(&r) => r,
            None => return Ok(None), // top row
        };
        match shape.col_labels().iter().find(|&&c| c > i) {
            Some(&c) => Ok(Some(Square::new(above, c))),
            None => Ok(None), // empty row
        }
    } else {
        // horizontal step: bottom box of column i
        match rows.iter().rev().find(|&&r| r < i) {
            Some(&r) => Ok(Some(Square::new(r, i))),
            None => Ok(None), // height-zero column
        }
    }
}

/// Plus squares walked from boundary square `i`: the nearest plus weakly
/// northwest of it, then repeatedly the nearest plus strictly northwest of
/// the previous one. Empty when the boundary square is absent or no plus
/// lies weakly northwest. Expects a filling that passes validation;
/// dominance breaches from an invalid filling propagate as errors.
pub fn path_from(d: &LeDiagram, i: u32) -> Result<Vec<Square>, Error> {
    let start = match boundary_square(d.shape(), i)? {
        Some(sq) => sq,
        None => return Ok(Vec::new()),
    };
    let mut path = Vec::new();
    let mut cur = match d.nearest_plus_weak_nw(start)? {
        Some(sq) => sq,
        None => return Ok(Vec::new()),
    };
    path.push(cur);
    while let Some(next) = d.nearest_plus_strict_nw(cur)? {
        path.push(next);
        cur = next;
    }
    Ok(path)
}

/// The necklace of a Le-valid filling. Term 1 is the row-label set; term
/// `i` replaces the rows walked from boundary square `i` by the walked
/// columns. Rows and columns never collide, so each term keeps
/// cardinality `k`; that is still checked and reported as an internal
/// error if broken.
pub fn necklace_from_le(d: &LeDiagram) -> Result<GrassmannNecklace, Error> {
    let shape = d.shape();
    let (k, n) = (shape.k(), shape.n());
    let mut terms: Vec<Vec<u32>> = Vec::with_capacity(n as usize);
    terms.push(shape.row_labels().to_vec());
    for i in 2..=n {
        let path = path_from(d, i)?;
        let mut term: BTreeSet<u32> = shape.row_labels().iter().copied().collect();
        for sq in &path {
            term.remove(&sq.row);
            term.insert(sq.col);
        }
        let term: Vec<u32> = term.into_iter().collect();
        if term.len() != k as usize {
            return Err(Error::TermSizeBroken {
                index: i,
                expected: k as usize,
                got: term.len(),
            });
        }
        terms.push(term);
    }
    GrassmannNecklace::new(k, n, terms)
}
