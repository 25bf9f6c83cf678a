use crate::error::Error;
use crate::shape::{LabeledShape, Square};
use std::collections::BTreeSet;
use std::fmt;

/// Witness that a filling breaks the Le condition: `northeast` and
/// `southwest` are pluses whose column and row meet at `missing`, a box of
/// the shape that holds no plus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LeViolation {
    pub northeast: Square,
    pub southwest: Square,
    pub missing: Square,
}

impl fmt::Display for LeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "+ at {} and + at {} force + at {}",
            self.northeast, self.southwest, self.missing
        )
    }
}

/// Outcome of validating a filling. Pluses outside the shape are reported
/// apart from genuine Le-condition violations; the Le scan only runs once
/// every plus is a box of the shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LeReport {
    Valid,
    OutOfShape(Vec<Square>),
    Violations(Vec<LeViolation>),
}

impl LeReport {
    pub fn is_valid(&self) -> bool {
        matches!(self, LeReport::Valid)
    }
}

/// A `{0, +}` filling of a labeled shape.
///
/// Construction does not validate: callers build freely and call
/// [`validate`](Self::validate) to check square membership and the Le
/// condition. The plus set is kept ordered by `(row, col)`, so iteration
/// and serialization are deterministic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LeDiagram {
    shape: LabeledShape,
    plus: BTreeSet<Square>,
}

impl LeDiagram {
    pub fn new(shape: LabeledShape, plus: impl IntoIterator<Item = Square>) -> Self {
        LeDiagram {
            shape,
            plus: plus.into_iter().collect(),
        }
    }

    /// The all-zero filling.
    pub fn empty(shape: LabeledShape) -> Self {
        LeDiagram {
            shape,
            plus: BTreeSet::new(),
        }
    }

    pub fn shape(&self) -> &LabeledShape {
        &self.shape
    }

    pub fn plus_squares(&self) -> &BTreeSet<Square> {
        &self.plus
    }

    pub fn is_plus(&self, s: Square) -> bool {
        self.plus.contains(&s)
    }

    /// Full validation report: every plus in the shape, then the Le
    /// condition, with all violating triples listed in `(northeast,
    /// southwest)` order.
    pub fn validate(&self) -> LeReport {
        let out: Vec<Square> = self
            .plus
            .iter()
            .copied()
            .filter(|&s| !self.shape.contains(s))
            .collect();
        if !out.is_empty() {
            return LeReport::OutOfShape(out);
        }
        let mut violations = Vec::new();
        for &a in &self.plus {
            for &b in &self.plus {
                if a.row < b.row && a.col < b.col {
                    let missing = Square::new(b.row, a.col);
                    if self.shape.contains(missing) && !self.plus.contains(&missing) {
                        violations.push(LeViolation {
                            northeast: a,
                            southwest: b,
                            missing,
                        });
                    }
                }
            }
        }
        if violations.is_empty() {
            LeReport::Valid
        } else {
            LeReport::Violations(violations)
        }
    }

    /// Early-exit version of [`validate`](Self::validate).
    pub fn is_valid(&self) -> bool {
        for &s in &self.plus {
            if !self.shape.contains(s) {
                return false;
            }
        }
        for &a in &self.plus {
            for &b in &self.plus {
                if a.row < b.row && a.col < b.col {
                    let missing = Square::new(b.row, a.col);
                    if self.shape.contains(missing) && !self.plus.contains(&missing) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Nearest plus weakly northwest of `s` (including `s` itself): among
    /// pluses with `row <= s.row` and `col >= s.col`, the one with maximal
    /// row, then minimal column. On a Le-valid filling that square
    /// dominates every candidate; the dominance is asserted at runtime and
    /// a breach reports the filling as non-Le.
    pub fn nearest_plus_weak_nw(&self, s: Square) -> Result<Option<Square>, Error> {
        self.nearest(s, false)
    }

    /// Nearest plus strictly northwest of `s`: among pluses with
    /// `row < s.row` and `col > s.col`, the one with maximal row, then
    /// minimal column, with the same dominance guarantee.
    pub fn nearest_plus_strict_nw(&self, s: Square) -> Result<Option<Square>, Error> {
        self.nearest(s, true)
    }

    fn nearest(&self, s: Square, strict: bool) -> Result<Option<Square>, Error> {
        if !self.shape.contains(s) {
            return Err(Error::OutOfShape { square: s });
        }
        let candidate = |p: Square| {
            if strict {
                p.row < s.row && p.col > s.col
            } else {
                p.row <= s.row && p.col >= s.col
            }
        };
        let mut best: Option<Square> = None;
        for &p in self.plus.iter().filter(|&&p| candidate(p)) {
            best = Some(match best {
                None => p,
                Some(b) if p.row > b.row || (p.row == b.row && p.col < b.col) => p,
                Some(b) => b,
            });
        }
        if let Some(b) = best {
            for &p in self.plus.iter().filter(|&&p| candidate(p)) {
                if !(p.row <= b.row && p.col >= b.col) {
                    return Err(Error::DominanceBreach {
                        at: s,
                        chosen: b,
                        rival: p,
                    });
                }
            }
        }
        Ok(best)
    }
}
