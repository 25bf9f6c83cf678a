use crate::error::Error;
use crate::shape::ShapeType;
use std::fmt;

/// How the exchange axiom treats an index `i` with `i` in term `i` and an
/// unchanged next term. Lenient admits it (the replacement may be `i`
/// itself, which covers coloops); strict demands a replacement from
/// outside the term.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strictness {
    Lenient,
    Strict,
}

/// One failed transition: going from term `index` to the cyclically next
/// term does not match any move the axiom allows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomFailure {
    pub index: u32,
    pub term: Vec<u32>,
    pub next: Vec<u32>,
}

/// Outcome of validating a necklace under the chosen strictness. Every
/// failing index is listed with the offending pair of terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NecklaceReport {
    pub strictness: Strictness,
    pub failures: Vec<AxiomFailure>,
}

impl NecklaceReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Elements leaving and entering between the first term and term `i`:
/// `removed` is descending, `added` ascending, and the two have equal
/// length because all terms share one cardinality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermDiffs {
    pub removed: Vec<u32>,
    pub added: Vec<u32>,
}

/// A cyclic sequence of `n` terms, each a `k`-subset of `1..=n`.
///
/// Terms are stored sorted; `term(i)` takes the 1-based cyclic index, so
/// `term(1)` is the first term and indexing past `n` is the caller's wrap
/// to handle. Construction checks cardinalities and label ranges only;
/// the exchange axioms are checked by [`validate`](Self::validate).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GrassmannNecklace {
    ty: ShapeType,
    terms: Vec<Vec<u32>>,
}

impl GrassmannNecklace {
    pub fn new(k: u32, n: u32, terms: Vec<Vec<u32>>) -> Result<Self, Error> {
        let ty = ShapeType::new(k, n)?;
        if terms.len() != n as usize {
            return Err(Error::TermCountMismatch {
                expected: n as usize,
                got: terms.len(),
            });
        }
        let mut sorted = Vec::with_capacity(terms.len());
        for term in terms {
            if term.len() != k as usize {
                return Err(Error::WrongCardinality {
                    expected: k as usize,
                    got: term.len(),
                });
            }
            let mut t = term;
            t.sort_unstable();
            for pair in t.windows(2) {
                if pair[0] == pair[1] {
                    return Err(Error::DuplicateLabel { label: pair[0] });
                }
            }
            for &x in &t {
                if x < 1 || x > n {
                    return Err(Error::LabelOutOfRange { label: x, n });
                }
            }
            sorted.push(t);
        }
        Ok(GrassmannNecklace { ty, terms: sorted })
    }

    pub fn shape_type(&self) -> ShapeType {
        self.ty
    }

    pub fn k(&self) -> u32 {
        self.ty.k()
    }

    pub fn n(&self) -> u32 {
        self.ty.n()
    }

    pub fn terms(&self) -> &[Vec<u32>] {
        &self.terms
    }

    /// Term by 1-based index.
    ///
    /// # Panics
    ///
    /// If `i` is not in `1..=n`.
    pub fn term(&self, i: u32) -> &[u32] {
        assert!(
            i >= 1 && i <= self.n(),
            "term index {i} outside 1..={}",
            self.n()
        );
        &self.terms[i as usize - 1]
    }

    pub fn first_term(&self) -> &[u32] {
        &self.terms[0]
    }

    /// Checks every cyclic transition `i -> i + 1` against the exchange
    /// axiom (term `n` wraps around to the first term): an index absent
    /// from its term copies the term forward; an index present in its term
    /// is removed and one label enters in its place.
    pub fn validate(&self, strictness: Strictness) -> NecklaceReport {
        let n = self.n();
        let mut failures = Vec::new();
        for i in 1..=n {
            let cur = &self.terms[i as usize - 1];
            let next = &self.terms[i as usize % n as usize];
            if !transition_ok(strictness, i, cur, next) {
                failures.push(AxiomFailure {
                    index: i,
                    term: cur.clone(),
                    next: next.clone(),
                });
            }
        }
        NecklaceReport {
            strictness,
            failures,
        }
    }

    /// Differences against the first term, for `2 <= i <= n`.
    pub fn term_diffs(&self, i: u32) -> Result<TermDiffs, Error> {
        if i < 2 || i > self.n() {
            return Err(Error::IndexOutOfRange {
                index: i,
                min: 2,
                max: self.n(),
            });
        }
        let first = &self.terms[0];
        let term = &self.terms[i as usize - 1];
        let mut removed = diff(first, term);
        removed.reverse();
        let added = diff(term, first);
        Ok(TermDiffs { removed, added })
    }
}

impl fmt::Display for Strictness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Strictness::Lenient => write!(f, "lenient"),
            Strictness::Strict => write!(f, "strict"),
        }
    }
}

/// Whether one cyclic transition obeys the exchange axiom: an absent
/// index copies the term, a present index leaves and exactly one label
/// enters (itself only under lenient checking). Shared by validation and
/// the necklace enumerator.
pub(crate) fn transition_ok(strictness: Strictness, i: u32, cur: &[u32], next: &[u32]) -> bool {
    if cur.binary_search(&i).is_err() {
        return next == cur;
    }
    let removed = diff(cur, next);
    let added = diff(next, cur);
    let swap = removed == [i] && added.len() == 1;
    match strictness {
        Strictness::Lenient => next == cur || swap,
        Strictness::Strict => swap,
    }
}

/// Elements of `a` not in `b`; both inputs sorted, output ascending.
fn diff(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter()
        .copied()
        .filter(|x| b.binary_search(x).is_err())
        .collect()
}
