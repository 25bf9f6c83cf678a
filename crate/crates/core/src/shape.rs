use crate::error::Error;
use std::fmt;

/// Rank and ground-set size shared by a diagram and its necklace.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShapeType {
    k: u32,
    n: u32,
}

impl ShapeType {
    /// A proper type: `0 < k < n`.
    pub fn new(k: u32, n: u32) -> Result<Self, Error> {
        if k == 0 || k >= n {
            return Err(Error::InvalidType { k, n });
        }
        Ok(ShapeType { k, n })
    }

    /// The degenerate empty or full box (`k = 0` or `k = n`). Only for
    /// callers that ask for the trivial shape explicitly; everything else
    /// goes through [`ShapeType::new`].
    pub fn trivial(k: u32, n: u32) -> Result<Self, Error> {
        if n == 0 || (k != 0 && k != n) {
            return Err(Error::InvalidType { k, n });
        }
        Ok(ShapeType { k, n })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }
}

/// One box of a labeled shape, addressed by its row and column labels.
///
/// Orders by `(row, col)`, which is the byte-stable order used everywhere
/// a set of squares is serialized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Square {
    pub row: u32,
    pub col: u32,
}

impl Square {
    pub fn new(row: u32, col: u32) -> Self {
        Square { row, col }
    }
}

impl fmt::Display for Square {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.row, self.col)
    }
}

/// One unit step of the southeast border walk, tagged with its label.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BorderStep {
    /// Vertical step: the label names a row.
    Row(u32),
    /// Horizontal step: the label names a column.
    Col(u32),
}

impl BorderStep {
    pub fn label(&self) -> u32 {
        match *self {
            BorderStep::Row(l) | BorderStep::Col(l) => l,
        }
    }
}

/// A Young diagram in the `k x (n - k)` box, addressed by border labels.
///
/// Labels `1..=n` walk the southeast border starting at the northeast
/// corner of the bounding box; vertical steps name rows, horizontal steps
/// name columns. Column labels therefore grow toward the left, and a
/// column whose label is smaller than every row label has height zero.
/// A square `(r, c)` lies in the shape exactly when `c > r`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabeledShape {
    ty: ShapeType,
    rows: Vec<u32>,
    cols: Vec<u32>,
}

impl LabeledShape {
    /// Shape with the given row labels; `rows` must be `k` distinct labels
    /// in `1..=n`. The column labels are the complement.
    pub fn from_rows(k: u32, n: u32, rows: &[u32]) -> Result<Self, Error> {
        Self::with_type(ShapeType::new(k, n)?, rows)
    }

    /// Same as [`from_rows`](Self::from_rows) but accepts a pre-built type,
    /// which may be trivial.
    pub fn with_type(ty: ShapeType, rows: &[u32]) -> Result<Self, Error> {
        if rows.len() != ty.k() as usize {
            return Err(Error::WrongCardinality {
                expected: ty.k() as usize,
                got: rows.len(),
            });
        }
        let mut sorted = rows.to_vec();
        sorted.sort_unstable();
        for pair in sorted.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateLabel { label: pair[0] });
            }
        }
        for &r in &sorted {
            if r < 1 || r > ty.n() {
                return Err(Error::LabelOutOfRange {
                    label: r,
                    n: ty.n(),
                });
            }
        }
        let cols = (1..=ty.n()).filter(|c| !sorted.contains(c)).collect();
        Ok(LabeledShape {
            ty,
            rows: sorted,
            cols,
        })
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

    /// Row labels in increasing order (top row first).
    pub fn row_labels(&self) -> &[u32] {
        &self.rows
    }

    /// Column labels in increasing order. Drawing order is the reverse:
    /// the leftmost column carries the largest label.
    pub fn col_labels(&self) -> &[u32] {
        &self.cols
    }

    /// Number of boxes in the given row: column labels greater than it.
    pub fn row_length(&self, row: u32) -> usize {
        self.cols.len() - self.cols.partition_point(|&c| c <= row)
    }

    /// Number of boxes in the given column: row labels smaller than it.
    pub fn col_height(&self, col: u32) -> usize {
        self.rows.partition_point(|&r| r < col)
    }

    /// Whether `s` is a box of the shape.
    pub fn contains(&self, s: Square) -> bool {
        s.col > s.row
            && self.rows.binary_search(&s.row).is_ok()
            && self.cols.binary_search(&s.col).is_ok()
    }

    pub fn square_count(&self) -> usize {
        self.rows.iter().map(|&r| self.row_length(r)).sum()
    }

    /// Columns of one row in drawing order (left to right, labels
    /// decreasing).
    pub fn row_cols(&self, row: u32) -> impl Iterator<Item = u32> + '_ {
        self.cols.iter().rev().copied().filter(move |&c| c > row)
    }

    /// All boxes, top row first, each row left to right.
    pub fn squares(&self) -> impl Iterator<Item = Square> + '_ {
        self.rows
            .iter()
            .flat_map(move |&r| self.row_cols(r).map(move |c| Square::new(r, c)))
    }

    /// The border walk: steps labeled `1..=n`, vertical exactly at the row
    /// labels.
    pub fn border(&self) -> impl Iterator<Item = BorderStep> + '_ {
        (1..=self.ty.n()).map(move |i| {
            if self.rows.binary_search(&i).is_ok() {
                BorderStep::Row(i)
            } else {
                BorderStep::Col(i)
            }
        })
    }
}
