//! Le diagrams, Grassmann necklaces, and the bijection between them.
//!
//! Both structures index the cells of the totally nonnegative Grassmannian.
//! A *Le diagram* is a Young diagram inside a `k x (n - k)` bounding box
//! whose boxes are filled with `0` or `+` subject to the Le condition: if a
//! box has a `+` above it in its column and a `+` to its left in its row,
//! it holds a `+` too. A *Grassmann necklace* is a cyclic sequence of `n`
//! size-`k` subsets of `{1..n}` in which consecutive terms differ only by
//! exchanging the index of the step between them. Rows and columns are
//! addressed by the labels `1..=n` of the diagram's southeast border walk,
//! which pins down the correspondence without any coordinate bookkeeping.
//!
//! The crate provides:
//!
//! - the two conversions, [`necklace_from_le`] (walking nearest-northwest
//!   plus paths from each border step) and [`le_from_necklace`] (pairing
//!   leaving and entering labels of each term against the first term);
//! - validation with complete witness reports for both classes
//!   ([`LeDiagram::validate`], [`GrassmannNecklace::validate`]);
//! - exhaustive enumeration of shapes, diagrams, and necklaces at small
//!   `n`, and [`roundtrip_report`], which certifies on everything
//!   enumerated that the two conversions are mutually inverse;
//! - canonical text and JSON grammars ([`text`], [`json`]) and a CLI
//!   binary (`positroid`) built on them.
//!
//! ```
//! use positroid::{necklace_from_le, le_from_necklace, positroid_dimension, text};
//!
//! let diagram = text::parse_diagram("3 8 rows=1,3,6\n++00+\n++0+\n0+")?;
//! assert!(diagram.validate().is_valid());
//! assert_eq!(positroid_dimension(&diagram), 7);
//!
//! let necklace = necklace_from_le(&diagram)?;
//! assert_eq!(
//!     text::render_necklace(&necklace, text::TermStyle::Compact),
//!     "136,236,367,467,678,678,178,168",
//! );
//! assert_eq!(le_from_necklace(&necklace)?, diagram);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod diagram;
pub mod enumerate;
pub mod error;
pub mod forward;
pub mod json;
pub mod necklace;
pub mod reverse;
pub mod shape;
pub mod text;

pub use diagram::{LeDiagram, LeReport, LeViolation};
pub use enumerate::{
    enumerate_le, enumerate_le_with_limit, enumerate_necklaces, enumerate_necklaces_with_limit,
    enumerate_shapes, roundtrip_report, roundtrip_report_with_limit, EnumerationReport,
    InvariantFailure, LeRoundtripFailure, NecklaceRoundtripFailure, Necklaces,
    DEFAULT_ENUMERATION_LIMIT,
};
pub use error::Error;
pub use forward::{boundary_square, necklace_from_le, path_from};
pub use necklace::{AxiomFailure, GrassmannNecklace, NecklaceReport, Strictness, TermDiffs};
pub use reverse::{
    le_from_necklace, le_from_necklace_unchecked, plus_squares_for_term, positroid_dimension,
};
pub use shape::{BorderStep, LabeledShape, ShapeType, Square};
