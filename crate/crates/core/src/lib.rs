//! Tangled diagrams over `[n]` and their combinatorics.
//!
//! A tangled diagram is a labeled graph on vertices `1..=n`, drawn on a
//! horizontal line with arcs in the upper halfplane, where every vertex has
//! degree at most two. Loops and doubled arcs are allowed, and every
//! degree-two vertex carries an explicit crossing-or-nesting resolution.
//!
//! The crate provides:
//!
//! - [`young`]: integer-partition shapes and standard Young tableaux over the
//!   primed alphabet `1 < 1' < 2 < 2' < …`, with RSK row insertion and its
//!   unique reverse extraction;
//! - [`tangle`]: the diagram model, its inflation to a partial matching on
//!   the primed alphabet (and deflation back), and crossing/nesting numbers;
//! - [`bijection`]: vacillating tableaux, the seven elementary moves, and the
//!   bijection between vacillating tableaux and tangled diagrams;
//! - [`enumerate`]: exhaustive generators at desk scale, walk-counting DPs,
//!   and the exact counting formulas for k-noncrossing diagrams.
//!
//! ```
//! use tangled::{beta_inv, count_all, tangled_diagrams};
//!
//! // the tallest shape in a diagram's sequence is its crossing number
//! for diagram in tangled_diagrams(3, 6).unwrap() {
//!     let tableau = beta_inv(&diagram).unwrap();
//!     assert_eq!(tableau.max_rows(), diagram.crossing_number());
//! }
//!
//! assert_eq!(count_all(3, 10).to_string(), "629772754");
//! ```

pub mod bijection;
pub mod enumerate;
pub mod tangle;
pub mod young;

pub use bijection::{
    allowed_moves, beta, beta_inv, phi, psi, BijectionError, HalfStep, Move, VacillatingTableau,
};
pub use enumerate::{
    catalan, count_all, count_by_vt, count_matchings, count_no_isolated, count_tableaux,
    f3_closed_form, sequence_table, tangled_diagrams, three_noncrossing_table,
    vacillating_tableaux, Count, EnumerateError, SequenceTable, DEFAULT_DIAGRAM_BOUND,
};
pub use tangle::{
    arcs_cross, arcs_nest, Arc, Classification, DiagramClass, DiagramError, MatchingError,
    PartialMatching, Resolution, TangledDiagram,
};
pub use young::{Label, ParseLabelError, Shape, StandardTableau, TableauError};
