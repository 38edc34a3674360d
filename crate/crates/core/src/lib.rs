//! Exact toolkit for circular colouring and critical-graph analysis.
//!
//! The crate decides `(p,q)`-colourability exactly, computes circular
//! chromatic numbers, tests `k`- and `H`-criticality, builds the graph
//! families these notions are studied on (wheels, the Moser spindle, Ore
//! compositions, Mycielskians, C6-expansions, indicator compositions),
//! extracts and classifies Gallai trees, and replays the density and
//! discharging arguments with exact rational arithmetic.
//!
//! Everything is deterministic: solvers follow a documented vertex and
//! colour order, and randomized generators are seeded.

pub mod colour;
pub mod construct;
pub mod critical;
pub mod density;
pub mod error;
pub mod gallai;
pub mod graph;
pub mod io;
pub mod lists;

pub use colour::{
    available_colours, circular_chromatic_number, circular_clique, count_colourings_oracle,
    find_colouring, is_valid_colouring, reduce_nonsurjective, AvailabilityInterval,
    CircularTarget, Colouring, Rational,
};
pub use error::{Error, Result};
pub use graph::{BlockDecomposition, Graph};
