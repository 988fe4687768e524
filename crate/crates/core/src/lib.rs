//! Exact computation of unicellular and vertical-strip LLT polynomials,
//! their orientation-based e-expansions, and related symmetric functions.

pub mod charge;
pub mod coeff;
pub mod colorings;
pub mod diagrams;
pub mod error;
pub mod hall_littlewood;
pub mod orientations;
pub mod partitions;
pub mod powersum;
pub mod recursions;
pub mod symfunc;
pub mod verify;

pub use coeff::{LaurentPoly, RatFunc, RatLaurentPoly, VarShift};
pub use diagrams::{AreaSequence, StripDiagram};
pub use error::{Error, Result};
pub use partitions::{Composition, Partition, Tableau};
pub use symfunc::{Basis, RatSymFunc, SymFunc};

/// Which side of the `q ↦ q + 1` substitution a symmetric function is reported on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Form {
    /// The function of `q` itself, e.g. `G_a(x; q)`.
    Plain,
    /// The function evaluated at `q + 1`, e.g. `G_a(x; q + 1)`.
    Shifted,
}

/// Enumeration bounds shared by the coloring and orientation engines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest number of vertices (and colors) the coloring engine will enumerate.
    pub max_vertices: usize,
    /// Largest number of orientable edges the orientation engine will enumerate.
    pub max_bits: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_vertices: 8, max_bits: 26 }
    }
}
