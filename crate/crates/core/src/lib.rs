//! Exact toolkit for circular total colouring of graphs with half-edges.
//!
//! - [`hegraph`]: the half-edge graph model, family generators, the `heg 1`
//!   file format, and the total conflict graph whose proper circular
//!   colourings are exactly the circular total colourings.
//! - [`colouring`]: `(p,q)`-colourings, the validity checker, the shift and
//!   scale transformations, block merging, and the `pqc 1` certificate
//!   format.
//! - [`latin`]: the Latin squares the constructive colourings read from.
//! - [`constructions`]: boundary-controlled block colourings and the chain
//!   assemblies that certify upper bounds on `gkn(k, n)`.
//! - [`solver`]: complete feasibility search, exhaustive enumeration, and
//!   exact computation of circular total chromatic numbers over
//!   bounded-denominator candidates.
//!
//! Everything is exact integer arithmetic; certificates are validated by
//! the checker before they are ever returned.

pub mod colouring;
pub mod constructions;
pub mod fraction;
pub mod hegraph;
pub mod latin;
pub mod solver;

pub use colouring::{check, merge, CircularColouring, Violation};
pub use fraction::Fraction;
pub use hegraph::{HalfEdgeGraph, TotalConflictGraph};
pub use latin::LatinSquare;
pub use solver::{ChiResult, ChiStatus, FeasibilityOutcome, FeasibilityStatus, SearchConfig};
