//! Equitable vertex coloring of block graphs.
//!
//! A block graph is a graph whose blocks (maximal 2-connected pieces) are
//! cliques. For such graphs the equitable chromatic number is conjectured to
//! lie in a bracket of width one:
//!
//! ```text
//! max(omega, ceil((n + 1) / (alpha_min + 1)))  <=  chi_eq  <=  that + 1
//! ```
//!
//! The crate provides the structural toolkit ([`graph`]), the bound
//! computations ([`bounds`]), an exact equitable-coloring oracle
//! ([`coloring`]), constructive optimal colorers for several subclasses
//! ([`wellcovered`], [`structured`], [`small_alpha`]) and an exhaustive
//! verifier over all small connected block graphs ([`verifier`]).

pub mod bounds;
pub mod coloring;
pub mod generators;
pub mod graph;
pub mod small_alpha;
pub mod structured;
pub mod verifier;
pub mod wellcovered;

pub use bounds::{conjecture_bounds, BoundsReport};
pub use coloring::{check, Coloring, Verdict};
pub use graph::Graph;
