//! Exact combinatorial engine for snake-graph calculus: abstract snake and
//! band graphs, overlaps and (self-)crossings, resolutions, perfect-matching
//! enumeration, and exact Laurent-polynomial identities for cluster algebras
//! from unpunctured surfaces.

pub mod error;
pub mod graph;
pub mod relement;

pub use error::{Error, Result};
pub use graph::{
    Band, BandGraph, EdgeGraph, EdgeRef, GlueSide, Label, Lbl, Side, Sign, SignFn, Snake,
    SnakeGraph, Step, Tile,
};
pub use relement::{Component, RElement, Term};
