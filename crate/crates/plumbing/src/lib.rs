//! Analysis of plumbed configurations of curves on a surface.
//!
//! A [`graph::PlumbingGraph`] records the dual graph of a configuration of
//! smooth curves (vertices carry genus and self-intersection, edges are
//! transversal crossings). From it the crate builds a finite presentation of
//! the fundamental group of the boundary of a regular neighbourhood
//! ([`presentation`]), rewrites graphs by blow-ups and blow-downs
//! ([`moves`]), solves linear chains in closed form ([`chain`]), classifies
//! the rim of a comb ([`comb`]), and decides nontriviality / finite order /
//! infinite order of the standard meridian loops ([`decision`]).
//!
//! Everything in the verdict path is exact integer or rational arithmetic
//! ([`intalg`]); an independent coset-enumeration oracle ([`oracle`]) checks
//! the order claims on desk-scale inputs. The `format` module holds the textual graph
//! file format used by the CLI and the fuzz targets.

#![forbid(unsafe_code)]

pub mod chain;
pub mod comb;
pub mod decision;
pub mod format;
pub mod graph;
pub mod intalg;
pub mod moves;
pub mod oracle;
pub mod presentation;
pub mod word;

pub use graph::{GraphError, GraphShape, PlumbingGraph, ShapeKind, Vertex, VertexId, Weight};
