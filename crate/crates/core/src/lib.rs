//! Dynamic list coloring of graphs, with emphasis on 1-plane drawings.
//!
//! * [`graph`]: simple graphs, colorings and list assignments.
//! * [`drawing`]: combinatorial 1-plane drawings and their planarization.
//! * [`coloring`]: checkers and exact solvers.
//! * [`reduce`]: reducible configurations and the constructive 11-list colorer.
//! * [`discharge`]: charges, rules R1 to R5 and claim audits.

pub mod catalog;
pub mod coloring;
pub mod discharge;
pub mod drawing;
pub mod error;
pub mod families;
pub mod geometry;
pub mod graph;
pub mod reduce;
pub mod text;

pub use drawing::{AssociatedPlaneGraph, CrossingPair, EdgeId, FaceId, OnePlaneDrawing, PlaneVertex};
pub use error::{ColoringError, DrawingError, GraphError, ParseError, ReduceError};
pub use graph::{Color, Coloring, Graph, ListAssignment, VertexId};
