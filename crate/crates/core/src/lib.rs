//! Gliding systems, dimer complexes and their fundamental groups.
//!
//! Edge sets live in the power group `2^E` ([`EdgeSet`], product is symmetric
//! difference). A [`GlidingSystem`] together with a set of states determines a
//! cubed complex ([`CubeComplex`]); for dimer coverings of a graph or
//! hypergraph the glides are the even cycles ([`DimerModel`]). The
//! [`algebra`] module computes presentations of fundamental groups and
//! groupoids, and [`braid`] maps loops in the dimer complex of a graph to
//! permutations of marked edges.

pub mod algebra;
pub mod bits;
pub mod braid;
pub mod complex;
pub mod corpus;
pub mod cycles;
pub mod dimer;
pub mod error;
pub mod hypergraph;

pub use bits::{BitSet, EdgeSet, VertexSet};
pub use complex::{
    build_complex, BuildOptions, Cube, CubeComplex, CubeId, GlidingSystem, NpcReport, StateSet,
};
pub use cycles::{Cycle, EvenCycleData};
pub use dimer::DimerModel;
pub use error::{Error, Limits, Result};
pub use hypergraph::{Hypergraph, Mode, SubdivisionProfile};
