//! Constructions, spectra and integral lattice representations for
//! sesqui-regular graphs whose smallest eigenvalue is at least −3.
//!
//! The crate is organised by subject:
//!
//! - [`graphs`]: simple graphs, the families that occur in the classification
//!   (complements of disjoint cycles, complete multipartite graphs, cubes,
//!   figure fixtures), hop distances and regularity classification.
//! - [`spectra`]: a Jacobi eigensolver for symmetric matrices, quotient
//!   matrices of vertex partitions and interlacing checks.
//! - [`exact`]: integer matrices with exact determinants and an exact
//!   positive-semidefiniteness test.
//! - [`steiner`]: Steiner triple systems, their block graphs and the
//!   canonical norm-3 representation of a block graph.
//! - [`lattice`]: integral representations, support and mate analysis,
//!   a canonical backtracking search for norm-3 representations and the
//!   reconstruction of a Steiner triple system from a representation.
//! - [`hoffman`]: Hoffman graphs, special matrices and special graphs,
//!   decomposition into indecomposable factors and reduced representations.
//! - [`cli`] and [`acceptance`]: the command-line front end and the
//!   acceptance criteria it can run.
//!
//! ```
//! use sesqui::{spectra, steiner};
//!
//! let sts = steiner::construct_sts(13).unwrap();
//! let g = steiner::block_graph(&sts).unwrap();
//! let lambda = spectra::smallest_eigenvalue(&g);
//! assert!((lambda + 3.0).abs() < 1e-8);
//! ```

#![allow(clippy::needless_range_loop)]

pub mod acceptance;
pub mod cli;
pub mod error;
pub mod exact;
pub mod graphs;
pub mod hoffman;
pub mod lattice;
pub mod spectra;
pub mod steiner;

pub use error::{Error, Result};
pub use graphs::Graph;
pub use hoffman::HoffmanGraph;
pub use lattice::IntegralRepresentation;
pub use steiner::TripleSystem;
