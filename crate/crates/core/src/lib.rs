//! Analytics for signed social networks: the full family of
//! friendship/enmity paradox measures with the identities that link them.
//!
//! A [`graph::SignedDigraph`] stores positive and negative arcs separately.
//! Analyses run on single-sign [`graph::GraphView`]s, which can symmetrize
//! arcs, keep only reciprocated ties, or preserve direction. On a view one
//! can compute:
//!
//! * global and local paradox deltas for the same world, mixed worlds,
//!   arbitrary node attributes, multi-hop neighborhoods, and the four
//!   directed walk/count combinations ([`paradox`]);
//! * the inversity correlation and the exact gap identities tying the
//!   global and local deltas together ([`inversity`]);
//! * a battery of heterogeneity measures that explain paradox strength
//!   ([`measures`]);
//! * greedy rewiring toward maximal paradox strength ([`rewire`]).
//!
//! Synthetic graphs with controlled degree-sequence coupling live in
//! [`generators`], and [`naive`] holds deliberately slow reimplementations
//! of every delta used to cross-check the fast paths.
//!
//! ```
//! use signed_paradox::graph::{make_view, Sign, SignedDigraph, ViewMode};
//! use signed_paradox::paradox::{delta_global_same, delta_local_same};
//!
//! // a path of three nodes: 0 - 1 - 2, stored as reciprocal negative arcs
//! let g = SignedDigraph::from_arcs(3, [], [(0, 1), (1, 0), (1, 2), (2, 1)])?;
//! let v = make_view(&g, Sign::Negative, ViewMode::Symmetrized, false)?;
//!
//! let global = delta_global_same(&v)?;
//! let local = delta_local_same(&v)?;
//! assert!((global - (-1.0 / 6.0)).abs() < 1e-12);
//! assert!((local.delta_l - (-1.0 / 3.0)).abs() < 1e-12);
//! # Ok::<(), signed_paradox::error::Error>(())
//! ```

pub mod error;
pub mod generators;
pub mod graph;
pub mod inversity;
pub mod measures;
pub mod naive;
pub mod paradox;
pub mod rewire;

pub use error::{Error, Result};
