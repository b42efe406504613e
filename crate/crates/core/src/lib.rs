//! Exact total dominator chromatic (TDC) numbers of small simple graphs.
//!
//! A total dominator coloring is a proper coloring in which every vertex is
//! adjacent to every vertex of some color class; `χ_d^t(G)` is the fewest
//! classes such a coloring can have. It exists exactly when `G` is nonempty
//! and has no isolated vertex.
//!
//! The crate provides:
//! * [`Graph`] with family generators, neighbourhood corona, clique gluing,
//!   Cartesian product and graph6 / edge-list I/O,
//! * exact `χ`, `γ_t` and `χ_d^t` ([`solver::tdc_number`]) with an
//!   independent brute-force oracle ([`oracle::tdc_brute_force`]),
//! * TDC-stability and TDC-bondage ([`perturbation`]),
//! * closed-form values and a claim-by-claim checker ([`theorems`]),
//! * small-graph enumeration and a low-degree stability scan ([`explorer`]).

pub mod baseline;
pub mod canon;
pub mod coloring;
pub mod error;
pub mod explorer;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod ops;
pub mod perturbation;
pub mod solver;
pub mod theorems;

pub use coloring::Coloring;
pub use error::{Error, Result};
pub use graph::{Edge, Graph};
