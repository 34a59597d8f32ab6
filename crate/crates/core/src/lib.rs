//! Zero forcing and connected zero forcing on simple undirected graphs.
//!
//! * [`forcing`] runs the color change rule and records forces and chains.
//! * [`structure`] computes the vertex classes R₁/R₂/R₃, L, M, pendant paths
//!   and the two lower bounds on Z_c.
//! * [`exact`] holds brute-force solvers for Z(G) and Z_c(G).
//! * [`family`] solves Z_c in closed form on trees, unicyclic graphs and
//!   pendant-free block and cactus graphs, plus a greedy minimal-set search.
//! * [`reduction`] builds the Z → Z_c reduction gadget; [`setsystem`] checks
//!   the set-system axioms on connected-forcing families.
//! * [`generate`] and [`validate`] produce fixtures and cross-check solvers.
//!
//! ```
//! use zforcing::{family::solve_auto, generate::cycle};
//!
//! let r = solve_auto(&cycle(8)).unwrap();
//! assert_eq!(r.result.value, 2);
//! ```

mod bits;
pub mod error;
pub mod exact;
pub mod family;
pub mod forcing;
pub mod generate;
pub mod graph;
pub mod reduction;
pub mod setsystem;
pub mod structure;
pub mod validate;

pub use error::{Error, Result};
pub use graph::{DuplicatePolicy, Graph};
