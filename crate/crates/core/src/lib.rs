//! Turaev–Viro invariants and hyperbolic volumes of the Frigerio manifolds `M_g`.
//!
//! The crate evaluates the state sum `TV_{r,s}(M_g)` over admissible colorings
//! of an ideal triangulation with `2g + 2` tetrahedra, the logarithmic invariant
//! `QV_{r,s} = (sπ/(r-2)) log TV_{r,s}`, the hyperbolic volume of `M_g` from the
//! dihedral angles of its tetrahedra, and least-squares fits of `QV` against
//! the expansion `Vol + b·2π ln(r-2)/(r-2) + c/(r-2)`.

pub mod asymptotics;
pub mod cli;
pub mod coloring;
pub mod error;
pub mod fixtures;
pub mod halfint;
pub mod hyperbolic;
pub mod numerics;
pub mod sixj;
pub mod turaev_viro;

pub use error::{Error, Result};
