//! Grassmannians of sub-bimodules over path algebras of acyclic quivers.

pub mod bimodule;
pub mod cells;
pub mod cli;
pub mod counting;
pub mod exactalg;
pub mod fixedpoints;
pub mod homology;
pub mod motive;
pub mod quiver;
pub mod vertex_set;
