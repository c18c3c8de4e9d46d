//! Polynomials and fractions in the Lefschetz class, and the framed-moduli
//! recursion.

mod fraction;
mod polynomial;
mod recursion;

pub use fraction::MotiveFraction;
pub use polynomial::Polynomial;
pub use recursion::{
    consistency_check, dimension_vectors_below, gl_motive, group_motive, identity_holds, recursion_solve,
    repvariety_motives, ConsistencyReport, EntryStatus, MotiveError, RecursionTable,
};
