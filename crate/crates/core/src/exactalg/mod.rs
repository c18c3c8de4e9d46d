//! Exact linear algebra over the rationals and prime fields.

mod field;
mod matrix;
mod subspace;

pub(crate) use field::is_prime;
pub use field::{Field, PrimeField, Rationals};
pub use matrix::Matrix;
pub use subspace::{enumerate_subspaces, gaussian_binomial, Subspace, SubspaceIter};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactAlgError {
    #[error("{0} is not a prime below 2^32")]
    NotPrime(u64),
    #[error("no {dim}-dimensional subspace of a {ambient}-dimensional space contains a {containing}-dimensional one")]
    InfeasibleDimensions {
        ambient: usize,
        dim: usize,
        containing: usize,
    },
}

/// The first `n` primes.
pub fn first_primes(n: usize) -> Vec<u64> {
    (2u64..).filter(|&p| is_prime(p)).take(n).collect()
}
