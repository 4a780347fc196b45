//! Shared inputs for the benchmarks: seeded general generators and their quotients.

use psilab_core::field::{PrimeField, Rationals, DEFAULT_PRIME};
use psilab_core::inverse::QuotientAlgebra;
use psilab_core::psi::{orbit_span, sample_general_f};
use psilab_core::{Field, Polynomial};

/// The prime field used for the larger instances.
pub fn prime() -> PrimeField {
    PrimeField::new(DEFAULT_PRIME).expect("default modulus is prime")
}

/// A seeded general generator of degree `d` in `n` variables.
pub fn general_f<F: Field>(field: &F, n: usize, d: usize, seed: u64) -> Polynomial<F> {
    sample_general_f(field, n, d, seed, 100).expect("valid sampling parameters")
}

/// The quotient by the orbit span of a seeded general generator.
pub fn general_quotient<F: Field>(field: &F, n: usize, d: usize, seed: u64) -> QuotientAlgebra<F> {
    QuotientAlgebra::from_psi(&orbit_span(&general_f(field, n, d, seed)).expect("nonzero generator")).expect("artinian quotient")
}

/// The rational field, for symmetry with [`prime`].
pub fn rationals() -> Rationals {
    Rationals
}
