//! Symmetric-orbit ideals: construction, inverse systems, Betti tables,
//! linear relations and equivariant syzygies.

pub mod equivariant;
pub mod error;
pub mod field;
pub mod homology;
pub mod linalg;
pub mod linrel;
pub mod inverse;
pub mod module;
pub mod monomial;
pub mod partitions;
pub mod perm;
pub mod poly;
pub mod psi;

pub use error::{Error, Result};
pub use field::{Field, FieldChoice, PrimeField, Rationals};
pub use linalg::{HomogeneousSpan, Matrix, RowSpace};
pub use monomial::{Monomial, MonomialBasis};
pub use partitions::Partition;
pub use perm::Permutation;
pub use poly::{DualElement, Polynomial};
pub use psi::{orbit_span, PsiIdeal, TParams};
pub use inverse::QuotientAlgebra;
pub use module::GradedModule;
