//! Finite BE-algebras, orthomodular structure and exhaustive model search.

pub mod algebra;
pub mod axioms;
pub mod bank;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod render;
pub mod structure;
pub mod term;
pub mod transform;

pub use algebra::{Elem, FiniteAlgebra, RelationKind};
pub use axioms::{AlgebraClass, AxiomId};
pub use error::{Error, Result};
