//! Exact computations with graded Artinian Gorenstein algebras through Macaulay inverse systems.

pub mod error;
pub mod field;
pub mod gorseq;
pub mod graded;
pub mod inverse;
pub mod json;
pub mod linalg;
pub mod macaulay;
pub mod nets;
pub mod random;
pub mod resolution;

pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use graded::{
    contract, monomial_basis, DividedPowerForm, GradedPoly, Monomial, VariableFrame,
};
pub use linalg::{ExactMatrix, RowSpace};
pub use macaulay::HilbertSequence;
