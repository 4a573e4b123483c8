//! Character theory, Lie ideals and centers of finite group algebras `ℂ[G]`
//! and generalized group algebras `ℂ[G]⊗A`.
//!
//! Everything is finite-dimensional: groups are Cayley tables, algebras are
//! structure constants over double-precision complex numbers, and
//! subspaces are orthonormal row bases compared at fixed tolerances. In
//! finite dimension every subspace is closed, so "closed Lie ideal" and
//! "Lie ideal" coincide throughout.

pub mod algebra;
pub mod center;
pub mod characters;
pub mod corpus;
pub mod error;
pub mod group;
pub mod lie;
pub mod linalg;
pub mod scalar;
pub mod subspace;
pub mod tensor;
pub mod verify;

pub use algebra::{AlgebraElement, AlgebraId, AlgebraSpec, StructureAlgebra};
pub use center::CenterReport;
pub use characters::{CharacterTable, GroupAlgebra};
pub use error::{Error, Result};
pub use group::{GroupTable, NamedGroup};
pub use lie::{LieIdealClassification, Witness};
pub use scalar::{Tolerances, C64};
pub use subspace::Subspace;
pub use tensor::GeneralizedAlgebra;
