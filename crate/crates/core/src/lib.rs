//! Numerical engine for skeletal unitary fusion categories.
//!
//! The crate models a fusion category by its skeletal data (fusion rules,
//! quantum dimensions, unitary F-symbols, Frobenius-Schur indicators) and
//! represents morphisms as per-sector complex block matrices in canonical
//! left-nested fusion-tree bases with isometric trivalent vertices. On top of
//! that sit verifiers for Frobenius algebras / Q-systems, the compact
//! W*-algebra-object construction (sector spaces, *-structure, GNS maps), the
//! canonical projector construction recovering a Q-system from the W* data,
//! and the round-trip isomorphisms between the two sides.

pub mod algebra;
pub mod category;
pub mod duality;
pub mod equivalence;
pub mod io;
pub mod linalg;
pub mod morphism;
pub mod projector;
pub mod report;
pub mod tol;
pub mod trees;
pub mod validate;
pub mod wstar;

pub use category::{CategorySpec, Ctx, Object, Word};
pub use morphism::Morphism;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum QkitError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, QkitError>;
