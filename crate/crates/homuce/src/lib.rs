//! Exact structure-constant computer algebra for Hom-Leibniz and Hom-Lie
//! algebras over Q and Q(sqrt(d)): identity validation, homology of the
//! twisted chain complex, generalized Cartan operators, and construction and
//! verification of universal (alpha-)central extensions.

pub mod algebra;
pub mod catalog;
pub mod corep;
pub mod corpus;
pub mod crosscheck;
pub mod document;
pub mod extension;
pub mod homology;
pub mod indexing;
pub mod matrix;
pub mod morphism;
pub mod scalar;
pub mod subspace;
pub mod suite;
pub mod uce;

pub use algebra::{Flavor, HomAlgebra, ValidationReport};
pub use corep::HomCoRep;
pub use extension::{Centrality, Extension};
pub use matrix::Matrix;
pub use morphism::Hom;
pub use scalar::Scalar;
pub use subspace::{QuotientSpace, Subspace};
