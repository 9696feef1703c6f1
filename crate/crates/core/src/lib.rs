//! Finite weak BCC-algebras: axiom checking, natural order and branches,
//! solidity and identity laws, a registry of structural laws, and
//! enumeration of isomorphism classes.

pub mod algebra;
pub mod canonical;
pub mod catalog;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod laws;
pub mod mask;
pub mod order;
pub mod properties;
pub mod report;
pub mod table;
pub mod tablefile;
pub mod tables;

pub use algebra::Algebra;
pub use canonical::{are_isomorphic, canonical_form, CanonicalForm};
pub use catalog::IsoClassCatalog;
pub use enumerate::{enumerate_classes, SearchConfig};
pub use error::{Error, Result};
pub use mask::PropertyMask;
pub use table::{CayleyTable, Element};
