//! Construction, verification, classification and enumeration of
//! associative pentagon algebras: pairs of semigroup operations `·`, `∗`
//! on one finite carrier whose map `s(x,y) = (x·y, x∗y)` solves the
//! set-theoretic pentagon equation.

pub mod canon;
pub mod census;
pub mod constructions;
pub mod error;
pub mod freeobjects;
pub mod pentagon;
pub mod product;
pub mod profile;
pub mod scan;
pub mod table;
pub mod term;

pub use canon::{canonical_form, CanonicalForm};
pub use error::{Error, Result};
pub use product::{direct_product, rectangular_band};
pub use profile::{structural_profile, StructuralProfile};
pub use table::{CayleyTable, CheckResult};
pub use term::{check_identity, laws, Identity, Op, Term};
