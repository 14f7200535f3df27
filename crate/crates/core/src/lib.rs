//! Finite Γ-semigroups and their crisp and fuzzy ideal theory.
//!
//! A Γ-semigroup is a carrier `S` together with a family of products
//! `x γ y` indexed by `γ ∈ Γ` satisfying `(x β y) γ z = x β (y γ z)`.
//! Everything here works over finite carriers and finite parameter sets,
//! with elements and parameters identified by their indices.
//!
//! The crate is layered bottom-up:
//!
//! * [`semigroup`], [`subset`], [`ideal`], [`classify`]: the crisp side
//!   (tables, subset products, ideal predicates, structural flags).
//! * [`grade`], [`fuzzy`]: exact rational grades and fuzzy subsets with the
//!   sup-min composition.
//! * [`morphism`]: homomorphisms and fuzzy pullback/pushforward.
//! * [`instances`]: named families, exhaustive enumeration and
//!   canonicalization up to isomorphism.
//! * [`verifier`]: the theorem catalog evaluated extensionally over
//!   enumerated instances and grid fuzzy families.
//! * [`text`]: the plain-text instance and fuzzy-subset file formats.

pub mod classify;
pub mod error;
pub mod fuzzy;
pub mod grade;
pub mod ideal;
pub mod instances;
pub mod morphism;
pub mod semigroup;
pub mod subset;
pub mod text;
pub mod verifier;

pub use classify::{classify, StructureProfile};
pub use error::{BindingError, FuzzyError, GuardError, IdealError, ValidationError};
pub use fuzzy::{FuzzySubset, Violation};
pub use grade::{Grade, GradeGrid};
pub use ideal::IdealKind;
pub use morphism::Homomorphism;
pub use semigroup::{AssocViolation, GammaSemigroup, StructureId, TableData};
pub use subset::ElementSubset;
