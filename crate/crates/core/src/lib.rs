//! Group-cograded multiplier Hopf algebras built from a pairing of multiplier
//! Hopf algebras, with exact arithmetic and mechanical axiom checks.

pub mod aut;
pub mod cograded;
pub mod crossed;
pub mod enumerate;
pub mod eval;
pub mod error;
pub mod group;
pub mod linalg;
pub mod linear;
pub mod mha;
pub mod oracle;
pub mod pairing;
pub mod quasitri;
pub mod scalar;
pub mod session;
pub mod suite;

pub use aut::{AutPair, Automorphism};
pub use error::{Error, Result};
pub use group::{Elt, Group};
pub use linear::{CElem, CLabel, CTensor, Elem, Label, Lc, Tensor};
pub use scalar::{Field, Scalar};
