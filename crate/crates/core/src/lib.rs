//! Unitary groups over finite local rings with involution.
//!
//! The crate is organised bottom-up:
//!
//! * [`localring`]: the coefficient rings, ideals and quotients,
//! * [`matform`]: matrices and the skew-hermitian form space,
//! * [`bruhat`]: Bruhat words, factorization and the presentation rewriting system,
//! * [`cyclo`]: exact cyclotomic arithmetic,
//! * [`weil`]: the Weil representation of `Sp(2n, R)`,
//! * [`transvect`]: transvection words, transitivity and Witt extension,
//! * [`reduce`]: projection to quotients and lifting of group elements,
//! * [`json`]: serialized forms used by the command line,
//! * [`suite`]: named verification suites.

pub mod error;
pub mod localring;
pub mod matform;
pub mod cyclo;
pub mod group;
pub mod bruhat;
pub mod weil;
pub mod transvect;
pub mod reduce;
pub mod json;
pub mod suite;

pub use error::{Error, Result};
