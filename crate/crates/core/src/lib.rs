//! Skew-polynomial rings `F_{q^m}[x; σ]` over explicit finite fields, and the
//! skew-cyclic, skew-constacyclic and skew-BCH codes built on them.

pub mod bch;
mod cancel;
pub mod codes;
pub mod error;
pub mod field;
pub mod linearized;
pub mod matrix;
pub mod roots;
pub mod skew;

pub use cancel::CancelToken;
pub use error::{Error, Result};
pub use field::{Fe, Field, FieldEmbedding, FieldSpec, FrobeniusAut};
pub use matrix::Matrix;
pub use skew::{SkewPoly, SkewRing};
