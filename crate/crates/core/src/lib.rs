//! Exact arithmetic in tautological rings of `C^n`, of the blow-up
//! `U_{n-1}` of `C^{n-1}`, and of the moduli space `M_{1,n}` of pointed elliptic curves.

pub mod blowup;
pub mod curve;
pub mod error;
pub mod linalg;
pub mod moduli;
pub mod ring;

pub use error::{Result, RingError};
