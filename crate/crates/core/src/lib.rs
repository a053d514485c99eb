//! Exact arithmetic for the polynomial bases of the symmetric,
//! quasisymmetric and asymmetric polynomial rings.

pub mod bases;
pub mod combinat;
pub mod error;
pub mod expand;
pub mod polynomial;
pub mod products;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
