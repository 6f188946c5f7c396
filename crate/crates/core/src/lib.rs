//! Exact calculus of polynomial multivector fields on Rⁿ, the classification
//! of linear Poisson structures on R³ and their quadratic deformations.
//!
//! Everything runs in exact arithmetic: rationals, and the biquadratic field
//! Q(√2, √3) where orbit representatives on the projective plane need it.

pub mod cli;
pub mod error;
pub mod exactnum;
pub mod io;
pub mod linclass;
pub mod multivec;
pub mod quaddef;
pub mod sample;
pub mod verify;

pub use error::{Error, Result};
