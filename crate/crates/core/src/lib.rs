//! A workbench for finite monoids: split and generalized points, Schreier
//! checkers, the categorical constructions that relate them, and suites
//! that verify every statement exhaustively over enumerated corpora of
//! small monoids.

pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod hom;
pub mod io;
pub mod limits;
pub mod monoid;
pub mod par;
pub mod points;
pub mod verify;

pub use error::{Error, Result};
pub use hom::Hom;
pub use monoid::{Monoid, Submonoid};
