//! Integral bases of global function fields and number fields, and bases of
//! fractional ideals, computed from OM representations of the prime ideals.

pub mod basis;
pub mod error;
pub mod ff;
pub mod glue;
pub mod ideals;
pub mod irred;
pub mod maxmin;
pub mod okutsu;
pub mod om;
pub mod upoly;
pub mod ring;
pub mod value;
pub mod verify;

pub use error::{Error, Result};
