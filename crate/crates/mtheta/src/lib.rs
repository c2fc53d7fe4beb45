//! Coefficients, parity and identity checks for the 44 classical mock theta
//! functions.

pub mod catalog;
pub mod density;
pub mod exec;
pub mod numtheory;
pub mod qseries;
pub mod verify;
