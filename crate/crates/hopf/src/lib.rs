//! Coalgebra and Hopf structure on DG Poisson presentations: multiplicative
//! coproducts, counits, anti-multiplicative antipodes, bounded axiom
//! verification and the Sweedler-leg bracket obstruction.

pub mod catalog;
mod check;
mod presentation;

pub use check::{check_antipode, check_bialgebra, sweedler_obstruction};
pub use presentation::{tensor_hopf, HopfBuilder, HopfError, HopfPresentation};
