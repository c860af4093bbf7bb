//! Exact algebra for two-bridge knots.
//!
//! The crate is `no_std` and only needs `alloc`. It covers continued-fraction
//! expansions and the branched surfaces they carry, boundary slopes and the
//! 4-plat flip symmetry, ideal-point counts from residue tuples, valuations on
//! rational functions with the induced tree-action tests, and the
//! Riley / A-polynomial / Newton polygon pipeline. IO, file formats and the
//! command line live in the `tbk` crate.

#![no_std]

extern crate alloc;

pub mod charvar;
pub mod confrac;
pub mod exactnum;
pub mod idealpoints;
pub mod knot;
pub mod surfaces;
pub mod valuation;

pub use confrac::ContinuedFraction;
pub use exactnum::{MultiPoly, Rational};
pub use knot::KnotId;
