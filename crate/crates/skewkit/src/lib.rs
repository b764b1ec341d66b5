//! Exact computations with skew Schur functions.
//!
//! The crate provides:
//!
//! - canonical partitions, skew diagrams and ribbons ([`diagram`]);
//! - exact symmetric-function arithmetic in the Schur basis, driven by
//!   Littlewood-Richardson enumeration ([`schur`]);
//! - outside ribbon decompositions, cutting strips and Hamel-Goulden
//!   determinants ([`decomp`]);
//! - the composition `D ∘_W E` of skew diagrams along an identified
//!   subdiagram `W`, together with its structural hypotheses and the
//!   determinantal identity it satisfies ([`compose`]);
//! - exhaustive enumeration and classification of skew diagrams by
//!   equality of their skew Schur functions ([`classify`]).
//!
//! Most capabilities have a runnable demo under `examples/`, and the
//! `skewkit` binary exposes them as subcommands.

pub mod classify;
pub mod cli;
pub mod compose;
pub mod decomp;
pub mod diagram;
pub mod error;
pub mod schur;
pub mod suite;

pub use diagram::{Cell, Partition, Ribbon, SkewDiagram};
pub use error::{Error, Result};
pub use schur::SchurPoly;
