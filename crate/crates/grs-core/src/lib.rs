//! Block-additive sequences over finite abelian groups.
//!
//! A block-additive sequence assigns to `n` the sum of the weights of the
//! sliding windows over the base-k digits of `n`. When the weight table is a
//! difference matrix — any two distinct rows differ in a perfectly balanced
//! way — the sequence is a generalised Rudin–Shapiro sequence: its order-2
//! correlations match those of uniform i.i.d. symbols, with an explicit
//! `r k (1 + log_k N) / N` error term that exact counting can certify.
//!
//! The crate provides:
//!
//! - [`group`]: products of cyclic groups with canonical element indexing;
//! - [`radix`]: digit vectors, digit sums, carry lengths, and fibres;
//! - [`field`]: GF(p^n) arithmetic and the field construction of difference
//!   matrices;
//! - [`weights`]: weight functions, the difference-condition validator, the
//!   catalog of shipped matrices, and a bounded exhaustive search;
//! - [`sequence`]: direct, streaming, and grid evaluation;
//! - [`automaton`]: the DFAO and uniform-morphism realizations with a
//!   primitivity test;
//! - [`correlation`]: exact counting sweeps and the bounds they certify.

#![forbid(unsafe_code)]

pub mod automaton;
pub mod correlation;
pub mod error;
pub mod field;
pub mod group;
pub mod guard;
pub mod radix;
pub mod sequence;
pub mod weights;

pub use error::{Error, Result};
pub use group::{GroupElement, GroupSpec};
pub use sequence::SequenceSpec;
pub use weights::{ValidationReport, WeightFunction};
