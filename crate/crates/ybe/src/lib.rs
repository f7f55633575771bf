//! Set-theoretic Yang-Baxter solutions from fixed-point-free abelian
//! endomorphisms of finite groups.
//!
//! The pipeline: pick a finite group from the catalog, enumerate its
//! fixed-point-free abelian endomorphisms, build the skew brace each one
//! induces, and read off a pair of mutually inverse non-degenerate solutions
//! of the braid identity on G x G. Everything is finite and table-backed,
//! and every structural claim is re-checked by exhaustive loops rather than
//! trusted.
//!
//! Start with the runnable programs in `examples/`; each one walks a single
//! capability end to end.

pub mod brace;
pub mod catalog;
pub mod cli;
pub mod export;
pub mod families;
pub mod group;
pub mod morphism;
pub mod perm;
pub mod ybe;

pub use group::{FiniteGroup, GroupError};
