//! Exact decision procedures around stably free modules and Stiefel
//! varieties.
//!
//! Everything in this crate is deterministic, exact-arithmetic
//! computation:
//!
//! * [`group`] — finitely generated abelian groups extended by rational
//!   summands, in canonical invariant-factor form, with the torsion,
//!   quotient, primary-part and divisibility calculus on them;
//! * [`completion`] — their completions at a set of primes and the split
//!   decomposition the completion map induces;
//! * [`fractions`] — elements of Q/Z and their prime-power splittings;
//! * [`snf`] / [`matrix`] — Smith normal form over any signed integer
//!   type, the engine behind every canonical form;
//! * [`enumerate`] — brute-force counting oracles used to cross-check the
//!   structural formulas on small groups;
//! * [`james`] — James (Atiyah–Todd) numbers with exact factorizations;
//! * [`bidegree`] / [`classify`] / [`chart`] — bidegree conventions and
//!   the range classification of realization maps for spheres and Stiefel
//!   varieties, with TSV/SVG chart emission;
//! * [`splitting`] — the complete section/free-summand decision procedure
//!   and a verifier replaying its inequality chain;
//! * [`acceptance`] — the runnable acceptance suite backing `verify`.
//!
//! All values are immutable after construction and all operations are pure
//! functions; everything is safe to call concurrently.

pub mod acceptance;
pub mod bidegree;
pub mod chart;
pub mod classify;
pub mod completion;
pub mod enumerate;
pub mod error;
pub mod fractions;
pub mod group;
pub mod james;
pub mod matrix;
pub mod primes;
pub mod snf;
pub mod splitting;

pub use error::{Error, Result};

/// Integer matrices as used by the group-theory layer: arbitrary
/// precision, so adversarial presentations stay exact.
pub type IntMatrix = matrix::Mat<num_bigint::BigInt>;
