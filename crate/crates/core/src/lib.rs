//! Roots of Dehn twists about separating curves, computed at the level of
//! data sets.
//!
//! A separating curve splits a closed orientable surface of genus
//! `g = g1 + g2` into two sides. Every root of the Dehn twist about the
//! curve restricts to a finite cyclic action on each side that fixes the
//! center of the filling disk; such an action is recorded by a *data set*
//! `(n, gt, a; (c1, x1), ..., (cl, xl))`: the order `n`, the genus `gt` of
//! the quotient orbifold's underlying surface, the residue `a` attached to
//! the distinguished fixed point, and one `(c, x)` pair per remaining cone
//! point. Two data sets whose turning fractions add up to `1/lcm(n1, n2)`
//! modulo 1 form a root class of that degree.
//!
//! The crate provides:
//!
//! - [`data_set`]: the value types, validation, genus formula, and exact
//!   turning-fraction arithmetic;
//! - [`enumeration`]: exhaustive enumeration of all data sets of a given
//!   degree and genus, with an independent brute-force oracle;
//! - [`pairing`]: the pair congruence, root-class enumeration, maximum
//!   realizable degrees, and a guaranteed witness construction of degree
//!   `lcm(4*g1, 4*g2 + 2)`;
//! - [`bounds`]: closed-form degree bounds and spherical-action
//!   thresholds, plus an executable verification suite that rechecks every
//!   bound against enumerated data;
//! - [`reports`]: bound tables, per-degree classification reports, and an
//!   errata cross-check against embedded golden classification lists.

pub mod arith;
pub mod bounds;
pub mod data_set;
pub mod enumeration;
pub mod pairing;
pub mod reports;
pub mod text;

pub use data_set::{Candidate, ConditionFailure, ConeDatum, DataSet, Fraction, ValidationReport};
pub use enumeration::{
    enumerate_data_sets, enumerate_for_genus, oracle_enumerate, EnumerationQuery,
};
pub use pairing::{
    enumerate_root_classes, is_compatible_pair, max_degree_for_genus, max_root_degree, pair_degree,
    witness_pair, GenusMaximum, RootClass,
};

/// Errors raised by pairing and bound operations on otherwise valid inputs.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("data sets {0} and {1} do not satisfy the pair congruence")]
    IncompatiblePair(String, String),
    #[error("data set {0} has genus 0; a root class needs genus >= 1 on both sides")]
    GenusZeroSide(String),
    #[error("no witness pair found for genera ({g1}, {g2}); this contradicts the guaranteed construction")]
    WitnessSearchFailed { g1: u64, g2: u64 },
    #[error("stable bound requires a positive odd deficit, got {0}")]
    StableBoundDeficit(u64),
    #[error("stable bound requires both genera above {min}, got ({g1}, {g2})")]
    StableBoundGenusRange { g1: u64, g2: u64, min: u64 },
}
