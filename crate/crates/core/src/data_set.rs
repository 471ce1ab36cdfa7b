//! Data-set value types, validation, the genus formula, and turning
//! fractions.
//!
//! A data set `(n, gt, a; (c1, x1), ..., (cl, xl))` must satisfy
//!
//! 1. `n >= 1`, `gt >= 0`, every `x > 1`, and every `x` divides `n`;
//! 2. `gcd(a, n) = 1` and `gcd(c, x) = 1` for every pair;
//! 3. `a + sum((n / x_i) * c_i) = 0 (mod n)`;
//!
//! and when `n = 1` it must be the trivial shape `(1, gt, 1;)`. Residues
//! are stored as least positive representatives (`a` in `[1, n]`, `c` in
//! `[1, x - 1]`) and cone pairs are kept sorted ascending by `(x, c)` so
//! that equal data sets have identical representations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, inverse_mod, lcm};

/// Exact rational number used for turning fractions and thresholds.
pub type Fraction = num_rational::Ratio<u64>;

/// One non-distinguished cone point: its residue class `c` modulo the cone
/// order `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ConeDatum {
    residue: u64,
    order: u64,
}

impl ConeDatum {
    /// Builds a cone pair, rejecting residues outside `[1, x - 1]` or not
    /// coprime to the order.
    pub fn new(residue: u64, order: u64) -> Result<Self, ValidationReport> {
        let mut failures = Vec::new();
        if order <= 1 || residue == 0 || residue >= order {
            failures.push(ConditionFailure::Range);
        }
        if order >= 1 && gcd(residue, order) != 1 {
            failures.push(ConditionFailure::UnitC);
        }
        if failures.is_empty() {
            Ok(ConeDatum { residue, order })
        } else {
            Err(ValidationReport::new(failures))
        }
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn order(&self) -> u64 {
        self.order
    }
}

// Canonical cone order is ascending (order, residue).
impl Ord for ConeDatum {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.order, self.residue).cmp(&(other.order, other.residue))
    }
}

impl PartialOrd for ConeDatum {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for ConeDatum {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        (self.residue, self.order).serialize(serializer)
    }
}

/// An unvalidated tuple exactly as supplied by a caller. Residues are not
/// reduced; `validate` reports out-of-range values instead of fixing them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    pub n: u64,
    pub gt: u64,
    pub a: u64,
    pub cones: Vec<(u64, u64)>,
}

/// Identifier of one violated data-set condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConditionFailure {
    /// `n = 0`, `a` outside `[1, n]`, some `x <= 1`, or some `c` outside
    /// `[1, x - 1]`.
    Range,
    /// Some cone order does not divide the degree.
    Divisibility,
    /// `gcd(a, n) != 1`.
    UnitA,
    /// `gcd(c, x) != 1` for some cone.
    UnitC,
    /// `a + sum((n/x) * c) != 0 (mod n)`.
    Congruence,
    /// `n = 1` but the tuple is not `(1, gt, 1;)`.
    TrivialShape,
}

impl ConditionFailure {
    pub fn label(&self) -> &'static str {
        match self {
            ConditionFailure::Range => "range",
            ConditionFailure::Divisibility => "divisibility",
            ConditionFailure::UnitA => "unit-a",
            ConditionFailure::UnitC => "unit-c",
            ConditionFailure::Congruence => "congruence",
            ConditionFailure::TrivialShape => "trivial-shape",
        }
    }
}

impl fmt::Display for ConditionFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Outcome of validating a candidate: every violated condition, not just
/// the first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    overall: bool,
    failures: Vec<ConditionFailure>,
}

impl ValidationReport {
    fn new(failures: Vec<ConditionFailure>) -> Self {
        ValidationReport {
            overall: failures.is_empty(),
            failures,
        }
    }

    pub fn overall(&self) -> bool {
        self.overall
    }

    pub fn failures(&self) -> &[ConditionFailure] {
        &self.failures
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.overall {
            return f.write_str("valid");
        }
        write!(f, "invalid: ")?;
        for (i, failure) in self.failures.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{failure}")?;
        }
        Ok(())
    }
}

/// Checks a raw tuple against every data-set condition.
pub fn validate(candidate: &Candidate) -> ValidationReport {
    let Candidate { n, gt: _, a, cones } = candidate;
    let (n, a) = (*n, *a);
    let mut failures = Vec::new();
    let push = |failures: &mut Vec<ConditionFailure>, failure: ConditionFailure| {
        if !failures.contains(&failure) {
            failures.push(failure);
        }
    };

    if n == 0 || a == 0 || a > n {
        push(&mut failures, ConditionFailure::Range);
    }
    for &(c, x) in cones {
        if x <= 1 || c == 0 || c >= x {
            push(&mut failures, ConditionFailure::Range);
        }
        if x > 1 && n >= 1 && n % x != 0 {
            push(&mut failures, ConditionFailure::Divisibility);
        }
        if x >= 1 && gcd(c, x) != 1 {
            push(&mut failures, ConditionFailure::UnitC);
        }
    }
    if n >= 1 && gcd(a, n) != 1 {
        push(&mut failures, ConditionFailure::UnitA);
    }
    // The congruence is only evaluable once every n/x is an integer.
    if n >= 1 && cones.iter().all(|&(_, x)| x > 1 && n % x == 0) {
        let mut sum = a as u128 % n as u128;
        for &(c, x) in cones {
            sum = (sum + (n / x) as u128 * c as u128) % n as u128;
        }
        if sum != 0 {
            push(&mut failures, ConditionFailure::Congruence);
        }
    }
    if n == 1 && (a != 1 || !cones.is_empty()) {
        push(&mut failures, ConditionFailure::TrivialShape);
    }

    ValidationReport::new(failures)
}

/// One equivalence class of order-`n` cyclic actions with a distinguished
/// fixed point, in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DataSet {
    #[serde(rename = "n")]
    degree: u64,
    #[serde(rename = "gt")]
    quotient_genus: u64,
    #[serde(rename = "a")]
    residue: u64,
    cones: Vec<ConeDatum>,
}

impl DataSet {
    /// Canonical form of a candidate that passes validation: cones sorted
    /// ascending by `(x, c)`. Idempotent on already-canonical input.
    pub fn from_candidate(candidate: &Candidate) -> Result<Self, ValidationReport> {
        let report = validate(candidate);
        if !report.overall() {
            return Err(report);
        }
        let mut cones: Vec<ConeDatum> = candidate
            .cones
            .iter()
            .map(|&(residue, order)| ConeDatum { residue, order })
            .collect();
        cones.sort();
        let data_set = DataSet {
            degree: candidate.n,
            quotient_genus: candidate.gt,
            residue: candidate.a,
            cones,
        };
        if data_set.degree > 1 {
            // Both follow from the validation conditions; asserted rather
            // than assumed.
            let order_lcm = data_set.cones.iter().fold(1, |l, c| lcm(l, c.order));
            assert!(
                !data_set.cones.is_empty(),
                "nontrivial data set with no cones"
            );
            assert_eq!(order_lcm, data_set.degree, "cone orders must have lcm n");
        }
        Ok(data_set)
    }

    /// Convenience constructor from bare integers, with cones as `(c, x)`
    /// pairs in any order.
    pub fn new(n: u64, gt: u64, a: u64, cones: &[(u64, u64)]) -> Result<Self, ValidationReport> {
        DataSet::from_candidate(&Candidate {
            n,
            gt,
            a,
            cones: cones.to_vec(),
        })
    }

    /// The trivial data set `(1, gt, 1;)`.
    pub fn trivial(quotient_genus: u64) -> Self {
        DataSet {
            degree: 1,
            quotient_genus,
            residue: 1,
            cones: Vec::new(),
        }
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn quotient_genus(&self) -> u64 {
        self.quotient_genus
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn cones(&self) -> &[ConeDatum] {
        &self.cones
    }

    /// Number of non-distinguished cone points, usually written `l`.
    pub fn cone_count(&self) -> usize {
        self.cones.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.degree == 1
    }

    /// Genus of the surface the action lives on:
    /// `g = gt*n + (1 - n)/2 + sum((n/x)(x - 1))/2`.
    ///
    /// Evaluated as `2g` in integer arithmetic; the two half-terms always
    /// sum to an even integer for a valid data set, and the computation
    /// panics if that fails (reachable only by bypassing the invariants).
    pub fn genus(&self) -> u64 {
        let n = self.degree as i128;
        let mut doubled = 2 * self.quotient_genus as i128 * n + (1 - n);
        for cone in &self.cones {
            let x = cone.order as i128;
            doubled += (n / x) * (x - 1);
        }
        assert!(
            doubled >= 0 && doubled % 2 == 0,
            "genus formula must give a nonnegative integer, got 2g = {doubled} for {self}"
        );
        (doubled / 2) as u64
    }

    /// Rotation of the action at the distinguished fixed point as the exact
    /// fraction `k/n` of a full turn, where `a*k = 1 (mod n)`. Lies in
    /// `[0, 1)`; the trivial data set gives 0.
    pub fn turning_fraction(&self) -> Fraction {
        let k = inverse_mod(self.residue, self.degree);
        Fraction::new(k % self.degree, self.degree)
    }

    /// True iff the action is nontrivial and its quotient orbifold's
    /// underlying surface is a sphere.
    pub fn is_spherical(&self) -> bool {
        self.degree > 1 && self.quotient_genus == 0
    }

    /// The raw tuple with the same contents.
    pub fn candidate(&self) -> Candidate {
        Candidate {
            n: self.degree,
            gt: self.quotient_genus,
            a: self.residue,
            cones: self.cones.iter().map(|c| (c.residue, c.order)).collect(),
        }
    }
}

impl fmt::Display for DataSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {};",
            self.degree, self.quotient_genus, self.residue
        )?;
        for (i, cone) in self.cones.iter().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            write!(f, "{sep}({}, {})", cone.residue, cone.order)?;
        }
        f.write_str(")")
    }
}

impl<'de> Deserialize<'de> for DataSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let candidate = Candidate::deserialize(deserializer)?;
        DataSet::from_candidate(&candidate)
            .map_err(|report| serde::de::Error::custom(format!("{report}")))
    }
}
