//! Closed-form degree bounds, spherical-action thresholds, and an
//! executable verification suite.
//!
//! The bounds are pure integer formulas; the thresholds are exact
//! rationals compared exactly, because an off-by-one at an integer
//! boundary value flips the truth of the statements they feed.
//! [`verify_theorems`] treats every bound as a falsifiable assertion over
//! freshly enumerated data and reports witnesses on any violation.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::data_set::{DataSet, Fraction};
use crate::enumeration::{enumerate_data_sets, enumerate_for_genus, EnumerationQuery};
use crate::pairing::{enumerate_root_classes, witness_pair, RootClass};
use crate::Error;

/// Largest prime power and smallest prime in a factorization, the two
/// quantities the two-cone threshold depends on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PrimePowerProfile {
    source: u64,
    max_prime_power: u64,
    min_prime: u64,
}

impl PrimePowerProfile {
    /// Factorizes `n >= 2` by trial division.
    pub fn new(n: u64) -> Self {
        assert!(n >= 2, "profile requires n >= 2");
        let mut rest = n;
        let mut max_prime_power = 1;
        let mut min_prime = u64::MAX;
        let mut p = 2;
        while p * p <= rest {
            if rest.is_multiple_of(p) {
                let mut power = 1;
                while rest.is_multiple_of(p) {
                    power *= p;
                    rest /= p;
                }
                max_prime_power = max_prime_power.max(power);
                min_prime = min_prime.min(p);
            }
            p += 1;
        }
        if rest > 1 {
            max_prime_power = max_prime_power.max(rest);
            min_prime = min_prime.min(rest);
        }
        PrimePowerProfile {
            source: n,
            max_prime_power,
            min_prime,
        }
    }

    pub fn source(&self) -> u64 {
        self.source
    }

    /// The largest prime-power factor `p^a` of `n`. Distinct primes give
    /// distinct prime powers, so the maximum is unique.
    pub fn max_prime_power(&self) -> u64 {
        self.max_prime_power
    }

    pub fn min_prime(&self) -> u64 {
        self.min_prime
    }
}

/// Upper bound `4g^2 + 2g` on the degree of any root for total genus `g`.
pub fn degree_bound(genus: u64) -> u64 {
    assert!(genus >= 2);
    4 * genus * genus + 2 * genus
}

/// Upper bound `16*g1*g2 + 4*(2*g1 - g2) - 2` on the degree of a root for
/// the split `(g1, g2)`.
pub fn split_degree_bound(g1: u64, g2: u64) -> u64 {
    assert!(g1 >= g2 && g2 >= 1);
    16 * g1 * g2 + 4 * (2 * g1 - g2) - 2
}

/// Stable upper bound `16*g1*g2 + 4*(2*g1 - N*g2) - 2N` for a positive odd
/// `N`, valid once both side genera exceed `N + 3`.
pub fn stable_split_degree_bound(g1: u64, g2: u64, deficit: u64) -> Result<u64, Error> {
    if deficit == 0 || deficit.is_multiple_of(2) {
        return Err(Error::StableBoundDeficit(deficit));
    }
    if g1 < g2 || g2 <= deficit + 3 {
        return Err(Error::StableBoundGenusRange {
            g1,
            g2,
            min: deficit + 3,
        });
    }
    let inner = 2 * g1 as i64 - (deficit * g2) as i64;
    let bound = 16 * (g1 * g2) as i64 + 4 * inner - 2 * deficit as i64;
    assert!(bound > 0, "stable bound is positive on its domain");
    Ok(bound as u64)
}

/// Every action of degree strictly above `(2/3)(2g - 1)` is spherical.
pub fn spherical_degree_threshold(genus: u64) -> Fraction {
    assert!(genus >= 1);
    Fraction::new(2 * (2 * genus - 1), 3)
}

/// Every spherical action of degree strictly above
/// `(2g - 1) / (2 - 2/q - 1/p^a)` has exactly two non-distinguished cone
/// points, where `p^a` is the largest prime power in `n` and `q` its
/// smallest prime.
pub fn two_cone_threshold(n: u64, genus: u64) -> Fraction {
    assert!(genus >= 1);
    type Signed = num_rational::Ratio<i64>;
    let profile = PrimePowerProfile::new(n);
    let denominator = Signed::from_integer(2)
        - Signed::new(2, profile.min_prime() as i64)
        - Signed::new(1, profile.max_prime_power() as i64);
    assert!(
        denominator > Signed::from_integer(0),
        "threshold denominator must be positive"
    );
    let threshold = Signed::from_integer(2 * genus as i64 - 1) / denominator;
    Fraction::new(*threshold.numer() as u64, *threshold.denom() as u64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

/// One verified statement: pass/fail plus any counterexample witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremCheck {
    pub theorem: String,
    pub range: String,
    pub status: CheckStatus,
    pub witnesses: Vec<String>,
}

fn check(theorem: &str, range: String, witnesses: Vec<String>) -> TheoremCheck {
    TheoremCheck {
        theorem: theorem.to_string(),
        range,
        status: if witnesses.is_empty() {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        },
        witnesses,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub genus_max: u64,
    pub checks: Vec<TheoremCheck>,
}

impl TheoremReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status == CheckStatus::Pass)
    }

    pub fn find(&self, theorem: &str) -> Option<&TheoremCheck> {
        self.checks.iter().find(|c| c.theorem == theorem)
    }
}

/// Recomputes every degree bound, threshold, and non-existence statement
/// over full enumerations up to `genus_max` and reports each as pass/fail
/// with witnesses. A failure means an implementation bug or a genuine
/// erratum, never an expected outcome.
pub fn verify_theorems(genus_max: u64) -> TheoremReport {
    assert!(genus_max >= 2);

    let per_genus: Vec<(u64, BTreeMap<u64, Vec<DataSet>>)> = (1..=genus_max)
        .into_par_iter()
        .map(|g| (g, enumerate_for_genus(g)))
        .collect();

    let splits: Vec<(u64, u64, Vec<RootClass>)> = {
        let mut keys = Vec::new();
        for g in 2..=genus_max {
            for g1 in g.div_ceil(2)..=g - 1 {
                keys.push((g1, g - g1));
            }
        }
        keys.into_par_iter()
            .map(|(g1, g2)| (g1, g2, enumerate_root_classes(g1, g2)))
            .collect()
    };

    let mut checks = Vec::new();
    let genus_range = format!("g = 1..={genus_max}");
    let split_range = format!("all splits g1 + g2 = g, 2 <= g <= {genus_max}");

    // No action of degree 4g + 1 exists.
    let mut witnesses = Vec::new();
    for (g, by_degree) in &per_genus {
        for set in &by_degree[&(4 * g + 1)] {
            witnesses.push(format!("g={g}: {set}"));
        }
    }
    checks.push(check("no-degree-4g-plus-1", genus_range.clone(), witnesses));

    // 4g + 2 is the largest order that occurs, and it always occurs.
    let mut witnesses = Vec::new();
    for (g, by_degree) in &per_genus {
        if by_degree[&(4 * g + 2)].is_empty() {
            witnesses.push(format!("g={g}: no data set of degree 4g+2 = {}", 4 * g + 2));
        }
        for n in 4 * g + 3..=8 * g + 4 {
            for set in enumerate_data_sets(EnumerationQuery::new(n, *g)) {
                witnesses.push(format!("g={g}, n={n}: {set}"));
            }
        }
    }
    checks.push(check(
        "max-order-4g-plus-2",
        format!("{genus_range}, degrees probed up to 8g + 4"),
        witnesses,
    ));

    // Above (2/3)(2g-1) every nontrivial action is spherical.
    let mut witnesses = Vec::new();
    for (g, by_degree) in &per_genus {
        let threshold = spherical_degree_threshold(*g);
        for (n, sets) in by_degree {
            if *n > 1 && Fraction::from_integer(*n) > threshold {
                for set in sets {
                    if !set.is_spherical() {
                        witnesses.push(format!("g={g}: {set}"));
                    }
                }
            }
        }
    }
    checks.push(check(
        "spherical-above-threshold",
        genus_range.clone(),
        witnesses,
    ));

    // No nontrivial action has zero non-distinguished cone points.
    let mut witnesses = Vec::new();
    for (g, by_degree) in &per_genus {
        for sets in by_degree.values() {
            for set in sets {
                if !set.is_trivial() && set.cone_count() == 0 {
                    witnesses.push(format!("g={g}: {set}"));
                }
            }
        }
    }
    checks.push(check(
        "no-nontrivial-zero-cones",
        genus_range.clone(),
        witnesses,
    ));

    // No spherical action has exactly one non-distinguished cone point.
    let mut witnesses = Vec::new();
    for (g, by_degree) in &per_genus {
        for sets in by_degree.values() {
            for set in sets {
                if set.is_spherical() && set.cone_count() == 1 {
                    witnesses.push(format!("g={g}: {set}"));
                }
            }
        }
    }
    checks.push(check(
        "no-spherical-one-cone",
        genus_range.clone(),
        witnesses,
    ));

    // Spherical actions above the prime-power threshold have exactly two
    // cone points.
    let mut witnesses = Vec::new();
    for (g, by_degree) in &per_genus {
        for (n, sets) in by_degree {
            if *n < 2 {
                continue;
            }
            let threshold = two_cone_threshold(*n, *g);
            if Fraction::from_integer(*n) > threshold {
                for set in sets {
                    if set.is_spherical() && set.cone_count() != 2 {
                        witnesses.push(format!("g={g}: {set}"));
                    }
                }
            }
        }
    }
    checks.push(check(
        "two-cones-above-threshold",
        genus_range.clone(),
        witnesses,
    ));

    // Spherical degree-2 actions are the hyperelliptic ones: 2g + 1 cone
    // points, and they exist for every genus.
    let mut witnesses = Vec::new();
    for (g, by_degree) in &per_genus {
        let spherical: Vec<&DataSet> = by_degree[&2].iter().filter(|s| s.is_spherical()).collect();
        if spherical.is_empty() {
            witnesses.push(format!("g={g}: no spherical degree-2 data set"));
        }
        for set in spherical {
            if set.cone_count() as u64 != 2 * g + 1 {
                witnesses.push(format!("g={g}: {set}"));
            }
        }
    }
    checks.push(check(
        "hyperelliptic-cone-count",
        genus_range.clone(),
        witnesses,
    ));

    // Spherical degree-3 actions have g + 1 cone points; a two-cone one
    // exists exactly at genus 1.
    let mut witnesses = Vec::new();
    for (g, by_degree) in &per_genus {
        let mut has_two_cone = false;
        for set in by_degree[&3].iter().filter(|s| s.is_spherical()) {
            if set.cone_count() as u64 != g + 1 {
                witnesses.push(format!("g={g}: {set}"));
            }
            has_two_cone |= set.cone_count() == 2;
        }
        if has_two_cone != (*g == 1) {
            witnesses.push(format!(
                "g={g}: spherical two-cone degree-3 action {}",
                if has_two_cone { "exists" } else { "missing" }
            ));
        }
    }
    checks.push(check("degree-3-cone-count", genus_range.clone(), witnesses));

    // The two sides of a root class never both have degree 2 mod 4.
    let mut witnesses = Vec::new();
    for (g1, g2, classes) in &splits {
        for class in classes {
            if class.first().degree() % 4 == 2 && class.second().degree() % 4 == 2 {
                witnesses.push(format!("({g1}, {g2}): {class}"));
            }
        }
    }
    checks.push(check(
        "no-pair-both-2-mod-4",
        split_range.clone(),
        witnesses,
    ));

    // Split bound 16*g1*g2 + 4*(2*g1 - g2) - 2.
    let mut witnesses = Vec::new();
    for (g1, g2, classes) in &splits {
        let bound = split_degree_bound(*g1, *g2);
        for class in classes {
            if class.degree() > bound {
                witnesses.push(format!(
                    "({g1}, {g2}): degree {} > {bound}: {class}",
                    class.degree()
                ));
            }
        }
    }
    checks.push(check("split-degree-bound", split_range.clone(), witnesses));

    // Genus bound 4g^2 + 2g.
    let mut witnesses = Vec::new();
    for (g1, g2, classes) in &splits {
        let bound = degree_bound(g1 + g2);
        for class in classes {
            if class.degree() > bound {
                witnesses.push(format!(
                    "({g1}, {g2}): degree {} > {bound}: {class}",
                    class.degree()
                ));
            }
        }
    }
    checks.push(check("genus-degree-bound", split_range.clone(), witnesses));

    // Stable bound for odd deficits, where both sides are large enough.
    let mut witnesses = Vec::new();
    let mut applicable = 0usize;
    for deficit in [1u64, 3] {
        for (g1, g2, classes) in &splits {
            if *g2 <= deficit + 3 {
                continue;
            }
            applicable += 1;
            let bound = stable_split_degree_bound(*g1, *g2, deficit).expect("hypotheses checked");
            for class in classes {
                if class.degree() > bound {
                    witnesses.push(format!(
                        "N={deficit}, ({g1}, {g2}): degree {} > {bound}: {class}",
                        class.degree()
                    ));
                }
            }
        }
    }
    checks.push(check(
        "stable-split-degree-bound",
        format!("N in {{1, 3}}; {applicable} applicable splits up to g = {genus_max}"),
        witnesses,
    ));

    // For odd N, a spherical two-cone action of degree 4g - N forces
    // g <= N + 3.
    let mut witnesses = Vec::new();
    for deficit in [1u64, 3] {
        for (g, by_degree) in &per_genus {
            if *g <= deficit + 3 {
                continue;
            }
            let degree = 4 * g - deficit;
            for set in &by_degree[&degree] {
                if set.is_spherical() && set.cone_count() == 2 {
                    witnesses.push(format!("N={deficit}, g={g}: {set}"));
                }
            }
        }
    }
    checks.push(check(
        "odd-deficit-genus-cap",
        format!("N in {{1, 3}}, g = N+4..={genus_max}"),
        witnesses,
    ));

    // Realizable maxima: every split admits the guaranteed witness degree
    // lcm(4*g1, 4*g2 + 2), and the per-genus maximum is at least
    // 2g^2 + 2g.
    let mut witnesses = Vec::new();
    let mut genus_maximum: BTreeMap<u64, u64> = BTreeMap::new();
    for (g1, g2, classes) in &splits {
        let max_degree = classes.last().map(RootClass::degree).unwrap_or(0);
        let guaranteed = crate::arith::lcm(4 * g1, 4 * g2 + 2);
        if max_degree < guaranteed {
            witnesses.push(format!(
                "({g1}, {g2}): maximum {max_degree} below guaranteed witness degree {guaranteed}"
            ));
        }
        match witness_pair(*g1, *g2) {
            Ok(class) => {
                if !classes.contains(&class) {
                    witnesses.push(format!(
                        "({g1}, {g2}): witness {class} missing from enumeration"
                    ));
                }
            }
            Err(e) => witnesses.push(format!("({g1}, {g2}): {e}")),
        }
        let entry = genus_maximum.entry(g1 + g2).or_insert(0);
        *entry = (*entry).max(max_degree);
    }
    for (g, max_degree) in &genus_maximum {
        let floor = 2 * g * g + 2 * g;
        if *max_degree < floor {
            witnesses.push(format!("g={g}: maximum {max_degree} below floor {floor}"));
        }
    }
    checks.push(check(
        "guaranteed-degree-lower-bound",
        split_range,
        witnesses,
    ));

    TheoremReport { genus_max, checks }
}
