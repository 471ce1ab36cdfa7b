//! Pairing of data sets into conjugacy classes of roots.
//!
//! Data sets `D1`, `D2` of degrees `n1`, `n2` form a pair when
//! `(n/n1)*k1 + (n/n2)*k2 = 1 (mod n)` with `n = lcm(n1, n2)` and
//! `a_i * k_i = 1 (mod n_i)`. Each such unordered pair of total genus
//! `g1 + g2 >= 2` is one conjugacy class of degree-`n` roots of the Dehn
//! twist about the separating curve.

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{gcd, inverse_mod, lcm};
use crate::data_set::DataSet;
use crate::enumeration::enumerate_for_genus;
use crate::Error;

/// True iff the two data sets satisfy the pair congruence. Symmetric in
/// its arguments.
pub fn is_compatible_pair(d1: &DataSet, d2: &DataSet) -> bool {
    congruence_holds(
        d1.degree(),
        inverse_mod(d1.residue(), d1.degree()),
        d2.degree(),
        inverse_mod(d2.residue(), d2.degree()),
    )
}

fn congruence_holds(n1: u64, k1: u64, n2: u64, k2: u64) -> bool {
    let n = lcm(n1, n2);
    let sum = ((n / n1) as u128 * k1 as u128 + (n / n2) as u128 * k2 as u128) % n as u128;
    sum == (1 % n) as u128
}

/// Degree `lcm(n1, n2)` of a compatible pair; errors on an incompatible
/// one.
pub fn pair_degree(d1: &DataSet, d2: &DataSet) -> Result<u64, Error> {
    if !is_compatible_pair(d1, d2) {
        return Err(Error::IncompatiblePair(d1.to_string(), d2.to_string()));
    }
    Ok(lcm(d1.degree(), d2.degree()))
}

/// One conjugacy class of roots: an unordered compatible pair with the
/// larger-genus data set stored first (ties broken by tuple order).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct RootClass {
    degree: u64,
    g1: u64,
    g2: u64,
    d1: DataSet,
    d2: DataSet,
}

impl RootClass {
    pub fn new(a: DataSet, b: DataSet) -> Result<Self, Error> {
        if !is_compatible_pair(&a, &b) {
            return Err(Error::IncompatiblePair(a.to_string(), b.to_string()));
        }
        for side in [&a, &b] {
            if side.genus() == 0 {
                return Err(Error::GenusZeroSide(side.to_string()));
            }
        }
        let (ga, gb) = (a.genus(), b.genus());
        let (d1, d2, g1, g2) = if gb > ga || (gb == ga && b < a) {
            (b, a, gb, ga)
        } else {
            (a, b, ga, gb)
        };
        Ok(RootClass {
            degree: lcm(d1.degree(), d2.degree()),
            g1,
            g2,
            d1,
            d2,
        })
    }

    /// Degree of the root: `lcm(n1, n2)`.
    pub fn degree(&self) -> u64 {
        self.degree
    }

    /// Genus of the side carried by [`RootClass::first`].
    pub fn genus_first(&self) -> u64 {
        self.g1
    }

    pub fn genus_second(&self) -> u64 {
        self.g2
    }

    pub fn total_genus(&self) -> u64 {
        self.g1 + self.g2
    }

    /// The larger-genus side.
    pub fn first(&self) -> &DataSet {
        &self.d1
    }

    pub fn second(&self) -> &DataSet {
        &self.d2
    }
}

impl std::fmt::Display for RootClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.d1, self.d2)
    }
}

/// All root classes for the genus split `(g1, g2)`, sorted by
/// `(degree, d1, d2)` and free of unordered duplicates. The degree-1 pair
/// of two trivial data sets (the twist itself) is omitted.
///
/// Distinct `(n1, n2)` degree cells are paired in parallel and merged;
/// the final sort keeps the output schedule-independent.
pub fn enumerate_root_classes(g1: u64, g2: u64) -> Vec<RootClass> {
    assert!(
        g1 >= g2 && g2 >= 1,
        "genus split must satisfy g1 >= g2 >= 1"
    );
    let by_degree1 = enumerate_for_genus(g1);
    let by_degree2 = if g1 == g2 {
        by_degree1.clone()
    } else {
        enumerate_for_genus(g2)
    };

    let sides1: Vec<DegreeCell> = by_degree1
        .into_iter()
        .map(|(n, sets)| (n, with_inverses(sets)))
        .collect();
    let sides2: Vec<DegreeCell> = by_degree2
        .into_iter()
        .map(|(n, sets)| (n, with_inverses(sets)))
        .collect();

    let cell_pairs: Vec<(&DegreeCell, &DegreeCell)> = sides1
        .iter()
        .flat_map(|c1| sides2.iter().map(move |c2| (c1, c2)))
        .collect();

    let mut classes: Vec<RootClass> = cell_pairs
        .par_iter()
        .map(|((n1, cell1), (n2, cell2))| {
            let mut local = Vec::new();
            for (d1, k1) in cell1 {
                for (d2, k2) in cell2 {
                    if *n1 == 1 && *n2 == 1 {
                        continue;
                    }
                    if congruence_holds(*n1, *k1, *n2, *k2) {
                        local.push(
                            RootClass::new(d1.clone(), d2.clone()).expect("congruence was checked"),
                        );
                    }
                }
            }
            local
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();

    classes.sort();
    classes.dedup();
    classes
}

type DegreeCell = (u64, Vec<(DataSet, u64)>);

fn with_inverses(sets: Vec<DataSet>) -> Vec<(DataSet, u64)> {
    sets.into_iter()
        .map(|d| {
            let k = inverse_mod(d.residue(), d.degree());
            (d, k)
        })
        .collect()
}

/// Maximum root degree over all classes of the split.
pub fn max_root_degree(g1: u64, g2: u64) -> u64 {
    let classes = enumerate_root_classes(g1, g2);
    classes
        .last()
        .map(RootClass::degree)
        .expect("every split admits at least the hyperelliptic-trivial pair")
}

/// Maximum realizable degree for a genus, with the split and class that
/// attain it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenusMaximum {
    pub genus: u64,
    pub degree: u64,
    pub split: (u64, u64),
    pub witness: RootClass,
}

/// Maximum of [`max_root_degree`] over all splits `g1 + g2 = g` with
/// `g1 >= g2 >= 1`. Ties keep the split with the smaller `g1` and the
/// canonically first class.
pub fn max_degree_for_genus(genus: u64) -> GenusMaximum {
    assert!(
        genus >= 2,
        "a separating curve needs total genus at least 2"
    );
    let mut best: Option<GenusMaximum> = None;
    for g1 in genus.div_ceil(2)..=genus - 1 {
        let g2 = genus - g1;
        let classes = enumerate_root_classes(g1, g2);
        let degree = classes.last().expect("split has classes").degree();
        let witness = classes
            .iter()
            .find(|c| c.degree() == degree)
            .expect("max degree came from this list")
            .clone();
        if best.as_ref().is_none_or(|b| degree > b.degree) {
            best = Some(GenusMaximum {
                genus,
                degree,
                split: (g1, g2),
                witness,
            });
        }
    }
    best.expect("genus >= 2 has at least one split")
}

/// Constructs a root class of degree exactly `lcm(4*g1, 4*g2 + 2)`, which
/// exists for every pair of side genera. The first side is a degree-`4*g1`
/// data set `(4g1, 0, a1; (1, 2), (c, 4g1))` with `c` read off the
/// congruence, the second a degree-`4*g2 + 2` data set
/// `(4g2+2, 0, a2; (1, 2), (a2*g2 mod (2g2+1), 2g2+1))`; the unit residues
/// `a1`, `a2` are found by exhaustive search, ascending, first match wins.
///
/// The arguments may come in either order; the returned class stores the
/// larger-genus side first as usual.
pub fn witness_pair(g1: u64, g2: u64) -> Result<RootClass, Error> {
    assert!(g1 >= 1 && g2 >= 1);
    let n1 = 4 * g1;
    let n2 = 4 * g2 + 2;
    let odd_order = 2 * g2 + 1;

    let second_sides: Vec<(DataSet, u64)> = (1..=n2)
        .filter(|&a2| gcd(a2, n2) == 1)
        .map(|a2| {
            let cone = (a2 % odd_order) * (g2 % odd_order) % odd_order;
            let d2 = DataSet::new(n2, 0, a2, &[(1, 2), (cone, odd_order)])
                .expect("witness shape for the 4g+2 side must validate");
            debug_assert_eq!(d2.genus(), g2);
            (d2, inverse_mod(a2, n2))
        })
        .collect();

    for a1 in (1..=n1).filter(|&a1| gcd(a1, n1) == 1) {
        // a1 is a unit modulo the even n1, hence odd, so the order-2 cone
        // carries residue 1 and the last cone is forced by the congruence.
        let forced = crate::arith::least_positive(-(a1 as i64) - 2 * g1 as i64, n1);
        if gcd(forced, n1) != 1 {
            continue;
        }
        let d1 = DataSet::new(n1, 0, a1, &[(1, 2), (forced, n1)])
            .expect("witness shape for the 4g side must validate");
        debug_assert_eq!(d1.genus(), g1);
        let k1 = inverse_mod(a1, n1);
        for (d2, k2) in &second_sides {
            if congruence_holds(n1, k1, n2, *k2) {
                let class = RootClass::new(d1.clone(), d2.clone()).expect("congruence was checked");
                debug_assert_eq!(class.degree(), lcm(n1, n2));
                return Ok(class);
            }
        }
    }
    Err(Error::WitnessSearchFailed { g1, g2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data_set::DataSet;

    fn d(n: u64, gt: u64, a: u64, cones: &[(u64, u64)]) -> DataSet {
        DataSet::new(n, gt, a, cones).unwrap()
    }

    fn d612() -> DataSet {
        d(6, 0, 5, &[(1, 2), (2, 3)])
    }

    fn d411() -> DataSet {
        d(4, 0, 1, &[(1, 2), (1, 4)])
    }

    fn d211() -> DataSet {
        d(2, 0, 1, &[(1, 2), (1, 2), (1, 2)])
    }

    #[test]
    fn compatibility_examples() {
        assert!(is_compatible_pair(&d612(), &d411()));
        assert!(!is_compatible_pair(&d211(), &d211()));
        assert!(is_compatible_pair(&d(3, 0, 2, &[(2, 3), (2, 3)]), &d211()));
    }

    #[test]
    fn trivial_partner_requires_residue_one() {
        let trivial = DataSet::trivial(1);
        assert!(is_compatible_pair(&d411(), &trivial));
        assert!(!is_compatible_pair(&d612(), &trivial));
        assert!(is_compatible_pair(&trivial, &DataSet::trivial(2)));
    }

    #[test]
    fn compatibility_is_symmetric() {
        let sets = [d612(), d411(), d211(), DataSet::trivial(1)];
        for a in &sets {
            for b in &sets {
                assert_eq!(is_compatible_pair(a, b), is_compatible_pair(b, a));
            }
        }
    }

    #[test]
    fn pair_degree_examples() {
        assert_eq!(pair_degree(&d612(), &d411()).unwrap(), 12);
        assert_eq!(pair_degree(&d211(), &DataSet::trivial(1)).unwrap(), 2);
        let d823 = d(8, 0, 7, &[(1, 2), (5, 8)]);
        let d611 = d(6, 0, 1, &[(1, 2), (1, 3)]);
        assert_eq!(pair_degree(&d823, &d611).unwrap(), 24);
        assert!(pair_degree(&d211(), &d211()).is_err());
    }

    #[test]
    fn genus_two_classification_counts() {
        let classes = enumerate_root_classes(1, 1);
        assert_eq!(classes.len(), 10);
        let mut counts = std::collections::BTreeMap::new();
        for class in &classes {
            *counts.entry(class.degree()).or_insert(0u32) += 1;
        }
        let expected: std::collections::BTreeMap<u64, u32> =
            [(2, 1), (3, 2), (4, 2), (6, 3), (12, 2)]
                .into_iter()
                .collect();
        assert_eq!(counts, expected);
    }

    #[test]
    fn genus_two_contains_self_paired_class() {
        let classes = enumerate_root_classes(1, 1);
        let d312 = d(3, 0, 2, &[(2, 3), (2, 3)]);
        let self_pair = RootClass::new(d312.clone(), d312).unwrap();
        assert!(classes.contains(&self_pair));
    }

    #[test]
    fn max_degree_examples() {
        assert_eq!(max_root_degree(1, 1), 12);
        assert_eq!(max_root_degree(2, 1), 30);
        let m = max_degree_for_genus(2);
        assert_eq!(m.degree, 12);
        assert_eq!(m.split, (1, 1));
    }

    #[test]
    fn witness_small_cases() {
        let w = witness_pair(1, 1).unwrap();
        assert_eq!(w.degree(), 12);
        let w = witness_pair(2, 1).unwrap();
        assert_eq!(w.degree(), 24);
        assert_eq!(*w.first(), d(8, 0, 7, &[(1, 2), (5, 8)]));
        assert_eq!(*w.second(), d(6, 0, 1, &[(1, 2), (1, 3)]));
        // arguments in either order give the same degree
        let w = witness_pair(1, 2).unwrap();
        assert_eq!(w.degree(), lcm(4, 10));
    }

    #[test]
    fn equal_split_witness_degree_formula() {
        // lcm(4g, 4g+2) = 2G^2 + 2G for total genus G = 2g
        for g in 1..=6u64 {
            let witness = witness_pair(g, g).unwrap();
            let total = 2 * g;
            assert_eq!(witness.degree(), 2 * total * total + 2 * total);
        }
    }

    #[test]
    fn root_class_orientation() {
        // constructed with the genus-1 side first; the class stores the
        // genus-2 side as d1
        let genus2_side = d(10, 0, 7, &[(1, 2), (4, 5)]);
        let class = RootClass::new(d(4, 0, 3, &[(1, 2), (3, 4)]), genus2_side).unwrap();
        assert_eq!(class.genus_first(), 2);
        assert_eq!(class.first().degree(), 10);
        assert_eq!(class.total_genus(), 3);
        let json = serde_json::to_value(&class).unwrap();
        assert_eq!(json["degree"], 20);
        assert_eq!(json["g1"], 2);
        assert_eq!(json["d1"]["n"], 10);
    }

    #[test]
    fn degree_one_pair_is_omitted_from_enumeration() {
        let classes = enumerate_root_classes(1, 1);
        assert!(classes.iter().all(|c| c.degree() >= 2));
        // but the congruence itself holds trivially modulo 1
        assert!(is_compatible_pair(
            &DataSet::trivial(1),
            &DataSet::trivial(1)
        ));
    }
}
