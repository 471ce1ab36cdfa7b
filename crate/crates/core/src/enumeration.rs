//! Exhaustive enumeration of data sets by degree and genus.
//!
//! Inverting the genus formula, a data set of degree `n > 1` and genus `g`
//! with quotient genus `gt` has cone weights `(n/x)(x - 1)` summing to
//! exactly `W = 2g - 1 + n - 2*gt*n`, and every weight is at least `n/2`.
//! The search walks `gt` upward while `W >= n/2`, backtracks over
//! multisets of divisors `x > 1` of `n` whose weights sum to `W` and whose
//! lcm is `n` (multisets with smaller lcm admit no valid `a`), assigns
//! unit residues per cone without generating reordered duplicates, and
//! reads `a` off the congruence; the only remaining filter is
//! `gcd(a, n) = 1`.
//!
//! [`oracle_enumerate`] answers the same queries by brute force with no
//! pruning and no shared search code, as an independent cross-check.

use std::collections::BTreeMap;

use itertools::Itertools;
use rayon::prelude::*;

use crate::arith::{gcd, lcm};
use crate::data_set::{Candidate, DataSet};

/// A degree-and-genus query. Degrees above `4g + 2` are allowed and
/// produce empty results, which is how the order bound is demonstrated
/// rather than assumed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationQuery {
    pub degree: u64,
    pub genus: u64,
}

impl EnumerationQuery {
    pub fn new(degree: u64, genus: u64) -> Self {
        assert!(degree >= 1, "degree must be at least 1");
        assert!(genus >= 1, "genus must be at least 1");
        EnumerationQuery { degree, genus }
    }

    /// True when the query lies above the maximum order `4g + 2` of a
    /// finite cyclic action, so the result is known to be empty.
    pub fn exceeds_order_bound(&self) -> bool {
        self.degree > 4 * self.genus + 2
    }
}

/// All data sets with the queried degree and genus, in canonical form,
/// sorted and duplicate-free. Independent `(gt, order-multiset)` cells are
/// expanded in parallel and merged; the final sort makes the output
/// schedule-independent.
pub fn enumerate_data_sets(query: EnumerationQuery) -> Vec<DataSet> {
    let (n, g) = (query.degree, query.genus);
    assert!(n >= 1 && g >= 1);
    if n == 1 {
        return vec![DataSet::trivial(g)];
    }
    let cells = cone_cells(n, g);
    let mut sets: Vec<DataSet> = cells
        .par_iter()
        .map(|cell| expand_cell(n, cell))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    sets.sort();
    debug_assert!(
        sets.windows(2).all(|w| w[0] != w[1]),
        "cells must not overlap"
    );
    sets
}

/// Data sets of genus `g` for every degree `1..=4g+2`, with empty entries
/// retained so that absent degrees stay visible.
pub fn enumerate_for_genus(genus: u64) -> BTreeMap<u64, Vec<DataSet>> {
    assert!(genus >= 1);
    (1..=4 * genus + 2)
        .into_par_iter()
        .map(|degree| {
            (
                degree,
                enumerate_data_sets(EnumerationQuery { degree, genus }),
            )
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

/// One search cell: a quotient genus together with a nondecreasing
/// multiset of cone orders.
struct Cell {
    quotient_genus: u64,
    orders: Vec<u64>,
}

fn cone_cells(n: u64, g: u64) -> Vec<Cell> {
    let divisors: Vec<u64> = (2..=n).filter(|d| n.is_multiple_of(*d)).collect();
    let weights: Vec<i128> = divisors
        .iter()
        .map(|&d| ((n / d) * (d - 1)) as i128)
        .collect();
    // lcm of divisors[i..], for pruning branches that can no longer reach n
    let mut suffix_lcm = vec![1u64; divisors.len() + 1];
    for i in (0..divisors.len()).rev() {
        suffix_lcm[i] = lcm(suffix_lcm[i + 1], divisors[i]);
    }

    let mut cells = Vec::new();
    let mut quotient_genus = 0u64;
    loop {
        let weight_target = 2 * g as i128 - 1 + n as i128 - 2 * quotient_genus as i128 * n as i128;
        if 2 * weight_target < n as i128 {
            break;
        }
        descend(
            n,
            &divisors,
            &weights,
            &suffix_lcm,
            0,
            weight_target,
            1,
            &mut Vec::new(),
            quotient_genus,
            &mut cells,
        );
        quotient_genus += 1;
    }
    cells
}

#[allow(clippy::too_many_arguments)]
fn descend(
    n: u64,
    divisors: &[u64],
    weights: &[i128],
    suffix_lcm: &[u64],
    index: usize,
    remaining: i128,
    lcm_so_far: u64,
    stack: &mut Vec<u64>,
    quotient_genus: u64,
    cells: &mut Vec<Cell>,
) {
    if lcm(lcm_so_far, suffix_lcm[index]) != n {
        return;
    }
    if index == divisors.len() {
        if remaining == 0 {
            cells.push(Cell {
                quotient_genus,
                orders: stack.clone(),
            });
        }
        return;
    }
    let divisor = divisors[index];
    let weight = weights[index];
    let max_copies = (remaining / weight) as usize;
    for copies in 0..=max_copies {
        let next_lcm = if copies == 0 {
            lcm_so_far
        } else {
            lcm(lcm_so_far, divisor)
        };
        stack.extend(std::iter::repeat_n(divisor, copies));
        descend(
            n,
            divisors,
            weights,
            suffix_lcm,
            index + 1,
            remaining - copies as i128 * weight,
            next_lcm,
            stack,
            quotient_genus,
            cells,
        );
        stack.truncate(stack.len() - copies);
    }
}

/// Assigns unit residues to a cell's cone orders. Runs of equal orders get
/// nondecreasing residues, so reordered duplicates are never generated,
/// and `a` is forced by the congruence; candidates survive iff
/// `gcd(a, n) = 1`.
fn expand_cell(n: u64, cell: &Cell) -> Vec<DataSet> {
    let mut runs: Vec<(u64, usize)> = Vec::new();
    for &order in &cell.orders {
        match runs.last_mut() {
            Some((last, count)) if *last == order => *count += 1,
            _ => runs.push((order, 1)),
        }
    }

    let per_run_choices: Vec<Vec<Vec<u64>>> = runs
        .iter()
        .map(|&(order, count)| {
            let units: Vec<u64> = (1..order).filter(|&c| gcd(c, order) == 1).collect();
            units
                .into_iter()
                .combinations_with_replacement(count)
                .collect()
        })
        .collect();

    let mut out = Vec::new();
    for combo in per_run_choices
        .iter()
        .map(|choices| choices.iter())
        .multi_cartesian_product()
    {
        let mut cones: Vec<(u64, u64)> = Vec::with_capacity(cell.orders.len());
        for (run, residues) in runs.iter().zip(combo) {
            for &residue in residues {
                cones.push((residue, run.0));
            }
        }
        let mut sum = 0u128;
        for &(c, x) in &cones {
            sum = (sum + (n / x) as u128 * c as u128) % n as u128;
        }
        let forced_a = if sum == 0 { n } else { n - sum as u64 };
        if gcd(forced_a, n) != 1 {
            continue;
        }
        let data_set = DataSet::from_candidate(&Candidate {
            n,
            gt: cell.quotient_genus,
            a: forced_a,
            cones,
        })
        .expect("enumerated candidate must validate");
        out.push(data_set);
    }
    out
}

/// Brute-force reference enumeration with no pruning: loops over every
/// quotient genus, every residue `a`, every cone count up to the bound
/// from the Euler characteristic, every divisor multiset, and every
/// residue tuple, and tests the data-set conditions and the genus
/// directly. The genus is checked through the rational orbifold Euler
/// characteristic rather than the integer weight formula, so the two
/// enumerations agree on arithmetic only if both are right.
///
/// Intended for small queries (`n <= 12`, `g <= 6` or so); cost grows
/// combinatorially.
pub fn oracle_enumerate(query: EnumerationQuery) -> Vec<DataSet> {
    type Rational = num_rational::Ratio<i128>;

    let (n, g) = (query.degree, query.genus);
    let divisors: Vec<u64> = (2..=n).filter(|d| n.is_multiple_of(*d)).collect();
    let cone_count_max = (2 * (2 * g - 1 + n) / n) as usize;

    let mut found = Vec::new();
    for gt in 0..=g {
        for a in 1..=n {
            for cone_count in 0..=cone_count_max {
                for orders in divisors
                    .iter()
                    .copied()
                    .combinations_with_replacement(cone_count)
                {
                    let assignments: Vec<Vec<u64>> = if orders.is_empty() {
                        vec![Vec::new()]
                    } else {
                        orders
                            .iter()
                            .map(|&x| 1..x)
                            .multi_cartesian_product()
                            .collect()
                    };
                    'assignment: for residues in assignments {
                        let cones: Vec<(u64, u64)> = residues
                            .iter()
                            .copied()
                            .zip(orders.iter().copied())
                            .collect();
                        // skip reorderings of equal-order runs
                        for pair in cones.windows(2) {
                            if pair[0].1 == pair[1].1 && pair[0].0 > pair[1].0 {
                                continue 'assignment;
                            }
                        }
                        if gcd(a, n) != 1 {
                            continue;
                        }
                        if cones.iter().any(|&(c, x)| gcd(c, x) != 1) {
                            continue;
                        }
                        let mut sum = a as u128 % n as u128;
                        for &(c, x) in &cones {
                            sum = (sum + (n / x) as u128 * c as u128) % n as u128;
                        }
                        if sum != 0 {
                            continue;
                        }
                        if n == 1 && (a != 1 || !cones.is_empty()) {
                            continue;
                        }
                        // orbifold Euler characteristic of the quotient
                        let mut rhs = Rational::from_integer(2 - 2 * gt as i128)
                            + (Rational::new(1, n as i128) - Rational::from_integer(1));
                        for &(_, x) in &cones {
                            rhs += Rational::new(1, x as i128) - Rational::from_integer(1);
                        }
                        let lhs = Rational::new(2 - 2 * g as i128, n as i128);
                        if lhs != rhs {
                            continue;
                        }
                        let data_set = DataSet::from_candidate(&Candidate { n, gt, a, cones })
                            .expect("oracle-accepted tuple must validate");
                        found.push(data_set);
                    }
                }
            }
        }
    }
    found.sort();
    found.dedup();
    found
}
