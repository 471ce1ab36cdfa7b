//! Randomized property suites, each running 1000+ cases.
//!
//! The valid-data-set pool is drawn from full enumerations for small
//! genera, so the generators cover every shape that actually occurs.

use once_cell::sync::Lazy;
use proptest::prelude::*;

use twist_roots::arith::least_positive;
use twist_roots::data_set::{validate, Candidate, DataSet, Fraction};
use twist_roots::{enumerate_data_sets, enumerate_for_genus, is_compatible_pair, EnumerationQuery};

static POOL: Lazy<Vec<DataSet>> = Lazy::new(|| {
    let mut pool = Vec::new();
    for genus in 1..=5 {
        for sets in enumerate_for_genus(genus).into_values() {
            pool.extend(sets);
        }
    }
    pool
});

static WIDE_POOLS: Lazy<Vec<rayon::ThreadPool>> = Lazy::new(|| {
    [1, 2, 4]
        .into_iter()
        .map(|width| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(width)
                .build()
                .expect("pool builds")
        })
        .collect()
});

fn pooled_set() -> impl Strategy<Value = DataSet> {
    any::<prop::sample::Index>().prop_map(|index| POOL[index.index(POOL.len())].clone())
}

fn raw_candidate() -> impl Strategy<Value = Candidate> {
    (
        0u64..40,
        0u64..6,
        0u64..60,
        prop::collection::vec((0u64..40, 0u64..20), 0..6),
    )
        .prop_map(|(n, gt, a, cones)| Candidate { n, gt, a, cones })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1200))]

    // a is determined by the cones: a = -sum((n/x) c) mod n
    #[test]
    fn residue_reconstructs_from_cones(set in pooled_set()) {
        let weighted: u64 = set
            .cones()
            .iter()
            .map(|c| (set.degree() / c.order()) * c.residue() % set.degree())
            .sum();
        let expected = least_positive(-((weighted % set.degree()) as i64), set.degree());
        prop_assert_eq!(set.residue(), expected);
    }

    // canonical form is idempotent and insensitive to cone order, and the
    // genus is a function of the unordered tuple
    #[test]
    fn canonical_form_is_idempotent_and_order_free(
        set in pooled_set(),
        seed in any::<u64>(),
    ) {
        let canonical = DataSet::from_candidate(&set.candidate()).unwrap();
        prop_assert_eq!(&canonical, &set);

        let mut candidate = set.candidate();
        let len = candidate.cones.len();
        if len > 1 {
            // cheap deterministic shuffle
            let mut state = seed | 1;
            for i in (1..len).rev() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                candidate.cones.swap(i, (state >> 33) as usize % (i + 1));
            }
        }
        let reordered = DataSet::from_candidate(&candidate).unwrap();
        prop_assert_eq!(&reordered, &set);
        prop_assert_eq!(reordered.genus(), set.genus());
    }

    #[test]
    fn compatibility_is_symmetric(a in pooled_set(), b in pooled_set()) {
        prop_assert_eq!(is_compatible_pair(&a, &b), is_compatible_pair(&b, &a));
    }

    // the congruence holds iff the turning fractions add to 1/n modulo 1
    #[test]
    fn congruence_matches_turning_fraction_sum(a in pooled_set(), b in pooled_set()) {
        let n = twist_roots::arith::lcm(a.degree(), b.degree());
        let sum = a.turning_fraction() + b.turning_fraction();
        let sum_mod_1 = if sum >= Fraction::from_integer(1) {
            sum - Fraction::from_integer(1)
        } else {
            sum
        };
        let expected = if n == 1 {
            Fraction::from_integer(0)
        } else {
            Fraction::new(1, n)
        };
        prop_assert_eq!(is_compatible_pair(&a, &b), sum_mod_1 == expected);
    }

    #[test]
    fn turning_fraction_is_reduced_and_divides_degree(set in pooled_set()) {
        let fraction = set.turning_fraction();
        prop_assert_eq!(set.degree() % fraction.denom(), 0);
        if *fraction.numer() > 0 {
            prop_assert_eq!(twist_roots::arith::gcd(*fraction.numer(), *fraction.denom()), 1);
        }
        prop_assert!(fraction < Fraction::from_integer(1));
    }

    // validation never panics on arbitrary tuples and agrees with
    // conversion
    #[test]
    fn validate_never_panics_and_gates_conversion(candidate in raw_candidate()) {
        let report = validate(&candidate);
        let converted = DataSet::from_candidate(&candidate);
        prop_assert_eq!(report.overall(), converted.is_ok());
        if let Ok(set) = converted {
            prop_assert_eq!(set.candidate().cones.len(), candidate.cones.len());
        }
    }

    // enumeration output does not depend on the parallel schedule
    #[test]
    fn enumeration_is_schedule_independent(degree in 1u64..=14, genus in 1u64..=4) {
        let query = EnumerationQuery::new(degree, genus);
        let runs: Vec<_> = WIDE_POOLS
            .iter()
            .map(|pool| pool.install(|| enumerate_data_sets(query)))
            .collect();
        prop_assert_eq!(&runs[0], &runs[1]);
        prop_assert_eq!(&runs[0], &runs[2]);
    }
}

proptest! {
    // pair enumeration is heavier per case; still 1000+ cases across the
    // cartesian strategy
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn root_classes_are_schedule_independent(g1 in 1u64..=3, g2 in 1u64..=3) {
        let (g1, g2) = if g1 >= g2 { (g1, g2) } else { (g2, g1) };
        let runs: Vec<_> = WIDE_POOLS
            .iter()
            .map(|pool| pool.install(|| twist_roots::enumerate_root_classes(g1, g2)))
            .collect();
        prop_assert_eq!(&runs[0], &runs[1]);
        prop_assert_eq!(&runs[0], &runs[2]);
    }
}
