//! Residue arithmetic shared by the data-set modules.

pub use num_integer::{gcd, lcm};

/// Extended Euclid: returns `(d, s, t)` with `d = gcd(a, b)` and
/// `a*s + b*t = d`.
fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1, 0);
    let (mut old_t, mut t) = (0, 1);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    (old_r, old_s, old_t)
}

/// Inverse of `a` modulo `n`, as the least positive representative in
/// `[1, n]`. Returns 1 when `n = 1`.
///
/// Panics if `gcd(a, n) != 1`; callers are expected to pass units only.
pub fn inverse_mod(a: u64, n: u64) -> u64 {
    assert!(n >= 1, "modulus must be positive");
    if n == 1 {
        return 1;
    }
    let (d, s, _) = egcd(a as i128, n as i128);
    assert!(d == 1, "{a} is not a unit modulo {n}");
    let k = s.rem_euclid(n as i128) as u64;
    if k == 0 {
        n
    } else {
        k
    }
}

/// Least positive representative in `[1, m]` of the residue class of `v`
/// modulo `m` (so the class of 0 is represented by `m` itself).
pub fn least_positive(v: i64, m: u64) -> u64 {
    assert!(m >= 1, "modulus must be positive");
    let r = v.rem_euclid(m as i64) as u64;
    if r == 0 {
        m
    } else {
        r
    }
}
