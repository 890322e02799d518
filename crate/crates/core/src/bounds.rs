//! Bound arithmetic for the upper and lower estimates on `L(T, G)`.
//!
//! Lower bounds are exact rationals. Upper bounds involve `log2 n`; they are
//! evaluated in `f64` with a guard band of a few ulps and decided exactly
//! (with big integers) whenever a value falls inside the band and the
//! numbers are small enough to do so.

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{One, Pow};

/// Outcome of comparing an integer against an irrational bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Violated,
    /// Inside the rounding guard band and too large to decide exactly.
    Indeterminate,
}

impl Verdict {
    /// Only violations beyond the uncertainty interval count as failures.
    pub fn ok(self) -> bool {
        self != Verdict::Violated
    }
}

const GUARD_ULPS: f64 = 4.0;
const EXACT_BITS_LIMIT: f64 = (1u64 << 22) as f64;

/// Decides `lhs <= coeff * log2(n)`.
pub fn le_coeff_log2(lhs: u64, coeff: u64, n: u64) -> Verdict {
    assert!(n >= 1);
    if n == 1 {
        return if lhs == 0 {
            Verdict::Holds
        } else {
            Verdict::Violated
        };
    }
    if n.is_power_of_two() {
        let k = u64::from(n.trailing_zeros());
        return if u128::from(lhs) <= u128::from(coeff) * u128::from(k) {
            Verdict::Holds
        } else {
            Verdict::Violated
        };
    }
    let bound = coeff as f64 * libm::log2(n as f64);
    let slack = GUARD_ULPS * f64::EPSILON * bound.abs() + GUARD_ULPS * f64::EPSILON;
    let l = lhs as f64;
    if l <= bound - slack {
        return Verdict::Holds;
    }
    if l > bound + slack {
        return Verdict::Violated;
    }
    // 2^lhs <= n^coeff, decided with big integers when affordable.
    if l > EXACT_BITS_LIMIT || bound > EXACT_BITS_LIMIT {
        return Verdict::Indeterminate;
    }
    let left = BigUint::one() << (lhs as usize);
    let right: BigUint = Pow::pow(BigUint::from(n), coeff);
    if left <= right {
        Verdict::Holds
    } else {
        Verdict::Violated
    }
}

/// `L <= 10 n^2 log2 n`.
pub fn upper_total(l_total: u64, n: u64) -> Verdict {
    le_coeff_log2(l_total, 10 * n * n, n)
}

/// `L / (n - 1)^2 <= 40 log2 n`, i.e. `L <= 40 (n - 1)^2 log2 n`.
pub fn upper_average(l_total: u64, n: u64) -> Verdict {
    assert!(n >= 2);
    le_coeff_log2(l_total, 40 * (n - 1) * (n - 1), n)
}

/// `floor(log5 n)` for `n >= 1`.
pub fn floor_log5(n: u64) -> u32 {
    assert!(n >= 1);
    let mut k = 0;
    let mut p = 5u64;
    while p <= n {
        k += 1;
        match p.checked_mul(5) {
            Some(q) => p = q,
            None => break,
        }
    }
    k
}

/// Largest power of five not exceeding `n`.
pub fn largest_power_of_5(n: u64) -> u64 {
    5u64.pow(floor_log5(n))
}

pub fn is_power_of_5(n: u64) -> bool {
    n >= 1 && largest_power_of_5(n) == n
}

/// `(2/25) n^2 log5 n` for `n` a power of five.
pub fn lemma_bound(n: u64) -> Option<Ratio<u64>> {
    is_power_of_5(n).then(|| Ratio::new(2 * n * n * u64::from(floor_log5(n)), 25))
}

/// `(2/625) n^2 floor(log5 n)`, valid for every `n`.
pub fn theorem_bound(n: u64) -> Ratio<u64> {
    Ratio::new(2 * n * n * u64::from(floor_log5(n)), 625)
}

/// `(2/625) floor(log5 n)`, the lower bound on the average cycle length.
pub fn average_lower_bound(n: u64) -> Ratio<u64> {
    Ratio::new(2 * u64::from(floor_log5(n)), 625)
}

/// `value >= bound`, exactly.
pub fn ge_ratio(value: u64, bound: Ratio<u64>) -> bool {
    u128::from(value) * u128::from(*bound.denom()) >= u128::from(*bound.numer())
}

/// `num/den >= bound`, exactly.
pub fn ratio_ge(value: Ratio<u64>, bound: Ratio<u64>) -> bool {
    u128::from(*value.numer()) * u128::from(*bound.denom())
        >= u128::from(*bound.numer()) * u128::from(*value.denom())
}

/// `value - bound` as a float, for reports.
pub fn margin(value: u64, bound: Ratio<u64>) -> f64 {
    value as f64 - *bound.numer() as f64 / *bound.denom() as f64
}
