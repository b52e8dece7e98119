//! Big-integer binomial coefficients.

use super::Int;
use num_traits::{One, Zero};

/// Binomial coefficient C(a, b) as a big integer.
///
/// Out-of-range `b` (negative or larger than `a`) gives 0, which is the
/// convention every dimension formula in this crate relies on.
pub fn binomial(a: u64, b: i64) -> Int {
    if b < 0 || b as u64 > a {
        return Int::zero();
    }
    let b = (b as u64).min(a - b as u64);
    let mut res = Int::one();
    for i in 0..b {
        res = res * Int::from(a - i) / Int::from(i + 1);
    }
    res
}

/// `m!` as a big integer.
pub fn factorial(m: u64) -> Int {
    let mut res = Int::one();
    for i in 2..=m {
        res *= Int::from(i);
    }
    res
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(binomial(6, 3), Int::from(20));
        assert_eq!(binomial(5, 0), Int::from(1));
        assert_eq!(binomial(4, 7), Int::from(0));
        assert_eq!(binomial(4, -1), Int::from(0));
        assert_eq!(binomial(0, 0), Int::from(1));
    }

    #[test]
    fn pascal_recurrence_up_to_40() {
        for a in 1..=40u64 {
            for b in 0..=a as i64 {
                assert_eq!(
                    binomial(a, b),
                    binomial(a - 1, b - 1) + binomial(a - 1, b),
                    "pascal fails at ({a},{b})"
                );
            }
        }
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), Int::from(1));
        assert_eq!(factorial(5), Int::from(120));
    }
}
