//! Euler-operator form of the series tail.
//!
//! The operator t d/dt multiplies the t^k coefficient by k, so an affine
//! factor (t d/dt + c) maps a_k to (k + c) a_k and a product of factors
//! applied to the geometric series 1/(1-t) has closed coefficients. The
//! series-defining operator here is
//!
//! ```text
//! D = 2 C(2n+2, 4) (td/dt + 1)...(td/dt + 2n-1) / (2n-1)!
//!   -              (td/dt + 3)...(td/dt + 2n+1) / (2n-1)!
//! ```
//!
//! of order 2n - 1, whose t^k coefficient against 1/(1-t) is
//! 2 C(2n+2,4) C(2n+k-1, 2n-1) - C(2n+k+1, 2n-1).

use crate::algebra::{binomial, factorial, rat, Int, Rational};

/// One product term: scalar * prod_j (t d/dt + shifts[j]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerTerm {
    pub scalar: Rational,
    pub shifts: Vec<Rational>,
}

/// A sum of scaled products of affine Euler factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerOperator {
    pub terms: Vec<EulerTerm>,
}

impl EulerOperator {
    /// Coefficients of D(1/(1-t)) up to t^K, computed termwise:
    /// a_k = sum over terms of scalar * prod_j (k + c_j).
    pub fn apply_to_geometric(&self, k_max: usize) -> Vec<Rational> {
        (0..=k_max)
            .map(|k| {
                self.terms
                    .iter()
                    .map(|term| {
                        term.shifts.iter().fold(term.scalar.clone(), |acc, c| {
                            acc * (rat(k as i64) + c)
                        })
                    })
                    .sum()
            })
            .collect()
    }

    /// The series-defining operator for half-dimension n (order 2n - 1).
    pub fn series_operator(n: usize) -> EulerOperator {
        let fact = Rational::from_integer(factorial((2 * n - 1) as u64));
        let lead = Rational::from_integer(Int::from(2) * binomial((2 * n + 2) as u64, 4));
        EulerOperator {
            terms: vec![
                EulerTerm {
                    scalar: lead / fact.clone(),
                    shifts: (1..=2 * n as i64 - 1).map(rat).collect(),
                },
                EulerTerm {
                    scalar: rat(-1) / fact,
                    shifts: (3..=2 * n as i64 + 1).map(rat).collect(),
                },
            ],
        }
    }
}

/// Free-function form of the application, matching the operation name
/// used elsewhere in the crate.
pub fn euler_operator_apply(op: &EulerOperator, k_max: usize) -> Vec<Rational> {
    op.apply_to_geometric(k_max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn plain_euler_factor() {
        // D = t d/dt: coefficient of t^3 is 3
        let d = EulerOperator {
            terms: vec![EulerTerm {
                scalar: rat(1),
                shifts: vec![rat(0)],
            }],
        };
        let coeffs = euler_operator_apply(&d, 5);
        assert_eq!(coeffs[3], rat(3));
    }

    #[test]
    fn binomial_product_factor() {
        // (td/dt + 1)(td/dt + 2)/2! has coefficients C(k+2, 2)
        let d = EulerOperator {
            terms: vec![EulerTerm {
                scalar: crate::algebra::ratio(1, 2),
                shifts: vec![rat(1), rat(2)],
            }],
        };
        let coeffs = euler_operator_apply(&d, 10);
        for (k, c) in coeffs.iter().enumerate() {
            assert_eq!(
                c,
                &Rational::from_integer(binomial((k + 2) as u64, 2)),
                "k = {k}"
            );
        }
    }

    #[test]
    fn series_operator_matches_binomials() {
        for n in 1..=4usize {
            let d = EulerOperator::series_operator(n);
            let coeffs = euler_operator_apply(&d, 20);
            for (k, c) in coeffs.iter().enumerate() {
                let expect = Int::from(2) * binomial((2 * n + 2) as u64, 4)
                    * binomial((2 * n + k - 1) as u64, (2 * n - 1) as i64)
                    - binomial((2 * n + k + 1) as u64, (2 * n - 1) as i64);
                assert!(c.is_integer(), "operator coefficients are integral");
                assert_eq!(c.to_integer(), expect, "n = {n}, k = {k}");
                let _ = expect.to_i64();
            }
        }
    }
}
