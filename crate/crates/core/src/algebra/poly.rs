//! Homogeneous polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::{Monomial, Rational};

/// A homogeneous polynomial of fixed degree in 2n variables.
///
/// Invariants: every stored monomial has degree equal to `degree`, and no
/// zero coefficient is ever stored, so equality of maps is equality of
/// polynomials.
#[derive(Clone, PartialEq, Eq)]
pub struct HomogeneousPolynomial {
    n: usize,
    degree: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl HomogeneousPolynomial {
    pub fn zero(n: usize, degree: usize) -> Self {
        HomogeneousPolynomial {
            n,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Single term `c * mu`.
    pub fn term(n: usize, mu: Monomial, c: Rational) -> Self {
        assert_eq!(mu.nvars(), 2 * n, "monomial variable count");
        let mut p = HomogeneousPolynomial::zero(n, mu.degree());
        p.add_term(mu, c);
        p
    }

    /// Half-dimension n; the polynomial lives in 2n variables.
    pub fn half_dim(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        2 * self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `mu` (zero if absent).
    pub fn coeff(&self, mu: &Monomial) -> Rational {
        self.terms.get(mu).cloned().unwrap_or_else(Rational::zero)
    }

    /// Accumulate `c` onto the coefficient of `mu`, dropping zeros.
    pub fn add_term(&mut self, mu: Monomial, c: Rational) {
        assert_eq!(mu.degree(), self.degree, "degree of added monomial");
        assert_eq!(mu.nvars(), 2 * self.n);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(mu);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Partial derivative with respect to x^i (1-based). Degree drops by
    /// one; the derivative of a degree-0 polynomial is the zero polynomial
    /// of degree 0.
    pub fn partial(&self, i: usize) -> HomogeneousPolynomial {
        assert!(i >= 1 && i <= 2 * self.n, "variable index out of range");
        let out_degree = self.degree.saturating_sub(1);
        let mut out = HomogeneousPolynomial::zero(self.n, out_degree);
        for (mu, c) in &self.terms {
            if let Some(reduced) = mu.div_var(i) {
                out.add_term(reduced, c * Rational::from_integer(mu.exp(i).into()));
            }
        }
        out
    }

    pub fn scale(&self, a: &Rational) -> HomogeneousPolynomial {
        if a.is_zero() {
            return HomogeneousPolynomial::zero(self.n, self.degree);
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.clone() * a;
        }
        out
    }

    /// Euler degree check helper: sum_i x^i d_i p = degree * p.
    pub fn euler(&self) -> HomogeneousPolynomial {
        let mut acc = HomogeneousPolynomial::zero(self.n, self.degree);
        for i in 1..=2 * self.n {
            acc = &acc + &self.partial(i).mul_var(i);
        }
        acc
    }

    /// Multiply by the variable x^i (1-based); degree rises by one.
    pub fn mul_var(&self, i: usize) -> HomogeneousPolynomial {
        let mut out = HomogeneousPolynomial::zero(self.n, self.degree + 1);
        for (mu, c) in &self.terms {
            out.add_term(mu.times_var(i), c.clone());
        }
        out
    }
}

impl Add for &HomogeneousPolynomial {
    type Output = HomogeneousPolynomial;
    fn add(self, rhs: &HomogeneousPolynomial) -> HomogeneousPolynomial {
        assert_eq!(self.n, rhs.n);
        if self.is_zero() {
            let mut out = rhs.clone();
            out.degree = if rhs.is_zero() { self.degree } else { rhs.degree };
            return out;
        }
        if rhs.is_zero() {
            return self.clone();
        }
        assert_eq!(self.degree, rhs.degree, "adding different degrees");
        let mut out = self.clone();
        for (mu, c) in &rhs.terms {
            out.add_term(mu.clone(), c.clone());
        }
        out
    }
}

impl Sub for &HomogeneousPolynomial {
    type Output = HomogeneousPolynomial;
    fn sub(self, rhs: &HomogeneousPolynomial) -> HomogeneousPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &HomogeneousPolynomial {
    type Output = HomogeneousPolynomial;
    fn neg(self) -> HomogeneousPolynomial {
        self.scale(&super::rat(-1))
    }
}

impl Mul for &HomogeneousPolynomial {
    type Output = HomogeneousPolynomial;
    fn mul(self, rhs: &HomogeneousPolynomial) -> HomogeneousPolynomial {
        assert_eq!(self.n, rhs.n);
        let mut out = HomogeneousPolynomial::zero(self.n, self.degree + rhs.degree);
        for (mu, c) in &self.terms {
            for (nu, d) in &rhs.terms {
                out.add_term(mu.mul(nu), c * d);
            }
        }
        out
    }
}

impl fmt::Debug for HomogeneousPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("{c}*[{m}]"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn x(n: usize, i: usize) -> HomogeneousPolynomial {
        HomogeneousPolynomial::term(n, Monomial::var(2 * n, i), rat(1))
    }

    #[test]
    fn partial_examples() {
        // d/dx1 (x1)^2 = 2 x1
        let sq = &x(1, 1) * &x(1, 1);
        assert_eq!(sq.partial(1), x(1, 1).scale(&rat(2)));
        // d/dx2 (x1 x2) = x1
        let xy = &x(1, 1) * &x(1, 2);
        assert_eq!(xy.partial(2), x(1, 1));
        // d/dx1 (x2)^3 = 0
        let y3 = &(&x(1, 2) * &x(1, 2)) * &x(1, 2);
        assert!(y3.partial(1).is_zero());
    }

    #[test]
    fn euler_identity() {
        let p = &(&x(2, 1) * &x(2, 3)) + &(&x(2, 2) * &x(2, 2)).scale(&rat(5));
        assert_eq!(p.euler(), p.scale(&rat(2)));
    }
}
