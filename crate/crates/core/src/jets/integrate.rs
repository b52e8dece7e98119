//! Recovering a polynomial from its full second-derivative family.
//!
//! Given a symmetric family f_kl of homogeneous degree-s polynomials with
//! f_{ij,k} = f_{kj,i}, there is a unique homogeneous u of degree s + 2
//! with u_{,kl} = f_kl; homogeneity forces every lower-degree integration
//! constant to zero. Construction: u = (sum_{k,l} x^k x^l f_kl) / ((s+1)(s+2)),
//! which Euler's identity turns back into the prescribed derivatives.

use std::collections::BTreeMap;

use crate::algebra::{rat, HomogeneousPolynomial};
use crate::error::Error;
use crate::jets::TensorComponent;
use crate::Result;

/// Symmetric family {f_ij} of homogeneous polynomials of one degree,
/// keyed on the sorted pair so symmetry holds structurally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricPolyFamily {
    n: usize,
    degree: usize,
    entries: BTreeMap<(usize, usize), HomogeneousPolynomial>,
}

impl SymmetricPolyFamily {
    pub fn zero(n: usize, degree: usize) -> Self {
        SymmetricPolyFamily {
            n,
            degree,
            entries: BTreeMap::new(),
        }
    }

    pub fn half_dim(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn set(&mut self, i: usize, j: usize, p: HomogeneousPolynomial) {
        assert!(i >= 1 && i <= 2 * self.n && j >= 1 && j <= 2 * self.n);
        assert_eq!(p.half_dim(), self.n);
        let key = if i <= j { (i, j) } else { (j, i) };
        if p.is_zero() {
            self.entries.remove(&key);
        } else {
            assert_eq!(p.degree(), self.degree);
            self.entries.insert(key, p);
        }
    }

    pub fn get(&self, i: usize, j: usize) -> HomogeneousPolynomial {
        let key = if i <= j { (i, j) } else { (j, i) };
        self.entries
            .get(&key)
            .cloned()
            .unwrap_or_else(|| HomogeneousPolynomial::zero(self.n, self.degree))
    }
}

/// The unique homogeneous u of degree s + 2 with u_{,kl} = f_kl, or the
/// first integrability violation f_{ij,k} != f_{kj,i} in lexicographic
/// (i, j, k) order.
pub fn integrate_mixed(family: &SymmetricPolyFamily) -> Result<HomogeneousPolynomial> {
    let n = family.half_dim();
    let s = family.degree();

    // integrability: swapping the differentiated index with the first
    // lower index must not change anything
    for i in 1..=2 * n {
        for j in 1..=2 * n {
            for k in i + 1..=2 * n {
                if family.get(i, j).partial(k) != family.get(k, j).partial(i) {
                    return Err(Error::NotIntegrable { i, j, k });
                }
            }
        }
    }

    let mut acc = HomogeneousPolynomial::zero(n, s + 2);
    for k in 1..=2 * n {
        for l in 1..=2 * n {
            acc = &acc + &family.get(k, l).mul_var(k).mul_var(l);
        }
    }
    let u = acc.scale(&(rat(1) / rat(((s + 1) * (s + 2)) as i64)));

    debug_assert!({
        (1..=2 * n).all(|k| (1..=2 * n).all(|l| u.partial(k).partial(l) == family.get(k, l)))
    });
    Ok(u)
}

/// Solve d_i d_j U^l = component^l_ij for all upper indices at once.
/// Used to express the next field component of a stabilizer solution from
/// the lower ones.
pub fn solve_hessian(component: &TensorComponent) -> Result<Vec<HomogeneousPolynomial>> {
    let n = component.half_dim();
    (1..=2 * n)
        .map(|l| {
            let mut fam = SymmetricPolyFamily::zero(n, component.degree());
            for i in 1..=2 * n {
                for j in i..=2 * n {
                    fam.set(i, j, component.entry_poly(l, i, j));
                }
            }
            integrate_mixed(&fam)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Monomial;

    fn x(n: usize, i: usize) -> HomogeneousPolynomial {
        HomogeneousPolynomial::term(n, Monomial::var(2 * n, i), rat(1))
    }

    #[test]
    fn constant_family() {
        // f11 = 2, rest 0  ->  u = (x1)^2
        let mut fam = SymmetricPolyFamily::zero(1, 0);
        fam.set(1, 1, HomogeneousPolynomial::term(1, Monomial::one(2), rat(2)));
        let u = integrate_mixed(&fam).unwrap();
        assert_eq!(u, &x(1, 1) * &x(1, 1));
    }

    #[test]
    fn degree_one_family() {
        // f11 = x2, f12 = x1, f22 = 0  ->  u = (x1)^2 x2 / 2
        let mut fam = SymmetricPolyFamily::zero(1, 1);
        fam.set(1, 1, x(1, 2));
        fam.set(1, 2, x(1, 1));
        let u = integrate_mixed(&fam).unwrap();
        let expect = (&(&x(1, 1) * &x(1, 1)) * &x(1, 2)).scale(&crate::algebra::ratio(1, 2));
        assert_eq!(u, expect);
    }

    #[test]
    fn integrability_violation_is_reported() {
        // f11 = x2, f12 = 0: f_{11,2} = 1 but f_{21,1} = 0
        let mut fam = SymmetricPolyFamily::zero(1, 1);
        fam.set(1, 1, x(1, 2));
        match integrate_mixed(&fam) {
            Err(Error::NotIntegrable { i: 1, j: 1, k: 2 }) => {}
            other => panic!("expected NotIntegrable(1,1,2), got {other:?}"),
        }
    }
}
