//! Jets of origin-vanishing vector fields and quadratic hamiltonians.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{HomogeneousPolynomial, Monomial, Rational};
use crate::error::Error;
use crate::jets::SymplecticMatrix;
use crate::Result;

/// Graded vector field jet V = V_1 + V_2 + ...; component m holds the 2n
/// coordinate functions of V_m, each homogeneous of degree m. There is no
/// V_0 component, so the field vanishes at the origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorFieldJet {
    n: usize,
    components: BTreeMap<usize, Vec<HomogeneousPolynomial>>,
}

impl VectorFieldJet {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        Ok(VectorFieldJet {
            n,
            components: BTreeMap::new(),
        })
    }

    pub fn half_dim(&self) -> usize {
        self.n
    }

    /// Install component V_m; all 2n entries must be homogeneous of
    /// degree m and m must be at least 1.
    pub fn set_component(&mut self, m: usize, polys: Vec<HomogeneousPolynomial>) {
        assert!(m >= 1, "vector field jets have no degree-0 component");
        assert_eq!(polys.len(), 2 * self.n);
        for p in &polys {
            assert_eq!(p.half_dim(), self.n);
            assert_eq!(p.degree(), m);
        }
        if polys.iter().all(|p| p.is_zero()) {
            self.components.remove(&m);
        } else {
            self.components.insert(m, polys);
        }
    }

    pub fn component(&self, m: usize) -> Option<&[HomogeneousPolynomial]> {
        self.components.get(&m).map(|v| v.as_slice())
    }

    pub fn orders(&self) -> impl Iterator<Item = usize> + '_ {
        self.components.keys().copied()
    }

    pub fn max_order(&self) -> usize {
        self.components.keys().next_back().copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    /// Basis field: component `comp` of V_m is the single monomial `mono`,
    /// everything else zero.
    pub fn unit(n: usize, m: usize, comp: usize, mono: Monomial) -> Result<Self> {
        let mut v = VectorFieldJet::new(n)?;
        let mut polys: Vec<HomogeneousPolynomial> =
            (0..2 * n).map(|_| HomogeneousPolynomial::zero(n, m)).collect();
        polys[comp - 1] = HomogeneousPolynomial::term(n, mono, crate::algebra::rat(1));
        v.set_component(m, polys);
        Ok(v)
    }

    /// a * self + other, exact.
    pub fn linear_combination(&self, a: &Rational, other: &VectorFieldJet) -> VectorFieldJet {
        assert_eq!(self.n, other.n);
        let mut out = VectorFieldJet {
            n: self.n,
            components: BTreeMap::new(),
        };
        let orders: std::collections::BTreeSet<usize> =
            self.orders().chain(other.orders()).collect();
        for m in orders {
            let polys: Vec<HomogeneousPolynomial> = (0..2 * self.n)
                .map(|c| {
                    let mine = self
                        .component(m)
                        .map(|v| v[c].scale(a))
                        .unwrap_or_else(|| HomogeneousPolynomial::zero(self.n, m));
                    let theirs = other
                        .component(m)
                        .map(|v| v[c].clone())
                        .unwrap_or_else(|| HomogeneousPolynomial::zero(self.n, m));
                    &mine + &theirs
                })
                .collect();
            out.set_component(m, polys);
        }
        out
    }
}

/// H = (1/2) sum h_{ij} x^i x^j with a symmetric exact coefficient matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticHamiltonian {
    n: usize,
    h: BTreeMap<(usize, usize), Rational>,
}

impl QuadraticHamiltonian {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        Ok(QuadraticHamiltonian {
            n,
            h: BTreeMap::new(),
        })
    }

    /// Unit matrix entry h_{ij} = h_{ji} = 1.
    pub fn unit(n: usize, i: usize, j: usize) -> Result<Self> {
        let mut h = QuadraticHamiltonian::new(n)?;
        h.set(i, j, crate::algebra::rat(1));
        h
            .h
            .retain(|_, v| !v.is_zero());
        Ok(h)
    }

    pub fn half_dim(&self) -> usize {
        self.n
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        assert!(i >= 1 && i <= 2 * self.n && j >= 1 && j <= 2 * self.n);
        let key = if i <= j { (i, j) } else { (j, i) };
        if v.is_zero() {
            self.h.remove(&key);
        } else {
            self.h.insert(key, v);
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        let key = if i <= j { (i, j) } else { (j, i) };
        self.h.get(&key).cloned().unwrap_or_else(Rational::zero)
    }

    /// The polynomial H itself (degree 2).
    pub fn to_polynomial(&self) -> HomogeneousPolynomial {
        let mut p = HomogeneousPolynomial::zero(self.n, 2);
        for ((i, j), v) in &self.h {
            let mono = Monomial::var(2 * self.n, *i).mul(&Monomial::var(2 * self.n, *j));
            // off-diagonal pairs appear twice in (1/2) sum_{i,j}
            let c = if i == j {
                v / crate::algebra::rat(2)
            } else {
                v.clone()
            };
            p.add_term(mono, c);
        }
        p
    }
}

/// The field with components V^k = sum_a J_{ka} d_a H, for a homogeneous H
/// of any degree. For quadratic H this is the linear hamiltonian field.
pub fn hamiltonian_vector_field(h: &HomogeneousPolynomial) -> Vec<HomogeneousPolynomial> {
    let n = h.half_dim();
    let form = SymplecticMatrix::standard(n).expect("n >= 1");
    (1..=2 * n)
        .map(|k| {
            let mut acc = HomogeneousPolynomial::zero(n, h.degree().saturating_sub(1));
            for a in 1..=2 * n {
                let j = form.entry(k, a);
                if j != 0 {
                    acc = &acc + &h.partial(a).scale(&crate::algebra::rat(j));
                }
            }
            acc
        })
        .collect()
}

/// b = J grad H as a one-component (linear) vector field jet.
pub fn hamiltonian_field(h: &QuadraticHamiltonian) -> VectorFieldJet {
    let polys = hamiltonian_vector_field(&h.to_polynomial());
    let mut v = VectorFieldJet::new(h.half_dim()).expect("n >= 1");
    v.set_component(1, polys);
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn x(n: usize, i: usize) -> HomogeneousPolynomial {
        HomogeneousPolynomial::term(n, Monomial::var(2 * n, i), rat(1))
    }

    #[test]
    fn hamiltonian_examples() {
        // H = (x1)^2/2  ->  V = (0, -x1)
        let mut h = QuadraticHamiltonian::new(1).unwrap();
        h.set(1, 1, rat(1));
        let v = hamiltonian_field(&h);
        let comp = v.component(1).unwrap();
        assert!(comp[0].is_zero());
        assert_eq!(comp[1], x(1, 1).scale(&rat(-1)));

        // H = x1 x2  ->  V = (x1, -x2)
        let mut h = QuadraticHamiltonian::new(1).unwrap();
        h.set(1, 2, rat(1));
        let v = hamiltonian_field(&h);
        let comp = v.component(1).unwrap();
        assert_eq!(comp[0], x(1, 1));
        assert_eq!(comp[1], x(1, 2).scale(&rat(-1)));

        // H = 0 -> V = 0
        let h = QuadraticHamiltonian::new(1).unwrap();
        assert!(hamiltonian_field(&h).is_zero());
    }

    /// b^k_s = +h_{k+n,s} for k <= n and -h_{k-n,s} for k > n.
    #[test]
    fn coefficient_sign_convention() {
        let n = 2;
        for r in 1..=2 * n {
            for s in r..=2 * n {
                let h = QuadraticHamiltonian::unit(n, r, s).unwrap();
                let v = hamiltonian_field(&h);
                let comp = v.component(1).unwrap();
                for k in 1..=2 * n {
                    for t in 1..=2 * n {
                        let got = comp[k - 1].coeff(&Monomial::var(2 * n, t));
                        let expect = if k <= n {
                            h.get(k + n, t)
                        } else {
                            -h.get(k - n, t)
                        };
                        assert_eq!(got, expect, "b^{k}_{t} for unit h_({r},{s})");
                    }
                }
            }
        }
    }
}
