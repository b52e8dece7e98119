//! Homogeneous components of (1,2)-tensors symmetric in the lower index
//! pair: the building block for connection jets and for Lie-derivative
//! results.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{Monomial, Rational};

/// Coefficient key: upper index l, sorted lower pair (i <= j), monomial.
///
/// Lower-index symmetry is enforced structurally by always storing the
/// sorted pair; accessors accept either order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CoeffKey {
    pub l: usize,
    pub i: usize,
    pub j: usize,
    pub mono: Monomial,
}

/// Degree-m homogeneous component of a (1,2)-tensor T^l_{ij} = T^l_{ji}
/// on R^{2n}, entries stored sparsely with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorComponent {
    n: usize,
    degree: usize,
    coeffs: BTreeMap<CoeffKey, Rational>,
}

impl TensorComponent {
    pub fn zero(n: usize, degree: usize) -> Self {
        TensorComponent {
            n,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

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
        self.coeffs.is_empty()
    }

    pub fn num_coeffs(&self) -> usize {
        self.coeffs.len()
    }

    /// Accumulate onto the coefficient of x^mono in T^l_{ij}.
    pub fn add(&mut self, l: usize, i: usize, j: usize, mono: Monomial, v: Rational) {
        let d = 2 * self.n;
        assert!(l >= 1 && l <= d && i >= 1 && i <= d && j >= 1 && j <= d);
        assert_eq!(mono.degree(), self.degree);
        assert_eq!(mono.nvars(), d);
        if v.is_zero() {
            return;
        }
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        let key = CoeffKey { l, i, j, mono };
        match self.coeffs.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(v);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + v;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Coefficient of x^mono in T^l_{ij}; zero if absent.
    pub fn get(&self, l: usize, i: usize, j: usize, mono: &Monomial) -> Rational {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        self.coeffs
            .get(&CoeffKey {
                l,
                i,
                j,
                mono: mono.clone(),
            })
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// The entry T^l_{ij} as a homogeneous polynomial.
    pub fn entry_poly(&self, l: usize, i: usize, j: usize) -> crate::algebra::HomogeneousPolynomial {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        let mut p = crate::algebra::HomogeneousPolynomial::zero(self.n, self.degree);
        let lo = CoeffKey {
            l,
            i,
            j,
            mono: Monomial::one(2 * self.n),
        };
        for (key, v) in self.coeffs.range(lo..) {
            if key.l != l || key.i != i || key.j != j {
                break;
            }
            p.add_term(key.mono.clone(), v.clone());
        }
        p
    }

    /// Insert a whole polynomial at entry (l, i, j).
    pub fn add_poly(
        &mut self,
        l: usize,
        i: usize,
        j: usize,
        p: &crate::algebra::HomogeneousPolynomial,
    ) {
        for (mono, c) in p.terms() {
            self.add(l, i, j, mono.clone(), c.clone());
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CoeffKey, &Rational)> {
        self.coeffs.iter()
    }

    pub fn add_assign(&mut self, other: &TensorComponent) {
        assert_eq!(self.n, other.n);
        assert_eq!(self.degree, other.degree);
        for (k, v) in &other.coeffs {
            self.add(k.l, k.i, k.j, k.mono.clone(), v.clone());
        }
    }

    pub fn scale(&self, a: &Rational) -> TensorComponent {
        let mut out = TensorComponent::zero(self.n, self.degree);
        if a.is_zero() {
            return out;
        }
        for (k, v) in &self.coeffs {
            out.coeffs.insert(k.clone(), v * a);
        }
        out
    }

    pub fn neg(&self) -> TensorComponent {
        self.scale(&crate::algebra::rat(-1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn lower_pair_is_sorted_on_access() {
        let mut t = TensorComponent::zero(1, 0);
        let one = Monomial::one(2);
        t.add(2, 2, 1, one.clone(), rat(5));
        assert_eq!(t.get(2, 1, 2, &one), rat(5));
        assert_eq!(t.get(2, 2, 1, &one), rat(5));
        assert_eq!(t.num_coeffs(), 1);
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut t = TensorComponent::zero(1, 1);
        let x1 = Monomial::var(2, 1);
        t.add(1, 1, 1, x1.clone(), rat(3));
        t.add(1, 1, 1, x1.clone(), rat(-3));
        assert!(t.is_zero());
    }
}
