//! The Lie-derivative action on connection jets and on the standard
//! symplectic form, by graded homogeneous components.
//!
//! In coordinates, for a vector field V and connection Gamma,
//!
//! ```text
//! (L_V Gamma)^l_ij = V^k d_k Gamma^l_ij - Gamma^k_ij d_k V^l
//!                  + Gamma^l_kj d_i V^k + Gamma^l_ik d_j V^k
//!                  + d_i d_j V^l
//! ```
//!
//! with summation over k. The reduced operator keeps just the first four
//! terms; the second-derivative term is tracked separately because in the
//! graded stabilizer system it ties a higher field component into each
//! equation.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{HomogeneousPolynomial, Monomial, Rational};
use crate::error::Error;
use crate::jets::{ConnectionJet, SymmetricTensorJet, SymplecticMatrix, TensorComponent, VectorFieldJet};
use crate::Result;

/// Four-term (reduced) Lie derivative of a degree-p tensor component along
/// a degree-m field component. The result is homogeneous of degree
/// m + p - 1.
pub fn reduced_lie_derivative(
    m: usize,
    field: &[HomogeneousPolynomial],
    gamma: &TensorComponent,
) -> Result<TensorComponent> {
    assert!(m >= 1, "field components start at degree 1");
    let n = gamma.half_dim();
    if field.len() != 2 * n || field.iter().any(|p| p.half_dim() != n) {
        return Err(Error::DimensionMismatch(
            field.first().map(|p| p.half_dim()).unwrap_or(0),
            n,
        ));
    }
    for p in field {
        assert_eq!(p.degree(), m, "field component degree");
    }
    let p = gamma.degree();
    let mut out = TensorComponent::zero(n, m + p - 1);

    for (key, c) in gamma.iter() {
        let (gl, gi, gj, mu) = (key.l, key.i, key.j, &key.mono);
        for (comp, poly) in field.iter().enumerate() {
            let k0 = comp + 1;
            for (nu, a) in poly.terms() {
                let ca = c * a;
                // V^k d_k Gamma^l_ij, with k = k0
                if let Some(red) = mu.div_var(k0) {
                    let factor = Rational::from_integer(mu.exp(k0).into());
                    out.add(gl, gi, gj, red.mul(nu), &ca * factor);
                }
                // -Gamma^k_ij d_k V^l: the entry's upper index is the
                // summation index, the output upper index is k0
                if let Some(red) = nu.div_var(gl) {
                    let factor = Rational::from_integer(nu.exp(gl).into());
                    out.add(k0, gi, gj, mu.mul(&red), -(&ca * factor));
                }
                // Gamma^l_kj d_i V^k + Gamma^l_ik d_j V^k, accumulated on
                // the sorted output representative (i <= j): this entry is
                // the value Gamma^l_{k0, w} exactly when its lower pair is
                // {k0, w}; it then serves the third term of cells (i, w)
                // with i <= w and the fourth term of cells (w, j) with
                // j >= w, so the diagonal cell (w, w) picks it up twice.
                let w = if gi == k0 {
                    Some(gj)
                } else if gj == k0 {
                    Some(gi)
                } else {
                    None
                };
                if let Some(w) = w {
                    for i in 1..=w {
                        if let Some(red) = nu.div_var(i) {
                            let factor = Rational::from_integer(nu.exp(i).into());
                            out.add(gl, i, w, mu.mul(&red), &ca * factor);
                        }
                    }
                    for j in w..=2 * n {
                        if let Some(red) = nu.div_var(j) {
                            let factor = Rational::from_integer(nu.exp(j).into());
                            out.add(gl, w, j, mu.mul(&red), &ca * factor);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The tensor with entries d_i d_j V^l for a degree-m field component
/// (m >= 2); homogeneous of degree m - 2.
pub fn hessian_component(m: usize, field: &[HomogeneousPolynomial]) -> TensorComponent {
    assert!(m >= 2);
    let n = field[0].half_dim();
    let mut out = TensorComponent::zero(n, m - 2);
    for (comp, poly) in field.iter().enumerate() {
        let l = comp + 1;
        for (nu, a) in poly.terms() {
            for j in 1..=2 * n {
                let Some(dj) = nu.div_var(j) else { continue };
                let fj = Rational::from_integer(nu.exp(j).into());
                for i in 1..=j {
                    if let Some(dij) = dj.div_var(i) {
                        let fi = Rational::from_integer(dj.exp(i).into());
                        out.add(l, i, j, dij, a * &fj * fi);
                    }
                }
            }
        }
    }
    out
}

/// j^k of the full Lie derivative L_V Gamma, assembled degree by degree:
/// the degree-q component collects the four-term derivatives of all
/// (V_m, Gamma_p) with m + p - 1 = q plus the second derivatives of
/// V_{q+2}. Components of V above k + 2 cannot touch degrees <= k because
/// the field vanishes at the origin.
pub fn lie_derivative_connection(
    v: &VectorFieldJet,
    gamma: &ConnectionJet,
    k: usize,
) -> Result<SymmetricTensorJet> {
    let n = gamma.half_dim();
    if v.half_dim() != n {
        return Err(Error::DimensionMismatch(v.half_dim(), n));
    }
    assert!(gamma.order() >= k, "connection jet must have order >= k");
    let mut components = Vec::with_capacity(k + 1);
    for q in 0..=k {
        let mut acc = TensorComponent::zero(n, q);
        for p in 0..=q.min(gamma.order()) {
            let m = q + 1 - p;
            if let Some(vm) = v.component(m) {
                acc.add_assign(&reduced_lie_derivative(m, vm, gamma.component(p))?);
            }
        }
        if let Some(vq2) = v.component(q + 2) {
            acc.add_assign(&hessian_component(q + 2, vq2));
        }
        components.push(acc);
    }
    Ok(SymmetricTensorJet::from_components(n, components))
}

/// Antisymmetric homogeneous component of a 2-form, stored on i < j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormComponent {
    n: usize,
    degree: usize,
    entries: BTreeMap<(usize, usize, Monomial), Rational>,
}

impl FormComponent {
    pub fn zero(n: usize, degree: usize) -> Self {
        FormComponent {
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

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn add(&mut self, i: usize, j: usize, mono: Monomial, v: Rational) {
        assert!(i < j, "form entries are stored above the diagonal");
        if v.is_zero() {
            return;
        }
        let key = (i, j, mono);
        match self.entries.entry(key) {
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

    /// Entry (i, j) with antisymmetry applied for i > j.
    pub fn get(&self, i: usize, j: usize, mono: &Monomial) -> Rational {
        if i == j {
            return Rational::zero();
        }
        let (key, sign) = if i < j {
            ((i, j, mono.clone()), 1)
        } else {
            ((j, i, mono.clone()), -1)
        };
        self.entries
            .get(&key)
            .map(|v| v * crate::algebra::rat(sign))
            .unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize, Monomial), &Rational)> {
        self.entries.iter()
    }
}

/// Degree-(m-1) component of L_V omega_0 for a degree-m field component:
/// (L_V omega_0)_ij = omega_kj d_i V^k + omega_ik d_j V^k against the
/// standard symplectic matrix. Vanishes exactly when the component is
/// hamiltonian.
pub fn lie_derivative_form(m: usize, field: &[HomogeneousPolynomial]) -> FormComponent {
    assert!(m >= 1);
    let n = field[0].half_dim();
    let form = SymplecticMatrix::standard(n).expect("n >= 1");
    let mut out = FormComponent::zero(n, m - 1);
    for i in 1..=2 * n {
        for j in i + 1..=2 * n {
            let mut acc = HomogeneousPolynomial::zero(n, m - 1);
            for k in 1..=2 * n {
                let wkj = form.entry(k, j);
                if wkj != 0 {
                    acc = &acc + &field[k - 1].partial(i).scale(&crate::algebra::rat(wkj));
                }
                let wik = form.entry(i, k);
                if wik != 0 {
                    acc = &acc + &field[k - 1].partial(j).scale(&crate::algebra::rat(wik));
                }
            }
            for (mono, c) in acc.terms() {
                out.add(i, j, mono.clone(), c.clone());
            }
        }
    }
    out
}

/// True when every graded component of the field annihilates omega_0.
pub fn is_hamiltonian_jet(v: &VectorFieldJet) -> bool {
    v.orders().all(|m| {
        lie_derivative_form(m, v.component(m).unwrap()).is_zero()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::jets::field::{hamiltonian_field, hamiltonian_vector_field};
    use crate::jets::QuadraticHamiltonian;

    fn x(n: usize, i: usize) -> HomogeneousPolynomial {
        HomogeneousPolynomial::term(n, Monomial::var(2 * n, i), rat(1))
    }

    fn gamma0_g211(n: usize) -> ConnectionJet {
        // Gamma_0 with the single raised coefficient Gamma^2_{11} = 1
        let mut jet = ConnectionJet::zero(n, 0).unwrap();
        jet.component_mut(0)
            .add(2, 1, 1, Monomial::one(2 * n), rat(1));
        jet
    }

    #[test]
    fn lie_derivative_of_zero_field_is_zero() {
        let jet = gamma0_g211(1);
        let v = VectorFieldJet::new(1).unwrap();
        let out = lie_derivative_connection(&v, &jet, 0).unwrap();
        assert!(out.is_zero());
    }

    #[test]
    fn lie_derivative_rotation_example() {
        // V = (x1, -x2), Gamma^2_{11} = 1: only (L_V Gamma)^2_{11} = 3
        let jet = gamma0_g211(1);
        let mut h = QuadraticHamiltonian::new(1).unwrap();
        h.set(1, 2, rat(1));
        let v = hamiltonian_field(&h);
        let out = lie_derivative_connection(&v, &jet, 0).unwrap();
        let comp = out.component(0);
        let one = Monomial::one(2);
        assert_eq!(comp.get(2, 1, 1, &one), rat(3));
        assert_eq!(comp.num_coeffs(), 1);
    }

    #[test]
    fn lie_derivative_shear_example() {
        // V = (0, -x1), Gamma^2_{11} = 1: L_V Gamma = 0
        let jet = gamma0_g211(1);
        let mut h = QuadraticHamiltonian::new(1).unwrap();
        h.set(1, 1, rat(1));
        let v = hamiltonian_field(&h);
        let out = lie_derivative_connection(&v, &jet, 0).unwrap();
        assert!(out.is_zero());
    }

    #[test]
    fn reduced_equals_full_minus_hessian() {
        // V_2 = ((x1)^2, 0) against Gamma^2_{11} = 1
        let jet = gamma0_g211(1);
        let v2 = vec![&x(1, 1) * &x(1, 1), HomogeneousPolynomial::zero(1, 2)];
        let reduced = reduced_lie_derivative(2, &v2, jet.component(0)).unwrap();

        let mut v = VectorFieldJet::new(1).unwrap();
        v.set_component(2, v2.clone());
        let jet1 = ConnectionJet::from_components(
            1,
            vec![jet.component(0).clone(), TensorComponent::zero(1, 1)],
        )
        .unwrap();
        let full = lie_derivative_connection(&v, &jet1, 1).unwrap();

        let hess = hessian_component(2, &v2);
        let mut expect_deg0 = full.component(0).clone();
        expect_deg0.add_assign(&hess.neg());
        assert!(expect_deg0.is_zero(), "degree-0 part of L tilde for V_2 is empty");

        // reduced output lives in degree 1 and matches the degree-1 part
        assert_eq!(&reduced, full.component(1));
        let one = Monomial::var(2, 1);
        assert_eq!(reduced.get(2, 1, 1, &one), rat(4));
    }

    #[test]
    fn linear_fields_have_no_hessian() {
        let jet = gamma0_g211(1);
        let v1 = vec![x(1, 1), x(1, 2).scale(&rat(-1))];
        let reduced = reduced_lie_derivative(1, &v1, jet.component(0)).unwrap();
        let mut v = VectorFieldJet::new(1).unwrap();
        v.set_component(1, v1);
        let full = lie_derivative_connection(&v, &jet, 0).unwrap();
        assert_eq!(&reduced, full.component(0));
    }

    #[test]
    fn reduced_of_zero_connection_is_zero() {
        let zero = TensorComponent::zero(2, 1);
        let h = QuadraticHamiltonian::unit(2, 1, 3).unwrap();
        let v = hamiltonian_field(&h);
        let out = reduced_lie_derivative(1, v.component(1).unwrap(), &zero).unwrap();
        assert!(out.is_zero());
    }

    #[test]
    fn form_derivative_examples() {
        // hamiltonian fields annihilate omega_0
        for (i, j) in [(1, 1), (1, 2), (2, 2)] {
            let h = QuadraticHamiltonian::unit(1, i, j).unwrap();
            let v = hamiltonian_field(&h);
            assert!(lie_derivative_form(1, v.component(1).unwrap()).is_zero());
        }
        // Euler field: (L_V omega)_{12} = 2
        let euler = vec![x(1, 1), x(1, 2)];
        let out = lie_derivative_form(1, &euler);
        assert_eq!(out.get(1, 2, &Monomial::one(2)), rat(2));
        // zero field
        let zero = vec![HomogeneousPolynomial::zero(1, 1), HomogeneousPolynomial::zero(1, 1)];
        assert!(lie_derivative_form(1, &zero).is_zero());
    }

    #[test]
    fn higher_degree_hamiltonian_components_annihilate_form() {
        let n = 2;
        let h = &(&x(n, 1) * &x(n, 2)) * &x(n, 4);
        let v3 = hamiltonian_vector_field(&h);
        assert!(lie_derivative_form(2, &v3).is_zero());
    }
}
