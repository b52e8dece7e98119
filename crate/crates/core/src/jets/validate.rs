//! Compatibility check for Fedosov structure jets.
//!
//! A connection jet is compatible with the standard symplectic matrix
//! exactly when, per homogeneous degree, the lowered tensor
//! T_{a ij} = J_{a l} Gamma^l_{ij} is fully symmetric in (a, i, j). The
//! check reports every violated index triple instead of failing fast, so
//! hand-built structures can be debugged coefficient by coefficient.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;

use crate::algebra::{Monomial, Rational};
use crate::jets::{FedosovJet, SymplecticMatrix, TensorComponent};

/// One failed triple: the three lowered values T_{x,(y,z)} over the splits
/// of the multiset {a, b, c} disagree at the given monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub degree: usize,
    pub triple: (usize, usize, usize),
    pub mono: Monomial,
    pub values: [Rational; 3],
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b, c) = self.triple;
        write!(
            f,
            "degree {}: lowered tensor not symmetric on triple ({a},{b},{c}) at x^[{}]: \
             T_{a}({b},{c})={}, T_{b}({a},{c})={}, T_{c}({a},{b})={}",
            self.degree, self.mono, self.values[0], self.values[1], self.values[2]
        )
    }
}

/// Validation result; empty iff the jet is a valid Fedosov jet.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Lowered value T_{a,(i,j)} = J_{a l} Gamma^l_{ij} at a monomial.
fn lowered(
    form: &SymplecticMatrix,
    comp: &TensorComponent,
    a: usize,
    i: usize,
    j: usize,
    mono: &Monomial,
) -> Rational {
    let (l, sign) = {
        let l = form.bar(a);
        (l, form.entry(a, l))
    };
    comp.get(l, i, j, mono) * crate::algebra::rat(sign)
}

/// Violations of lowered full symmetry for one homogeneous component.
pub fn check_component(form: &SymplecticMatrix, comp: &TensorComponent) -> Vec<Violation> {
    // collect candidate (sorted triple, monomial) pairs from the support
    let mut candidates: BTreeSet<((usize, usize, usize), Monomial)> = BTreeSet::new();
    for (key, _) in comp.iter() {
        let mut t = [form.bar(key.l), key.i, key.j];
        t.sort_unstable();
        candidates.insert(((t[0], t[1], t[2]), key.mono.clone()));
    }
    let mut out = Vec::new();
    for ((a, b, c), mono) in candidates {
        let va = lowered(form, comp, a, b, c, &mono);
        let vb = lowered(form, comp, b, a, c, &mono);
        let vc = lowered(form, comp, c, a, b, &mono);
        if va != vb || vb != vc {
            out.push(Violation {
                degree: comp.degree(),
                triple: (a, b, c),
                mono,
                values: [va, vb, vc],
            });
        }
    }
    out
}

/// Report-style compatibility check of a whole jet; empty report iff the
/// lowered tensor is fully symmetric at every degree.
pub fn check_fedosov_jet(jet: &FedosovJet) -> ValidationReport {
    let mut violations = Vec::new();
    for comp in jet.connection().components() {
        violations.extend(check_component(jet.form(), comp));
    }
    ValidationReport { violations }
}

/// The lowered tensor of a component as a map keyed by sorted triple and
/// monomial. Only meaningful for valid (fully symmetric) components; used
/// by generators that sample in lowered coordinates.
pub fn lowered_map(
    form: &SymplecticMatrix,
    comp: &TensorComponent,
) -> BTreeMap<((usize, usize, usize), Monomial), Rational> {
    let mut out = BTreeMap::new();
    for (key, v) in comp.iter() {
        let a = form.bar(key.l);
        let sign = form.entry(a, form.bar(a));
        let mut t = [a, key.i, key.j];
        t.sort_unstable();
        let entry = out
            .entry(((t[0], t[1], t[2]), key.mono.clone()))
            .or_insert_with(Rational::zero);
        // all splits carry the same value on a valid component; keep the
        // one computed from this entry
        *entry = v * crate::algebra::rat(sign);
        let _ = entry;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::jets::ConnectionJet;

    #[test]
    fn single_gamma2_11_is_valid() {
        let mut jet = ConnectionJet::zero(1, 0).unwrap();
        jet.component_mut(0).add(2, 1, 1, Monomial::one(2), rat(1));
        let fj = FedosovJet::new(jet).unwrap();
        assert!(check_fedosov_jet(&fj).is_valid());
    }

    #[test]
    fn gamma1_11_alone_is_invalid() {
        // violates Gamma^1_{1j} = -Gamma^2_{2j}
        let mut jet = ConnectionJet::zero(1, 0).unwrap();
        jet.component_mut(0).add(1, 1, 1, Monomial::one(2), rat(1));
        let fj = FedosovJet::new(jet).unwrap();
        let report = check_fedosov_jet(&fj);
        assert!(!report.is_valid());
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.violations[0].triple, (1, 1, 2));
    }

    #[test]
    fn zero_jet_is_valid() {
        let jet = ConnectionJet::zero(2, 3).unwrap();
        let fj = FedosovJet::new(jet).unwrap();
        assert!(check_fedosov_jet(&fj).is_valid());
    }
}
