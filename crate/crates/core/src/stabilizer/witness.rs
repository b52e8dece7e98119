//! Explicit jets with known stabilizer dimensions.
//!
//! Values are assigned on the lowered fully-symmetric tensor, so every
//! witness is compatible by construction; the named raised coefficients
//! and their conjugate partners come out of the raising map automatically.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::algebra::{rat, Monomial, Rational};
use crate::error::Error;
use crate::jets::{ConnectionJet, FedosovJet, SymplecticMatrix, TensorComponent};
use crate::Result;

/// The three named witnesses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessKind {
    /// n >= 2, order 1: trivial stabilizer at k = 1.
    HighDim1Jet,
    /// n = 1, order 1: one-dimensional stabilizer at k = 1.
    Dim2OneJet,
    /// n = 1, order 2: trivial stabilizer at k = 2.
    Dim2TwoJet,
}

impl WitnessKind {
    pub const ALL: [WitnessKind; 3] = [
        WitnessKind::HighDim1Jet,
        WitnessKind::Dim2OneJet,
        WitnessKind::Dim2TwoJet,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            WitnessKind::HighDim1Jet => "highdim-1jet",
            WitnessKind::Dim2OneJet => "dim2-1jet",
            WitnessKind::Dim2TwoJet => "dim2-2jet",
        }
    }
}

impl fmt::Display for WitnessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WitnessKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "highdim-1jet" => Ok(WitnessKind::HighDim1Jet),
            "dim2-1jet" => Ok(WitnessKind::Dim2OneJet),
            "dim2-2jet" => Ok(WitnessKind::Dim2TwoJet),
            other => Err(Error::Parse(format!("unknown witness `{other}`"))),
        }
    }
}

/// Builder that accumulates a component in lowered (fully symmetric)
/// coordinates and raises it at the end. Conflicting assignments to the
/// same lowered slot panic: that is a construction bug, not user input.
pub(crate) struct LoweredBuilder {
    n: usize,
    degree: usize,
    entries: BTreeMap<((usize, usize, usize), Monomial), Rational>,
}

impl LoweredBuilder {
    pub fn new(n: usize, degree: usize) -> Self {
        LoweredBuilder {
            n,
            degree,
            entries: BTreeMap::new(),
        }
    }

    fn form(&self) -> SymplecticMatrix {
        SymplecticMatrix::standard(self.n).expect("n >= 1")
    }

    /// Record the raised coefficient Gamma^l_{ij}[mono] = v.
    pub fn set_raised(&mut self, l: usize, i: usize, j: usize, mono: Monomial, v: i64) {
        let form = self.form();
        let a = form.bar(l);
        let sign = form.entry(a, l);
        self.set_lowered(a, i, j, mono, rat(sign) * rat(v));
    }

    /// Record the lowered entry T_{(a,i,j)}[mono] = v directly.
    pub fn set_lowered(&mut self, a: usize, i: usize, j: usize, mono: Monomial, v: Rational) {
        assert_eq!(mono.degree(), self.degree);
        let mut t = [a, i, j];
        t.sort_unstable();
        let key = ((t[0], t[1], t[2]), mono);
        if v.is_zero() {
            return;
        }
        if let Some(old) = self.entries.get(&key) {
            assert_eq!(old, &v, "conflicting assignment at lowered slot {key:?}");
            return;
        }
        self.entries.insert(key, v);
    }

    /// Raise back: Gamma^l_{ij} = J_{a, bar(a)} T_{a,(i,j)} with l = bar(a),
    /// distributed over the distinct splits of each lowered triple.
    pub fn raise(&self) -> TensorComponent {
        let form = self.form();
        let mut out = TensorComponent::zero(self.n, self.degree);
        for (((a, b, c), mono), v) in &self.entries {
            // the triple is sorted, so dedup removes repeated indices
            let mut firsts = vec![*a, *b, *c];
            firsts.dedup();
            for first in firsts {
                let rest: Vec<usize> = {
                    let mut t = vec![*a, *b, *c];
                    let pos = t.iter().position(|x| *x == first).unwrap();
                    t.remove(pos);
                    t
                };
                let l = form.bar(first);
                let sign = form.entry(first, l);
                out.add(l, rest[0], rest[1], mono.clone(), v * rat(sign));
            }
        }
        out
    }
}

/// Construct a named witness jet; always passes the compatibility check.
pub fn witness_jet(kind: WitnessKind, n: usize) -> Result<FedosovJet> {
    let jet = match kind {
        WitnessKind::Dim2OneJet => {
            if n != 1 {
                return Err(Error::UnsupportedWitness {
                    name: kind.name().into(),
                    n,
                });
            }
            // Gamma_0 with gamma^2_{11} = gamma^1_{22} = 1, Gamma_1 = 0:
            // the combined first-order operator has a + A = 1 != 0
            let mut g0 = LoweredBuilder::new(1, 0);
            let one = Monomial::one(2);
            g0.set_raised(2, 1, 1, one.clone(), 1);
            g0.set_raised(1, 2, 2, one, 1);
            ConnectionJet::from_components(1, vec![g0.raise(), TensorComponent::zero(1, 1)])?
        }
        WitnessKind::Dim2TwoJet => {
            if n != 1 {
                return Err(Error::UnsupportedWitness {
                    name: kind.name().into(),
                    n,
                });
            }
            // Gamma_0 = Gamma_1 = 0; Gamma_2 has the symmetrized quadratic
            // coefficient families d^2_{11 12} = d^2_{11 22} = 1, i.e.
            // Gamma^2_{11} = 2 x1 x2 + (x2)^2
            let mut g2 = LoweredBuilder::new(1, 2);
            g2.set_raised(2, 1, 1, Monomial(vec![1, 1]), 2);
            g2.set_raised(2, 1, 1, Monomial(vec![0, 2]), 1);
            ConnectionJet::from_components(
                1,
                vec![
                    TensorComponent::zero(1, 0),
                    TensorComponent::zero(1, 1),
                    g2.raise(),
                ],
            )?
        }
        WitnessKind::HighDim1Jet => {
            if n < 2 {
                return Err(Error::UnsupportedWitness {
                    name: kind.name().into(),
                    n,
                });
            }
            let d = 2 * n;
            let mut g1 = LoweredBuilder::new(n, 1);
            let var = |m: usize| Monomial::var(d, m);
            for i in 1..=n {
                for j in i + 1..=n {
                    let (bi, bj) = (i + n, j + n);
                    // the ten independent lower-right-block coefficients:
                    // the signed pair, the two doubled ones, the rest 1
                    g1.set_raised(i, bi, bj, var(bj), -1); // c^{i, jbar}_{ibar jbar}, i < j
                    g1.set_raised(j, bi, bj, var(bi), 1); //  c^{j, ibar}_{jbar ibar}
                    g1.set_raised(j, i, bj, var(i), 1); //    c^{j, i}_{jbar i}
                    g1.set_raised(i, j, bi, var(j), 1); //    c^{i, j}_{ibar j}
                    g1.set_raised(bi, i, bj, var(bj), 1); //  c^{ibar, jbar}_{i jbar}
                    g1.set_raised(bj, j, bi, var(bi), 1); //  c^{jbar, ibar}_{j ibar}
                    g1.set_raised(j, i, j, var(bi), 2); //    c^{j, ibar}_{j i}
                    g1.set_raised(i, i, j, var(bj), 2); //    c^{i, jbar}_{i j}
                    g1.set_raised(i, i, bj, var(j), 1); //    c^{i, j}_{i jbar}
                    g1.set_raised(j, j, bi, var(i), 1); //    c^{j, i}_{j ibar}
                    // the four upper-left-block coefficients, all 1
                    g1.set_raised(i, j, bi, var(i), 1); //    c^{i, i}_{ibar j}
                    g1.set_raised(bj, j, j, var(i), 1); //    c^{jbar, i}_{j j}
                    g1.set_raised(bi, i, j, var(bi), 1); //   c^{ibar, ibar}_{i j}
                    g1.set_raised(bj, i, j, var(bj), 1); //   c^{jbar, jbar}_{j i}
                }
            }
            ConnectionJet::from_components(n, vec![TensorComponent::zero(n, 0), g1.raise()])?
        }
    };
    let fj = FedosovJet::new(jet)?;
    debug_assert!(crate::jets::check_fedosov_jet(&fj).is_valid());
    Ok(fj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jets::check_fedosov_jet;

    #[test]
    fn witnesses_are_valid_jets() {
        for (kind, n) in [
            (WitnessKind::Dim2OneJet, 1),
            (WitnessKind::Dim2TwoJet, 1),
            (WitnessKind::HighDim1Jet, 2),
            (WitnessKind::HighDim1Jet, 3),
        ] {
            let jet = witness_jet(kind, n).unwrap();
            assert!(check_fedosov_jet(&jet).is_valid(), "{kind} n={n}");
        }
    }

    #[test]
    fn unsupported_combinations_error() {
        assert!(witness_jet(WitnessKind::HighDim1Jet, 1).is_err());
        assert!(witness_jet(WitnessKind::Dim2OneJet, 2).is_err());
        assert!(witness_jet(WitnessKind::Dim2TwoJet, 3).is_err());
    }

    #[test]
    fn names_round_trip() {
        for kind in WitnessKind::ALL {
            assert_eq!(kind.name().parse::<WitnessKind>().unwrap(), kind);
        }
    }

    #[test]
    fn two_jet_witness_component() {
        let jet = witness_jet(WitnessKind::Dim2TwoJet, 1).unwrap();
        let g2 = jet.connection().component(2);
        assert_eq!(g2.get(2, 1, 1, &Monomial(vec![1, 1])), rat(2));
        assert_eq!(g2.get(2, 1, 1, &Monomial(vec![0, 2])), rat(1));
        assert_eq!(g2.num_coeffs(), 2);
    }
}
