//! The graded stabilizer system of a Fedosov jet.
//!
//! For a jet of order k the unknowns are all coefficients of the field
//! components V_1 .. V_{k+2}. The equations come in two blocks:
//!
//! * omega-part: L_{V_m} omega_0 = 0 for m = 1 .. k+1, one row per
//!   independent form entry (i < j) and monomial of degree m - 1;
//! * Gamma-part: for each degree q = 0 .. k, the degree-q component of
//!   L_V Gamma vanishes, i.e. the four-term derivatives of all
//!   (V_{q+1-p}, Gamma_p) plus the second derivatives of V_{q+2}, one row
//!   per entry (l, i <= j) and monomial of degree q.
//!
//! The kernel of the system is the Lie algebra of the stabilizer of the
//! jet; the orbit dimension is the number of unknowns minus the kernel
//! dimension.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{binomial, monomials_of_degree, Int, LinearSystem, Monomial, RankKernel};
use crate::error::Error;
use crate::jets::{
    check_fedosov_jet, hessian_component, lie_derivative_form, reduced_lie_derivative, FedosovJet,
    VectorFieldJet,
};
use crate::Result;

/// Equation label of one row.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SysRow {
    /// Degree-(m-1) entry (i < j) of L_{V_m} omega_0.
    Omega {
        m: usize,
        i: usize,
        j: usize,
        mono: Monomial,
    },
    /// Degree-q entry (l, i <= j) of the Gamma-part equation.
    Gamma {
        degree: usize,
        l: usize,
        i: usize,
        j: usize,
        mono: Monomial,
    },
}

impl fmt::Display for SysRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SysRow::Omega { m, i, j, mono } => write!(f, "omega m={m} ij=({i},{j}) mu=[{mono}]"),
            SysRow::Gamma {
                degree,
                l,
                i,
                j,
                mono,
            } => write!(f, "gamma q={degree} l={l} ij=({i},{j}) mu=[{mono}]"),
        }
    }
}

/// Unknown label: coefficient of x^mono in component `comp` of V_m.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SysCol {
    pub m: usize,
    pub comp: usize,
    pub mono: Monomial,
}

impl fmt::Display for SysCol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V m={} comp={} mu=[{}]", self.m, self.comp, self.mono)
    }
}

/// Assembled stabilizer system of one Fedosov jet.
#[derive(Clone, Debug)]
pub struct StabilizerSystem {
    n: usize,
    order: usize,
    pub system: LinearSystem<SysRow, SysCol>,
}

/// Kernel of a stabilizer system together with the field jets spanning it.
#[derive(Clone, Debug)]
pub struct StabilizerSolution {
    pub rank: usize,
    pub unknowns: usize,
    pub kernel_fields: Vec<VectorFieldJet>,
}

impl StabilizerSolution {
    pub fn stabilizer_dimension(&self) -> usize {
        self.kernel_fields.len()
    }

    pub fn orbit_dimension(&self) -> usize {
        self.unknowns - self.stabilizer_dimension()
    }
}

impl StabilizerSystem {
    pub fn half_dim(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn unknowns(&self) -> usize {
        self.system.num_cols()
    }

    /// Exact kernel; each kernel vector is reassembled into a field jet.
    pub fn solve(&self) -> StabilizerSolution {
        let RankKernel { rank, kernel } = self.system.rank_and_kernel();
        let cols = self.system.col_labels();
        let kernel_fields = kernel
            .iter()
            .map(|vec| {
                let mut per_m: BTreeMap<usize, Vec<crate::algebra::HomogeneousPolynomial>> =
                    BTreeMap::new();
                for (c, val) in vec.iter().enumerate() {
                    if num_traits::Zero::is_zero(val) {
                        continue;
                    }
                    let label = &cols[c];
                    let entry = per_m.entry(label.m).or_insert_with(|| {
                        (0..2 * self.n)
                            .map(|_| crate::algebra::HomogeneousPolynomial::zero(self.n, label.m))
                            .collect()
                    });
                    entry[label.comp - 1].add_term(label.mono.clone(), val.clone());
                }
                let mut v = VectorFieldJet::new(self.n).expect("n >= 1");
                for (m, polys) in per_m {
                    v.set_component(m, polys);
                }
                v
            })
            .collect();
        StabilizerSolution {
            rank,
            unknowns: self.unknowns(),
            kernel_fields,
        }
    }
}

/// Number of unknowns of the order-k system: 2n [ C(2n+k+2, 2n) - 1 ].
pub fn unknown_count(n: usize, k: usize) -> Int {
    Int::from(2 * n as u64)
        * (binomial((2 * n + k + 2) as u64, (2 * n) as i64) - Int::from(1))
}

/// Build the full stabilizer system of a jet at its own order. The jet
/// must pass the compatibility check.
pub fn assemble_stabilizer_system(jet: &FedosovJet) -> Result<StabilizerSystem> {
    let report = check_fedosov_jet(jet);
    if !report.is_valid() {
        return Err(Error::InvalidJet(report));
    }
    let n = jet.half_dim();
    let d = 2 * n;
    let k = jet.order();

    // deterministic row and column layouts
    let mut row_labels = Vec::new();
    for m in 1..=k + 1 {
        for mono in monomials_of_degree(d, m - 1) {
            for i in 1..=d {
                for j in i + 1..=d {
                    row_labels.push(SysRow::Omega {
                        m,
                        i,
                        j,
                        mono: mono.clone(),
                    });
                }
            }
        }
    }
    for q in 0..=k {
        for mono in monomials_of_degree(d, q) {
            for l in 1..=d {
                for i in 1..=d {
                    for j in i..=d {
                        row_labels.push(SysRow::Gamma {
                            degree: q,
                            l,
                            i,
                            j,
                            mono: mono.clone(),
                        });
                    }
                }
            }
        }
    }
    let row_index: BTreeMap<SysRow, usize> = row_labels
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, r)| (r, i))
        .collect();

    let mut col_labels = Vec::new();
    for m in 1..=k + 2 {
        for comp in 1..=d {
            for mono in monomials_of_degree(d, m) {
                col_labels.push(SysCol {
                    m,
                    comp,
                    mono,
                });
            }
        }
    }
    debug_assert_eq!(
        Int::from(col_labels.len() as u64),
        unknown_count(n, k),
        "unknown count"
    );

    let mut system = LinearSystem::new(row_labels, col_labels.clone());

    // one column at a time: apply the action to the basis field and read
    // off every equation entry it touches
    for (ci, col) in col_labels.iter().enumerate() {
        let unit = VectorFieldJet::unit(n, col.m, col.comp, col.mono.clone())?;
        let field = unit.component(col.m).unwrap();

        // omega-part of degree col.m - 1
        if col.m <= k + 1 {
            let form = lie_derivative_form(col.m, field);
            for ((i, j, mono), val) in form.iter() {
                let row = SysRow::Omega {
                    m: col.m,
                    i: *i,
                    j: *j,
                    mono: mono.clone(),
                };
                system.add(row_index[&row], ci, val.clone());
            }
        }

        // four-term derivatives against each connection component
        for p in 0..=k {
            let q = col.m + p - 1;
            if q > k {
                continue;
            }
            let t = reduced_lie_derivative(col.m, field, jet.connection().component(p))?;
            for (key, val) in t.iter() {
                let row = SysRow::Gamma {
                    degree: q,
                    l: key.l,
                    i: key.i,
                    j: key.j,
                    mono: key.mono.clone(),
                };
                system.add(row_index[&row], ci, val.clone());
            }
        }

        // second-derivative block ties V_{q+2} into the degree-q equation
        if col.m >= 2 {
            let q = col.m - 2;
            if q <= k {
                let h = hessian_component(col.m, field);
                for (key, val) in h.iter() {
                    let row = SysRow::Gamma {
                        degree: q,
                        l: key.l,
                        i: key.i,
                        j: key.j,
                        mono: key.mono.clone(),
                    };
                    system.add(row_index[&row], ci, val.clone());
                }
            }
        }
    }

    Ok(StabilizerSystem {
        n,
        order: k,
        system,
    })
}

/// Kernel dimension of the assembled system.
pub fn stabilizer_dimension(jet: &FedosovJet) -> Result<usize> {
    Ok(assemble_stabilizer_system(jet)?.solve().stabilizer_dimension())
}

/// Unknown count minus stabilizer dimension: the rank of the action map.
pub fn orbit_dimension(jet: &FedosovJet) -> Result<usize> {
    Ok(assemble_stabilizer_system(jet)?.solve().orbit_dimension())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::jets::ConnectionJet;

    #[test]
    fn flat_k0_system_for_n1() {
        // Gamma_0 = 0: 10 unknowns, kernel = sp(2) and V_2 = 0
        let jet = FedosovJet::new(ConnectionJet::zero(1, 0).unwrap()).unwrap();
        let sys = assemble_stabilizer_system(&jet).unwrap();
        assert_eq!(sys.unknowns(), 10);
        let sol = sys.solve();
        assert_eq!(sol.stabilizer_dimension(), 3);
        for v in &sol.kernel_fields {
            assert!(v.component(2).is_none(), "V_2 must vanish for the flat jet");
        }
    }

    #[test]
    fn k0_stabilizer_is_sp_2n_for_any_valid_jet() {
        // sp(2n) has dimension n(2n+1)
        for n in 1..=2 {
            let fj = crate::stabilizer::random_compatible_jet(n, 0, 11, 5).unwrap();
            assert_eq!(stabilizer_dimension(&fj).unwrap(), n * (2 * n + 1));
        }
    }

    #[test]
    fn invalid_jet_is_rejected() {
        let mut jet = ConnectionJet::zero(1, 0).unwrap();
        jet.component_mut(0).add(1, 1, 1, Monomial::one(2), rat(1));
        let fj = FedosovJet::new(jet).unwrap();
        assert!(matches!(
            assemble_stabilizer_system(&fj),
            Err(Error::InvalidJet(_))
        ));
    }
}
