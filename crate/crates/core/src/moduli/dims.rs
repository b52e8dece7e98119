//! Closed-form dimension counts for jet spaces, orbits and moduli, and
//! the coefficients of the moduli Poincare series.
//!
//! Conventions: n is the half-dimension (the manifold has dimension 2n);
//! the exceptional corrections attached to "dimension two" apply at
//! n = 1. Values are exact big integers; the moduli dimension can come
//! out negative at n = 1, which downstream layers report instead of
//! clamping.

use crate::algebra::{binomial, Int};

/// Kronecker-style correction: 1 when the manifold dimension is 2.
fn delta_dim2(n: usize) -> Int {
    Int::from(if n == 1 { 1 } else { 0 })
}

/// dim j^m of scalar functions: C(2n+m, 2n).
pub fn dim_jet_functions(n: usize, m: usize) -> Int {
    binomial((2 * n + m) as u64, (2 * n) as i64)
}

/// dim j^m of 1-forms: 2n C(2n+m, 2n).
pub fn dim_jet_one_forms(n: usize, m: usize) -> Int {
    Int::from(2 * n as u64) * dim_jet_functions(n, m)
}

/// dim j^l of exact 2-forms, from the exact sequence
/// 0 -> R -> j^{l+2} functions -> j^{l+1} 1-forms -> j^l d(1-forms) -> 0.
pub fn dim_symplectic_germ_jets(n: usize, l: usize) -> Int {
    dim_jet_one_forms(n, l + 1) - dim_jet_functions(n, l + 2) + Int::from(1)
}

/// dim F_k = n(2n-1) C(2n+2, 2n-1) C(2n+k, 2n), the structure-jet count:
/// the degree-0 factor times the monomial count up to order k.
pub fn dim_structure_jets(n: usize, k: usize) -> Int {
    Int::from((n * (2 * n - 1)) as u64)
        * binomial((2 * n + 2) as u64, (2 * n - 1) as i64)
        * binomial((2 * n + k) as u64, (2 * n) as i64)
}

/// dim O_k: n((2n+1)^2 - 2) at k = 0, else
/// 2n [ C(2n+k+2, 2n) - 1 ] minus the dimension-two correction at k = 1.
pub fn dim_orbit_formula(n: usize, k: usize) -> Int {
    if k == 0 {
        Int::from((n * ((2 * n + 1) * (2 * n + 1) - 2)) as u64)
    } else {
        let base = Int::from(2 * n as u64)
            * (binomial((2 * n + k + 2) as u64, (2 * n) as i64) - Int::from(1));
        if k == 1 {
            base - delta_dim2(n)
        } else {
            base
        }
    }
}

/// dim M_k = dim F_k - dim O_k (exact; may be negative at n = 1).
pub fn dim_moduli(n: usize, k: usize) -> Int {
    dim_structure_jets(n, k) - dim_orbit_formula(n, k)
}

/// One row of a dimension table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimRow {
    pub k: usize,
    pub dim_f: Int,
    pub dim_o: Int,
    pub dim_m: Int,
}

/// Exact table of (dim F_k, dim O_k, dim M_k) for k = 0..=k_max.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionTable {
    pub n: usize,
    pub rows: Vec<DimRow>,
}

pub fn dimension_table(n: usize, k_max: usize) -> DimensionTable {
    DimensionTable {
        n,
        rows: (0..=k_max)
            .map(|k| DimRow {
                k,
                dim_f: dim_structure_jets(n, k),
                dim_o: dim_orbit_formula(n, k),
                dim_m: dim_moduli(n, k),
            })
            .collect(),
    }
}

/// Coefficients p_0 .. p_K of the Poincare series: p_0 = dim M_0 and
/// p_k = dim M_k - dim M_{k-1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesCoefficients {
    pub n: usize,
    pub coefficients: Vec<Int>,
}

pub fn poincare_coefficients(n: usize, k_max: usize) -> SeriesCoefficients {
    let mut coefficients = Vec::with_capacity(k_max + 1);
    let mut prev = Int::from(0);
    for k in 0..=k_max {
        let m = dim_moduli(n, k);
        coefficients.push(if k == 0 { m.clone() } else { &m - &prev });
        prev = m;
    }
    SeriesCoefficients { n, coefficients }
}

/// The common-term bracket 2n [ 2 C(2n+2,4) C(2n+k-1,2n-1) - C(2n+k+1,2n-1) ],
/// without any dimension-two correction.
pub fn common_term_bracket(n: usize, k: usize) -> Int {
    Int::from(2 * n as u64)
        * (Int::from(2) * binomial((2 * n + 2) as u64, 4) * binomial((2 * n + k - 1) as u64, (2 * n - 1) as i64)
            - binomial((2 * n + k + 1) as u64, (2 * n - 1) as i64))
}

/// Series coefficient at k >= 2 predicted by the closed forms: the bracket
/// together with the (t - t^2)-style correction, which subtracts 1 at
/// (n, k) = (1, 2).
pub fn closed_form_series_coefficient(n: usize, k: usize) -> Int {
    assert!(k >= 2);
    let mut v = common_term_bracket(n, k);
    if k == 2 {
        v -= delta_dim2(n);
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn i(v: i64) -> Int {
        Int::from(v)
    }

    #[test]
    fn symplectic_germ_examples() {
        assert_eq!(dim_symplectic_germ_jets(1, 0), i(1));
        assert_eq!(dim_symplectic_germ_jets(2, 0), i(6));
        for n in 1..=6 {
            assert_eq!(
                dim_symplectic_germ_jets(n, 0),
                i((n * (2 * n - 1)) as i64),
                "n(2n-1) at l = 0"
            );
        }
    }

    #[test]
    fn structure_jet_examples() {
        assert_eq!(dim_structure_jets(1, 0), i(4));
        assert_eq!(dim_structure_jets(2, 0), i(120));
        assert_eq!(dim_structure_jets(2, 1), i(600));
        // product structure over the order
        for n in 1..=3 {
            for k in 0..=6 {
                assert_eq!(
                    dim_structure_jets(n, k),
                    dim_structure_jets(n, 0) * binomial((2 * n + k) as u64, (2 * n) as i64)
                );
            }
        }
    }

    #[test]
    fn orbit_formula_examples() {
        assert_eq!(dim_orbit_formula(2, 0), i(46));
        assert_eq!(dim_orbit_formula(1, 1), i(17));
        assert_eq!(dim_orbit_formula(2, 2), i(276));
    }

    #[test]
    fn moduli_table_n2() {
        assert_eq!(dim_moduli(2, 0), i(74));
        assert_eq!(dim_moduli(2, 1), i(464));
        assert_eq!(dim_moduli(2, 2), i(1524));
    }

    #[test]
    fn series_coefficient_examples() {
        let s = poincare_coefficients(2, 3);
        assert_eq!(s.coefficients, vec![i(74), i(390), i(1060), i(2176)]);
        // bracket form agrees with the differences where defined
        assert_eq!(closed_form_series_coefficient(2, 2), i(1060));
        assert_eq!(closed_form_series_coefficient(1, 3), i(4));
        // the (1, 2) correction
        let s1 = poincare_coefficients(1, 3);
        assert_eq!(s1.coefficients[2], closed_form_series_coefficient(1, 2));
        assert_eq!(common_term_bracket(1, 2), i(2));
        assert_eq!(closed_form_series_coefficient(1, 2), i(1));
    }

    #[test]
    fn binomial_rewriting_identity() {
        // 4n C(2n+2, 4) = n(2n-1) C(2n+2, 3)
        for n in 1..=10u64 {
            assert_eq!(
                Int::from(4 * n) * binomial(2 * n + 2, 4),
                Int::from(n * (2 * n - 1)) * binomial(2 * n + 2, 3)
            );
        }
    }
}
