//! Monomials in the coordinates x^1 .. x^{2n}.

use std::cmp::Ordering;
use std::fmt;

/// Exponent vector of a monomial; index 0 holds the exponent of x^1.
///
/// Total order is graded lexicographic (degree first, then the exponent
/// vector left to right). Every matrix layout and serialized file in the
/// crate sorts monomials by this order, so it must never change.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    /// Constant monomial (degree 0) in `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    /// The variable x^i, 1-based.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[i - 1] = 1;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    /// Exponent of x^i (1-based).
    pub fn exp(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    /// Product with another monomial.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Multiply by x^i (1-based).
    pub fn times_var(&self, i: usize) -> Monomial {
        let mut e = self.0.clone();
        e[i - 1] += 1;
        Monomial(e)
    }

    /// Divide by x^i if possible (1-based).
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.0[i - 1] == 0 {
            return None;
        }
        let mut e = self.0.clone();
        e[i - 1] -= 1;
        Some(Monomial(e))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{:?}", self.0)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// All monomials of the given degree in `nvars` variables, in graded-lex
/// order. There are C(nvars + d - 1, nvars - 1) of them.
pub fn monomials_of_degree(nvars: usize, d: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; nvars];
    fill(&mut out, &mut current, 0, d as u32);
    out.sort();
    out
}

fn fill(out: &mut Vec<Monomial>, current: &mut Vec<u32>, pos: usize, remaining: u32) {
    if pos + 1 == current.len() {
        current[pos] = remaining;
        out.push(Monomial(current.clone()));
        current[pos] = 0;
        return;
    }
    for e in 0..=remaining {
        current[pos] = e;
        fill(out, current, pos + 1, remaining - e);
    }
    current[pos] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::binomial;
    use num_traits::ToPrimitive;

    #[test]
    fn counts_match_binomial() {
        for nvars in 1..=4 {
            for d in 0..=5 {
                let ms = monomials_of_degree(nvars, d);
                let expected = binomial((nvars + d - 1) as u64, (nvars - 1) as i64)
                    .to_usize()
                    .unwrap();
                assert_eq!(ms.len(), expected);
                assert!(ms.iter().all(|m| m.degree() == d));
                assert!(ms.windows(2).all(|w| w[0] < w[1]), "sorted, no dups");
            }
        }
    }

    #[test]
    fn graded_lex_order() {
        let a = Monomial(vec![2, 0]);
        let b = Monomial(vec![0, 3]);
        assert!(a < b, "degree dominates");
        let c = Monomial(vec![0, 2]);
        let d = Monomial(vec![1, 1]);
        assert!(c < d, "lex within a degree");
    }
}
