//! The standard symplectic matrix in Darboux coordinates.

use crate::error::Error;
use crate::Result;

/// The fixed 2n x 2n matrix J with blocks [[0, I], [-I, 0]]:
/// J[i][i+n] = 1 and J[i+n][i] = -1 for 1 <= i <= n.
///
/// Indices are 1-based throughout; `bar` sends i to i+n and back.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymplecticMatrix {
    n: usize,
}

impl SymplecticMatrix {
    pub fn standard(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        Ok(SymplecticMatrix { n })
    }

    pub fn half_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    /// Entry J_{ij}, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        if j == i + self.n {
            1
        } else if i == j + self.n {
            -1
        } else {
            0
        }
    }

    /// The conjugate index: i <-> i + n.
    pub fn bar(&self, i: usize) -> usize {
        if i <= self.n {
            i + self.n
        } else {
            i - self.n
        }
    }

    /// For a column l, the unique row a with J_{a,l} != 0, and that value.
    pub fn pairing(&self, l: usize) -> (usize, i64) {
        let a = self.bar(l);
        (a, self.entry(a, l))
    }

    /// Dense copy, for tests and display.
    pub fn to_matrix(&self) -> Vec<Vec<i64>> {
        let d = self.dim();
        (1..=d)
            .map(|i| (1..=d).map(|j| self.entry(i, j)).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_n_zero() {
        assert!(SymplecticMatrix::standard(0).is_err());
    }

    #[test]
    fn n1_block_form() {
        let j = SymplecticMatrix::standard(1).unwrap();
        assert_eq!(j.to_matrix(), vec![vec![0, 1], vec![-1, 0]]);
    }

    #[test]
    fn n2_identity_blocks() {
        let j = SymplecticMatrix::standard(2).unwrap();
        let m = j.to_matrix();
        for i in 0..2 {
            for k in 0..2 {
                assert_eq!(m[i][k + 2], if i == k { 1 } else { 0 });
                assert_eq!(m[i + 2][k], if i == k { -1 } else { 0 });
                assert_eq!(m[i][k], 0);
                assert_eq!(m[i + 2][k + 2], 0);
            }
        }
    }

    #[test]
    fn antisymmetric_and_square_minus_one() {
        for n in 1..=4 {
            let j = SymplecticMatrix::standard(n).unwrap();
            let m = j.to_matrix();
            let d = 2 * n;
            for i in 0..d {
                for k in 0..d {
                    assert_eq!(m[i][k], -m[k][i]);
                    let mut prod = 0i64;
                    for t in 0..d {
                        prod += m[i][t] * m[t][k];
                    }
                    assert_eq!(prod, if i == k { -1 } else { 0 });
                }
            }
        }
    }
}
