//! Labeled sparse linear systems over the rationals with exact rank and
//! kernel computation.
//!
//! Elimination is fraction-free: rows are scaled to primitive integer
//! vectors and combined by cross-multiplication, with the content divided
//! out after every update so entries stay small. Pivots are chosen on the
//! sparsest unresolved column, tie-broken by row length and entry bit
//! size.

use std::collections::BTreeSet;
use std::fmt;
use std::io::Write as IoWrite;

use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Int, Rational};

/// Sparse exact matrix with typed row and column labels.
///
/// The contract is `rank_and_kernel`: rank is exact over Q, the kernel
/// basis spans `{v : Mv = 0}`, and rank + kernel dimension equals the
/// number of columns.
#[derive(Clone, Debug)]
pub struct LinearSystem<R = String, C = String> {
    row_labels: Vec<R>,
    col_labels: Vec<C>,
    // row-major sparse storage; inner maps keyed by column index
    rows: Vec<std::collections::BTreeMap<usize, Rational>>,
}

/// Result of exact elimination.
#[derive(Clone, Debug)]
pub struct RankKernel {
    pub rank: usize,
    /// Kernel basis vectors, one per free column in ascending column
    /// order, scaled to primitive integer entries.
    pub kernel: Vec<Vec<Rational>>,
}

impl RankKernel {
    pub fn kernel_dim(&self) -> usize {
        self.kernel.len()
    }
}

impl<R, C> LinearSystem<R, C> {
    pub fn new(row_labels: Vec<R>, col_labels: Vec<C>) -> Self {
        let rows = vec![std::collections::BTreeMap::new(); row_labels.len()];
        LinearSystem {
            row_labels,
            col_labels,
            rows,
        }
    }

    pub fn num_rows(&self) -> usize {
        self.row_labels.len()
    }

    pub fn num_cols(&self) -> usize {
        self.col_labels.len()
    }

    pub fn row_labels(&self) -> &[R] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[C] {
        &self.col_labels
    }

    pub fn num_entries(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// Accumulate `v` at (r, c); zero results are removed.
    pub fn add(&mut self, r: usize, c: usize, v: Rational) {
        assert!(r < self.num_rows() && c < self.num_cols());
        if v.is_zero() {
            return;
        }
        let row = &mut self.rows[r];
        match row.entry(c) {
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

    pub fn entry(&self, r: usize, c: usize) -> Rational {
        self.rows[r].get(&c).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn row_entries(&self, r: usize) -> impl Iterator<Item = (usize, &Rational)> {
        self.rows[r].iter().map(|(c, v)| (*c, v))
    }

    /// All entries as (row, col, value), row-major.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    /// Matrix-vector product, for kernel verification.
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.num_cols());
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .fold(Rational::zero(), |acc, (c, a)| acc + a * &v[*c])
            })
            .collect()
    }

    pub fn row_index(&self, label: &R) -> Option<usize>
    where
        R: PartialEq,
    {
        self.row_labels.iter().position(|l| l == label)
    }

    pub fn col_index(&self, label: &C) -> Option<usize>
    where
        C: PartialEq,
    {
        self.col_labels.iter().position(|l| l == label)
    }

    /// Exact rank and kernel basis by fraction-free elimination.
    pub fn rank_and_kernel(&self) -> RankKernel {
        let ncols = self.num_cols();

        // primitive integer rows
        let mut rows: Vec<Option<Vec<(usize, Int)>>> = self
            .rows
            .iter()
            .map(|row| {
                if row.is_empty() {
                    return None;
                }
                let lcm = row
                    .values()
                    .fold(Int::one(), |acc, v| acc.lcm(v.denom()));
                let mut r: Vec<(usize, Int)> = row
                    .iter()
                    .map(|(c, v)| (*c, v.numer() * (&lcm / v.denom())))
                    .collect();
                normalize_content(&mut r);
                Some(r)
            })
            .collect();

        // column -> set of row indices with a nonzero entry there
        let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); ncols];
        // column -> number of *active* (not yet pivoted) rows there
        let mut col_active: Vec<usize> = vec![0; ncols];
        for (ri, row) in rows.iter().enumerate() {
            if let Some(row) = row {
                for (c, _) in row {
                    col_rows[*c].insert(ri);
                    col_active[*c] += 1;
                }
            }
        }

        let mut is_pivot_row: Vec<bool> = vec![false; rows.len()];
        let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)

        loop {
            // sparsest column still touched by an active row
            let Some(pc) = (0..ncols)
                .filter(|&c| col_active[c] > 0)
                .min_by_key(|&c| (col_active[c], c))
            else {
                break;
            };
            // smallest active row there, preferring small pivot entries
            let pr = col_rows[pc]
                .iter()
                .copied()
                .filter(|&ri| !is_pivot_row[ri])
                .min_by_key(|&ri| {
                    let row = rows[ri].as_ref().unwrap();
                    let bits = row
                        .iter()
                        .find(|(c, _)| *c == pc)
                        .map(|(_, v)| v.bits())
                        .unwrap_or(0);
                    (row.len(), bits, ri)
                })
                .expect("active count positive");

            let pivot_row = rows[pr].clone().unwrap();
            let pivot_val = pivot_row
                .iter()
                .find(|(c, _)| *c == pc)
                .map(|(_, v)| v.clone())
                .unwrap();

            let targets: Vec<usize> = col_rows[pc].iter().copied().filter(|&t| t != pr).collect();
            for t in targets {
                let trow = rows[t].take().unwrap();
                let tval = trow
                    .iter()
                    .find(|(c, _)| *c == pc)
                    .map(|(_, v)| v.clone())
                    .unwrap();
                let g = pivot_val.gcd(&tval);
                let ta = &pivot_val / &g;
                let sa = -(&tval / &g);
                let mut new_row = row_combine(&trow, &pivot_row, &ta, &sa);
                normalize_content(&mut new_row);

                let active = !is_pivot_row[t];
                // bookkeeping: drop old columns, add new ones
                for (c, _) in &trow {
                    col_rows[*c].remove(&t);
                    if active {
                        col_active[*c] -= 1;
                    }
                }
                if new_row.is_empty() {
                    rows[t] = None;
                } else {
                    for (c, _) in &new_row {
                        col_rows[*c].insert(t);
                        if active {
                            col_active[*c] += 1;
                        }
                    }
                    rows[t] = Some(new_row);
                }
            }

            // retire the pivot row from the active pool
            is_pivot_row[pr] = true;
            for (c, _) in rows[pr].as_ref().unwrap() {
                col_active[*c] -= 1;
            }
            pivots.push((pr, pc));
        }

        pivots.sort_by_key(|&(_, c)| c);
        let pivot_cols: BTreeSet<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let rank = pivots.len();

        let mut kernel = Vec::new();
        for f in (0..ncols).filter(|c| !pivot_cols.contains(c)) {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for &(pr, pc) in &pivots {
                let row = rows[pr].as_ref().unwrap();
                let pv = row.iter().find(|(c, _)| *c == pc).unwrap().1.clone();
                if let Some((_, fv)) = row.iter().find(|(c, _)| *c == f) {
                    v[pc] = -Rational::new(fv.clone(), pv);
                }
            }
            scale_to_primitive(&mut v);
            kernel.push(v);
        }

        debug_assert_eq!(rank + kernel.len(), ncols);
        RankKernel { rank, kernel }
    }

    /// Sparse listing in a matrix-market-like text layout, with labels in
    /// leading comment lines so dumped systems stay self-describing.
    pub fn write_sparse<W: IoWrite>(&self, w: &mut W) -> std::io::Result<()>
    where
        R: fmt::Display,
        C: fmt::Display,
    {
        writeln!(w, "%%sparse coordinate rational general")?;
        for (i, l) in self.row_labels.iter().enumerate() {
            writeln!(w, "% row {} : {}", i + 1, l)?;
        }
        for (j, l) in self.col_labels.iter().enumerate() {
            writeln!(w, "% col {} : {}", j + 1, l)?;
        }
        writeln!(
            w,
            "{} {} {}",
            self.num_rows(),
            self.num_cols(),
            self.num_entries()
        )?;
        for (r, c, v) in self.entries() {
            writeln!(w, "{} {} {}/{}", r + 1, c + 1, v.numer(), v.denom())?;
        }
        Ok(())
    }
}

/// `ta * target + sa * source` over sorted sparse integer rows.
fn row_combine(
    target: &[(usize, Int)],
    source: &[(usize, Int)],
    ta: &Int,
    sa: &Int,
) -> Vec<(usize, Int)> {
    let mut out = Vec::with_capacity(target.len() + source.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < source.len() {
        match (target.get(i), source.get(j)) {
            (Some((tc, tv)), Some((sc, sv))) if tc == sc => {
                let v = ta * tv + sa * sv;
                if !v.is_zero() {
                    out.push((*tc, v));
                }
                i += 1;
                j += 1;
            }
            (Some((tc, tv)), Some((sc, _))) if tc < sc => {
                out.push((*tc, ta * tv));
                i += 1;
            }
            (Some(_), Some((sc, sv))) => {
                out.push((*sc, sa * sv));
                j += 1;
            }
            (Some((tc, tv)), None) => {
                out.push((*tc, ta * tv));
                i += 1;
            }
            (None, Some((sc, sv))) => {
                out.push((*sc, sa * sv));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Divide a row by the gcd of its entries.
fn normalize_content(row: &mut Vec<(usize, Int)>) {
    if row.is_empty() {
        return;
    }
    let mut g = Int::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            return;
        }
    }
    for (_, v) in row.iter_mut() {
        *v = &*v / &g;
    }
}

/// Scale a rational vector to primitive integer entries, keeping signs.
fn scale_to_primitive(v: &mut [Rational]) {
    let lcm = v
        .iter()
        .filter(|x| !x.is_zero())
        .fold(Int::one(), |acc, x| acc.lcm(x.denom()));
    let mut g = Int::zero();
    for x in v.iter() {
        if !x.is_zero() {
            g = g.gcd(&(x.numer() * (&lcm / x.denom())));
        }
    }
    if g.is_zero() {
        return;
    }
    for x in v.iter_mut() {
        if !x.is_zero() {
            let scaled = x.numer() * (&lcm / x.denom());
            *x = Rational::from_integer(scaled / &g);
        }
    }
}

/// Build an unlabeled system from dense rows of small integers.
pub fn from_int_rows(rows: &[Vec<i64>]) -> LinearSystem<usize, usize> {
    let nrows = rows.len();
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut m = LinearSystem::new((0..nrows).collect(), (0..ncols).collect());
    for (r, row) in rows.iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            m.add(r, c, super::rat(v));
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn nondegenerate_2x2() {
        let m = from_int_rows(&[vec![4, -2], vec![-2, 4]]);
        let rk = m.rank_and_kernel();
        assert_eq!(rk.rank, 2);
        assert!(rk.kernel.is_empty());
    }

    #[test]
    fn degenerate_4x3_rank_2() {
        // rows of the first-order obstruction display with A=B=C=1
        let m = from_int_rows(&[
            vec![0, -1, 1],
            vec![0, 1, -1],
            vec![-2, 2, 0],
            vec![-2, 0, 2],
        ]);
        let rk = m.rank_and_kernel();
        assert_eq!(rk.rank, 2);
        assert_eq!(rk.kernel_dim(), 1);
        for v in &rk.kernel {
            assert!(m.apply(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn zero_matrix() {
        let m = from_int_rows(&[vec![0, 0, 0], vec![0, 0, 0], vec![0, 0, 0]]);
        let rk = m.rank_and_kernel();
        assert_eq!(rk.rank, 0);
        assert_eq!(rk.kernel_dim(), 3);
        // identity basis
        for (i, v) in rk.kernel.iter().enumerate() {
            for (j, x) in v.iter().enumerate() {
                assert_eq!(*x, if i == j { rat(1) } else { rat(0) });
            }
        }
    }

    #[test]
    fn no_rows() {
        let m: LinearSystem<usize, usize> = LinearSystem::new(vec![], vec![0, 1]);
        let rk = m.rank_and_kernel();
        assert_eq!(rk.rank, 0);
        assert_eq!(rk.kernel_dim(), 2);
    }

    #[test]
    fn rational_entries() {
        let mut m: LinearSystem<usize, usize> = LinearSystem::new(vec![0, 1], vec![0, 1, 2]);
        m.add(0, 0, crate::algebra::ratio(1, 2));
        m.add(0, 1, rat(1));
        m.add(1, 0, crate::algebra::ratio(1, 3));
        m.add(1, 1, crate::algebra::ratio(2, 3));
        // row1 = (1/2, 1, 0), row2 = (1/3, 2/3, 0): proportional
        let rk = m.rank_and_kernel();
        assert_eq!(rk.rank, 1);
        assert_eq!(rk.kernel_dim(), 2);
        for v in &rk.kernel {
            assert!(m.apply(v).iter().all(|x| x.is_zero()));
        }
    }
}
