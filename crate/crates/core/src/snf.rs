//! Exact integer Smith normal form.
//!
//! Large sparse matrices are first reduced by unit pivots (each one splits
//! off a `ℤ/1` summand); what remains goes through a dense arbitrary
//! precision elimination.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Sparse integer matrix stored by rows.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntegerMatrix {
    cols: usize,
    rows: Vec<BTreeMap<usize, i64>>,
}

impl IntegerMatrix {
    pub fn new(cols: usize) -> Self {
        IntegerMatrix { cols, rows: Vec::new() }
    }

    /// Adds a row given as `(column, value)` entries; repeated columns add up.
    pub fn push_row(&mut self, entries: impl IntoIterator<Item = (usize, i64)>) {
        let mut row = BTreeMap::new();
        for (c, v) in entries {
            assert!(c < self.cols, "column {c} out of range");
            *row.entry(c).or_insert(0) += v;
        }
        row.retain(|_, v| *v != 0);
        self.rows.push(row);
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    pub fn nonzeros(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.rows[r].get(&c).copied().unwrap_or(0)
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        self.rows
            .iter()
            .map(|row| {
                let mut dense = vec![BigInt::zero(); self.cols];
                for (&c, &v) in row {
                    dense[c] = BigInt::from(v);
                }
                dense
            })
            .collect()
    }

    /// Same matrix with rows and columns reordered: new row `i` is old row
    /// `row_order[i]`, new column `j` is old column `col_order[j]`.
    pub fn permuted(&self, row_order: &[usize], col_order: &[usize]) -> IntegerMatrix {
        let mut where_col = vec![0; self.cols];
        for (new, &old) in col_order.iter().enumerate() {
            where_col[old] = new;
        }
        let mut out = IntegerMatrix::new(self.cols);
        for &r in row_order {
            out.push_row(self.rows[r].iter().map(|(&c, &v)| (where_col[c], v)));
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianInvariants {
    pub rank: usize,
    pub free_rank: usize,
    /// Invariant factors greater than one, in divisibility order.
    pub torsion: Vec<BigInt>,
}

/// Rank, free rank and torsion of `ℤ^cols / rowspace`.
pub fn abelian_invariants(m: &IntegerMatrix) -> AbelianInvariants {
    let (unit_rank, rest) = sparse_unit_elimination(m);
    let dense = rest.to_dense();
    let smith = smith_normal_form(&dense, rest.col_count(), false);
    let rank = unit_rank + smith.diagonal.len();
    AbelianInvariants {
        rank,
        free_rank: m.col_count() - rank,
        torsion: smith.diagonal.into_iter().filter(|d| !d.is_one()).collect(),
    }
}

/// Repeatedly eliminates a `±1` entry of least Markowitz cost. Returns the
/// number of pivots and the remaining matrix (compacted, pivot-free).
/// Stops early if an entry would overflow `i64`; everything done up to
/// that point is exact.
pub fn sparse_unit_elimination(m: &IntegerMatrix) -> (usize, IntegerMatrix) {
    let mut rows: Vec<BTreeMap<usize, i64>> = m.rows.clone();
    let mut alive: BTreeSet<usize> = (0..rows.len()).filter(|&r| !rows[r].is_empty()).collect();
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m.cols];
    for &r in &alive {
        for &c in rows[r].keys() {
            col_rows[c].insert(r);
        }
    }
    let mut dead_cols = vec![false; m.cols];
    let mut pivots = 0;
    'outer: loop {
        let mut best: Option<(usize, usize, usize)> = None;
        for &r in &alive {
            let rl = rows[r].len() - 1;
            for (&c, &v) in &rows[r] {
                if v.abs() == 1 {
                    let cost = rl * (col_rows[c].len() - 1);
                    if best.is_none_or(|(b, _, _)| cost < b) {
                        best = Some((cost, r, c));
                    }
                }
            }
            if best.is_some_and(|(cost, _, _)| cost == 0) {
                break;
            }
        }
        let Some((_, p, c)) = best else { break };
        let pivot_row = rows[p].clone();
        let s = pivot_row[&c];
        let others: Vec<usize> = col_rows[c].iter().copied().filter(|&r| r != p).collect();
        // check for overflow before mutating anything
        for &r in &others {
            let f = rows[r][&c] * s;
            for (&cc, &v) in &pivot_row {
                let cur = rows[r].get(&cc).copied().unwrap_or(0);
                if f.checked_mul(v).and_then(|x| cur.checked_sub(x)).is_none() {
                    break 'outer;
                }
            }
        }
        for &r in &others {
            let f = rows[r][&c] * s;
            for (&cc, &v) in &pivot_row {
                let entry = rows[r].entry(cc).or_insert(0);
                *entry -= f * v;
                if *entry == 0 {
                    rows[r].remove(&cc);
                    col_rows[cc].remove(&r);
                } else {
                    col_rows[cc].insert(r);
                }
            }
            if rows[r].is_empty() {
                alive.remove(&r);
            }
        }
        for &cc in pivot_row.keys() {
            col_rows[cc].remove(&p);
        }
        rows[p].clear();
        alive.remove(&p);
        dead_cols[c] = true;
        pivots += 1;
    }
    let live_cols: Vec<usize> = (0..m.cols).filter(|&c| !dead_cols[c]).collect();
    let mut index = vec![usize::MAX; m.cols];
    for (i, &c) in live_cols.iter().enumerate() {
        index[c] = i;
    }
    let mut rest = IntegerMatrix::new(live_cols.len());
    for &r in &alive {
        rest.push_row(rows[r].iter().map(|(&c, &v)| (index[c], v)));
    }
    (pivots, rest)
}

/// `U · M · V = D` with `U`, `V` unimodular and `D` diagonal with
/// `d₁ | d₂ | …`; the transforms are only kept when asked for.
#[derive(Clone, Debug)]
pub struct SmithForm {
    /// Nonzero diagonal entries, all positive.
    pub diagonal: Vec<BigInt>,
    pub left: Option<Vec<Vec<BigInt>>>,
    pub right: Option<Vec<Vec<BigInt>>>,
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

fn row_axpy(m: &mut [Vec<BigInt>], target: usize, q: &BigInt, source: usize) {
    // row_target -= q * row_source
    let (src, dst) = if source < target {
        let (a, b) = m.split_at_mut(target);
        (&a[source], &mut b[0])
    } else {
        let (a, b) = m.split_at_mut(source);
        (&b[0], &mut a[target])
    };
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d -= q * s;
        }
    }
}

fn col_axpy(m: &mut [Vec<BigInt>], target: usize, q: &BigInt, source: usize) {
    for row in m.iter_mut() {
        if !row[source].is_zero() {
            let delta = q * &row[source];
            row[target] -= delta;
        }
    }
}

pub fn smith_normal_form(matrix: &[Vec<BigInt>], cols: usize, track: bool) -> SmithForm {
    let rows = matrix.len();
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut u = track.then(|| identity(rows));
    let mut v = track.then(|| identity(cols));
    let mut t = 0;
    while t < rows.min(cols) {
        let mut min: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero() && min.is_none_or(|(mi, mj)| a[i][j].abs() < a[mi][mj].abs()) {
                    min = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = min else { break };
        a.swap(t, pi);
        if let Some(u) = u.as_mut() {
            u.swap(t, pi);
        }
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        if let Some(v) = v.as_mut() {
            for row in v.iter_mut() {
                row.swap(t, pj);
            }
        }
        let mut clean = true;
        for i in t + 1..rows {
            if a[i][t].is_zero() {
                continue;
            }
            let q = a[i][t].div_floor(&a[t][t]);
            row_axpy(&mut a, i, &q, t);
            if let Some(u) = u.as_mut() {
                row_axpy(u, i, &q, t);
            }
            clean &= a[i][t].is_zero();
        }
        for j in t + 1..cols {
            if a[t][j].is_zero() {
                continue;
            }
            let q = a[t][j].div_floor(&a[t][t]);
            col_axpy(&mut a, j, &q, t);
            if let Some(v) = v.as_mut() {
                col_axpy(v, j, &q, t);
            }
            clean &= a[t][j].is_zero();
        }
        if !clean {
            continue;
        }
        let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
        if let Some(i) = bad {
            let minus_one = -BigInt::one();
            row_axpy(&mut a, t, &minus_one, i);
            if let Some(u) = u.as_mut() {
                row_axpy(u, t, &minus_one, i);
            }
            continue;
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -&*x;
            }
            if let Some(u) = u.as_mut() {
                for x in u[t].iter_mut() {
                    *x = -&*x;
                }
            }
        }
        t += 1;
    }
    SmithForm {
        diagonal: (0..t).map(|i| a[i][i].clone()).collect(),
        left: u,
        right: v,
    }
}

pub fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>], inner: usize, cols: usize) -> Vec<Vec<BigInt>> {
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner)
                        .filter(|&k| !row[k].is_zero())
                        .map(|k| &row[k] * &b[k][j])
                        .sum()
                })
                .collect()
        })
        .collect()
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut a = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let x = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = x / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    sign * &a[n - 1][n - 1]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn small_snf() {
        let m = big(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let s = smith_normal_form(&m, 3, true);
        assert_eq!(s.diagonal, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
        let (u, v) = (s.left.unwrap(), s.right.unwrap());
        let d = mat_mul(&mat_mul(&u, &m, 3, 3), &v, 3, 3);
        assert_eq!(d, big(&[&[2, 0, 0], &[0, 6, 0], &[0, 0, 12]]));
        assert_eq!(determinant(&u).abs(), BigInt::one());
        assert_eq!(determinant(&v).abs(), BigInt::one());
    }

    #[test]
    fn invariants_of_cyclic_quotients() {
        // ℤ² / ⟨(2, 0), (0, 3)⟩ = ℤ/6
        let mut m = IntegerMatrix::new(2);
        m.push_row([(0, 2)]);
        m.push_row([(1, 3)]);
        let inv = abelian_invariants(&m);
        assert_eq!(inv.rank, 2);
        assert_eq!(inv.free_rank, 0);
        assert_eq!(inv.torsion, vec![BigInt::from(6)]);
        // unit pivots plus a free column
        let mut m = IntegerMatrix::new(3);
        m.push_row([(0, 1), (1, -1)]);
        m.push_row([(1, 1), (0, -1)]);
        let inv = abelian_invariants(&m);
        assert_eq!((inv.rank, inv.free_rank), (1, 2));
        assert!(inv.torsion.is_empty());
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(determinant(&big(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(
            determinant(&big(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]])),
            BigInt::from(18)
        );
        assert_eq!(determinant(&big(&[&[1, 2], &[2, 4]])), BigInt::zero());
    }
}
