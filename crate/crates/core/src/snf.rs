//! Smith normal form over the integers.
//!
//! Boundary matrices are sparse and almost every pivot is a unit, so the
//! first pass eliminates unit pivots on a sparse row representation. The
//! small leftover block (empty for most spheres) goes through a textbook
//! dense reduction with smallest-entry pivoting.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Integer matrix stored as sparse columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseIntMatrix {
    rows: usize,
    cols: usize,
    /// `columns[j]` holds `(row, value)` pairs with nonzero values, sorted by row.
    columns: Vec<Vec<(usize, i64)>>,
}

impl SparseIntMatrix {
    pub fn new(rows: usize, cols: usize, columns: Vec<Vec<(usize, i64)>>) -> Self {
        assert_eq!(columns.len(), cols);
        let columns = columns
            .into_iter()
            .map(|mut c| {
                c.retain(|&(_, v)| v != 0);
                c.sort_unstable();
                assert!(c.iter().all(|&(r, _)| r < rows));
                c
            })
            .collect();
        Self { rows, cols, columns }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> &[(usize, i64)] {
        &self.columns[j]
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.columns[j]
            .binary_search_by_key(&i, |&(r, _)| r)
            .map(|k| self.columns[j][k].1)
            .unwrap_or(0)
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut dense = vec![vec![0; self.cols]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                dense[i][j] = v;
            }
        }
        dense
    }

    /// `self * other`, with `i64` arithmetic.
    pub fn mul(&self, other: &Self) -> Vec<Vec<i64>> {
        assert_eq!(self.cols, other.rows);
        let mut out = vec![vec![0; other.cols]; self.rows];
        for (j, col) in other.columns.iter().enumerate() {
            for &(k, b) in col {
                for &(i, a) in &self.columns[k] {
                    out[i][j] += a * b;
                }
            }
        }
        out
    }
}

/// Invariant factors `d_1 | d_2 | ... | d_r` (all positive) of `matrix`;
/// `r` is its rank.
pub fn invariant_factors(matrix: &SparseIntMatrix) -> Vec<BigInt> {
    let mut rows: Vec<BTreeMap<usize, BigInt>> = vec![BTreeMap::new(); matrix.rows];
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); matrix.cols];
    for (j, col) in matrix.columns.iter().enumerate() {
        for &(i, v) in col {
            rows[i].insert(j, BigInt::from(v));
            col_rows[j].insert(i);
        }
    }

    let mut units = 0usize;
    while let Some((r, c)) = pick_unit_pivot(&rows, &col_rows) {
        let pivot_row = std::mem::take(&mut rows[r]);
        let u = pivot_row[&c].clone();
        let others: Vec<usize> = col_rows[c].iter().copied().filter(|&i| i != r).collect();
        for i in others {
            // row_i -= (a / u) * row_r, and 1/u = u for a unit
            let factor = &rows[i][&c] * &u;
            for (&j, v) in &pivot_row {
                let entry = rows[i].entry(j).or_insert_with(BigInt::zero);
                *entry -= &factor * v;
                if entry.is_zero() {
                    rows[i].remove(&j);
                    col_rows[j].remove(&i);
                } else {
                    col_rows[j].insert(i);
                }
            }
        }
        // Column c is now zero outside row r; clearing the rest of row r with
        // column operations touches nothing else, so row r and column c drop out.
        for &j in pivot_row.keys() {
            col_rows[j].remove(&r);
        }
        units += 1;
    }

    let live_rows: Vec<usize> = (0..rows.len()).filter(|&i| !rows[i].is_empty()).collect();
    let live_cols: Vec<usize> = (0..col_rows.len()).filter(|&j| !col_rows[j].is_empty()).collect();
    let mut dense: Vec<Vec<BigInt>> = live_rows
        .iter()
        .map(|&i| live_cols.iter().map(|j| rows[i].get(j).cloned().unwrap_or_default()).collect())
        .collect();

    let mut factors = vec![BigInt::one(); units];
    factors.extend(dense_invariant_factors(&mut dense));
    factors
}

/// Unit entry minimizing the Markowitz count `(row_len - 1) * (col_len - 1)`.
fn pick_unit_pivot(
    rows: &[BTreeMap<usize, BigInt>],
    col_rows: &[BTreeSet<usize>],
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    for (i, row) in rows.iter().enumerate() {
        for (&j, v) in row {
            if v.abs().is_one() {
                let cost = (row.len() - 1) * (col_rows[j].len() - 1);
                if best.is_none_or(|(b, _, _)| cost < b) {
                    best = Some((cost, i, j));
                    if cost == 0 {
                        return Some((i, j));
                    }
                }
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Dense Smith reduction in place; returns the nonzero diagonal.
pub fn dense_invariant_factors(a: &mut [Vec<BigInt>]) -> Vec<BigInt> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..m.min(n) {
        let Some((pi, pj)) = smallest_nonzero(a, t, t) else { break };
        a.swap(t, pi);
        swap_cols(a, t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                let (upper, lower) = a.split_at_mut(i);
                for (x, p) in lower[0][t..n].iter_mut().zip(&upper[t][t..n]) {
                    *x -= &q * p;
                }
                if !a[i][t].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let s = &q * &row[t];
                    row[j] -= s;
                }
                if !a[t][j].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                let (pi, pj) = smallest_in_cross(a, t);
                a.swap(t, pi);
                swap_cols(a, t, pj);
                continue;
            }
            // Row and column t are clear; enforce divisibility of the rest.
            let bad = (t + 1..m)
                .find(|&i| (t + 1..n).any(|j| !(&a[i][j] % &a[t][t]).is_zero()));
            match bad {
                Some(i) => {
                    let (upper, lower) = a.split_at_mut(i);
                    for (x, v) in upper[t][t..n].iter_mut().zip(&lower[0][t..n]) {
                        *x += v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    diag
}

fn swap_cols(a: &mut [Vec<BigInt>], x: usize, y: usize) {
    if x != y {
        for row in a.iter_mut() {
            row.swap(x, y);
        }
    }
}

fn smallest_nonzero(a: &[Vec<BigInt>], r0: usize, c0: usize) -> Option<(usize, usize)> {
    let mut best: Option<(BigInt, usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(r0) {
        for (j, v) in row.iter().enumerate().skip(c0) {
            if !v.is_zero() && best.as_ref().is_none_or(|(b, _, _)| v.abs() < *b) {
                best = Some((v.abs(), i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Smallest nonzero entry in row `t` or column `t` (the pivot included).
fn smallest_in_cross(a: &[Vec<BigInt>], t: usize) -> (usize, usize) {
    let mut best = (a[t][t].abs(), t, t);
    for (i, row) in a.iter().enumerate().skip(t + 1) {
        if !row[t].is_zero() && row[t].abs() < best.0 {
            best = (row[t].abs(), i, t);
        }
    }
    for (j, v) in a[t].iter().enumerate().skip(t + 1) {
        if !v.is_zero() && v.abs() < best.0 {
            best = (v.abs(), t, j);
        }
    }
    (best.1, best.2)
}
