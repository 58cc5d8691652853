//! Sparse row reduction over `Q`.
//!
//! Rows are inserted one at a time and reduced against the pivots found so
//! far, so rank is available incrementally. [`RowReducer::nullspace`] finishes
//! with back-substitution to reduced row echelon form.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// Sparse row: `(column, value)` pairs, strictly increasing columns, no zeros.
pub type SparseRow = Vec<(usize, Scalar)>;

/// Builds a sparse row from arbitrary `(column, value)` pairs, summing
/// duplicates and dropping zeros.
pub fn sparse_row<I: IntoIterator<Item = (usize, Scalar)>>(entries: I) -> SparseRow {
    let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
    for (c, v) in entries {
        *acc.entry(c).or_insert_with(Scalar::zero) += v;
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// `a - factor * b` on sparse rows.
fn axpy(a: &[(usize, Scalar)], factor: &Scalar, b: &[(usize, Scalar)]) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, -(factor * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - factor * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct RowReducer {
    ncols: usize,
    /// pivot column -> row with a leading 1 in that column
    pivots: BTreeMap<usize, SparseRow>,
    rows_seen: usize,
}

impl RowReducer {
    pub fn new(ncols: usize) -> Self {
        Self { ncols, pivots: BTreeMap::new(), rows_seen: 0 }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn rows_seen(&self) -> usize {
        self.rows_seen
    }

    /// Reduces `row` against the current pivots. Returns `true` when the row
    /// was independent of everything inserted before.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        self.rows_seen += 1;
        debug_assert!(row.iter().all(|(c, _)| *c < self.ncols));
        let mut row = row;
        let mut k = 0;
        while k < row.len() {
            let col = row[k].0;
            if let Some(p) = self.pivots.get(&col) {
                let f = row[k].1.clone();
                // entries before k are untouched: pivot rows start at `col`
                let tail = axpy(&row[k..], &f, p);
                row.truncate(k);
                row.extend(tail);
            } else {
                k += 1;
            }
        }
        if row.is_empty() {
            return false;
        }
        let lead = row[0].1.clone();
        if !lead.is_one() {
            let inv = lead.recip();
            for (_, v) in row.iter_mut() {
                *v *= &inv;
            }
        }
        self.pivots.insert(row[0].0, row);
        true
    }

    /// Basis of the right nullspace `{x : A x = 0}`, one sparse vector per
    /// free column, in increasing free-column order. Each vector has a 1 in
    /// its free column.
    pub fn nullspace(&self) -> Vec<SparseRow> {
        let rref = self.rref();
        let mut out = Vec::new();
        for f in (0..self.ncols).filter(|c| !rref.contains_key(c)) {
            let mut v: Vec<(usize, Scalar)> = Vec::new();
            for (&pc, row) in &rref {
                if let Ok(idx) = row.binary_search_by_key(&f, |(c, _)| *c) {
                    v.push((pc, -row[idx].1.clone()));
                }
            }
            v.push((f, Scalar::one()));
            v.sort_by_key(|(c, _)| *c);
            out.push(v);
        }
        out
    }

    /// Reduced row echelon form keyed by pivot column.
    pub fn rref(&self) -> BTreeMap<usize, SparseRow> {
        let mut rows = self.pivots.clone();
        let cols: Vec<usize> = rows.keys().copied().rev().collect();
        for c in cols {
            let pivot = rows[&c].clone();
            for (&other, row) in rows.range_mut(..c) {
                debug_assert!(other < c);
                if let Ok(idx) = row.binary_search_by_key(&c, |(col, _)| *col) {
                    let f = row[idx].1.clone();
                    *row = axpy(row, &f, &pivot);
                }
            }
        }
        rows
    }
}

/// Rank of a dense matrix given as rows.
pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut red = RowReducer::new(ncols);
    for r in rows {
        red.insert(r.iter().cloned().enumerate().filter(|(_, v)| !v.is_zero()).collect());
    }
    red.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn dense(rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn rank_small_cases() {
        assert_eq!(rank(&dense(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&dense(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]])), 3);
        assert_eq!(rank(&dense(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn nullspace_vectors_are_annihilated() {
        let a = dense(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let mut red = RowReducer::new(4);
        for r in &a {
            red.insert(r.iter().cloned().enumerate().filter(|(_, v)| !v.is_zero()).collect());
        }
        let ns = red.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for r in &a {
                let dot: Scalar = v.iter().map(|(c, x)| x * &r[*c]).sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn sparse_row_merges_duplicates() {
        let r = sparse_row(vec![(3, int(1)), (1, int(2)), (3, int(-1))]);
        assert_eq!(r, vec![(1, int(2))]);
    }
}
