//! Exact rank and kernel computations over a [`Field`].
//!
//! Vectors are sparse: `(index, value)` pairs sorted by index. The echelon
//! form is built incrementally, pivoting on the smallest index of each
//! incoming vector.

use std::collections::HashMap;

use super::field::Field;

pub type SparseVec<E> = Vec<(usize, E)>;

fn axpy<F: Field>(field: &F, v: &[(usize, F::Elem)], c: &F::Elem, w: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
    // v - c * w
    let mut out = Vec::with_capacity(v.len() + w.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < w.len() {
        let next_v = v.get(i).map(|p| p.0).unwrap_or(usize::MAX);
        let next_w = w.get(j).map(|p| p.0).unwrap_or(usize::MAX);
        if next_v < next_w {
            out.push(v[i].clone());
            i += 1;
        } else if next_w < next_v {
            out.push((next_w, field.neg(&field.mul(c, &w[j].1))));
            j += 1;
        } else {
            let x = field.sub(&v[i].1, &field.mul(c, &w[j].1));
            if !field.is_zero(&x) {
                out.push((next_v, x));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Sorts by index and sums duplicates.
pub fn normalize<F: Field>(field: &F, mut v: SparseVec<F::Elem>) -> SparseVec<F::Elem> {
    v.sort_by_key(|p| p.0);
    let mut out: SparseVec<F::Elem> = Vec::with_capacity(v.len());
    for (i, x) in v {
        match out.last_mut() {
            Some(last) if last.0 == i => last.1 = field.add(&last.1, &x),
            _ => out.push((i, x)),
        }
    }
    out.retain(|p| !field.is_zero(&p.1));
    out
}

#[derive(Debug, Clone)]
struct Row<E> {
    vec: SparseVec<E>,
    combo: SparseVec<E>,
}

/// Incremental row echelon form. With tracking enabled, every inserted
/// vector that turns out dependent yields a kernel relation among the
/// inserted vectors.
#[derive(Debug, Clone)]
pub struct SparseEchelon<F: Field> {
    field: F,
    pivots: HashMap<usize, Row<F::Elem>>,
    track: bool,
    inserted: usize,
    kernel: Vec<SparseVec<F::Elem>>,
}

impl<F: Field> SparseEchelon<F> {
    pub fn new(field: &F) -> Self {
        SparseEchelon { field: field.clone(), pivots: HashMap::new(), track: false, inserted: 0, kernel: Vec::new() }
    }

    pub fn with_kernel(field: &F) -> Self {
        SparseEchelon { track: true, ..Self::new(field) }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Inserts `v` (sorted, zero-free). Returns whether it raised the rank.
    pub fn insert(&mut self, v: SparseVec<F::Elem>) -> bool {
        let f = &self.field;
        let id = self.inserted;
        self.inserted += 1;
        let mut vec = v;
        let mut combo: SparseVec<F::Elem> = if self.track { vec![(id, f.one())] } else { Vec::new() };
        while let Some((lead, c)) = vec.first().cloned() {
            match self.pivots.get(&lead) {
                Some(row) => {
                    vec = axpy(f, &vec, &c, &row.vec);
                    if self.track {
                        combo = axpy(f, &combo, &c, &row.combo);
                    }
                }
                None => {
                    let inv = f.inv(&c);
                    let scale = |w: &SparseVec<F::Elem>| w.iter().map(|(i, x)| (*i, f.mul(x, &inv))).collect();
                    let row = Row { vec: scale(&vec), combo: if self.track { scale(&combo) } else { Vec::new() } };
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
        if self.track {
            self.kernel.push(combo);
        }
        false
    }

    /// Kernel vectors, indexed by insertion order; a basis of all linear
    /// relations among the inserted vectors.
    pub fn kernel(&self) -> &[SparseVec<F::Elem>] {
        &self.kernel
    }

    pub fn into_kernel(self) -> Vec<SparseVec<F::Elem>> {
        self.kernel
    }
}

/// Rank of the span of `vectors`.
pub fn sparse_rank<F: Field, I: IntoIterator<Item = SparseVec<F::Elem>>>(field: &F, vectors: I) -> usize {
    let mut e = SparseEchelon::new(field);
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// Rank of a dense row-major matrix by Gaussian elimination.
pub fn dense_rank<F: Field>(field: &F, mut rows: Vec<Vec<F::Elem>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !field.is_zero(&rows[r][col])) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = field.inv(&rows[rank][col]);
        for x in rows[rank].iter_mut() {
            *x = field.mul(x, &inv);
        }
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || field.is_zero(&row[col]) {
                continue;
            }
            let c = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot).skip(col) {
                *x = field.sub(x, &field.mul(&c, y));
            }
        }
        rank += 1;
    }
    rank
}

/// Dense materialization of sparse vectors of length `len`.
pub fn densify<F: Field>(field: &F, vectors: &[SparseVec<F::Elem>], len: usize) -> Vec<Vec<F::Elem>> {
    vectors
        .iter()
        .map(|v| {
            let mut row = vec![field.zero(); len];
            for (i, x) in v {
                row[*i] = x.clone();
            }
            row
        })
        .collect()
}

/// Switch point between dense and sparse elimination, in matrix cells.
pub const DENSE_CELL_LIMIT: usize = 5_000_000;

/// Rank of `vectors` (each of length `len`), dense when the matrix has fewer
/// than [`DENSE_CELL_LIMIT`] cells.
pub fn rank_auto<F: Field>(field: &F, vectors: Vec<SparseVec<F::Elem>>, len: usize) -> usize {
    if vectors.len().saturating_mul(len) < DENSE_CELL_LIMIT {
        dense_rank(field, densify(field, &vectors, len))
    } else {
        sparse_rank(field, vectors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{PrimeField, Rationals};
    use proptest::prelude::*;

    fn k() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    #[test]
    fn rank_and_kernel() {
        let f = k();
        let rows: Vec<SparseVec<u32>> = vec![
            vec![(0, 1), (1, 2)],
            vec![(1, 1), (2, 1)],
            vec![(0, 1), (1, 3), (2, 1)],
            vec![(3, 5)],
        ];
        assert_eq!(sparse_rank(&f, rows.clone()), 3);
        assert_eq!(dense_rank(&f, densify(&f, &rows, 4)), 3);
        let mut e = SparseEchelon::with_kernel(&f);
        for r in rows.clone() {
            e.insert(r);
        }
        assert_eq!(e.kernel().len(), 1);
        // the relation is row0 + row1 - row2
        let rel = &e.kernel()[0];
        let mut total = vec![0u32; 4];
        for (idx, c) in rel {
            for (col, x) in &rows[*idx] {
                total[*col] = f.add(&total[*col], &f.mul(c, x));
            }
        }
        assert_eq!(total, vec![0; 4]);
    }

    #[test]
    fn normalize_sums_duplicates() {
        let f = k();
        assert_eq!(normalize(&f, vec![(2, 1), (0, 3), (2, 100)]), vec![(0, 3)]);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn sparse_matches_dense(entries in proptest::collection::vec(proptest::collection::vec(0i64..4, 6), 1..8)) {
            let f = k();
            let vecs: Vec<SparseVec<u32>> = entries
                .iter()
                .map(|r| r.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, &x)| (i, f.from_i64(x))).collect())
                .collect();
            let dense = dense_rank(&f, densify(&f, &vecs, 6));
            prop_assert_eq!(sparse_rank(&f, vecs.clone()), dense);
            let q = Rationals;
            let qvecs: Vec<SparseVec<_>> = entries
                .iter()
                .map(|r| r.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, &x)| (i, q.from_i64(x))).collect())
                .collect();
            // small entries: rank over Q bounds rank over F_101 from above
            prop_assert!(sparse_rank(&q, qvecs) >= dense);
        }
    }
}
