//! Exact rational linear algebra: sparse matrices, RREF, rank and kernels.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::ring::Q;

/// A sparse vector: strictly increasing column indices, no zero entries.
pub type SparseVec = Vec<(usize, Q)>;

#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Q>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RationalMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    pub fn from_dense(rows: &[Vec<Q>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = RationalMatrix::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let dense: Vec<Vec<Q>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| Q::from_integer(v.into())).collect())
            .collect();
        RationalMatrix::from_dense(&dense)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of bounds"
        );
        if v.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Q {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(Q::zero)
    }

    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &Q)> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn to_dense(&self) -> Vec<Vec<Q>> {
        let mut out = vec![vec![Q::zero(); self.cols]; self.rows];
        for (&(i, j), v) in &self.entries {
            out[i][j] = v.clone();
        }
        out
    }

    pub fn sparse_rows(&self) -> Vec<SparseVec> {
        let mut out = vec![Vec::new(); self.rows];
        for (&(i, j), v) in &self.entries {
            out[i].push((j, v.clone()));
        }
        out
    }

    pub fn transpose(&self) -> RationalMatrix {
        RationalMatrix {
            rows: self.cols,
            cols: self.rows,
            entries: self
                .entries
                .iter()
                .map(|(&(i, j), v)| ((j, i), v.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let right = other.sparse_rows();
        let mut out = RationalMatrix::zeros(self.rows, other.cols);
        let mut acc: BTreeMap<(usize, usize), Q> = BTreeMap::new();
        for (&(i, k), v) in &self.entries {
            for (j, w) in &right[k] {
                *acc.entry((i, *j)).or_insert_with(Q::zero) += v * w;
            }
        }
        for ((i, j), v) in acc {
            out.set(i, j, v);
        }
        out
    }

    pub fn scale(&self, c: &Q) -> RationalMatrix {
        let mut out = RationalMatrix::zeros(self.rows, self.cols);
        for (&(i, j), v) in &self.entries {
            out.set(i, j, v * c);
        }
        out
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![Q::zero(); self.rows];
        for (&(i, j), a) in &self.entries {
            out[i] += a * &v[j];
        }
        out
    }

    /// Exact rank via sparse elimination.
    pub fn rank(&self) -> usize {
        let mut basis = EchelonBasis::new();
        for row in self.sparse_rows() {
            basis.insert(row);
        }
        basis.rank()
    }

    /// Reduced row-echelon form and the pivot columns.
    ///
    /// Pivots are chosen as the smallest-magnitude nonzero entry of the
    /// current column (ties broken by row index), which keeps intermediate
    /// fractions small.
    pub fn rref(&self) -> (Vec<Vec<Q>>, Vec<usize>) {
        let mut a = self.to_dense();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let best = (r..self.rows)
                .filter(|&i| !a[i][c].is_zero())
                .min_by(|&i, &j| cmp_abs(&a[i][c], &a[j][c]).then(i.cmp(&j)));
            let Some(p) = best else { continue };
            a.swap(r, p);
            let inv = a[r][c].recip();
            for v in a[r].iter_mut().skip(c) {
                *v *= &inv;
            }
            let pivot_row = a[r].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                    if !p.is_zero() {
                        *v -= &f * p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    /// Rank together with a kernel basis (one vector per free column).
    pub fn rank_and_kernel(&self) -> (usize, Vec<Vec<Q>>) {
        let (rref, pivots) = self.rref();
        let rank = pivots.len();
        let mut is_pivot = vec![None; self.cols];
        for (row, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(row);
        }
        let mut kernel = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free].is_some() {
                continue;
            }
            let mut v = vec![Q::zero(); self.cols];
            v[free] = Q::one();
            for (row, &c) in pivots.iter().enumerate() {
                v[c] = -rref[row][free].clone();
            }
            kernel.push(v);
        }
        (rank, kernel)
    }
}

pub fn rank_and_kernel(m: &RationalMatrix) -> (usize, Vec<Vec<Q>>) {
    m.rank_and_kernel()
}

fn cmp_abs(x: &Q, y: &Q) -> Ordering {
    x.abs().cmp(&y.abs())
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} [", self.rows, self.cols)?;
        for row in self.to_dense() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Incrementally maintained row-echelon basis of a subspace of Q^N.
///
/// Each stored row has a distinct leading column and leading coefficient 1.
#[derive(Clone, Default)]
pub struct EchelonBasis {
    pivots: BTreeMap<usize, SparseVec>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        EchelonBasis::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the basis; the result is zero iff `row` lies in the span.
    pub fn reduce(&self, mut row: SparseVec) -> SparseVec {
        let mut from = 0;
        loop {
            let Some(pos) = row.iter().position(|(c, _)| *c >= from) else {
                return row;
            };
            let (c, coef) = row[pos].clone();
            match self.pivots.get(&c) {
                Some(p) => {
                    row = axpy(&row, p, &-coef);
                }
                None => from = c + 1,
            }
        }
    }

    /// Adds `row` to the span. Returns `true` if it was independent.
    pub fn insert(&mut self, row: SparseVec) -> bool {
        let mut row = row;
        loop {
            let Some((c, coef)) = row.first().cloned() else {
                return false;
            };
            match self.pivots.get(&c) {
                Some(p) => row = axpy(&row, p, &-coef),
                None => {
                    let inv = coef.recip();
                    for (_, v) in row.iter_mut() {
                        *v *= &inv;
                    }
                    self.pivots.insert(c, row);
                    return true;
                }
            }
        }
    }

    pub fn contains(&self, row: SparseVec) -> bool {
        self.reduce(row).is_empty()
    }
}

/// `x + c * y` for sparse vectors.
pub fn axpy(x: &SparseVec, y: &SparseVec, c: &Q) -> SparseVec {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j == y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i == x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push(x[i].clone());
            i += 1;
        } else if take_y {
            let v = &y[j].1 * c;
            if !v.is_zero() {
                out.push((y[j].0, v));
            }
            j += 1;
        } else {
            let v = &x[i].1 + &y[j].1 * c;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Converts a dense vector to sparse form.
pub fn sparse(v: &[Q]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

/// Dimension of the span of a family of dense vectors.
pub fn span_rank(vectors: &[Vec<Q>]) -> usize {
    let mut b = EchelonBasis::new();
    for v in vectors {
        b.insert(sparse(v));
    }
    b.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::q;

    #[test]
    fn t2_rank_and_kernel() {
        let m = RationalMatrix::from_i64(&[&[4, -2, -2], &[-2, 4, -2], &[-2, -2, 4]]);
        let (rank, ker) = m.rank_and_kernel();
        assert_eq!(rank, 2);
        assert_eq!(ker, vec![vec![q(1), q(1), q(1)]]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn identity_and_zero() {
        let (r, k) = RationalMatrix::identity(3).rank_and_kernel();
        assert_eq!((r, k.len()), (3, 0));
        let (r, k) = RationalMatrix::zeros(2, 2).rank_and_kernel();
        assert_eq!(r, 0);
        assert_eq!(k, vec![vec![q(1), q(0)], vec![q(0), q(1)]]);
    }

    #[test]
    fn empty_matrix() {
        let (r, k) = RationalMatrix::zeros(0, 0).rank_and_kernel();
        assert_eq!((r, k.len()), (0, 0));
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = RationalMatrix::from_i64(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let (r, ker) = m.rank_and_kernel();
        assert_eq!(r + ker.len(), 4);
        for v in ker {
            assert!(m.mul_vec(&v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn echelon_membership() {
        let mut b = EchelonBasis::new();
        assert!(b.insert(vec![(0, q(1)), (2, q(1))]));
        assert!(b.insert(vec![(1, q(2))]));
        assert!(!b.insert(vec![(0, q(3)), (1, q(1)), (2, q(3))]));
        assert!(b.contains(vec![(0, q(-1)), (2, q(-1))]));
        assert!(!b.contains(vec![(2, q(1))]));
    }
}
