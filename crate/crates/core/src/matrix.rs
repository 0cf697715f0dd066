//! Dense exact-rational matrices and the row-reduction routines used for
//! rank and kernel computations.
//!
//! Matrices here are small (at most a few thousand rows) but must be exact,
//! so everything is `Rational`-valued. Multiplication skips zero entries,
//! which makes products of the signed-permutation matrices that dominate
//! this crate effectively quadratic instead of cubic.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::{One, Zero};

use crate::rat::Rational;

#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut m = QMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn diagonal(diag: &[Rational]) -> Self {
        let mut m = QMatrix::zeros(diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn diag(&self) -> Vec<Rational> {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .collect()
    }

    pub fn add(&self, other: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, other: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a -= b;
        }
        out
    }

    pub fn neg(&self) -> QMatrix {
        let mut out = self.clone();
        for a in out.entries.iter_mut() {
            *a = -a.clone();
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> QMatrix {
        let mut out = self.clone();
        for a in out.entries.iter_mut() {
            *a *= c;
        }
        out
    }

    /// Matrix product, skipping zero entries of both factors.
    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    out[(i, j)] += a * b;
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![Rational::zero(); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() || v[j].is_zero() {
                    continue;
                }
                out[i] += a * &v[j];
            }
        }
        out
    }

    /// Kronecker product: `(A ⊗ B)[(i·p+k, j·q+l)] = A[i,j]·B[k,l]`.
    pub fn kron(&self, other: &QMatrix) -> QMatrix {
        let (p, q_) = (other.rows, other.cols);
        let mut out = QMatrix::zeros(self.rows * p, self.cols * q_);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..p {
                    for l in 0..q_ {
                        let b = &other[(k, l)];
                        if b.is_zero() {
                            continue;
                        }
                        out[(i * p + k, j * q_ + l)] = a * b;
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> QMatrix {
        assert!(self.is_square());
        let mut acc = QMatrix::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Rank by Gaussian elimination over ℚ. Exact.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            let pivot = (rank..m.rows).find(|&r| !m[(r, col)].is_zero());
            let Some(p) = pivot else { continue };
            m.swap_rows(rank, p);
            let inv = m[(rank, col)].clone();
            for j in col..m.cols {
                let v = m[(rank, j)].clone() / &inv;
                m[(rank, j)] = v;
            }
            for r in 0..m.rows {
                if r != rank && !m[(r, col)].is_zero() {
                    let f = m[(r, col)].clone();
                    for j in col..m.cols {
                        let s = &m[(rank, j)] * &f;
                        m[(r, j)] -= s;
                    }
                }
            }
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        rank
    }

    /// Right null space basis by dense row reduction. Each returned vector v
    /// satisfies `self · v = 0`; the basis is in reduced echelon form.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let mut m = self.clone();
        let mut pivot_of_col: Vec<Option<usize>> = vec![None; m.cols];
        let mut rank = 0;
        for col in 0..m.cols {
            let pivot = (rank..m.rows).find(|&r| !m[(r, col)].is_zero());
            let Some(p) = pivot else { continue };
            m.swap_rows(rank, p);
            let inv = m[(rank, col)].clone();
            for j in col..m.cols {
                let v = m[(rank, j)].clone() / &inv;
                m[(rank, j)] = v;
            }
            for r in 0..m.rows {
                if r != rank && !m[(r, col)].is_zero() {
                    let f = m[(r, col)].clone();
                    for j in col..m.cols {
                        let s = &m[(rank, j)] * &f;
                        m[(r, j)] -= s;
                    }
                }
            }
            pivot_of_col[col] = Some(rank);
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        let mut basis = Vec::new();
        for free in 0..m.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![Rational::zero(); m.cols];
            v[free] = Rational::one();
            for (col, pr) in pivot_of_col.iter().enumerate() {
                if let Some(r) = pr {
                    v[col] = -m[(*r, free)].clone();
                }
            }
            basis.push(v);
        }
        basis
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl Index<(usize, usize)> for QMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Sparse right null space for large, mostly-triangular systems.
///
/// `rows` are sparse linear forms over `ncols` unknowns. Returns a basis of
/// the joint kernel. Elimination keeps pivot rows mutually reduced, so the
/// basis can be read off directly.
pub fn sparse_nullspace(
    rows: Vec<BTreeMap<usize, Rational>>,
    ncols: usize,
) -> Vec<Vec<Rational>> {
    // pivot column -> fully reduced row with a 1 in that column
    let mut pivots: BTreeMap<usize, BTreeMap<usize, Rational>> = BTreeMap::new();
    for mut row in rows {
        loop {
            row.retain(|_, v| !v.is_zero());
            let Some((&lead, _)) = row.iter().next() else {
                break;
            };
            if let Some(p) = pivots.get(&lead) {
                let factor = row[&lead].clone();
                for (c, v) in p {
                    let e = row.entry(*c).or_insert_with(Rational::zero);
                    *e -= &factor * v;
                }
            } else {
                let lv = row[&lead].clone();
                for v in row.values_mut() {
                    *v /= &lv;
                }
                row.retain(|_, v| !v.is_zero());
                for prow in pivots.values_mut() {
                    if let Some(f) = prow.get(&lead).cloned() {
                        for (c, v) in &row {
                            let e = prow.entry(*c).or_insert_with(Rational::zero);
                            *e -= &f * v;
                        }
                        prow.retain(|_, v| !v.is_zero());
                    }
                }
                pivots.insert(lead, row);
                break;
            }
        }
    }
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivots.contains_key(&free) {
            continue;
        }
        let mut v = vec![Rational::zero(); ncols];
        v[free] = Rational::one();
        for (col, prow) in &pivots {
            if let Some(c) = prow.get(&free) {
                v[*col] = -c.clone();
            }
        }
        basis.push(v);
    }
    basis
}
