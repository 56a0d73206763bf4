//! Exact rational linear algebra.
//!
//! Subspaces are always stored in reduced row echelon form, so two subspaces
//! of the same ambient space are equal exactly when their basis matrices are
//! identical. Pivots are chosen as the first nonzero entry in column order.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact scalar. Always kept in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Dense row-major matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from rows; every row must have length `cols`.
    pub fn from_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Self {
            rows: n,
            cols,
            entries,
        })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>], cols: usize) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
            cols,
        )
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vec<Rational>], rows: usize) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    found: col.len(),
                });
            }
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Rational]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &QMatrix) -> Result<QMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.entries[idx] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok(self
            .row_iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .fold(Rational::zero(), |a, b| a + b)
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new(self.cols);
        for row in self.row_iter() {
            ech.insert_dense(row.to_vec());
        }
        ech.rank()
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{} [", self.rows, self.cols)?;
        for row in self.row_iter() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Sparse row: strictly increasing column indices paired with nonzero values.
pub(crate) type SparseRow = Vec<(usize, Rational)>;

fn dense_to_sparse(dense: Vec<Rational>) -> SparseRow {
    dense
        .into_iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .collect()
}

/// `target -= c * source` on sparse rows.
fn sub_scaled(target: &SparseRow, c: &Rational, source: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(target.len() + source.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < source.len() {
        let ti = target.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let sj = source.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        if ti < sj {
            out.push(target[i].clone());
            i += 1;
        } else if sj < ti {
            out.push((sj, -(c * &source[j].1)));
            j += 1;
        } else {
            let v = &target[i].1 - c * &source[j].1;
            if !v.is_zero() {
                out.push((ti, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incrementally maintained reduced row echelon form.
///
/// Rows are kept fully reduced after every insertion, so reducing an incoming
/// row takes a single pass over the pivots.
#[derive(Clone, Debug)]
pub(crate) struct Echelon {
    cols: usize,
    // sorted by pivot column; each row has a 1 at its pivot and 0 at every other pivot
    pivots: Vec<(usize, SparseRow)>,
}

impl Echelon {
    pub(crate) fn new(cols: usize) -> Self {
        Self {
            cols,
            pivots: Vec::new(),
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub(crate) fn is_full(&self) -> bool {
        self.pivots.len() == self.cols
    }

    /// Reduces `dense` in place against the current pivots.
    pub(crate) fn reduce_dense(&self, dense: &mut [Rational]) {
        for (p, row) in &self.pivots {
            if dense[*p].is_zero() {
                continue;
            }
            let c = dense[*p].clone();
            for (k, v) in row {
                dense[*k] -= &c * v;
            }
        }
    }

    /// Returns true if the row enlarged the span.
    pub(crate) fn insert_dense(&mut self, mut dense: Vec<Rational>) -> bool {
        debug_assert_eq!(dense.len(), self.cols);
        if self.is_full() {
            return false;
        }
        self.reduce_dense(&mut dense);
        let Some(lead) = dense.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = dense[lead].recip();
        if !inv.is_one() {
            for x in dense[lead..].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let new_row = dense_to_sparse(dense);
        for (_, row) in self.pivots.iter_mut() {
            if let Ok(pos) = row.binary_search_by_key(&lead, |e| e.0) {
                let c = row[pos].1.clone();
                *row = sub_scaled(row, &c, &new_row);
            }
        }
        let at = self.pivots.partition_point(|(p, _)| *p < lead);
        self.pivots.insert(at, (lead, new_row));
        true
    }

    pub(crate) fn insert_sparse(&mut self, row: &[(usize, Rational)]) -> bool {
        if row.is_empty() || self.is_full() {
            return false;
        }
        let mut dense = vec![Rational::zero(); self.cols];
        for (k, v) in row {
            dense[*k] = v.clone();
        }
        self.insert_dense(dense)
    }

    fn pivot_columns(&self) -> Vec<usize> {
        self.pivots.iter().map(|(p, _)| *p).collect()
    }

    pub(crate) fn to_matrix(&self) -> QMatrix {
        let mut m = QMatrix::zeros(self.pivots.len(), self.cols);
        for (i, (_, row)) in self.pivots.iter().enumerate() {
            for (k, v) in row {
                m.set(i, *k, v.clone());
            }
        }
        m
    }

    pub(crate) fn into_subspace(self) -> Subspace {
        let pivot_cols = self.pivot_columns();
        Subspace {
            ambient: self.cols,
            basis: self.to_matrix(),
            pivot_cols,
        }
    }

    /// Null space of the row space: `{x : row . x = 0 for every row}`.
    pub(crate) fn null_space(&self) -> Subspace {
        let is_pivot = {
            let mut mask = vec![false; self.cols];
            for (p, _) in &self.pivots {
                mask[*p] = true;
            }
            mask
        };
        let mut out = Echelon::new(self.cols);
        // Free columns in decreasing order give vectors whose leading entries
        // are already distinct, but canonicalizing through `out` is simplest.
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Rational::zero(); self.cols];
            v[f] = Rational::one();
            for (p, row) in &self.pivots {
                if let Ok(pos) = row.binary_search_by_key(&f, |e| e.0) {
                    v[*p] = -row[pos].1.clone();
                }
            }
            out.insert_dense(v);
        }
        out.into_subspace()
    }
}

/// A linear subspace of `Q^n`, stored by its unique reduced row echelon basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: QMatrix,
    pivot_cols: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: QMatrix::zeros(0, ambient),
            pivot_cols: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            basis: QMatrix::identity(ambient),
            pivot_cols: (0..ambient).collect(),
        }
    }

    /// Span of the given vectors in canonical form.
    pub fn span<V: AsRef<[Rational]>>(vectors: &[V], ambient: usize) -> Result<Self> {
        let mut ech = Echelon::new(ambient);
        for v in vectors {
            let v = v.as_ref();
            if v.len() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    found: v.len(),
                });
            }
            ech.insert_dense(v.to_vec());
        }
        Ok(ech.into_subspace())
    }

    /// Span of coordinate unit vectors.
    pub fn coordinate(indices: impl IntoIterator<Item = usize>, ambient: usize) -> Self {
        let mut ech = Echelon::new(ambient);
        for i in indices {
            ech.insert_sparse(&[(i, Rational::one())]);
        }
        ech.into_subspace()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &QMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[Rational]> {
        self.basis.row_iter()
    }

    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivot_cols
    }

    pub(crate) fn echelon(&self) -> Echelon {
        Echelon {
            cols: self.ambient,
            pivots: self
                .pivot_cols
                .iter()
                .zip(self.basis.row_iter())
                .map(|(p, row)| (*p, dense_to_sparse(row.to_vec())))
                .collect(),
        }
    }

    fn check_ambient(&self, n: usize) -> Result<()> {
        if n != self.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: n,
            });
        }
        Ok(())
    }

    /// Remainder of `v` after subtracting its component along the pivot
    /// columns. Zero exactly when `v` lies in the subspace.
    pub fn reduce(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        self.check_ambient(v.len())?;
        let mut out = v.to_vec();
        for (p, row) in self.pivot_cols.iter().zip(self.basis.row_iter()) {
            if out[*p].is_zero() {
                continue;
            }
            let c = out[*p].clone();
            for (k, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    out[k] -= &c * x;
                }
            }
        }
        Ok(out)
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        Ok(self.reduce(v)?.iter().all(Zero::is_zero))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other.ambient)?;
        for v in other.basis_vectors() {
            if !self.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient)?;
        if self.dim() < other.dim() {
            return other.sum(self);
        }
        let mut ech = self.echelon();
        for v in other.basis_vectors() {
            ech.insert_dense(v.to_vec());
        }
        Ok(ech.into_subspace())
    }

    /// Orthogonal complement for the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        self.echelon().null_space()
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient)?;
        let ann = self.annihilator().sum(&other.annihilator())?;
        Ok(ann.annihilator())
    }

    /// Coordinates of the non-pivot columns of `reduce(v)`, indexed like
    /// [`Subspace::complement_columns`]. This is a linear projection onto the
    /// quotient by the subspace.
    pub fn quotient_coords(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        let r = self.reduce(v)?;
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivot_cols {
            is_pivot[p] = true;
        }
        Ok(r.into_iter()
            .enumerate()
            .filter(|(k, _)| !is_pivot[*k])
            .map(|(_, x)| x)
            .collect())
    }

    pub fn complement_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivot_cols {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|k| !is_pivot[*k]).collect()
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}) ", self.dim(), self.ambient)?;
        self.basis.fmt(f)
    }
}

/// Canonical span of the given coordinate vectors.
pub fn canonicalize<V: AsRef<[Rational]>>(vectors: &[V], ambient_dim: usize) -> Result<Subspace> {
    Subspace::span(vectors, ambient_dim)
}

/// `{x : m x = 0}`.
pub fn kernel(m: &QMatrix) -> Subspace {
    let mut ech = Echelon::new(m.cols());
    for row in m.row_iter() {
        ech.insert_dense(row.to_vec());
    }
    ech.null_space()
}

/// Kernel of the matrix whose rows are produced by `rows`, without
/// materializing the stacked matrix. Rows are sparse `(column, value)` lists.
pub(crate) fn kernel_of_rows<I>(cols: usize, rows: I) -> Subspace
where
    I: IntoIterator<Item = SparseRow>,
{
    let mut ech = Echelon::new(cols);
    for row in rows {
        if ech.is_full() {
            break;
        }
        ech.insert_sparse(&row);
    }
    ech.null_space()
}

pub fn subspace_sum(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.sum(b)
}

pub fn subspace_intersect(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.intersect(b)
}

pub fn contains(a: &Subspace, v: &[Rational]) -> Result<bool> {
    a.contains(v)
}

/// Renders a rational as `n` or `n/d`.
pub fn format_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}
