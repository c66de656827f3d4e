//! Exact sparse linear algebra: sparse vectors, row-sparse matrices,
//! incremental echelon forms, subspaces in reduced row echelon form, and
//! null spaces.
//!
//! Pivoting always takes the first nonzero column, so every basis that comes
//! out of this module is deterministic.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use crate::scalars::{Field, Scalar};

/// Sorted `(index, value)` pairs with no zero values.
pub type SparseVec = Vec<(usize, Scalar)>;

/// Sparse scratch accumulator keyed by index.
pub struct Accumulator {
    data: BTreeMap<usize, Scalar>,
}

impl Accumulator {
    pub fn new(_field: &Field, _len: usize) -> Self {
        Accumulator {
            data: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, field: &Field, i: usize, v: &Scalar) {
        match self.data.entry(i) {
            Entry::Occupied(mut e) => field.add_assign(e.get_mut(), v),
            Entry::Vacant(e) => {
                e.insert(v.clone());
            }
        }
    }

    pub fn add_product(&mut self, field: &Field, i: usize, x: &Scalar, y: &Scalar) {
        match self.data.entry(i) {
            Entry::Occupied(mut e) => field.mul_add_assign(e.get_mut(), x, y),
            Entry::Vacant(e) => {
                e.insert(field.mul(x, y));
            }
        }
    }

    /// Adds `c · v`.
    pub fn add_scaled(&mut self, field: &Field, c: &Scalar, v: &SparseVec) {
        for (i, x) in v {
            self.add_product(field, *i, c, x);
        }
    }

    /// Returns the accumulated vector and resets the accumulator.
    pub fn drain(&mut self, _field: &Field) -> SparseVec {
        std::mem::take(&mut self.data)
            .into_iter()
            .filter(|(_, v)| !v.is_zero())
            .collect()
    }
}

/// Eliminates, in increasing column order, every column of `work` that has a
/// pivot row; entries without a pivot are moved to the output. Pivot rows
/// have leading entry 1 and no entries to the left of it.
fn eliminate(
    field: &Field,
    mut work: BTreeMap<usize, Scalar>,
    pivot_of: impl Fn(usize) -> Option<usize>,
    rows: &[SparseVec],
) -> SparseVec {
    let mut out = Vec::new();
    while let Some((c, x)) = work.pop_first() {
        if x.is_zero() {
            continue;
        }
        match pivot_of(c) {
            Some(r) => {
                let neg = field.neg(&x);
                for (j, y) in rows[r].iter().skip(1) {
                    match work.entry(*j) {
                        Entry::Occupied(mut e) => field.mul_add_assign(e.get_mut(), &neg, y),
                        Entry::Vacant(e) => {
                            e.insert(field.mul(&neg, y));
                        }
                    }
                }
            }
            None => out.push((c, x)),
        }
    }
    out
}

pub fn sparse_from_dense(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn dense_from_sparse(field: &Field, v: &SparseVec, len: usize) -> Vec<Scalar> {
    let mut out = vec![field.zero(); len];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

pub fn unit_vector(field: &Field, i: usize) -> SparseVec {
    vec![(i, field.one())]
}

pub fn sparse_scale(field: &Field, c: &Scalar, v: &SparseVec) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, field.mul(c, x))).collect()
}

/// `a + c·b`, merging sorted supports.
pub fn sparse_axpy(field: &Field, a: &SparseVec, c: &Scalar, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            let v = field.mul(c, &b[j].1);
            if !v.is_zero() {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let mut v = a[i].1.clone();
            field.mul_add_assign(&mut v, c, &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn sparse_sub(field: &Field, a: &SparseVec, b: &SparseVec) -> SparseVec {
    sparse_axpy(field, a, &field.from_i64(-1), b)
}

/// Row-sparse matrix acting on row vectors from the right: `v ↦ v·M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<SparseVec>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        Matrix {
            rows: n,
            cols: n,
            data: (0..n).map(|i| unit_vector(field, i)).collect(),
        }
    }

    pub fn from_rows(cols: usize, data: Vec<SparseVec>) -> Self {
        Matrix {
            rows: data.len(),
            cols,
            data,
        }
    }

    pub fn from_dense(rows: &[Vec<Scalar>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Matrix {
            rows: rows.len(),
            cols,
            data: rows.iter().map(|r| sparse_from_dense(r)).collect(),
        }
    }

    pub fn to_dense(&self, field: &Field) -> Vec<Vec<Scalar>> {
        self.data
            .iter()
            .map(|r| dense_from_sparse(field, r, self.cols))
            .collect()
    }

    pub fn get(&self, field: &Field, i: usize, j: usize) -> Scalar {
        match self.data[i].binary_search_by_key(&j, |(k, _)| *k) {
            Ok(pos) => self.data[i][pos].1.clone(),
            Err(_) => field.zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    /// Row vector times matrix.
    pub fn apply(&self, field: &Field, v: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new(field, self.cols);
        for (i, x) in v {
            acc.add_scaled(field, x, &self.data[*i]);
        }
        acc.drain(field)
    }

    pub fn mul(&self, field: &Field, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut acc = Accumulator::new(field, other.cols);
        let data = self
            .data
            .iter()
            .map(|row| {
                for (i, x) in row {
                    acc.add_scaled(field, x, &other.data[*i]);
                }
                acc.drain(field)
            })
            .collect();
        Matrix {
            rows: self.rows,
            cols: other.cols,
            data,
        }
    }

    pub fn add(&self, field: &Field, other: &Matrix) -> Matrix {
        self.axpy(field, &field.one(), other)
    }

    pub fn sub(&self, field: &Field, other: &Matrix) -> Matrix {
        self.axpy(field, &field.from_i64(-1), other)
    }

    /// `self + c·other`.
    pub fn axpy(&self, field: &Field, c: &Scalar, other: &Matrix) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "matrix shape mismatch"
        );
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| sparse_axpy(field, a, c, b))
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, field: &Field, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|r| sparse_scale(field, c, r))
                .collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = vec![Vec::new(); self.cols];
        for (i, row) in self.data.iter().enumerate() {
            for (j, x) in row {
                data[*j].push((i, x.clone()));
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Kronecker product with the row/column index convention `(i, j) ↦ i·other + j`.
    pub fn kron(&self, field: &Field, other: &Matrix) -> Matrix {
        let mut data = Vec::with_capacity(self.rows * other.rows);
        for a in &self.data {
            for b in &other.data {
                let mut row = Vec::with_capacity(a.len() * b.len());
                for (i, x) in a {
                    for (j, y) in b {
                        row.push((i * other.cols + j, field.mul(x, y)));
                    }
                }
                data.push(row);
            }
        }
        Matrix {
            rows: self.rows * other.rows,
            cols: self.cols * other.cols,
            data,
        }
    }

    pub fn rank(&self, field: &Field) -> usize {
        let mut ech = Echelon::new(self.cols);
        for row in &self.data {
            ech.insert(field, row.clone());
        }
        ech.rank()
    }

    /// Left kernel `{v : v·M = 0}` as a list of basis row vectors.
    pub fn left_kernel(&self, field: &Field) -> Vec<SparseVec> {
        nullspace(field, self.rows, self.transpose().data)
    }

    /// Inverse of a square invertible matrix.
    pub fn inverse(&self, field: &Field) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let solver = BasisSolver::new(field, n, &self.data);
        if solver.rank() != n {
            return None;
        }
        let data = (0..n)
            .map(|i| {
                solver
                    .solve(field, &unit_vector(field, i))
                    .map(|c| sparse_from_dense(&c))
            })
            .collect::<Option<Vec<_>>>()?;
        Some(Matrix {
            rows: n,
            cols: n,
            data,
        })
    }
}

/// Incremental semi-echelon form: each stored row has leading entry 1 at a
/// column no other row leads with.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    pivot_row: Vec<Option<usize>>,
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            pivot_row: vec![None; ncols],
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Residual of `v` after eliminating every pivot column.
    pub fn reduce(&self, field: &Field, v: &SparseVec) -> SparseVec {
        eliminate(
            field,
            v.iter().cloned().collect(),
            |c| self.pivot_row[c],
            &self.rows,
        )
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, field: &Field, v: SparseVec) -> bool {
        let r = self.reduce(field, &v);
        self.push_reduced(field, r)
    }

    fn push_reduced(&mut self, field: &Field, r: SparseVec) -> bool {
        let Some((p, lead)) = r.first().cloned() else {
            return false;
        };
        let inv = field.inv(&lead).expect("nonzero leading entry");
        let row = sparse_scale(field, &inv, &r);
        self.pivot_row[p] = Some(self.rows.len());
        self.rows.push(row);
        self.pivots.push(p);
        true
    }

    pub fn contains(&self, field: &Field, v: &SparseVec) -> bool {
        self.reduce(field, v).is_empty()
    }

    /// Converts to reduced row echelon form, rows sorted by pivot column.
    pub fn into_rref(self, field: &Field) -> Subspace {
        let Echelon {
            ncols,
            rows,
            pivots,
            ..
        } = self;
        let mut order: Vec<usize> = (0..rows.len()).collect();
        order.sort_by_key(|&i| pivots[i]);
        let mut rows: Vec<SparseVec> = order.iter().map(|&i| rows[i].clone()).collect();
        let pivots: Vec<usize> = order.iter().map(|&i| pivots[i]).collect();
        let mut pivot_index = vec![None; ncols];
        for (k, &p) in pivots.iter().enumerate() {
            pivot_index[p] = Some(k);
        }
        // Back substitution from the last pivot up.
        for k in (0..rows.len()).rev() {
            let mut tail = rows[k].iter().skip(1).cloned().peekable();
            if tail.peek().is_none() {
                continue;
            }
            let reduced = eliminate(field, tail.collect(), |c| pivot_index[c], &rows);
            let mut row = Vec::with_capacity(reduced.len() + 1);
            row.push(rows[k][0].clone());
            row.extend(reduced);
            rows[k] = row;
        }
        Subspace {
            ambient: ncols,
            rows,
            pivots,
            pivot_index,
        }
    }
}

/// A subspace stored by its reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
    pivot_index: Vec<Option<usize>>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
            pivot_index: vec![None; ambient],
        }
    }

    pub fn from_vectors<I: IntoIterator<Item = SparseVec>>(
        field: &Field,
        ambient: usize,
        vectors: I,
    ) -> Self {
        let mut ech = Echelon::new(ambient);
        for v in vectors {
            ech.insert(field, v);
        }
        ech.into_rref(field)
    }

    /// Span of standard basis vectors.
    pub fn coordinate(field: &Field, ambient: usize, indices: &[usize]) -> Self {
        Subspace::from_vectors(
            field,
            ambient,
            indices.iter().map(|&i| unit_vector(field, i)),
        )
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residual of `v` modulo the subspace; supported on non-pivot columns.
    pub fn reduce(&self, field: &Field, v: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new(field, self.ambient);
        acc.add_scaled(field, &field.one(), v);
        for (i, x) in v {
            if let Some(k) = self.pivot_index[*i] {
                acc.add_scaled(field, &field.neg(x), &self.rows[k]);
            }
        }
        acc.drain(field)
    }

    pub fn contains(&self, field: &Field, v: &SparseVec) -> bool {
        self.reduce(field, v).is_empty()
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coords(&self, field: &Field, v: &SparseVec) -> Option<Vec<Scalar>> {
        if !self.contains(field, v) {
            return None;
        }
        let mut c = vec![field.zero(); self.dim()];
        for (i, x) in v {
            if let Some(k) = self.pivot_index[*i] {
                c[k] = x.clone();
            }
        }
        Some(c)
    }

    pub fn contains_subspace(&self, field: &Field, other: &Subspace) -> bool {
        other.rows.iter().all(|v| self.contains(field, v))
    }

    /// Non-pivot columns, which index a basis of the quotient.
    pub fn complement_columns(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| self.pivot_index[*c].is_none())
            .collect()
    }
}

/// Basis of `{x : r·x = 0 for every row r}` over `ncols` unknowns.
pub fn nullspace<I: IntoIterator<Item = SparseVec>>(
    field: &Field,
    ncols: usize,
    rows: I,
) -> Vec<SparseVec> {
    let mut ech = Echelon::new(ncols);
    for r in rows {
        ech.insert(field, r);
        if ech.rank() == ncols {
            return Vec::new();
        }
    }
    let sub = ech.into_rref(field);
    let mut out = Vec::new();
    for free in sub.complement_columns() {
        let mut v = vec![(free, field.one())];
        for (k, row) in sub.rows.iter().enumerate() {
            if let Ok(pos) = row.binary_search_by_key(&free, |(j, _)| *j) {
                v.push((sub.pivots[k], field.neg(&row[pos].1)));
            }
        }
        v.sort_by_key(|(j, _)| *j);
        out.push(v);
    }
    out
}

/// Expresses vectors in terms of a fixed (not necessarily echelon) list of vectors.
#[derive(Clone, Debug)]
pub struct BasisSolver {
    ambient: usize,
    count: usize,
    ech: Echelon,
}

impl BasisSolver {
    pub fn new(field: &Field, ambient: usize, basis: &[SparseVec]) -> Self {
        let count = basis.len();
        let mut ech = Echelon::new(ambient + count);
        for (k, b) in basis.iter().enumerate() {
            let mut aug = b.clone();
            aug.push((ambient + k, field.one()));
            ech.insert(field, aug);
        }
        BasisSolver {
            ambient,
            count,
            ech,
        }
    }

    /// Rank of the given list; it is a basis of its span iff this equals its length.
    pub fn rank(&self) -> usize {
        self.ech
            .pivots
            .iter()
            .filter(|&&p| p < self.ambient)
            .count()
    }

    /// Coefficients `c` with `v = Σ c_k b_k`, if `v` is in the span.
    pub fn solve(&self, field: &Field, v: &SparseVec) -> Option<Vec<Scalar>> {
        let r = self.ech.reduce(field, v);
        if r.first().is_some_and(|(j, _)| *j < self.ambient) {
            return None;
        }
        let mut c = vec![field.zero(); self.count];
        for (j, x) in r {
            c[j - self.ambient] = field.neg(&x);
        }
        Some(c)
    }
}
