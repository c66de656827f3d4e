//! Finite-dimensional associative algebras given by structure constants.
//!
//! Elements are sparse coordinate vectors in the algebra's basis. The
//! structure-constant table is filled lazily, so very large diagram algebras
//! only pay for the products a computation actually touches.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::lazy::LazyTable;
use super::linalg::{sparse_axpy, unit_vector, Accumulator, Echelon, Matrix, SparseVec, Subspace};
use crate::error::{Error, Result};
use crate::scalars::{Field, Scalar};

pub type Element = SparseVec;

/// Exhaustive structure checks are run up to this dimension; above it, random
/// triples are sampled.
pub const EXHAUSTIVE_CHECK_DIM: usize = 120;
pub const RANDOM_TRIPLES: usize = 1000;

#[derive(Clone, Debug)]
pub struct FinAlgebra {
    name: String,
    field: Field,
    dim: usize,
    labels: Arc<Vec<String>>,
    unit: Element,
    table: LazyTable<Element>,
    involution: Option<LazyTable<Element>>,
    generators: Arc<Vec<Element>>,
}

impl FinAlgebra {
    /// Algebra whose product `b_i · b_j` is produced on demand by `product`.
    pub fn from_fn<F>(
        name: impl Into<String>,
        field: Field,
        labels: Vec<String>,
        unit: Element,
        product: F,
    ) -> Self
    where
        F: Fn(usize, usize) -> Element + Send + Sync + 'static,
    {
        let dim = labels.len();
        let table = LazyTable::new(dim * dim, move |k| product(k / dim, k % dim));
        let generators = Arc::new((0..dim).map(|i| unit_vector(&field, i)).collect());
        FinAlgebra {
            name: name.into(),
            field,
            dim,
            labels: Arc::new(labels),
            unit,
            table,
            involution: None,
            generators,
        }
    }

    /// Algebra from an explicit table with `table[i * dim + j] = b_i · b_j`.
    pub fn from_table(
        name: impl Into<String>,
        field: Field,
        labels: Vec<String>,
        unit: Element,
        table: Vec<Element>,
    ) -> Self {
        let dim = labels.len();
        assert_eq!(table.len(), dim * dim, "structure table has wrong size");
        let generators = Arc::new((0..dim).map(|i| unit_vector(&field, i)).collect());
        FinAlgebra {
            name: name.into(),
            field,
            dim,
            labels: Arc::new(labels),
            unit,
            table: LazyTable::filled(table),
            involution: None,
            generators,
        }
    }

    /// The one-dimensional algebra spanned by its unit.
    pub fn base_field(field: &Field) -> Self {
        let f = field.clone();
        FinAlgebra::from_fn(
            "field",
            field.clone(),
            vec!["1".into()],
            unit_vector(field, 0),
            move |_, _| unit_vector(&f, 0),
        )
        .with_involution(unit_vector)
    }

    /// Attaches an anti-automorphism given by the images of basis vectors.
    pub fn with_involution<F>(mut self, image: F) -> Self
    where
        F: Fn(&Field, usize) -> Element + Send + Sync + 'static,
    {
        let field = self.field.clone();
        self.involution = Some(LazyTable::new(self.dim, move |i| image(&field, i)));
        self
    }

    /// Replaces the default generating set (all basis vectors).
    pub fn with_generators(mut self, generators: Vec<Element>) -> Self {
        self.generators = Arc::new(generators);
        self
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &Element {
        &self.unit
    }

    pub fn basis(&self, i: usize) -> Element {
        unit_vector(&self.field, i)
    }

    /// Elements generating the algebra as a unital algebra.
    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    pub fn has_involution(&self) -> bool {
        self.involution.is_some()
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &Element {
        self.table.get(i * self.dim + j)
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        let f = &self.field;
        let mut acc = Accumulator::new(f, self.dim);
        for (i, a) in x {
            for (j, b) in y {
                let ab = f.mul(a, b);
                acc.add_scaled(f, &ab, self.mul_basis(*i, *j));
            }
        }
        acc.drain(f)
    }

    pub fn add(&self, x: &Element, y: &Element) -> Element {
        sparse_axpy(&self.field, x, &self.field.one(), y)
    }

    pub fn sub(&self, x: &Element, y: &Element) -> Element {
        sparse_axpy(&self.field, x, &self.field.from_i64(-1), y)
    }

    pub fn scale(&self, c: &Scalar, x: &Element) -> Element {
        super::linalg::sparse_scale(&self.field, c, x)
    }

    pub fn star_basis(&self, i: usize) -> Option<&Element> {
        self.involution.as_ref().map(|t| t.get(i))
    }

    pub fn star(&self, x: &Element) -> Option<Element> {
        let inv = self.involution.as_ref()?;
        let mut acc = Accumulator::new(&self.field, self.dim);
        for (i, a) in x {
            acc.add_scaled(&self.field, a, inv.get(*i));
        }
        Some(acc.drain(&self.field))
    }

    /// Matrix of right multiplication `v ↦ v·x` on the regular module.
    pub fn right_mul_matrix(&self, x: &Element) -> Matrix {
        let rows = (0..self.dim).map(|i| self.mul(&self.basis(i), x)).collect();
        Matrix::from_rows(self.dim, rows)
    }

    /// Matrix of left multiplication `v ↦ x·v`, acting on row vectors.
    pub fn left_mul_matrix(&self, x: &Element) -> Matrix {
        let rows = (0..self.dim).map(|i| self.mul(x, &self.basis(i))).collect();
        Matrix::from_rows(self.dim, rows)
    }

    pub fn is_idempotent(&self, e: &Element) -> bool {
        self.mul(e, e) == *e
    }

    fn triples(&self, seed: u64) -> Vec<(usize, usize, usize)> {
        let d = self.dim;
        if d <= EXHAUSTIVE_CHECK_DIM {
            let mut out = Vec::with_capacity(d * d * d);
            for i in 0..d {
                for j in 0..d {
                    for k in 0..d {
                        out.push((i, j, k));
                    }
                }
            }
            out
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..RANDOM_TRIPLES)
                .map(|_| {
                    (
                        rng.gen_range(0..d),
                        rng.gen_range(0..d),
                        rng.gen_range(0..d),
                    )
                })
                .collect()
        }
    }

    /// First basis triple violating associativity, if any.
    pub fn associativity_witness(&self, seed: u64) -> Option<(usize, usize, usize)> {
        use rayon::prelude::*;
        let triples = self.triples(seed);
        triples.into_par_iter().find_first(|&(i, j, k)| {
            let left = self.mul(self.mul_basis(i, j), &self.basis(k));
            let right = self.mul(&self.basis(i), self.mul_basis(j, k));
            left != right
        })
    }

    /// First basis element on which the unit fails to act as identity.
    pub fn unit_witness(&self) -> Option<usize> {
        (0..self.dim).find(|&i| {
            let b = self.basis(i);
            self.mul(&self.unit, &b) != b || self.mul(&b, &self.unit) != b
        })
    }

    /// First basis pair violating `(xy)* = y* x*` or `x** = x`.
    pub fn involution_witness(&self, seed: u64) -> Option<(usize, usize)> {
        self.involution.as_ref()?;
        for i in 0..self.dim {
            let b = self.basis(i);
            if self.star(&self.star(&b)?)? != b {
                return Some((i, i));
            }
        }
        let d = self.dim;
        let pairs: Vec<(usize, usize)> = if d <= EXHAUSTIVE_CHECK_DIM {
            (0..d).flat_map(|i| (0..d).map(move |j| (i, j))).collect()
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..RANDOM_TRIPLES)
                .map(|_| (rng.gen_range(0..d), rng.gen_range(0..d)))
                .collect()
        };
        pairs.into_iter().find(|&(i, j)| {
            let lhs = self.star(self.mul_basis(i, j)).expect("involution present");
            let rhs = self.mul(
                self.star_basis(j).expect("involution"),
                self.star_basis(i).expect("involution"),
            );
            lhs != rhs
        })
    }

    /// Smallest two-sided ideal containing `gens`.
    pub fn ideal_span(&self, gens: &[Element]) -> Subspace {
        let f = &self.field;
        let mut ech = Echelon::new(self.dim);
        let mut queue: Vec<Element> = Vec::new();
        for g in gens {
            let r = ech.reduce(f, g);
            if !r.is_empty() {
                ech.insert(f, r.clone());
                queue.push(r);
            }
        }
        while let Some(v) = queue.pop() {
            for g in self.generators.iter() {
                for w in [self.mul(g, &v), self.mul(&v, g)] {
                    let r = ech.reduce(f, &w);
                    if !r.is_empty() {
                        ech.insert(f, r.clone());
                        queue.push(r);
                    }
                }
            }
        }
        ech.into_rref(f)
    }

    /// Whether the subspace is closed under multiplication by generators on both sides.
    pub fn is_two_sided_ideal(&self, ideal: &Subspace) -> bool {
        let f = &self.field;
        ideal.basis().iter().all(|v| {
            self.generators
                .iter()
                .all(|g| ideal.contains(f, &self.mul(g, v)) && ideal.contains(f, &self.mul(v, g)))
        })
    }

    /// Quotient by a two-sided ideal, with the projection matrix (dim × dim quotient).
    ///
    /// The quotient basis is indexed by the ideal's non-pivot columns.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(FinAlgebra, Matrix)> {
        if ideal.ambient() != self.dim || !self.is_two_sided_ideal(ideal) {
            return Err(Error::NotAnIdeal);
        }
        let cols = ideal.complement_columns();
        let mut position = vec![usize::MAX; self.dim];
        for (k, &c) in cols.iter().enumerate() {
            position[c] = k;
        }
        let position = Arc::new(position);
        let ideal = Arc::new(ideal.clone());
        let project = {
            let field = self.field.clone();
            let ideal = ideal.clone();
            let position = position.clone();
            move |v: &Element| -> Element {
                ideal
                    .reduce(&field, v)
                    .into_iter()
                    .map(|(i, x)| (position[i], x))
                    .collect()
            }
        };
        let labels = cols.iter().map(|&c| self.labels[c].clone()).collect();
        let unit = project(&self.unit);
        let parent = self.clone();
        let cols_arc = Arc::new(cols);
        let product = {
            let project = project.clone();
            let cols = cols_arc.clone();
            move |i: usize, j: usize| project(parent.mul_basis(cols[i], cols[j]))
        };
        let mut quotient = FinAlgebra::from_fn(
            format!("{}/I", self.name),
            self.field.clone(),
            labels,
            unit,
            product,
        )
        .with_generators(self.generators.iter().map(&project).collect());
        if self.involution.is_some() {
            let stable = ideal
                .basis()
                .iter()
                .all(|v| ideal.contains(&self.field, &self.star(v).expect("involution")));
            if stable {
                let parent = self.clone();
                let cols = cols_arc.clone();
                let project = project.clone();
                quotient = quotient.with_involution(move |_, i| {
                    project(parent.star_basis(cols[i]).expect("involution"))
                });
            }
        }
        let rows = (0..self.dim)
            .map(|i| project(&unit_vector(&self.field, i)))
            .collect();
        let projection = Matrix::from_rows(cols_arc.len(), rows);
        Ok((quotient, projection))
    }

    /// Corner algebra `eAe` with its embedding matrix (dim eAe × dim A).
    ///
    /// The basis is the reduced echelon basis of `{e·b·e}`, so pivots sit on
    /// the earliest basis elements of the ambient algebra.
    pub fn corner(&self, e: &Element) -> Result<(FinAlgebra, Matrix)> {
        if !self.is_idempotent(e) {
            return Err(Error::NotIdempotent);
        }
        let f = &self.field;
        let left = self.left_mul_matrix(e);
        let vectors: Vec<Element> = left.data.iter().map(|eb| self.mul(eb, e)).collect();
        let sub = Arc::new(Subspace::from_vectors(f, self.dim, vectors));
        let labels = sub
            .pivots()
            .iter()
            .map(|&p| format!("e{}e", self.labels[p]))
            .collect();
        let coords = {
            let field = self.field.clone();
            let sub = sub.clone();
            move |v: &Element| -> Element {
                let c = sub.coords(&field, v).expect("element lies in the corner");
                super::linalg::sparse_from_dense(&c)
            }
        };
        let unit = coords(e);
        let parent = self.clone();
        let product = {
            let sub = sub.clone();
            let coords = coords.clone();
            move |i: usize, j: usize| coords(&parent.mul(&sub.basis()[i], &sub.basis()[j]))
        };
        let mut corner = FinAlgebra::from_fn(
            format!("e{}e", self.name),
            self.field.clone(),
            labels,
            unit,
            product,
        );
        if self.involution.is_some() && self.star(e).as_ref() == Some(e) {
            let parent = self.clone();
            let sub2 = sub.clone();
            corner = corner.with_involution(move |_, i| {
                coords(&parent.star(&sub2.basis()[i]).expect("involution"))
            });
        }
        let embedding = Matrix::from_rows(self.dim, sub.basis().to_vec());
        Ok((corner, embedding))
    }
}

/// First basis pair on which `map` (rows = images of source basis vectors)
/// fails to be multiplicative, checked on the given pairs; `unit` reports a
/// non-unital map as `(usize::MAX, usize::MAX)`.
pub fn homomorphism_witness(
    src: &FinAlgebra,
    tgt: &FinAlgebra,
    map: &Matrix,
    pairs: impl IntoIterator<Item = (usize, usize)>,
) -> Option<(usize, usize)> {
    use rayon::prelude::*;
    let f = src.field();
    if map.apply(f, src.unit()) != *tgt.unit() {
        return Some((usize::MAX, usize::MAX));
    }
    let pairs: Vec<(usize, usize)> = pairs.into_iter().collect();
    pairs.into_par_iter().find_first(|&(i, j)| {
        let lhs = map.apply(f, src.mul_basis(i, j));
        let rhs = tgt.mul(&map.data[i], &map.data[j]);
        lhs != rhs
    })
}

/// All basis pairs when `dim ≤ EXHAUSTIVE_CHECK_DIM`, else seeded random pairs.
pub fn check_pairs(dim: usize, seed: u64) -> Vec<(usize, usize)> {
    if dim <= EXHAUSTIVE_CHECK_DIM {
        (0..dim)
            .flat_map(|i| (0..dim).map(move |j| (i, j)))
            .collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..RANDOM_TRIPLES)
            .map(|_| (rng.gen_range(0..dim), rng.gen_range(0..dim)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Q[x]/(x^2): basis 1, x.
    fn dual_numbers(f: &Field) -> FinAlgebra {
        let f2 = f.clone();
        FinAlgebra::from_fn(
            "Q[x]/x2",
            f.clone(),
            vec!["1".into(), "x".into()],
            unit_vector(f, 0),
            move |i, j| {
                if i + j >= 2 {
                    Vec::new()
                } else {
                    unit_vector(&f2, i + j)
                }
            },
        )
    }

    /// 2×2 matrix units E_ij at index 2i+j, transpose involution.
    fn matrix_units(f: &Field) -> FinAlgebra {
        let f2 = f.clone();
        let unit = vec![(0, f.one()), (3, f.one())];
        let labels = ["E11", "E12", "E21", "E22"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        FinAlgebra::from_fn("M2", f.clone(), labels, unit, move |a, b| {
            let (i, j) = (a / 2, a % 2);
            let (k, l) = (b / 2, b % 2);
            if j == k {
                unit_vector(&f2, 2 * i + l)
            } else {
                Vec::new()
            }
        })
        .with_involution(|f, a| unit_vector(f, 2 * (a % 2) + a / 2))
    }

    #[test]
    fn structure_checks_pass_on_known_algebras() {
        let f = Field::rationals();
        for alg in [dual_numbers(&f), matrix_units(&f)] {
            assert_eq!(alg.associativity_witness(0), None);
            assert_eq!(alg.unit_witness(), None);
        }
        assert_eq!(matrix_units(&f).involution_witness(0), None);
    }

    #[test]
    fn ideals_quotients_and_corners() {
        let f = Field::rationals();
        let dn = dual_numbers(&f);
        let i = dn.ideal_span(&[unit_vector(&f, 1)]);
        assert_eq!(i.dim(), 1);
        let (q, proj) = dn.quotient(&i).unwrap();
        assert_eq!(q.dim(), 1);
        assert_eq!(proj.apply(&f, &unit_vector(&f, 1)), Vec::new());
        assert_eq!(q.associativity_witness(0), None);

        let m2 = matrix_units(&f);
        assert_eq!(m2.ideal_span(&[unit_vector(&f, 1)]).dim(), 4);
        let (c, emb) = m2.corner(&unit_vector(&f, 0)).unwrap();
        assert_eq!(c.dim(), 1);
        assert_eq!(emb.data[0], unit_vector(&f, 0));
        assert!(m2.corner(&unit_vector(&f, 1)).is_err());
        assert!(m2.quotient(&Subspace::coordinate(&f, 4, &[1])).is_err());
    }

    #[test]
    fn corner_by_unit_is_whole_algebra() {
        let f = Field::prime(5).unwrap();
        let m2 = matrix_units(&f);
        let (c, emb) = m2.corner(m2.unit()).unwrap();
        assert_eq!(c.dim(), 4);
        assert_eq!(homomorphism_witness(&c, &m2, &emb, check_pairs(4, 0)), None);
    }
}
