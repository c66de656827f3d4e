//! Right modules, bimodules, module maps and tensor products over finite-dimensional algebras.
//!
//! Convention: vectors are rows and algebra elements act on the right by
//! matrices, `v·x = v ρ(x)`, so `ρ(xy) = ρ(x) ρ(y)`. A module map `F: M → N`
//! is a `dim M × dim N` matrix acting as `v ↦ v F`. A left action is stored
//! the same way, `x·s = s λ(x)`, so `λ(xy) = λ(y) λ(x)`.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::algebra::{check_pairs, homomorphism_witness, Element, FinAlgebra};
use super::lazy::LazyTable;
use super::linalg::{
    nullspace, sparse_from_dense, unit_vector, Accumulator, Echelon, Matrix, SparseVec, Subspace,
};
use crate::error::{Error, Result};
use crate::scalars::Field;

#[derive(Clone, Debug)]
pub struct RightModule {
    field: Field,
    dim: usize,
    algebra: String,
    algebra_dim: usize,
    action: LazyTable<Matrix>,
}

/// Matrix of the action of an arbitrary element, from basis action matrices.
fn combine(
    field: &Field,
    dim: usize,
    x: &Element,
    basis_action: impl Fn(usize) -> Matrix,
) -> Matrix {
    let mut out = Matrix::zeros(dim, dim);
    for (b, c) in x {
        out = out.axpy(field, c, &basis_action(*b));
    }
    out
}

impl RightModule {
    pub fn from_fn<F>(algebra: &FinAlgebra, dim: usize, action: F) -> Self
    where
        F: Fn(usize) -> Matrix + Send + Sync + 'static,
    {
        RightModule {
            field: algebra.field().clone(),
            dim,
            algebra: algebra.name().to_string(),
            algebra_dim: algebra.dim(),
            action: LazyTable::new(algebra.dim(), action),
        }
    }

    pub fn from_actions(algebra: &FinAlgebra, dim: usize, action: Vec<Matrix>) -> Self {
        assert_eq!(
            action.len(),
            algebra.dim(),
            "one action matrix per basis element"
        );
        RightModule {
            field: algebra.field().clone(),
            dim,
            algebra: algebra.name().to_string(),
            algebra_dim: algebra.dim(),
            action: LazyTable::filled(action),
        }
    }

    pub fn regular(algebra: &FinAlgebra) -> Self {
        let alg = algebra.clone();
        RightModule::from_fn(algebra, algebra.dim(), move |b| {
            let rows = (0..alg.dim())
                .map(|i| alg.mul_basis(i, b).clone())
                .collect();
            Matrix::from_rows(alg.dim(), rows)
        })
    }

    pub fn zero(algebra: &FinAlgebra) -> Self {
        RightModule::from_fn(algebra, 0, |_| Matrix::zeros(0, 0))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn algebra_name(&self) -> &str {
        &self.algebra
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn renamed_algebra(mut self, algebra: &FinAlgebra) -> Self {
        self.algebra = algebra.name().to_string();
        self
    }

    pub fn ensure_over(&self, algebra: &FinAlgebra) -> Result<()> {
        if self.algebra != algebra.name() || self.algebra_dim != algebra.dim() {
            return Err(Error::AlgebraMismatch {
                expected: algebra.name().to_string(),
                got: self.algebra.clone(),
            });
        }
        Ok(())
    }

    pub fn action(&self, b: usize) -> &Matrix {
        self.action.get(b)
    }

    pub fn action_of(&self, x: &Element) -> Matrix {
        combine(&self.field, self.dim, x, |b| self.action(b).clone())
    }

    pub fn act(&self, v: &SparseVec, x: &Element) -> SparseVec {
        let mut acc = Accumulator::new(&self.field, self.dim);
        for (b, c) in x {
            let w = self.action(*b).apply(&self.field, v);
            acc.add_scaled(&self.field, c, &w);
        }
        acc.drain(&self.field)
    }

    /// First failure of the module axioms: `None` if the unit acts as identity
    /// and `ρ(b_i)ρ(b_j) = ρ(b_i b_j)` on the checked pairs.
    pub fn axiom_witness(&self, algebra: &FinAlgebra, seed: u64) -> Option<(usize, usize)> {
        let f = &self.field;
        if self.action_of(algebra.unit()) != Matrix::identity(f, self.dim) {
            return Some((usize::MAX, usize::MAX));
        }
        check_pairs(algebra.dim(), seed)
            .into_iter()
            .find(|&(i, j)| {
                self.action(i).mul(f, self.action(j)) != self.action_of(algebra.mul_basis(i, j))
            })
    }

    /// Whether `map` intertwines the actions of every generator.
    pub fn is_module_map(
        algebra: &FinAlgebra,
        src: &RightModule,
        tgt: &RightModule,
        map: &Matrix,
    ) -> bool {
        let f = &src.field;
        if map.rows != src.dim || map.cols != tgt.dim {
            return false;
        }
        algebra
            .generators()
            .iter()
            .all(|g| src.action_of(g).mul(f, map) == map.mul(f, &tgt.action_of(g)))
    }

    /// Smallest submodule containing `vectors`.
    pub fn generated_submodule(&self, algebra: &FinAlgebra, vectors: &[SparseVec]) -> Subspace {
        let f = &self.field;
        let gens: Vec<Matrix> = algebra
            .generators()
            .iter()
            .map(|g| self.action_of(g))
            .collect();
        let mut ech = Echelon::new(self.dim);
        let mut queue = Vec::new();
        for v in vectors {
            let r = ech.reduce(f, v);
            if !r.is_empty() {
                ech.insert(f, r.clone());
                queue.push(r);
            }
        }
        while let Some(v) = queue.pop() {
            for g in &gens {
                let r = ech.reduce(f, &g.apply(f, &v));
                if !r.is_empty() {
                    ech.insert(f, r.clone());
                    queue.push(r);
                }
            }
        }
        ech.into_rref(f)
    }

    fn is_invariant(&self, algebra: &FinAlgebra, sub: &Subspace) -> bool {
        let f = &self.field;
        algebra.generators().iter().all(|g| {
            let m = self.action_of(g);
            sub.basis().iter().all(|v| sub.contains(f, &m.apply(f, v)))
        })
    }

    /// Submodule on the echelon basis of `sub`, with the inclusion matrix.
    pub fn submodule(&self, algebra: &FinAlgebra, sub: &Subspace) -> Result<(RightModule, Matrix)> {
        if sub.ambient() != self.dim || !self.is_invariant(algebra, sub) {
            return Err(Error::SizeMismatch("subspace is not a submodule".into()));
        }
        let parent = self.clone();
        let sub = Arc::new(sub.clone());
        let inclusion = Matrix::from_rows(self.dim, sub.basis().to_vec());
        let field = self.field.clone();
        let s2 = sub.clone();
        let module = RightModule::from_fn(algebra, sub.dim(), move |b| {
            let rows = s2
                .basis()
                .iter()
                .map(|v| {
                    let w = parent.action(b).apply(&field, v);
                    sparse_from_dense(&s2.coords(&field, &w).expect("submodule is invariant"))
                })
                .collect();
            Matrix::from_rows(s2.dim(), rows)
        });
        Ok((module, inclusion))
    }

    /// Quotient module indexed by the non-pivot columns of `sub`, with the projection matrix.
    pub fn quotient(&self, algebra: &FinAlgebra, sub: &Subspace) -> Result<(RightModule, Matrix)> {
        if sub.ambient() != self.dim || !self.is_invariant(algebra, sub) {
            return Err(Error::SizeMismatch("subspace is not a submodule".into()));
        }
        let cols = Arc::new(sub.complement_columns());
        let mut position = vec![usize::MAX; self.dim];
        for (k, &c) in cols.iter().enumerate() {
            position[c] = k;
        }
        let sub = Arc::new(sub.clone());
        let field = self.field.clone();
        let project = {
            let sub = sub.clone();
            let position = Arc::new(position);
            move |v: &SparseVec| -> SparseVec {
                sub.reduce(&field, v)
                    .into_iter()
                    .map(|(i, x)| (position[i], x))
                    .collect()
            }
        };
        let q = cols.len();
        let projection = Matrix::from_rows(
            q,
            (0..self.dim)
                .map(|i| project(&unit_vector(&self.field, i)))
                .collect(),
        );
        let parent = self.clone();
        let module = RightModule::from_fn(algebra, q, move |b| {
            let rows = cols
                .iter()
                .map(|&c| project(&parent.action(b).data[c]))
                .collect();
            Matrix::from_rows(q, rows)
        });
        Ok((module, projection))
    }

    pub fn direct_sum(algebra: &FinAlgebra, parts: &[RightModule]) -> RightModule {
        let parts: Vec<RightModule> = parts.to_vec();
        let dim = parts.iter().map(|m| m.dim).sum();
        RightModule::from_fn(algebra, dim, move |b| {
            let mut rows = Vec::with_capacity(dim);
            let mut offset = 0;
            for m in &parts {
                for row in &m.action(b).data {
                    rows.push(row.iter().map(|(j, x)| (j + offset, x.clone())).collect());
                }
                offset += m.dim;
            }
            Matrix::from_rows(dim, rows)
        })
    }

    /// The module viewed over `src` through an algebra map `src → self's algebra`
    /// (rows of `map` are images of `src` basis vectors). No multiplicativity check.
    pub fn restrict_along(&self, src: &FinAlgebra, map: &Matrix) -> RightModule {
        let parent = self.clone();
        let map = map.clone();
        RightModule::from_fn(src, self.dim, move |c| parent.action_of(&map.data[c]))
    }

    /// Pullback along an algebra surjection `q: src ↠ tgt`, checked on basis pairs.
    pub fn pullback(
        &self,
        src: &FinAlgebra,
        tgt: &FinAlgebra,
        q: &Matrix,
        seed: u64,
    ) -> Result<RightModule> {
        self.ensure_over(tgt)?;
        if let Some((i, j)) = homomorphism_witness(src, tgt, q, check_pairs(src.dim(), seed)) {
            return Err(Error::NotMultiplicative(i, j));
        }
        Ok(self.restrict_along(src, q))
    }
}

/// Basis of `Hom_A(M, N)` as matrices.
pub fn hom_space(algebra: &FinAlgebra, m: &RightModule, n: &RightModule) -> Vec<Matrix> {
    let f = m.field();
    let (dm, dn) = (m.dim(), n.dim());
    let unknowns = dm * dn;
    if unknowns == 0 {
        return Vec::new();
    }
    let mut rows: Vec<SparseVec> = Vec::new();
    for g in algebra.generators() {
        let a = m.action_of(g);
        let b = n.action_of(g).transpose();
        // (A F − F B)[i][q] = Σ_p A[i][p] F[p][q] − Σ_p F[i][p] B[p][q]
        for i in 0..dm {
            for q in 0..dn {
                let mut acc = Accumulator::new(f, unknowns);
                for (p, x) in &a.data[i] {
                    acc.add(f, p * dn + q, x);
                }
                for (p, y) in &b.data[q] {
                    acc.add(f, i * dn + p, &f.neg(y));
                }
                let row = acc.drain(f);
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
    }
    nullspace(f, unknowns, rows)
        .into_iter()
        .map(|v| {
            let mut data = vec![Vec::new(); dm];
            for (k, x) in v {
                data[k / dn].push((k % dn, x));
            }
            Matrix::from_rows(dn, data)
        })
        .collect()
}

pub fn hom_dim(algebra: &FinAlgebra, m: &RightModule, n: &RightModule) -> usize {
    hom_space(algebra, m, n).len()
}

/// An invertible module map `M → N`, searched among the Hom basis and then
/// seeded random combinations of it.
pub fn find_isomorphism(algebra: &FinAlgebra, m: &RightModule, n: &RightModule) -> Option<Matrix> {
    if m.dim() != n.dim() {
        return None;
    }
    let f = m.field();
    if m.dim() == 0 {
        return Some(Matrix::zeros(0, 0));
    }
    let basis = hom_space(algebra, m, n);
    if basis.is_empty() {
        return None;
    }
    let full = |x: &Matrix| x.rank(f) == m.dim();
    if let Some(h) = basis.iter().find(|h| full(h)) {
        return Some(h.clone());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x150);
    for _ in 0..48 {
        let mut h = Matrix::zeros(m.dim(), n.dim());
        for b in &basis {
            let c = f.from_i64(rng.gen_range(-7..=7));
            h = h.axpy(f, &c, b);
        }
        if full(&h) {
            return Some(h);
        }
    }
    None
}

/// A bimodule with a left action of one algebra and a commuting right action of another.
#[derive(Clone, Debug)]
pub struct Bimodule {
    field: Field,
    dim: usize,
    left_algebra: String,
    right_algebra: String,
    left: LazyTable<Matrix>,
    right: LazyTable<Matrix>,
}

impl Bimodule {
    pub fn from_fns<L, R>(
        left_alg: &FinAlgebra,
        right_alg: &FinAlgebra,
        dim: usize,
        left: L,
        right: R,
    ) -> Self
    where
        L: Fn(usize) -> Matrix + Send + Sync + 'static,
        R: Fn(usize) -> Matrix + Send + Sync + 'static,
    {
        Bimodule {
            field: left_alg.field().clone(),
            dim,
            left_algebra: left_alg.name().to_string(),
            right_algebra: right_alg.name().to_string(),
            left: LazyTable::new(left_alg.dim(), left),
            right: LazyTable::new(right_alg.dim(), right),
        }
    }

    /// The algebra as a bimodule over itself.
    pub fn regular(algebra: &FinAlgebra) -> Self {
        let (a1, a2) = (algebra.clone(), algebra.clone());
        Bimodule::from_fns(
            algebra,
            algebra,
            algebra.dim(),
            move |b| {
                let rows = (0..a1.dim()).map(|i| a1.mul_basis(b, i).clone()).collect();
                Matrix::from_rows(a1.dim(), rows)
            },
            move |b| {
                let rows = (0..a2.dim()).map(|i| a2.mul_basis(i, b).clone()).collect();
                Matrix::from_rows(a2.dim(), rows)
            },
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn algebra_names(&self) -> (&str, &str) {
        (&self.left_algebra, &self.right_algebra)
    }

    pub fn left_action(&self, b: usize) -> &Matrix {
        self.left.get(b)
    }

    pub fn right_action(&self, a: usize) -> &Matrix {
        self.right.get(a)
    }

    pub fn left_action_of(&self, x: &Element) -> Matrix {
        combine(&self.field, self.dim, x, |b| self.left_action(b).clone())
    }

    pub fn right_action_of(&self, x: &Element) -> Matrix {
        combine(&self.field, self.dim, x, |a| self.right_action(a).clone())
    }

    pub fn right_module(&self, right_alg: &FinAlgebra) -> RightModule {
        let me = self.clone();
        RightModule::from_fn(right_alg, self.dim, move |a| me.right_action(a).clone())
    }

    /// First pair of generators whose actions fail to commute.
    pub fn commutation_witness(
        &self,
        left_alg: &FinAlgebra,
        right_alg: &FinAlgebra,
    ) -> Option<(usize, usize)> {
        let f = &self.field;
        for (i, x) in left_alg.generators().iter().enumerate() {
            let l = self.left_action_of(x);
            for (j, y) in right_alg.generators().iter().enumerate() {
                let r = self.right_action_of(y);
                if l.mul(f, &r) != r.mul(f, &l) {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

/// The quotient `X ⊗ Y / ⟨x·c ⊗ y − x ⊗ c·y⟩` together with the map from
/// plain tensor coordinates (`x·dim Y + y`) to quotient coordinates.
#[derive(Clone, Debug)]
pub struct TensorProduct {
    field: Field,
    left_dim: usize,
    right_dim: usize,
    relations: Arc<Subspace>,
    columns: Arc<Vec<usize>>,
    position: Arc<Vec<usize>>,
}

impl TensorProduct {
    fn build(field: &Field, left_dim: usize, right_dim: usize, relations: Vec<SparseVec>) -> Self {
        let relations = Subspace::from_vectors(field, left_dim * right_dim, relations);
        let columns = relations.complement_columns();
        let mut position = vec![usize::MAX; left_dim * right_dim];
        for (k, &c) in columns.iter().enumerate() {
            position[c] = k;
        }
        TensorProduct {
            field: field.clone(),
            left_dim,
            right_dim,
            relations: Arc::new(relations),
            columns: Arc::new(columns),
            position: Arc::new(position),
        }
    }

    pub fn dim(&self) -> usize {
        self.columns.len()
    }

    pub fn left_dim(&self) -> usize {
        self.left_dim
    }

    pub fn right_dim(&self) -> usize {
        self.right_dim
    }

    /// Plain tensor index of the `k`-th quotient basis vector.
    pub fn column(&self, k: usize) -> (usize, usize) {
        let c = self.columns[k];
        (c / self.right_dim, c % self.right_dim)
    }

    /// Class of a plain tensor vector in quotient coordinates.
    pub fn class(&self, v: &SparseVec) -> SparseVec {
        self.relations
            .reduce(&self.field, v)
            .into_iter()
            .map(|(i, x)| (self.position[i], x))
            .collect()
    }

    pub fn plain(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let f = &self.field;
        let mut out = Vec::with_capacity(x.len() * y.len());
        for (i, a) in x {
            for (j, b) in y {
                out.push((i * self.right_dim + j, f.mul(a, b)));
            }
        }
        out
    }

    /// Class of `x ⊗ y`.
    pub fn pure(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        self.class(&self.plain(x, y))
    }

    /// The map `f ⊗ id` between two tensor products sharing the right factor.
    pub fn map_left(&self, target: &TensorProduct, map: &Matrix) -> Matrix {
        let f = &self.field;
        let rows = (0..self.dim())
            .map(|k| {
                let (x, y) = self.column(k);
                target.pure(&map.data[x], &unit_vector(f, y))
            })
            .collect();
        Matrix::from_rows(target.dim(), rows)
    }
}

fn tensor_relations(
    field: &Field,
    middle: &FinAlgebra,
    left_dim: usize,
    left_right_action: impl Fn(&Element) -> Matrix,
    y: &Bimodule,
) -> Vec<SparseVec> {
    let dy = y.dim();
    let mut rels = Vec::new();
    for g in middle.generators() {
        let xg = left_right_action(g);
        let gy = y.left_action_of(g);
        for m in 0..left_dim {
            for s in 0..dy {
                let mut acc = Accumulator::new(field, left_dim * dy);
                for (j, c) in &xg.data[m] {
                    acc.add(field, j * dy + s, c);
                }
                for (j, c) in &gy.data[s] {
                    acc.add(field, m * dy + j, &field.neg(c));
                }
                let r = acc.drain(field);
                if !r.is_empty() {
                    rels.push(r);
                }
            }
        }
    }
    rels
}

/// `M ⊗_B Y` for a right `B`-module `M` and a `B`-`A` bimodule `Y`, as a right `A`-module.
pub fn tensor_over(
    m: &RightModule,
    y: &Bimodule,
    middle: &FinAlgebra,
    right_alg: &FinAlgebra,
) -> Result<(RightModule, TensorProduct)> {
    m.ensure_over(middle)?;
    let f = m.field().clone();
    let rels = tensor_relations(&f, middle, m.dim(), |g| m.action_of(g), y);
    let t = TensorProduct::build(&f, m.dim(), y.dim(), rels);
    let (t2, y2) = (t.clone(), y.clone());
    let module = RightModule::from_fn(right_alg, t.dim(), move |a| {
        let act = y2.right_action(a);
        let rows = (0..t2.dim())
            .map(|k| {
                let (x, s) = t2.column(k);
                t2.pure(&unit_vector(&f, x), &act.data[s])
            })
            .collect();
        Matrix::from_rows(t2.dim(), rows)
    });
    Ok((module, t))
}

/// `X ⊗_B Y` for a `C`-`B` bimodule `X` and a `B`-`A` bimodule `Y`.
pub fn tensor_bimodules(
    x: &Bimodule,
    y: &Bimodule,
    left_alg: &FinAlgebra,
    middle: &FinAlgebra,
    right_alg: &FinAlgebra,
) -> (Bimodule, TensorProduct) {
    let f = x.field().clone();
    let rels = tensor_relations(&f, middle, x.dim(), |g| x.right_action_of(g), y);
    let t = TensorProduct::build(&f, x.dim(), y.dim(), rels);
    let (tl, xl, fl) = (t.clone(), x.clone(), f.clone());
    let (tr, yr, fr) = (t.clone(), y.clone(), f);
    let bimodule = Bimodule::from_fns(
        left_alg,
        right_alg,
        t.dim(),
        move |c| {
            let act = xl.left_action(c);
            let rows = (0..tl.dim())
                .map(|k| {
                    let (a, s) = tl.column(k);
                    tl.pure(&act.data[a], &unit_vector(&fl, s))
                })
                .collect();
            Matrix::from_rows(tl.dim(), rows)
        },
        move |b| {
            let act = yr.right_action(b);
            let rows = (0..tr.dim())
                .map(|k| {
                    let (a, s) = tr.column(k);
                    tr.pure(&unit_vector(&fr, a), &act.data[s])
                })
                .collect();
            Matrix::from_rows(tr.dim(), rows)
        },
    );
    (bimodule, t)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Group algebra of Z/2 with basis 1, g.
    fn c2(f: &Field) -> FinAlgebra {
        let f2 = f.clone();
        FinAlgebra::from_fn(
            "C2",
            f.clone(),
            vec!["1".into(), "g".into()],
            unit_vector(f, 0),
            move |i, j| unit_vector(&f2, (i + j) % 2),
        )
    }

    fn one_dim(alg: &FinAlgebra, sign: i64) -> RightModule {
        let f = alg.field().clone();
        RightModule::from_fn(alg, 1, move |b| {
            let x = if b == 0 { f.one() } else { f.from_i64(sign) };
            Matrix::from_rows(1, vec![vec![(0, x)]])
        })
    }

    #[test]
    fn hom_dims_over_c2() {
        let f = Field::rationals();
        let a = c2(&f);
        let reg = RightModule::regular(&a);
        assert_eq!(reg.axiom_witness(&a, 0), None);
        assert_eq!(hom_dim(&a, &reg, &reg), 2);
        assert_eq!(hom_dim(&a, &one_dim(&a, 1), &one_dim(&a, -1)), 0);
        assert_eq!(hom_dim(&a, &one_dim(&a, -1), &one_dim(&a, -1)), 1);
    }

    #[test]
    fn submodule_quotient_and_iso() {
        let f = Field::rationals();
        let a = c2(&f);
        let reg = RightModule::regular(&a);
        let sub = reg.generated_submodule(&a, &[vec![(0, f.one()), (1, f.one())]]);
        assert_eq!(sub.dim(), 1);
        let (s, inc) = reg.submodule(&a, &sub).unwrap();
        assert!(RightModule::is_module_map(&a, &s, &reg, &inc));
        let (q, proj) = reg.quotient(&a, &sub).unwrap();
        assert!(RightModule::is_module_map(&a, &reg, &q, &proj));
        assert!(find_isomorphism(&a, &s, &one_dim(&a, 1)).is_some());
        assert!(find_isomorphism(&a, &q, &one_dim(&a, -1)).is_some());
        let sum = RightModule::direct_sum(&a, &[one_dim(&a, 1), one_dim(&a, -1)]);
        assert!(find_isomorphism(&a, &sum, &reg).is_some());
    }

    #[test]
    fn tensor_with_regular_bimodule_is_identity() {
        let f = Field::prime(3).unwrap();
        let a = c2(&f);
        let m = one_dim(&a, -1);
        let (t, _) = tensor_over(&m, &Bimodule::regular(&a), &a, &a).unwrap();
        assert_eq!(t.dim(), 1);
        assert!(find_isomorphism(&a, &t, &m).is_some());
        let (bb, _) = tensor_bimodules(&Bimodule::regular(&a), &Bimodule::regular(&a), &a, &a, &a);
        assert_eq!(bb.dim(), 2);
        assert_eq!(bb.commutation_witness(&a, &a), None);
    }
}
