//! The label algebra `A` (with involution and trace) and wreath products `A ≀ S_m`.

use std::collections::HashMap;
use std::path::Path;
use std::sync::Arc;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::kernel::algebra::{Element, FinAlgebra};
use crate::kernel::linalg::{unit_vector, Accumulator, Matrix, SparseVec};
use crate::scalars::{Field, FieldDescriptor, Scalar};

/// A finite-dimensional algebra with an involution `*` and a trace, given by
/// structure constants. `tr(1)` is the loop parameter δ.
#[derive(Clone, Debug)]
pub struct InputAlgebra {
    field: Field,
    name: String,
    labels: Vec<String>,
    unit: SparseVec,
    table: Vec<SparseVec>,
    star: Vec<SparseVec>,
    trace: Vec<Scalar>,
    monomial: bool,
}

impl InputAlgebra {
    /// Builds an algebra from raw data without validating it; see [`InputAlgebra::validate`].
    pub fn new(
        field: Field,
        name: impl Into<String>,
        labels: Vec<String>,
        unit: SparseVec,
        table: Vec<SparseVec>,
        star: Vec<SparseVec>,
        trace: Vec<Scalar>,
    ) -> Result<Self> {
        let d = labels.len();
        if d == 0 {
            return Err(Error::InvalidAlgebra("dimension must be positive".into()));
        }
        if table.len() != d * d || star.len() != d || trace.len() != d {
            return Err(Error::InvalidAlgebra(format!(
                "expected {} products, {d} involution rows and {d} trace values",
                d * d
            )));
        }
        let in_range = |v: &SparseVec| v.iter().all(|(i, _)| *i < d);
        if !in_range(&unit) || !table.iter().all(in_range) || !star.iter().all(in_range) {
            return Err(Error::InvalidAlgebra(
                "coordinate index out of range".into(),
            ));
        }
        let single = |v: &SparseVec| v.len() <= 1;
        let monomial = table.iter().all(single) && star.iter().all(single);
        Ok(InputAlgebra {
            field,
            name: name.into(),
            labels,
            unit,
            table,
            star,
            trace,
            monomial,
        })
    }

    /// `R` itself with `tr(1) = δ`.
    pub fn trivial(field: &Field, delta: Scalar) -> Self {
        InputAlgebra::new(
            field.clone(),
            "trivial",
            vec!["1".into()],
            unit_vector(field, 0),
            vec![unit_vector(field, 0)],
            vec![unit_vector(field, 0)],
            vec![delta],
        )
        .expect("trivial algebra data is well formed")
    }

    /// Group algebra of `Z/rZ` with basis `h^0..h^{r-1}`, `(h^m)* = h^{r-m}` and `tr(h^m) = δ_m`.
    pub fn cyclic_group(field: &Field, r: usize, deltas: Vec<Scalar>) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidAlgebra(
                "cyclic group order must be positive".into(),
            ));
        }
        if deltas.len() != r {
            return Err(Error::InvalidAlgebra(format!(
                "expected {r} trace values, got {}",
                deltas.len()
            )));
        }
        for m in 0..r {
            let mirror = (r - m) % r;
            if deltas[m] != deltas[mirror] {
                return Err(Error::TraceNotStarInvariant { m, mirror });
            }
        }
        let labels = (0..r).map(|m| format!("h{m}")).collect();
        let table = (0..r * r)
            .map(|k| unit_vector(field, (k / r + k % r) % r))
            .collect();
        let star = (0..r).map(|m| unit_vector(field, (r - m) % r)).collect();
        InputAlgebra::new(
            field.clone(),
            format!("Z/{r}"),
            labels,
            unit_vector(field, 0),
            table,
            star,
            deltas,
        )
    }

    /// Dual numbers `R[x]/(x²)` with trivial involution and `tr(1) = δ`, `tr(x) = τ`.
    pub fn dual_numbers(field: &Field, delta: Scalar, tau: Scalar) -> Self {
        let e = |i| unit_vector(field, i);
        InputAlgebra::new(
            field.clone(),
            "dual",
            vec!["1".into(), "x".into()],
            e(0),
            vec![e(0), e(1), e(1), Vec::new()],
            vec![e(0), e(1)],
            vec![delta, tau],
        )
        .expect("dual number data is well formed")
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let file: InputAlgebraFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        file.build()
    }

    pub fn from_json_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        InputAlgebra::from_json_str(&text)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    /// Index of the unit when it is a basis vector.
    pub fn unit_index(&self) -> Option<usize> {
        match self.unit.as_slice() {
            [(i, c)] if self.field.is_one(c) => Some(*i),
            _ => None,
        }
    }

    /// Whether every basis product and every `b*` is a scalar multiple of a basis vector.
    pub fn is_monomial(&self) -> bool {
        self.monomial
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dim() + j]
    }

    pub fn mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let f = &self.field;
        let mut acc = Accumulator::new(f, self.dim());
        for (i, a) in x {
            for (j, b) in y {
                acc.add_scaled(f, &f.mul(a, b), self.mul_basis(*i, *j));
            }
        }
        acc.drain(f)
    }

    pub fn star_basis(&self, i: usize) -> &SparseVec {
        &self.star[i]
    }

    pub fn star(&self, x: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new(&self.field, self.dim());
        for (i, a) in x {
            acc.add_scaled(&self.field, a, &self.star[*i]);
        }
        acc.drain(&self.field)
    }

    pub fn trace_basis(&self, i: usize) -> &Scalar {
        &self.trace[i]
    }

    pub fn trace(&self, x: &SparseVec) -> Scalar {
        let f = &self.field;
        let mut t = f.zero();
        for (i, a) in x {
            f.mul_add_assign(&mut t, a, &self.trace[*i]);
        }
        t
    }

    /// δ = tr(1).
    pub fn delta(&self) -> Scalar {
        self.trace(&self.unit)
    }

    pub fn to_fin_algebra(&self) -> FinAlgebra {
        let (a, b) = (Arc::new(self.clone()), Arc::new(self.clone()));
        FinAlgebra::from_fn(
            self.name.clone(),
            self.field.clone(),
            self.labels.clone(),
            self.unit.clone(),
            move |i, j| a.mul_basis(i, j).clone(),
        )
        .with_involution(move |_, i| b.star_basis(i).clone())
    }

    /// Exhaustive check of every axiom, with witnesses on failure.
    pub fn validate(&self) -> ValidationReport {
        let f = &self.field;
        let d = self.dim();
        let e = |i: usize| unit_vector(f, i);
        let mut checks = Vec::new();

        let assoc = (0..d)
            .cartesian_product(0..d)
            .cartesian_product(0..d)
            .find(|&((i, j), k)| {
                self.mul(self.mul_basis(i, j), &e(k)) != self.mul(&e(i), self.mul_basis(j, k))
            });
        checks.push(ValidationCheck::new(
            "associative",
            assoc.map(|((i, j), k)| vec![i, j, k]),
        ));

        let unital = (0..d)
            .find(|&i| self.mul(&self.unit, &e(i)) != e(i) || self.mul(&e(i), &self.unit) != e(i));
        checks.push(ValidationCheck::new("unital", unital.map(|i| vec![i])));

        let involutive = (0..d).find(|&i| self.star(&self.star[i]) != e(i));
        checks.push(ValidationCheck::new(
            "involution squares to identity",
            involutive.map(|i| vec![i]),
        ));

        let anti = (0..d).cartesian_product(0..d).find(|&(i, j)| {
            self.star(self.mul_basis(i, j)) != self.mul(&self.star[j], &self.star[i])
        });
        checks.push(ValidationCheck::new(
            "involution is an anti-automorphism",
            anti.map(|(i, j)| vec![i, j]),
        ));

        let invariant = (0..d).find(|&i| self.trace(&self.star[i]) != self.trace[i]);
        checks.push(ValidationCheck::new(
            "trace is *-invariant",
            invariant.map(|i| vec![i]),
        ));

        let tracial = (0..d)
            .cartesian_product(0..d)
            .find(|&(i, j)| self.trace(self.mul_basis(i, j)) != self.trace(self.mul_basis(j, i)));
        checks.push(ValidationCheck::new(
            "trace is tracial",
            tracial.map(|(i, j)| vec![i, j]),
        ));

        ValidationReport {
            algebra: self.name.clone(),
            dim: d,
            delta: f.format(&self.delta()),
            checks,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationCheck {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

impl ValidationCheck {
    fn new(name: &str, witness: Option<Vec<usize>>) -> Self {
        ValidationCheck {
            name: name.into(),
            pass: witness.is_none(),
            witness,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub algebra: String,
    pub dim: usize,
    pub delta: String,
    pub checks: Vec<ValidationCheck>,
}

impl ValidationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failure(&self, name: &str) -> Option<&ValidationCheck> {
        self.checks.iter().find(|c| c.name == name && !c.pass)
    }
}

/// On-disk form of an input algebra.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InputAlgebraFile {
    pub field: FieldDescriptor,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<Value>,
    /// Entries `[i, j, k, coeff]`: coefficient of `b_k` in `b_i b_j`.
    pub structconsts: Vec<Vec<Value>>,
    /// Row `i` holds the coordinates of `b_i*`.
    pub involution: Vec<Vec<Value>>,
    pub trace: Vec<Value>,
}

fn scalar_of(field: &Field, v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => field.parse(s),
        Value::Number(n) => field.parse(&n.to_string()),
        other => Err(Error::Parse(format!("expected a coefficient, got {other}"))),
    }
}

fn index_of(v: &Value) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| Error::Parse(format!("expected an index, got {v}")))
}

fn coords(field: &Field, row: &[Value]) -> Result<SparseVec> {
    let dense = row
        .iter()
        .map(|v| scalar_of(field, v))
        .collect::<Result<Vec<_>>>()?;
    Ok(crate::kernel::linalg::sparse_from_dense(&dense))
}

impl InputAlgebraFile {
    pub fn build(&self) -> Result<InputAlgebra> {
        let field = Field::new(self.field.clone())?;
        let d = self.dim;
        if self.basis.len() != d
            || self.unit.len() != d
            || self.involution.len() != d
            || self.trace.len() != d
        {
            return Err(Error::InvalidAlgebra(format!(
                "all basis-indexed arrays must have length {d}"
            )));
        }
        let mut dense = vec![vec![field.zero(); d]; d * d];
        for entry in &self.structconsts {
            let [i, j, k, c] = entry.as_slice() else {
                return Err(Error::Parse(
                    "structconsts entries are [i, j, k, coeff]".into(),
                ));
            };
            let (i, j, k) = (index_of(i)?, index_of(j)?, index_of(k)?);
            if i >= d || j >= d || k >= d {
                return Err(Error::InvalidAlgebra(format!(
                    "structconst index ({i},{j},{k}) out of range"
                )));
            }
            let c = scalar_of(&field, c)?;
            field.add_assign(&mut dense[i * d + j][k], &c);
        }
        let table = dense
            .iter()
            .map(|r| crate::kernel::linalg::sparse_from_dense(r))
            .collect();
        let star = self
            .involution
            .iter()
            .map(|r| coords(&field, r))
            .collect::<Result<Vec<_>>>()?;
        if self.involution.iter().any(|r| r.len() != d) {
            return Err(Error::InvalidAlgebra(
                "involution must be a dim × dim matrix".into(),
            ));
        }
        let trace = self
            .trace
            .iter()
            .map(|v| scalar_of(&field, v))
            .collect::<Result<Vec<_>>>()?;
        let unit = coords(&field, &self.unit)?;
        InputAlgebra::new(field, "input", self.basis.clone(), unit, table, star, trace)
    }

    pub fn from_algebra(a: &InputAlgebra) -> Self {
        let f = a.field();
        let d = a.dim();
        let dense = |v: &SparseVec| {
            crate::kernel::linalg::dense_from_sparse(f, v, d)
                .iter()
                .map(|x| Value::String(f.format(x)))
                .collect()
        };
        let mut structconsts = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for (k, c) in a.mul_basis(i, j) {
                    structconsts.push(vec![
                        Value::from(i),
                        Value::from(j),
                        Value::from(*k),
                        Value::String(f.format(c)),
                    ]);
                }
            }
        }
        InputAlgebraFile {
            field: f.descriptor().clone(),
            dim: d,
            basis: a.labels().to_vec(),
            unit: dense(a.unit()),
            structconsts,
            involution: (0..d).map(|i| dense(a.star_basis(i))).collect(),
            trace: (0..d)
                .map(|i| Value::String(f.format(a.trace_basis(i))))
                .collect(),
        }
    }
}

/// A permutation as the image list `p[i]` of each position.
pub type Perm = Vec<usize>;

pub fn compose(first: &[usize], then: &[usize]) -> Perm {
    first.iter().map(|&i| then[i]).collect()
}

pub fn inverse(p: &[usize]) -> Perm {
    let mut inv = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

/// Basis element `(a⃗, σ)` of a wreath product: label `a_i` on the strand from
/// position `i` to position `σ(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WreathBasis {
    pub labels: Vec<usize>,
    pub perm: Perm,
}

/// `A ≀ S_m`, or with `block = Some(a)` the subalgebra `R[S_a × S_{m-a}]` of block-preserving
/// permutations (only for one-dimensional `A`).
#[derive(Clone, Debug)]
pub struct WreathAlgebra {
    algebra: FinAlgebra,
    input: Arc<InputAlgebra>,
    strands: usize,
    block: Option<usize>,
    elements: Arc<Vec<WreathBasis>>,
    index: Arc<HashMap<WreathBasis, usize>>,
}

/// Expands `⊗_i v_i` for label vectors into `(label tuple, coefficient)` terms.
pub fn expand_labels(field: &Field, parts: &[SparseVec]) -> Vec<(Vec<usize>, Scalar)> {
    let mut terms = vec![(Vec::with_capacity(parts.len()), field.one())];
    for part in parts {
        let mut next = Vec::with_capacity(terms.len() * part.len());
        for (labels, c) in &terms {
            for (a, x) in part {
                let mut l = labels.clone();
                l.push(*a);
                next.push((l, field.mul(c, x)));
            }
        }
        terms = next;
    }
    terms
}

impl WreathAlgebra {
    pub fn new(input: &InputAlgebra, m: usize) -> Self {
        WreathAlgebra::build(input, m, None)
    }

    /// Group algebra of `S_a × S_b`, embedded as block-preserving permutations of `a + b` points.
    pub fn walled(field: &Field, a: usize, b: usize) -> Self {
        WreathAlgebra::build(&InputAlgebra::trivial(field, field.one()), a + b, Some(a))
    }

    fn build(input: &InputAlgebra, m: usize, block: Option<usize>) -> Self {
        let field = input.field().clone();
        let da = input.dim();
        let perms: Vec<Perm> = match block {
            None => (0..m).permutations(m).collect(),
            Some(a) => (0..a)
                .permutations(a)
                .cartesian_product((a..m).permutations(m - a))
                .map(|(p, q)| p.into_iter().chain(q).collect())
                .collect(),
        };
        let label_tuples: Vec<Vec<usize>> = if m == 0 {
            vec![Vec::new()]
        } else {
            (0..m).map(|_| 0..da).multi_cartesian_product().collect()
        };
        let elements: Vec<WreathBasis> = perms
            .iter()
            .flat_map(|p| {
                label_tuples.iter().map(move |l| WreathBasis {
                    labels: l.clone(),
                    perm: p.clone(),
                })
            })
            .collect();
        let index: HashMap<WreathBasis, usize> = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, b)| (b, i))
            .collect();
        let elements = Arc::new(elements);
        let index = Arc::new(index);
        let input = Arc::new(input.clone());

        let to_element = {
            let index = index.clone();
            let field = field.clone();
            move |perm: &Perm, parts: &[SparseVec]| -> Element {
                let mut acc = Accumulator::new(&field, index.len());
                for (labels, c) in expand_labels(&field, parts) {
                    let k = index[&WreathBasis {
                        labels,
                        perm: perm.clone(),
                    }];
                    acc.add(&field, k, &c);
                }
                acc.drain(&field)
            }
        };
        let identity: Perm = (0..m).collect();
        let unit = to_element(&identity, &vec![input.unit().clone(); m]);
        let labels = elements
            .iter()
            .map(|b| format!("{:?}{:?}", b.labels, b.perm))
            .collect();
        let product = {
            let (elements, input, to_element) =
                (elements.clone(), input.clone(), to_element.clone());
            move |i: usize, j: usize| {
                let (x, y) = (&elements[i], &elements[j]);
                let parts: Vec<SparseVec> = (0..m)
                    .map(|s| input.mul_basis(x.labels[s], y.labels[x.perm[s]]).clone())
                    .collect();
                to_element(&compose(&x.perm, &y.perm), &parts)
            }
        };
        let involution = {
            let (elements, input, to_element) =
                (elements.clone(), input.clone(), to_element.clone());
            move |_: &Field, i: usize| {
                let x = &elements[i];
                let inv = inverse(&x.perm);
                let parts: Vec<SparseVec> = (0..m)
                    .map(|j| input.star_basis(x.labels[inv[j]]).clone())
                    .collect();
                to_element(&inv, &parts)
            }
        };
        let unit_labels = vec![input.unit().clone(); m];
        let mut generators = Vec::new();
        for s in 0..m.saturating_sub(1) {
            if block.is_some_and(|a| s + 1 == a) {
                continue;
            }
            let mut p = identity.clone();
            p.swap(s, s + 1);
            generators.push(to_element(&p, &unit_labels));
        }
        if m > 0 && da > 1 {
            for a in 0..da {
                let mut parts = unit_labels.clone();
                parts[0] = unit_vector(&field, a);
                generators.push(to_element(&identity, &parts));
            }
        }
        let name = match block {
            None => format!("{}~S{m}", input.name()),
            Some(a) => format!("S{a}xS{}", m - a),
        };
        let algebra = FinAlgebra::from_fn(name, field, labels, unit, product)
            .with_involution(involution)
            .with_generators(generators);
        WreathAlgebra {
            algebra,
            input,
            strands: m,
            block,
            elements,
            index,
        }
    }

    pub fn algebra(&self) -> &FinAlgebra {
        &self.algebra
    }

    pub fn input(&self) -> &InputAlgebra {
        &self.input
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn block(&self) -> Option<usize> {
        self.block
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, i: usize) -> &WreathBasis {
        &self.elements[i]
    }

    pub fn index_of(&self, b: &WreathBasis) -> Option<usize> {
        self.index.get(b).copied()
    }

    /// `Σ_terms c · (labels, perm)` for label vectors per strand.
    pub fn element_from_parts(&self, perm: &Perm, parts: &[SparseVec]) -> Option<Element> {
        let f = self.algebra.field();
        let mut acc = Accumulator::new(f, self.dim());
        for (labels, c) in expand_labels(f, parts) {
            acc.add(
                f,
                self.index_of(&WreathBasis {
                    labels,
                    perm: perm.clone(),
                })?,
                &c,
            );
        }
        Some(acc.drain(f))
    }

    /// Matrix of a permutation-only element as an action on `m` points, for tests.
    pub fn permutation_matrix(field: &Field, perm: &Perm) -> Matrix {
        Matrix::from_rows(
            perm.len(),
            perm.iter().map(|&j| unit_vector(field, j)).collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rationals()
    }

    #[test]
    fn cyclic_group_algebra_validates() {
        let f = q();
        let a = InputAlgebra::cyclic_group(&f, 3, vec![f.from_i64(2), f.one(), f.one()]).unwrap();
        assert!(a.validate().all_pass());
        assert_eq!(a.delta(), f.from_i64(2));
        let b = InputAlgebra::cyclic_group(&f, 2, vec![f.from_i64(3), f.from_i64(5)]).unwrap();
        assert_eq!(b.mul_basis(1, 1), &unit_vector(&f, 0));
        assert_eq!(b.trace_basis(1), &f.from_i64(5));
        let err =
            InputAlgebra::cyclic_group(&f, 3, vec![f.one(), f.from_i64(2), f.one()]).unwrap_err();
        assert_eq!(err, Error::TraceNotStarInvariant { m: 1, mirror: 2 });
    }

    #[test]
    fn tampered_algebras_fail_with_witness() {
        let f = q();
        let a = InputAlgebra::cyclic_group(&f, 2, vec![f.one(), f.one()]).unwrap();
        let mut file = InputAlgebraFile::from_algebra(&a);
        // b0·b1 = b0 gives (b1 b0) b1 = b0 but b1 (b0 b1) = b1.
        file.structconsts.retain(|e| !(e[0] == 0 && e[1] == 1));
        file.structconsts
            .push(vec![0.into(), 1.into(), 0.into(), "1".into()]);
        let bad = file.build().unwrap();
        let report = bad.validate();
        assert!(report.failure("associative").unwrap().witness.is_some());

        // Matrix units with a trace concentrated on E12 is not tracial.
        let m2 = InputAlgebraFile {
            field: FieldDescriptor::Rationals,
            dim: 4,
            basis: vec!["E11".into(), "E12".into(), "E21".into(), "E22".into()],
            unit: vec![1.into(), 0.into(), 0.into(), 1.into()],
            structconsts: (0..4)
                .cartesian_product(0..4)
                .filter(|(x, y)| x % 2 == y / 2)
                .map(|(x, y)| vec![x.into(), y.into(), (2 * (x / 2) + y % 2).into(), "1".into()])
                .collect(),
            involution: (0..4)
                .map(|x| {
                    (0..4)
                        .map(|y| if y == 2 * (x % 2) + x / 2 { 1 } else { 0 }.into())
                        .collect()
                })
                .collect(),
            trace: vec![1.into(), 0.into(), 0.into(), 2.into()],
        };
        let report = m2.build().unwrap().validate();
        assert!(report.failure("trace is tracial").is_some());
        assert!(report.failure("associative").is_none());
    }

    #[test]
    fn json_round_trip() {
        let f = Field::prime(7).unwrap();
        let a = InputAlgebra::cyclic_group(&f, 3, vec![f.from_i64(4), f.one(), f.one()]).unwrap();
        let text = serde_json::to_string(&InputAlgebraFile::from_algebra(&a)).unwrap();
        let b = InputAlgebra::from_json_str(&text).unwrap();
        assert!(b.validate().all_pass());
        assert_eq!(b.delta(), f.from_i64(4));
        assert_eq!(b.mul_basis(2, 2), a.mul_basis(2, 2));
    }

    #[test]
    fn wreath_dimensions_and_axioms() {
        let f = q();
        let triv = InputAlgebra::trivial(&f, f.one());
        assert_eq!(WreathAlgebra::new(&triv, 3).dim(), 6);
        assert_eq!(WreathAlgebra::new(&triv, 0).dim(), 1);
        let c2 = InputAlgebra::cyclic_group(&f, 2, vec![f.one(), f.one()]).unwrap();
        let w = WreathAlgebra::new(&c2, 2);
        assert_eq!(w.dim(), 8);
        let alg = w.algebra();
        assert_eq!(alg.associativity_witness(0), None);
        assert_eq!(alg.unit_witness(), None);
        assert_eq!(alg.involution_witness(0), None);
        let walled = WreathAlgebra::walled(&f, 2, 1);
        assert_eq!(walled.dim(), 2);
        assert_eq!(walled.algebra().associativity_witness(0), None);
    }

    #[test]
    fn wreath_generators_span() {
        let f = q();
        let c3 = InputAlgebra::cyclic_group(&f, 3, vec![f.one(), f.one(), f.one()]).unwrap();
        let w = WreathAlgebra::new(&c3, 2);
        let alg = w.algebra();
        // The subalgebra generated by the generators is everything.
        let mut span = crate::kernel::linalg::Echelon::new(alg.dim());
        let mut frontier = vec![alg.unit().clone()];
        span.insert(&f, alg.unit().clone());
        while let Some(x) = frontier.pop() {
            for g in alg.generators() {
                let y = alg.mul(&x, g);
                if span.insert(&f, y.clone()) {
                    frontier.push(y);
                }
            }
        }
        assert_eq!(span.rank(), 18);
    }
}
