//! Labeled Brauer and walled Brauer diagrams and the algebras they span.
//!
//! A diagram on `N` columns has vertices `0..N` (top row, left to right) and
//! `N..2N` (bottom row). Every edge is oriented from its smaller vertex and
//! carries one basis label of the input algebra `A`; traversing an edge
//! against its orientation reads the label as `a*`.

mod enumerate;
mod frame;
mod generators;
mod multiply;
mod text;

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use enumerate::{
    count_matchings, double_factorial, enumerate_diagrams, enumerate_partial_diagrams,
};
pub use frame::{CornerFrame, DeltaMode};
pub use generators::Generator;
pub use text::{format_diagram, parse_element};

use crate::error::{Error, Result};
use crate::input_algebra::InputAlgebra;
use crate::kernel::algebra::{Element, FinAlgebra};
use crate::kernel::linalg::{Accumulator, SparseVec};
use crate::scalars::{Field, Scalar};

pub const DEFAULT_CAP: usize = 2000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum DiagramKind {
    #[serde(rename = "abrauer")]
    ABrauer {
        n: usize,
    },
    Walled {
        r: usize,
        t: usize,
    },
}

impl DiagramKind {
    pub fn columns(&self) -> usize {
        match *self {
            DiagramKind::ABrauer { n } => n,
            DiagramKind::Walled { r, t } => r + t,
        }
    }

    /// Number of columns left of the wall.
    pub fn wall(&self) -> Option<usize> {
        match *self {
            DiagramKind::ABrauer { .. } => None,
            DiagramKind::Walled { r, .. } => Some(r),
        }
    }

    pub fn max_layer(&self) -> usize {
        match *self {
            DiagramKind::ABrauer { n } => n / 2,
            DiagramKind::Walled { r, t } => r.min(t),
        }
    }

    /// The kind obtained by removing `l` arcs from each row.
    pub fn reduced(&self, l: usize) -> Result<DiagramKind> {
        if l > self.max_layer() {
            return Err(Error::IndexOutOfRange(format!(
                "layer {l} exceeds {}",
                self.max_layer()
            )));
        }
        Ok(match *self {
            DiagramKind::ABrauer { n } => DiagramKind::ABrauer { n: n - 2 * l },
            DiagramKind::Walled { r, t } => DiagramKind::Walled { r: r - l, t: t - l },
        })
    }

    /// Whether an edge between two vertices is allowed.
    pub fn edge_allowed(&self, u: usize, v: usize) -> bool {
        let Some(r) = self.wall() else { return true };
        let n = self.columns();
        let (cu, cv) = (u % n, v % n);
        let same_row = (u < n) == (v < n);
        let same_side = (cu < r) == (cv < r);
        same_row != same_side
    }

    pub fn name(&self) -> String {
        match *self {
            DiagramKind::ABrauer { n } => format!("abrauer({n})"),
            DiagramKind::Walled { r, t } => format!("walled({r},{t})"),
        }
    }
}

impl fmt::Display for DiagramKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// A single diagram: perfect matching plus one label index per edge.
///
/// `label[v]` is meaningful only at the smaller endpoint of each edge and is
/// zero at the larger one. Ordering puts fewer arcs first, so the identity
/// matching precedes everything else.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledDiagram {
    arcs: usize,
    partner: Vec<usize>,
    label: Vec<usize>,
}

impl LabeledDiagram {
    /// Builds a diagram from canonically oriented edges `(u, v, label)` with `u < v`.
    pub fn from_edges(columns: usize, edges: &[(usize, usize, usize)]) -> Result<Self> {
        let mut partner = vec![usize::MAX; 2 * columns];
        let mut label = vec![0; 2 * columns];
        for &(u, v, a) in edges {
            if u >= v || v >= 2 * columns || partner[u] != usize::MAX || partner[v] != usize::MAX {
                return Err(Error::IndexOutOfRange(format!("bad edge ({u},{v})")));
            }
            partner[u] = v;
            partner[v] = u;
            label[u] = a;
        }
        if partner.contains(&usize::MAX) {
            return Err(Error::IndexOutOfRange(
                "edges do not form a perfect matching".into(),
            ));
        }
        Ok(LabeledDiagram::from_parts(partner, label))
    }

    pub(crate) fn from_parts(partner: Vec<usize>, mut label: Vec<usize>) -> Self {
        let n = partner.len() / 2;
        for v in 0..partner.len() {
            if partner[v] < v {
                label[v] = 0;
            }
        }
        let arcs = (0..n).filter(|&v| partner[v] < n).count() / 2;
        LabeledDiagram {
            arcs,
            partner,
            label,
        }
    }

    pub fn identity(columns: usize, label: usize) -> Self {
        let partner = (0..2 * columns)
            .map(|v| (v + columns) % (2 * columns))
            .collect();
        let labels = (0..2 * columns)
            .map(|v| if v < columns { label } else { 0 })
            .collect();
        LabeledDiagram::from_parts(partner, labels)
    }

    pub fn columns(&self) -> usize {
        self.partner.len() / 2
    }

    /// Number of horizontal edges in each row.
    pub fn arcs(&self) -> usize {
        self.arcs
    }

    pub fn partner(&self, v: usize) -> usize {
        self.partner[v]
    }

    /// Label of the edge at `v`, read in canonical orientation.
    pub fn edge_label(&self, v: usize) -> usize {
        self.label[v.min(self.partner[v])]
    }

    /// Canonically oriented edges `(u, v, label)` sorted by `u`.
    pub fn edges(&self) -> Vec<(usize, usize, usize)> {
        (0..self.partner.len())
            .filter(|&u| u < self.partner[u])
            .map(|u| (u, self.partner[u], self.label[u]))
            .collect()
    }

    pub fn is_legal(&self, kind: DiagramKind) -> bool {
        self.columns() == kind.columns()
            && self
                .edges()
                .iter()
                .all(|&(u, v, _)| kind.edge_allowed(u, v))
    }

    /// Reflection across the horizontal axis, as an element: vertical labels become starred.
    pub fn flip(&self, a: &InputAlgebra) -> DiagramElement {
        let n = self.columns();
        let swap = |v: usize| (v + n) % (2 * n);
        let mut edges = Vec::new();
        for (u, v, l) in self.edges() {
            let (x, y) = (swap(u), swap(v));
            if x < y {
                edges.push((x, y, crate::kernel::linalg::unit_vector(a.field(), l)));
            } else {
                edges.push((y, x, a.star_basis(l).clone()));
            }
        }
        expand_edges(a.field(), n, &edges, &a.field().one())
    }
}

/// Expands edges carrying label vectors into a linear combination of diagrams.
pub(crate) fn expand_edges(
    field: &Field,
    columns: usize,
    edges: &[(usize, usize, SparseVec)],
    scale: &Scalar,
) -> DiagramElement {
    let mut out = DiagramElement::new();
    if scale.is_zero() {
        return out;
    }
    let parts: Vec<SparseVec> = edges.iter().map(|e| e.2.clone()).collect();
    let mut partner = vec![0; 2 * columns];
    for (u, v, _) in edges {
        partner[*u] = *v;
        partner[*v] = *u;
    }
    for (labels, c) in crate::input_algebra::expand_labels(field, &parts) {
        let mut label = vec![0; 2 * columns];
        for ((u, _, _), l) in edges.iter().zip(labels) {
            label[*u] = l;
        }
        let d = LabeledDiagram::from_parts(partner.clone(), label);
        out.add_term(field, d, &field.mul(scale, &c));
    }
    out
}

/// Finite linear combination of diagrams with nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DiagramElement {
    terms: BTreeMap<LabeledDiagram, Scalar>,
}

impl DiagramElement {
    pub fn new() -> Self {
        DiagramElement::default()
    }

    pub fn single(d: LabeledDiagram, c: Scalar) -> Self {
        let mut e = DiagramElement::new();
        if !c.is_zero() {
            e.terms.insert(d, c);
        }
        e
    }

    pub fn add_term(&mut self, field: &Field, d: LabeledDiagram, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(d) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                field.add_assign(e.get_mut(), c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, field: &Field, c: &Scalar, other: &DiagramElement) {
        for (d, x) in &other.terms {
            self.add_term(field, d.clone(), &field.mul(c, x));
        }
    }

    pub fn scaled(&self, field: &Field, c: &Scalar) -> DiagramElement {
        let mut out = DiagramElement::new();
        out.add_scaled(field, c, self);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LabeledDiagram, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, d: &LabeledDiagram) -> Option<&Scalar> {
        self.terms.get(d)
    }

    /// Drops every term with more than `l` arcs.
    pub fn truncate_above(&self, l: usize) -> DiagramElement {
        DiagramElement {
            terms: self
                .terms
                .iter()
                .filter(|(d, _)| d.arcs() <= l)
                .map(|(d, c)| (d.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn min_arcs(&self) -> Option<usize> {
        self.terms.keys().map(LabeledDiagram::arcs).min()
    }
}

/// The diagram algebra `D_n(A)` or `B_{r,t}(δ)` on an explicit basis.
#[derive(Clone, Debug)]
pub struct DiagramAlgebra {
    kind: DiagramKind,
    input: Arc<InputAlgebra>,
    basis: Arc<Vec<LabeledDiagram>>,
    index: Arc<HashMap<LabeledDiagram, usize>>,
}

impl DiagramAlgebra {
    pub fn new(kind: DiagramKind, input: &InputAlgebra) -> Result<Self> {
        if kind.wall().is_some() && input.dim() != 1 {
            return Err(Error::KindMismatch(
                "walled diagrams carry no labels; use a one-dimensional input algebra".into(),
            ));
        }
        let basis = enumerate_diagrams(kind, input.dim());
        let index = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, d)| (d, i))
            .collect();
        Ok(DiagramAlgebra {
            kind,
            input: Arc::new(input.clone()),
            basis: Arc::new(basis),
            index: Arc::new(index),
        })
    }

    /// Walled Brauer algebra with loop parameter δ.
    pub fn walled(field: &Field, r: usize, t: usize, delta: Scalar) -> Self {
        DiagramAlgebra::new(
            DiagramKind::Walled { r, t },
            &InputAlgebra::trivial(field, delta),
        )
        .expect("trivial labels")
    }

    pub fn kind(&self) -> DiagramKind {
        self.kind
    }

    pub fn input(&self) -> &InputAlgebra {
        &self.input
    }

    pub fn field(&self) -> &Field {
        self.input.field()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[LabeledDiagram] {
        &self.basis
    }

    pub fn index_of(&self, d: &LabeledDiagram) -> Option<usize> {
        self.index.get(d).copied()
    }

    pub fn delta(&self) -> Scalar {
        self.input.delta()
    }

    pub fn multiply(&self, x: &LabeledDiagram, y: &LabeledDiagram) -> DiagramElement {
        multiply::multiply(&self.input, x, y)
    }

    pub fn mul(&self, x: &DiagramElement, y: &DiagramElement) -> DiagramElement {
        let f = self.field();
        let mut out = DiagramElement::new();
        for (a, c) in x.terms() {
            for (b, d) in y.terms() {
                out.add_scaled(f, &f.mul(c, d), &self.multiply(a, b));
            }
        }
        out
    }

    pub fn involution(&self, x: &DiagramElement) -> DiagramElement {
        let f = self.field();
        let mut out = DiagramElement::new();
        for (d, c) in x.terms() {
            out.add_scaled(f, c, &d.flip(&self.input));
        }
        out
    }

    /// `Σ 1_A`-labeled identity diagram.
    pub fn one(&self) -> DiagramElement {
        let n = self.kind.columns();
        let edges: Vec<_> = (0..n)
            .map(|c| (c, c + n, self.input.unit().clone()))
            .collect();
        expand_edges(self.field(), n, &edges, &self.field().one())
    }

    pub fn to_vector(&self, x: &DiagramElement) -> Element {
        let f = self.field();
        let mut acc = Accumulator::new(f, self.dim());
        for (d, c) in x.terms() {
            acc.add(f, self.index[d], c);
        }
        acc.drain(f)
    }

    pub fn from_vector(&self, v: &Element) -> DiagramElement {
        let mut out = DiagramElement::new();
        for (i, c) in v {
            out.terms.insert(self.basis[*i].clone(), c.clone());
        }
        out
    }

    pub fn generator(&self, g: Generator) -> Result<DiagramElement> {
        generators::generator(self, g)
    }

    /// Generating set used for module computations.
    pub fn algebra_generators(&self) -> Vec<DiagramElement> {
        generators::algebra_generators(self)
    }

    /// Indices of basis diagrams with at least `l` arcs.
    pub fn layer_indices(&self, l: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| self.basis[i].arcs() >= l)
            .collect()
    }

    /// The algebra as a [`FinAlgebra`] with lazily computed structure constants.
    pub fn fin_algebra(&self, cap: usize) -> Result<FinAlgebra> {
        if self.dim() > cap {
            return Err(Error::CapExceeded {
                dim: self.dim(),
                cap,
            });
        }
        let labels = self
            .basis
            .iter()
            .map(|d| format_diagram(self.kind, &self.input, d))
            .collect();
        let unit = self.to_vector(&self.one());
        let (me, me2) = (self.clone(), self.clone());
        let gens = self
            .algebra_generators()
            .iter()
            .map(|g| self.to_vector(g))
            .collect();
        let name = format!("{}[{}]", self.kind, self.input.name());
        Ok(
            FinAlgebra::from_fn(name, self.field().clone(), labels, unit, move |i, j| {
                me.to_vector(&me.multiply(&me.basis[i], &me.basis[j]))
            })
            .with_involution(move |_, i| me2.to_vector(&me2.basis[i].flip(&me2.input)))
            .with_generators(gens),
        )
    }
}

#[cfg(test)]
mod tests;
