use serde::{Deserialize, Serialize};

use super::{expand_edges, DiagramAlgebra, DiagramElement, DiagramKind, LabeledDiagram};
use crate::error::{Error, Result};
use crate::kernel::linalg::{unit_vector, SparseVec};
use crate::scalars::{Field, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DeltaMode {
    Invertible,
    Zero,
}

/// Shape of the layer-`l` idempotent: the arcs it carries in each row and
/// the free columns through which a diagram on `N - 2l` columns is threaded.
///
/// `free_top[k]` and `free_bottom[k]` are the images of column `k` of the
/// smaller diagram. Both lists are increasing, so embedding never reverses
/// an edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerFrame {
    pub kind: DiagramKind,
    pub layer: usize,
    pub mode: DeltaMode,
    pub top_arcs: Vec<(usize, usize)>,
    pub bottom_arcs: Vec<(usize, usize)>,
    pub free_top: Vec<usize>,
    pub free_bottom: Vec<usize>,
    pub scale: Scalar,
}

fn complement(n: usize, arcs: &[(usize, usize)]) -> Vec<usize> {
    (0..n)
        .filter(|c| !arcs.iter().any(|&(u, v)| u == *c || v == *c))
        .collect()
}

impl CornerFrame {
    pub fn new(
        kind: DiagramKind,
        layer: usize,
        mode: DeltaMode,
        delta: &Scalar,
        field: &Field,
    ) -> Result<Self> {
        if layer > kind.max_layer() {
            return Err(Error::IndexOutOfRange(format!(
                "layer {layer} exceeds {} for {kind}",
                kind.max_layer()
            )));
        }
        let n = kind.columns();
        let l = layer;
        let scale = match mode {
            DeltaMode::Invertible if l == 0 => field.one(),
            DeltaMode::Invertible => {
                if delta.is_zero() {
                    return Err(Error::DeltaNotInvertible);
                }
                field.pow(&field.inv(delta)?, l as u32)
            }
            DeltaMode::Zero => field.one(),
        };
        let (top_arcs, bottom_arcs): (Vec<_>, Vec<_>) = match (kind, mode) {
            _ if l == 0 => (Vec::new(), Vec::new()),
            (DiagramKind::ABrauer { .. }, DeltaMode::Invertible) => {
                let m = n - 2 * l;
                let arcs: Vec<_> = (0..l).map(|i| (m + 2 * i, m + 2 * i + 1)).collect();
                (arcs.clone(), arcs)
            }
            (DiagramKind::ABrauer { .. }, DeltaMode::Zero) => {
                if n.is_multiple_of(2) {
                    return Err(Error::DeltaZeroEvenExcluded(n));
                }
                let m = n - 2 * l;
                let top = (0..l).map(|i| (m + 2 * i, m + 2 * i + 1)).collect();
                let bottom = (0..l).map(|i| (m - 1 + 2 * i, m + 2 * i)).collect();
                (top, bottom)
            }
            (DiagramKind::Walled { r, .. }, DeltaMode::Invertible) => {
                let arcs: Vec<_> = (1..=l).map(|i| (r - i, r + i - 1)).collect();
                (arcs.clone(), arcs)
            }
            (DiagramKind::Walled { r, t }, DeltaMode::Zero) => {
                let top: Vec<_> = (1..=l).map(|i| (r - i, r + i - 1)).collect();
                if t > l {
                    (top, (1..=l).map(|i| (r - i, r + i)).collect())
                } else if r > l {
                    (top, (1..=l).map(|i| (r - i - 1, r + i - 1)).collect())
                } else {
                    return Err(Error::NoDeltaZeroIdempotent(format!("{kind} at layer {l}")));
                }
            }
        };
        let free_top = complement(n, &top_arcs);
        let free_bottom = complement(n, &bottom_arcs);
        Ok(CornerFrame {
            kind,
            layer,
            mode,
            top_arcs,
            bottom_arcs,
            free_top,
            free_bottom,
            scale,
        })
    }

    /// The frame matching the loop parameter of `alg`: invertible δ if
    /// possible, otherwise the δ = 0 variant.
    pub fn for_algebra(alg: &DiagramAlgebra, layer: usize) -> Result<Self> {
        let delta = alg.delta();
        let mode = if delta.is_zero() {
            DeltaMode::Zero
        } else {
            DeltaMode::Invertible
        };
        CornerFrame::new(alg.kind(), layer, mode, &delta, alg.field())
    }

    pub fn small_kind(&self) -> DiagramKind {
        self.kind
            .reduced(self.layer)
            .expect("layer checked at construction")
    }

    /// `scale ·` (frame arcs labeled `1_A`, plus the edges of `small` threaded through the free columns).
    pub fn embed(&self, alg: &DiagramAlgebra, small: &LabeledDiagram) -> DiagramElement {
        let n = self.kind.columns();
        let m = small.columns();
        assert_eq!(m, self.free_top.len(), "diagram does not fit the frame");
        let a = alg.input();
        let unit: SparseVec = a.unit().clone();
        let lift = |v: usize| {
            if v < m {
                self.free_top[v]
            } else {
                n + self.free_bottom[v - m]
            }
        };
        let mut edges: Vec<(usize, usize, SparseVec)> = Vec::with_capacity(n);
        edges.extend(self.top_arcs.iter().map(|&(u, v)| (u, v, unit.clone())));
        edges.extend(
            self.bottom_arcs
                .iter()
                .map(|&(u, v)| (n + u, n + v, unit.clone())),
        );
        edges.extend(
            small
                .edges()
                .into_iter()
                .map(|(u, v, l)| (lift(u), lift(v), unit_vector(a.field(), l))),
        );
        edges.sort_by_key(|e| e.0);
        expand_edges(a.field(), n, &edges, &self.scale)
    }

    /// `embed` extended linearly.
    pub fn embed_element(&self, alg: &DiagramAlgebra, x: &DiagramElement) -> DiagramElement {
        let f = alg.field();
        let mut out = DiagramElement::new();
        for (d, c) in x.terms() {
            out.add_scaled(f, c, &self.embed(alg, d));
        }
        out
    }

    /// The idempotent `e_l` itself, the image of the identity.
    pub fn idempotent(&self, alg: &DiagramAlgebra) -> DiagramElement {
        let m = self.free_top.len();
        let f = alg.field();
        let unit_strands: Vec<_> = (0..m)
            .map(|c| (c, c + m, alg.input().unit().clone()))
            .collect();
        let small_one = expand_edges(f, m, &unit_strands, &f.one());
        self.embed_element(alg, &small_one)
    }
}
