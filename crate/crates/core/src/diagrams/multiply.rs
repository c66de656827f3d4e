use super::{expand_edges, DiagramElement, LabeledDiagram};
use crate::input_algebra::InputAlgebra;
use crate::kernel::linalg::{unit_vector, SparseVec};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Upper,
    Lower,
}

/// Product of the labels met along a walk, each starred when walked against its orientation.
fn path_label(a: &InputAlgebra, steps: &[(usize, bool)]) -> SparseVec {
    let mut acc = a.unit().clone();
    for &(label, reversed) in steps {
        let x = if reversed {
            a.star_basis(label).clone()
        } else {
            unit_vector(a.field(), label)
        };
        acc = a.mul(&acc, &x);
    }
    acc
}

/// `x · y`: stack `x` on top of `y`, compose labels along every result edge
/// (in walking order from its smaller endpoint) and multiply by the trace of
/// each closed loop.
pub(crate) fn multiply(a: &InputAlgebra, x: &LabeledDiagram, y: &LabeledDiagram) -> DiagramElement {
    let n = x.columns();
    assert_eq!(n, y.columns(), "diagrams on different column counts");
    let f = a.field();
    let mut middle_seen = vec![false; n];
    let mut boundary_seen = vec![false; 2 * n];
    let mut edges: Vec<(usize, usize, SparseVec)> = Vec::with_capacity(n);

    // Result vertices: 0..n are x's top row, n..2n are y's bottom row.
    for start in 0..2 * n {
        if boundary_seen[start] {
            continue;
        }
        let (mut side, mut v) = if start < n {
            (Side::Upper, start)
        } else {
            (Side::Lower, start)
        };
        let mut steps = Vec::new();
        let end = loop {
            let d = if side == Side::Upper { x } else { y };
            let w = d.partner(v);
            steps.push((d.edge_label(v), w < v));
            match side {
                Side::Upper if w < n => break w,
                Side::Lower if w >= n => break w,
                Side::Upper => {
                    middle_seen[w - n] = true;
                    side = Side::Lower;
                    v = w - n;
                }
                Side::Lower => {
                    middle_seen[w] = true;
                    side = Side::Upper;
                    v = w + n;
                }
            }
        };
        boundary_seen[start] = true;
        boundary_seen[end] = true;
        edges.push((start, end, path_label(a, &steps)));
    }

    let mut scale = f.one();
    for c in 0..n {
        if middle_seen[c] {
            continue;
        }
        // Closed loop through middle column c: start downwards into y.
        let mut steps = Vec::new();
        let (mut side, mut v) = (Side::Lower, c);
        loop {
            let d = if side == Side::Upper { x } else { y };
            let w = d.partner(v);
            steps.push((d.edge_label(v), w < v));
            let col = if side == Side::Upper { w - n } else { w };
            middle_seen[col] = true;
            if side == Side::Upper {
                side = Side::Lower;
                v = col;
            } else {
                side = Side::Upper;
                v = col + n;
            }
            if col == c {
                break;
            }
        }
        scale = f.mul(&scale, &a.trace(&path_label(a, &steps)));
        if scale.is_zero() {
            return DiagramElement::new();
        }
    }
    edges.sort_by_key(|e| e.0);
    expand_edges(f, n, &edges, &scale)
}
