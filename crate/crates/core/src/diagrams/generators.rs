use serde::{Deserialize, Serialize};

use super::{expand_edges, DiagramAlgebra, DiagramElement, DiagramKind};
use crate::error::{Error, Result};
use crate::kernel::linalg::{unit_vector, SparseVec};

/// Named generators with 1-based column indices, as usually drawn.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Generator {
    /// Swap columns `i` and `i+1`.
    S(usize),
    /// Cup-cap on columns `i` and `i+1`.
    E(usize),
    /// Identity with column `j` labeled by basis element `a` of the input algebra.
    H(usize, usize),
    /// Walled cup-cap joining column `k` (left of the wall) to column `l` (right of it).
    WalledE(usize, usize),
}

fn range_err(what: String) -> Error {
    Error::IndexOutOfRange(what)
}

pub(crate) fn generator(alg: &DiagramAlgebra, g: Generator) -> Result<DiagramElement> {
    let kind = alg.kind();
    let n = kind.columns();
    let a = alg.input();
    let unit: SparseVec = a.unit().clone();
    let strand = |c: usize| (c, c + n, unit.clone());
    let edges: Vec<(usize, usize, SparseVec)> = match g {
        Generator::S(i) => {
            if i == 0 || i >= n {
                return Err(range_err(format!(
                    "s_{i} needs 1 <= i <= {}",
                    n.saturating_sub(1)
                )));
            }
            if kind.wall() == Some(i) {
                return Err(range_err(format!("s_{i} crosses the wall")));
            }
            (0..n)
                .map(|c| {
                    let target = if c == i - 1 {
                        i
                    } else if c == i {
                        i - 1
                    } else {
                        c
                    };
                    (c, target + n, unit.clone())
                })
                .collect()
        }
        Generator::E(i) => {
            if kind.wall().is_some() {
                return Err(Error::KindMismatch(
                    "walled cup-caps are written e_{k,l}".into(),
                ));
            }
            if i == 0 || i >= n {
                return Err(range_err(format!(
                    "e_{i} needs 1 <= i <= {}",
                    n.saturating_sub(1)
                )));
            }
            let mut edges = vec![(i - 1, i, unit.clone()), (n + i - 1, n + i, unit.clone())];
            edges.extend((0..n).filter(|&c| c != i - 1 && c != i).map(strand));
            edges
        }
        Generator::H(j, label) => {
            if kind.wall().is_some() {
                return Err(Error::KindMismatch(
                    "walled diagrams carry no labels".into(),
                ));
            }
            if j == 0 || j > n {
                return Err(range_err(format!("h_{j} needs 1 <= j <= {n}")));
            }
            if label >= a.dim() {
                return Err(range_err(format!(
                    "label {label} exceeds dim A = {}",
                    a.dim()
                )));
            }
            (0..n)
                .map(|c| {
                    if c == j - 1 {
                        (c, c + n, unit_vector(a.field(), label))
                    } else {
                        strand(c)
                    }
                })
                .collect()
        }
        Generator::WalledE(k, l) => {
            let Some(r) = kind.wall() else {
                return Err(Error::KindMismatch("e_{k,l} needs a walled kind".into()));
            };
            if k == 0 || l == 0 || k > n || l > n {
                return Err(range_err(format!("e_{{{k},{l}}} outside 1..={n}")));
            }
            if !(k <= r && l > r) {
                return Err(Error::WallViolation { k, l });
            }
            let (u, v) = (k - 1, l - 1);
            let mut edges = vec![(u, v, unit.clone()), (n + u, n + v, unit.clone())];
            edges.extend((0..n).filter(|&c| c != u && c != v).map(strand));
            edges
        }
    };
    let mut edges = edges;
    edges.sort_by_key(|e| e.0);
    Ok(expand_edges(a.field(), n, &edges, &a.field().one()))
}

/// A generating set of the whole algebra: `s_i`, one cup-cap and the labelings of column 1.
pub(crate) fn algebra_generators(alg: &DiagramAlgebra) -> Vec<DiagramElement> {
    let kind = alg.kind();
    let n = kind.columns();
    let mut out = Vec::new();
    for i in 1..n {
        if kind.wall() != Some(i) {
            out.push(Generator::S(i));
        }
    }
    match kind {
        DiagramKind::ABrauer { .. } => {
            if n >= 2 {
                out.push(Generator::E(1));
            }
            if n >= 1 {
                let skip = alg.input().unit_index();
                out.extend(
                    (0..alg.input().dim())
                        .filter(|&a| Some(a) != skip)
                        .map(|a| Generator::H(1, a)),
                );
            }
        }
        DiagramKind::Walled { r, t } => {
            if r >= 1 && t >= 1 {
                out.push(Generator::WalledE(r, r + 1));
            }
        }
    }
    out.into_iter()
        .map(|g| generator(alg, g).expect("generator indices in range"))
        .collect()
}
