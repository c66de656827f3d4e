use itertools::Itertools;

use super::{DiagramKind, LabeledDiagram};
use crate::inflation::PartialDiagram;

/// `(2k-1)!! = 1·3·5···(2k-1)`, the number of perfect matchings on `2k` points.
pub fn double_factorial(k: usize) -> u128 {
    (1..=k as u128).map(|i| 2 * i - 1).product()
}

fn matchings(kind: DiagramKind, partner: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let Some(v) = partner.iter().position(|&p| p == usize::MAX) else {
        out.push(partner.clone());
        return;
    };
    for w in v + 1..partner.len() {
        if partner[w] == usize::MAX && kind.edge_allowed(v, w) {
            partner[v] = w;
            partner[w] = v;
            matchings(kind, partner, out);
            partner[v] = usize::MAX;
            partner[w] = usize::MAX;
        }
    }
}

/// Number of legal matchings, by brute-force enumeration.
pub fn count_matchings(kind: DiagramKind) -> usize {
    let mut out = Vec::new();
    matchings(kind, &mut vec![usize::MAX; 2 * kind.columns()], &mut out);
    out.len()
}

/// Every legal diagram with every labeling by `0..label_count`, sorted.
pub fn enumerate_diagrams(kind: DiagramKind, label_count: usize) -> Vec<LabeledDiagram> {
    let n = kind.columns();
    let mut all = Vec::new();
    matchings(kind, &mut vec![usize::MAX; 2 * n], &mut all);
    let mut out = Vec::with_capacity(all.len() * label_count.pow(n as u32));
    for partner in all {
        let starts: Vec<usize> = (0..2 * n).filter(|&v| v < partner[v]).collect();
        let labelings: Vec<Vec<usize>> = if n == 0 {
            vec![Vec::new()]
        } else {
            (0..n)
                .map(|_| 0..label_count)
                .multi_cartesian_product()
                .collect()
        };
        for labels in labelings {
            let mut label = vec![0; 2 * n];
            for (&u, a) in starts.iter().zip(labels) {
                label[u] = a;
            }
            out.push(LabeledDiagram::from_parts(partner.clone(), label));
        }
    }
    out.sort();
    out
}

/// One-row partial diagrams with `l` labeled arcs on the columns of `kind`
/// (walled arcs must cross the wall), sorted.
pub fn enumerate_partial_diagrams(
    kind: DiagramKind,
    l: usize,
    label_count: usize,
) -> Vec<PartialDiagram> {
    let n = kind.columns();
    let wall = kind.wall();
    let pairs: Vec<(usize, usize)> = (0..n)
        .tuple_combinations()
        .filter(|&(u, v)| wall.is_none_or(|r| u < r && v >= r))
        .collect();
    let mut out = Vec::new();
    for chosen in pairs.iter().combinations(l) {
        let mut used = vec![false; n];
        let disjoint = chosen.iter().all(|&&(u, v)| {
            let ok = !used[u] && !used[v];
            used[u] = true;
            used[v] = true;
            ok
        });
        if !disjoint {
            continue;
        }
        let labelings: Vec<Vec<usize>> = if l == 0 {
            vec![Vec::new()]
        } else {
            (0..l)
                .map(|_| 0..label_count)
                .multi_cartesian_product()
                .collect()
        };
        for labels in labelings {
            let arcs = chosen
                .iter()
                .zip(labels)
                .map(|(&&(u, v), a)| (u, v, a))
                .collect();
            out.push(PartialDiagram::new(n, arcs));
        }
    }
    out.sort();
    out
}
