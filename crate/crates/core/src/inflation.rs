//! Layer-by-layer decomposition of a diagram algebra.
//!
//! A diagram with exactly `l` arcs per row is cut into its top row, its
//! bottom row (both [`PartialDiagram`]s) and the labeled permutation of the
//! surviving strands, an element of the small algebra on `N - 2l` strands.

use std::collections::{HashMap, HashSet};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::diagrams::{
    enumerate_partial_diagrams, DiagramAlgebra, DiagramElement, DiagramKind, LabeledDiagram,
};
use crate::error::{Error, Result};
use crate::input_algebra::{InputAlgebra, Perm, WreathAlgebra, WreathBasis};
use crate::kernel::algebra::Element;
use crate::kernel::linalg::{unit_vector, SparseVec, Subspace};
use crate::scalars::{FieldDescriptor, Scalar};

/// One row of `columns` vertices carrying labeled arcs `(u, v, label)`, `u < v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PartialDiagram {
    columns: usize,
    arcs: Vec<(usize, usize, usize)>,
}

impl PartialDiagram {
    pub fn new(columns: usize, mut arcs: Vec<(usize, usize, usize)>) -> Self {
        for a in arcs.iter_mut() {
            if a.0 > a.1 {
                std::mem::swap(&mut a.0, &mut a.1);
            }
        }
        arcs.sort();
        PartialDiagram { columns, arcs }
    }

    pub fn columns(&self) -> usize {
        self.columns
    }

    pub fn arcs(&self) -> &[(usize, usize, usize)] {
        &self.arcs
    }

    pub fn layer(&self) -> usize {
        self.arcs.len()
    }

    /// Unmatched vertices, left to right.
    pub fn free(&self) -> Vec<usize> {
        (0..self.columns)
            .filter(|c| !self.arcs.iter().any(|&(u, v, _)| u == *c || v == *c))
            .collect()
    }

    fn partners(&self) -> Vec<Option<(usize, usize)>> {
        let mut out = vec![None; self.columns];
        for &(u, v, l) in &self.arcs {
            out[u] = Some((v, l));
            out[v] = Some((u, l));
        }
        out
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k as u128).fold(1, |acc, i| acc * (n as u128 - i) / (i + 1))
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Label read when walking the arc from `from` to its partner.
fn walked(a: &InputAlgebra, from: usize, to: usize, label: usize) -> SparseVec {
    if from < to {
        unit_vector(a.field(), label)
    } else {
        a.star_basis(label).clone()
    }
}

/// The data of one layer: its partial diagrams and its small algebra.
#[derive(Clone, Debug)]
pub struct InflationLayer {
    kind: DiagramKind,
    layer: usize,
    input: InputAlgebra,
    partials: Vec<PartialDiagram>,
    index: HashMap<PartialDiagram, usize>,
    small: WreathAlgebra,
}

impl InflationLayer {
    pub fn new(alg: &DiagramAlgebra, layer: usize) -> Result<Self> {
        let kind = alg.kind();
        let small_kind = kind.reduced(layer)?;
        let input = alg.input().clone();
        let partials = enumerate_partial_diagrams(kind, layer, input.dim());
        let index = partials
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let small = match small_kind {
            DiagramKind::ABrauer { n } => WreathAlgebra::new(&input, n),
            DiagramKind::Walled { r, t } => WreathAlgebra::walled(input.field(), r, t),
        };
        Ok(InflationLayer {
            kind,
            layer,
            input,
            partials,
            index,
            small,
        })
    }

    pub fn layer(&self) -> usize {
        self.layer
    }

    pub fn partials(&self) -> &[PartialDiagram] {
        &self.partials
    }

    pub fn partial_index(&self, p: &PartialDiagram) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn small(&self) -> &WreathAlgebra {
        &self.small
    }

    /// Closed-form size of the partial-diagram basis, labels on arcs only.
    pub fn expected_rank(&self) -> u128 {
        let l = self.layer;
        match self.kind {
            DiagramKind::ABrauer { n } => {
                (self.input.dim() as u128).pow(l as u32) * factorial(n)
                    / (factorial(l) * factorial(n - 2 * l) * 2u128.pow(l as u32))
            }
            DiagramKind::Walled { r, t } => binomial(r, l) * binomial(t, l) * factorial(l),
        }
    }

    /// Cuts a diagram with exactly `l` arcs per row into `(top, bottom, strands)`.
    pub fn psi(&self, d: &LabeledDiagram) -> Result<(PartialDiagram, PartialDiagram, WreathBasis)> {
        if d.arcs() != self.layer {
            return Err(Error::WrongLayer {
                expected: self.layer,
                found: d.arcs(),
            });
        }
        let n = d.columns();
        let mut top = Vec::new();
        let mut bottom = Vec::new();
        let mut vertical = Vec::new();
        for (u, v, l) in d.edges() {
            match (u < n, v < n) {
                (true, true) => top.push((u, v, l)),
                (false, false) => bottom.push((u - n, v - n, l)),
                _ => vertical.push((u, v - n, l)),
            }
        }
        let top = PartialDiagram::new(n, top);
        let bottom = PartialDiagram::new(n, bottom);
        let (free_top, free_bottom) = (top.free(), bottom.free());
        let m = free_top.len();
        let mut perm = vec![0; m];
        let mut labels = vec![0; m];
        for (u, v, l) in vertical {
            let i = free_top
                .binary_search(&u)
                .expect("vertical edge starts at a free vertex");
            perm[i] = free_bottom
                .binary_search(&v)
                .expect("vertical edge ends at a free vertex");
            labels[i] = l;
        }
        Ok((top, bottom, WreathBasis { labels, perm }))
    }

    pub fn psi_inverse(
        &self,
        top: &PartialDiagram,
        bottom: &PartialDiagram,
        strands: &WreathBasis,
    ) -> LabeledDiagram {
        let n = top.columns();
        let (free_top, free_bottom) = (top.free(), bottom.free());
        let mut edges: Vec<(usize, usize, usize)> = top.arcs().to_vec();
        edges.extend(bottom.arcs().iter().map(|&(u, v, l)| (u + n, v + n, l)));
        for (i, (&j, &l)) in strands.perm.iter().zip(&strands.labels).enumerate() {
            edges.push((free_top[i], n + free_bottom[j], l));
        }
        LabeledDiagram::from_edges(n, &edges).expect("partial diagrams assemble to a matching")
    }

    /// `psi_inverse` extended linearly over an element of the small algebra.
    pub fn psi_inverse_element(
        &self,
        top: &PartialDiagram,
        bottom: &PartialDiagram,
        x: &Element,
    ) -> DiagramElement {
        let f = self.input.field();
        let mut out = DiagramElement::new();
        for (k, c) in x {
            out.add_term(f, self.psi_inverse(top, bottom, self.small.element(*k)), c);
        }
        out
    }

    /// Pairing of a bottom row `lower` against a top row `upper`: loop traces
    /// times the labeled permutation of the through-paths, or zero when some
    /// path returns to the row it started from.
    pub fn phi(&self, lower: &PartialDiagram, upper: &PartialDiagram) -> Element {
        let a = &self.input;
        let f = a.field();
        let n = lower.columns();
        let (below, above) = (lower.partners(), upper.partners());
        let (free_lower, free_upper) = (lower.free(), upper.free());
        let mut visited = vec![false; n];
        let m = free_lower.len();
        let mut perm: Perm = vec![0; m];
        let mut parts: Vec<SparseVec> = vec![a.unit().clone(); m];

        for (i, &start) in free_lower.iter().enumerate() {
            let mut acc = a.unit().clone();
            let mut c = start;
            visited[c] = true;
            // Along an arc of the upper row, then back along the lower row.
            while let Some((d, l)) = above[c] {
                acc = a.mul(&acc, &walked(a, c, d, l));
                visited[d] = true;
                let Some((e, l2)) = below[d] else {
                    return Vec::new();
                };
                acc = a.mul(&acc, &walked(a, d, e, l2));
                visited[e] = true;
                c = e;
            }
            perm[i] = free_upper
                .binary_search(&c)
                .expect("path ends at a vertex free in the upper row");
            parts[i] = acc;
        }

        let mut scale = f.one();
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut acc = a.unit().clone();
            let mut c = start;
            loop {
                let (d, l) = above[c].expect("cycle vertex");
                acc = a.mul(&acc, &walked(a, c, d, l));
                let (e, l2) = below[d].expect("cycle vertex");
                acc = a.mul(&acc, &walked(a, d, e, l2));
                visited[c] = true;
                visited[d] = true;
                c = e;
                if c == start {
                    break;
                }
            }
            scale = f.mul(&scale, &a.trace(&acc));
        }
        if scale.is_zero() {
            return Vec::new();
        }
        let x = self
            .small
            .element_from_parts(&perm, &parts)
            .expect("through-paths respect the wall");
        self.small.algebra().scale(&scale, &x)
    }
}

/// Span of the basis diagrams with at least `l` arcs per row.
pub fn layer_ideal(alg: &DiagramAlgebra, l: usize) -> Result<Subspace> {
    if l > alg.kind().max_layer() {
        return Err(Error::IndexOutOfRange(format!(
            "layer {l} exceeds {}",
            alg.kind().max_layer()
        )));
    }
    Ok(Subspace::coordinate(
        alg.field(),
        alg.dim(),
        &alg.layer_indices(l),
    ))
}

/// Whether multiplying the layer-`l` ideal by every algebra generator on
/// either side stays inside it.
pub fn ideal_is_two_sided(alg: &DiagramAlgebra, l: usize) -> bool {
    let gens = alg.algebra_generators();
    alg.basis().iter().filter(|d| d.arcs() >= l).all(|d| {
        let x = DiagramElement::single(d.clone(), alg.field().one());
        gens.iter().all(|g| {
            let stays = |y: DiagramElement| y.min_arcs().is_none_or(|k| k >= l);
            stays(alg.mul(g, &x)) && stays(alg.mul(&x, g))
        })
    })
}

/// How many layer pairs to test.
#[derive(Clone, Copy, Debug)]
pub struct CheckBudget {
    /// Check every pair when there are at most this many.
    pub exhaustive_pairs: usize,
    /// Otherwise check this many random pairs.
    pub samples: usize,
    pub seed: u64,
}

impl Default for CheckBudget {
    fn default() -> Self {
        CheckBudget {
            exhaustive_pairs: 200_000,
            samples: 2000,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LayerReport {
    pub l: usize,
    #[serde(rename = "rankV")]
    pub rank_v: usize,
    #[serde(rename = "rankFormula")]
    pub rank_formula: u128,
    /// The rank obtained when every vertex, not only every arc, carries a label.
    #[serde(rename = "rankAllVerticesLabeled")]
    pub rank_all_vertices_labeled: u128,
    #[serde(rename = "dimSmall")]
    pub dim_small: usize,
    #[serde(rename = "layerDim")]
    pub layer_dim: usize,
    #[serde(rename = "twoSidedIdeal")]
    pub two_sided_ideal: bool,
    #[serde(rename = "psiBijective")]
    pub psi_bijective: bool,
    #[serde(rename = "psiMultiplicative")]
    pub psi_multiplicative: bool,
    #[serde(rename = "involutionOK")]
    pub involution_ok: bool,
    #[serde(rename = "pairsChecked")]
    pub pairs_checked: usize,
    pub exhaustive: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl LayerReport {
    pub fn passed(&self) -> bool {
        self.rank_v as u128 == self.rank_formula
            && self.two_sided_ideal
            && self.psi_bijective
            && self.psi_multiplicative
            && self.involution_ok
    }
}

/// Layer-`l` product predicted by the decomposition.
pub fn inflation_product(
    layer: &InflationLayer,
    x: &LabeledDiagram,
    y: &LabeledDiagram,
) -> Result<DiagramElement> {
    let (top, lower, p) = layer.psi(x)?;
    let (upper, bottom, q) = layer.psi(y)?;
    let pairing = layer.phi(&lower, &upper);
    if pairing.is_empty() {
        return Ok(DiagramElement::new());
    }
    let small = layer.small.algebra();
    let px = unit_vector(
        small.field(),
        layer
            .small
            .index_of(&p)
            .expect("strand data is a basis element"),
    );
    let qx = unit_vector(
        small.field(),
        layer
            .small
            .index_of(&q)
            .expect("strand data is a basis element"),
    );
    let middle = small.mul(&small.mul(&px, &pairing), &qx);
    Ok(layer.psi_inverse_element(&top, &bottom, &middle))
}

pub fn verify_layer(alg: &DiagramAlgebra, l: usize, budget: CheckBudget) -> Result<LayerReport> {
    let layer = InflationLayer::new(alg, l)?;
    let f = alg.field();
    let diagrams: Vec<&LabeledDiagram> = alg.basis().iter().filter(|d| d.arcs() == l).collect();
    let mut witness = None;

    // Bijectivity: every image is a distinct legal triple and the count matches.
    let mut seen = HashSet::new();
    let mut psi_ok = true;
    for d in &diagrams {
        let (e, g, p) = layer.psi(d)?;
        let known = layer
            .partial_index(&e)
            .zip(layer.partial_index(&g))
            .zip(layer.small.index_of(&p));
        let round_trip = layer.psi_inverse(&e, &g, &p) == **d;
        if known.is_none() || !round_trip || !seen.insert(known) {
            psi_ok = false;
            witness.get_or_insert_with(|| format!("psi fails on {:?}", d.edges()));
        }
    }
    let rank_v = layer.partials.len();
    psi_ok &= diagrams.len() == rank_v * rank_v * layer.small.dim();

    // Multiplicativity modulo the next layer.
    let count = diagrams.len();
    let exhaustive = count * count <= budget.exhaustive_pairs;
    let pairs: Vec<(usize, usize)> = if exhaustive {
        (0..count)
            .flat_map(|i| (0..count).map(move |j| (i, j)))
            .collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
        let idx: Vec<usize> = (0..count).collect();
        (0..budget.samples)
            .map(|_| {
                (
                    *idx.choose(&mut rng).unwrap(),
                    *idx.choose(&mut rng).unwrap(),
                )
            })
            .collect()
    };
    let mut mult_ok = true;
    for &(i, j) in &pairs {
        let (x, y) = (diagrams[i], diagrams[j]);
        let direct = alg.multiply(x, y).truncate_above(l);
        if direct != inflation_product(&layer, x, y)? {
            mult_ok = false;
            witness.get_or_insert_with(|| {
                format!("product mismatch on {:?} * {:?}", x.edges(), y.edges())
            });
            break;
        }
    }

    // Involution exchanges the two rows and stars the strands.
    let small = layer.small.algebra();
    let mut inv_ok = true;
    for d in &diagrams {
        let (e, g, p) = layer.psi(d)?;
        let px = unit_vector(f, layer.small.index_of(&p).expect("basis element"));
        let starred = small.star(&px).expect("small algebra has an involution");
        if d.flip(alg.input()) != layer.psi_inverse_element(&g, &e, &starred) {
            inv_ok = false;
            witness.get_or_insert_with(|| format!("involution mismatch on {:?}", d.edges()));
            break;
        }
    }

    let rank_all_vertices_labeled = match alg.kind() {
        DiagramKind::ABrauer { n } if l > 0 => {
            layer.expected_rank() / (alg.input().dim() as u128).pow(l as u32)
                * (alg.input().dim() as u128).pow(n as u32)
        }
        _ => layer.expected_rank(),
    };
    Ok(LayerReport {
        l,
        rank_v,
        rank_formula: layer.expected_rank(),
        rank_all_vertices_labeled,
        dim_small: layer.small.dim(),
        layer_dim: count,
        two_sided_ideal: ideal_is_two_sided(alg, l),
        psi_bijective: psi_ok,
        psi_multiplicative: mult_ok,
        involution_ok: inv_ok,
        pairs_checked: pairs.len(),
        exhaustive,
        witness,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionReport {
    pub kind: DiagramKind,
    pub field: FieldDescriptor,
    #[serde(rename = "inputAlgebra")]
    pub input_algebra: String,
    pub delta: String,
    pub dim: usize,
    pub layers: Vec<LayerReport>,
    /// `J_{l+1} ⊆ J_l` with `J_0` the whole algebra.
    #[serde(rename = "idealChain")]
    pub ideal_chain: bool,
    #[serde(rename = "dimensionIdentity")]
    pub dimension_identity: bool,
}

impl DecompositionReport {
    pub fn passed(&self) -> bool {
        self.ideal_chain && self.dimension_identity && self.layers.iter().all(LayerReport::passed)
    }
}

pub fn verify_decomposition(
    alg: &DiagramAlgebra,
    budget: CheckBudget,
) -> Result<DecompositionReport> {
    let f = alg.field();
    let top = alg.kind().max_layer();
    let layers = (0..=top)
        .map(|l| verify_layer(alg, l, budget))
        .collect::<Result<Vec<_>>>()?;
    let ideals = (0..=top)
        .map(|l| layer_ideal(alg, l))
        .collect::<Result<Vec<_>>>()?;
    let ideal_chain =
        ideals[0].dim() == alg.dim() && ideals.windows(2).all(|w| w[0].contains_subspace(f, &w[1]));
    let total: usize = layers
        .iter()
        .map(|r| r.rank_v * r.rank_v * r.dim_small)
        .sum();
    let layered: bool = layers.iter().enumerate().all(|(l, r)| {
        let next = ideals.get(l + 1).map_or(0, Subspace::dim);
        r.rank_v * r.rank_v * r.dim_small == ideals[l].dim() - next
    });
    let delta: Scalar = alg.delta();
    Ok(DecompositionReport {
        kind: alg.kind(),
        field: f.descriptor().clone(),
        input_algebra: alg.input().name().to_string(),
        delta: f.format(&delta),
        dim: alg.dim(),
        layers,
        ideal_chain,
        dimension_identity: total == alg.dim() && layered,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Field;

    fn q() -> Field {
        Field::rationals()
    }

    fn brauer(n: usize, delta: i64) -> DiagramAlgebra {
        DiagramAlgebra::new(
            DiagramKind::ABrauer { n },
            &InputAlgebra::trivial(&q(), q().from_i64(delta)),
        )
        .unwrap()
    }

    #[test]
    fn layer_ideal_dimensions() {
        assert_eq!(layer_ideal(&brauer(2, 1), 0).unwrap().dim(), 3);
        assert_eq!(layer_ideal(&brauer(2, 1), 1).unwrap().dim(), 1);
        let w = DiagramAlgebra::walled(&q(), 2, 2, q().one());
        assert_eq!(layer_ideal(&w, 2).unwrap().dim(), 4);
        assert!(layer_ideal(&w, 3).is_err());
        assert!(ideal_is_two_sided(&w, 1));
    }

    #[test]
    fn psi_reads_cup_cap() {
        let alg = brauer(2, 3);
        let layer = InflationLayer::new(&alg, 1).unwrap();
        let e = LabeledDiagram::from_edges(2, &[(0, 1, 0), (2, 3, 0)]).unwrap();
        let (top, bottom, p) = layer.psi(&e).unwrap();
        assert_eq!(top, PartialDiagram::new(2, vec![(0, 1, 0)]));
        assert_eq!(bottom, top);
        assert!(p.perm.is_empty());
        assert_eq!(
            layer.psi(&alg.basis()[0]),
            Err(Error::WrongLayer {
                expected: 1,
                found: 0
            })
        );
    }

    #[test]
    fn phi_cases() {
        let alg = brauer(4, 3);
        let layer = InflationLayer::new(&alg, 1).unwrap();
        let f = q();
        let arc = |u, v| PartialDiagram::new(4, vec![(u, v, 0)]);
        // Matching rows close a loop.
        let same = layer.phi(&arc(0, 1), &arc(0, 1));
        assert_eq!(
            same,
            layer
                .small()
                .algebra()
                .scale(&f.from_i64(3), layer.small().algebra().unit())
        );
        // Offset arcs reroute one strand without crossing it over the other.
        let shifted = layer.phi(&arc(0, 1), &arc(1, 2));
        assert_eq!(&shifted, layer.small().algebra().unit());
        let crossed = layer.phi(&arc(2, 3), &arc(0, 3));
        assert_eq!(layer.small().element(crossed[0].0).perm, vec![1, 0]);
        // Disjoint arcs send a strand back up.
        assert!(layer.phi(&arc(0, 1), &arc(2, 3)).is_empty());
    }

    #[test]
    fn decomposition_small_cases() {
        let f = q();
        let cyc = InputAlgebra::cyclic_group(&f, 2, vec![f.from_i64(2), f.from_i64(-1)]).unwrap();
        let cases = vec![
            brauer(2, 3),
            brauer(3, 1),
            brauer(4, -2),
            DiagramAlgebra::new(DiagramKind::ABrauer { n: 2 }, &cyc).unwrap(),
            DiagramAlgebra::new(DiagramKind::ABrauer { n: 3 }, &cyc).unwrap(),
            DiagramAlgebra::walled(&f, 1, 1, f.from_i64(2)),
            DiagramAlgebra::walled(&f, 2, 2, f.from_i64(2)),
            DiagramAlgebra::walled(&f, 3, 2, f.zero()),
        ];
        for alg in cases {
            let report = verify_decomposition(&alg, CheckBudget::default()).unwrap();
            assert!(report.passed(), "{}: {:?}", alg.kind(), report);
        }
        let cyc2 = DiagramAlgebra::new(DiagramKind::ABrauer { n: 2 }, &cyc).unwrap();
        let report = verify_decomposition(&cyc2, CheckBudget::default()).unwrap();
        let shape: Vec<(usize, usize)> = report
            .layers
            .iter()
            .map(|r| (r.rank_v, r.dim_small))
            .collect();
        assert_eq!(shape, vec![(1, 8), (2, 1)]);
    }
}
