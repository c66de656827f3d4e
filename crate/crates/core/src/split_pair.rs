//! Split quotients, corner rings and the induction/restriction pair attached
//! to a layer idempotent.
//!
//! For a layer `l` with idempotent `e`, the smaller diagram algebra `C`
//! embeds into `D` with image `eDe`, the wreath (or walled symmetric) algebra
//! `B` is the quotient of `C` by its first layer ideal, and the `B`-`D`
//! bimodule `S = B ⊗_C eD` drives induction `M ↦ M ⊗_B S`. Restriction sends
//! `N` to `N·e` with `B` acting through the section `B → C → eDe`.

use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::diagrams::{
    expand_edges, CornerFrame, DeltaMode, DiagramAlgebra, DiagramElement, DiagramKind,
    LabeledDiagram,
};
use crate::error::Result;
use crate::inflation::{layer_ideal, InflationLayer};
use crate::input_algebra::WreathAlgebra;
use crate::kernel::algebra::{check_pairs, homomorphism_witness, Element, FinAlgebra};
use crate::kernel::linalg::{
    nullspace, sparse_from_dense, unit_vector, Matrix, SparseVec, Subspace,
};
use crate::kernel::module::{tensor_bimodules, tensor_over, Bimodule, RightModule, TensorProduct};
use crate::scalars::{Field, FieldDescriptor, Scalar};

/// Full structure-constant comparison up to this dimension, sampling beyond.
pub const EXHAUSTIVE_CORNER_DIM: usize = 2000;
pub const CORNER_SAMPLES: usize = 2000;

/// `π: D ↠ B` killing every diagram with an arc and its section `ε: B → D`.
#[derive(Clone, Debug)]
pub struct SplitQuotient {
    pub small: WreathAlgebra,
    /// `dim D × dim B`.
    pub projection: Matrix,
    /// `dim B × dim D`.
    pub section: Matrix,
}

impl SplitQuotient {
    pub fn new(alg: &DiagramAlgebra) -> Result<Self> {
        let layer = InflationLayer::new(alg, 0)?;
        let small = layer.small().clone();
        let f = alg.field();
        let rows = alg
            .basis()
            .iter()
            .map(|d| {
                if d.arcs() > 0 {
                    return Vec::new();
                }
                let (_, _, strands) = layer.psi(d).expect("arc-free diagram");
                unit_vector(
                    f,
                    small
                        .index_of(&strands)
                        .expect("strand data indexes the small algebra"),
                )
            })
            .collect();
        let projection = Matrix::from_rows(small.dim(), rows);
        let empty = crate::inflation::PartialDiagram::new(alg.kind().columns(), Vec::new());
        let rows = (0..small.dim())
            .map(|i| {
                let d = layer.psi_inverse(&empty, &empty, small.element(i));
                unit_vector(
                    f,
                    alg.index_of(&d)
                        .expect("permutation diagram is a basis element"),
                )
            })
            .collect();
        let section = Matrix::from_rows(alg.dim(), rows);
        Ok(SplitQuotient {
            small,
            projection,
            section,
        })
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SplitQuotientReport {
    pub dim: usize,
    pub dim_small: usize,
    pub kernel_dim: usize,
    pub section_is_right_inverse: bool,
    pub kernel_is_first_layer: bool,
    /// `ker π` equals the ideal generated by one cup-cap.
    pub kernel_is_generated_by_cup_cap: bool,
    pub projection_multiplicative: bool,
    pub section_multiplicative: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl SplitQuotientReport {
    pub fn passed(&self) -> bool {
        self.section_is_right_inverse
            && self.kernel_is_first_layer
            && self.kernel_is_generated_by_cup_cap
            && self.projection_multiplicative
            && self.section_multiplicative
    }
}

fn first_cup_cap(alg: &DiagramAlgebra) -> Option<DiagramElement> {
    use crate::diagrams::Generator;
    match alg.kind() {
        DiagramKind::ABrauer { n } if n >= 2 => alg.generator(Generator::E(1)).ok(),
        DiagramKind::Walled { r, t } if r >= 1 && t >= 1 => {
            alg.generator(Generator::WalledE(r, r + 1)).ok()
        }
        _ => None,
    }
}

pub fn verify_split_quotient(
    alg: &DiagramAlgebra,
    cap: usize,
    seed: u64,
) -> Result<SplitQuotientReport> {
    let q = SplitQuotient::new(alg)?;
    let big = alg.fin_algebra(cap)?;
    let small = q.small.algebra();
    let f = alg.field();
    let mut witness = None;

    let composite = q.section.mul(f, &q.projection);
    let section_is_right_inverse = composite == Matrix::identity(f, small.dim());

    let kernel = Subspace::from_vectors(f, alg.dim(), q.projection.left_kernel(f));
    let j1 = layer_ideal(alg, 1.min(alg.kind().max_layer()))?;
    let j1 = if alg.kind().max_layer() == 0 {
        Subspace::zero(alg.dim())
    } else {
        j1
    };
    let kernel_is_first_layer = kernel.dim() == j1.dim() && kernel.contains_subspace(f, &j1);
    let generated = match first_cup_cap(alg) {
        Some(e) => big.ideal_span(&[alg.to_vector(&e)]),
        None => Subspace::zero(alg.dim()),
    };
    let kernel_is_generated_by_cup_cap =
        generated.dim() == kernel.dim() && kernel.contains_subspace(f, &generated);

    let pw = homomorphism_witness(&big, small, &q.projection, check_pairs(big.dim(), seed));
    if let Some((i, j)) = pw {
        witness = Some(format!(
            "projection not multiplicative on basis pair ({i}, {j})"
        ));
    }
    let sw = homomorphism_witness(small, &big, &q.section, check_pairs(small.dim(), seed));
    if let Some((i, j)) = sw {
        witness.get_or_insert(format!(
            "section not multiplicative on basis pair ({i}, {j})"
        ));
    }
    Ok(SplitQuotientReport {
        dim: alg.dim(),
        dim_small: small.dim(),
        kernel_dim: kernel.dim(),
        section_is_right_inverse,
        kernel_is_first_layer,
        kernel_is_generated_by_cup_cap,
        projection_multiplicative: pw.is_none(),
        section_multiplicative: sw.is_none(),
        witness,
    })
}

/// Everything needed to induce from and restrict to layer `l`.
#[derive(Clone, Debug)]
pub struct CornerSplitDatum {
    pub layer: usize,
    pub frame: CornerFrame,
    pub big: DiagramAlgebra,
    pub big_fin: FinAlgebra,
    /// `e_l` in the diagram basis of `D`.
    pub idempotent: Element,
    /// The smaller diagram algebra `C`.
    pub smaller: DiagramAlgebra,
    pub smaller_fin: FinAlgebra,
    /// `C → D`, rows are images of basis diagrams of `C`.
    pub embedding: Matrix,
    /// Split quotient `C ↠ B`.
    pub quotient: SplitQuotient,
    /// Echelon basis of `eD` inside `D`.
    pub right_ideal: Subspace,
    /// `eD` as a `C`-`D` bimodule.
    pub ed: Bimodule,
    /// `S = B ⊗_C eD` with its tensor bookkeeping, built on first use.
    s: OnceLock<(Bimodule, TensorProduct)>,
    /// Number of partial diagrams at this layer.
    pub rank_v: usize,
}

impl CornerSplitDatum {
    pub fn new(
        alg: &DiagramAlgebra,
        layer: usize,
        mode: Option<DeltaMode>,
        cap: usize,
    ) -> Result<Self> {
        let frame = match mode {
            None => CornerFrame::for_algebra(alg, layer)?,
            Some(m) => CornerFrame::new(alg.kind(), layer, m, &alg.delta(), alg.field())?,
        };
        let f = alg.field().clone();
        let big_fin = alg.fin_algebra(cap)?;
        let idempotent = alg.to_vector(&frame.idempotent(alg));
        let smaller = DiagramAlgebra::new(frame.small_kind(), alg.input())?;
        let smaller_fin = smaller.fin_algebra(cap)?;
        let rows = smaller
            .basis()
            .iter()
            .map(|d| alg.to_vector(&frame.embed(alg, d)))
            .collect();
        let embedding = Matrix::from_rows(alg.dim(), rows);
        let quotient = SplitQuotient::new(&smaller)?;
        let rank_v = InflationLayer::new(alg, layer)?.partials().len();

        let left = big_fin.left_mul_matrix(&idempotent);
        let right_ideal = Subspace::from_vectors(&f, alg.dim(), left.data);
        let k = right_ideal.dim();
        let coords = {
            let (f, sub) = (f.clone(), right_ideal.clone());
            move |v: &SparseVec| sparse_from_dense(&sub.coords(&f, v).expect("vector lies in eD"))
        };
        let ed = {
            let (bl, br, emb, sub) = (
                big_fin.clone(),
                big_fin.clone(),
                embedding.clone(),
                right_ideal.clone(),
            );
            let (cl, cr, sub2) = (coords.clone(), coords.clone(), right_ideal.clone());
            Bimodule::from_fns(
                &smaller_fin,
                &big_fin,
                k,
                move |c| {
                    Matrix::from_rows(
                        k,
                        sub.basis()
                            .iter()
                            .map(|v| cl(&bl.mul(&emb.data[c], v)))
                            .collect(),
                    )
                },
                move |d| {
                    Matrix::from_rows(
                        k,
                        sub2.basis()
                            .iter()
                            .map(|v| cr(&br.mul(v, &br.basis(d))))
                            .collect(),
                    )
                },
            )
        };
        Ok(CornerSplitDatum {
            layer,
            frame,
            big: alg.clone(),
            big_fin,
            idempotent,
            smaller,
            smaller_fin,
            embedding,
            quotient,
            right_ideal,
            ed,
            s: OnceLock::new(),
            rank_v,
        })
    }

    fn bimodule_parts(&self) -> &(Bimodule, TensorProduct) {
        self.s.get_or_init(|| {
            let b = self.small().clone();
            let proj = self.quotient.projection.clone();
            let bl = b.clone();
            let br = b.clone();
            let x = Bimodule::from_fns(
                &b,
                &self.smaller_fin,
                b.dim(),
                move |i| {
                    Matrix::from_rows(
                        bl.dim(),
                        (0..bl.dim()).map(|j| bl.mul_basis(i, j).clone()).collect(),
                    )
                },
                move |c| {
                    Matrix::from_rows(
                        br.dim(),
                        (0..br.dim())
                            .map(|j| br.mul(&br.basis(j), &proj.data[c]))
                            .collect(),
                    )
                },
            );
            tensor_bimodules(&x, &self.ed, &b, &self.smaller_fin, &self.big_fin)
        })
    }

    /// `S = B ⊗_C eD` as a `B`-`D` bimodule.
    pub fn s(&self) -> &Bimodule {
        &self.bimodule_parts().0
    }

    pub fn s_tensor(&self) -> &TensorProduct {
        &self.bimodule_parts().1
    }

    pub fn field(&self) -> &Field {
        self.big.field()
    }

    pub fn small(&self) -> &FinAlgebra {
        self.quotient.small.algebra()
    }

    /// `B → C → D`, the composite used to let `B` act on `N·e`.
    pub fn small_into_big(&self) -> Matrix {
        self.quotient.section.mul(self.field(), &self.embedding)
    }

    fn ed_coords(&self, v: &SparseVec) -> Option<SparseVec> {
        self.right_ideal
            .coords(self.field(), v)
            .map(|c| sparse_from_dense(&c))
    }

    /// Class of `1_B ⊗ e` in `S`.
    pub fn unit_generator(&self) -> SparseVec {
        let e = self.ed_coords(&self.idempotent).expect("e lies in eD");
        self.s_tensor().pure(self.small().unit(), &e)
    }

    /// `M ⊗_B S` as a right `D`-module.
    pub fn induce(&self, m: &RightModule) -> Result<(RightModule, TensorProduct)> {
        tensor_over(m, self.s(), self.small(), &self.big_fin)
    }

    /// `M ⊗_C eD`, with `C` acting on `M` through `C ↠ B`.
    pub fn induce_direct(&self, m: &RightModule) -> Result<(RightModule, TensorProduct)> {
        m.ensure_over(self.small())?;
        let over_c = m.restrict_along(&self.smaller_fin, &self.quotient.projection);
        tensor_over(&over_c, &self.ed, &self.smaller_fin, &self.big_fin)
    }

    /// `N·e` as a right `B`-module, with its echelon basis in `N`.
    pub fn restrict(&self, n: &RightModule) -> Result<(RightModule, Subspace)> {
        n.ensure_over(&self.big_fin)?;
        let f = self.field().clone();
        let act_e = n.action_of(&self.idempotent);
        let sub = Subspace::from_vectors(&f, n.dim(), act_e.data);
        let through = self.small_into_big();
        let (parent, sub2) = (n.clone(), sub.clone());
        let module = RightModule::from_fn(self.small(), sub.dim(), move |b| {
            let act = parent.action_of(&through.data[b]);
            let rows = sub2
                .basis()
                .iter()
                .map(|v| {
                    sparse_from_dense(
                        &sub2
                            .coords(&f, &act.apply(&f, v))
                            .expect("N·e is stable under eDe"),
                    )
                })
                .collect();
            Matrix::from_rows(sub2.dim(), rows)
        });
        Ok((module, sub))
    }

    /// A module map `N → N'` restricted to `N·e → N'·e`.
    pub fn restrict_map(&self, src: &Subspace, tgt: &Subspace, map: &Matrix) -> Matrix {
        let f = self.field();
        let rows = src
            .basis()
            .iter()
            .map(|v| {
                sparse_from_dense(
                    &tgt.coords(f, &map.apply(f, v))
                        .expect("map respects the idempotent"),
                )
            })
            .collect();
        Matrix::from_rows(tgt.dim(), rows)
    }

    /// The unit `M → Res(Ind M)`, `m ↦ m ⊗ (1 ⊗ e)`.
    pub fn unit_map(
        &self,
        m: &RightModule,
        induced: &TensorProduct,
        res_basis: &Subspace,
    ) -> Matrix {
        let f = self.field();
        let t = self.unit_generator();
        let rows = (0..m.dim())
            .map(|i| {
                let v = induced.pure(&unit_vector(f, i), &t);
                sparse_from_dense(
                    &res_basis
                        .coords(f, &v)
                        .expect("m ⊗ (1 ⊗ e) lies in the restriction"),
                )
            })
            .collect();
        Matrix::from_rows(res_basis.dim(), rows)
    }

    /// `M ⊗_B (B ⊗_C eD) → M ⊗_C eD`, `m ⊗ (b ⊗ y) ↦ m·b ⊗ y`.
    pub fn associator(
        &self,
        m: &RightModule,
        induced: &TensorProduct,
        direct: &TensorProduct,
    ) -> Matrix {
        let f = self.field();
        let rows = (0..induced.dim())
            .map(|k| {
                let (x, s) = induced.column(k);
                let (b, y) = self.s_tensor().column(s);
                let mb = m.action(b).data[x].clone();
                direct.pure(&mb, &unit_vector(f, y))
            })
            .collect();
        Matrix::from_rows(direct.dim(), rows)
    }

    /// `e · D_f` where `D_f` has the frame's top row, bottom row `f` and
    /// order-preserving unit strands.
    pub fn left_basis_element(&self, bottom: &crate::inflation::PartialDiagram) -> SparseVec {
        let alg = &self.big;
        let n = alg.kind().columns();
        let a = alg.input();
        let unit = a.unit().clone();
        let mut edges: Vec<(usize, usize, SparseVec)> = self
            .frame
            .top_arcs
            .iter()
            .map(|&(u, v)| (u, v, unit.clone()))
            .collect();
        edges.extend(
            bottom
                .arcs()
                .iter()
                .map(|&(u, v, l)| (n + u, n + v, unit_vector(a.field(), l))),
        );
        for (&u, v) in self.frame.free_top.iter().zip(bottom.free()) {
            edges.push((u, n + v, unit.clone()));
        }
        edges.sort_by_key(|e| e.0);
        let d = expand_edges(a.field(), n, &edges, &a.field().one());
        let e = alg.from_vector(&self.idempotent);
        let ed = alg.to_vector(&alg.mul(&e, &d));
        let y = self.ed_coords(&ed).expect("e·D_f lies in eD");
        self.s_tensor().pure(self.small().unit(), &y)
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CornerReport {
    pub l: usize,
    pub dim_smaller: usize,
    pub dim_corner: usize,
    pub idempotent: bool,
    pub unital: bool,
    pub multiplicative: bool,
    pub pairs_checked: usize,
    pub exhaustive: bool,
    pub injective: bool,
    pub onto_corner: bool,
    /// Agreement of the embedding with `d ↦ e·d·e` (invertible δ only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conjugation_route: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CornerReport {
    pub fn passed(&self) -> bool {
        self.idempotent
            && self.unital
            && self.multiplicative
            && self.injective
            && self.onto_corner
            && self.conjugation_route.unwrap_or(true)
    }
}

/// `d` on the free columns plus unit vertical strands on the frame's arc columns.
fn pad_with_strands(
    frame: &CornerFrame,
    alg: &DiagramAlgebra,
    d: &LabeledDiagram,
) -> DiagramElement {
    let n = alg.kind().columns();
    let m = d.columns();
    let a = alg.input();
    let lift = |v: usize| {
        if v < m {
            frame.free_top[v]
        } else {
            n + frame.free_bottom[v - m]
        }
    };
    let mut edges: Vec<(usize, usize, SparseVec)> = d
        .edges()
        .into_iter()
        .map(|(u, v, l)| (lift(u), lift(v), unit_vector(a.field(), l)))
        .collect();
    for &(u, v) in &frame.top_arcs {
        edges.push((u, n + u, a.unit().clone()));
        edges.push((v, n + v, a.unit().clone()));
    }
    edges.sort_by_key(|e| e.0);
    expand_edges(a.field(), n, &edges, &a.field().one())
}

pub fn verify_corner(datum: &CornerSplitDatum, seed: u64) -> CornerReport {
    let alg = &datum.big;
    let f = alg.field();
    let c = &datum.smaller;
    let e = alg.from_vector(&datum.idempotent);
    let mut witness = None;
    let idempotent = alg.mul(&e, &e) == e;
    let image = |d: &LabeledDiagram| {
        alg.from_vector(&datum.embedding.data[c.index_of(d).expect("basis diagram")])
    };
    let unital = datum.embedding.apply(f, &c.to_vector(&c.one())) == datum.idempotent;

    let dim = c.dim();
    let exhaustive = dim <= EXHAUSTIVE_CORNER_DIM;
    let pairs: Vec<(usize, usize)> = if exhaustive {
        (0..dim)
            .flat_map(|i| (0..dim).map(move |j| (i, j)))
            .collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..CORNER_SAMPLES)
            .map(|_| (rng.gen_range(0..dim), rng.gen_range(0..dim)))
            .collect()
    };
    let images: Vec<DiagramElement> = c.basis().iter().map(image).collect();
    let bad = pairs.iter().find(|&&(i, j)| {
        let mut lhs = DiagramElement::new();
        for (d, coef) in c.multiply(&c.basis()[i], &c.basis()[j]).terms() {
            lhs.add_scaled(f, coef, &images[c.index_of(d).expect("basis diagram")]);
        }
        lhs != alg.mul(&images[i], &images[j])
    });
    if let Some((i, j)) = bad {
        witness = Some(format!(
            "embedding not multiplicative on smaller basis pair ({i}, {j})"
        ));
    }
    let injective = datum.embedding.rank(f) == dim;
    let corner = match datum.big_fin.corner(&datum.idempotent) {
        Ok((_, emb)) => Subspace::from_vectors(f, alg.dim(), emb.data),
        Err(_) => Subspace::zero(alg.dim()),
    };
    let image_space = Subspace::from_vectors(f, alg.dim(), datum.embedding.data.iter().cloned());
    let onto_corner =
        corner.dim() == image_space.dim() && corner.contains_subspace(f, &image_space);

    let conjugation_route = (datum.frame.mode == DeltaMode::Invertible).then(|| {
        c.basis().iter().all(|d| {
            let padded = pad_with_strands(&datum.frame, alg, d);
            alg.mul(&alg.mul(&e, &padded), &e) == image(d)
        })
    });
    if conjugation_route == Some(false) {
        witness.get_or_insert_with(|| "embedding differs from d ↦ e·d·e".into());
    }
    CornerReport {
        l: datum.layer,
        dim_smaller: dim,
        dim_corner: corner.dim(),
        idempotent,
        unital,
        multiplicative: bad.is_none(),
        pairs_checked: pairs.len(),
        exhaustive,
        injective,
        onto_corner,
        conjugation_route,
        witness,
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BimoduleReport {
    pub dim_s: usize,
    pub dim_small: usize,
    pub rank_v: usize,
    /// `B`-span of the explicit generators `1 ⊗ e·D_f` has full rank `rank_v · dim B`.
    pub left_free: bool,
    pub actions_commute: bool,
    /// `b ↦ b ⊗ e` is a right `B`-module isomorphism `B ≅ S·e`.
    pub se_isomorphic_to_small: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl BimoduleReport {
    pub fn passed(&self) -> bool {
        self.left_free && self.actions_commute && self.se_isomorphic_to_small
    }
}

pub fn verify_bimodule(datum: &CornerSplitDatum) -> Result<BimoduleReport> {
    let f = datum.field();
    let b = datum.small();
    let layer = InflationLayer::new(&datum.big, datum.layer)?;
    let mut witness = None;
    let generators: Vec<SparseVec> = layer
        .partials()
        .iter()
        .map(|p| datum.left_basis_element(p))
        .collect();
    let spanned: Vec<SparseVec> = generators
        .iter()
        .flat_map(|t| (0..b.dim()).map(move |i| datum.s().left_action(i).apply(f, t)))
        .collect();
    let expected = datum.rank_v * b.dim();
    let rank = Subspace::from_vectors(f, datum.s().dim(), spanned).dim();
    let left_free = rank == expected && datum.s().dim() == expected;
    if !left_free {
        witness = Some(format!(
            "left span rank {rank}, expected {expected}, dim S = {}",
            datum.s().dim()
        ));
    }
    let actions_commute = datum.s().commutation_witness(b, &datum.big_fin).is_none();

    let s_right = datum.s().right_module(&datum.big_fin);
    let (se, basis) = datum.restrict(&s_right)?;
    let e_coords = datum.ed_coords(&datum.idempotent).expect("e lies in eD");
    let rows = (0..b.dim())
        .map(|i| {
            let v = datum.s_tensor().pure(&unit_vector(f, i), &e_coords);
            sparse_from_dense(&basis.coords(f, &v).expect("b ⊗ e lies in S·e"))
        })
        .collect();
    let map = Matrix::from_rows(se.dim(), rows);
    let regular = RightModule::regular(b);
    let se_iso = se.dim() == b.dim()
        && map.rank(f) == b.dim()
        && RightModule::is_module_map(b, &regular, &se, &map);
    if !se_iso {
        witness.get_or_insert_with(|| {
            format!(
                "S·e has dim {} and the map b ↦ b ⊗ e is not an isomorphism",
                se.dim()
            )
        });
    }
    Ok(BimoduleReport {
        dim_s: datum.s().dim(),
        dim_small: b.dim(),
        rank_v: datum.rank_v,
        left_free,
        actions_commute,
        se_isomorphic_to_small: se_iso,
        witness,
    })
}

/// `x` generates a direct summand `xR` of `R` exactly when `x ∈ x R x`.
pub fn generates_summand(alg: &FinAlgebra, x: &Element) -> bool {
    let f = alg.field();
    let products = (0..alg.dim()).map(|i| alg.mul(&alg.mul(x, &alg.basis(i)), x));
    Subspace::from_vectors(f, alg.dim(), products).contains(f, x)
}

/// A short exact sequence `0 → sub → middle → quotient → 0`.
#[derive(Clone, Debug)]
pub struct ShortExact {
    pub name: String,
    pub sub: RightModule,
    pub middle: RightModule,
    pub quotient: RightModule,
    pub inclusion: Matrix,
    pub projection: Matrix,
    pub split: bool,
}

/// `0 → xR → R → R/xR → 0`.
pub fn ideal_sequence(alg: &FinAlgebra, x: &Element, name: &str) -> Result<ShortExact> {
    let reg = RightModule::regular(alg);
    let sub = reg.generated_submodule(alg, std::slice::from_ref(x));
    let (s, inclusion) = reg.submodule(alg, &sub)?;
    let (q, projection) = reg.quotient(alg, &sub)?;
    Ok(ShortExact {
        name: name.into(),
        sub: s,
        middle: reg,
        quotient: q,
        inclusion,
        projection,
        split: generates_summand(alg, x),
    })
}

/// `0 → M → M ⊕ N → N → 0`.
pub fn split_sequence(
    alg: &FinAlgebra,
    m: &RightModule,
    n: &RightModule,
    name: &str,
) -> ShortExact {
    let f = alg.field();
    let (a, b) = (m.dim(), n.dim());
    let middle = RightModule::direct_sum(alg, &[m.clone(), n.clone()]);
    let inclusion = Matrix::from_rows(a + b, (0..a).map(|i| unit_vector(f, i)).collect());
    let projection = Matrix::from_rows(
        b,
        (0..a + b)
            .map(|i| {
                if i < a {
                    Vec::new()
                } else {
                    unit_vector(f, i - a)
                }
            })
            .collect(),
    );
    ShortExact {
        name: name.into(),
        sub: m.clone(),
        middle,
        quotient: n.clone(),
        inclusion,
        projection,
        split: true,
    }
}

/// Above this dimension the trace form is not computed.
pub const TRACE_FORM_DIM: usize = 800;

/// Kernel of the regular trace form `(x, y) ↦ Tr(ρ(xy))`. It contains the
/// radical, and equals it in characteristic zero.
pub fn trace_form_kernel(alg: &FinAlgebra) -> Vec<Element> {
    let f = alg.field();
    let d = alg.dim();
    let traces: Vec<Scalar> = (0..d)
        .map(|k| {
            let mut acc = f.zero();
            for i in 0..d {
                if let Some((_, c)) = alg.mul_basis(i, k).iter().find(|(j, _)| *j == i) {
                    f.add_assign(&mut acc, c);
                }
            }
            acc
        })
        .collect();
    let rows = (0..d).map(|i| {
        let dense: Vec<Scalar> = (0..d)
            .map(|j| {
                let mut acc = f.zero();
                for (k, c) in alg.mul_basis(i, j) {
                    f.add_assign(&mut acc, &f.mul(c, &traces[*k]));
                }
                acc
            })
            .collect();
        sparse_from_dense(&dense)
    });
    nullspace(f, d, rows)
}

fn candidate_elements(alg: &FinAlgebra, limit: usize) -> Vec<Element> {
    let f = alg.field();
    let mut out: Vec<Element> = Vec::new();
    if alg.dim() <= TRACE_FORM_DIM {
        out.extend(trace_form_kernel(alg).into_iter().take(limit));
    }
    for g in alg.generators() {
        out.push(g.clone());
        out.push(alg.add(alg.unit(), g));
        out.push(alg.sub(alg.unit(), g));
    }
    out.extend((0..alg.dim().min(limit)).map(|i| unit_vector(f, i)));
    out.retain(|x| !x.is_empty());
    out
}

/// A right ideal `xR` that is not a direct summand, looked up among simple candidates.
pub fn find_non_split_ideal(alg: &FinAlgebra, limit: usize) -> Option<Element> {
    let reg = RightModule::regular(alg);
    candidate_elements(alg, limit).into_iter().find(|x| {
        let d = reg.generated_submodule(alg, std::slice::from_ref(x)).dim();
        d > 0 && d < alg.dim() && !generates_summand(alg, x)
    })
}

/// The regular module, a few cyclic right ideals and their quotients, and a direct sum.
pub fn sample_modules(alg: &FinAlgebra) -> Result<Vec<(String, RightModule)>> {
    let reg = RightModule::regular(alg);
    let mut out = vec![("regular".to_string(), reg.clone())];
    let mut seen_dims = Vec::new();
    for (k, x) in candidate_elements(alg, 16).into_iter().enumerate() {
        if out.len() >= 5 {
            break;
        }
        let sub = reg.generated_submodule(alg, std::slice::from_ref(&x));
        let d = sub.dim();
        if d == 0 || d == alg.dim() || seen_dims.contains(&d) {
            continue;
        }
        seen_dims.push(d);
        out.push((format!("ideal{k}"), reg.submodule(alg, &sub)?.0));
        out.push((format!("quotient{k}"), reg.quotient(alg, &sub)?.0));
    }
    let mut copies = 2;
    while copies == 2 || out.len() < 4 {
        out.push((
            format!("regular^{copies}"),
            RightModule::direct_sum(alg, &vec![reg.clone(); copies]),
        ));
        copies += 1;
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SampleReport {
    pub name: String,
    pub dim: usize,
    pub induced_dim: usize,
    pub expected_induced_dim: usize,
    /// `m ↦ m ⊗ (1 ⊗ e)` is an isomorphism `M ≅ Res(Ind M)`.
    pub unit_is_isomorphism: bool,
    /// `M ⊗_B S ≅ M ⊗_C eD` via the associator.
    pub direct_form_agrees: bool,
}

impl SampleReport {
    pub fn passed(&self) -> bool {
        self.induced_dim == self.expected_induced_dim
            && self.unit_is_isomorphism
            && self.direct_form_agrees
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SequenceReport {
    pub name: String,
    /// `"small"` when the sequence is over `B` and induced, `"big"` when over `D` and restricted.
    pub side: String,
    pub split: bool,
    pub dims: [usize; 3],
    pub exact_before: bool,
    pub exact_after: bool,
    pub dims_after: [usize; 3],
    /// Unit maps commute with the sequence maps (induction side only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub natural: Option<bool>,
}

impl SequenceReport {
    pub fn passed(&self) -> bool {
        self.exact_before && self.exact_after && self.natural.unwrap_or(true)
    }
}

fn is_exact(field: &Field, inclusion: &Matrix, projection: &Matrix) -> bool {
    inclusion.cols == projection.rows
        && inclusion.rank(field) == inclusion.rows
        && projection.rank(field) == projection.cols
        && inclusion.mul(field, projection).is_zero()
        && inclusion.rows + projection.cols == inclusion.cols
}

pub fn check_induction(
    datum: &CornerSplitDatum,
    name: &str,
    m: &RightModule,
) -> Result<SampleReport> {
    let f = datum.field();
    let (ind, t) = datum.induce(m)?;
    let (res, basis) = datum.restrict(&ind)?;
    let eta = datum.unit_map(m, &t, &basis);
    let unit_is_isomorphism = res.dim() == m.dim()
        && eta.rank(f) == m.dim()
        && RightModule::is_module_map(datum.small(), m, &res, &eta);
    let (direct, td) = datum.induce_direct(m)?;
    let assoc = datum.associator(m, &t, &td);
    let direct_form_agrees = direct.dim() == ind.dim()
        && assoc.rank(f) == ind.dim()
        && RightModule::is_module_map(&datum.big_fin, &ind, &direct, &assoc);
    Ok(SampleReport {
        name: name.into(),
        dim: m.dim(),
        induced_dim: ind.dim(),
        expected_induced_dim: datum.rank_v * m.dim(),
        unit_is_isomorphism,
        direct_form_agrees,
    })
}

/// Induces a sequence over `B` and checks exactness and naturality of the unit.
pub fn check_induced_sequence(
    datum: &CornerSplitDatum,
    seq: &ShortExact,
) -> Result<SequenceReport> {
    let f = datum.field();
    let exact_before = is_exact(f, &seq.inclusion, &seq.projection);
    let (a, ta) = datum.induce(&seq.sub)?;
    let (b, tb) = datum.induce(&seq.middle)?;
    let (c, tc) = datum.induce(&seq.quotient)?;
    let ind_inc = ta.map_left(&tb, &seq.inclusion);
    let ind_proj = tb.map_left(&tc, &seq.projection);
    let maps_ok = RightModule::is_module_map(&datum.big_fin, &a, &b, &ind_inc)
        && RightModule::is_module_map(&datum.big_fin, &b, &c, &ind_proj);
    let exact_after = maps_ok && is_exact(f, &ind_inc, &ind_proj);

    let (_, ra) = datum.restrict(&a)?;
    let (_, rb) = datum.restrict(&b)?;
    let (_, rc) = datum.restrict(&c)?;
    let eta_a = datum.unit_map(&seq.sub, &ta, &ra);
    let eta_b = datum.unit_map(&seq.middle, &tb, &rb);
    let eta_c = datum.unit_map(&seq.quotient, &tc, &rc);
    let res_inc = datum.restrict_map(&ra, &rb, &ind_inc);
    let res_proj = datum.restrict_map(&rb, &rc, &ind_proj);
    let natural = eta_a.mul(f, &res_inc) == seq.inclusion.mul(f, &eta_b)
        && eta_b.mul(f, &res_proj) == seq.projection.mul(f, &eta_c);
    Ok(SequenceReport {
        name: seq.name.clone(),
        side: "small".into(),
        split: seq.split,
        dims: [seq.sub.dim(), seq.middle.dim(), seq.quotient.dim()],
        exact_before,
        exact_after,
        dims_after: [a.dim(), b.dim(), c.dim()],
        natural: Some(natural),
    })
}

/// Restricts a sequence over `D` and checks exactness.
pub fn check_restricted_sequence(
    datum: &CornerSplitDatum,
    seq: &ShortExact,
) -> Result<SequenceReport> {
    let f = datum.field();
    let exact_before = is_exact(f, &seq.inclusion, &seq.projection);
    let (a, ra) = datum.restrict(&seq.sub)?;
    let (b, rb) = datum.restrict(&seq.middle)?;
    let (c, rc) = datum.restrict(&seq.quotient)?;
    let inc = datum.restrict_map(&ra, &rb, &seq.inclusion);
    let proj = datum.restrict_map(&rb, &rc, &seq.projection);
    let maps_ok = RightModule::is_module_map(datum.small(), &a, &b, &inc)
        && RightModule::is_module_map(datum.small(), &b, &c, &proj);
    Ok(SequenceReport {
        name: seq.name.clone(),
        side: "big".into(),
        split: seq.split,
        dims: [seq.sub.dim(), seq.middle.dim(), seq.quotient.dim()],
        exact_before,
        exact_after: maps_ok && is_exact(f, &inc, &proj),
        dims_after: [a.dim(), b.dim(), c.dim()],
        natural: None,
    })
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SplitPairReport {
    pub kind: DiagramKind,
    pub field: FieldDescriptor,
    pub input_algebra: String,
    pub delta: String,
    pub l: usize,
    pub mode: DeltaMode,
    pub dim: usize,
    pub split_quotient: SplitQuotientReport,
    pub corner: CornerReport,
    pub bimodule: BimoduleReport,
    pub samples: Vec<SampleReport>,
    pub sequences: Vec<SequenceReport>,
    /// Whether some tested sequence was non-split.
    pub non_split_found: bool,
}

impl SplitPairReport {
    pub fn passed(&self) -> bool {
        self.split_quotient.passed()
            && self.corner.passed()
            && self.bimodule.passed()
            && self.samples.iter().all(SampleReport::passed)
            && self.sequences.iter().all(SequenceReport::passed)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SplitPairOptions {
    pub mode: Option<DeltaMode>,
    pub cap: usize,
    pub seed: u64,
    /// Also restrict sequences over the big algebra.
    pub big_sequences: bool,
}

impl Default for SplitPairOptions {
    fn default() -> Self {
        SplitPairOptions {
            mode: None,
            cap: crate::diagrams::DEFAULT_CAP,
            seed: 0,
            big_sequences: true,
        }
    }
}

pub fn verify_split_pair(
    alg: &DiagramAlgebra,
    l: usize,
    opts: SplitPairOptions,
) -> Result<SplitPairReport> {
    let datum = CornerSplitDatum::new(alg, l, opts.mode, opts.cap)?;
    let split_quotient = verify_split_quotient(&datum.smaller, opts.cap, opts.seed)?;
    let corner = verify_corner(&datum, opts.seed);
    let bimodule = verify_bimodule(&datum)?;
    let b = datum.small().clone();
    let samples = sample_modules(&b)?
        .iter()
        .map(|(name, m)| check_induction(&datum, name, m))
        .collect::<Result<Vec<_>>>()?;

    let mut sequences = Vec::new();
    let reg_b = RightModule::regular(&b);
    if let Some(x) = find_non_split_ideal(&b, 64) {
        sequences.push(check_induced_sequence(
            &datum,
            &ideal_sequence(&b, &x, "small non-split ideal")?,
        )?);
    }
    sequences.push(check_induced_sequence(
        &datum,
        &split_sequence(&b, &reg_b, &reg_b, "small split sum"),
    )?);
    if opts.big_sequences {
        let d = &datum.big_fin;
        if let Some(x) = find_non_split_ideal(d, 64) {
            sequences.push(check_restricted_sequence(
                &datum,
                &ideal_sequence(d, &x, "big non-split ideal")?,
            )?);
        }
        let reg_d = RightModule::regular(d);
        let e = first_cup_cap(alg)
            .map(|g| alg.to_vector(&g))
            .unwrap_or_else(|| d.unit().clone());
        let ideal = reg_d.generated_submodule(d, &[e]);
        let part = reg_d.submodule(d, &ideal)?.0;
        sequences.push(check_restricted_sequence(
            &datum,
            &split_sequence(d, &part, &reg_d, "big split sum"),
        )?);
    }
    let non_split_found = sequences.iter().any(|s| !s.split);
    let f = alg.field();
    Ok(SplitPairReport {
        kind: alg.kind(),
        field: f.descriptor().clone(),
        input_algebra: alg.input().name().to_string(),
        delta: f.format(&alg.delta()),
        l,
        mode: datum.frame.mode,
        dim: alg.dim(),
        split_quotient,
        corner,
        bimodule,
        samples,
        sequences,
        non_split_found,
    })
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TransferReport {
    pub hom_big: usize,
    pub hom_small: usize,
    pub ext_big: usize,
    pub ext_small: usize,
}

impl TransferReport {
    pub fn agrees(&self) -> bool {
        self.hom_big == self.hom_small && self.ext_big == self.ext_small
    }
}

/// `dim Hom` and `dim Ext¹` computed on both sides of the induction.
pub fn hom_ext_transfer(
    datum: &CornerSplitDatum,
    m: &RightModule,
    n: &RightModule,
) -> Result<TransferReport> {
    use crate::kernel::homological::ext1_dim;
    use crate::kernel::module::hom_dim;
    let b = datum.small();
    let (im, _) = datum.induce(m)?;
    let (inn, _) = datum.induce(n)?;
    Ok(TransferReport {
        hom_big: hom_dim(&datum.big_fin, &im, &inn),
        hom_small: hom_dim(b, m, n),
        ext_big: ext1_dim(&datum.big_fin, &im, &inn)?,
        ext_small: ext1_dim(b, m, n)?,
    })
}

/// Validates that `mode` is usable for `alg` before doing any work.
pub fn check_mode(alg: &DiagramAlgebra, l: usize, mode: Option<DeltaMode>) -> Result<CornerFrame> {
    match mode {
        None => CornerFrame::for_algebra(alg, l),
        Some(m) => CornerFrame::new(alg.kind(), l, m, &alg.delta(), alg.field()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::input_algebra::InputAlgebra;

    fn q() -> Field {
        Field::rationals()
    }

    fn brauer(f: &Field, n: usize, delta: i64) -> DiagramAlgebra {
        DiagramAlgebra::new(
            DiagramKind::ABrauer { n },
            &InputAlgebra::trivial(f, f.from_i64(delta)),
        )
        .unwrap()
    }

    fn dual_numbers(f: &Field) -> InputAlgebra {
        InputAlgebra::dual_numbers(f, f.from_i64(3), f.one())
    }

    #[test]
    fn datum_dimensions() {
        let f = q();
        let d = CornerSplitDatum::new(&brauer(&f, 2, 2), 1, None, 2000).unwrap();
        assert_eq!((d.smaller.dim(), d.s().dim(), d.rank_v), (1, 1, 1));
        let d = CornerSplitDatum::new(&brauer(&f, 4, 2), 1, None, 2000).unwrap();
        assert_eq!((d.rank_v, d.small().dim(), d.s().dim()), (6, 2, 12));
        let d = CornerSplitDatum::new(
            &DiagramAlgebra::walled(&f, 2, 2, f.from_i64(2)),
            1,
            None,
            2000,
        )
        .unwrap();
        assert_eq!((d.smaller.dim(), d.rank_v, d.s().dim()), (2, 4, 4));
    }

    #[test]
    fn split_quotients() {
        let f = q();
        for alg in [
            brauer(&f, 2, 1),
            brauer(&f, 3, 0),
            DiagramAlgebra::walled(&f, 2, 1, f.from_i64(3)),
        ] {
            let r = verify_split_quotient(&alg, 2000, 0).unwrap();
            assert!(r.passed(), "{}: {r:?}", alg.kind());
        }
        let r = verify_split_quotient(&brauer(&f, 3, 2), 2000, 0).unwrap();
        assert_eq!((r.dim, r.dim_small, r.kernel_dim), (15, 6, 9));
    }

    #[test]
    fn split_pairs_pass() {
        let f5 = Field::prime(5).unwrap();
        let cases = vec![
            (brauer(&q(), 3, 2), 1),
            (brauer(&q(), 4, -1), 1),
            (DiagramAlgebra::walled(&q(), 2, 2, q().from_i64(2)), 1),
            (DiagramAlgebra::walled(&f5, 2, 1, f5.zero()), 1),
            (brauer(&f5, 3, 0), 1),
            (
                DiagramAlgebra::new(DiagramKind::ABrauer { n: 2 }, &dual_numbers(&f5)).unwrap(),
                0,
            ),
            (
                DiagramAlgebra::new(DiagramKind::ABrauer { n: 2 }, &dual_numbers(&f5)).unwrap(),
                1,
            ),
        ];
        for (alg, l) in cases {
            let r = verify_split_pair(&alg, l, SplitPairOptions::default()).unwrap();
            assert!(
                r.passed(),
                "{} l={l}: {}",
                alg.kind(),
                serde_json::to_string_pretty(&r).unwrap()
            );
            assert!(r.samples.len() >= 4);
        }
    }

    #[test]
    fn dual_numbers_give_non_split_sequences() {
        let f5 = Field::prime(5).unwrap();
        let alg = DiagramAlgebra::new(DiagramKind::ABrauer { n: 2 }, &dual_numbers(&f5)).unwrap();
        let r = verify_split_pair(&alg, 1, SplitPairOptions::default()).unwrap();
        assert!(r.non_split_found);
    }

    #[test]
    fn transfer_over_walled() {
        let f = q();
        let alg = DiagramAlgebra::walled(&f, 2, 2, f.from_i64(2));
        let d = CornerSplitDatum::new(&alg, 1, None, 2000).unwrap();
        let reg = RightModule::regular(d.small());
        let r = hom_ext_transfer(&d, &reg, &reg).unwrap();
        assert!(r.agrees(), "{r:?}");
        assert_eq!(r.hom_small, 1);
    }
}
