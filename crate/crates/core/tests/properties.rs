use diagsplit::diagrams::{DiagramAlgebra, DiagramElement, DiagramKind};
use diagsplit::inflation::InflationLayer;
use diagsplit::input_algebra::{InputAlgebra, WreathAlgebra};
use diagsplit::kernel::homological::ext1_dim;
use diagsplit::kernel::module::RightModule;
use diagsplit::scalars::{Field, Scalar};
use diagsplit::specht::{dominance, Comparison, Partition};
use proptest::prelude::*;
use std::sync::OnceLock;

fn fields() -> &'static [Field] {
    static FIELDS: OnceLock<Vec<Field>> = OnceLock::new();
    FIELDS.get_or_init(|| {
        vec![
            Field::rationals(),
            Field::prime(7).unwrap(),
            Field::cyclotomic(5).unwrap(),
        ]
    })
}

/// `c0 + c1 ζ + c2 ζ^2 + ...` over the cyclotomic field, `c0 / d` with `1 <= d <= 6` elsewhere.
fn scalar(f: &Field, coeffs: &[i64]) -> Scalar {
    match f.zeta() {
        Some(z) => coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, &c| f.add(&f.mul(&acc, &z), &f.from_i64(c))),
        None => f
            .div(
                &f.from_i64(coeffs[0]),
                &f.from_i64(1 + coeffs[1].rem_euclid(6)),
            )
            .unwrap(),
    }
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-20i64..20, 4)
}

struct Algebras {
    dual4: DiagramAlgebra,
    cyclic3: DiagramAlgebra,
    walled: DiagramAlgebra,
    wreath: WreathAlgebra,
}

fn algebras() -> &'static Algebras {
    static ALGS: OnceLock<Algebras> = OnceLock::new();
    ALGS.get_or_init(|| {
        let q = Field::rationals();
        let dual = InputAlgebra::dual_numbers(&q, q.from_i64(3), q.from_i64(-1));
        let cyc =
            InputAlgebra::cyclic_group(&q, 3, vec![q.from_i64(2), q.from_i64(-1), q.from_i64(-1)])
                .unwrap();
        Algebras {
            dual4: DiagramAlgebra::new(DiagramKind::ABrauer { n: 4 }, &dual).unwrap(),
            cyclic3: DiagramAlgebra::new(DiagramKind::ABrauer { n: 3 }, &cyc).unwrap(),
            walled: DiagramAlgebra::walled(&q, 3, 2, q.from_i64(2)),
            wreath: WreathAlgebra::new(&dual, 3),
        }
    })
}

fn basis_element(alg: &DiagramAlgebra, i: usize) -> DiagramElement {
    let d = alg.basis()[i % alg.dim()].clone();
    DiagramElement::single(d, alg.field().one())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn field_axioms(k in 0usize..3, a in coeffs(), b in coeffs(), c in coeffs()) {
        let f = &fields()[k];
        let (a, b, c) = (scalar(f, &a), scalar(f, &b), scalar(f, &c));
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        prop_assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        prop_assert!(f.add(&a, &f.neg(&a)).is_zero());
        if !a.is_zero() {
            prop_assert!(f.is_one(&f.mul(&a, &f.inv(&a).unwrap())));
        }
    }

    #[test]
    fn normalize_is_idempotent(k in 0usize..3, a in coeffs()) {
        let f = &fields()[k];
        let once = f.normalize(scalar(f, &a));
        prop_assert_eq!(f.normalize(once.clone()), once);
    }

    #[test]
    fn diagram_products_associate(which in 0usize..3, i: usize, j: usize, k: usize) {
        let algs = algebras();
        let alg = [&algs.dual4, &algs.cyclic3, &algs.walled][which];
        let (x, y, z) = (basis_element(alg, i), basis_element(alg, j), basis_element(alg, k));
        prop_assert_eq!(alg.mul(&alg.mul(&x, &y), &z), alg.mul(&x, &alg.mul(&y, &z)));
    }

    #[test]
    fn involution_reverses_products(which in 0usize..3, i: usize, j: usize) {
        let algs = algebras();
        let alg = [&algs.dual4, &algs.cyclic3, &algs.walled][which];
        let (x, y) = (basis_element(alg, i), basis_element(alg, j));
        prop_assert_eq!(alg.involution(&alg.involution(&x)), x.clone());
        prop_assert_eq!(alg.involution(&alg.mul(&x, &y)), alg.mul(&alg.involution(&y), &alg.involution(&x)));
    }

    #[test]
    fn products_stay_legal_and_filtered(which in 0usize..3, i: usize, j: usize) {
        let algs = algebras();
        let alg = [&algs.dual4, &algs.cyclic3, &algs.walled][which];
        let (x, y) = (&alg.basis()[i % alg.dim()], &alg.basis()[j % alg.dim()]);
        for (d, _) in alg.multiply(x, y).terms() {
            prop_assert!(d.is_legal(alg.kind()));
            prop_assert!(d.arcs() >= x.arcs().max(y.arcs()));
        }
    }

    #[test]
    fn wreath_products_associate(i: usize, j: usize, k: usize) {
        let w = algebras().wreath.algebra();
        let n = w.dim();
        let (x, y, z) = (w.basis(i % n), w.basis(j % n), w.basis(k % n));
        prop_assert_eq!(w.mul(&w.mul(&x, &y), &z), w.mul(&x, &w.mul(&y, &z)));
    }

    #[test]
    fn psi_round_trips(which in 0usize..3, i: usize) {
        let algs = algebras();
        let alg = [&algs.dual4, &algs.cyclic3, &algs.walled][which];
        let d = &alg.basis()[i % alg.dim()];
        let layer = InflationLayer::new(alg, d.arcs()).unwrap();
        let (top, bottom, strands) = layer.psi(d).unwrap();
        prop_assert_eq!(&layer.psi_inverse(&top, &bottom, &strands), d);
    }

    #[test]
    fn dominance_is_transitive(a in 0usize..11, b in 0usize..11, c in 0usize..11) {
        let all = Partition::all(6);
        let (a, b, c) = (&all[a], &all[b], &all[c]);
        if dominance(a, b).unwrap().at_least() && dominance(b, c).unwrap().at_least() {
            prop_assert!(dominance(a, c).unwrap().at_least());
        }
    }

    #[test]
    fn ext_is_additive(picks in prop::collection::vec(0usize..3, 3)) {
        let f = Field::prime(2).unwrap();
        let group = InputAlgebra::cyclic_group(&f, 2, vec![f.one(), f.zero()]).unwrap().to_fin_algebra();
        let regular = RightModule::regular(&group);
        let augmentation = regular.generated_submodule(&group, &[vec![(0, f.one()), (1, f.one())]]);
        let trivial = regular.quotient(&group, &augmentation).unwrap().0;
        let mods = [trivial.clone(), regular.clone(), RightModule::direct_sum(&group, &[trivial.clone(), trivial])];
        let (m, n, p) = (&mods[picks[0]], &mods[picks[1]], &mods[picks[2]]);
        let sum = RightModule::direct_sum(&group, &[m.clone(), n.clone()]);
        let ext = |x: &RightModule, y: &RightModule| ext1_dim(&group, x, y).unwrap();
        prop_assert_eq!(ext(&sum, p), ext(m, p) + ext(n, p));
        prop_assert_eq!(ext(p, &sum), ext(p, m) + ext(p, n));
    }
}

#[test]
fn dominance_is_a_partial_order_up_to_six() {
    for size in 0..=6 {
        let all = Partition::all(size);
        for a in &all {
            assert!(dominance(a, a).unwrap().at_least());
            for b in &all {
                let ab = dominance(a, b).unwrap();
                let ba = dominance(b, a).unwrap();
                if ab.at_least() && ba.at_least() {
                    assert_eq!(a, b);
                }
                if ab == Comparison::Incomparable {
                    assert_eq!(ba, Comparison::Incomparable);
                }
                for c in &all {
                    if ab.at_least() && dominance(b, c).unwrap().at_least() {
                        assert!(dominance(a, c).unwrap().at_least(), "{a} {b} {c}");
                    }
                }
            }
        }
    }
}
