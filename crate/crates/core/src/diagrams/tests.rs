use super::*;
use crate::kernel::linalg::unit_vector;

fn q() -> Field {
    Field::rationals()
}

fn trivial(delta: i64) -> InputAlgebra {
    InputAlgebra::trivial(&q(), q().from_i64(delta))
}

fn cyclic3() -> InputAlgebra {
    let f = q();
    InputAlgebra::cyclic_group(&f, 3, vec![f.from_i64(2), f.from_i64(5), f.from_i64(5)]).unwrap()
}

/// Hand-built `C[x]/(x^2)` with `x* = x` and `tr(1) = 3`, `tr(x) = 1`.
fn dual_numbers() -> InputAlgebra {
    let f = q();
    let e = |i| unit_vector(&f, i);
    InputAlgebra::new(
        f.clone(),
        "dual",
        vec!["1".into(), "x".into()],
        e(0),
        vec![e(0), e(1), e(1), Vec::new()],
        vec![e(0), e(1)],
        vec![f.from_i64(3), f.from_i64(1)],
    )
    .unwrap()
}

fn single(alg: &DiagramAlgebra, d: &LabeledDiagram) -> DiagramElement {
    DiagramElement::single(d.clone(), alg.field().one())
}

#[test]
fn basis_counts() {
    let ab = |n, a: &InputAlgebra| {
        DiagramAlgebra::new(DiagramKind::ABrauer { n }, a)
            .unwrap()
            .dim()
    };
    assert_eq!(ab(2, &trivial(1)), 3);
    assert_eq!(ab(3, &trivial(1)), 15);
    assert_eq!(ab(1, &cyclic3()), 3);
    assert_eq!(ab(2, &cyclic3()), 27);
    assert_eq!(DiagramAlgebra::walled(&q(), 1, 1, q().one()).dim(), 2);
    assert_eq!(DiagramAlgebra::walled(&q(), 2, 1, q().one()).dim(), 6);
    assert_eq!(DiagramAlgebra::walled(&q(), 2, 2, q().one()).dim(), 24);
    assert_eq!(count_matchings(DiagramKind::ABrauer { n: 4 }), 105);
    assert_eq!(double_factorial(4), 105);
}

#[test]
fn identity_is_first_and_unit() {
    let alg = DiagramAlgebra::new(DiagramKind::ABrauer { n: 3 }, &trivial(2)).unwrap();
    assert_eq!(alg.basis()[0], LabeledDiagram::identity(3, 0));
    for d in alg.basis() {
        let x = single(&alg, d);
        assert_eq!(alg.mul(&alg.one(), &x), x);
        assert_eq!(alg.mul(&x, &alg.one()), x);
    }
}

#[test]
fn generator_relations() {
    let alg = DiagramAlgebra::new(DiagramKind::ABrauer { n: 2 }, &trivial(3)).unwrap();
    let s = alg.generator(Generator::S(1)).unwrap();
    let e = alg.generator(Generator::E(1)).unwrap();
    assert_eq!(alg.mul(&s, &s), alg.one());
    assert_eq!(alg.mul(&e, &e), e.scaled(alg.field(), &q().from_i64(3)));
    assert_eq!(alg.mul(&s, &e), e);

    let alg3 = DiagramAlgebra::new(DiagramKind::ABrauer { n: 3 }, &trivial(1)).unwrap();
    let s2 = alg3.generator(Generator::S(2)).unwrap();
    let expected = LabeledDiagram::from_edges(3, &[(0, 3, 0), (1, 5, 0), (2, 4, 0)]).unwrap();
    assert_eq!(s2, DiagramElement::single(expected, q().one()));
    assert!(alg3.generator(Generator::S(3)).is_err());
    assert!(alg3.generator(Generator::H(4, 0)).is_err());
}

#[test]
fn labeled_generator_and_loop_trace() {
    let a = cyclic3();
    let alg = DiagramAlgebra::new(DiagramKind::ABrauer { n: 2 }, &a).unwrap();
    let h2 = alg.generator(Generator::H(1, 2)).unwrap();
    let expected = LabeledDiagram::from_edges(2, &[(0, 2, 2), (1, 3, 0)]).unwrap();
    assert_eq!(h2, DiagramElement::single(expected, q().one()));
    let e = alg.generator(Generator::E(1)).unwrap();
    for m in 0..3 {
        let h = alg.generator(Generator::H(1, m)).unwrap();
        let lhs = alg.mul(&alg.mul(&e, &h), &e);
        assert_eq!(lhs, e.scaled(alg.field(), a.trace_basis(m)), "m = {m}");
    }
}

#[test]
fn walled_generators() {
    let alg = DiagramAlgebra::walled(&q(), 2, 1, q().from_i64(4));
    let e = alg.generator(Generator::WalledE(2, 3)).unwrap();
    let expected = LabeledDiagram::from_edges(3, &[(0, 3, 0), (1, 2, 0), (4, 5, 0)]).unwrap();
    assert_eq!(e, DiagramElement::single(expected, q().one()));
    assert_eq!(
        alg.generator(Generator::WalledE(1, 2)),
        Err(Error::WallViolation { k: 1, l: 2 })
    );
    assert!(alg.generator(Generator::S(2)).is_err());
    assert!(alg.generator(Generator::S(1)).is_ok());

    let b11 = DiagramAlgebra::walled(&q(), 1, 1, q().from_i64(4));
    let e12 = b11.generator(Generator::WalledE(1, 2)).unwrap();
    assert_eq!(
        b11.mul(&e12, &e12),
        e12.scaled(b11.field(), &q().from_i64(4))
    );
}

fn associativity_exhaustive(alg: &DiagramAlgebra) {
    let b = alg.basis();
    for x in b {
        for y in b {
            let xy = alg.multiply(x, y);
            for z in b {
                let left = alg.mul(&xy, &single(alg, z));
                let right = alg.mul(&single(alg, x), &alg.multiply(y, z));
                assert_eq!(
                    left,
                    right,
                    "{:?} {:?} {:?}",
                    x.edges(),
                    y.edges(),
                    z.edges()
                );
            }
        }
    }
}

#[test]
fn associative_small_cases() {
    associativity_exhaustive(
        &DiagramAlgebra::new(DiagramKind::ABrauer { n: 2 }, &dual_numbers()).unwrap(),
    );
    associativity_exhaustive(
        &DiagramAlgebra::new(DiagramKind::ABrauer { n: 3 }, &trivial(-2)).unwrap(),
    );
    associativity_exhaustive(&DiagramAlgebra::walled(&q(), 2, 1, q().from_i64(3)));
}

#[test]
fn involution_properties() {
    let a = cyclic3();
    let alg = DiagramAlgebra::new(DiagramKind::ABrauer { n: 2 }, &a).unwrap();
    let s = alg.generator(Generator::S(1)).unwrap();
    assert_eq!(alg.involution(&s), s);
    let h1 = alg.generator(Generator::H(1, 1)).unwrap();
    assert_eq!(
        alg.involution(&h1),
        alg.generator(Generator::H(1, 2)).unwrap()
    );
    for x in alg.basis() {
        let x1 = single(&alg, x);
        assert_eq!(alg.involution(&alg.involution(&x1)), x1);
        for y in alg.basis() {
            let y1 = single(&alg, y);
            let lhs = alg.involution(&alg.multiply(x, y));
            let rhs = alg.mul(&alg.involution(&y1), &alg.involution(&x1));
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn products_never_lower_the_layer() {
    let alg = DiagramAlgebra::walled(&q(), 2, 2, q().from_i64(2));
    for x in alg.basis() {
        for y in alg.basis() {
            let p = alg.multiply(x, y);
            for (d, _) in p.terms() {
                assert!(d.arcs() >= x.arcs().max(y.arcs()));
                assert!(d.is_legal(alg.kind()));
            }
        }
    }
}

#[test]
fn idempotents_square_to_themselves() {
    let field = q();
    let cases: Vec<(DiagramAlgebra, Vec<usize>)> = vec![
        (
            DiagramAlgebra::new(DiagramKind::ABrauer { n: 2 }, &trivial(2)).unwrap(),
            vec![0, 1],
        ),
        (
            DiagramAlgebra::new(DiagramKind::ABrauer { n: 4 }, &trivial(3)).unwrap(),
            vec![0, 1, 2],
        ),
        (
            DiagramAlgebra::new(DiagramKind::ABrauer { n: 3 }, &trivial(0)).unwrap(),
            vec![0, 1],
        ),
        (
            DiagramAlgebra::new(DiagramKind::ABrauer { n: 5 }, &trivial(0)).unwrap(),
            vec![1, 2],
        ),
        (
            DiagramAlgebra::new(DiagramKind::ABrauer { n: 3 }, &dual_numbers()).unwrap(),
            vec![1],
        ),
        (
            DiagramAlgebra::walled(&field, 2, 2, field.from_i64(5)),
            vec![0, 1, 2],
        ),
        (DiagramAlgebra::walled(&field, 2, 1, field.zero()), vec![1]),
        (DiagramAlgebra::walled(&field, 1, 2, field.zero()), vec![1]),
        (
            DiagramAlgebra::walled(&field, 2, 3, field.zero()),
            vec![1, 2],
        ),
        (
            DiagramAlgebra::walled(&field, 3, 2, field.zero()),
            vec![1, 2],
        ),
    ];
    for (alg, layers) in cases {
        for l in layers {
            let frame = CornerFrame::for_algebra(&alg, l).unwrap();
            let e = frame.idempotent(&alg);
            assert_eq!(alg.mul(&e, &e), e, "{} l={l}", alg.kind());
            assert_eq!(e.min_arcs(), Some(l));
        }
    }
}

#[test]
fn idempotent_shapes_and_errors() {
    let f = q();
    let alg = DiagramAlgebra::new(DiagramKind::ABrauer { n: 2 }, &trivial(2)).unwrap();
    let e = CornerFrame::for_algebra(&alg, 1).unwrap().idempotent(&alg);
    let cupcap = LabeledDiagram::from_edges(2, &[(0, 1, 0), (2, 3, 0)]).unwrap();
    assert_eq!(
        e,
        DiagramElement::single(cupcap, f.inv(&f.from_i64(2)).unwrap())
    );

    let fig = DiagramAlgebra::new(DiagramKind::ABrauer { n: 3 }, &trivial(0)).unwrap();
    let e0 = CornerFrame::for_algebra(&fig, 1).unwrap().idempotent(&fig);
    let shape = LabeledDiagram::from_edges(3, &[(0, 5, 0), (1, 2, 0), (3, 4, 0)]).unwrap();
    assert_eq!(e0, DiagramElement::single(shape, f.one()));

    let kind = DiagramKind::ABrauer { n: 4 };
    assert_eq!(
        CornerFrame::new(kind, 1, DeltaMode::Zero, &f.zero(), &f),
        Err(Error::DeltaZeroEvenExcluded(4))
    );
    assert_eq!(
        CornerFrame::new(kind, 1, DeltaMode::Invertible, &f.zero(), &f),
        Err(Error::DeltaNotInvertible)
    );
    let w = DiagramKind::Walled { r: 1, t: 1 };
    assert!(matches!(
        CornerFrame::new(w, 1, DeltaMode::Zero, &f.zero(), &f),
        Err(Error::NoDeltaZeroIdempotent(_))
    ));
    let id = CornerFrame::new(kind, 0, DeltaMode::Invertible, &f.zero(), &f).unwrap();
    let alg4 = DiagramAlgebra::new(kind, &trivial(0)).unwrap();
    assert_eq!(id.idempotent(&alg4), alg4.one());
}

#[test]
fn embedding_is_multiplicative() {
    let alg = DiagramAlgebra::new(DiagramKind::ABrauer { n: 4 }, &trivial(3)).unwrap();
    let frame = CornerFrame::for_algebra(&alg, 1).unwrap();
    let small = DiagramAlgebra::new(frame.small_kind(), alg.input()).unwrap();
    for x in small.basis() {
        for y in small.basis() {
            let lhs = frame.embed_element(&alg, &small.multiply(x, y));
            let rhs = alg.mul(&frame.embed(&alg, x), &frame.embed(&alg, y));
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn loop_value_is_independent_of_traversal() {
    // A loop x·y·x*... read from every starting point in both directions.
    let a = cyclic3();
    let labels = [1usize, 2, 2, 0];
    let f = a.field();
    let read = |order: Vec<(usize, bool)>| {
        let mut acc = a.unit().clone();
        for (l, rev) in order {
            let v = if rev {
                a.star_basis(l).clone()
            } else {
                unit_vector(f, l)
            };
            acc = a.mul(&acc, &v);
        }
        a.trace(&acc)
    };
    let forward: Vec<(usize, bool)> = labels.iter().map(|&l| (l, false)).collect();
    let reference = read(forward.clone());
    for shift in 0..labels.len() {
        let mut rotated = forward.clone();
        rotated.rotate_left(shift);
        assert_eq!(read(rotated.clone()), reference);
        let backward: Vec<(usize, bool)> = rotated.iter().rev().map(|&(l, _)| (l, true)).collect();
        assert_eq!(read(backward), reference);
    }
}

#[test]
fn text_round_trip() {
    let a = cyclic3();
    let alg = DiagramAlgebra::new(DiagramKind::ABrauer { n: 2 }, &a).unwrap();
    for d in alg.basis() {
        let text = format_diagram(alg.kind(), &a, d);
        let (kind, x) = parse_element(&text, &a).unwrap();
        assert_eq!(kind, alg.kind());
        assert_eq!(x, single(&alg, d));
    }
    // A reversed edge reads its label starred.
    let (_, x) = parse_element("[(b1,t1,h1,+),(t2,b2,h0,+)] @ abrauer(2)", &a).unwrap();
    let d = LabeledDiagram::from_edges(2, &[(0, 2, 2), (1, 3, 0)]).unwrap();
    assert_eq!(x, single(&alg, &d));
    assert!(parse_element("[(t1,t2,1,+),(b1,b2,1,+)] @ walled(1,2)", &trivial(1)).is_err());
    assert!(parse_element("[(t1,b1,1,+)] @ abrauer(2)", &trivial(1)).is_err());
}
