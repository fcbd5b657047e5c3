//! Bracket and differential behavior on the worked presentation families.

use std::sync::Arc;

use dg_poisson::{
    check_poisson_axioms, enumerate_monomials, tensor_bracket, tensor_presentation, MorphismSpec,
    PoissonPresentation,
};
use gca_core::{Element, FieldSpec, Generator, GeneratorTable, Monomial, Scalar};

/// k[x,y,z]/(x^5,y^5,z^5) over GF(5) with {x,y}=y, {y,z}=y^2, {x,z}=z.
fn restricted_b() -> PoissonPresentation {
    let field = FieldSpec::prime(5).unwrap();
    let t = GeneratorTable::new(vec![
        Generator::truncated("x", 0, 5),
        Generator::truncated("y", 0, 5),
        Generator::truncated("z", 0, 5),
    ])
    .unwrap();
    let y = Element::generator(t.clone(), field, 1).unwrap();
    let z = Element::generator(t.clone(), field, 2).unwrap();
    let y2 = y.mul(&y).unwrap();
    PoissonPresentation::builder(t, field, 0)
        .bracket(0, 1, y)
        .bracket(1, 2, y2)
        .bracket(0, 2, z)
        .build()
        .unwrap()
}

fn heisenberg() -> PoissonPresentation {
    let field = FieldSpec::Rationals;
    let t = GeneratorTable::new(vec![
        Generator::new("x1", 0),
        Generator::new("x2", 0),
        Generator::new("x3", 0),
    ])
    .unwrap();
    let x3 = Element::generator(t.clone(), field, 2).unwrap();
    PoissonPresentation::builder(t, field, 0).bracket(0, 1, x3).build().unwrap()
}

fn abelian3() -> PoissonPresentation {
    let t = GeneratorTable::new(vec![
        Generator::new("a1", 0),
        Generator::new("a2", 0),
        Generator::new("a3", 0),
    ])
    .unwrap();
    PoissonPresentation::abelian(t, FieldSpec::Rationals, 0)
}

/// |e| = 0, |f| = 1, {e,f} = f, d(e) = f.
fn graded_ef_with_bracket() -> PoissonPresentation {
    let field = FieldSpec::Rationals;
    let t =
        GeneratorTable::new(vec![Generator::new("e", 0), Generator::new("f", 1)]).unwrap();
    let f = Element::generator(t.clone(), field, 1).unwrap();
    PoissonPresentation::builder(t, field, 0)
        .bracket(0, 1, f.clone())
        .differential(0, f)
        .build()
        .unwrap()
}

fn jacobi_violator() -> PoissonPresentation {
    let field = FieldSpec::Rationals;
    let t = GeneratorTable::new(vec![
        Generator::new("a", 0),
        Generator::new("b", 0),
        Generator::new("c", 0),
    ])
    .unwrap();
    let a = Element::generator(t.clone(), field, 0).unwrap();
    let c = Element::generator(t.clone(), field, 2).unwrap();
    PoissonPresentation::builder(t, field, 0)
        .bracket(0, 1, c)
        .bracket(1, 2, a.clone())
        .bracket(0, 2, a)
        .build()
        .unwrap()
}

#[test]
fn bracket_on_generators_and_unit() {
    let b = restricted_b();
    let x = b.element_by_name("x").unwrap();
    let z = b.element_by_name("z").unwrap();
    assert_eq!(b.bracket(&x, &z).unwrap(), z);
    assert_eq!(b.bracket(&x, &b.one()).unwrap(), b.zero());
    assert_eq!(b.bracket(&b.one(), &z).unwrap(), b.zero());
}

#[test]
fn bracket_extends_as_biderivation() {
    // {x, y z} = {x,y} z + y {x,z} = y z + y z = 2 y z
    let b = restricted_b();
    let x = b.element_by_name("x").unwrap();
    let y = b.element_by_name("y").unwrap();
    let z = b.element_by_name("z").unwrap();
    let yz = y.mul(&z).unwrap();
    let expected = yz.scale(&Scalar::from_i64(b.field(), 2));
    assert_eq!(b.bracket(&x, &yz).unwrap(), expected);
    assert_eq!(b.bracket(&x, &yz).unwrap().to_string(), "2*y*z");
}

#[test]
fn differential_leibniz_and_defaults() {
    let p = graded_ef_with_bracket();
    let e = p.element_by_name("e").unwrap();
    let f = p.element_by_name("f").unwrap();
    assert_eq!(p.differential(&p.one()).unwrap(), p.zero());
    // d(e^2) = 2 e f
    let e2 = e.mul(&e).unwrap();
    let expected = e.mul(&f).unwrap().scale(&Scalar::from_i64(p.field(), 2));
    assert_eq!(p.differential(&e2).unwrap(), expected);
    // a zero differential table sends everything to zero
    let ab = abelian3();
    let pool = enumerate_monomials(ab.generators(), 3);
    for m in pool {
        let a = Element::from_monomial(ab.generators().clone(), m, Scalar::one(ab.field()));
        assert!(ab.differential(&a).unwrap().is_zero());
    }
}

#[test]
fn axiom_checker_passes_shipped_presentations() {
    assert!(check_poisson_axioms(&restricted_b(), 4, 7).passed());
    assert!(check_poisson_axioms(&heisenberg(), 4, 7).passed());
    assert!(check_poisson_axioms(&abelian3(), 4, 7).passed());
    assert!(check_poisson_axioms(&graded_ef_with_bracket(), 4, 7).passed());
}

#[test]
fn axiom_checker_finds_jacobi_defect() {
    let v = jacobi_violator();
    let report = check_poisson_axioms(&v, 3, 1);
    assert!(!report.passed());
    let jac = report
        .violations
        .iter()
        .find(|viol| viol.law == "graded Jacobi identity")
        .expect("jacobi violation reported");
    assert_eq!(jac.witness, "(a, b, c)");
    // defect {a,{b,c}} - {{a,b},c} - {b,{a,c}} = 0 - 0 - (-c) = c
    let a = v.element_by_name("a").unwrap();
    let b = v.element_by_name("b").unwrap();
    let c = v.element_by_name("c").unwrap();
    let lhs = v.bracket(&a, &v.bracket(&b, &c).unwrap()).unwrap();
    let rhs = v
        .bracket(&v.bracket(&a, &b).unwrap(), &c)
        .unwrap()
        .add(&v.bracket(&b, &v.bracket(&a, &c).unwrap()).unwrap())
        .unwrap();
    assert_eq!(lhs.sub(&rhs).unwrap(), c);
}

#[test]
fn tensor_with_scalars_is_identity() {
    let b = restricted_b();
    let unit = PoissonPresentation::abelian(GeneratorTable::empty(), b.field(), 0);
    let tp = tensor_presentation(&b, &unit).unwrap();
    assert_eq!(tp.joint, b);
}

#[test]
fn tensor_of_abelians_is_abelian() {
    let tp = tensor_presentation(&abelian3(), &abelian3()).unwrap();
    assert_eq!(tp.joint.bracket_entries().count(), 0);
    assert_eq!(tp.joint.generators().len(), 6);
    // right copy was renamed with primes
    assert_eq!(tp.joint.generators().name(3).unwrap(), "a1'");
    assert!(check_poisson_axioms(&tp.joint, 3, 5).passed());
}

#[test]
fn tensor_of_restricted_b_with_itself_passes_axioms() {
    let b = restricted_b();
    let tp = tensor_presentation(&b, &b).unwrap();
    assert!(check_poisson_axioms(&tp.joint, 3, 5).passed());
}

#[test]
fn tensor_bracket_agrees_with_joint_presentation() {
    // the two-term tensor bracket formula holds in the union presentation
    let a = graded_ef_with_bracket();
    let tp = tensor_presentation(&a, &a).unwrap();
    let pool = enumerate_monomials(a.generators(), 2);
    let field = a.field();
    for ma in &pool {
        for mb in &pool {
            for mc in &pool {
                for md in &pool {
                    let s = gca_core::TensorElement::of(
                        &Element::from_monomial(
                            a.generators().clone(),
                            ma.clone(),
                            Scalar::one(field),
                        ),
                        &Element::from_monomial(
                            a.generators().clone(),
                            mb.clone(),
                            Scalar::one(field),
                        ),
                    )
                    .unwrap();
                    let t = gca_core::TensorElement::of(
                        &Element::from_monomial(
                            a.generators().clone(),
                            mc.clone(),
                            Scalar::one(field),
                        ),
                        &Element::from_monomial(
                            a.generators().clone(),
                            md.clone(),
                            Scalar::one(field),
                        ),
                    )
                    .unwrap();
                    let via_formula = tp.flatten(&tensor_bracket(&a, &a, &s, &t).unwrap()).unwrap();
                    let via_joint = tp
                        .joint
                        .bracket(&tp.flatten(&s).unwrap(), &tp.flatten(&t).unwrap())
                        .unwrap();
                    assert_eq!(via_formula, via_joint);
                }
            }
        }
    }
}

#[test]
fn tensor_bracket_trivial_legs() {
    let b = restricted_b();
    let x = b.element_by_name("x").unwrap();
    let y = b.element_by_name("y").unwrap();
    let z = b.element_by_name("z").unwrap();
    let one = b.one();
    // {x (x) 1, 1 (x) y} = 0: brackets with the unit vanish
    let s = gca_core::TensorElement::of(&x, &one).unwrap();
    let t = gca_core::TensorElement::of(&one, &y).unwrap();
    assert!(tensor_bracket(&b, &b, &s, &t).unwrap().is_zero());
    // {x (x) 1, z (x) 1} = {x, z} (x) 1
    let t = gca_core::TensorElement::of(&z, &one).unwrap();
    let expected = gca_core::TensorElement::of(&b.bracket(&x, &z).unwrap(), &one).unwrap();
    assert_eq!(tensor_bracket(&b, &b, &s, &t).unwrap(), expected);
}

#[test]
fn tensor_bracket_signs_on_odd_legs() {
    // {e(x)f, f(x)e} with p = 0: both displayed terms carry a minus sign
    let a = graded_ef_with_bracket();
    let e = a.element_by_name("e").unwrap();
    let f = a.element_by_name("f").unwrap();
    let s = gca_core::TensorElement::of(&e, &f).unwrap();
    let t = gca_core::TensorElement::of(&f, &e).unwrap();
    let got = tensor_bracket(&a, &a, &s, &t).unwrap();
    let ef = e.mul(&f).unwrap();
    let expected = gca_core::TensorElement::of(&f, &ef)
        .unwrap()
        .neg()
        .add(&gca_core::TensorElement::of(&ef, &f).unwrap())
        .unwrap();
    assert_eq!(got, expected);
}

#[test]
fn opposite_commutes_with_tensor_products() {
    for p in [restricted_b(), heisenberg()] {
        let lhs = tensor_presentation(&p.opposite(), &p.opposite()).unwrap().joint;
        let rhs = tensor_presentation(&p, &p).unwrap().joint.opposite();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn opposite_negates_brackets_and_is_involutive() {
    let b = restricted_b();
    let op = b.opposite();
    let x = b.element_by_name("x").unwrap();
    let z = b.element_by_name("z").unwrap();
    assert_eq!(op.bracket(&x, &z).unwrap(), z.neg());
    assert_eq!(op.opposite(), b);
    assert_eq!(check_poisson_axioms(&op, 4, 7).passed(), true);
    // a broken presentation stays broken under opposite
    let v = jacobi_violator();
    assert!(!check_poisson_axioms(&v.opposite(), 3, 1).passed());
}

#[test]
fn morphism_application_and_checks() {
    let ab = abelian3();
    let identity = MorphismSpec::identity(&restricted_b()).unwrap();
    let x = restricted_b().element_by_name("x").unwrap();
    assert_eq!(identity.apply(&x).unwrap(), x);
    assert!(identity.check(3).passed());

    // doubling every generator of an abelian algebra is a morphism
    let two = Scalar::from_i64(ab.field(), 2);
    let images: Vec<(&str, Element)> = vec![
        ("a1", ab.element_by_name("a1").unwrap().scale(&two)),
        ("a2", ab.element_by_name("a2").unwrap().scale(&two)),
        ("a3", ab.element_by_name("a3").unwrap().scale(&two)),
    ];
    let doubling = MorphismSpec::by_name(ab.clone(), ab.clone(), images).unwrap();
    let a12 = ab
        .element_by_name("a1")
        .unwrap()
        .mul(&ab.element_by_name("a2").unwrap())
        .unwrap();
    assert_eq!(doubling.apply(&a12).unwrap(), a12.scale(&Scalar::from_i64(ab.field(), 4)));
    assert!(doubling.check(3).passed());

    // doubling fails on the Heisenberg bracket: phi({x1,x2}) = 2 x3 != 4 x3
    let h = heisenberg();
    let two = Scalar::from_i64(h.field(), 2);
    let images: Vec<(&str, Element)> = vec![
        ("x1", h.element_by_name("x1").unwrap().scale(&two)),
        ("x2", h.element_by_name("x2").unwrap().scale(&two)),
        ("x3", h.element_by_name("x3").unwrap().scale(&two)),
    ];
    let bad = MorphismSpec::by_name(h.clone(), h.clone(), images).unwrap();
    let report = bad.check(3);
    assert!(!report.passed());
    let v = report
        .violations
        .iter()
        .find(|v| v.law == "morphism preserves the bracket")
        .unwrap();
    assert_eq!(v.witness, "(x1, x2)");
    assert_eq!(v.lhs, "2*x3");
    assert_eq!(v.rhs, "4*x3");
}

#[test]
fn zero_images_give_counit_like_projection() {
    let h = heisenberg();
    let images: Vec<(&str, Element)> =
        vec![("x1", h.zero()), ("x2", h.zero()), ("x3", h.zero())];
    let proj = MorphismSpec::by_name(h.clone(), h.clone(), images).unwrap();
    let x1 = h.element_by_name("x1").unwrap();
    let val = proj.apply(&h.one().add(&x1).unwrap()).unwrap();
    assert_eq!(val, h.one());
    assert!(proj.check(2).passed());
    let _ = Monomial::one();
    let _: Arc<GeneratorTable> = GeneratorTable::empty();
}
