//! Standard presentation families: the restricted symmetric algebra in odd
//! characteristic, symmetric algebras of small Lie algebras, and a
//! Jacobi-violating presentation for negative testing.

use dg_poisson::{PoissonError, PoissonPresentation};
use gca_core::{Element, FieldSpec, Generator, GeneratorTable, Scalar, TensorElement};

use crate::presentation::{HopfError, HopfPresentation};

/// `k[x,y,z]/(x^q, y^q, z^q)` over GF(q) with `{x,y} = y`, `{y,z} = y^2`,
/// `{x,z} = z`, primitive x and y, and
/// `Delta(z) = z(x)1 + 1(x)z - 2 x(x)y`, `S(z) = -z - 2xy`.
pub fn restricted_b(q: u64) -> Result<HopfPresentation, HopfError> {
    let field = FieldSpec::prime(q)?;
    let n = q.try_into().expect("truncation bound fits in u32");
    let t = GeneratorTable::new(vec![
        Generator::truncated("x", 0, n),
        Generator::truncated("y", 0, n),
        Generator::truncated("z", 0, n),
    ])?;
    let x = Element::generator(t.clone(), field, 0)?;
    let y = Element::generator(t.clone(), field, 1)?;
    let z = Element::generator(t.clone(), field, 2)?;
    let base = PoissonPresentation::builder(t.clone(), field, 0)
        .bracket(0, 1, y.clone())
        .bracket(1, 2, y.mul(&y)?)
        .bracket(0, 2, z.clone())
        .build()?;

    let one = Element::one(t.clone(), field);
    let primitive = |g: &Element| -> Result<TensorElement, HopfError> {
        Ok(TensorElement::of(g, &one)?.add(&TensorElement::of(&one, g)?)?)
    };
    let minus_two = Scalar::from_i64(field, -2);
    let delta_z = primitive(&z)?.add(&TensorElement::of(&x, &y)?.scale(&minus_two))?;
    let s_z = z.neg().add(&x.mul(&y)?.scale(&minus_two))?;
    HopfPresentation::builder(base)
        .coproduct(0, primitive(&x)?)
        .coproduct(1, primitive(&y)?)
        .coproduct(2, delta_z)
        .counit(0, Scalar::zero(field))
        .counit(1, Scalar::zero(field))
        .counit(2, Scalar::zero(field))
        .antipode(0, x.neg())
        .antipode(1, y.neg())
        .antipode(2, s_z)
        .build()
}

/// Abelian Lie algebra on `n` degree-0 generators `a1..an`, zero differential.
pub fn abelian(n: usize) -> Result<PoissonPresentation, PoissonError> {
    let gens = (1..=n).map(|i| Generator::new(format!("a{i}"), 0)).collect();
    Ok(PoissonPresentation::abelian(GeneratorTable::new(gens)?, FieldSpec::Rationals, 0))
}

/// Heisenberg Lie algebra: `{x1, x2} = x3`, all other brackets zero.
pub fn heisenberg() -> Result<PoissonPresentation, PoissonError> {
    let t = GeneratorTable::new(vec![
        Generator::new("x1", 0),
        Generator::new("x2", 0),
        Generator::new("x3", 0),
    ])?;
    let x3 = Element::generator(t.clone(), FieldSpec::Rationals, 2)?;
    PoissonPresentation::builder(t, FieldSpec::Rationals, 0).bracket(0, 1, x3).build()
}

/// sl2 over the rationals: `{e,f} = h`, `{h,e} = 2e`, `{h,f} = -2f`.
pub fn sl2() -> Result<PoissonPresentation, PoissonError> {
    let field = FieldSpec::Rationals;
    let t = GeneratorTable::new(vec![
        Generator::new("e", 0),
        Generator::new("f", 0),
        Generator::new("h", 0),
    ])?;
    let e = Element::generator(t.clone(), field, 0)?;
    let f = Element::generator(t.clone(), field, 1)?;
    let h = Element::generator(t.clone(), field, 2)?;
    let two = Scalar::from_i64(field, 2);
    PoissonPresentation::builder(t, field, 0)
        .bracket(0, 1, h)
        .bracket(2, 0, e.scale(&two))
        .bracket(2, 1, f.scale(&two).neg())
        .build()
}

/// Two generators `|e| = 0`, `|f| = 1` with `d(e) = f` and zero bracket.
pub fn graded_ef() -> Result<PoissonPresentation, PoissonError> {
    let field = FieldSpec::Rationals;
    let t = GeneratorTable::new(vec![Generator::new("e", 0), Generator::new("f", 1)])?;
    let f = Element::generator(t.clone(), field, 1)?;
    PoissonPresentation::builder(t, field, 0).differential(0, f).build()
}

/// Structure constants that break the Jacobi identity on (a, b, c):
/// `{a,b} = c`, `{b,c} = a`, `{a,c} = a`.
pub fn jacobi_violator() -> Result<PoissonPresentation, PoissonError> {
    let field = FieldSpec::Rationals;
    let t = GeneratorTable::new(vec![
        Generator::new("a", 0),
        Generator::new("b", 0),
        Generator::new("c", 0),
    ])?;
    let a = Element::generator(t.clone(), field, 0)?;
    let c = Element::generator(t.clone(), field, 2)?;
    PoissonPresentation::builder(t, field, 0)
        .bracket(0, 1, c)
        .bracket(1, 2, a.clone())
        .bracket(0, 2, a)
        .build()
}
