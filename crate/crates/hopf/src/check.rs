//! Bounded verification of the DG Poisson bialgebra and Hopf axioms, and the
//! Sweedler-leg bracket obstruction.

use dg_poisson::{
    enumerate_monomials, group_by_degree, random_homogeneous_element, tensor_bracket,
    tensor_differential, Report, SampleRng,
};
use gca_core::{koszul_parity, Element, Monomial, Scalar, Tensor3, TensorElement};

use crate::presentation::{HopfError, HopfPresentation};

const RANDOM_PAIRS: usize = 40;

/// `(Delta (x) I) Delta`, materialized as a triple tensor.
fn delta_left(h: &HopfPresentation, t: &TensorElement) -> Result<Tensor3, HopfError> {
    let gens = h.base().generators().clone();
    let field = h.base().field();
    let mut out = Tensor3::zero([gens.clone(), gens.clone(), gens], field);
    for ((l, r), c) in t.terms() {
        let dl = h.coproduct(&Element::from_monomial(
            h.base().generators().clone(),
            l.clone(),
            Scalar::one(field),
        ))?;
        for ((a, b), c2) in dl.terms() {
            out.add_term(a.clone(), b.clone(), r.clone(), c.mul(c2));
        }
    }
    Ok(out)
}

/// `(I (x) Delta) Delta` as a triple tensor.
fn delta_right(h: &HopfPresentation, t: &TensorElement) -> Result<Tensor3, HopfError> {
    let gens = h.base().generators().clone();
    let field = h.base().field();
    let mut out = Tensor3::zero([gens.clone(), gens.clone(), gens], field);
    for ((l, r), c) in t.terms() {
        let dr = h.coproduct(&Element::from_monomial(
            h.base().generators().clone(),
            r.clone(),
            Scalar::one(field),
        ))?;
        for ((a, b), c2) in dr.terms() {
            out.add_term(l.clone(), a.clone(), b.clone(), c.mul(c2));
        }
    }
    Ok(out)
}

/// Contracts the left leg with the counit: `eps(a_(1)) a_(2)`.
fn counit_contract_left(h: &HopfPresentation, t: &TensorElement) -> Result<Element, HopfError> {
    let _field = h.base().field();
    let mut out = h.base().zero();
    for ((l, r), c) in t.terms() {
        let le = Element::from_monomial(h.base().generators().clone(), l.clone(), c.clone());
        let eps = h.counit(&le)?;
        out = out.add(
            &Element::from_monomial(h.base().generators().clone(), r.clone(), eps),
        )?;
    }
    Ok(out)
}

fn counit_contract_right(h: &HopfPresentation, t: &TensorElement) -> Result<Element, HopfError> {
    let _field = h.base().field();
    let mut out = h.base().zero();
    for ((l, r), c) in t.terms() {
        let re = Element::from_monomial(h.base().generators().clone(), r.clone(), c.clone());
        let eps = h.counit(&re)?;
        out = out.add(
            &Element::from_monomial(h.base().generators().clone(), l.clone(), eps),
        )?;
    }
    Ok(out)
}

/// `u(S (x) I) Delta(a)`: antipode on the left Sweedler leg, then multiply.
fn convolve_antipode_left(h: &HopfPresentation, a: &Element) -> Result<Element, HopfError> {
    let field = h.base().field();
    let mut out = h.base().zero();
    for ((l, r), c) in h.coproduct(a)?.terms() {
        let sl = h.antipode(&Element::from_monomial(
            h.base().generators().clone(),
            l.clone(),
            Scalar::one(field),
        ))?;
        let re = Element::from_monomial(h.base().generators().clone(), r.clone(), Scalar::one(field));
        out = out.add(&sl.mul(&re)?.scale(c))?;
    }
    Ok(out)
}

fn convolve_antipode_right(h: &HopfPresentation, a: &Element) -> Result<Element, HopfError> {
    let field = h.base().field();
    let mut out = h.base().zero();
    for ((l, r), c) in h.coproduct(a)?.terms() {
        let le = Element::from_monomial(h.base().generators().clone(), l.clone(), Scalar::one(field));
        let sr = h.antipode(&Element::from_monomial(
            h.base().generators().clone(),
            r.clone(),
            Scalar::one(field),
        ))?;
        out = out.add(&le.mul(&sr)?.scale(c))?;
    }
    Ok(out)
}

/// The Sweedler-leg bracket obstructions
/// `({S(a_(1)), a_(2)}, {a_(1), S(a_(2))})`, computed on the materialized
/// coproduct.
pub fn sweedler_obstruction(
    h: &HopfPresentation,
    a: &Element,
) -> Result<(Element, Element), HopfError> {
    let base = h.base();
    let field = base.field();
    let mono =
        |m: &Monomial| Element::from_monomial(base.generators().clone(), m.clone(), Scalar::one(field));
    let mut left = base.zero();
    let mut right = base.zero();
    for ((l, r), c) in h.coproduct(a)?.terms() {
        let le = mono(l);
        let re = mono(r);
        left = left.add(&base.bracket(&h.antipode(&le)?, &re)?.scale(c))?;
        right = right.add(&base.bracket(&le, &h.antipode(&re)?)?.scale(c))?;
    }
    Ok((left, right))
}

/// Verifies the graded bialgebra laws, the Poisson compatibility of the
/// coproduct and the coderivation laws up to the bound.
pub fn check_bialgebra(h: &HopfPresentation, degree_bound: u32, seed: u64) -> Report {
    let mut report = Report::new("bialgebra");
    if let Err(e) = run_bialgebra(h, degree_bound, seed, &mut report) {
        report.record_violation("bialgebra evaluation error", "-", e.to_string(), "-");
    }
    report
}

fn run_bialgebra(
    h: &HopfPresentation,
    degree_bound: u32,
    seed: u64,
    report: &mut Report,
) -> Result<(), HopfError> {
    let base = h.base();
    let gens = base.generators();
    let field = base.field();
    let pool = enumerate_monomials(gens, degree_bound);
    let of = |m: &Monomial| Element::from_monomial(gens.clone(), m.clone(), Scalar::one(field));

    for m in &pool {
        let a = of(m);
        let delta = h.coproduct(&a)?;
        report.check_eq("coassociativity", &a, &delta_left(h, &delta)?, &delta_right(h, &delta)?);
        report.check_eq("counit law (left)", &a, &counit_contract_left(h, &delta)?, &a);
        report.check_eq("counit law (right)", &a, &counit_contract_right(h, &delta)?, &a);
        // coderivation: Delta d(a) = d(a_(1)) (x) a_(2) + (-1)^(|a_(1)|) a_(1) (x) d(a_(2))
        let lhs = h.coproduct(&base.differential(&a)?)?;
        let rhs = tensor_differential(base, base, &delta)?;
        report.check_eq("coproduct coderivation law", &a, &lhs, &rhs);
        let eps_d = h.counit(&base.differential(&a)?)?;
        report.check_eq("counit kills the differential", &a, &eps_d, &Scalar::zero(field));
    }

    let pair_laws = |a: &Element, b: &Element, report: &mut Report| -> Result<(), HopfError> {
        let witness = format!("({a}, {b})");
        let lhs = h.coproduct(&a.mul(b)?)?;
        let rhs = h.coproduct(a)?.mul(&h.coproduct(b)?)?;
        report.check_eq("coproduct is an algebra map", &witness, &lhs, &rhs);
        let lhs = h.counit(&a.mul(b)?)?;
        let rhs = h.counit(a)?.mul(&h.counit(b)?);
        report.check_eq("counit is an algebra map", &witness, &lhs, &rhs);
        let lhs = h.coproduct(&base.bracket(a, b)?)?;
        let rhs = tensor_bracket(base, base, &h.coproduct(a)?, &h.coproduct(b)?)?;
        report.check_eq("coproduct preserves the bracket", &witness, &lhs, &rhs);
        let eps = h.counit(&base.bracket(a, b)?)?;
        report.check_eq("counit kills brackets", &witness, &eps, &Scalar::zero(field));
        Ok(())
    };

    for mi in &pool {
        for mj in &pool {
            if mi.total_exponent() + mj.total_exponent() > degree_bound as u64 {
                continue;
            }
            pair_laws(&of(mi), &of(mj), report)?;
        }
    }

    let mut rng = SampleRng::new(seed);
    let groups = group_by_degree(gens, &pool);
    for _ in 0..RANDOM_PAIRS {
        let a = random_homogeneous_element(&mut rng, gens, field, &groups, 2);
        let b = random_homogeneous_element(&mut rng, gens, field, &groups, 2);
        pair_laws(&a, &b, report)?;
    }
    Ok(())
}

/// Verifies both antipode convolution identities, involutivity, `dS = Sd`,
/// the antipode bracket rule, unit/counit stability and the left/right
/// obstruction equivalence up to the bound.
pub fn check_antipode(h: &HopfPresentation, degree_bound: u32, seed: u64) -> Report {
    let mut report = Report::new("antipode");
    if let Err(e) = run_antipode(h, degree_bound, seed, &mut report) {
        report.record_violation("antipode evaluation error", "-", e.to_string(), "-");
    }
    report
}

fn run_antipode(
    h: &HopfPresentation,
    degree_bound: u32,
    seed: u64,
    report: &mut Report,
) -> Result<(), HopfError> {
    let base = h.base();
    let gens = base.generators();
    let field = base.field();
    let pool = enumerate_monomials(gens, degree_bound);
    let of = |m: &Monomial| Element::from_monomial(gens.clone(), m.clone(), Scalar::one(field));

    for m in &pool {
        let a = of(m);
        let eta_eps = Element::scalar(gens.clone(), h.counit(&a)?);
        report.check_eq("antipode identity (left)", &a, &convolve_antipode_left(h, &a)?, &eta_eps);
        report.check_eq(
            "antipode identity (right)",
            &a,
            &convolve_antipode_right(h, &a)?,
            &eta_eps,
        );
        report.check_eq("antipode involution", &a, &h.antipode(&h.antipode(&a)?)?, &a);
        report.check_eq(
            "antipode commutes with the differential",
            &a,
            &base.differential(&h.antipode(&a)?)?,
            &h.antipode(&base.differential(&a)?)?,
        );
        report.check_eq("counit is antipode stable", &a, &h.counit(&h.antipode(&a)?)?, &h.counit(&a)?);
        let (left, right) = sweedler_obstruction(h, &a)?;
        report.record_check();
        if left.is_zero() != right.is_zero() {
            report.record_violation(
                "obstruction equivalence",
                &a,
                format!("{left}"),
                format!("{right}"),
            );
        }
    }
    report.check_eq("antipode fixes the unit", "1", &h.antipode(&base.one())?, &base.one());

    let pair_law = |a: &Element, b: &Element, report: &mut Report| -> Result<(), HopfError> {
        let (Some(da), Some(db)) = (degree_of(a), degree_of(b)) else {
            return Ok(());
        };
        // S({a, b}) = (-1)^(|a||b|) {S(b), S(a)}
        let lhs = h.antipode(&base.bracket(a, b)?)?;
        let rhs = base.bracket(&h.antipode(b)?, &h.antipode(a)?)?;
        let rhs = if koszul_parity(da, db) { rhs.neg() } else { rhs };
        report.check_eq("antipode bracket rule", format!("({a}, {b})"), &lhs, &rhs);
        Ok(())
    };
    for mi in &pool {
        for mj in &pool {
            if mi.total_exponent() + mj.total_exponent() > degree_bound as u64 {
                continue;
            }
            pair_law(&of(mi), &of(mj), report)?;
        }
    }
    let mut rng = SampleRng::new(seed);
    let groups = group_by_degree(gens, &pool);
    for _ in 0..RANDOM_PAIRS {
        let a = random_homogeneous_element(&mut rng, gens, field, &groups, 2);
        let b = random_homogeneous_element(&mut rng, gens, field, &groups, 2);
        pair_law(&a, &b, report)?;
    }
    Ok(())
}

fn degree_of(a: &Element) -> Option<i64> {
    match a.homogeneous_degree() {
        gca_core::Homogeneity::Degree(d) => Some(d),
        gca_core::Homogeneity::Any => Some(0),
        gca_core::Homogeneity::Mixed => None,
    }
}
