//! Bounded verification of the DG Poisson axioms.
//!
//! The structures are infinite dimensional, so the sweep is bounded: binary
//! laws run over all monomial pairs whose combined exponent total stays within
//! the bound, ternary laws over all such triples (generator triples are always
//! included), and every law is additionally exercised on seeded random
//! homogeneous elements. The bound and seed are recorded by the caller in the
//! report parameters.

use gca_core::{koszul_parity, Element, Monomial, Scalar};

use crate::presentation::{PoissonError, PoissonPresentation};
use crate::report::Report;
use crate::sample::{
    enumerate_monomials, group_by_degree, random_homogeneous_element, SampleRng,
};

const RANDOM_PAIRS: usize = 60;
const RANDOM_TRIPLES: usize = 40;

/// Verifies graded antisymmetry, the graded Jacobi identity, the biderivation
/// property, bracket/differential compatibility, the Leibniz rule and
/// `d^2 = 0` up to the bound. Violations are data, not errors.
pub fn check_poisson_axioms(p: &PoissonPresentation, degree_bound: u32, seed: u64) -> Report {
    let mut report = Report::new("poisson axioms");
    if let Err(e) = run(p, degree_bound, seed, &mut report) {
        report.record_violation("axiom evaluation error", "-", e.to_string(), "-");
    }
    report
}

fn run(
    p: &PoissonPresentation,
    degree_bound: u32,
    seed: u64,
    report: &mut Report,
) -> Result<(), PoissonError> {
    let gens = p.generators();
    let field = p.field();
    let pool = enumerate_monomials(gens, degree_bound);
    let of = |m: &Monomial| Element::from_monomial(gens.clone(), m.clone(), Scalar::one(field));

    // unary sweep
    for m in &pool {
        let a = of(m);
        let dda = p.differential(&p.differential(&a)?)?;
        report.check_eq("differential squares to zero", &a, &dda, &p.zero());
    }

    // binary sweep
    for mi in &pool {
        for mj in &pool {
            if mi.total_exponent() + mj.total_exponent() > degree_bound as u64 {
                continue;
            }
            let a = of(mi);
            let b = of(mj);
            check_pair_laws(p, &a, &b, report)?;
        }
    }

    // ternary sweep: generator triples always, monomial triples within the
    // combined bound
    let gen_monos: Vec<Monomial> = gens.ids().map(Monomial::generator).collect();
    for ma in &gen_monos {
        for mb in &gen_monos {
            for mc in &gen_monos {
                check_triple_laws(p, &of(ma), &of(mb), &of(mc), report)?;
            }
        }
    }
    for ma in &pool {
        for mb in &pool {
            if ma.total_exponent() + mb.total_exponent() > degree_bound as u64 {
                continue;
            }
            for mc in &pool {
                let total =
                    ma.total_exponent() + mb.total_exponent() + mc.total_exponent();
                if total > degree_bound as u64 {
                    continue;
                }
                if [ma, mb, mc].iter().all(|m| m.total_exponent() == 1) {
                    continue; // already covered by the generator sweep
                }
                check_triple_laws(p, &of(ma), &of(mb), &of(mc), report)?;
            }
        }
    }

    // seeded random homogeneous elements
    let mut rng = SampleRng::new(seed);
    let groups = group_by_degree(gens, &pool);
    for _ in 0..RANDOM_PAIRS {
        let a = random_homogeneous_element(&mut rng, gens, field, &groups, 3);
        let b = random_homogeneous_element(&mut rng, gens, field, &groups, 3);
        check_pair_laws(p, &a, &b, report)?;
    }
    for _ in 0..RANDOM_TRIPLES {
        let a = random_homogeneous_element(&mut rng, gens, field, &groups, 2);
        let b = random_homogeneous_element(&mut rng, gens, field, &groups, 2);
        let c = random_homogeneous_element(&mut rng, gens, field, &groups, 2);
        check_triple_laws(p, &a, &b, &c, report)?;
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

fn check_pair_laws(
    p: &PoissonPresentation,
    a: &Element,
    b: &Element,
    report: &mut Report,
) -> Result<(), PoissonError> {
    let (Some(da), Some(db)) = (degree_of(a), degree_of(b)) else {
        return Ok(());
    };
    let pb = p.bracket_degree();

    // {a, b} = -(-1)^((|a|+p)(|b|+p)) {b, a}
    let lhs = p.bracket(a, b)?;
    let rev = p.bracket(b, a)?;
    let rhs = if koszul_parity(da + pb, db + pb) { rev } else { rev.neg() };
    report.check_eq("graded antisymmetry", format!("({a}, {b})"), &lhs, &rhs);

    // d({a, b}) = {d(a), b} + (-1)^(|a|+p) {a, d(b)}
    let lhs = p.differential(&p.bracket(a, b)?)?;
    let first = p.bracket(&p.differential(a)?, b)?;
    let second = p.bracket(a, &p.differential(b)?)?;
    let second = if (da + pb).rem_euclid(2) == 1 { second.neg() } else { second };
    report.check_eq(
        "differential bracket compatibility",
        format!("({a}, {b})"),
        &lhs,
        &first.add(&second)?,
    );

    // d(a b) = d(a) b + (-1)^(|a|) a d(b)
    let lhs = p.differential(&a.mul(b)?)?;
    let first = p.differential(a)?.mul(b)?;
    let second = a.mul(&p.differential(b)?)?;
    let second = if da.rem_euclid(2) == 1 { second.neg() } else { second };
    report.check_eq("Leibniz rule", format!("({a}, {b})"), &lhs, &first.add(&second)?);
    Ok(())
}

fn check_triple_laws(
    p: &PoissonPresentation,
    a: &Element,
    b: &Element,
    c: &Element,
    report: &mut Report,
) -> Result<(), PoissonError> {
    let (Some(da), Some(db), Some(_)) = (degree_of(a), degree_of(b), degree_of(c)) else {
        return Ok(());
    };
    let pb = p.bracket_degree();

    // {a, {b, c}} = {{a, b}, c} + (-1)^((|a|+p)(|b|+p)) {b, {a, c}}
    let lhs = p.bracket(a, &p.bracket(b, c)?)?;
    let first = p.bracket(&p.bracket(a, b)?, c)?;
    let second = p.bracket(b, &p.bracket(a, c)?)?;
    let second = if koszul_parity(da + pb, db + pb) { second.neg() } else { second };
    report.check_eq(
        "graded Jacobi identity",
        format!("({a}, {b}, {c})"),
        &lhs,
        &first.add(&second)?,
    );

    // {a, b c} = {a, b} c + (-1)^((|a|+p)|b|) b {a, c}
    let lhs = p.bracket(a, &b.mul(c)?)?;
    let first = p.bracket(a, b)?.mul(c)?;
    let second = b.mul(&p.bracket(a, c)?)?;
    let second = if koszul_parity(da + pb, db) { second.neg() } else { second };
    report.check_eq(
        "bracket biderivation",
        format!("({a}, {b}, {c})"),
        &lhs,
        &first.add(&second)?,
    );
    Ok(())
}
