//! Verification suites for the enveloping algebra: the defining identities of
//! the (m, h) pair, bounded local confluence of the rewrite rules, and the
//! lifted DG bialgebra/Hopf structure.

use dg_poisson::{
    enumerate_monomials, group_by_degree, random_homogeneous_element, Report, SampleRng,
};
use gca_core::{koszul_parity, Element, GenId, Homogeneity, Scalar};
use hopf::sweedler_obstruction;

use crate::maps::{
    coassoc_left, coassoc_right, convolve_antipode_left, convolve_antipode_right,
    counit_contract_left, counit_contract_right, monomial_element, tensor_differential_e,
};
use crate::rewrite::{Redex, RewriteSystem, UeaError};
use crate::word::{Letter, NcWord};

const RANDOM_PAIRS: usize = 200;

fn degree_of(a: &Element) -> Option<i64> {
    match a.homogeneous_degree() {
        Homogeneity::Degree(d) => Some(d),
        Homogeneity::Any => Some(0),
        Homogeneity::Mixed => None,
    }
}

/// Verifies, after normalization, the two defining identities of the pair
/// `(m, h)`, the Lie-map law for `h`, and naturality of `d^e` with respect to
/// both embeddings; also sweeps `d^e d^e = 0` over words up to the bound.
pub fn check_defining_identities(sys: &RewriteSystem, degree_bound: u32, seed: u64) -> Report {
    let mut report = Report::new("uea defining identities");
    if let Err(e) = run_defining(sys, degree_bound, seed, &mut report) {
        report.record_violation("uea evaluation error", "-", e.to_string(), "-");
    }
    report
}

fn run_defining(
    sys: &RewriteSystem,
    degree_bound: u32,
    seed: u64,
    report: &mut Report,
) -> Result<(), UeaError> {
    let source = sys.source();
    let gens = source.generators();
    let field = source.field();
    let p = source.bracket_degree();

    let pair_laws = |a: &Element, b: &Element, report: &mut Report| -> Result<(), UeaError> {
        let (Some(da), Some(db)) = (degree_of(a), degree_of(b)) else {
            return Ok(());
        };
        let witness = format!("({a}, {b})");
        let ma = sys.map_m(a)?;
        let mb = sys.map_m(b)?;
        let ha = sys.map_h(a)?;
        let hb = sys.map_h(b)?;

        // m({a,b}) = h(a) m(b) - (-1)^((|a|+p)|b|) m(b) h(a)
        let lhs = sys.map_m(&source.bracket(a, b)?)?;
        let rhs = sys.mul(&ha, &mb)?.sub(
            &sys.mul(&mb, &ha)?.scale(&Scalar::sign(field, koszul_parity(da + p, db))),
        )?;
        report.check_eq("algebra-map bracket identity", &witness, &lhs, &rhs);

        // h(ab) = m(a) h(b) + (-1)^(|a||b|) m(b) h(a)
        let lhs = sys.map_h(&a.mul(b)?)?;
        let rhs = sys.mul(&ma, &hb)?.add(
            &sys.mul(&mb, &ha)?.scale(&Scalar::sign(field, koszul_parity(da, db))),
        )?;
        report.check_eq("Lie-map product identity", &witness, &lhs, &rhs);

        // h({a,b}) = [h(a), h(b)] = h(a)h(b) - (-1)^((|a|+p)(|b|+p)) h(b)h(a)
        let lhs = sys.map_h(&source.bracket(a, b)?)?;
        let rhs = sys.mul(&ha, &hb)?.sub(
            &sys.mul(&hb, &ha)?.scale(&Scalar::sign(field, koszul_parity(da + p, db + p))),
        )?;
        report.check_eq("Lie-map bracket identity", &witness, &lhs, &rhs);
        Ok(())
    };

    let unary_laws = |a: &Element, report: &mut Report| -> Result<(), UeaError> {
        let lhs = sys.d_e(&sys.map_m(a)?)?;
        let rhs = sys.map_m(&source.differential(a)?)?;
        report.check_eq("differential naturality for m", format!("{a}"), &lhs, &rhs);
        let lhs = sys.d_e(&sys.map_h(a)?)?;
        let rhs = sys.map_h(&source.differential(a)?)?;
        report.check_eq("differential naturality for h", format!("{a}"), &lhs, &rhs);
        Ok(())
    };

    // generator pairs, then all monomial pairs within the combined bound
    let pool = enumerate_monomials(gens, degree_bound);
    let of = |m: &gca_core::Monomial| monomial_element(gens, field, m);
    for i in gens.ids() {
        for j in gens.ids() {
            pair_laws(&source.generator_element(i)?, &source.generator_element(j)?, report)?;
        }
    }
    for mi in &pool {
        unary_laws(&of(mi), report)?;
        for mj in &pool {
            if mi.total_exponent() + mj.total_exponent() > degree_bound as u64 {
                continue;
            }
            if mi.total_exponent() == 1 && mj.total_exponent() == 1 {
                continue; // generator pairs already done
            }
            pair_laws(&of(mi), &of(mj), report)?;
        }
    }

    // seeded random homogeneous pairs
    let mut rng = SampleRng::new(seed);
    let groups = group_by_degree(gens, &pool);
    for _ in 0..RANDOM_PAIRS {
        let a = random_homogeneous_element(&mut rng, gens, field, &groups, 3);
        let b = random_homogeneous_element(&mut rng, gens, field, &groups, 3);
        pair_laws(&a, &b, report)?;
    }

    // d^e squares to zero on all words up to the bound
    for w in sys.enumerate_words(0, degree_bound as usize) {
        let e = sys.word_element(w);
        let dd = sys.d_e(&sys.d_e(&e)?)?;
        report.check_eq("lifted differential squares to zero", &e, &dd, &sys.zero());
    }
    Ok(())
}

/// All single-step reductions of a word, one per redex position. Swap rules
/// and correction rules act at letter pairs; annihilating rules collapse the
/// word.
fn one_step_reductions(
    sys: &RewriteSystem,
    w: &NcWord,
) -> Result<Vec<crate::word::NcElement>, UeaError> {
    let mut out = Vec::new();
    let letters = w.letters();
    for k in 0..letters.len().saturating_sub(1) {
        let sub = NcWord::from_letters(letters[k..].to_vec());
        match sys.find_redex(&sub)? {
            Some(Redex::ReplacePair { pos: 0, replacement }) => {
                let mut spliced = sys.zero();
                for (mid, c) in replacement.terms() {
                    let mut word = Vec::new();
                    word.extend_from_slice(&letters[..k]);
                    word.extend_from_slice(mid.letters());
                    word.extend_from_slice(&letters[k + 2..]);
                    spliced.add_term(NcWord::from_letters(word), c.clone());
                }
                out.push(spliced);
            }
            Some(Redex::Annihilate) => out.push(sys.zero()),
            _ => {}
        }
    }
    Ok(out)
}

/// Local confluence on all words up to the length bound: every pair of
/// distinct one-step reducts of a word must reach the same normal form.
pub fn check_confluence(sys: &RewriteSystem, overlap_length_bound: u32) -> Report {
    let mut report = Report::new("uea confluence");
    if let Err(e) = run_confluence(sys, overlap_length_bound, &mut report) {
        report.record_violation("uea evaluation error", "-", e.to_string(), "-");
    }
    report
}

fn run_confluence(
    sys: &RewriteSystem,
    bound: u32,
    report: &mut Report,
) -> Result<(), UeaError> {
    for w in sys.enumerate_words(2, bound as usize) {
        let reducts = one_step_reductions(sys, &w)?;
        if reducts.len() < 2 {
            if !reducts.is_empty() {
                report.record_check();
            }
            continue;
        }
        let forms = reducts
            .iter()
            .map(|e| sys.normal_form(e))
            .collect::<Result<Vec<_>, _>>()?;
        for i in 1..forms.len() {
            report.record_check();
            if forms[i] != forms[0] {
                report.record_violation(
                    "joinable critical pair",
                    sys.word_element(w.clone()),
                    &forms[0],
                    &forms[i],
                );
            }
        }
    }
    Ok(())
}

/// Rule instances as words, for well-definedness sweeps: every generator-pair
/// redex plus the square and truncation patterns.
pub(crate) fn rule_instances(sys: &RewriteSystem) -> Result<Vec<NcWord>, UeaError> {
    let gens = sys.source().generators();
    let p = sys.source().bracket_degree();
    let mut out = Vec::new();
    let ids: Vec<GenId> = gens.ids().collect();
    for &i in &ids {
        for &j in &ids {
            if i > j {
                out.push(NcWord::from_letters(vec![Letter::M(i), Letter::M(j)]));
                out.push(NcWord::from_letters(vec![Letter::H(i), Letter::H(j)]));
            }
            out.push(NcWord::from_letters(vec![Letter::H(i), Letter::M(j)]));
        }
        if gens.is_odd(i)? {
            out.push(NcWord::from_letters(vec![Letter::M(i), Letter::M(i)]));
        }
        if (gens.degree(i)? + p).rem_euclid(2) == 1 {
            out.push(NcWord::from_letters(vec![Letter::H(i), Letter::H(i)]));
        }
        if let Some(n) = gens.truncation(i)? {
            out.push(NcWord::from_letters(vec![Letter::M(i); n as usize]));
            if !sys.source().field().characteristic_divides(n as u64) && !gens.is_odd(i)? {
                let mut letters = vec![Letter::M(i); (n - 1) as usize];
                letters.push(Letter::H(i));
                out.push(NcWord::from_letters(letters));
            }
        }
    }
    Ok(out)
}

/// Verifies that the lifted maps are well defined on the rewrite relations,
/// that `A^e` is a DG bialgebra at the bound, and that the antipode
/// convolution identities hold exactly where the Sweedler obstruction
/// vanishes, cross-checked against the bracket residual on `h`-letters.
pub fn check_hopf_e(sys: &RewriteSystem, word_length_bound: u32) -> Report {
    let mut report = Report::new("uea hopf structure");
    if let Err(e) = run_hopf_e(sys, word_length_bound, &mut report) {
        report.record_violation("uea evaluation error", "-", e.to_string(), "-");
    }
    report
}

fn run_hopf_e(sys: &RewriteSystem, bound: u32, report: &mut Report) -> Result<(), UeaError> {
    let hopf = sys.require_hopf()?.clone();
    let field = sys.source().field();

    // (a) well-definedness: each lifted map agrees on both sides of every rule
    for lhs_word in rule_instances(sys)? {
        let lhs = sys.word_element(lhs_word);
        let rhs = sys.normal_form(&lhs)?;
        report.check_eq(
            "lifted coproduct respects rewriting",
            &lhs,
            &sys.coproduct_e(&lhs)?,
            &sys.coproduct_e(&rhs)?,
        );
        report.check_eq(
            "lifted counit respects rewriting",
            &lhs,
            &sys.counit_e(&lhs)?,
            &sys.counit_e(&rhs)?,
        );
        report.check_eq(
            "lifted antipode respects rewriting",
            &lhs,
            &sys.antipode_e(&lhs)?,
            &sys.antipode_e(&rhs)?,
        );
        report.check_eq(
            "lifted differential respects rewriting",
            &lhs,
            &sys.d_e(&lhs)?,
            &sys.d_e(&rhs)?,
        );
    }

    // (b) DG bialgebra laws on all words at the bound
    for w in sys.enumerate_words(0, bound as usize) {
        let e = sys.word_element(w);
        let delta = sys.coproduct_e(&e)?;
        report.check_eq(
            "lifted coassociativity",
            &e,
            &coassoc_left(sys, &delta)?,
            &coassoc_right(sys, &delta)?,
        );
        let nf = sys.normal_form(&e)?;
        report.check_eq("lifted counit law (left)", &e, &counit_contract_left(sys, &delta)?, &nf);
        report.check_eq(
            "lifted counit law (right)",
            &e,
            &counit_contract_right(sys, &delta)?,
            &nf,
        );
        let lhs = sys.coproduct_e(&sys.d_e(&e)?)?;
        let rhs = tensor_differential_e(sys, &delta)?.normalized(sys, sys)?;
        report.check_eq("lifted coproduct coderivation law", &e, &lhs, &rhs);
        report.check_eq(
            "lifted counit kills the differential",
            &e,
            &sys.counit_e(&sys.d_e(&e)?)?,
            &Scalar::zero(field),
        );
    }

    // (c) antipode identities, with the bracket-residual cross-check on
    // h-letters: u^e(S^e (x) I) Delta^e h(a) - eta eps = m({S(a_(1)), a_(2)})
    for w in sys.enumerate_words(0, bound as usize) {
        let e = sys.word_element(w);
        let eta_eps = sys.one().scale(&sys.counit_e(&e)?);
        report.check_eq(
            "antipode identity",
            &e,
            &convolve_antipode_left(sys, &e)?,
            &eta_eps,
        );
        report.check_eq(
            "antipode identity (right)",
            &e,
            &convolve_antipode_right(sys, &e)?,
            &eta_eps,
        );
    }
    for g in sys.source().generators().ids() {
        let ge = sys.source().generator_element(g)?;
        let (left, right) = sweedler_obstruction(&hopf, &ge)?;
        let h_letter = sys.word_element(NcWord::single(Letter::H(g)));
        let residual_left = convolve_antipode_left(sys, &h_letter)?;
        report.check_eq(
            "left antipode residual equals the obstruction",
            &h_letter,
            &residual_left,
            &sys.map_m(&left)?,
        );
        let residual_right = convolve_antipode_right(sys, &h_letter)?;
        report.check_eq(
            "right antipode residual equals the obstruction",
            &h_letter,
            &residual_right,
            &sys.map_m(&right)?,
        );
    }
    Ok(())
}

/// Number of normal-form words of each length `0..=bound`.
pub fn pbw_count(sys: &RewriteSystem, length_bound: u32) -> Result<Vec<u64>, UeaError> {
    let mut counts = vec![0u64; length_bound as usize + 1];
    for w in sys.enumerate_words(0, length_bound as usize) {
        if sys.is_normal(&w)? {
            counts[w.len()] += 1;
        }
    }
    Ok(counts)
}

/// Graded-commutative monomial count on the doubled alphabet, per total
/// exponent: odd copies are squarefree, truncated m-copies stay below their
/// bound, h-copies of even generators are unbounded.
pub fn doubled_commutative_counts(sys: &RewriteSystem, length_bound: u32) -> Vec<u64> {
    let gens = sys.source().generators();
    let mut slot_caps: Vec<Option<u32>> = Vec::new();
    for g in gens.ids() {
        let odd = gens.is_odd(g).unwrap();
        let trunc = gens.truncation(g).unwrap();
        // m-copy
        slot_caps.push(if odd {
            Some(1)
        } else {
            trunc.map(|n| n - 1)
        });
        // h-copy
        slot_caps.push(if odd { Some(1) } else { None });
    }
    fn count(caps: &[Option<u32>], slot: usize, remaining: u32) -> u64 {
        if slot == caps.len() {
            return u64::from(remaining == 0);
        }
        let cap = caps[slot].unwrap_or(remaining).min(remaining);
        (0..=cap).map(|e| count(caps, slot + 1, remaining - e)).sum()
    }
    (0..=length_bound).map(|len| count(&slot_caps, 0, len)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewrite::build_uea;
    use hopf::catalog;

    #[test]
    fn dropped_r2_corrections_break_the_algebra_map_identity() {
        let mut sys = build_uea(catalog::heisenberg().unwrap(), None).unwrap();
        sys.zero_m_corrections();
        let report = check_defining_identities(&sys, 2, 0);
        assert!(!report.passed());
        let v = report
            .violations
            .iter()
            .find(|v| v.law == "algebra-map bracket identity")
            .expect("alpha identity violated");
        assert_eq!(v.witness, "(x1, x2)");
    }

    #[test]
    fn doubled_counts_on_one_even_generator() {
        let sys = build_uea(catalog::abelian(1).unwrap(), None).unwrap();
        assert_eq!(doubled_commutative_counts(&sys, 2), vec![1, 2, 3]);
    }
}
