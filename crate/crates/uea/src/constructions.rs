//! Functoriality of the enveloping construction: tensor products, opposite
//! algebras and induced morphisms, each with a certification routine that
//! verifies the structural claim on the actual rule sets.

use dg_poisson::{
    enumerate_monomials, tensor_bracket, MorphismSpec, Report, TensorPresentation,
};
use gca_core::{koszul_parity, GenId, Monomial, Scalar, TensorElement};

use crate::check::rule_instances;
use crate::maps::{monomial_element, NcTensor};
use crate::rewrite::{build_uea, RewriteSystem, UeaError};
use crate::word::{Letter, NcElement, NcWord};

/// The enveloping algebra of a tensor product, as the joint rewrite system on
/// the union alphabet, together with the factor pair maps into
/// `A^e (x) B^e`.
#[derive(Clone, Debug)]
pub struct TensorUea {
    pub joint: RewriteSystem,
    pub factors: TensorPresentation,
    left: RewriteSystem,
    right: RewriteSystem,
}

/// Builds the enveloping algebra of `tensor_presentation(A, B)` from the two
/// factor systems.
pub fn tensor_uea(ra: &RewriteSystem, rb: &RewriteSystem) -> Result<TensorUea, UeaError> {
    let factors = dg_poisson::tensor_presentation(ra.source(), rb.source())?;
    let joint = build_uea(factors.joint.clone(), None)?;
    Ok(TensorUea { joint, factors, left: ra.clone(), right: rb.clone() })
}

impl TensorUea {
    /// The pair map `m_A (x) m_B` applied to a tensor element.
    pub fn pair_m(&self, t: &TensorElement) -> Result<NcTensor, UeaError> {
        let field = self.left.source().field();
        let lg = self.left.source().generators().clone();
        let rg = self.right.source().generators().clone();
        let mut out = NcTensor::zero(lg.clone(), rg.clone(), field);
        for ((l, r), c) in t.terms() {
            let ml = self.left.map_m(&monomial_element(&lg, field, l))?;
            let mr = self.right.map_m(&monomial_element(&rg, field, r))?;
            out = out.add(&NcTensor::of(&ml, &mr)?.scale(c))?;
        }
        Ok(out)
    }

    /// The pair map `m_A (x) h_B + (-1)^(p|b|) h_A (x) m_B`.
    pub fn pair_h(&self, t: &TensorElement) -> Result<NcTensor, UeaError> {
        let field = self.left.source().field();
        let p = self.left.source().bracket_degree();
        let lg = self.left.source().generators().clone();
        let rg = self.right.source().generators().clone();
        let mut out = NcTensor::zero(lg.clone(), rg.clone(), field);
        for ((l, r), c) in t.terms() {
            let le = monomial_element(&lg, field, l);
            let re = monomial_element(&rg, field, r);
            let first = NcTensor::of(&self.left.map_m(&le)?, &self.right.map_h(&re)?)?;
            let second = NcTensor::of(&self.left.map_h(&le)?, &self.right.map_m(&re)?)?;
            let sign = Scalar::sign(field, koszul_parity(p, r.degree(&rg)?));
            out = out.add(&first.add(&second.scale(&sign))?.scale(c))?;
        }
        Ok(out)
    }

    /// Verifies the defining identities for the pair maps on generator-level
    /// tensors and all monomial tensor pairs within the bound.
    pub fn check_pair_identities(&self, degree_bound: u32) -> Report {
        let mut report = Report::new("tensor pair maps");
        if let Err(e) = self.run_pair_identities(degree_bound, &mut report) {
            report.record_violation("uea evaluation error", "-", e.to_string(), "-");
        }
        report
    }

    fn run_pair_identities(&self, degree_bound: u32, report: &mut Report) -> Result<(), UeaError> {
        let pa = self.left.source();
        let pb = self.right.source();
        let field = pa.field();
        let p = pa.bracket_degree();
        let la = enumerate_monomials(pa.generators(), degree_bound);
        let lb = enumerate_monomials(pb.generators(), degree_bound);
        let mut tensors: Vec<(TensorElement, i64, u64)> = Vec::new();
        for ma in &la {
            for mb in &lb {
                let size = ma.total_exponent() + mb.total_exponent();
                if size > degree_bound as u64 {
                    continue;
                }
                let t = TensorElement::of(
                    &monomial_element(pa.generators(), field, ma),
                    &monomial_element(pb.generators(), field, mb),
                )?;
                let degree = ma.degree(pa.generators())? + mb.degree(pb.generators())?;
                tensors.push((t, degree, size));
            }
        }
        for (s, ds, es) in &tensors {
            for (t, dt, et) in &tensors {
                if es + et > degree_bound as u64 {
                    continue;
                }
                let witness = format!("({s}, {t})");
                let alpha_s = self.pair_m(s)?;
                let alpha_t = self.pair_m(t)?;
                let beta_s = self.pair_h(s)?;
                let beta_t = self.pair_h(t)?;
                let mul = |x: &NcTensor, y: &NcTensor| x.mul(&self.left, &self.right, y);

                // alpha({s,t}) = beta(s) alpha(t) - (-1)^((|s|+p)|t|) alpha(t) beta(s)
                let lhs = self.pair_m(&tensor_bracket(pa, pb, s, t)?)?;
                let rhs = mul(&beta_s, &alpha_t)?.sub(
                    &mul(&alpha_t, &beta_s)?
                        .scale(&Scalar::sign(field, koszul_parity(ds + p, *dt))),
                )?;
                report.check_eq("tensor algebra-map bracket identity", &witness, &lhs, &rhs);

                // beta(st) = alpha(s) beta(t) + (-1)^(|s||t|) alpha(t) beta(s)
                let lhs = self.pair_h(&s.mul(t)?)?;
                let rhs = mul(&alpha_s, &beta_t)?.add(
                    &mul(&alpha_t, &beta_s)?.scale(&Scalar::sign(field, koszul_parity(*ds, *dt))),
                )?;
                report.check_eq("tensor Lie-map product identity", &witness, &lhs, &rhs);

                // beta({s,t}) = beta(s) beta(t) - (-1)^((|s|+p)(|t|+p)) beta(t) beta(s)
                let lhs = self.pair_h(&tensor_bracket(pa, pb, s, t)?)?;
                let rhs = mul(&beta_s, &beta_t)?.sub(
                    &mul(&beta_t, &beta_s)?
                        .scale(&Scalar::sign(field, koszul_parity(ds + p, dt + p))),
                )?;
                report.check_eq("tensor Lie-map bracket identity", &witness, &lhs, &rhs);
            }
        }
        Ok(())
    }

    fn embed_letter(&self, side: Side, l: Letter) -> Letter {
        let map = |g: GenId| match side {
            Side::Left => self.factors.left_id(g),
            Side::Right => self.factors.right_id(g),
        };
        match l {
            Letter::M(g) => Letter::M(map(g)),
            Letter::H(g) => Letter::H(map(g)),
        }
    }

    fn embed_nc(&self, side: Side, e: &NcElement) -> NcElement {
        let mut out = self.joint.zero();
        for (w, c) in e.terms() {
            let letters = w.letters().iter().map(|&l| self.embed_letter(side, l)).collect();
            out.add_term(NcWord::from_letters(letters), c.clone());
        }
        out
    }

    /// Certifies that the joint rule set is the tensor of the factor rule
    /// sets: embedded factor rules reduce identically, and all cross-pair
    /// rules are pure Koszul swaps with no correction term.
    pub fn certify_structure(&self) -> Report {
        let mut report = Report::new("tensor structure");
        if let Err(e) = self.run_certify(&mut report) {
            report.record_violation("uea evaluation error", "-", e.to_string(), "-");
        }
        report
    }

    fn run_certify(&self, report: &mut Report) -> Result<(), UeaError> {
        // embedded factor rules
        for (side, sys) in [(Side::Left, &self.left), (Side::Right, &self.right)] {
            for lhs in rule_instances(sys)? {
                let embedded_lhs = self.embed_nc(side, &sys.word_element(lhs.clone()));
                let factor_nf = self.embed_nc(side, &sys.normal_form(&sys.word_element(lhs))?);
                let joint_nf = self.joint.normal_form(&embedded_lhs)?;
                report.check_eq(
                    "embedded factor rule agrees",
                    &embedded_lhs,
                    &joint_nf,
                    &factor_nf,
                );
            }
        }
        // cross pairs reduce by pure swaps
        let la: Vec<GenId> = self.left.source().generators().ids().collect();
        let lb: Vec<GenId> = self.right.source().generators().ids().collect();
        let joint_gens = self.joint.source().generators();
        let field = self.joint.source().field();
        let p = self.joint.source().bracket_degree();
        let cross = |x: Letter, y: Letter, report: &mut Report| -> Result<(), UeaError> {
            let w = NcWord::from_letters(vec![x, y]);
            let nf = self.joint.normal_form(&self.joint.word_element(w.clone()))?;
            let dx = joint_gens.degree(x.generator())?;
            let dy = joint_gens.degree(y.generator())?;
            let parity = match (x.is_h(), y.is_h()) {
                (false, false) => koszul_parity(dx, dy),
                (true, false) => koszul_parity(dx + p, dy),
                (true, true) => koszul_parity(dx + p, dy + p),
                (false, true) => unreachable!("m before h is already normal"),
            };
            let swapped = self.joint.word_element(NcWord::from_letters(vec![y, x]));
            let expected = swapped.scale(&Scalar::sign(field, parity));
            report.check_eq(
                "cross rule is a pure Koszul swap",
                self.joint.word_element(w),
                &nf,
                &expected,
            );
            Ok(())
        };
        for &i in &la {
            for &j in &lb {
                let li = self.factors.left_id(i);
                let rj = self.factors.right_id(j);
                // right letters precede left letters in the redex so the rule fires
                cross(Letter::M(rj), Letter::M(li), report)?;
                cross(Letter::H(rj), Letter::M(li), report)?;
                cross(Letter::H(li), Letter::M(rj), report)?;
                cross(Letter::H(rj), Letter::H(li), report)?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy)]
enum Side {
    Left,
    Right,
}

/// The enveloping algebra of the opposite presentation.
pub fn opposite_uea(r: &RewriteSystem) -> Result<RewriteSystem, UeaError> {
    let hopf = match r.hopf() {
        Some(h) => Some(h.opposite()?),
        None => None,
    };
    build_uea(r.source().opposite(), hopf)
}

/// Reverses a word with the Koszul sign of the full reversal.
fn reverse_with_sign(sys: &RewriteSystem, w: &NcWord) -> Result<(bool, NcWord), UeaError> {
    let gens = sys.source().generators();
    let mut odd_seen = 0u64;
    let mut parity = false;
    for l in w.letters() {
        if gens.degree(l.generator())?.rem_euclid(2) == 1 {
            if odd_seen % 2 == 1 {
                parity = !parity;
            }
            odd_seen += 1;
        }
    }
    let letters: Vec<Letter> = w.letters().iter().rev().copied().collect();
    Ok((parity, NcWord::from_letters(letters)))
}

/// The algebra map from the opposite enveloping algebra onto reversed
/// products in the original one.
fn reversal_image(sys: &RewriteSystem, e: &NcElement) -> Result<NcElement, UeaError> {
    let mut out = sys.zero();
    for (w, c) in e.terms() {
        let (parity, rev) = reverse_with_sign(sys, w)?;
        let sign = Scalar::sign(sys.source().field(), parity);
        let nf = sys.normal_form(&sys.word_element(rev))?;
        out = out.add(&nf.scale(&c.mul(&sign)))?;
    }
    Ok(out)
}

/// Certifies that the opposite enveloping algebra coincides with the original
/// one under Koszul-signed product reversal: the reversal image respects
/// every rewrite rule of the opposite system.
pub fn certify_opposite(r: &RewriteSystem, r_op: &RewriteSystem) -> Report {
    let mut report = Report::new("opposite structure");
    let mut run = || -> Result<(), UeaError> {
        for lhs in rule_instances(r_op)? {
            let lhs_elem = r_op.word_element(lhs);
            let rhs = r_op.normal_form(&lhs_elem)?;
            report.check_eq(
                "reversal respects the opposite rule",
                &lhs_elem,
                &reversal_image(r, &lhs_elem)?,
                &reversal_image(r, &rhs)?,
            );
        }
        Ok(())
    };
    if let Err(e) = run() {
        report.record_violation("uea evaluation error", "-", e.to_string(), "-");
    }
    report
}

/// The enveloping-algebra morphism induced by a DG Poisson morphism:
/// `m(g) -> m(phi g)`, `h(g) -> h(phi g)`, extended multiplicatively.
#[derive(Clone, Debug)]
pub struct InducedMorphism {
    source: RewriteSystem,
    target: RewriteSystem,
    spec: MorphismSpec,
}

/// Precondition: the underlying map passes the DG Poisson morphism check at
/// the given bound.
pub fn induced_morphism(
    ra: &RewriteSystem,
    rb: &RewriteSystem,
    spec: MorphismSpec,
    check_bound: u32,
) -> Result<InducedMorphism, UeaError> {
    if spec.source() != ra.source() || spec.target() != rb.source() {
        return Err(UeaError::MorphismRejected);
    }
    if !spec.check(check_bound).passed() {
        return Err(UeaError::MorphismRejected);
    }
    Ok(InducedMorphism { source: ra.clone(), target: rb.clone(), spec })
}

impl InducedMorphism {
    pub fn letter_image(&self, l: Letter) -> Result<NcElement, UeaError> {
        let g = monomial_element(
            self.source.source().generators(),
            self.source.source().field(),
            &Monomial::generator(l.generator()),
        );
        let image = self.spec.apply(&g)?;
        match l {
            Letter::M(_) => self.target.map_m(&image),
            Letter::H(_) => self.target.map_h(&image),
        }
    }

    /// Letter-wise multiplicative application, normalized in the target.
    pub fn apply(&self, e: &NcElement) -> Result<NcElement, UeaError> {
        let mut out = self.target.zero();
        for (w, c) in e.terms() {
            let mut acc = self.target.one();
            for &l in w.letters() {
                acc = acc.concat(&self.letter_image(l)?)?;
            }
            out = out.add(&acc.scale(c))?;
        }
        self.target.normal_form(&out)
    }

    /// Verifies the map respects every rewrite rule of the source system.
    pub fn verify_rules(&self) -> Report {
        let mut report = Report::new("induced morphism");
        let mut run = || -> Result<(), UeaError> {
            for lhs in rule_instances(&self.source)? {
                let lhs_elem = self.source.word_element(lhs);
                let rhs = self.source.normal_form(&lhs_elem)?;
                report.check_eq(
                    "induced map respects rewriting",
                    &lhs_elem,
                    &self.apply(&lhs_elem)?,
                    &self.apply(&rhs)?,
                );
            }
            Ok(())
        };
        if let Err(e) = run() {
            report.record_violation("uea evaluation error", "-", e.to_string(), "-");
        }
        report
    }
}
