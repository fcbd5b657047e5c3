//! The structure maps of `A^e`: the algebra embedding `m`, the Lie embedding
//! `h`, the lifted differential `d^e`, and (with Hopf data) the lifted
//! coproduct, counit and antipode determined on letters by
//!
//!   Delta^e m(g) = (m (x) m) Delta(g)
//!   Delta^e h(g) = (m (x) h + h (x) m) Delta(g)
//!   eps^e m(g)   = eps(g),   eps^e h(g) = 0
//!   S^e m(g)     = m(S(g)),  S^e h(g)   = h(S(g))
//!
//! and extended (anti-)multiplicatively with Koszul signs.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use gca_core::{
    fmt_terms, koszul_parity, tables_match, CoreError, Element, FieldSpec, GeneratorTable,
    Monomial, Scalar,
};

use crate::rewrite::{raw_map_h, raw_map_m, RewriteSystem, UeaError};
use crate::word::{fmt_word, Letter, NcElement, NcWord};

impl RewriteSystem {
    /// The DG algebra embedding: monomials to m-words, normalized.
    pub fn map_m(&self, a: &Element) -> Result<NcElement, UeaError> {
        self.check_element(a)?;
        self.normal_form(&raw_map_m(a)?)
    }

    /// The Lie embedding via the product rule, `h(1) = 0`, normalized.
    pub fn map_h(&self, a: &Element) -> Result<NcElement, UeaError> {
        self.check_element(a)?;
        self.normal_form(&raw_map_h(self.source(), a)?)
    }

    fn check_element(&self, a: &Element) -> Result<(), UeaError> {
        if !tables_match(a.table(), self.source().generators()) {
            return Err(CoreError::TableMismatch.into());
        }
        if a.field() != self.source().field() {
            return Err(CoreError::FieldMismatch.into());
        }
        Ok(())
    }

    fn letter_image_d(&self, l: Letter) -> Result<NcElement, UeaError> {
        let d = self.source().generator_differential(l.generator())?;
        match l {
            Letter::M(_) => Ok(raw_map_m(&d)?),
            Letter::H(_) => raw_map_h(self.source(), &d),
        }
    }

    /// The lifted differential: degree-1 derivation with `d^e m(g) = m(d g)`
    /// and `d^e h(g) = h(d g)`, normalized.
    pub fn d_e(&self, e: &NcElement) -> Result<NcElement, UeaError> {
        let gens = self.source().generators();
        let mut out = self.zero();
        for (w, c) in e.terms() {
            let letters = w.letters();
            let mut prefix_parity = false;
            for (i, &l) in letters.iter().enumerate() {
                let image = self.letter_image_d(l)?;
                if !image.is_zero() {
                    let prefix = NcWord::from_letters(letters[..i].to_vec());
                    let suffix = NcWord::from_letters(letters[i + 1..].to_vec());
                    let mut term = NcElement::from_word(
                        gens.clone(),
                        prefix,
                        Scalar::sign(self.source().field(), prefix_parity),
                    );
                    term = term.concat(&image)?;
                    term = term.concat(&self.word_element(suffix))?;
                    out = out.add(&term.scale(c))?;
                }
                prefix_parity ^= gens.degree(l.generator())?.rem_euclid(2) == 1;
            }
        }
        self.normal_form(&out)
    }

    /// Letter image of the lifted coproduct.
    fn letter_image_delta(&self, l: Letter) -> Result<NcTensor, UeaError> {
        let hopf = self.require_hopf()?;
        let gens = self.source().generators().clone();
        let field = self.source().field();
        let delta = hopf.generator_coproduct(l.generator())?;
        let mut out = NcTensor::zero(gens.clone(), gens.clone(), field);
        for ((lm, rm), c) in delta.terms() {
            let le = Element::from_monomial(gens.clone(), lm.clone(), Scalar::one(field));
            let re = Element::from_monomial(gens.clone(), rm.clone(), Scalar::one(field));
            match l {
                Letter::M(_) => {
                    let t = NcTensor::of(&self.map_m(&le)?, &self.map_m(&re)?)?;
                    out = out.add(&t.scale(c))?;
                }
                Letter::H(_) => {
                    let t = NcTensor::of(&self.map_m(&le)?, &self.map_h(&re)?)?
                        .add(&NcTensor::of(&self.map_h(&le)?, &self.map_m(&re)?)?)?;
                    out = out.add(&t.scale(c))?;
                }
            }
        }
        Ok(out)
    }

    /// The lifted coproduct, an algebra map into `A^e (x) A^e`.
    pub fn coproduct_e(&self, e: &NcElement) -> Result<NcTensor, UeaError> {
        let gens = self.source().generators().clone();
        let field = self.source().field();
        let mut out = NcTensor::zero(gens.clone(), gens.clone(), field);
        for (w, c) in e.terms() {
            let mut acc = NcTensor::one(gens.clone(), gens.clone(), field);
            for &l in w.letters() {
                acc = acc.mul(self, self, &self.letter_image_delta(l)?)?;
            }
            out = out.add(&acc.scale(c))?;
        }
        Ok(out)
    }

    /// The lifted counit: `eps` on m-letters, zero on h-letters.
    pub fn counit_e(&self, e: &NcElement) -> Result<Scalar, UeaError> {
        let hopf = self.require_hopf()?;
        let field = self.source().field();
        let mut out = Scalar::zero(field);
        for (w, c) in e.terms() {
            let mut v = c.clone();
            for &l in w.letters() {
                match l {
                    Letter::M(g) => v = v.mul(&hopf.generator_counit(g)?),
                    Letter::H(_) => v = Scalar::zero(field),
                }
                if v.is_zero() {
                    break;
                }
            }
            out = out.add(&v);
        }
        Ok(out)
    }

    fn letter_image_antipode(&self, l: Letter) -> Result<NcElement, UeaError> {
        let hopf = self.require_hopf()?;
        let s = hopf.generator_antipode(l.generator())?;
        match l {
            Letter::M(_) => self.map_m(s),
            Letter::H(_) => self.map_h(s),
        }
    }

    /// The lifted antipode: an algebra map into the opposite algebra, i.e.
    /// `S^e(uv) = (-1)^(|u||v|) S^e(v) S^e(u)`, normalized.
    pub fn antipode_e(&self, e: &NcElement) -> Result<NcElement, UeaError> {
        let gens = self.source().generators();
        let mut out = self.zero();
        for (w, c) in e.terms() {
            // the full reversal sign is (-1)^(#(odd pairs))
            let mut odd_seen = 0u64;
            let mut parity = false;
            for &l in w.letters() {
                if gens.degree(l.generator())?.rem_euclid(2) == 1 {
                    if odd_seen % 2 == 1 {
                        parity = !parity;
                    }
                    odd_seen += 1;
                }
            }
            let mut acc = self.one().scale(&Scalar::sign(self.source().field(), parity));
            for &l in w.letters().iter().rev() {
                acc = acc.concat(&self.letter_image_antipode(l)?)?;
            }
            out = out.add(&acc.scale(c))?;
        }
        self.normal_form(&out)
    }
}

/// Element of `A^e (x) B^e`: word pairs with Koszul-signed multiplication and
/// per-leg normalization.
#[derive(Clone, Debug)]
pub struct NcTensor {
    left: Arc<GeneratorTable>,
    right: Arc<GeneratorTable>,
    field: FieldSpec,
    terms: BTreeMap<(NcWord, NcWord), Scalar>,
}

impl PartialEq for NcTensor {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && tables_match(&self.left, &other.left)
            && tables_match(&self.right, &other.right)
            && self.terms == other.terms
    }
}

impl Eq for NcTensor {}

impl NcTensor {
    pub fn zero(left: Arc<GeneratorTable>, right: Arc<GeneratorTable>, field: FieldSpec) -> Self {
        NcTensor { left, right, field, terms: BTreeMap::new() }
    }

    pub fn one(left: Arc<GeneratorTable>, right: Arc<GeneratorTable>, field: FieldSpec) -> Self {
        let mut t = NcTensor::zero(left, right, field);
        t.add_term(NcWord::empty(), NcWord::empty(), Scalar::one(field));
        t
    }

    /// Elementary tensor of two word sums, extended bilinearly.
    pub fn of(a: &NcElement, b: &NcElement) -> Result<Self, UeaError> {
        if a.field() != b.field() {
            return Err(CoreError::FieldMismatch.into());
        }
        let mut t = NcTensor::zero(a.table().clone(), b.table().clone(), a.field());
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                t.add_term(wa.clone(), wb.clone(), ca.mul(cb));
            }
        }
        Ok(t)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(NcWord, NcWord), &Scalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, l: NcWord, r: NcWord, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let key = (l, r);
        match self.terms.remove(&key) {
            Some(old) => {
                let sum = old.add(&c);
                if !sum.is_zero() {
                    self.terms.insert(key, sum);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add(&self, other: &NcTensor) -> Result<NcTensor, UeaError> {
        self.check_compat(other)?;
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add_term(l.clone(), r.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &NcTensor) -> Result<NcTensor, UeaError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> NcTensor {
        NcTensor {
            left: self.left.clone(),
            right: self.right.clone(),
            field: self.field,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> NcTensor {
        if s.is_zero() {
            return NcTensor::zero(self.left.clone(), self.right.clone(), self.field);
        }
        NcTensor {
            left: self.left.clone(),
            right: self.right.clone(),
            field: self.field,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c.mul(s))).collect(),
        }
    }

    fn check_compat(&self, other: &NcTensor) -> Result<(), UeaError> {
        if !tables_match(&self.left, &other.left) || !tables_match(&self.right, &other.right) {
            return Err(CoreError::TableMismatch.into());
        }
        if self.field != other.field {
            return Err(CoreError::FieldMismatch.into());
        }
        Ok(())
    }

    /// `(u1 (x) u2)(v1 (x) v2) = (-1)^(|u2||v1|) u1 v1 (x) u2 v2`, each leg
    /// normalized by its rewrite system.
    pub fn mul(
        &self,
        lsys: &RewriteSystem,
        rsys: &RewriteSystem,
        other: &NcTensor,
    ) -> Result<NcTensor, UeaError> {
        self.check_compat(other)?;
        let mut out = NcTensor::zero(self.left.clone(), self.right.clone(), self.field);
        for ((la, ra), ca) in &self.terms {
            let deg_ra = ra.degree(&self.right)?;
            for ((lb, rb), cb) in &other.terms {
                let deg_lb = lb.degree(&self.left)?;
                let sign = Scalar::sign(self.field, koszul_parity(deg_ra, deg_lb));
                let l = lsys.normal_form(&lsys.word_element(la.concat(lb)))?;
                let r = rsys.normal_form(&rsys.word_element(ra.concat(rb)))?;
                let coeff = ca.mul(cb).mul(&sign);
                for (lw, lc) in l.terms() {
                    for (rw, rc) in r.terms() {
                        out.add_term(lw.clone(), rw.clone(), coeff.mul(lc).mul(rc));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Normalizes both legs of every term.
    pub fn normalized(
        &self,
        lsys: &RewriteSystem,
        rsys: &RewriteSystem,
    ) -> Result<NcTensor, UeaError> {
        let mut out = NcTensor::zero(self.left.clone(), self.right.clone(), self.field);
        for ((l, r), c) in &self.terms {
            let ln = lsys.normal_form(&lsys.word_element(l.clone()))?;
            let rn = rsys.normal_form(&rsys.word_element(r.clone()))?;
            for (lw, lc) in ln.terms() {
                for (rw, rc) in rn.terms() {
                    out.add_term(lw.clone(), rw.clone(), c.mul(lc).mul(rc));
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for NcTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(
            f,
            self.terms.iter(),
            |f, (l, r)| {
                fmt_word(f, &self.left, l)?;
                write!(f, " # ")?;
                fmt_word(f, &self.right, r)
            },
            |_| false,
        )
    }
}

/// Triple tensor of word sums, for the coassociativity check of the lifted
/// coproduct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NcTensor3 {
    pub(crate) terms: BTreeMap<(NcWord, NcWord, NcWord), Scalar>,
    table: Arc<GeneratorTable>,
    field: FieldSpec,
}

impl NcTensor3 {
    pub fn zero(table: Arc<GeneratorTable>, field: FieldSpec) -> Self {
        NcTensor3 { terms: BTreeMap::new(), table, field }
    }

    pub fn add_term(&mut self, a: NcWord, b: NcWord, c: NcWord, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        let key = (a, b, c);
        match self.terms.remove(&key) {
            Some(old) => {
                let sum = old.add(&coeff);
                if !sum.is_zero() {
                    self.terms.insert(key, sum);
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for NcTensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(
            f,
            self.terms.iter(),
            |f, (a, b, c)| {
                fmt_word(f, &self.table, a)?;
                write!(f, " # ")?;
                fmt_word(f, &self.table, b)?;
                write!(f, " # ")?;
                fmt_word(f, &self.table, c)
            },
            |_| false,
        )
    }
}

/// `(Delta^e (x) I) Delta^e`, materialized.
pub fn coassoc_left(sys: &RewriteSystem, t: &NcTensor) -> Result<NcTensor3, UeaError> {
    let gens = sys.source().generators().clone();
    let mut out = NcTensor3::zero(gens, sys.source().field());
    for ((l, r), c) in t.terms() {
        let dl = sys.coproduct_e(&sys.word_element(l.clone()))?;
        for ((a, b), c2) in dl.terms() {
            out.add_term(a.clone(), b.clone(), r.clone(), c.mul(c2));
        }
    }
    Ok(out)
}

/// `(I (x) Delta^e) Delta^e`, materialized.
pub fn coassoc_right(sys: &RewriteSystem, t: &NcTensor) -> Result<NcTensor3, UeaError> {
    let gens = sys.source().generators().clone();
    let mut out = NcTensor3::zero(gens, sys.source().field());
    for ((l, r), c) in t.terms() {
        let dr = sys.coproduct_e(&sys.word_element(r.clone()))?;
        for ((a, b), c2) in dr.terms() {
            out.add_term(l.clone(), a.clone(), b.clone(), c.mul(c2));
        }
    }
    Ok(out)
}

/// Contracts the counit over the left tensor leg.
pub fn counit_contract_left(sys: &RewriteSystem, t: &NcTensor) -> Result<NcElement, UeaError> {
    let mut out = sys.zero();
    for ((l, r), c) in t.terms() {
        let eps = sys.counit_e(&sys.word_element(l.clone()))?;
        out.add_term(r.clone(), c.mul(&eps));
    }
    Ok(out)
}

/// Contracts the counit over the right tensor leg.
pub fn counit_contract_right(sys: &RewriteSystem, t: &NcTensor) -> Result<NcElement, UeaError> {
    let mut out = sys.zero();
    for ((l, r), c) in t.terms() {
        let eps = sys.counit_e(&sys.word_element(r.clone()))?;
        out.add_term(l.clone(), c.mul(&eps));
    }
    Ok(out)
}

/// `u^e (S^e (x) I) Delta^e(w)`: antipode on the left Sweedler leg, then
/// multiply the legs.
pub fn convolve_antipode_left(sys: &RewriteSystem, e: &NcElement) -> Result<NcElement, UeaError> {
    let mut out = sys.zero();
    for ((l, r), c) in sys.coproduct_e(e)?.terms() {
        let sl = sys.antipode_e(&sys.word_element(l.clone()))?;
        let prod = sys.mul(&sl, &sys.word_element(r.clone()))?;
        out = out.add(&prod.scale(c))?;
    }
    Ok(out)
}

/// `u^e (I (x) S^e) Delta^e(w)`.
pub fn convolve_antipode_right(sys: &RewriteSystem, e: &NcElement) -> Result<NcElement, UeaError> {
    let mut out = sys.zero();
    for ((l, r), c) in sys.coproduct_e(e)?.terms() {
        let sr = sys.antipode_e(&sys.word_element(r.clone()))?;
        let prod = sys.mul(&sys.word_element(l.clone()), &sr)?;
        out = out.add(&prod.scale(c))?;
    }
    Ok(out)
}

/// Applies `d^e (x) I + T(d^e (x) I)T` to a materialized tensor, i.e.
/// `d(u) (x) v + (-1)^(|u|) u (x) d(v)` per term.
pub fn tensor_differential_e(sys: &RewriteSystem, t: &NcTensor) -> Result<NcTensor, UeaError> {
    let gens = sys.source().generators().clone();
    let field = sys.source().field();
    let mut out = NcTensor::zero(gens.clone(), gens.clone(), field);
    for ((l, r), c) in t.terms() {
        let dl = sys.d_e(&sys.word_element(l.clone()))?;
        out = out.add(&NcTensor::of(&dl, &sys.word_element(r.clone()))?.scale(c))?;
        let dr = sys.d_e(&sys.word_element(r.clone()))?;
        let sign = Scalar::sign(field, l.degree(&gens)?.rem_euclid(2) == 1);
        out = out.add(&NcTensor::of(&sys.word_element(l.clone()), &dr)?.scale(&c.mul(&sign)))?;
    }
    Ok(out)
}

/// Re-expresses a monomial as an element, convenience for the checkers.
pub fn monomial_element(table: &Arc<GeneratorTable>, field: FieldSpec, m: &Monomial) -> Element {
    Element::from_monomial(table.clone(), m.clone(), Scalar::one(field))
}
