//! The enveloping algebra of a presented DG Poisson algebra as a string
//! rewrite system over the doubled alphabet.
//!
//! Oriented rules, with `p` the bracket degree and `s(i) = |g_i| + p`:
//!
//!   R1  m(g_i) m(g_j) -> (-1)^(|g_i||g_j|) m(g_j) m(g_i)          for i > j
//!   R2  h(g_i) m(g_j) -> (-1)^(s(i)|g_j|) m(g_j) h(g_i) + M({g_i, g_j})
//!   R3  h(g_i) h(g_j) -> (-1)^(s(i)s(j)) h(g_j) h(g_i) + H({g_i, g_j})
//!                                                                 for i > j
//!   R4  m(g)^2 -> 0 for odd g;  h(g)^2 -> 1/2 H({g, g}) when s odd
//!   R5  m(g)^n -> 0 for a truncation bound n, and, when the characteristic
//!       does not divide n, words whose m-block holds m(g)^(n-1) with h(g) as
//!       the first h-letter collapse to 0 (the image of h(g^n) = 0)
//!
//! `M(-)` embeds an element multiplicatively, `H(-)` through the product rule
//! `h(ab) = m(a)h(b) + (-1)^(|a||b|) m(b)h(a)`. Reduction applies the leftmost
//! rule; it terminates because every rule strictly decreases the word measure
//! (number of h-letters, total m-distance to their right, inversion count):
//! correction terms drop an h-letter, swaps shrink one of the later
//! components. A step budget guards the loop anyway and reports instead of
//! spinning if an inconsistent rule set is ever constructed.

use std::collections::BTreeMap;

use dg_poisson::{PoissonError, PoissonPresentation};
use gca_core::{koszul_parity, tables_match, CoreError, Element, GenId, Monomial, Scalar};
use hopf::{HopfError, HopfPresentation};
use thiserror::Error;

use crate::word::{Letter, NcElement, NcWord};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum UeaError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Poisson(#[from] PoissonError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error("operation requires Hopf data on the rewrite system")]
    MissingHopfData,
    #[error("Hopf presentation does not extend the Poisson source")]
    HopfSourceMismatch,
    #[error("normal form step budget exhausted on `{0}`")]
    StepBudgetExhausted(String),
    #[error("morphism fails the DG Poisson homomorphism check")]
    MorphismRejected,
}

/// The rewrite presentation of `A^e`, with the correction terms of R2/R3
/// precomputed for every ordered generator pair.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    source: PoissonPresentation,
    hopf: Option<HopfPresentation>,
    m_corrections: BTreeMap<(GenId, GenId), NcElement>,
    h_corrections: BTreeMap<(GenId, GenId), NcElement>,
    step_budget: u64,
}

impl PartialEq for RewriteSystem {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source
            && self.hopf == other.hopf
            && self.m_corrections == other.m_corrections
            && self.h_corrections == other.h_corrections
    }
}

impl Eq for RewriteSystem {}

const DEFAULT_STEP_BUDGET: u64 = 2_000_000;

/// Builds the rewrite system for the enveloping algebra of `source`.
/// Hopf data is optional; when present it must extend the same presentation.
pub fn build_uea(
    source: PoissonPresentation,
    hopf: Option<HopfPresentation>,
) -> Result<RewriteSystem, UeaError> {
    if let Some(h) = &hopf {
        if h.base() != &source {
            return Err(UeaError::HopfSourceMismatch);
        }
    }
    let mut system = RewriteSystem {
        source,
        hopf,
        m_corrections: BTreeMap::new(),
        h_corrections: BTreeMap::new(),
        step_budget: DEFAULT_STEP_BUDGET,
    };
    let ids: Vec<GenId> = system.source.generators().ids().collect();
    let mut m_raw = BTreeMap::new();
    let mut h_raw = BTreeMap::new();
    for &i in &ids {
        for &j in &ids {
            let bracket = system.source.generator_bracket(i, j)?;
            if bracket.is_zero() {
                continue;
            }
            m_raw.insert((i, j), raw_map_m(&bracket)?);
            h_raw.insert((i, j), raw_map_h(&system.source, &bracket)?);
        }
    }
    // normalize the corrections through the assembled system; their words are
    // m-sorted with at most one trailing h, so this settles truncation only
    for (k, v) in m_raw {
        let nf = system.normal_form(&v)?;
        if !nf.is_zero() {
            system.m_corrections.insert(k, nf);
        }
    }
    for (k, v) in h_raw {
        let nf = system.normal_form(&v)?;
        if !nf.is_zero() {
            system.h_corrections.insert(k, nf);
        }
    }
    Ok(system)
}

/// Multiplicative embedding of an element as m-words; no rewriting needed.
pub(crate) fn raw_map_m(a: &Element) -> Result<NcElement, UeaError> {
    let mut out = NcElement::zero(a.table().clone(), a.field());
    for (m, c) in a.terms() {
        out.add_term(NcWord::m_word(m), c.clone());
    }
    Ok(out)
}

/// The product-rule embedding `h(-)`, recursively on monomials.
pub(crate) fn raw_map_h(p: &PoissonPresentation, a: &Element) -> Result<NcElement, UeaError> {
    let mut out = NcElement::zero(a.table().clone(), a.field());
    for (m, c) in a.terms() {
        out = out.add(&raw_map_h_monomial(p, m)?.scale(c))?;
    }
    Ok(out)
}

fn raw_map_h_monomial(p: &PoissonPresentation, m: &Monomial) -> Result<NcElement, UeaError> {
    let gens = p.generators().clone();
    let field = p.field();
    let Some((g, rest)) = m.split_first() else {
        // h(1) = 0
        return Ok(NcElement::zero(gens, field));
    };
    if rest.is_one() {
        return Ok(NcElement::from_word(gens, NcWord::single(Letter::H(g)), Scalar::one(field)));
    }
    // h(g r) = m(g) h(r) + (-1)^(|g||r|) m(r) h(g)
    let dg = gens.degree(g)?;
    let dr = rest.degree(&gens)?;
    let first = NcElement::from_word(gens.clone(), NcWord::single(Letter::M(g)), Scalar::one(field))
        .concat(&raw_map_h_monomial(p, &rest)?)?;
    let second = NcElement::from_word(
        gens.clone(),
        NcWord::m_word(&rest).concat(&NcWord::single(Letter::H(g))),
        Scalar::sign(field, koszul_parity(dg, dr)),
    );
    Ok(first.add(&second)?)
}

/// A single reduction opportunity inside a word.
pub(crate) enum Redex {
    /// the whole word is zero
    Annihilate,
    /// replace the two letters at `pos` by the element
    ReplacePair { pos: usize, replacement: NcElement },
}

impl RewriteSystem {
    pub fn source(&self) -> &PoissonPresentation {
        &self.source
    }

    pub fn hopf(&self) -> Option<&HopfPresentation> {
        self.hopf.as_ref()
    }

    pub fn require_hopf(&self) -> Result<&HopfPresentation, UeaError> {
        self.hopf.as_ref().ok_or(UeaError::MissingHopfData)
    }

    pub fn zero(&self) -> NcElement {
        NcElement::zero(self.source.generators().clone(), self.source.field())
    }

    pub fn one(&self) -> NcElement {
        NcElement::one(self.source.generators().clone(), self.source.field())
    }

    pub fn word_element(&self, word: NcWord) -> NcElement {
        NcElement::from_word(
            self.source.generators().clone(),
            word,
            Scalar::one(self.source.field()),
        )
    }

    /// `M({g_i, g_j})`, the R2 correction, already in normal form.
    pub fn m_correction(&self, i: GenId, j: GenId) -> NcElement {
        self.m_corrections.get(&(i, j)).cloned().unwrap_or_else(|| self.zero())
    }

    /// `H({g_i, g_j})`, the R3 correction, already in normal form.
    pub fn h_correction(&self, i: GenId, j: GenId) -> NcElement {
        self.h_corrections.get(&(i, j)).cloned().unwrap_or_else(|| self.zero())
    }

    /// Drops every R2 correction term. Produces a deliberately wrong rule set
    /// for negative tests of the identity checker.
    #[cfg(test)]
    pub(crate) fn zero_m_corrections(&mut self) {
        self.m_corrections.clear();
    }

    fn letter_degree(&self, l: Letter) -> Result<i64, UeaError> {
        Ok(self.source.generators().degree(l.generator())?)
    }

    /// Leftmost redex of the word, if any. Position order makes reduction a
    /// function, so normal forms are canonical.
    pub(crate) fn find_redex(&self, w: &NcWord) -> Result<Option<Redex>, UeaError> {
        let gens = self.source.generators();
        let p = self.source.bracket_degree();
        let letters = w.letters();
        let field = self.source.field();
        for k in 0..letters.len().saturating_sub(1) {
            let (a, b) = (letters[k], letters[k + 1]);
            match (a, b) {
                (Letter::M(i), Letter::M(j)) if i > j => {
                    let sign = koszul_parity(self.letter_degree(a)?, self.letter_degree(b)?);
                    let swapped = NcWord::from_letters(vec![Letter::M(j), Letter::M(i)]);
                    return Ok(Some(Redex::ReplacePair {
                        pos: k,
                        replacement: NcElement::from_word(
                            gens.clone(),
                            swapped,
                            Scalar::sign(field, sign),
                        ),
                    }));
                }
                (Letter::M(i), Letter::M(j)) if i == j => {
                    if gens.is_odd(i)? {
                        return Ok(Some(Redex::Annihilate));
                    }
                    if let Some(n) = gens.truncation(i)? {
                        // measure the maximal run through k
                        let mut run = 2;
                        let mut left = k;
                        while left > 0 && letters[left - 1] == a {
                            left -= 1;
                            run += 1;
                        }
                        let mut right = k + 2;
                        while right < letters.len() && letters[right] == a {
                            right += 1;
                            run += 1;
                        }
                        if run >= n {
                            return Ok(Some(Redex::Annihilate));
                        }
                    }
                }
                (Letter::H(i), Letter::M(j)) => {
                    let di = self.letter_degree(a)?;
                    let dj = self.letter_degree(b)?;
                    let sign = koszul_parity(di + p, dj);
                    let swapped = NcWord::from_letters(vec![Letter::M(j), Letter::H(i)]);
                    let mut replacement = NcElement::from_word(
                        gens.clone(),
                        swapped,
                        Scalar::sign(field, sign),
                    );
                    replacement = replacement.add(&self.m_correction(i, j))?;
                    return Ok(Some(Redex::ReplacePair { pos: k, replacement }));
                }
                (Letter::H(i), Letter::H(j)) if i > j => {
                    let di = self.letter_degree(a)?;
                    let dj = self.letter_degree(b)?;
                    let sign = koszul_parity(di + p, dj + p);
                    let swapped = NcWord::from_letters(vec![Letter::H(j), Letter::H(i)]);
                    let mut replacement = NcElement::from_word(
                        gens.clone(),
                        swapped,
                        Scalar::sign(field, sign),
                    );
                    replacement = replacement.add(&self.h_correction(i, j))?;
                    return Ok(Some(Redex::ReplacePair { pos: k, replacement }));
                }
                (Letter::H(i), Letter::H(j)) if i == j => {
                    let s = self.letter_degree(a)? + p;
                    if s.rem_euclid(2) == 1 {
                        // 2 h(g)^2 = H({g, g})
                        let half = Scalar::from_i64(field, 2).inv()?;
                        let replacement = self.h_correction(i, i).scale(&half);
                        return Ok(Some(Redex::ReplacePair { pos: k, replacement }));
                    }
                }
                _ => {}
            }
        }
        // R5's h-side: with the word locally sorted, m(g)^(n-1) in the m-block
        // with h(g) leading the h-block is the normalized image of h(g^n) = 0
        if let Some(first_h) = letters.iter().position(|l| l.is_h()) {
            if let Letter::H(g) = letters[first_h] {
                if let Some(n) = gens.truncation(g)? {
                    if !field.characteristic_divides(n as u64) && !gens.is_odd(g)? {
                        let count =
                            letters.iter().filter(|l| **l == Letter::M(g)).count() as u32;
                        if count >= n - 1 {
                            return Ok(Some(Redex::Annihilate));
                        }
                    }
                }
            }
        }
        Ok(None)
    }

    /// One leftmost rewrite step applied to the whole word, or `None` when
    /// the word is a normal form.
    pub fn reduce_word_once(&self, w: &NcWord) -> Result<Option<NcElement>, UeaError> {
        match self.find_redex(w)? {
            None => Ok(None),
            Some(Redex::Annihilate) => Ok(Some(self.zero())),
            Some(Redex::ReplacePair { pos, replacement }) => {
                Ok(Some(self.splice(w, pos, pos + 2, &replacement)))
            }
        }
    }

    fn splice(&self, w: &NcWord, from: usize, to: usize, replacement: &NcElement) -> NcElement {
        let letters = w.letters();
        let mut out = self.zero();
        for (mid, c) in replacement.terms() {
            let mut word = Vec::with_capacity(letters.len() - (to - from) + mid.len());
            word.extend_from_slice(&letters[..from]);
            word.extend_from_slice(mid.letters());
            word.extend_from_slice(&letters[to..]);
            out.add_term(NcWord::from_letters(word), c.clone());
        }
        out
    }

    /// Reduces to the canonical normal form; applies the leftmost rule of each
    /// word until none applies.
    pub fn normal_form(&self, e: &NcElement) -> Result<NcElement, UeaError> {
        if !tables_match(e.table(), self.source.generators()) {
            return Err(CoreError::TableMismatch.into());
        }
        let mut out = self.zero();
        let mut stack: Vec<(NcWord, Scalar)> =
            e.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
        let mut steps = 0u64;
        while let Some((w, c)) = stack.pop() {
            match self.reduce_word_once(&w)? {
                None => out.add_term(w, c),
                Some(replacement) => {
                    steps += 1;
                    if steps > self.step_budget {
                        return Err(UeaError::StepBudgetExhausted(
                            self.word_element(w).to_string(),
                        ));
                    }
                    for (w2, c2) in replacement.terms() {
                        stack.push((w2.clone(), c.mul(c2)));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn is_normal(&self, w: &NcWord) -> Result<bool, UeaError> {
        Ok(self.find_redex(w)?.is_none())
    }

    /// Product in the enveloping algebra: concatenate, then normalize.
    pub fn mul(&self, a: &NcElement, b: &NcElement) -> Result<NcElement, UeaError> {
        self.normal_form(&a.concat(b)?)
    }

    /// The ordered alphabet: all m-letters, then all h-letters.
    pub fn alphabet(&self) -> Vec<Letter> {
        let ids: Vec<GenId> = self.source.generators().ids().collect();
        ids.iter()
            .map(|&g| Letter::M(g))
            .chain(ids.iter().map(|&g| Letter::H(g)))
            .collect()
    }

    /// All words over the alphabet with length `from..=to`, in length-lex
    /// order. Exponential in the length; intended for bounded sweeps.
    pub fn enumerate_words(&self, from: usize, to: usize) -> Vec<NcWord> {
        let alphabet = self.alphabet();
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn recurse(
            alphabet: &[Letter],
            len: usize,
            current: &mut Vec<Letter>,
            out: &mut Vec<NcWord>,
        ) {
            if current.len() == len {
                out.push(NcWord::from_letters(current.clone()));
                return;
            }
            for &l in alphabet {
                current.push(l);
                recurse(alphabet, len, current, out);
                current.pop();
            }
        }
        for len in from..=to {
            recurse(&alphabet, len, &mut current, &mut out);
        }
        out
    }
}
