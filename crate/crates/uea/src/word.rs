//! Words and word sums over the doubled alphabet `{m(g), h(g)}`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use gca_core::{
    fmt_terms, tables_match, CoreError, FieldSpec, GenId, GeneratorTable, Monomial, Scalar,
};

/// One letter of the enveloping algebra alphabet. Both letters of a generator
/// carry its degree; the maps they represent have degree 0.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Letter {
    M(GenId),
    H(GenId),
}

impl Letter {
    pub fn generator(&self) -> GenId {
        match *self {
            Letter::M(g) | Letter::H(g) => g,
        }
    }

    pub fn is_h(&self) -> bool {
        matches!(self, Letter::H(_))
    }

    pub fn degree(&self, table: &GeneratorTable) -> Result<i64, CoreError> {
        table.degree(self.generator())
    }
}

/// A word in the free algebra on the doubled alphabet.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct NcWord {
    letters: Vec<Letter>,
}

impl NcWord {
    pub fn empty() -> Self {
        NcWord { letters: Vec::new() }
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        NcWord { letters }
    }

    pub fn single(letter: Letter) -> Self {
        NcWord { letters: vec![letter] }
    }

    /// All m-letters of a monomial in canonical order.
    pub fn m_word(m: &Monomial) -> Self {
        let mut letters = Vec::new();
        for &(g, e) in m.exponents() {
            letters.extend(std::iter::repeat_n(Letter::M(g), e as usize));
        }
        NcWord { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &NcWord) -> NcWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        NcWord { letters }
    }

    pub fn degree(&self, table: &GeneratorTable) -> Result<i64, CoreError> {
        let mut d = 0;
        for l in &self.letters {
            d += l.degree(table)?;
        }
        Ok(d)
    }
}

// Length-graded order so shorter normal forms list first.
impl Ord for NcWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for NcWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite sum of words with nonzero coefficients; canonical-form discipline
/// as for plain elements.
#[derive(Clone, Debug)]
pub struct NcElement {
    table: Arc<GeneratorTable>,
    field: FieldSpec,
    terms: BTreeMap<NcWord, Scalar>,
}

impl PartialEq for NcElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && tables_match(&self.table, &other.table)
            && self.terms == other.terms
    }
}

impl Eq for NcElement {}

impl NcElement {
    pub fn zero(table: Arc<GeneratorTable>, field: FieldSpec) -> Self {
        NcElement { table, field, terms: BTreeMap::new() }
    }

    pub fn one(table: Arc<GeneratorTable>, field: FieldSpec) -> Self {
        NcElement::from_word(table, NcWord::empty(), Scalar::one(field))
    }

    pub fn from_word(table: Arc<GeneratorTable>, word: NcWord, coeff: Scalar) -> Self {
        let field = coeff.field();
        let mut e = NcElement::zero(table, field);
        e.add_term(word, coeff);
        e
    }

    pub fn table(&self) -> &Arc<GeneratorTable> {
        &self.table
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NcWord, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, w: &NcWord) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(|| Scalar::zero(self.field))
    }

    pub fn add_term(&mut self, w: NcWord, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&w) {
            Some(old) => {
                let sum = old.add(&c);
                if !sum.is_zero() {
                    self.terms.insert(w, sum);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    fn check_compat(&self, other: &NcElement) -> Result<(), CoreError> {
        if !tables_match(&self.table, &other.table) {
            return Err(CoreError::TableMismatch);
        }
        if self.field != other.field {
            return Err(CoreError::FieldMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &NcElement) -> Result<NcElement, CoreError> {
        self.check_compat(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &NcElement) -> Result<NcElement, CoreError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> NcElement {
        NcElement {
            table: self.table.clone(),
            field: self.field,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> NcElement {
        if s.is_zero() {
            return NcElement::zero(self.table.clone(), self.field);
        }
        NcElement {
            table: self.table.clone(),
            field: self.field,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c.mul(s))).collect(),
        }
    }

    /// Raw bilinear concatenation, no rewriting.
    pub fn concat(&self, other: &NcElement) -> Result<NcElement, CoreError> {
        self.check_compat(other)?;
        let mut out = NcElement::zero(self.table.clone(), self.field);
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                out.add_term(wa.concat(wb), ca.mul(cb));
            }
        }
        Ok(out)
    }
}

pub(crate) fn fmt_word(
    f: &mut fmt::Formatter<'_>,
    table: &GeneratorTable,
    w: &NcWord,
) -> fmt::Result {
    if w.is_empty() {
        return write!(f, "1");
    }
    let mut first = true;
    let mut i = 0;
    let letters = w.letters();
    while i < letters.len() {
        let mut run = 1;
        while i + run < letters.len() && letters[i + run] == letters[i] {
            run += 1;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        let name = table.name(letters[i].generator()).unwrap_or("?");
        let tag = if letters[i].is_h() { "h" } else { "m" };
        if run == 1 {
            write!(f, "{tag}({name})")?;
        } else {
            write!(f, "{tag}({name})^{run}")?;
        }
        i += run;
    }
    Ok(())
}

impl fmt::Display for NcElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, self.terms.iter(), |f, w| fmt_word(f, &self.table, w), |w| w.is_empty())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use gca_core::Generator;

    #[test]
    fn word_display_collapses_runs() {
        let t = GeneratorTable::new(vec![Generator::new("x", 0), Generator::new("y", 0)])
            .unwrap();
        let w = NcWord::from_letters(vec![
            Letter::M(0),
            Letter::M(0),
            Letter::M(1),
            Letter::H(0),
        ]);
        let e = NcElement::from_word(t, w, Scalar::one(FieldSpec::Rationals));
        assert_eq!(e.to_string(), "m(x)^2*m(y)*h(x)");
    }

    #[test]
    fn graded_word_order() {
        let short = NcWord::single(Letter::H(5));
        let long = NcWord::from_letters(vec![Letter::M(0), Letter::M(0)]);
        assert!(short < long);
        assert!(NcWord::empty() < short);
    }
}
