//! Graded-commutative polynomials: scalar-weighted sums of canonical monomials.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::CoreError;
use crate::field::{is_displayed_negative, FieldSpec, Scalar};
use crate::generator::{tables_match, GenId, GeneratorTable};
use crate::monomial::{mul_monomials, Monomial};

/// Degree report for an element.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Homogeneity {
    /// The zero element, homogeneous of every degree.
    Any,
    Degree(i64),
    Mixed,
}

/// A finite sum of sign-normalized monomials with nonzero exact coefficients.
/// Zero coefficients are never stored, so equality is structural.
#[derive(Clone, Debug)]
pub struct Element {
    table: Arc<GeneratorTable>,
    field: FieldSpec,
    terms: BTreeMap<Monomial, Scalar>,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && tables_match(&self.table, &other.table)
            && self.terms == other.terms
    }
}

impl Eq for Element {}

impl Element {
    pub fn zero(table: Arc<GeneratorTable>, field: FieldSpec) -> Self {
        Element { table, field, terms: BTreeMap::new() }
    }

    pub fn one(table: Arc<GeneratorTable>, field: FieldSpec) -> Self {
        Element::scalar(table, Scalar::one(field))
    }

    pub fn scalar(table: Arc<GeneratorTable>, value: Scalar) -> Self {
        let field = value.field();
        let mut terms = BTreeMap::new();
        if !value.is_zero() {
            terms.insert(Monomial::one(), value);
        }
        Element { table, field, terms }
    }

    pub fn generator(
        table: Arc<GeneratorTable>,
        field: FieldSpec,
        id: GenId,
    ) -> Result<Self, CoreError> {
        table.get(id)?;
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::generator(id), Scalar::one(field));
        Ok(Element { table, field, terms })
    }

    pub fn from_monomial(
        table: Arc<GeneratorTable>,
        monomial: Monomial,
        coeff: Scalar,
    ) -> Self {
        let field = coeff.field();
        let mut e = Element::zero(table, field);
        e.add_term(monomial, coeff);
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

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| Scalar::zero(self.field))
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let sum = old.add(&c);
                if !sum.is_zero() {
                    self.terms.insert(m, sum);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check_compat(&self, other: &Element) -> Result<(), CoreError> {
        if !tables_match(&self.table, &other.table) {
            return Err(CoreError::TableMismatch);
        }
        if self.field != other.field {
            return Err(CoreError::FieldMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Element) -> Result<Element, CoreError> {
        self.check_compat(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Element) -> Result<Element, CoreError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Element {
        Element {
            table: self.table.clone(),
            field: self.field,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Element {
        assert_eq!(s.field(), self.field, "mixed coefficient fields");
        if s.is_zero() {
            return Element::zero(self.table.clone(), self.field);
        }
        Element {
            table: self.table.clone(),
            field: self.field,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.mul(s))).collect(),
        }
    }

    /// Bilinear extension of signed monomial concatenation.
    pub fn mul(&self, other: &Element) -> Result<Element, CoreError> {
        self.check_compat(other)?;
        let mut out = Element::zero(self.table.clone(), self.field);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((negative, m)) = mul_monomials(&self.table, ma, mb)? {
                    let mut c = ca.mul(cb);
                    if negative {
                        c = c.neg();
                    }
                    out.add_term(m, c);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Result<Element, CoreError> {
        let mut acc = Element::one(self.table.clone(), self.field);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// The common degree of all terms, `Mixed` if they disagree, `Any` on zero.
    pub fn homogeneous_degree(&self) -> Homogeneity {
        let mut degree = None;
        for m in self.terms.keys() {
            let d = m.degree(&self.table).expect("monomial over own table");
            match degree {
                None => degree = Some(d),
                Some(seen) if seen != d => return Homogeneity::Mixed,
                Some(_) => {}
            }
        }
        match degree {
            None => Homogeneity::Any,
            Some(d) => Homogeneity::Degree(d),
        }
    }

    /// Splits into homogeneous components, ordered by degree.
    pub fn homogeneous_components(&self) -> Vec<(i64, Element)> {
        let mut parts: BTreeMap<i64, Element> = BTreeMap::new();
        for (m, c) in &self.terms {
            let d = m.degree(&self.table).expect("monomial over own table");
            parts
                .entry(d)
                .or_insert_with(|| Element::zero(self.table.clone(), self.field))
                .add_term(m.clone(), c.clone());
        }
        parts.into_iter().collect()
    }
}

/// Prints a monomial as `x^2*y` with the table's generator names.
pub fn fmt_monomial(
    f: &mut fmt::Formatter<'_>,
    table: &GeneratorTable,
    m: &Monomial,
) -> fmt::Result {
    if m.is_one() {
        return write!(f, "1");
    }
    let mut first = true;
    for &(g, e) in m.exponents() {
        if !first {
            write!(f, "*")?;
        }
        first = false;
        let name = table.name(g).unwrap_or("?");
        if e == 1 {
            write!(f, "{name}")?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    Ok(())
}

/// Prints a coefficient-weighted term sum with canonical sign handling:
/// rational coefficients use `a - b`, prime-field coefficients print as least
/// residues joined by `+`. `is_unit` marks monomials that print as a bare
/// coefficient.
pub fn fmt_terms<'a, M, F, U>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a M, &'a Scalar)>,
    mut fmt_mono: F,
    is_unit: U,
) -> fmt::Result
where
    M: 'a,
    F: FnMut(&mut fmt::Formatter<'_>, &M) -> fmt::Result,
    U: Fn(&M) -> bool,
{
    let mut first = true;
    let mut empty = true;
    for (m, c) in terms {
        empty = false;
        let neg = is_displayed_negative(c);
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        first = false;
        let abs = if neg { c.neg() } else { c.clone() };
        if is_unit(m) {
            write!(f, "{abs}")?;
        } else if abs.is_one() {
            fmt_mono(f, m)?;
        } else {
            write!(f, "{abs}*")?;
            fmt_mono(f, m)?;
        }
    }
    if empty {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, self.terms.iter(), |f, m| fmt_monomial(f, &self.table, m), |m| m.is_one())
    }
}
