//! Tensor squares of graded-commutative algebras with Koszul-signed product.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::element::{fmt_monomial, fmt_terms, Element};
use crate::error::CoreError;
use crate::field::{koszul_parity, FieldSpec, Scalar};
use crate::generator::{tables_match, GeneratorTable};
use crate::monomial::{mul_monomials, Monomial};

/// Element of `A (x) B`: a finite sum of coefficient-weighted monomial pairs.
#[derive(Clone, Debug)]
pub struct TensorElement {
    left: Arc<GeneratorTable>,
    right: Arc<GeneratorTable>,
    field: FieldSpec,
    terms: BTreeMap<(Monomial, Monomial), Scalar>,
}

impl PartialEq for TensorElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && tables_match(&self.left, &other.left)
            && tables_match(&self.right, &other.right)
            && self.terms == other.terms
    }
}

impl Eq for TensorElement {}

impl TensorElement {
    pub fn zero(left: Arc<GeneratorTable>, right: Arc<GeneratorTable>, field: FieldSpec) -> Self {
        TensorElement { left, right, field, terms: BTreeMap::new() }
    }

    pub fn one(left: Arc<GeneratorTable>, right: Arc<GeneratorTable>, field: FieldSpec) -> Self {
        let mut t = TensorElement::zero(left, right, field);
        t.add_term(Monomial::one(), Monomial::one(), Scalar::one(field));
        t
    }

    /// The elementary tensor `a (x) b`, extended bilinearly.
    pub fn of(a: &Element, b: &Element) -> Result<Self, CoreError> {
        if a.field() != b.field() {
            return Err(CoreError::FieldMismatch);
        }
        let mut t = TensorElement::zero(a.table().clone(), b.table().clone(), a.field());
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                t.add_term(ma.clone(), mb.clone(), ca.mul(cb));
            }
        }
        Ok(t)
    }

    pub fn left_table(&self) -> &Arc<GeneratorTable> {
        &self.left
    }

    pub fn right_table(&self) -> &Arc<GeneratorTable> {
        &self.right
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Monomial, Monomial), &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, l: Monomial, r: Monomial, c: Scalar) {
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

    fn check_compat(&self, other: &TensorElement) -> Result<(), CoreError> {
        if !tables_match(&self.left, &other.left) || !tables_match(&self.right, &other.right) {
            return Err(CoreError::TableMismatch);
        }
        if self.field != other.field {
            return Err(CoreError::FieldMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &TensorElement) -> Result<TensorElement, CoreError> {
        self.check_compat(other)?;
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add_term(l.clone(), r.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &TensorElement) -> Result<TensorElement, CoreError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> TensorElement {
        TensorElement {
            left: self.left.clone(),
            right: self.right.clone(),
            field: self.field,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> TensorElement {
        if s.is_zero() {
            return TensorElement::zero(self.left.clone(), self.right.clone(), self.field);
        }
        TensorElement {
            left: self.left.clone(),
            right: self.right.clone(),
            field: self.field,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c.mul(s))).collect(),
        }
    }

    /// Koszul-signed componentwise product:
    /// `(a(x)b)(a'(x)b') = (-1)^(|a'||b|) aa' (x) bb'`, term by term.
    pub fn mul(&self, other: &TensorElement) -> Result<TensorElement, CoreError> {
        self.check_compat(other)?;
        let mut out = TensorElement::zero(self.left.clone(), self.right.clone(), self.field);
        for ((la, ra), ca) in &self.terms {
            let deg_ra = ra.degree(&self.right)?;
            for ((lb, rb), cb) in &other.terms {
                let deg_lb = lb.degree(&self.left)?;
                let Some((neg_l, l)) = mul_monomials(&self.left, la, lb)? else { continue };
                let Some((neg_r, r)) = mul_monomials(&self.right, ra, rb)? else { continue };
                let mut c = ca.mul(cb);
                if koszul_parity(deg_lb, deg_ra) ^ neg_l ^ neg_r {
                    c = c.neg();
                }
                out.add_term(l, r, c);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Result<TensorElement, CoreError> {
        let mut acc = TensorElement::one(self.left.clone(), self.right.clone(), self.field);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Leg swap with Koszul sign: `a (x) b -> (-1)^(|a||b|) b (x) a`.
    pub fn twist(&self) -> Result<TensorElement, CoreError> {
        let mut out = TensorElement::zero(self.right.clone(), self.left.clone(), self.field);
        for ((l, r), c) in &self.terms {
            let dl = l.degree(&self.left)?;
            let dr = r.degree(&self.right)?;
            let c = if koszul_parity(dl, dr) { c.neg() } else { c.clone() };
            out.add_term(r.clone(), l.clone(), c);
        }
        Ok(out)
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // pairs never print as bare coefficients, "1 # 1" stays explicit
        fmt_terms(
            f,
            self.terms.iter(),
            |f, (l, r)| {
                fmt_monomial(f, &self.left, l)?;
                write!(f, " # ")?;
                fmt_monomial(f, &self.right, r)
            },
            |_| false,
        )
    }
}

/// Element of a triple tensor product, used for coassociativity checks.
#[derive(Clone, Debug)]
pub struct Tensor3 {
    tables: [Arc<GeneratorTable>; 3],
    field: FieldSpec,
    terms: BTreeMap<(Monomial, Monomial, Monomial), Scalar>,
}

impl PartialEq for Tensor3 {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self
                .tables
                .iter()
                .zip(other.tables.iter())
                .all(|(a, b)| tables_match(a, b))
            && self.terms == other.terms
    }
}

impl Eq for Tensor3 {}

impl Tensor3 {
    pub fn zero(tables: [Arc<GeneratorTable>; 3], field: FieldSpec) -> Self {
        Tensor3 { tables, field, terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, a: Monomial, b: Monomial, c: Monomial, coeff: Scalar) {
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

impl fmt::Display for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(
            f,
            self.terms.iter(),
            |f, (a, b, c)| {
                fmt_monomial(f, &self.tables[0], a)?;
                write!(f, " # ")?;
                fmt_monomial(f, &self.tables[1], b)?;
                write!(f, " # ")?;
                fmt_monomial(f, &self.tables[2], c)
            },
            |_| false,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::Generator;

    fn setup() -> (Arc<GeneratorTable>, FieldSpec) {
        let t = GeneratorTable::new(vec![
            Generator::new("x", 0),
            Generator::new("y", 0),
            Generator::new("f", 1),
            Generator::new("g", 1),
        ])
        .unwrap();
        (t, FieldSpec::Rationals)
    }

    fn gen(t: &Arc<GeneratorTable>, f: FieldSpec, id: u32) -> Element {
        Element::generator(t.clone(), f, id).unwrap()
    }

    #[test]
    fn product_sign_on_odd_legs() {
        // (a(x)b)(a'(x)b') with |a'| = |b| = 1 picks up a minus sign
        let (t, f) = setup();
        let x = gen(&t, f, 0);
        let y = gen(&t, f, 1);
        let ff = gen(&t, f, 2);
        let g = gen(&t, f, 3);
        let s = TensorElement::of(&x, &ff).unwrap();
        let u = TensorElement::of(&g, &y).unwrap();
        let prod = s.mul(&u).unwrap();
        let expected = TensorElement::of(&x.mul(&g).unwrap(), &ff.mul(&y).unwrap())
            .unwrap()
            .neg();
        assert_eq!(prod, expected);
    }

    #[test]
    fn identity_and_degree_zero_products() {
        let (t, f) = setup();
        let x = gen(&t, f, 0);
        let y = gen(&t, f, 1);
        let one = TensorElement::one(t.clone(), t.clone(), f);
        let xy = TensorElement::of(&x, &y).unwrap();
        assert_eq!(one.mul(&xy).unwrap(), xy);
        let x1 = TensorElement::of(&x, &Element::one(t.clone(), f)).unwrap();
        let oy = TensorElement::of(&Element::one(t.clone(), f), &y).unwrap();
        assert_eq!(x1.mul(&oy).unwrap(), xy);
    }

    #[test]
    fn twist_signs_and_involution() {
        let (t, f) = setup();
        let x = gen(&t, f, 0);
        let y = gen(&t, f, 1);
        let ff = gen(&t, f, 2);
        let g = gen(&t, f, 3);
        let xy = TensorElement::of(&x, &y).unwrap();
        assert_eq!(xy.twist().unwrap(), TensorElement::of(&y, &x).unwrap());
        let fg = TensorElement::of(&ff, &g).unwrap();
        assert_eq!(fg.twist().unwrap(), TensorElement::of(&g, &ff).unwrap().neg());
        assert_eq!(fg.twist().unwrap().twist().unwrap(), fg);
        let zero = TensorElement::zero(t.clone(), t.clone(), f);
        assert_eq!(zero.twist().unwrap(), zero);
    }

    #[test]
    fn tensor_product_is_associative_on_samples() {
        let (t, f) = setup();
        let xs: Vec<TensorElement> = vec![
            TensorElement::of(&gen(&t, f, 0), &gen(&t, f, 2)).unwrap(),
            TensorElement::of(&gen(&t, f, 3), &gen(&t, f, 1)).unwrap(),
            TensorElement::of(&gen(&t, f, 2), &gen(&t, f, 3)).unwrap(),
            TensorElement::one(t.clone(), t.clone(), f),
        ];
        for a in &xs {
            for b in &xs {
                for c in &xs {
                    let ab_c = a.mul(b).unwrap().mul(c).unwrap();
                    let a_bc = a.mul(&b.mul(c).unwrap()).unwrap();
                    assert_eq!(ab_c, a_bc);
                }
            }
        }
    }
}
