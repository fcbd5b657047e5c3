//! Hopf structure on top of a Poisson presentation.
//!
//! The coproduct, counit and antipode are given on generators and extended
//! multiplicatively (anti-multiplicatively for the antipode, with Koszul
//! signs). The constructor validates degrees only; the axioms themselves are
//! certified by the checkers, since non-primitive coproducts are legitimate
//! and cannot be validated structurally.

use std::collections::BTreeMap;

use dg_poisson::{tensor_presentation, PoissonError, PoissonPresentation, TensorPresentation};
use gca_core::{
    koszul_parity, tables_match, CoreError, Element, GenId, Homogeneity, Monomial, Scalar,
    TensorElement,
};
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum HopfError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Poisson(#[from] PoissonError),
    #[error("Hopf structure requires bracket degree 0, found {0}")]
    BracketDegreeNotZero(i64),
    #[error("coproduct of {0} must have total degree |{0}| in every term")]
    CoproductDegreeMismatch(String),
    #[error("antipode of {0} must be homogeneous of degree |{0}| or zero")]
    AntipodeDegreeMismatch(String),
    #[error("counit of {0} must vanish unless |{0}| = 0")]
    CounitDegreeMismatch(String),
    #[error("coproduct of {0} is missing")]
    MissingCoproduct(String),
    #[error("antipode of {0} is missing")]
    MissingAntipode(String),
    #[error("Hopf table entry for {0} declared twice")]
    DuplicateEntry(String),
}

/// A DG Poisson Hopf presentation: the base Poisson presentation plus
/// generator tables for the coproduct, counit and antipode.
#[derive(Clone, Debug)]
pub struct HopfPresentation {
    base: PoissonPresentation,
    coproducts: BTreeMap<GenId, TensorElement>,
    counits: BTreeMap<GenId, Scalar>,
    antipodes: BTreeMap<GenId, Element>,
}

impl PartialEq for HopfPresentation {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base
            && self.coproducts == other.coproducts
            && self.counits == other.counits
            && self.antipodes == other.antipodes
    }
}

impl Eq for HopfPresentation {}

pub struct HopfBuilder {
    base: PoissonPresentation,
    coproducts: Vec<(GenId, TensorElement)>,
    counits: Vec<(GenId, Scalar)>,
    antipodes: Vec<(GenId, Element)>,
}

impl HopfBuilder {
    pub fn coproduct(mut self, g: GenId, value: TensorElement) -> Self {
        self.coproducts.push((g, value));
        self
    }

    pub fn counit(mut self, g: GenId, value: Scalar) -> Self {
        self.counits.push((g, value));
        self
    }

    pub fn antipode(mut self, g: GenId, value: Element) -> Self {
        self.antipodes.push((g, value));
        self
    }

    pub fn build(self) -> Result<HopfPresentation, HopfError> {
        let base = self.base;
        if base.bracket_degree() != 0 {
            return Err(HopfError::BracketDegreeNotZero(base.bracket_degree()));
        }
        let gens = base.generators().clone();
        let name = |g: GenId| gens.name(g).unwrap_or("?").to_string();
        let mut coproducts = BTreeMap::new();
        for (g, value) in self.coproducts {
            if !tables_match(value.left_table(), &gens)
                || !tables_match(value.right_table(), &gens)
            {
                return Err(CoreError::TableMismatch.into());
            }
            if value.field() != base.field() {
                return Err(CoreError::FieldMismatch.into());
            }
            let expected = gens.degree(g)?;
            for ((l, r), _) in value.terms() {
                if l.degree(&gens)? + r.degree(&gens)? != expected {
                    return Err(HopfError::CoproductDegreeMismatch(name(g)));
                }
            }
            if coproducts.insert(g, value).is_some() {
                return Err(HopfError::DuplicateEntry(name(g)));
            }
        }
        // zero counits are not stored, so structural equality is semantic
        let mut counits = BTreeMap::new();
        let mut declared_counits = std::collections::BTreeSet::new();
        for (g, value) in self.counits {
            if value.field() != base.field() {
                return Err(CoreError::FieldMismatch.into());
            }
            if !value.is_zero() && gens.degree(g)? != 0 {
                return Err(HopfError::CounitDegreeMismatch(name(g)));
            }
            if !declared_counits.insert(g) {
                return Err(HopfError::DuplicateEntry(name(g)));
            }
            if !value.is_zero() {
                counits.insert(g, value);
            }
        }
        let mut antipodes = BTreeMap::new();
        for (g, value) in self.antipodes {
            if !tables_match(value.table(), &gens) {
                return Err(CoreError::TableMismatch.into());
            }
            if value.field() != base.field() {
                return Err(CoreError::FieldMismatch.into());
            }
            let expected = gens.degree(g)?;
            match value.homogeneous_degree() {
                Homogeneity::Any => {}
                Homogeneity::Degree(d) if d == expected => {}
                _ => return Err(HopfError::AntipodeDegreeMismatch(name(g))),
            }
            if antipodes.insert(g, value).is_some() {
                return Err(HopfError::DuplicateEntry(name(g)));
            }
        }
        for g in gens.ids() {
            if !coproducts.contains_key(&g) {
                return Err(HopfError::MissingCoproduct(name(g)));
            }
            if !antipodes.contains_key(&g) {
                return Err(HopfError::MissingAntipode(name(g)));
            }
        }
        Ok(HopfPresentation { base, coproducts, counits, antipodes })
    }
}

impl HopfPresentation {
    pub fn builder(base: PoissonPresentation) -> HopfBuilder {
        HopfBuilder { base, coproducts: Vec::new(), counits: Vec::new(), antipodes: Vec::new() }
    }

    /// The symmetric-algebra Hopf structure on a Lie-type presentation:
    /// every generator primitive, counit zero, antipode minus the identity.
    pub fn primitive(base: PoissonPresentation) -> Result<HopfPresentation, HopfError> {
        let gens = base.generators().clone();
        let field = base.field();
        let mut builder = HopfPresentation::builder(base);
        for g in gens.ids() {
            let ge = Element::generator(gens.clone(), field, g)?;
            let one = Element::one(gens.clone(), field);
            let delta = TensorElement::of(&ge, &one)?.add(&TensorElement::of(&one, &ge)?)?;
            builder = builder
                .coproduct(g, delta)
                .counit(g, Scalar::zero(field))
                .antipode(g, ge.neg());
        }
        builder.build()
    }

    pub fn base(&self) -> &PoissonPresentation {
        &self.base
    }

    pub fn generator_coproduct(&self, g: GenId) -> Result<&TensorElement, HopfError> {
        self.coproducts.get(&g).ok_or(CoreError::UnknownGenerator(g).into())
    }

    pub fn generator_counit(&self, g: GenId) -> Result<Scalar, HopfError> {
        self.base.generators().get(g)?;
        Ok(self
            .counits
            .get(&g)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.base.field())))
    }

    pub fn generator_antipode(&self, g: GenId) -> Result<&Element, HopfError> {
        self.antipodes.get(&g).ok_or(CoreError::UnknownGenerator(g).into())
    }

    /// Linear, multiplicative extension of the coproduct table.
    pub fn coproduct(&self, a: &Element) -> Result<TensorElement, HopfError> {
        self.check_element(a)?;
        let gens = self.base.generators();
        let mut out = TensorElement::zero(gens.clone(), gens.clone(), self.base.field());
        for (m, c) in a.terms() {
            out = out.add(&self.coproduct_monomial(m)?.scale(c))?;
        }
        Ok(out)
    }

    fn coproduct_monomial(&self, m: &Monomial) -> Result<TensorElement, HopfError> {
        let gens = self.base.generators();
        let mut acc = TensorElement::one(gens.clone(), gens.clone(), self.base.field());
        for &(g, e) in m.exponents() {
            acc = acc.mul(&self.generator_coproduct(g)?.pow(e)?)?;
        }
        Ok(acc)
    }

    /// Linear, multiplicative extension of the counit table.
    pub fn counit(&self, a: &Element) -> Result<Scalar, HopfError> {
        self.check_element(a)?;
        let mut out = Scalar::zero(self.base.field());
        for (m, c) in a.terms() {
            let mut v = c.clone();
            for &(g, e) in m.exponents() {
                v = v.mul(&self.generator_counit(g)?.pow(e));
            }
            out = out.add(&v);
        }
        Ok(out)
    }

    /// Linear extension of the anti-multiplicative antipode:
    /// `S(uv) = (-1)^(|u||v|) S(v) S(u)`, `S(1) = 1`.
    pub fn antipode(&self, a: &Element) -> Result<Element, HopfError> {
        self.check_element(a)?;
        let mut out = self.base.zero();
        for (m, c) in a.terms() {
            out = out.add(&self.antipode_monomial(m)?.scale(c))?;
        }
        Ok(out)
    }

    fn antipode_monomial(&self, m: &Monomial) -> Result<Element, HopfError> {
        let Some((g, rest)) = m.split_first() else {
            return Ok(self.base.one());
        };
        let gens = self.base.generators();
        let dg = gens.degree(g)?;
        let drest = rest.degree(gens)?;
        let value = self.antipode_monomial(&rest)?.mul(self.generator_antipode(g)?)?;
        Ok(if koszul_parity(dg, drest) { value.neg() } else { value })
    }

    fn check_element(&self, a: &Element) -> Result<(), HopfError> {
        if !tables_match(a.table(), self.base.generators()) {
            return Err(CoreError::TableMismatch.into());
        }
        if a.field() != self.base.field() {
            return Err(CoreError::FieldMismatch.into());
        }
        Ok(())
    }

    /// Opposite Hopf presentation: bracket negated, coproducts twisted,
    /// counit, antipode and differential unchanged.
    pub fn opposite(&self) -> Result<HopfPresentation, HopfError> {
        let mut builder = HopfPresentation::builder(self.base.opposite());
        for (&g, delta) in &self.coproducts {
            builder = builder.coproduct(g, delta.twist()?);
        }
        for (&g, eps) in &self.counits {
            builder = builder.counit(g, eps.clone());
        }
        for (&g, s) in &self.antipodes {
            builder = builder.antipode(g, s.clone());
        }
        builder.build()
    }
}

/// Tensor product of Hopf presentations on the disjoint-union presentation.
/// Generator tables embed leg-wise; no extra signs arise on generators since
/// one factor of each pair is the unit.
pub fn tensor_hopf(
    a: &HopfPresentation,
    b: &HopfPresentation,
) -> Result<(HopfPresentation, TensorPresentation), HopfError> {
    let tp = tensor_presentation(a.base(), b.base())?;
    let joint_gens = tp.joint.generators().clone();
    let field = tp.joint.field();
    let embed_tensor_left = |t: &TensorElement| -> Result<TensorElement, HopfError> {
        let mut out = TensorElement::zero(joint_gens.clone(), joint_gens.clone(), field);
        for ((l, r), c) in t.terms() {
            let le = tp.embed_left(&Element::from_monomial(
                a.base().generators().clone(),
                l.clone(),
                Scalar::one(field),
            ))?;
            let re = tp.embed_left(&Element::from_monomial(
                a.base().generators().clone(),
                r.clone(),
                Scalar::one(field),
            ))?;
            out = out.add(&TensorElement::of(&le, &re)?.scale(c))?;
        }
        Ok(out)
    };
    let embed_tensor_right = |t: &TensorElement| -> Result<TensorElement, HopfError> {
        let mut out = TensorElement::zero(joint_gens.clone(), joint_gens.clone(), field);
        for ((l, r), c) in t.terms() {
            let le = tp.embed_right(&Element::from_monomial(
                b.base().generators().clone(),
                l.clone(),
                Scalar::one(field),
            ))?;
            let re = tp.embed_right(&Element::from_monomial(
                b.base().generators().clone(),
                r.clone(),
                Scalar::one(field),
            ))?;
            out = out.add(&TensorElement::of(&le, &re)?.scale(c))?;
        }
        Ok(out)
    };

    let mut builder = HopfPresentation::builder(tp.joint.clone());
    for g in a.base().generators().ids() {
        builder = builder
            .coproduct(tp.left_id(g), embed_tensor_left(a.generator_coproduct(g)?)?)
            .counit(tp.left_id(g), a.generator_counit(g)?)
            .antipode(tp.left_id(g), tp.embed_left(a.generator_antipode(g)?)?);
    }
    for g in b.base().generators().ids() {
        builder = builder
            .coproduct(tp.right_id(g), embed_tensor_right(b.generator_coproduct(g)?)?)
            .counit(tp.right_id(g), b.generator_counit(g)?)
            .antipode(tp.right_id(g), tp.embed_right(b.generator_antipode(g)?)?);
    }
    Ok((builder.build()?, tp))
}
