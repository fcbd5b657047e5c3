//! Finite presentations of DG Poisson algebras.
//!
//! A presentation stores the bracket and the differential on generators only.
//! The bracket extends to all elements as the unique biderivation, the
//! differential as the unique degree-1 derivation; both extensions are
//! computed here. Stored data is validated for degree homogeneity and graded
//! antisymmetry at construction, everything else is the checker's job.

use std::collections::BTreeMap;
use std::sync::Arc;

use gca_core::{
    koszul_parity, tables_match, CoreError, Element, FieldSpec, GenId, Generator, GeneratorTable,
    Homogeneity, Monomial, Scalar, TensorElement,
};
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PoissonError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("bracket {{{0}, {1}}} must be homogeneous of degree {2}")]
    BracketDegreeMismatch(String, String, i64),
    #[error("bracket pair {{{0}, {1}}} declared twice")]
    DuplicateBracket(String, String),
    #[error("bracket {{{0}, {0}}} must vanish when |{0}| + p is even")]
    DiagonalBracketMustVanish(String),
    #[error("differential of {0} must be homogeneous of degree {1}")]
    DifferentialDegreeMismatch(String, i64),
    #[error("differential of {0} declared twice")]
    DuplicateDifferential(String),
    #[error("tensor factors must share the bracket degree and the coefficient field")]
    TensorFactorMismatch,
    #[error("morphism image of {0} must be homogeneous of degree {1} or zero")]
    MorphismDegreeMismatch(String, i64),
    #[error("morphism must give an image for every source generator ({0} missing)")]
    MorphismImageMissing(String),
}

/// A DG Poisson algebra presented by generators, a bracket table, a
/// differential table and the bracket degree `p`.
#[derive(Clone, Debug)]
pub struct PoissonPresentation {
    gens: Arc<GeneratorTable>,
    field: FieldSpec,
    bracket_degree: i64,
    /// one orientation per unordered pair, keys `i <= j`, zero entries dropped
    brackets: BTreeMap<(GenId, GenId), Element>,
    diffs: BTreeMap<GenId, Element>,
}

impl PartialEq for PoissonPresentation {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.bracket_degree == other.bracket_degree
            && tables_match(&self.gens, &other.gens)
            && self.brackets == other.brackets
            && self.diffs == other.diffs
    }
}

impl Eq for PoissonPresentation {}

pub struct PoissonBuilder {
    gens: Arc<GeneratorTable>,
    field: FieldSpec,
    bracket_degree: i64,
    brackets: Vec<((GenId, GenId), Element)>,
    diffs: Vec<(GenId, Element)>,
}

impl PoissonBuilder {
    pub fn new(gens: Arc<GeneratorTable>, field: FieldSpec, bracket_degree: i64) -> Self {
        PoissonBuilder { gens, field, bracket_degree, brackets: Vec::new(), diffs: Vec::new() }
    }

    pub fn bracket(mut self, i: GenId, j: GenId, value: Element) -> Self {
        self.brackets.push(((i, j), value));
        self
    }

    pub fn bracket_by_name(self, i: &str, j: &str, value: Element) -> Result<Self, PoissonError> {
        let gi = self.id(i)?;
        let gj = self.id(j)?;
        Ok(self.bracket(gi, gj, value))
    }

    pub fn differential(mut self, g: GenId, value: Element) -> Self {
        self.diffs.push((g, value));
        self
    }

    pub fn differential_by_name(self, g: &str, value: Element) -> Result<Self, PoissonError> {
        let id = self.id(g)?;
        Ok(self.differential(id, value))
    }

    fn id(&self, name: &str) -> Result<GenId, PoissonError> {
        self.gens
            .id_of(name)
            .ok_or_else(|| CoreError::UnknownGeneratorName(name.into()).into())
    }

    pub fn build(self) -> Result<PoissonPresentation, PoissonError> {
        let mut p = PoissonPresentation {
            gens: self.gens,
            field: self.field,
            bracket_degree: self.bracket_degree,
            brackets: BTreeMap::new(),
            diffs: BTreeMap::new(),
        };
        let mut declared_brackets = std::collections::BTreeSet::new();
        for ((i, j), value) in self.brackets {
            let key = if i <= j { (i, j) } else { (j, i) };
            if !declared_brackets.insert(key) {
                let name = |g: GenId| p.gens.name(g).unwrap_or("?").to_string();
                return Err(PoissonError::DuplicateBracket(name(key.0), name(key.1)));
            }
            p.insert_bracket(i, j, value)?;
        }
        let mut declared_diffs = std::collections::BTreeSet::new();
        for (g, value) in self.diffs {
            if !declared_diffs.insert(g) {
                let name = p.gens.name(g).unwrap_or("?").to_string();
                return Err(PoissonError::DuplicateDifferential(name));
            }
            p.insert_differential(g, value)?;
        }
        Ok(p)
    }
}

impl PoissonPresentation {
    /// Presentation with no brackets and no differential.
    pub fn abelian(gens: Arc<GeneratorTable>, field: FieldSpec, bracket_degree: i64) -> Self {
        PoissonPresentation {
            gens,
            field,
            bracket_degree,
            brackets: BTreeMap::new(),
            diffs: BTreeMap::new(),
        }
    }

    pub fn builder(gens: Arc<GeneratorTable>, field: FieldSpec, bracket_degree: i64) -> PoissonBuilder {
        PoissonBuilder::new(gens, field, bracket_degree)
    }

    pub fn generators(&self) -> &Arc<GeneratorTable> {
        &self.gens
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn bracket_degree(&self) -> i64 {
        self.bracket_degree
    }

    /// Stored bracket entries in key order (`i <= j`).
    pub fn bracket_entries(&self) -> impl Iterator<Item = (&(GenId, GenId), &Element)> {
        self.brackets.iter()
    }

    pub fn differential_entries(&self) -> impl Iterator<Item = (&GenId, &Element)> {
        self.diffs.iter()
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.gens.clone(), self.field)
    }

    pub fn one(&self) -> Element {
        Element::one(self.gens.clone(), self.field)
    }

    pub fn generator_element(&self, id: GenId) -> Result<Element, PoissonError> {
        Ok(Element::generator(self.gens.clone(), self.field, id)?)
    }

    pub fn element_by_name(&self, name: &str) -> Result<Element, PoissonError> {
        let id = self
            .gens
            .id_of(name)
            .ok_or_else(|| CoreError::UnknownGeneratorName(name.into()))?;
        self.generator_element(id)
    }

    fn insert_bracket(&mut self, i: GenId, j: GenId, value: Element) -> Result<(), PoissonError> {
        let name = |g: GenId| self.gens.name(g).unwrap_or("?").to_string();
        if !tables_match(value.table(), &self.gens) {
            return Err(CoreError::TableMismatch.into());
        }
        if value.field() != self.field {
            return Err(CoreError::FieldMismatch.into());
        }
        let di = self.gens.degree(i)?;
        let dj = self.gens.degree(j)?;
        let expected = di + dj + self.bracket_degree;
        match value.homogeneous_degree() {
            Homogeneity::Any => {}
            Homogeneity::Degree(d) if d == expected => {}
            _ => return Err(PoissonError::BracketDegreeMismatch(name(i), name(j), expected)),
        }
        // store the orientation i <= j, deriving the sign when flipped
        let (key, value) = if i <= j {
            ((i, j), value)
        } else {
            let neg = !koszul_parity(di + self.bracket_degree, dj + self.bracket_degree);
            ((j, i), if neg { value.neg() } else { value })
        };
        if i == j && (di + self.bracket_degree).rem_euclid(2) == 0 && !value.is_zero() {
            // (|g| + p) even forces {g, g} = 0 in odd characteristic
            return Err(PoissonError::DiagonalBracketMustVanish(name(i)));
        }
        if self.brackets.contains_key(&key) {
            return Err(PoissonError::DuplicateBracket(name(key.0), name(key.1)));
        }
        if !value.is_zero() {
            self.brackets.insert(key, value);
        }
        Ok(())
    }

    fn insert_differential(&mut self, g: GenId, value: Element) -> Result<(), PoissonError> {
        let name = self.gens.name(g)?.to_string();
        if !tables_match(value.table(), &self.gens) {
            return Err(CoreError::TableMismatch.into());
        }
        if value.field() != self.field {
            return Err(CoreError::FieldMismatch.into());
        }
        let expected = self.gens.degree(g)? + 1;
        match value.homogeneous_degree() {
            Homogeneity::Any => {}
            Homogeneity::Degree(d) if d == expected => {}
            _ => return Err(PoissonError::DifferentialDegreeMismatch(name, expected)),
        }
        if self.diffs.contains_key(&g) {
            return Err(PoissonError::DuplicateDifferential(name));
        }
        if !value.is_zero() {
            self.diffs.insert(g, value);
        }
        Ok(())
    }

    /// `{g_i, g_j}` for any orientation, from the stored table and graded
    /// antisymmetry.
    pub fn generator_bracket(&self, i: GenId, j: GenId) -> Result<Element, PoissonError> {
        self.gens.get(i)?;
        self.gens.get(j)?;
        if i <= j {
            Ok(self.brackets.get(&(i, j)).cloned().unwrap_or_else(|| self.zero()))
        } else {
            let di = self.gens.degree(i)?;
            let dj = self.gens.degree(j)?;
            let stored = self.brackets.get(&(j, i)).cloned().unwrap_or_else(|| self.zero());
            let p = self.bracket_degree;
            if koszul_parity(di + p, dj + p) {
                Ok(stored)
            } else {
                Ok(stored.neg())
            }
        }
    }

    pub fn generator_differential(&self, g: GenId) -> Result<Element, PoissonError> {
        self.gens.get(g)?;
        Ok(self.diffs.get(&g).cloned().unwrap_or_else(|| self.zero()))
    }

    /// Biderivation extension of the bracket table, bilinear over terms.
    pub fn bracket(&self, a: &Element, b: &Element) -> Result<Element, PoissonError> {
        self.check_element(a)?;
        self.check_element(b)?;
        let mut out = self.zero();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                let br = self.bracket_monomials(ma, mb)?;
                out = out.add(&br.scale(&ca.mul(cb)))?;
            }
        }
        Ok(out)
    }

    fn bracket_monomials(&self, m: &Monomial, n: &Monomial) -> Result<Element, PoissonError> {
        if m.is_one() || n.is_one() {
            return Ok(self.zero());
        }
        let p = self.bracket_degree;
        let (g, m_rest) = m.split_first().expect("nonunit monomial");
        if !m_rest.is_one() {
            // {g m', n} = (-1)^(|m'|(|n|+p)) {g, n} m' + g {m', n}
            let dm = m_rest.degree(&self.gens)?;
            let dn = n.degree(&self.gens)?;
            let g_elem = self.generator_element(g)?;
            let m_rest_elem = Element::from_monomial(
                self.gens.clone(),
                m_rest.clone(),
                Scalar::one(self.field),
            );
            let gm = Monomial::generator(g);
            let first = self.bracket_monomials(&gm, n)?.mul(&m_rest_elem)?;
            let first = if koszul_parity(dm, dn + p) { first.neg() } else { first };
            let second = g_elem.mul(&self.bracket_monomials(&m_rest, n)?)?;
            return Ok(first.add(&second)?);
        }
        let (h, n_rest) = n.split_first().expect("nonunit monomial");
        if !n_rest.is_one() {
            // {g, h n'} = {g, h} n' + (-1)^((|g|+p)|h|) h {g, n'}
            let dg = self.gens.degree(g)?;
            let dh = self.gens.degree(h)?;
            let h_elem = self.generator_element(h)?;
            let n_rest_elem = Element::from_monomial(
                self.gens.clone(),
                n_rest.clone(),
                Scalar::one(self.field),
            );
            let first = self.generator_bracket(g, h)?.mul(&n_rest_elem)?;
            let second = h_elem.mul(&self.bracket_monomials(&Monomial::generator(g), &n_rest)?)?;
            let second = if koszul_parity(dg + p, dh) { second.neg() } else { second };
            return Ok(first.add(&second)?);
        }
        self.generator_bracket(g, h)
    }

    /// Degree-1 derivation extension of the differential table.
    pub fn differential(&self, a: &Element) -> Result<Element, PoissonError> {
        self.check_element(a)?;
        let mut out = self.zero();
        for (m, c) in a.terms() {
            out = out.add(&self.differential_monomial(m)?.scale(c))?;
        }
        Ok(out)
    }

    fn differential_monomial(&self, m: &Monomial) -> Result<Element, PoissonError> {
        let Some((g, rest)) = m.split_first() else {
            return Ok(self.zero());
        };
        // d(g m') = d(g) m' + (-1)^(|g|) g d(m')
        let rest_elem =
            Element::from_monomial(self.gens.clone(), rest.clone(), Scalar::one(self.field));
        let first = self.generator_differential(g)?.mul(&rest_elem)?;
        let second = self.generator_element(g)?.mul(&self.differential_monomial(&rest)?)?;
        let dg = self.gens.degree(g)?;
        let second = if dg.rem_euclid(2) == 1 { second.neg() } else { second };
        Ok(first.add(&second)?)
    }

    fn check_element(&self, a: &Element) -> Result<(), PoissonError> {
        if !tables_match(a.table(), &self.gens) {
            return Err(CoreError::TableMismatch.into());
        }
        if a.field() != self.field {
            return Err(CoreError::FieldMismatch.into());
        }
        Ok(())
    }

    /// Same generators and differential, bracket table negated.
    pub fn opposite(&self) -> PoissonPresentation {
        PoissonPresentation {
            gens: self.gens.clone(),
            field: self.field,
            bracket_degree: self.bracket_degree,
            brackets: self.brackets.iter().map(|(k, v)| (*k, v.neg())).collect(),
            diffs: self.diffs.clone(),
        }
    }
}

/// Bracket on `A (x) B` for elements given as tensors with legs over the two
/// factors:
/// `{a(x)b, a'(x)b'} = (-1)^((|a'|+p)|b|) {a,a'} (x) bb'
///                   + (-1)^((|b|+p)|a'|) aa' (x) {b,b'}`.
pub fn tensor_bracket(
    pa: &PoissonPresentation,
    pb: &PoissonPresentation,
    s: &TensorElement,
    t: &TensorElement,
) -> Result<TensorElement, PoissonError> {
    if pa.bracket_degree != pb.bracket_degree || pa.field != pb.field {
        return Err(PoissonError::TensorFactorMismatch);
    }
    if !tables_match(s.left_table(), &pa.gens)
        || !tables_match(s.right_table(), &pb.gens)
        || !tables_match(t.left_table(), &pa.gens)
        || !tables_match(t.right_table(), &pb.gens)
    {
        return Err(CoreError::TableMismatch.into());
    }
    let p = pa.bracket_degree;
    let field = pa.field;
    let mut out = TensorElement::zero(pa.gens.clone(), pb.gens.clone(), field);
    for ((la, ra), cs) in s.terms() {
        let a = Element::from_monomial(pa.gens.clone(), la.clone(), Scalar::one(field));
        let b = Element::from_monomial(pb.gens.clone(), ra.clone(), Scalar::one(field));
        let da_r = ra.degree(&pb.gens)?;
        for ((lb, rb), ct) in t.terms() {
            let a2 = Element::from_monomial(pa.gens.clone(), lb.clone(), Scalar::one(field));
            let b2 = Element::from_monomial(pb.gens.clone(), rb.clone(), Scalar::one(field));
            let db_l = lb.degree(&pa.gens)?;
            let coeff = cs.mul(ct);

            let first = TensorElement::of(&pa.bracket(&a, &a2)?, &b.mul(&b2)?)?;
            let first = if koszul_parity(db_l + p, da_r) { first.neg() } else { first };
            let second = TensorElement::of(&a.mul(&a2)?, &pb.bracket(&b, &b2)?)?;
            let second = if koszul_parity(da_r + p, db_l) { second.neg() } else { second };
            out = out.add(&first.add(&second)?.scale(&coeff))?;
        }
    }
    Ok(out)
}

/// Differential on `A (x) B`: `d(a(x)b) = d(a)(x)b + (-1)^(|a|) a(x)d(b)`.
pub fn tensor_differential(
    pa: &PoissonPresentation,
    pb: &PoissonPresentation,
    s: &TensorElement,
) -> Result<TensorElement, PoissonError> {
    let field = pa.field;
    let mut out = TensorElement::zero(pa.gens.clone(), pb.gens.clone(), field);
    for ((l, r), c) in s.terms() {
        let a = Element::from_monomial(pa.gens.clone(), l.clone(), Scalar::one(field));
        let b = Element::from_monomial(pb.gens.clone(), r.clone(), Scalar::one(field));
        let first = TensorElement::of(&pa.differential(&a)?, &b)?;
        let second = TensorElement::of(&a, &pb.differential(&b)?)?;
        let second = if l.degree(&pa.gens)?.rem_euclid(2) == 1 { second.neg() } else { second };
        out = out.add(&first.add(&second)?.scale(c))?;
    }
    Ok(out)
}

/// Tensor product presentation on the disjoint union of generators, together
/// with the embeddings of both factors.
#[derive(Clone, Debug)]
pub struct TensorPresentation {
    pub joint: PoissonPresentation,
    left_ids: Vec<GenId>,
    right_ids: Vec<GenId>,
}

impl TensorPresentation {
    pub fn left_id(&self, g: GenId) -> GenId {
        self.left_ids[g as usize]
    }

    pub fn right_id(&self, g: GenId) -> GenId {
        self.right_ids[g as usize]
    }

    /// `a -> a (x) 1`.
    pub fn embed_left(&self, a: &Element) -> Result<Element, PoissonError> {
        embed(&self.joint, &self.left_ids, a)
    }

    /// `b -> 1 (x) b`.
    pub fn embed_right(&self, b: &Element) -> Result<Element, PoissonError> {
        embed(&self.joint, &self.right_ids, b)
    }

    /// Multiplies the legs of a tensor into the joint presentation.
    pub fn flatten(&self, t: &TensorElement) -> Result<Element, PoissonError> {
        let field = self.joint.field;
        let mut out = self.joint.zero();
        for ((l, r), c) in t.terms() {
            let la = embed_monomial(&self.joint, &self.left_ids, l, field)?;
            let rb = embed_monomial(&self.joint, &self.right_ids, r, field)?;
            out = out.add(&la.mul(&rb)?.scale(c))?;
        }
        Ok(out)
    }
}

fn embed(
    joint: &PoissonPresentation,
    map: &[GenId],
    a: &Element,
) -> Result<Element, PoissonError> {
    let mut out = joint.zero();
    for (m, c) in a.terms() {
        out = out.add(&embed_monomial(joint, map, m, joint.field)?.scale(c))?;
    }
    Ok(out)
}

fn embed_monomial(
    joint: &PoissonPresentation,
    map: &[GenId],
    m: &Monomial,
    field: FieldSpec,
) -> Result<Element, PoissonError> {
    // the id maps are monotone, so no resorting and no signs
    let word: Vec<(GenId, u32)> =
        m.exponents().iter().map(|&(g, e)| (map[g as usize], e)).collect();
    match gca_core::normalize_word(joint.generators(), &word)? {
        None => Ok(joint.zero()),
        Some((neg, mono)) => {
            let c = Scalar::one(field);
            let c = if neg { c.neg() } else { c };
            Ok(Element::from_monomial(joint.generators().clone(), mono, c))
        }
    }
}

/// Disjoint-union presentation for `A (x) B`. Right-hand generator names gain
/// primes while they collide with anything already present. Cross brackets of
/// generators vanish; the two-term bracket formula on general tensors then
/// follows by biderivation, which the checker verifies rather than assumes.
pub fn tensor_presentation(
    pa: &PoissonPresentation,
    pb: &PoissonPresentation,
) -> Result<TensorPresentation, PoissonError> {
    if pa.bracket_degree != pb.bracket_degree || pa.field != pb.field {
        return Err(PoissonError::TensorFactorMismatch);
    }
    let mut gens: Vec<Generator> = Vec::new();
    let mut left_ids = Vec::new();
    let mut right_ids = Vec::new();
    for (_, g) in pa.gens.iter() {
        left_ids.push(gens.len() as GenId);
        gens.push(g.clone());
    }
    for (_, g) in pb.gens.iter() {
        let mut name = g.name.clone();
        while gens.iter().any(|h| h.name == name) {
            name.push('\'');
        }
        right_ids.push(gens.len() as GenId);
        gens.push(Generator { name, degree: g.degree, truncation: g.truncation });
    }
    let table = GeneratorTable::new(gens)?;
    let joint = PoissonPresentation::abelian(table, pa.field, pa.bracket_degree);
    let mut tp = TensorPresentation { joint, left_ids, right_ids };

    let mut brackets = Vec::new();
    for (&(i, j), v) in &pa.brackets {
        brackets.push(((tp.left_id(i), tp.left_id(j)), tp.embed_left(v)?));
    }
    for (&(i, j), v) in &pb.brackets {
        brackets.push(((tp.right_id(i), tp.right_id(j)), tp.embed_right(v)?));
    }
    let mut diffs = Vec::new();
    for (&g, v) in &pa.diffs {
        diffs.push((tp.left_id(g), tp.embed_left(v)?));
    }
    for (&g, v) in &pb.diffs {
        diffs.push((tp.right_id(g), tp.embed_right(v)?));
    }
    for ((i, j), v) in brackets {
        tp.joint.insert_bracket(i, j, v)?;
    }
    for (g, v) in diffs {
        tp.joint.insert_differential(g, v)?;
    }
    Ok(tp)
}
