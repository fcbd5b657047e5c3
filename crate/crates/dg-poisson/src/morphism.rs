//! Degree-0 algebra morphisms between presentations, given by generator
//! images and extended multiplicatively.

use std::collections::BTreeMap;

use gca_core::{tables_match, CoreError, Element, GenId, Homogeneity, Monomial};

use crate::presentation::{PoissonError, PoissonPresentation};
use crate::report::Report;
use crate::sample::enumerate_monomials;

#[derive(Clone, Debug)]
pub struct MorphismSpec {
    source: PoissonPresentation,
    target: PoissonPresentation,
    images: BTreeMap<GenId, Element>,
}

impl MorphismSpec {
    pub fn new(
        source: PoissonPresentation,
        target: PoissonPresentation,
        images: Vec<(GenId, Element)>,
    ) -> Result<Self, PoissonError> {
        if source.field() != target.field() {
            return Err(CoreError::FieldMismatch.into());
        }
        let mut map = BTreeMap::new();
        for (g, image) in images {
            let name = source.generators().name(g)?.to_string();
            if !tables_match(image.table(), target.generators()) {
                return Err(CoreError::TableMismatch.into());
            }
            let expected = source.generators().degree(g)?;
            match image.homogeneous_degree() {
                Homogeneity::Any => {}
                Homogeneity::Degree(d) if d == expected => {}
                _ => return Err(PoissonError::MorphismDegreeMismatch(name, expected)),
            }
            map.insert(g, image);
        }
        for id in source.generators().ids() {
            if !map.contains_key(&id) {
                let name = source.generators().name(id)?.to_string();
                return Err(PoissonError::MorphismImageMissing(name));
            }
        }
        Ok(MorphismSpec { source, target, images: map })
    }

    pub fn by_name(
        source: PoissonPresentation,
        target: PoissonPresentation,
        images: Vec<(&str, Element)>,
    ) -> Result<Self, PoissonError> {
        let mut by_id = Vec::new();
        for (name, image) in images {
            let id = source
                .generators()
                .id_of(name)
                .ok_or_else(|| CoreError::UnknownGeneratorName(name.into()))?;
            by_id.push((id, image));
        }
        MorphismSpec::new(source, target, by_id)
    }

    pub fn identity(p: &PoissonPresentation) -> Result<Self, PoissonError> {
        let images = p
            .generators()
            .ids()
            .map(|g| Ok((g, p.generator_element(g)?)))
            .collect::<Result<Vec<_>, PoissonError>>()?;
        MorphismSpec::new(p.clone(), p.clone(), images)
    }

    pub fn source(&self) -> &PoissonPresentation {
        &self.source
    }

    pub fn target(&self) -> &PoissonPresentation {
        &self.target
    }

    pub fn image_of(&self, g: GenId) -> Result<&Element, PoissonError> {
        self.images.get(&g).ok_or_else(|| {
            PoissonError::from(CoreError::UnknownGenerator(g))
        })
    }

    /// Multiplicative, linear extension of the generator images.
    pub fn apply(&self, a: &Element) -> Result<Element, PoissonError> {
        if !tables_match(a.table(), self.source.generators()) {
            return Err(CoreError::TableMismatch.into());
        }
        let mut out = self.target.zero();
        for (m, c) in a.terms() {
            out = out.add(&self.apply_monomial(m)?.scale(c))?;
        }
        Ok(out)
    }

    fn apply_monomial(&self, m: &Monomial) -> Result<Element, PoissonError> {
        let mut acc = self.target.one();
        for &(g, e) in m.exponents() {
            acc = acc.mul(&self.image_of(g)?.pow(e)?)?;
        }
        Ok(acc)
    }

    /// Verifies that the map respects the differential and the bracket, on
    /// generators and on all monomials up to the bound.
    pub fn check(&self, degree_bound: u32) -> Report {
        let mut report = Report::new("dg-poisson morphism");
        let run = |report: &mut Report| -> Result<(), PoissonError> {
            let gens = self.source.generators();
            let pool = enumerate_monomials(gens, degree_bound);
            for m in &pool {
                let a = Element::from_monomial(
                    gens.clone(),
                    m.clone(),
                    gca_core::Scalar::one(self.source.field()),
                );
                let lhs = self.apply(&self.source.differential(&a)?)?;
                let rhs = self.target.differential(&self.apply(&a)?)?;
                report.check_eq("morphism commutes with the differential", &a, &lhs, &rhs);
            }
            for (i, mi) in pool.iter().enumerate() {
                for mj in pool.iter().skip(i) {
                    if mi.total_exponent() + mj.total_exponent() > degree_bound as u64 {
                        continue;
                    }
                    let a = Element::from_monomial(
                        gens.clone(),
                        mi.clone(),
                        gca_core::Scalar::one(self.source.field()),
                    );
                    let b = Element::from_monomial(
                        gens.clone(),
                        mj.clone(),
                        gca_core::Scalar::one(self.source.field()),
                    );
                    let lhs = self.apply(&self.source.bracket(&a, &b)?)?;
                    let rhs = self.target.bracket(&self.apply(&a)?, &self.apply(&b)?)?;
                    let witness = format!("({a}, {b})");
                    report.check_eq("morphism preserves the bracket", witness, &lhs, &rhs);
                }
            }
            Ok(())
        };
        if let Err(e) = run(&mut report) {
            report.record_violation("morphism evaluation error", "-", e.to_string(), "-");
        }
        report
    }
}
