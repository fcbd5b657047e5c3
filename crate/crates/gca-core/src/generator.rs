//! Named graded generators with optional pure-power truncation.

use std::sync::Arc;

use crate::error::CoreError;

/// Index of a generator inside its table. The declaration order is the
/// canonical total order used everywhere for sorting and sign counting.
pub type GenId = u32;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Generator {
    pub name: String,
    pub degree: i64,
    /// `Some(n)` means the pure power relation `g^n = 0`.
    pub truncation: Option<u32>,
}

impl Generator {
    pub fn new(name: impl Into<String>, degree: i64) -> Self {
        Generator { name: name.into(), degree, truncation: None }
    }

    pub fn truncated(name: impl Into<String>, degree: i64, bound: u32) -> Self {
        Generator { name: name.into(), degree, truncation: Some(bound) }
    }
}

/// Ordered list of generators; the listed order is canonical.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeneratorTable {
    gens: Vec<Generator>,
}

impl GeneratorTable {
    pub fn new(gens: Vec<Generator>) -> Result<Arc<Self>, CoreError> {
        for (i, g) in gens.iter().enumerate() {
            if gens[..i].iter().any(|other| other.name == g.name) {
                return Err(CoreError::DuplicateGenerator(g.name.clone()));
            }
            if let Some(n) = g.truncation {
                if n < 2 {
                    return Err(CoreError::InvalidTruncation(g.name.clone()));
                }
            }
        }
        Ok(Arc::new(GeneratorTable { gens }))
    }

    pub fn empty() -> Arc<Self> {
        Arc::new(GeneratorTable { gens: Vec::new() })
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn get(&self, id: GenId) -> Result<&Generator, CoreError> {
        self.gens.get(id as usize).ok_or(CoreError::UnknownGenerator(id))
    }

    pub fn degree(&self, id: GenId) -> Result<i64, CoreError> {
        Ok(self.get(id)?.degree)
    }

    pub fn is_odd(&self, id: GenId) -> Result<bool, CoreError> {
        Ok(self.degree(id)?.rem_euclid(2) == 1)
    }

    pub fn truncation(&self, id: GenId) -> Result<Option<u32>, CoreError> {
        Ok(self.get(id)?.truncation)
    }

    pub fn name(&self, id: GenId) -> Result<&str, CoreError> {
        Ok(self.get(id)?.name.as_str())
    }

    pub fn id_of(&self, name: &str) -> Option<GenId> {
        self.gens.iter().position(|g| g.name == name).map(|i| i as GenId)
    }

    pub fn ids(&self) -> impl Iterator<Item = GenId> + '_ {
        0..self.gens.len() as GenId
    }

    pub fn iter(&self) -> impl Iterator<Item = (GenId, &Generator)> {
        self.gens.iter().enumerate().map(|(i, g)| (i as GenId, g))
    }
}

/// Two elements interoperate when their tables are the same allocation or
/// structurally equal.
pub fn tables_match(a: &Arc<GeneratorTable>, b: &Arc<GeneratorTable>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}
