//! Deterministic sampling: monomial enumeration and seeded random elements.

use std::collections::BTreeMap;
use std::sync::Arc;

use gca_core::{Element, FieldSpec, GeneratorTable, Monomial, Scalar};

/// SplitMix64: a small, portable, seedable generator. Sampling must reproduce
/// bit-for-bit across platforms, so no external RNG is used.
#[derive(Clone, Debug)]
pub struct SampleRng {
    state: u64,
}

impl SampleRng {
    pub fn new(seed: u64) -> Self {
        SampleRng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform draw from `0..n` (n > 0).
    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }

    /// Small nonzero coefficient in `-4..=4`.
    pub fn coefficient(&mut self, field: FieldSpec) -> Scalar {
        loop {
            let raw = (self.next_u64() % 9) as i64 - 4;
            let s = Scalar::from_i64(field, raw);
            if !s.is_zero() {
                return s;
            }
        }
    }
}

/// All monomials with total exponent at most `bound`, respecting odd-square
/// and truncation constraints, in canonical order.
pub fn enumerate_monomials(table: &Arc<GeneratorTable>, bound: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut word: Vec<(u32, u32)> = Vec::new();
    fn recurse(
        table: &GeneratorTable,
        gen: u32,
        budget: u32,
        word: &mut Vec<(u32, u32)>,
        out: &mut Vec<Monomial>,
    ) {
        if gen as usize == table.len() {
            let (neg, m) = gca_core::normalize_word(table, word)
                .expect("enumerated word is valid")
                .expect("enumerated word is nonzero");
            debug_assert!(!neg);
            out.push(m);
            return;
        }
        let odd = table.is_odd(gen).unwrap();
        let trunc = table.truncation(gen).unwrap();
        let mut max = budget;
        if odd {
            max = max.min(1);
        }
        if let Some(n) = trunc {
            max = max.min(n - 1);
        }
        for e in 0..=max {
            if e > 0 {
                word.push((gen, e));
            }
            recurse(table, gen + 1, budget - e, word, out);
            if e > 0 {
                word.pop();
            }
        }
    }
    recurse(table, 0, bound, &mut word, &mut out);
    out.sort();
    out
}

/// Monomials of `pool` grouped by internal degree.
pub fn group_by_degree(
    table: &Arc<GeneratorTable>,
    pool: &[Monomial],
) -> BTreeMap<i64, Vec<Monomial>> {
    let mut groups: BTreeMap<i64, Vec<Monomial>> = BTreeMap::new();
    for m in pool {
        let d = m.degree(table).expect("monomial over table");
        groups.entry(d).or_default().push(m.clone());
    }
    groups
}

/// Random element: up to `max_terms` monomials from the pool with small
/// nonzero coefficients. May cancel to fewer terms.
pub fn random_element(
    rng: &mut SampleRng,
    table: &Arc<GeneratorTable>,
    field: FieldSpec,
    pool: &[Monomial],
    max_terms: usize,
) -> Element {
    let mut acc = Element::zero(table.clone(), field);
    if pool.is_empty() {
        return acc;
    }
    let terms = 1 + rng.below(max_terms);
    for _ in 0..terms {
        let m = pool[rng.below(pool.len())].clone();
        let c = rng.coefficient(field);
        acc = acc
            .add(&Element::from_monomial(table.clone(), m, c))
            .expect("same table");
    }
    acc
}

/// Random homogeneous element: picks one degree class of the pool.
pub fn random_homogeneous_element(
    rng: &mut SampleRng,
    table: &Arc<GeneratorTable>,
    field: FieldSpec,
    groups: &BTreeMap<i64, Vec<Monomial>>,
    max_terms: usize,
) -> Element {
    if groups.is_empty() {
        return Element::zero(table.clone(), field);
    }
    let keys: Vec<i64> = groups.keys().copied().collect();
    let degree = keys[rng.below(keys.len())];
    random_element(rng, table, field, &groups[&degree], max_terms)
}
