//! Sign-normalized monomials over a generator table.
//!
//! A monomial stores a sparse exponent vector in canonical generator order.
//! Odd-degree generators never carry an exponent above 1: graded commutativity
//! forces `2g^2 = 0`, and the characteristic is never 2. Truncated generators
//! stay strictly below their bound. Words violating either constraint
//! normalize to zero.

use std::cmp::Ordering;

use crate::error::CoreError;
use crate::generator::{GenId, GeneratorTable};

/// Exponent vector sorted by generator id, every exponent at least 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<(GenId, u32)>,
}

impl Monomial {
    /// The empty monomial, i.e. the unit.
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn generator(id: GenId) -> Self {
        Monomial { exps: vec![(id, 1)] }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponents(&self) -> &[(GenId, u32)] {
        &self.exps
    }

    pub fn exponent_of(&self, id: GenId) -> u32 {
        self.exps
            .iter()
            .find_map(|&(g, e)| (g == id).then_some(e))
            .unwrap_or(0)
    }

    /// Sum of exponents (the word length of the monomial).
    pub fn total_exponent(&self) -> u64 {
        self.exps.iter().map(|&(_, e)| e as u64).sum()
    }

    /// Internal degree with respect to the grading of the table.
    pub fn degree(&self, table: &GeneratorTable) -> Result<i64, CoreError> {
        let mut d = 0i64;
        for &(g, e) in &self.exps {
            d += table.degree(g)? * e as i64;
        }
        Ok(d)
    }

    /// First factor and the remaining monomial, or `None` on the unit.
    pub fn split_first(&self) -> Option<(GenId, Monomial)> {
        let &(g, e) = self.exps.first()?;
        let mut rest = self.clone();
        if e > 1 {
            rest.exps[0].1 = e - 1;
        } else {
            rest.exps.remove(0);
        }
        Some((g, rest))
    }
}

// Graded lexicographic order: shorter words first; among equal lengths the
// monomial with the higher power of the earliest differing generator sorts
// first, so sums print as `x^2 + x*y + y^2`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let grading = self.total_exponent().cmp(&other.total_exponent());
        if grading != Ordering::Equal {
            return grading;
        }
        let mut a = self.exps.iter();
        let mut b = other.exps.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Greater,
                (Some(_), None) => return Ordering::Less,
                (Some(&(ga, ea)), Some(&(gb, eb))) => {
                    let step = ga.cmp(&gb).then(eb.cmp(&ea));
                    if step != Ordering::Equal {
                        return step;
                    }
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sorts a word of generator powers into canonical order, accumulating the
/// Koszul sign from each odd-odd transposition. Returns `None` when the word
/// collapses to zero (an odd square or a truncated power reaching its bound),
/// otherwise the sign (`true` = negative) and the canonical monomial.
pub fn normalize_word(
    table: &GeneratorTable,
    word: &[(GenId, u32)],
) -> Result<Option<(bool, Monomial)>, CoreError> {
    let mut negative = false;
    let mut odd_seen: Vec<GenId> = Vec::new();
    let mut exps: Vec<(GenId, u32)> = Vec::new();

    for &(g, e) in word {
        if e == 0 {
            continue;
        }
        let gen = table.get(g)?;
        let odd = gen.degree.rem_euclid(2) == 1;
        if odd {
            if e >= 2 || odd_seen.contains(&g) {
                return Ok(None);
            }
            // sign: this letter hops over every previously seen odd letter
            // that sorts after it
            let inversions = odd_seen.iter().filter(|&&h| h > g).count();
            if inversions % 2 == 1 {
                negative = !negative;
            }
            odd_seen.push(g);
        }
        match exps.iter_mut().find(|(h, _)| *h == g) {
            Some((_, acc)) => *acc += e,
            None => exps.push((g, e)),
        }
    }

    for &(g, e) in &exps {
        if let Some(bound) = table.truncation(g)? {
            if e >= bound {
                return Ok(None);
            }
        }
    }

    exps.sort_by_key(|&(g, _)| g);
    Ok(Some((negative, Monomial { exps })))
}

/// Product of two canonical monomials with Koszul sign, or `None` if zero.
pub fn mul_monomials(
    table: &GeneratorTable,
    a: &Monomial,
    b: &Monomial,
) -> Result<Option<(bool, Monomial)>, CoreError> {
    let mut word = Vec::with_capacity(a.exps.len() + b.exps.len());
    word.extend_from_slice(&a.exps);
    word.extend_from_slice(&b.exps);
    normalize_word(table, &word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::Generator;

    fn ef_table() -> std::sync::Arc<GeneratorTable> {
        GeneratorTable::new(vec![Generator::new("e", 0), Generator::new("f", 1)]).unwrap()
    }

    fn odd_pair_table() -> std::sync::Arc<GeneratorTable> {
        GeneratorTable::new(vec![Generator::new("f", 1), Generator::new("g", 1)]).unwrap()
    }

    // independent oracle: bubble-sort the fully expanded letter sequence and
    // count odd-odd adjacent swaps
    fn brute_force_sign(table: &GeneratorTable, word: &[(GenId, u32)]) -> Option<bool> {
        let mut letters = Vec::new();
        for &(g, e) in word {
            for _ in 0..e {
                letters.push(g);
            }
        }
        let mut negative = false;
        let n = letters.len();
        for _ in 0..n {
            for i in 0..n.saturating_sub(1) {
                if letters[i] > letters[i + 1] {
                    let odd_l = table.is_odd(letters[i]).unwrap();
                    let odd_r = table.is_odd(letters[i + 1]).unwrap();
                    if odd_l && odd_r {
                        negative = !negative;
                    }
                    letters.swap(i, i + 1);
                }
            }
        }
        // zero detection: odd square or truncation overflow
        for (i, &g) in letters.iter().enumerate() {
            if i > 0 && letters[i - 1] == g && table.is_odd(g).unwrap() {
                return None;
            }
        }
        for id in table.ids() {
            if let Some(bound) = table.truncation(id).unwrap() {
                if letters.iter().filter(|&&g| g == id).count() as u32 >= bound {
                    return None;
                }
            }
        }
        Some(negative)
    }

    #[test]
    fn even_odd_swap_has_no_sign() {
        let t = ef_table();
        let (neg, m) = normalize_word(&t, &[(1, 1), (0, 1)]).unwrap().unwrap();
        assert!(!neg);
        assert_eq!(m.exponents(), &[(0, 1), (1, 1)]);
    }

    #[test]
    fn odd_odd_swap_is_negative() {
        let t = odd_pair_table();
        // g*f with canonical order f < g
        let (neg, m) = normalize_word(&t, &[(1, 1), (0, 1)]).unwrap().unwrap();
        assert!(neg);
        assert_eq!(m.exponents(), &[(0, 1), (1, 1)]);
        assert_eq!(brute_force_sign(&t, &[(1, 1), (0, 1)]), Some(true));
    }

    #[test]
    fn odd_square_vanishes() {
        let t = ef_table();
        assert_eq!(normalize_word(&t, &[(1, 1), (1, 1)]).unwrap(), None);
        assert_eq!(normalize_word(&t, &[(1, 2)]).unwrap(), None);
    }

    #[test]
    fn truncated_power_vanishes() {
        let t = GeneratorTable::new(vec![Generator::truncated("x", 0, 5)]).unwrap();
        assert!(normalize_word(&t, &[(0, 4)]).unwrap().is_some());
        assert_eq!(normalize_word(&t, &[(0, 5)]).unwrap(), None);
        assert_eq!(normalize_word(&t, &[(0, 4), (0, 1)]).unwrap(), None);
    }

    #[test]
    fn normalization_is_idempotent() {
        let t = odd_pair_table();
        let (neg, m) = normalize_word(&t, &[(1, 1), (0, 1)]).unwrap().unwrap();
        assert!(neg);
        let (neg2, m2) = normalize_word(&t, m.exponents()).unwrap().unwrap();
        assert!(!neg2);
        assert_eq!(m, m2);
    }

    #[test]
    fn sign_matches_brute_force_on_random_words() {
        let t = GeneratorTable::new(vec![
            Generator::new("a", 0),
            Generator::new("f", 1),
            Generator::new("g", 1),
            Generator::new("h", 3),
        ])
        .unwrap();
        // small deterministic sweep over words of length 3
        let letters: Vec<(GenId, u32)> = (0..4).map(|g| (g, 1)).collect();
        for &x in &letters {
            for &y in &letters {
                for &z in &letters {
                    let word = [x, y, z];
                    let fast = normalize_word(&t, &word).unwrap().map(|(n, _)| n);
                    assert_eq!(fast, brute_force_sign(&t, &word), "word {word:?}");
                }
            }
        }
    }
}
