//! Canonical printing of presentations: fixed statement order, table entries
//! in canonical term order, coefficients as reduced fractions or least
//! residues. Printing then reparsing reproduces the presentation exactly.

use crate::parser::ParsedPresentation;

pub fn print_presentation(p: &ParsedPresentation) -> String {
    let base = &p.base;
    let gens = base.generators();
    let mut out = String::new();
    out.push_str(&format!("field {}\n", base.field()));
    out.push_str(&format!("bracket_degree {}\n", base.bracket_degree()));
    for (_, g) in gens.iter() {
        match g.truncation {
            Some(n) => out.push_str(&format!("gen {} deg {} pow {}\n", g.name, g.degree, n)),
            None => out.push_str(&format!("gen {} deg {}\n", g.name, g.degree)),
        }
    }
    for (&(i, j), value) in base.bracket_entries() {
        let a = gens.name(i).unwrap_or("?");
        let b = gens.name(j).unwrap_or("?");
        out.push_str(&format!("bracket {{{a}, {b}}} = {value}\n"));
    }
    for (&g, value) in base.differential_entries() {
        let name = gens.name(g).unwrap_or("?");
        out.push_str(&format!("d {name} = {value}\n"));
    }
    if let Some(h) = &p.hopf {
        out.push_str("hopf {\n");
        for g in gens.ids() {
            let name = gens.name(g).unwrap_or("?");
            let delta = h.generator_coproduct(g).expect("complete table");
            out.push_str(&format!("  coproduct {name} = {delta}\n"));
        }
        for g in gens.ids() {
            let eps = h.generator_counit(g).expect("valid id");
            if !eps.is_zero() {
                let name = gens.name(g).unwrap_or("?");
                out.push_str(&format!("  counit {name} = {eps}\n"));
            }
        }
        for g in gens.ids() {
            let name = gens.name(g).unwrap_or("?");
            let s = h.generator_antipode(g).expect("complete table");
            out.push_str(&format!("  antipode {name} = {s}\n"));
        }
        out.push_str("}\n");
    }
    out
}
