//! Line-oriented presentation files.
//!
//! ```text
//! field gf(5)              # or: field rationals
//! bracket_degree 0
//! gen x deg 0 pow 5
//! bracket {x, y} = y
//! d x = ...
//! hopf {
//!   coproduct x = x # 1 + 1 # x
//!   counit x = 0
//!   antipode x = -x
//! }
//! ```
//!
//! Table entries are validated as they are read: degree homogeneity, declared
//! names, odd characteristic and the bracket-degree-zero restriction for Hopf
//! blocks all fail with the offending line and column.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use dg_poisson::{PoissonBuilder, PoissonPresentation};
use gca_core::{FieldSpec, Generator, GeneratorTable, Homogeneity, Scalar};
use hopf::HopfPresentation;

use crate::expr::{EvalEnv, ExprParser};
use crate::lexer::{lex_document, ParseError, Tok, Token};

/// A validated presentation: always a DG Poisson presentation, optionally
/// carrying a Hopf block.
#[derive(Clone, Debug, PartialEq)]
pub struct ParsedPresentation {
    pub base: PoissonPresentation,
    pub hopf: Option<HopfPresentation>,
}

struct LineParser {
    tokens: Vec<Token>,
    line: usize,
}

impl LineParser {
    fn new(tokens: Vec<Token>) -> Self {
        let line = tokens.first().map(|t| t.line).unwrap_or(0);
        LineParser { tokens, line }
    }

    fn keyword(&self) -> Option<&str> {
        match self.tokens.first().map(|t| &t.tok) {
            Some(Tok::Ident(s)) => Some(s.as_str()),
            _ => None,
        }
    }

    fn err(&self, col: usize, message: impl Into<String>) -> ParseError {
        ParseError::new(self.line, col, message)
    }

    fn tok_at(&self, i: usize) -> Result<&Token, ParseError> {
        self.tokens.get(i).ok_or_else(|| {
            let col = self.tokens.last().map(|t| t.col + 1).unwrap_or(1);
            self.err(col, "unexpected end of line")
        })
    }

    fn ident_at(&self, i: usize) -> Result<(&str, usize), ParseError> {
        let t = self.tok_at(i)?;
        match &t.tok {
            Tok::Ident(s) => Ok((s.as_str(), t.col)),
            other => Err(ParseError::new(t.line, t.col, format!("expected a name, found {other}"))),
        }
    }

    fn expect_at(&self, i: usize, tok: Tok) -> Result<(), ParseError> {
        let t = self.tok_at(i)?;
        if t.tok == tok {
            Ok(())
        } else {
            Err(ParseError::new(t.line, t.col, format!("expected {tok}, found {}", t.tok)))
        }
    }

    fn int_at(&self, i: usize) -> Result<(BigInt, usize), ParseError> {
        // integer with optional leading minus
        let t = self.tok_at(i)?;
        match &t.tok {
            Tok::Int(n) => Ok((n.clone(), i + 1)),
            Tok::Minus => {
                let t2 = self.tok_at(i + 1)?;
                match &t2.tok {
                    Tok::Int(n) => Ok((-n.clone(), i + 2)),
                    other => Err(ParseError::new(
                        t2.line,
                        t2.col,
                        format!("expected an integer, found {other}"),
                    )),
                }
            }
            other => {
                Err(ParseError::new(t.line, t.col, format!("expected an integer, found {other}")))
            }
        }
    }

    fn end_at(&self, i: usize) -> Result<(), ParseError> {
        if let Some(t) = self.tokens.get(i) {
            return Err(ParseError::new(t.line, t.col, format!("unexpected {}", t.tok)));
        }
        Ok(())
    }

    /// Parses the remainder of the line, from token `i`, as an expression.
    fn expr_from(&self, i: usize) -> Result<crate::expr::Expr, ParseError> {
        let mut p = ExprParser { tokens: self.tokens[i..].to_vec(), pos: 0 };
        let expr = p.sum()?;
        if p.pos + i != self.tokens.len() {
            let t = &self.tokens[i + p.pos];
            return Err(ParseError::new(t.line, t.col, format!("unexpected {}", t.tok)));
        }
        Ok(expr)
    }
}

pub fn parse_presentation(text: &str) -> Result<ParsedPresentation, ParseError> {
    let lines: Vec<LineParser> = lex_document(text)?.into_iter().map(LineParser::new).collect();

    let mut field: Option<(FieldSpec, usize)> = None;
    let mut bracket_degree: Option<(i64, usize)> = None;
    let mut gens: Vec<Generator> = Vec::new();
    let mut gen_lines: Vec<usize> = Vec::new();
    struct TableLine {
        line: usize,
        kind: Kind,
    }
    enum Kind {
        Bracket(String, String, crate::expr::Expr),
        Diff(String, crate::expr::Expr),
        Coproduct(String, crate::expr::Expr),
        Counit(String, crate::expr::Expr),
        Antipode(String, crate::expr::Expr),
    }
    let mut entries: Vec<TableLine> = Vec::new();
    let mut has_hopf_block = false;
    let mut in_hopf = false;

    for lp in &lines {
        if in_hopf {
            if lp.tokens.len() == 1 && lp.tokens[0].tok == Tok::RBrace {
                in_hopf = false;
                continue;
            }
            let (kw, col) = lp.ident_at(0)?;
            match kw {
                "coproduct" | "counit" | "antipode" => {
                    let (name, _) = lp.ident_at(1)?;
                    lp.expect_at(2, Tok::Equals)?;
                    let expr = lp.expr_from(3)?;
                    let kind = match kw {
                        "coproduct" => Kind::Coproduct(name.to_string(), expr),
                        "counit" => Kind::Counit(name.to_string(), expr),
                        _ => Kind::Antipode(name.to_string(), expr),
                    };
                    entries.push(TableLine { line: lp.line, kind });
                }
                other => {
                    return Err(lp.err(
                        col,
                        format!("expected coproduct/counit/antipode or `}}`, found `{other}`"),
                    ))
                }
            }
            continue;
        }
        let Some(kw) = lp.keyword() else {
            let t = &lp.tokens[0];
            return Err(ParseError::new(t.line, t.col, format!("unexpected {}", t.tok)));
        };
        match kw {
            "field" => {
                if field.is_some() {
                    return Err(lp.err(1, "field declared twice"));
                }
                if !gens.is_empty() {
                    return Err(lp.err(1, "the field must be declared before any generator"));
                }
                let (name, col) = lp.ident_at(1)?;
                let spec = match name {
                    "rationals" => {
                        lp.end_at(2)?;
                        FieldSpec::Rationals
                    }
                    "gf" => {
                        lp.expect_at(2, Tok::LParen)?;
                        let (q, next) = lp.int_at(3)?;
                        lp.expect_at(next, Tok::RParen)?;
                        lp.end_at(next + 1)?;
                        let q = q.to_u64().ok_or_else(|| lp.err(col, "modulus out of range"))?;
                        FieldSpec::prime(q).map_err(|e| lp.err(col, e.to_string()))?
                    }
                    other => {
                        return Err(lp.err(col, format!("unknown field `{other}`")));
                    }
                };
                field = Some((spec, lp.line));
            }
            "bracket_degree" => {
                if bracket_degree.is_some() {
                    return Err(lp.err(1, "bracket_degree declared twice"));
                }
                if !gens.is_empty() {
                    return Err(lp.err(1, "bracket_degree must precede the generators"));
                }
                let (n, next) = lp.int_at(1)?;
                lp.end_at(next)?;
                let p = n.to_i64().ok_or_else(|| lp.err(1, "bracket degree out of range"))?;
                bracket_degree = Some((p, lp.line));
            }
            "gen" => {
                let (name, name_col) = lp.ident_at(1)?;
                let (kw2, _) = lp.ident_at(2)?;
                if kw2 != "deg" {
                    return Err(lp.err(lp.tok_at(2)?.col, "expected `deg`"));
                }
                let (deg, mut next) = lp.int_at(3)?;
                let degree =
                    deg.to_i64().ok_or_else(|| lp.err(name_col, "degree out of range"))?;
                let mut truncation = None;
                if lp.tokens.get(next).is_some() {
                    let (kw3, col3) = lp.ident_at(next)?;
                    if kw3 != "pow" {
                        return Err(lp.err(col3, "expected `pow`"));
                    }
                    let (n, after) = lp.int_at(next + 1)?;
                    truncation = Some(
                        n.to_u32().ok_or_else(|| lp.err(col3, "power bound out of range"))?,
                    );
                    next = after;
                }
                lp.end_at(next)?;
                if gens.iter().any(|g| g.name == name) {
                    return Err(lp.err(name_col, format!("duplicate generator `{name}`")));
                }
                if truncation.is_some_and(|n| n < 2) {
                    return Err(lp.err(name_col, "a power bound must be at least 2"));
                }
                gens.push(Generator { name: name.to_string(), degree, truncation });
                gen_lines.push(lp.line);
            }
            "bracket" => {
                lp.expect_at(1, Tok::LBrace)?;
                let (a, _) = lp.ident_at(2)?;
                lp.expect_at(3, Tok::Comma)?;
                let (b, _) = lp.ident_at(4)?;
                lp.expect_at(5, Tok::RBrace)?;
                lp.expect_at(6, Tok::Equals)?;
                let expr = lp.expr_from(7)?;
                entries.push(TableLine {
                    line: lp.line,
                    kind: Kind::Bracket(a.to_string(), b.to_string(), expr),
                });
            }
            "d" => {
                let (name, _) = lp.ident_at(1)?;
                lp.expect_at(2, Tok::Equals)?;
                let expr = lp.expr_from(3)?;
                entries.push(TableLine { line: lp.line, kind: Kind::Diff(name.to_string(), expr) });
            }
            "hopf" => {
                lp.expect_at(1, Tok::LBrace)?;
                lp.end_at(2)?;
                if has_hopf_block {
                    return Err(lp.err(1, "hopf block declared twice"));
                }
                has_hopf_block = true;
                in_hopf = true;
            }
            other => {
                return Err(lp.err(
                    lp.tokens[0].col,
                    format!("unknown statement `{other}` (expected field, bracket_degree, gen, bracket, d or hopf)"),
                ));
            }
        }
    }
    if in_hopf {
        return Err(ParseError::new(
            lines.last().map(|l| l.line).unwrap_or(1),
            1,
            "unterminated hopf block",
        ));
    }

    let field = field.map(|(f, _)| f).unwrap_or(FieldSpec::Rationals);
    let p = bracket_degree.map(|(p, _)| p).unwrap_or(0);
    if has_hopf_block && p != 0 {
        let line = bracket_degree.map(|(_, l)| l).unwrap_or(1);
        return Err(ParseError::new(
            line,
            1,
            "a hopf block requires bracket degree 0",
        ));
    }

    let table = GeneratorTable::new(gens).map_err(|e| ParseError::new(1, 1, e.to_string()))?;
    let scaffold = PoissonPresentation::abelian(table.clone(), field, p);
    let env = EvalEnv {
        base: &scaffold,
        hopf: None,
        system: None,
        tables_only: true,
    };

    let mut builder = PoissonBuilder::new(table.clone(), field, p);
    struct HopfEntry {
        name: String,
        line: usize,
        value: HopfValue,
    }
    enum HopfValue {
        Coproduct(gca_core::TensorElement),
        Counit(Scalar),
        Antipode(gca_core::Element),
    }
    let mut hopf_entries: Vec<HopfEntry> = Vec::new();

    for entry in entries {
        let line = entry.line;
        let fail = |msg: String| ParseError::new(line, 1, msg);
        let gen_id = |name: &str| {
            table
                .id_of(name)
                .ok_or_else(|| fail(format!("undeclared generator `{name}`")))
        };
        match entry.kind {
            Kind::Bracket(a, b, expr) => {
                let (ga, gb) = (gen_id(&a)?, gen_id(&b)?);
                let value = env.eval_algebra(&expr).map_err(|e| fail(e.to_string()))?;
                let expected = table.degree(ga).unwrap() + table.degree(gb).unwrap() + p;
                check_degree(&value.homogeneous_degree(), expected, line, || {
                    format!("bracket {{{a}, {b}}} must be homogeneous of degree {expected}")
                })?;
                builder = builder.bracket(ga, gb, value);
            }
            Kind::Diff(name, expr) => {
                let g = gen_id(&name)?;
                let value = env.eval_algebra(&expr).map_err(|e| fail(e.to_string()))?;
                let expected = table.degree(g).unwrap() + 1;
                check_degree(&value.homogeneous_degree(), expected, line, || {
                    format!("d {name} must be homogeneous of degree {expected}")
                })?;
                builder = builder.differential(g, value);
            }
            Kind::Coproduct(name, expr) => {
                let g = gen_id(&name)?;
                let value = env.eval_tensor(&expr).map_err(|e| fail(e.to_string()))?;
                let expected = table.degree(g).unwrap();
                for ((l, r), _) in value.terms() {
                    let d = l.degree(&table).unwrap() + r.degree(&table).unwrap();
                    if d != expected {
                        return Err(fail(format!(
                            "coproduct {name} must have total degree {expected} in every term"
                        )));
                    }
                }
                hopf_entries.push(HopfEntry {
                    name,
                    line,
                    value: HopfValue::Coproduct(value),
                });
            }
            Kind::Counit(name, expr) => {
                gen_id(&name)?;
                let value = env.eval_algebra(&expr).map_err(|e| fail(e.to_string()))?;
                let constant = value.coefficient(&gca_core::Monomial::one());
                if !value
                    .sub(&gca_core::Element::scalar(table.clone(), constant.clone()))
                    .unwrap()
                    .is_zero()
                {
                    return Err(fail(format!("counit {name} must be a scalar")));
                }
                hopf_entries.push(HopfEntry { name, line, value: HopfValue::Counit(constant) });
            }
            Kind::Antipode(name, expr) => {
                let g = gen_id(&name)?;
                let value = env.eval_algebra(&expr).map_err(|e| fail(e.to_string()))?;
                let expected = table.degree(g).unwrap();
                check_degree(&value.homogeneous_degree(), expected, line, || {
                    format!("antipode {name} must be homogeneous of degree {expected}")
                })?;
                hopf_entries.push(HopfEntry { name, line, value: HopfValue::Antipode(value) });
            }
        }
    }

    let base = builder.build().map_err(|e| ParseError::new(1, 1, e.to_string()))?;
    let hopf = if has_hopf_block {
        let mut hb = HopfPresentation::builder(base.clone());
        for entry in hopf_entries {
            let fail = |msg: String| ParseError::new(entry.line, 1, msg);
            let g = table.id_of(&entry.name).expect("validated above");
            hb = match entry.value {
                HopfValue::Coproduct(v) => hb.coproduct(g, v),
                HopfValue::Counit(v) => {
                    if !v.is_zero() && table.degree(g).unwrap() != 0 {
                        return Err(fail(format!(
                            "counit {} must vanish on a nonzero-degree generator",
                            entry.name
                        )));
                    }
                    hb.counit(g, v)
                }
                HopfValue::Antipode(v) => hb.antipode(g, v),
            };
        }
        Some(hb.build().map_err(|e| ParseError::new(1, 1, e.to_string()))?)
    } else {
        None
    };
    Ok(ParsedPresentation { base, hopf })
}

fn check_degree(
    actual: &Homogeneity,
    expected: i64,
    line: usize,
    msg: impl Fn() -> String,
) -> Result<(), ParseError> {
    match actual {
        Homogeneity::Any => Ok(()),
        Homogeneity::Degree(d) if *d == expected => Ok(()),
        _ => Err(ParseError::new(line, 1, msg())),
    }
}
