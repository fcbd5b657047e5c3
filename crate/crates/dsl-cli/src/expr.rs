//! Expression syntax and typed evaluation.
//!
//! Operator precedence, loosest first: `+ -`, then `#`, then `*`, then unary
//! minus, then `^`. Calls `d(.)`, `S(.)`, `eps(.)`, `Delta(.)`, `m(.)`,
//! `h(.)` are builtin; any other identifier is a generator reference.
//! Contexts keep the three value kinds apart: plain algebra elements, tensor
//! elements and enveloping-algebra elements never mix.

use num_bigint::BigInt;

use dg_poisson::PoissonPresentation;
use gca_core::{Element, Scalar, TensorElement};
use hopf::HopfPresentation;
use uea::{NcElement, RewriteSystem};

use crate::lexer::{lex_line, ParseError, Tok, Token};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Number { numer: BigInt, denom: BigInt },
    Gen(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Tensor(Box<Expr>, Box<Expr>),
    Bracket(Box<Expr>, Box<Expr>),
    Diff(Box<Expr>),
    Antipode(Box<Expr>),
    Counit(Box<Expr>),
    Coproduct(Box<Expr>),
    LetterM(Box<Expr>),
    LetterH(Box<Expr>),
}

/// Evaluation context, selecting the value kind of the whole expression.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Context {
    Algebra,
    Tensor,
    Uea,
}

impl Context {
    pub fn parse(name: &str) -> Option<Context> {
        match name {
            "algebra" => Some(Context::Algebra),
            "tensor" => Some(Context::Tensor),
            "uea" => Some(Context::Uea),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Element(Element),
    Tensor(TensorElement),
    Nc(NcElement),
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Value::Element(e) => write!(f, "{e}"),
            Value::Tensor(t) => write!(f, "{t}"),
            Value::Nc(e) => write!(f, "{e}"),
        }
    }
}

pub fn parse_expression(text: &str) -> Result<Expr, ParseError> {
    let tokens = lex_line(text, 1)?;
    let mut p = ExprParser { tokens, pos: 0 };
    let expr = p.sum()?;
    if p.pos != p.tokens.len() {
        let t = &p.tokens[p.pos];
        return Err(ParseError::new(t.line, t.col, format!("unexpected {}", t.tok)));
    }
    Ok(expr)
}

pub(crate) struct ExprParser {
    pub tokens: Vec<Token>,
    pub pos: usize,
}

impl ExprParser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn err_here(&self, message: impl Into<String>) -> ParseError {
        match self.tokens.get(self.pos).or_else(|| self.tokens.last()) {
            Some(t) => ParseError::new(t.line, t.col, message),
            None => ParseError::new(1, 1, message),
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        match self.bump() {
            Some(t) if t.tok == tok => Ok(()),
            Some(t) => Err(ParseError::new(
                t.line,
                t.col,
                format!("expected {tok}, found {}", t.tok),
            )),
            None => Err(self.err_here(format!("expected {tok}, found end of input"))),
        }
    }

    pub(crate) fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.tensor()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = Expr::Add(Box::new(acc), Box::new(self.tensor()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = Expr::Sub(Box::new(acc), Box::new(self.tensor()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn tensor(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.product()?;
        while self.peek() == Some(&Tok::Hash) {
            self.bump();
            acc = Expr::Tensor(Box::new(acc), Box::new(self.product()?));
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.unary()?;
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            acc = Expr::Mul(Box::new(acc), Box::new(self.unary()?));
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let exp = match self.bump() {
                Some(Token { tok: Tok::Int(n), line, col }) => {
                    u32::try_from(&n).map_err(|_| {
                        ParseError::new(line, col, "exponent does not fit in 32 bits")
                    })?
                }
                Some(t) => {
                    return Err(ParseError::new(
                        t.line,
                        t.col,
                        format!("expected a nonnegative integer exponent, found {}", t.tok),
                    ))
                }
                None => return Err(self.err_here("expected an exponent")),
            };
            return Ok(Expr::Pow(Box::new(base), exp));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.bump() {
            Some(Token { tok: Tok::Int(numer), .. }) => {
                // a following `/ INT` forms a rational literal
                if self.peek() == Some(&Tok::Slash) {
                    self.bump();
                    match self.bump() {
                        Some(Token { tok: Tok::Int(denom), line, col }) => {
                            if denom == BigInt::from(0) {
                                return Err(ParseError::new(line, col, "zero denominator"));
                            }
                            Ok(Expr::Number { numer, denom })
                        }
                        Some(t) => Err(ParseError::new(
                            t.line,
                            t.col,
                            format!("expected a denominator, found {}", t.tok),
                        )),
                        None => Err(self.err_here("expected a denominator")),
                    }
                } else {
                    Ok(Expr::Number { numer, denom: BigInt::from(1) })
                }
            }
            Some(Token { tok: Tok::Ident(name), .. }) => {
                let is_call = self.peek() == Some(&Tok::LParen);
                let builtin: Option<fn(Box<Expr>) -> Expr> = match name.as_str() {
                    "d" => Some(Expr::Diff),
                    "S" => Some(Expr::Antipode),
                    "eps" => Some(Expr::Counit),
                    "Delta" => Some(Expr::Coproduct),
                    "m" => Some(Expr::LetterM),
                    "h" => Some(Expr::LetterH),
                    _ => None,
                };
                match (is_call, builtin) {
                    (true, Some(wrap)) => {
                        self.expect(Tok::LParen)?;
                        let inner = self.sum()?;
                        self.expect(Tok::RParen)?;
                        Ok(wrap(Box::new(inner)))
                    }
                    _ => Ok(Expr::Gen(name)),
                }
            }
            Some(Token { tok: Tok::LParen, .. }) => {
                let inner = self.sum()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            Some(Token { tok: Tok::LBrace, .. }) => {
                let left = self.sum()?;
                self.expect(Tok::Comma)?;
                let right = self.sum()?;
                self.expect(Tok::RBrace)?;
                Ok(Expr::Bracket(Box::new(left), Box::new(right)))
            }
            Some(t) => Err(ParseError::new(t.line, t.col, format!("unexpected {}", t.tok))),
            None => Err(self.err_here("unexpected end of expression")),
        }
    }
}

#[derive(thiserror::Error, Debug)]
pub enum EvalError {
    #[error("{0}")]
    Type(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error(transparent)]
    Core(#[from] gca_core::CoreError),
    #[error(transparent)]
    Poisson(#[from] dg_poisson::PoissonError),
    #[error(transparent)]
    Hopf(#[from] hopf::HopfError),
    #[error(transparent)]
    Uea(#[from] uea::UeaError),
}

/// Everything an expression may refer to. Missing pieces surface as typed
/// errors when an operator actually needs them.
pub struct EvalEnv<'a> {
    pub base: &'a PoissonPresentation,
    pub hopf: Option<&'a HopfPresentation>,
    pub system: Option<&'a RewriteSystem>,
    /// restricts to `+ - * ^`, numbers, generators (and `#` for tensors),
    /// for presentation table entries
    pub tables_only: bool,
}

impl<'a> EvalEnv<'a> {
    pub fn new(base: &'a PoissonPresentation) -> Self {
        EvalEnv { base, hopf: None, system: None, tables_only: false }
    }

    fn hopf(&self) -> Result<&'a HopfPresentation, EvalError> {
        self.hopf.ok_or_else(|| {
            EvalError::Type("this operation needs a Hopf block in the presentation".into())
        })
    }

    fn system(&self) -> Result<&'a RewriteSystem, EvalError> {
        self.system.ok_or_else(|| {
            EvalError::Type("internal: enveloping-algebra context without a rewrite system".into())
        })
    }

    fn forbid_in_tables(&self, what: &str) -> Result<(), EvalError> {
        if self.tables_only {
            return Err(EvalError::Type(format!(
                "{what} is not allowed in presentation table entries"
            )));
        }
        Ok(())
    }

    pub fn eval(&self, expr: &Expr, ctx: Context) -> Result<Value, EvalError> {
        match ctx {
            Context::Algebra => Ok(Value::Element(self.eval_algebra(expr)?)),
            Context::Tensor => Ok(Value::Tensor(self.eval_tensor(expr)?)),
            Context::Uea => Ok(Value::Nc(self.eval_uea(expr)?)),
        }
    }

    pub fn eval_algebra(&self, expr: &Expr) -> Result<Element, EvalError> {
        let gens = self.base.generators().clone();
        let field = self.base.field();
        match expr {
            Expr::Number { numer, denom } => {
                let c = Scalar::from_ratio(field, numer, denom)?;
                Ok(Element::scalar(gens, c))
            }
            Expr::Gen(name) => {
                let id = gens
                    .id_of(name)
                    .ok_or_else(|| EvalError::UnknownGenerator(name.clone()))?;
                Ok(Element::generator(gens, field, id)?)
            }
            Expr::Neg(a) => Ok(self.eval_algebra(a)?.neg()),
            Expr::Add(a, b) => Ok(self.eval_algebra(a)?.add(&self.eval_algebra(b)?)?),
            Expr::Sub(a, b) => Ok(self.eval_algebra(a)?.sub(&self.eval_algebra(b)?)?),
            Expr::Mul(a, b) => Ok(self.eval_algebra(a)?.mul(&self.eval_algebra(b)?)?),
            Expr::Pow(a, e) => Ok(self.eval_algebra(a)?.pow(*e)?),
            Expr::Bracket(a, b) => {
                self.forbid_in_tables("the bracket")?;
                Ok(self.base.bracket(&self.eval_algebra(a)?, &self.eval_algebra(b)?)?)
            }
            Expr::Diff(a) => {
                self.forbid_in_tables("the differential")?;
                Ok(self.base.differential(&self.eval_algebra(a)?)?)
            }
            Expr::Antipode(a) => {
                self.forbid_in_tables("the antipode")?;
                Ok(self.hopf()?.antipode(&self.eval_algebra(a)?)?)
            }
            Expr::Counit(a) => {
                self.forbid_in_tables("the counit")?;
                let eps = self.hopf()?.counit(&self.eval_algebra(a)?)?;
                Ok(Element::scalar(gens, eps))
            }
            Expr::Coproduct(_) => Err(EvalError::Type(
                "Delta produces a tensor; evaluate it in the tensor context".into(),
            )),
            Expr::Tensor(_, _) => Err(EvalError::Type(
                "`#` is not available in the algebra context".into(),
            )),
            Expr::LetterM(_) | Expr::LetterH(_) => Err(EvalError::Type(
                "m(.) and h(.) live in the enveloping-algebra context".into(),
            )),
        }
    }

    pub fn eval_tensor(&self, expr: &Expr) -> Result<TensorElement, EvalError> {
        let gens = self.base.generators().clone();
        let field = self.base.field();
        match expr {
            Expr::Number { numer, denom } => {
                let c = Scalar::from_ratio(field, numer, denom)?;
                Ok(TensorElement::one(gens.clone(), gens, field).scale(&c))
            }
            Expr::Tensor(a, b) => {
                Ok(TensorElement::of(&self.eval_algebra(a)?, &self.eval_algebra(b)?)?)
            }
            Expr::Coproduct(a) => {
                self.forbid_in_tables("Delta")?;
                Ok(self.hopf()?.coproduct(&self.eval_algebra(a)?)?)
            }
            Expr::Neg(a) => Ok(self.eval_tensor(a)?.neg()),
            Expr::Add(a, b) => Ok(self.eval_tensor(a)?.add(&self.eval_tensor(b)?)?),
            Expr::Sub(a, b) => Ok(self.eval_tensor(a)?.sub(&self.eval_tensor(b)?)?),
            Expr::Mul(a, b) => Ok(self.eval_tensor(a)?.mul(&self.eval_tensor(b)?)?),
            Expr::Pow(a, e) => Ok(self.eval_tensor(a)?.pow(*e)?),
            Expr::Bracket(a, b) => {
                self.forbid_in_tables("the bracket")?;
                Ok(dg_poisson::tensor_bracket(
                    self.base,
                    self.base,
                    &self.eval_tensor(a)?,
                    &self.eval_tensor(b)?,
                )?)
            }
            Expr::Diff(a) => {
                self.forbid_in_tables("the differential")?;
                Ok(dg_poisson::tensor_differential(self.base, self.base, &self.eval_tensor(a)?)?)
            }
            Expr::Gen(name) => Err(EvalError::Type(format!(
                "bare generator `{name}` in the tensor context; write `{name} # 1` or `1 # {name}`"
            ))),
            Expr::Antipode(_) | Expr::Counit(_) => Err(EvalError::Type(
                "S(.) and eps(.) are algebra-context operations".into(),
            )),
            Expr::LetterM(_) | Expr::LetterH(_) => Err(EvalError::Type(
                "m(.) and h(.) live in the enveloping-algebra context".into(),
            )),
        }
    }

    pub fn eval_uea(&self, expr: &Expr) -> Result<NcElement, EvalError> {
        let sys = self.system()?;
        let field = self.base.field();
        match expr {
            Expr::Number { numer, denom } => {
                let c = Scalar::from_ratio(field, numer, denom)?;
                Ok(sys.one().scale(&c))
            }
            Expr::LetterM(a) => Ok(sys.map_m(&self.eval_algebra(a)?)?),
            Expr::LetterH(a) => Ok(sys.map_h(&self.eval_algebra(a)?)?),
            Expr::Neg(a) => Ok(self.eval_uea(a)?.neg()),
            Expr::Add(a, b) => Ok(self.eval_uea(a)?.add(&self.eval_uea(b)?)?),
            Expr::Sub(a, b) => Ok(self.eval_uea(a)?.sub(&self.eval_uea(b)?)?),
            Expr::Mul(a, b) => Ok(sys.mul(&self.eval_uea(a)?, &self.eval_uea(b)?)?),
            Expr::Pow(a, e) => {
                let base = self.eval_uea(a)?;
                let mut acc = sys.one();
                for _ in 0..*e {
                    acc = sys.mul(&acc, &base)?;
                }
                Ok(acc)
            }
            Expr::Diff(a) => Ok(sys.d_e(&self.eval_uea(a)?)?),
            Expr::Antipode(a) => Ok(sys.antipode_e(&self.eval_uea(a)?)?),
            Expr::Counit(a) => {
                let eps = sys.counit_e(&self.eval_uea(a)?)?;
                Ok(sys.one().scale(&eps))
            }
            Expr::Gen(name) => Err(EvalError::Type(format!(
                "bare generator `{name}` in the enveloping-algebra context; write `m({name})` or `h({name})`"
            ))),
            Expr::Bracket(_, _) => Err(EvalError::Type(
                "the brace bracket is an algebra-context operation".into(),
            )),
            Expr::Coproduct(_) | Expr::Tensor(_, _) => Err(EvalError::Type(
                "tensors of enveloping-algebra elements are not evaluable here".into(),
            )),
        }
    }
}
