//! Tokenizer shared by the presentation parser and the expression parser.
//!
//! A line whose first non-blank character is `#` is a comment; everywhere
//! else `#` is the tensor operator.

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
#[error("line {line}, column {col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, col: usize, message: impl Into<String>) -> Self {
        ParseError { line, col, message: message.into() }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Tok {
    Ident(String),
    Int(BigInt),
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
    Equals,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Hash,
}

impl std::fmt::Display for Tok {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::LBrace => write!(f, "`{{`"),
            Tok::RBrace => write!(f, "`}}`"),
            Tok::Comma => write!(f, "`,`"),
            Tok::Equals => write!(f, "`=`"),
            Tok::Plus => write!(f, "`+`"),
            Tok::Minus => write!(f, "`-`"),
            Tok::Star => write!(f, "`*`"),
            Tok::Slash => write!(f, "`/`"),
            Tok::Caret => write!(f, "`^`"),
            Tok::Hash => write!(f, "`#`"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
}

/// Tokenizes one line. `line_no` is 1-based and is carried into every token.
pub fn lex_line(text: &str, line_no: usize) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            ' ' | '\t' | '\r' => {
                i += 1;
            }
            '(' => {
                out.push(Token { tok: Tok::LParen, line: line_no, col });
                i += 1;
            }
            ')' => {
                out.push(Token { tok: Tok::RParen, line: line_no, col });
                i += 1;
            }
            '{' => {
                out.push(Token { tok: Tok::LBrace, line: line_no, col });
                i += 1;
            }
            '}' => {
                out.push(Token { tok: Tok::RBrace, line: line_no, col });
                i += 1;
            }
            ',' => {
                out.push(Token { tok: Tok::Comma, line: line_no, col });
                i += 1;
            }
            '=' => {
                out.push(Token { tok: Tok::Equals, line: line_no, col });
                i += 1;
            }
            '+' => {
                out.push(Token { tok: Tok::Plus, line: line_no, col });
                i += 1;
            }
            '-' => {
                out.push(Token { tok: Tok::Minus, line: line_no, col });
                i += 1;
            }
            '*' => {
                out.push(Token { tok: Tok::Star, line: line_no, col });
                i += 1;
            }
            '/' => {
                out.push(Token { tok: Tok::Slash, line: line_no, col });
                i += 1;
            }
            '^' => {
                out.push(Token { tok: Tok::Caret, line: line_no, col });
                i += 1;
            }
            '#' => {
                out.push(Token { tok: Tok::Hash, line: line_no, col });
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                let value = digits.parse::<BigInt>().expect("digits parse");
                out.push(Token { tok: Tok::Int(value), line: line_no, col });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || chars[i] == '\'')
                {
                    i += 1;
                }
                let name: String = chars[start..i].iter().collect();
                out.push(Token { tok: Tok::Ident(name), line: line_no, col });
            }
            other => {
                return Err(ParseError::new(
                    line_no,
                    col,
                    format!("unexpected character `{other}`"),
                ));
            }
        }
    }
    Ok(out)
}

/// Splits a document into lexed statement lines, dropping blank and comment
/// lines.
pub fn lex_document(text: &str) -> Result<Vec<Vec<Token>>, ParseError> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let toks = lex_line(raw, line_no)?;
        if !toks.is_empty() {
            out.push(toks);
        }
    }
    Ok(out)
}
