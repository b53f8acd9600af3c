//! Textual polynomial expressions.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! expr    := term (("+"|"-") term)*
//! term    := factor (("*")? factor)*        juxtaposition multiplies
//! factor  := atom ("^" uint)?
//! atom    := int ("/" uint)? | var | "(" expr ")" | "-" factor
//! ```
//!
//! `3x^2 - 1/2 x + 4` and `(x+1)^4 + (x+3)^4 - 50` are both valid. `^` binds
//! tighter than unary minus, so `-x^2` means `-(x^2)`. The slash only forms
//! rational literals between two integer literals; dividing general
//! subexpressions is rejected so the language stays polynomial-closed. One
//! variable symbol is permitted per expression, `x` by default.

use std::str::FromStr;

use num_bigint::BigInt;

use crate::poly::{Polynomial, Rational};

#[derive(Debug, Clone, thiserror::Error, PartialEq)]
pub enum ParseError {
    #[error("syntax error at byte {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("unsupported exponent at byte {pos}: {message}")]
    UnsupportedExponent { pos: usize, message: String },
    #[error("multiple variables in one expression: {first:?} and {second:?}")]
    MultipleVariables { first: String, second: String },
}

fn syntax(pos: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        pos,
        message: message.into(),
    }
}

/// Expression tree produced by [`parse`]. Exponents are literal nonnegative
/// integers; exactly one variable symbol may occur.
#[derive(Debug, Clone, PartialEq)]
pub enum ExprAst {
    Int(BigInt),
    Rat(Rational),
    Var,
    Neg(Box<ExprAst>),
    Add(Box<ExprAst>, Box<ExprAst>),
    Sub(Box<ExprAst>, Box<ExprAst>),
    Mul(Box<ExprAst>, Box<ExprAst>),
    Pow(Box<ExprAst>, u32),
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let mut tokens = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some((i, c)) = chars.next() {
        match c {
            c if c.is_whitespace() => {}
            '+' => tokens.push((i, Token::Plus)),
            '-' | '−' => tokens.push((i, Token::Minus)),
            '*' => tokens.push((i, Token::Star)),
            '^' => tokens.push((i, Token::Caret)),
            '/' => tokens.push((i, Token::Slash)),
            '(' => tokens.push((i, Token::LParen)),
            ')' => tokens.push((i, Token::RParen)),
            '0'..='9' => {
                let mut end = i + c.len_utf8();
                while let Some(&(j, d)) = chars.peek() {
                    if d.is_ascii_digit() {
                        end = j + d.len_utf8();
                        chars.next();
                    } else {
                        break;
                    }
                }
                let digits = &text[i..end];
                let value = BigInt::from_str(digits)
                    .map_err(|e| syntax(i, format!("bad integer literal: {e}")))?;
                tokens.push((i, Token::Int(value)));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut end = i + c.len_utf8();
                while let Some(&(j, d)) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        end = j + d.len_utf8();
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push((i, Token::Ident(text[i..end].to_string())));
            }
            _ => return Err(syntax(i, format!("unexpected character {c:?}"))),
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    text_len: usize,
    accepted: Vec<&'a str>,
    seen_var: Option<String>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(p, _)| *p)
            .unwrap_or(self.text_len)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<ExprAst, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    let rhs = self.term()?;
                    lhs = ExprAst::Add(Box::new(lhs), Box::new(rhs));
                }
                Some(Token::Minus) => {
                    self.bump();
                    let rhs = self.term()?;
                    lhs = ExprAst::Sub(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<ExprAst, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.bump();
                    let rhs = self.factor()?;
                    lhs = ExprAst::Mul(Box::new(lhs), Box::new(rhs));
                }
                // Juxtaposition: a following integer, variable, or "(" starts
                // a new factor. A "-" here is always the binary operator.
                Some(Token::Int(_)) | Some(Token::Ident(_)) | Some(Token::LParen) => {
                    let rhs = self.factor()?;
                    lhs = ExprAst::Mul(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<ExprAst, ParseError> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Token::Caret)) {
            self.bump();
            let pos = self.here();
            let exp = match self.bump() {
                Some(Token::Int(v)) => u32::try_from(&v).map_err(|_| {
                    ParseError::UnsupportedExponent {
                        pos,
                        message: format!("exponent {v} is too large"),
                    }
                })?,
                Some(Token::Minus) => {
                    return Err(ParseError::UnsupportedExponent {
                        pos,
                        message: "negative exponents are not allowed".into(),
                    })
                }
                other => {
                    return Err(ParseError::UnsupportedExponent {
                        pos,
                        message: format!(
                            "exponent must be a literal nonnegative integer, found {other:?}"
                        ),
                    })
                }
            };
            return Ok(ExprAst::Pow(Box::new(base), exp));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<ExprAst, ParseError> {
        let pos = self.here();
        match self.bump() {
            Some(Token::Int(value)) => {
                // optional "/ uint" makes a rational literal
                if matches!(self.peek(), Some(Token::Slash)) {
                    self.bump();
                    let dpos = self.here();
                    match self.bump() {
                        Some(Token::Int(den)) => {
                            if den == BigInt::from(0) {
                                return Err(syntax(dpos, "zero denominator"));
                            }
                            Ok(ExprAst::Rat(Rational::new(value, den)))
                        }
                        other => Err(syntax(
                            dpos,
                            format!("expected integer denominator, found {other:?}"),
                        )),
                    }
                } else {
                    Ok(ExprAst::Int(value))
                }
            }
            Some(Token::Ident(name)) => {
                if !self.accepted.iter().any(|v| *v == name) {
                    return Err(syntax(pos, format!("unknown variable {name:?}")));
                }
                match &self.seen_var {
                    Some(prev) if *prev != name => Err(ParseError::MultipleVariables {
                        first: prev.clone(),
                        second: name,
                    }),
                    _ => {
                        self.seen_var = Some(name);
                        Ok(ExprAst::Var)
                    }
                }
            }
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(syntax(pos, "unclosed parenthesis")),
                }
            }
            Some(Token::Minus) => {
                let inner = self.factor()?;
                Ok(ExprAst::Neg(Box::new(inner)))
            }
            Some(tok) => Err(syntax(pos, format!("unexpected token {tok:?}"))),
            None => Err(syntax(pos, "unexpected end of input")),
        }
    }
}

fn parse_with_accepted(text: &str, accepted: Vec<&str>) -> Result<ExprAst, ParseError> {
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        text_len: text.len(),
        accepted,
        seen_var: None,
    };
    let ast = parser.expr()?;
    if parser.pos < parser.tokens.len() {
        return Err(syntax(parser.here(), "trailing input"));
    }
    Ok(ast)
}

/// Parses an expression over the variable `x`.
pub fn parse(text: &str) -> Result<ExprAst, ParseError> {
    parse_with_accepted(text, vec!["x"])
}

/// Parses an expression accepting either `x` or the given alias as the
/// variable name. Using both names in one expression is an error.
pub fn parse_with_alias(text: &str, alias: &str) -> Result<ExprAst, ParseError> {
    parse_with_accepted(text, vec!["x", alias])
}

/// Expands an AST to a canonical [`Polynomial`] with exact arithmetic.
pub fn expand(ast: &ExprAst) -> Polynomial {
    match ast {
        ExprAst::Int(v) => Polynomial::constant(Rational::from_integer(v.clone())),
        ExprAst::Rat(r) => Polynomial::constant(r.clone()),
        ExprAst::Var => Polynomial::x(),
        ExprAst::Neg(inner) => expand(inner).neg(),
        ExprAst::Add(a, b) => expand(a).add(&expand(b)),
        ExprAst::Sub(a, b) => expand(a).sub(&expand(b)),
        ExprAst::Mul(a, b) => expand(a).mul(&expand(b)),
        ExprAst::Pow(base, k) => expand(base).pow(*k),
    }
}

/// Parse-and-expand in one step.
pub fn parse_polynomial(text: &str) -> Result<Polynomial, ParseError> {
    Ok(expand(&parse(text)?))
}
