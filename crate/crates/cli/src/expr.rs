//! Arithmetic expressions in `X, Y` or in `n`.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := '-' factor | atom ('^' uint)?
//! atom     := rational | 'X' | 'Y' | 'n' | '(' expr ')'
//! rational := int ('/' uint)?
//! ```
//!
//! Unary minus binds looser than `^`, so `-X^2` is `-(X^2)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;
use torus_core::{CurveElement, Rational, RawBivariate, UniPoly, Var};

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symbol {
    X,
    Y,
    N,
}

impl Symbol {
    fn family(self) -> Family {
        match self {
            Symbol::X | Symbol::Y => Family::Curve,
            Symbol::N => Family::Knot,
        }
    }
}

/// Which ring an expression lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// No variables at all.
    Constant,
    /// Uses `X` and/or `Y`.
    Curve,
    /// Uses `n`.
    Knot,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Const(Rational),
    Var(Symbol),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Neg(Box<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },
    #[error("column {column}: cannot mix n with X and Y in one expression")]
    MixedVariables { column: usize },
}

impl ParseError {
    pub fn column(&self) -> usize {
        match self {
            ParseError::Syntax { column, .. } | ParseError::MixedVariables { column } => *column,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(String),
    Sym(Symbol),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(s) => write!(f, "'{s}'"),
            Tok::Sym(Symbol::X) => f.write_str("'X'"),
            Tok::Sym(Symbol::Y) => f.write_str("'Y'"),
            Tok::Sym(Symbol::N) => f.write_str("'n'"),
            Tok::Plus => f.write_str("'+'"),
            Tok::Minus => f.write_str("'-'"),
            Tok::Star => f.write_str("'*'"),
            Tok::Slash => f.write_str("'/'"),
            Tok::Caret => f.write_str("'^'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

/// Tokens paired with their 1-based column.
fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Int(chars[start..i].iter().collect()), column));
                continue;
            }
            'X' => Tok::Sym(Symbol::X),
            'Y' => Tok::Sym(Symbol::Y),
            'n' => Tok::Sym(Symbol::N),
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => {
                return Err(ParseError::Syntax {
                    column,
                    message: format!("unexpected character '{other}'"),
                })
            }
        };
        out.push((tok, column));
        i += 1;
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    family: Option<(Family, usize)>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn column(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if t.0 != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        ParseError::Syntax {
            column: self.column(),
            message: format!("expected {wanted}, found {}", self.peek()),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let column = self.column();
        let exp = self.uint("a nonnegative integer exponent")?;
        match exp.to_u32() {
            Some(e) if e <= MAX_EXPONENT => Ok(Expr::Pow(Box::new(base), e)),
            _ => Err(ParseError::Syntax {
                column,
                message: format!("exponent exceeds {MAX_EXPONENT}"),
            }),
        }
    }

    fn uint(&mut self, wanted: &str) -> Result<BigInt, ParseError> {
        match self.peek().clone() {
            Tok::Int(digits) => {
                self.bump();
                Ok(digits.parse().expect("lexer yields digits"))
            }
            _ => Err(self.unexpected(wanted)),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Int(_) => {
                let num = self.uint("an integer")?;
                if *self.peek() != Tok::Slash {
                    return Ok(Expr::Const(Rational::from_integer(num)));
                }
                self.bump();
                let column = self.column();
                let den = self.uint("a denominator")?;
                if den.is_zero() {
                    return Err(ParseError::Syntax {
                        column,
                        message: "zero denominator".to_string(),
                    });
                }
                Ok(Expr::Const(Rational::new(num, den)))
            }
            Tok::Sym(s) => {
                let (_, column) = self.bump();
                self.note_family(s.family(), column)?;
                Ok(Expr::Var(s))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.unexpected("')'"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.unexpected("a number, X, Y, n or '('")),
        }
    }

    fn note_family(&mut self, family: Family, column: usize) -> Result<(), ParseError> {
        match self.family {
            None => self.family = Some((family, column)),
            Some((seen, _)) if seen != family => return Err(ParseError::MixedVariables { column }),
            Some(_) => {}
        }
        Ok(())
    }
}

/// A parsed expression together with the ring its variables belong to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parsed {
    pub expr: Expr,
    pub family: Family,
}

pub fn parse_expression(src: &str) -> Result<Parsed, ParseError> {
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
        family: None,
    };
    let expr = p.expr()?;
    if *p.peek() != Tok::End {
        let wanted = if *p.peek() == Tok::Slash {
            "an operator ('/' is only allowed inside a number such as 1/2)"
        } else {
            "an operator or end of input"
        };
        return Err(p.unexpected(wanted));
    }
    let family = p.family.map_or(Family::Constant, |(f, _)| f);
    Ok(Parsed { expr, family })
}

impl Expr {
    /// Expansion in `X` and `Y` without reduction. `n` is not allowed here.
    pub fn to_raw(&self) -> Option<RawBivariate> {
        Some(match self {
            Expr::Const(c) => RawBivariate::constant(c.clone()),
            Expr::Var(Symbol::X) => RawBivariate::x(),
            Expr::Var(Symbol::Y) => RawBivariate::y(),
            Expr::Var(Symbol::N) => return None,
            Expr::Add(a, b) => &a.to_raw()? + &b.to_raw()?,
            Expr::Sub(a, b) => &a.to_raw()? - &b.to_raw()?,
            Expr::Mul(a, b) => &a.to_raw()? * &b.to_raw()?,
            Expr::Pow(a, e) => a.to_raw()?.pow(*e),
            Expr::Neg(a) => -&a.to_raw()?,
        })
    }

    /// The curve-ring element, reduced to normal form.
    pub fn to_curve(&self) -> Option<CurveElement> {
        self.to_raw().map(|r| r.normal_form())
    }

    /// Expansion as a polynomial in `n`. `X` and `Y` are not allowed here.
    pub fn to_poly(&self) -> Option<UniPoly> {
        Some(match self {
            Expr::Const(c) => UniPoly::constant(Var::N, c.clone()),
            Expr::Var(Symbol::N) => UniPoly::identity(Var::N),
            Expr::Var(_) => return None,
            Expr::Add(a, b) => &a.to_poly()? + &b.to_poly()?,
            Expr::Sub(a, b) => &a.to_poly()? - &b.to_poly()?,
            Expr::Mul(a, b) => &a.to_poly()? * &b.to_poly()?,
            Expr::Pow(a, e) => a.to_poly()?.pow(*e),
            Expr::Neg(a) => -&a.to_poly()?,
        })
    }
}

impl Parsed {
    /// The expression as a function of `n`: directly for `n`-expressions,
    /// through `X = n^2 - 1`, `Y = n^3 - n` for curve expressions.
    pub fn to_function(&self) -> UniPoly {
        match self.family {
            Family::Curve => self.expr.to_curve().expect("curve family").to_function(),
            Family::Constant | Family::Knot => self.expr.to_poly().expect("knot family"),
        }
    }
}
