//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := primary ['^' uint]
//! primary := rational | var | '(' expr ')'
//! ```

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exact::{MultiPoly, Rational};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub expected: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: expected {}", self.line, self.column, self.expected)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
    End,
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    line: usize,
    col: usize,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { chars: src.char_indices().peekable(), line: 1, col: 1 }
    }

    fn bump(&mut self) -> Option<char> {
        let (_, c) = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn tokens(mut self) -> Result<Vec<Spanned>, ParseError> {
        let mut out = Vec::new();
        loop {
            while self.chars.peek().is_some_and(|(_, c)| c.is_whitespace()) {
                self.bump();
            }
            let (line, col) = (self.line, self.col);
            let Some(&(_, c)) = self.chars.peek() else {
                out.push(Spanned { tok: Tok::End, line, col });
                return Ok(out);
            };
            let tok = if c.is_ascii_digit() {
                let mut s = String::new();
                while let Some(&(_, d)) = self.chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    s.push(d);
                    self.bump();
                }
                Tok::Num(s.parse().expect("digits"))
            } else if c.is_alphabetic() || c == '_' {
                let mut s = String::new();
                while let Some(&(_, d)) = self.chars.peek() {
                    if !(d.is_alphanumeric() || d == '_') {
                        break;
                    }
                    s.push(d);
                    self.bump();
                }
                Tok::Ident(s)
            } else if "+-*/^()".contains(c) {
                self.bump();
                Tok::Sym(c)
            } else {
                return Err(ParseError { line, column: col, expected: "a number, variable, operator or parenthesis".into() });
            };
            out.push(Spanned { tok, line, col });
        }
    }
}

struct Parser<'v> {
    toks: Vec<Spanned>,
    pos: usize,
    vars: &'v [String],
}

impl Parser<'_> {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn fail<T>(&self, expected: &str) -> Result<T, ParseError> {
        let t = self.peek();
        Err(ParseError { line: t.line, column: t.col, expected: expected.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek().tok == Tok::Sym(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MultiPoly, ParseError> {
        let negate = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn uint(&mut self) -> Result<BigInt, ParseError> {
        match self.peek().tok.clone() {
            Tok::Num(n) => {
                self.pos += 1;
                Ok(n)
            }
            _ => self.fail("an unsigned integer"),
        }
    }

    fn factor(&mut self) -> Result<MultiPoly, ParseError> {
        let base = self.primary()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let here = self.peek().clone();
        let e = self.uint()?;
        let e: u32 = e.try_into().map_err(|_| ParseError {
            line: here.line,
            column: here.col,
            expected: "an exponent that fits in 32 bits".into(),
        })?;
        Ok(base.pow(e))
    }

    fn primary(&mut self) -> Result<MultiPoly, ParseError> {
        match self.peek().tok.clone() {
            Tok::Num(n) => {
                self.pos += 1;
                let value = if self.eat('/') {
                    let here = self.peek().clone();
                    let den = self.uint()?;
                    if den.is_zero() {
                        return Err(ParseError { line: here.line, column: here.col, expected: "a nonzero denominator".into() });
                    }
                    Rational::new(n, den)
                } else {
                    Rational::from_integer(n)
                };
                Ok(MultiPoly::constant(self.vars, value))
            }
            Tok::Ident(name) => {
                if !self.vars.contains(&name) {
                    return self.fail(&format!("a declared variable (one of {})", self.vars.join(", ")));
                }
                self.pos += 1;
                Ok(MultiPoly::var(self.vars, &name).expect("declared"))
            }
            Tok::Sym('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return self.fail("')'");
                }
                Ok(inner)
            }
            _ => self.fail("a number, variable or '('"),
        }
    }
}

/// Parses `src` over the declared variables.
pub fn parse_poly<S: AsRef<str>>(src: &str, vars: &[S]) -> Result<MultiPoly, ParseError> {
    let vars: Vec<String> = vars.iter().map(|s| s.as_ref().to_string()).collect();
    let toks = Lexer::new(src).tokens()?;
    let mut p = Parser { toks, pos: 0, vars: &vars };
    let out = p.expr()?;
    if p.peek().tok != Tok::End {
        return p.fail("an operator or end of input");
    }
    Ok(out)
}

/// Parses a rational literal such as `-3/4`.
pub fn parse_rational(src: &str) -> Result<Rational, ParseError> {
    let none: [&str; 0] = [];
    let p = parse_poly(src.trim(), &none)?;
    Ok(p.constant_value().unwrap_or_default())
}
