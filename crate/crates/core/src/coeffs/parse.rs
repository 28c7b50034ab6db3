//! Parser for the coefficient string grammar.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' ['-'] integer)?
//! atom   := integer | symbol | '(' expr ')'
//! symbol := a | b | c | q | t | alpha | α
//! ```
//!
//! Accepts everything the canonical printer emits, plus arbitrary rational
//! expressions such as `(1 - a)*(1 + b)/(a - b)`.

use std::str::FromStr;

use num_bigint::BigInt;

use super::coeff::Coeff;
use super::poly::Symbol;
use crate::error::{Error, Result};

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            chars: src.char_indices().collect(),
            pos: 0,
            src,
        }
    }

    fn offset(&self) -> usize {
        self.chars
            .get(self.pos)
            .map(|(i, _)| *i)
            .unwrap_or(self.src.len())
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.offset(),
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|(_, c)| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|(_, c)| *c)
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn expr(&mut self) -> Result<Coeff> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                '-' => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Coeff> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                '*' => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                '/' => {
                    self.bump();
                    let at = self.offset();
                    let rhs = self.unary()?;
                    acc = acc.checked_div(&rhs).map_err(|_| Error::Parse {
                        pos: at,
                        msg: "division by zero".into(),
                    })?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Coeff> {
        match self.peek() {
            Some('-') => {
                self.bump();
                Ok(-self.unary()?)
            }
            Some('+') => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Coeff> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.bump();
            let neg = if self.peek() == Some('-') {
                self.bump();
                true
            } else {
                false
            };
            let at = self.offset();
            let e = self.integer()?;
            let e: i64 = e.try_into().map_err(|_| Error::Parse {
                pos: at,
                msg: "exponent too large".into(),
            })?;
            let e = if neg { -e } else { e };
            return base.pow(e).map_err(|_| Error::Parse {
                pos: at,
                msg: "negative power of zero".into(),
            });
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|(_, c)| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        let digits: String = self.chars[start..self.pos].iter().map(|(_, c)| c).collect();
        Ok(digits.parse().expect("ascii digits"))
    }

    fn atom(&mut self) -> Result<Coeff> {
        match self.peek() {
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return self.err("expected ')'");
                }
                self.bump();
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => Ok(Coeff::from_bigint(self.integer()?)),
            Some(c) if c.is_alphabetic() => {
                let start = self.pos;
                while self.chars.get(self.pos).is_some_and(|(_, c)| c.is_alphabetic()) {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().map(|(_, c)| c).collect();
                match Symbol::from_name(&name) {
                    Some(s) => Ok(Coeff::symbol(s)),
                    None => {
                        self.pos = start;
                        self.err(format!("unknown symbol {name:?}"))
                    }
                }
            }
            Some(c) => self.err(format!("unexpected {c:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

impl FromStr for Coeff {
    type Err = Error;

    fn from_str(s: &str) -> Result<Coeff> {
        let mut p = Parser::new(s);
        let value = p.expr()?;
        if p.peek().is_some() {
            return p.err("trailing input");
        }
        Ok(value)
    }
}
