//! Parser for the canonical rational-function string form, e.g.
//! `(3*t1+3*t2)*(q^2-1)/(q^2-q+1)`. Printing and parsing round-trip
//! exactly.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::{Poly, Rat};
use super::ratfunc::RatFunc;
use super::var::Var;
use crate::error::{Error, Result};

/// Parses a decimal or integer literal into an exact rational
/// (e.g. `0.31` -> 31/100, `-3` -> -3).
pub fn rat_from_str(s: &str) -> Result<Rat> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once('/') {
        let n = rat_from_str(a)?;
        let d = rat_from_str(b)?;
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        return Ok(n / d);
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let mk = |v: Rat| if neg { -v } else { v };
    if let Some((int, frac)) = body.split_once('.') {
        let int = if int.is_empty() { "0" } else { int };
        let digits = format!("{int}{frac}");
        let numer: BigInt = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad number `{s}`")))?;
        let mut denom = BigInt::one();
        for _ in 0..frac.len() {
            denom *= 10;
        }
        return Ok(mk(Rat::new(numer, denom)));
    }
    let numer: BigInt = body
        .parse()
        .map_err(|_| Error::Parse(format!("bad number `{s}`")))?;
    Ok(mk(Rat::from_integer(numer)))
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rat),
    Var(Var),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl<'a> Lexer<'a> {
    fn new(s: &'a str) -> Self {
        Lexer {
            chars: s.chars().peekable(),
        }
    }

    fn next_tok(&mut self) -> Result<Tok> {
        while let Some(c) = self.chars.peek() {
            if c.is_whitespace() {
                self.chars.next();
            } else {
                break;
            }
        }
        let c = match self.chars.peek() {
            None => return Ok(Tok::End),
            Some(c) => *c,
        };
        match c {
            '+' => {
                self.chars.next();
                Ok(Tok::Plus)
            }
            '-' => {
                self.chars.next();
                Ok(Tok::Minus)
            }
            '*' => {
                self.chars.next();
                Ok(Tok::Star)
            }
            '/' => {
                self.chars.next();
                Ok(Tok::Slash)
            }
            '^' => {
                self.chars.next();
                Ok(Tok::Caret)
            }
            '(' => {
                self.chars.next();
                Ok(Tok::LParen)
            }
            ')' => {
                self.chars.next();
                Ok(Tok::RParen)
            }
            c if c.is_ascii_digit() => {
                let mut buf = String::new();
                while let Some(c) = self.chars.peek() {
                    if c.is_ascii_digit() || *c == '.' {
                        buf.push(*c);
                        self.chars.next();
                    } else {
                        break;
                    }
                }
                Ok(Tok::Num(rat_from_str(&buf)?))
            }
            c if c.is_ascii_alphabetic() => {
                let mut buf = String::new();
                while let Some(c) = self.chars.peek() {
                    if c.is_ascii_alphanumeric() {
                        buf.push(*c);
                        self.chars.next();
                    } else {
                        break;
                    }
                }
                Ok(Tok::Var(Var::from_name(&buf)?))
            }
            other => Err(Error::Parse(format!("unexpected character `{other}`"))),
        }
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    cur: Tok,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Result<Self> {
        let mut lexer = Lexer::new(s);
        let cur = lexer.next_tok()?;
        Ok(Parser { lexer, cur })
    }

    fn advance(&mut self) -> Result<()> {
        self.cur = self.lexer.next_tok()?;
        Ok(())
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = self.term()?;
        loop {
            match self.cur {
                Tok::Plus => {
                    self.advance()?;
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.advance()?;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.factor()?;
        loop {
            match self.cur {
                Tok::Star => {
                    self.advance()?;
                    acc = acc.mul(&self.factor()?);
                }
                Tok::Slash => {
                    self.advance()?;
                    acc = acc.div(&self.factor()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<RatFunc> {
        let base = match std::mem::replace(&mut self.cur, Tok::End) {
            Tok::Minus => {
                self.cur = Tok::Minus;
                self.advance()?;
                return Ok(self.factor()?.neg());
            }
            Tok::Num(r) => {
                self.advance()?;
                RatFunc::constant(r)
            }
            Tok::Var(v) => {
                self.advance()?;
                RatFunc::var(v)
            }
            Tok::LParen => {
                self.advance()?;
                let inner = self.expr()?;
                if self.cur != Tok::RParen {
                    return Err(Error::Parse("expected `)`".into()));
                }
                self.advance()?;
                inner
            }
            other => {
                return Err(Error::Parse(format!("unexpected token {other:?}")));
            }
        };
        if self.cur == Tok::Caret {
            self.advance()?;
            let neg = if self.cur == Tok::Minus {
                self.advance()?;
                true
            } else {
                false
            };
            let e = match std::mem::replace(&mut self.cur, Tok::End) {
                Tok::Num(r) if r.denom().is_one() => {
                    self.advance()?;
                    let e: i64 = r
                        .numer()
                        .try_into()
                        .map_err(|_| Error::Parse("exponent too large".into()))?;
                    e
                }
                other => return Err(Error::Parse(format!("bad exponent {other:?}"))),
            };
            return base.pow(if neg { -e } else { e });
        }
        Ok(base)
    }
}

/// Parses the canonical rational-function form.
pub fn parse_ratfunc(s: &str) -> Result<RatFunc> {
    let mut p = Parser::new(s)?;
    let out = p.expr()?;
    if p.cur != Tok::End {
        return Err(Error::Parse(format!("trailing input at {:?}", p.cur)));
    }
    Ok(out)
}

/// Parses a polynomial (rejects genuine denominators).
pub fn parse_poly(s: &str) -> Result<Poly> {
    let f = parse_ratfunc(s)?;
    if !f.den().is_one() {
        return Err(Error::Parse("expected a polynomial".into()));
    }
    Ok(f.num().clone())
}
