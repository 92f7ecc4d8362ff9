//! Text form of polynomials.
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := ('+' | '-') factor | power
//! power  := atom ('^' integer)?
//! atom   := integer ('/' integer)? | variable | '(' expr ')'
//! ```
//!
//! Juxtaposition is not multiplication: `x1x2` is read as a single (unknown)
//! variable name, and `2x1` is a syntax error.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::poly::Polynomial;
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

fn lex(text: &str) -> Result<Lexer> {
    let chars: Vec<char> = text.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            toks.push((Tok::Int(digits.parse().unwrap()), col));
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            toks.push((Tok::Ident(chars[start..i].iter().collect()), col));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => {
                return Err(Error::Syntax {
                    pos: col,
                    msg: format!("unexpected character `{c}`"),
                })
            }
        };
        toks.push((tok, col));
        i += 1;
    }
    toks.push((Tok::End, chars.len() + 1));
    Ok(Lexer { toks, at: 0 })
}

impl Lexer {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos(),
            msg: msg.into(),
        })
    }
}

struct Parser<'a> {
    ring: &'a Ring,
    lx: Lexer,
}

impl Parser<'_> {
    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.lx.peek() {
                Tok::Plus => {
                    self.lx.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.lx.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while *self.lx.peek() == Tok::Star {
            self.lx.bump();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        match self.lx.peek() {
            Tok::Minus => {
                self.lx.bump();
                Ok(-self.factor()?)
            }
            Tok::Plus => {
                self.lx.bump();
                self.factor()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if *self.lx.peek() != Tok::Caret {
            return Ok(base);
        }
        self.lx.bump();
        match self.lx.bump() {
            (Tok::Int(k), pos) => match k.to_u32() {
                Some(k) => Ok(base.pow(k)),
                None => Err(Error::Syntax {
                    pos,
                    msg: "exponent too large".into(),
                }),
            },
            (_, pos) => Err(Error::Syntax {
                pos,
                msg: "expected a non-negative integer exponent".into(),
            }),
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let field = self.ring.field();
        match self.lx.bump() {
            (Tok::Int(n), _) => {
                if *self.lx.peek() == Tok::Slash {
                    self.lx.bump();
                    return match self.lx.bump() {
                        (Tok::Int(d), _) => {
                            let c = field.from_fraction(&n, &d)?;
                            Ok(Polynomial::constant(self.ring, c))
                        }
                        (_, pos) => Err(Error::Syntax {
                            pos,
                            msg: "expected an integer denominator".into(),
                        }),
                    };
                }
                Ok(Polynomial::constant(self.ring, field.from_bigint(&n)))
            }
            (Tok::Ident(name), pos) => match self.ring.var_index(&name) {
                Some(i) => Ok(Polynomial::var(self.ring, i)),
                None => Err(Error::UnknownVariable { name, pos }),
            },
            (Tok::LParen, _) => {
                let inner = self.expr()?;
                match self.lx.bump() {
                    (Tok::RParen, _) => Ok(inner),
                    (_, pos) => Err(Error::Syntax {
                        pos,
                        msg: "expected `)`".into(),
                    }),
                }
            }
            (Tok::End, pos) => Err(Error::Syntax {
                pos,
                msg: "unexpected end of input".into(),
            }),
            (t, pos) => Err(Error::Syntax {
                pos,
                msg: format!("unexpected {}", describe(&t)),
            }),
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(n) => format!("number `{n}`"),
        Tok::Ident(s) => format!("identifier `{s}`"),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Slash => "`/`".into(),
        Tok::Caret => "`^`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::End => "end of input".into(),
    }
}

/// Parses a polynomial expression in `ring`.
pub fn parse_poly(text: &str, ring: &Ring) -> Result<Polynomial> {
    let mut p = Parser {
        ring,
        lx: lex(text)?,
    };
    let f = p.expr()?;
    match p.lx.peek() {
        Tok::End => Ok(f),
        Tok::Ident(_) | Tok::Int(_) | Tok::LParen => {
            p.lx.error("missing operator (implicit multiplication is not allowed)")
        }
        t => {
            let msg = format!("unexpected {}", describe(t));
            p.lx.error(msg)
        }
    }
}

impl Polynomial {
    pub fn parse(text: &str, ring: &Ring) -> Result<Polynomial> {
        parse_poly(text, ring)
    }
}

impl fmt::Display for Polynomial {
    /// Canonical form: descending terms, explicit `*`, `^` for powers.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let vars = self.ring().vars();
        for (k, t) in self.terms().iter().enumerate() {
            let (negative, magnitude) = match &t.coeff {
                Scalar::Rational(q) if q.is_negative() => (true, Scalar::Rational(-q)),
                c => (false, c.clone()),
            };
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            if !magnitude.is_one() || t.monomial.is_one() {
                factors.push(magnitude.to_string());
            }
            for (i, &e) in t.monomial.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(vars[i].clone()),
                    _ => factors.push(format!("{}^{e}", vars[i])),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}
