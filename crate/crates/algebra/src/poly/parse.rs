//! Recursive-descent parser for the polynomial grammar.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | identifier | '(' expr ')'
//! ```
//!
//! Division is only allowed by nonzero constants, so `3/4*x` is a rational
//! coefficient. Juxtaposition (`2x`, `x y`, `x(y)`) is rejected.

use num_bigint::BigInt;

use super::polynomial::Polynomial;
use super::ring::PolyRing;
use super::PolyError;

/// Largest exponent accepted after `^`, and largest degree a power may reach.
pub const MAX_EXPONENT: u32 = 1000;
const MAX_DEPTH: usize = 200;

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
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, PolyError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &text[start..i];
                out.push((start, Tok::Int(digits.parse().expect("ascii digits"))));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(PolyError::Syntax {
                    pos: start,
                    msg: format!("unexpected character `{ch}`"),
                });
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    ring: &'a PolyRing,
    depth: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|t| t.0).unwrap_or(self.end)
    }

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        self.enter()?;
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.at += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.at += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        self.depth -= 1;
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.at += 1;
                    let rhs = self.unary()?;
                    acc = &acc * &rhs;
                }
                Some(Tok::Slash) => {
                    self.at += 1;
                    let pos = self.pos();
                    let rhs = self.unary()?;
                    if !rhs.is_constant() || rhs.is_zero() {
                        return Err(PolyError::BadDivision { pos });
                    }
                    let inv = rhs.constant_term().inv().ok_or(PolyError::BadDivision { pos })?;
                    acc = acc.scale(&inv);
                }
                Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    return Err(PolyError::ImplicitMultiplication { pos: self.pos() });
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial, PolyError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.at += 1;
                self.enter()?;
                let p = self.unary()?;
                self.depth -= 1;
                Ok(-p)
            }
            Some(Tok::Plus) => {
                self.at += 1;
                self.enter()?;
                let p = self.unary();
                self.depth -= 1;
                p
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial, PolyError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.at += 1;
        let pos = self.pos();
        let e = match self.peek() {
            Some(Tok::Int(n)) => n.clone(),
            Some(Tok::Minus) => return Err(PolyError::NegativeExponent { pos }),
            _ => {
                return Err(PolyError::Syntax {
                    pos,
                    msg: "expected a non-negative integer exponent".into(),
                })
            }
        };
        self.at += 1;
        let e: u32 = match u32::try_from(&e) {
            Ok(v) if v <= MAX_EXPONENT => v,
            _ => return Err(PolyError::ExponentOverflow { pos }),
        };
        if base.degree().unwrap_or(0) * e as u64 > MAX_EXPONENT as u64 {
            return Err(PolyError::ExponentOverflow { pos });
        }
        base.checked_pow(e).map_err(|_| PolyError::ExponentOverflow { pos })
    }

    fn atom(&mut self) -> Result<Polynomial, PolyError> {
        let pos = self.pos();
        match self.toks.get(self.at).map(|t| t.1.clone()) {
            Some(Tok::Int(n)) => {
                self.at += 1;
                Ok(self.ring.constant(self.ring.field().from_bigint(&n)))
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                self.ring
                    .var_named(&name)
                    .ok_or(PolyError::UnknownVariable { name, pos })
            }
            Some(Tok::LParen) => {
                self.at += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(PolyError::Syntax {
                        pos: self.pos(),
                        msg: "expected `)`".into(),
                    });
                }
                self.at += 1;
                Ok(inner)
            }
            Some(t) => Err(PolyError::Syntax {
                pos,
                msg: format!("unexpected {}", describe(&t)),
            }),
            None => Err(PolyError::Syntax {
                pos,
                msg: "unexpected end of input".into(),
            }),
        }
    }

    fn enter(&mut self) -> Result<(), PolyError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(PolyError::Syntax {
                pos: self.pos(),
                msg: "expression nested too deeply".into(),
            });
        }
        Ok(())
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
    }
}

/// Parses `text` as an element of `ring`. Positions in errors are byte offsets.
pub fn parse_poly(text: &str, ring: &PolyRing) -> Result<Polynomial, PolyError> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(PolyError::Syntax {
            pos: 0,
            msg: "empty expression".into(),
        });
    }
    let mut p = Parser {
        toks,
        at: 0,
        end: text.len(),
        ring,
        depth: 0,
    };
    let out = p.expr()?;
    if p.at < p.toks.len() {
        let t = p.toks[p.at].1.clone();
        return Err(match t {
            Tok::RParen => PolyError::Syntax {
                pos: p.pos(),
                msg: "unbalanced `)`".into(),
            },
            _ => PolyError::Syntax {
                pos: p.pos(),
                msg: format!("unexpected {}", describe(&t)),
            },
        });
    }
    Ok(out)
}
