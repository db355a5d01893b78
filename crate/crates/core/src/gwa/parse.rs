//! Recursive-descent parser for expressions in `X`, `Y`, `H`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' exponent)?
//! exponent := '-'? INT | '(' '-'? INT ')'
//! atom   := INT | 'X' | 'Y' | 'H' | '(' expr ')'
//! ```
//!
//! Juxtaposition (`2H`, `X Y`, `(H)(X)`) is a syntax error. Division and
//! negative powers need a homogeneous divisor, which is invertible in `B`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::{GradedElement, Ring};
use crate::error::{Error, Result};
use crate::exact::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Var(char),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some((i, c)) = chars.next() {
        let tok = match c {
            c if c.is_whitespace() => continue,
            '0'..='9' => {
                let mut end = i + 1;
                while let Some(&(k, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    end = k + 1;
                    chars.next();
                }
                Tok::Int(text[i..end].parse().expect("digits"))
            }
            'X' | 'Y' | 'H' => Tok::Var(c),
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => {
                return Err(Error::Syntax {
                    pos: i,
                    msg: format!("unexpected character {c:?}"),
                })
            }
        };
        out.push((tok, i));
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
    target: Ring,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<GradedElement> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<GradedElement> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Tok::Slash => {
                    self.bump();
                    let pos = self.pos();
                    let rhs = self.unary()?;
                    let inv = rhs.inverse().map_err(|_| Error::Syntax {
                        pos,
                        msg: "divisor must be a nonzero homogeneous element".into(),
                    })?;
                    acc = &acc * &inv;
                }
                Tok::Int(_) | Tok::Var(_) | Tok::LParen => {
                    return self.err("implicit multiplication is not allowed; use '*'")
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<GradedElement> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(-&self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<GradedElement> {
        let base_is_xy = matches!(self.peek(), Tok::Var('X') | Tok::Var('Y'));
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        let e = self.exponent()?;
        if e < 0 {
            if self.target == Ring::A1 && base_is_xy {
                return Err(Error::Syntax {
                    pos,
                    msg: "negative exponent on X or Y is not allowed in A1".into(),
                });
            }
            return base.pow_i64(e).map_err(|_| Error::Syntax {
                pos,
                msg: "negative power of a non-invertible element".into(),
            });
        }
        Ok(base.pow(e as u32))
    }

    fn exponent(&mut self) -> Result<i64> {
        let paren = *self.peek() == Tok::LParen;
        if paren {
            self.bump();
        }
        let neg = *self.peek() == Tok::Minus;
        if neg {
            self.bump();
        }
        let Tok::Int(n) = self.peek().clone() else {
            return self.err("expected an integer exponent");
        };
        let Some(n) = n.to_i64().filter(|n| *n <= 1_000) else {
            return self.err("exponent too large");
        };
        self.bump();
        if paren {
            if *self.peek() != Tok::RParen {
                return self.err("expected ')'");
            }
            self.bump();
        }
        Ok(if neg { -n } else { n })
    }

    fn atom(&mut self) -> Result<GradedElement> {
        match self.bump() {
            Tok::Int(n) => Ok(GradedElement::scalar(Rat::from_integer(n))),
            Tok::Var('X') => Ok(GradedElement::x()),
            Tok::Var('Y') => Ok(GradedElement::y()),
            Tok::Var(_) => Ok(GradedElement::h()),
            Tok::LParen => {
                let e = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.err("expected ')'");
                }
                self.bump();
                Ok(e)
            }
            Tok::End => {
                self.at = self.toks.len() - 1;
                self.err("unexpected end of input")
            }
            _ => {
                self.at -= 1;
                self.err("expected a number, X, Y, H or '('")
            }
        }
    }
}

/// Parses an expression into its normal form in `B`. The ring tag of the
/// result is the smallest ring containing it.
pub fn parse(text: &str) -> Result<GradedElement> {
    parse_with(text, Ring::B)
}

/// Parses and requires the result to lie in `ring`. For `A1`, negative
/// exponents on `X` and `Y` are rejected at parse time.
pub fn parse_in(text: &str, ring: Ring) -> Result<GradedElement> {
    let e = parse_with(text, ring)?;
    if !e.is_in(ring) {
        return Err(Error::NotInRing(ring.name()));
    }
    Ok(e)
}

fn parse_with(text: &str, target: Ring) -> Result<GradedElement> {
    let toks = lex(text)?;
    if toks.len() == 1 {
        return Err(Error::Syntax {
            pos: 0,
            msg: "empty expression".into(),
        });
    }
    let mut p = Parser { toks, at: 0, target };
    let e = p.expr()?;
    match p.peek() {
        Tok::End => Ok(e),
        Tok::RParen => p.err("unbalanced ')'"),
        Tok::Int(_) | Tok::Var(_) | Tok::LParen => {
            p.err("implicit multiplication is not allowed; use '*'")
        }
        _ => p.err("unexpected token"),
    }
}
