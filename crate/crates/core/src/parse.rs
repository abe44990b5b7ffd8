//! Plain-text expression grammar for graded polynomials.
//!
//! Tokens: `phi[a]`, `lam[a]`, `c[a]`, `cb[a]`, integers, `i`, and the
//! operators `+ - * / ^ ( )`. Indices are 1-based with `a <= 2n`. `^` takes a
//! non-negative integer exponent. `/` divides by a nonzero constant, which is
//! how rational coefficients such as `1/2` are written.

use crate::error::{Error, Result};
use crate::graded::{EvenVar, GradedPolynomial, OddGen};
use crate::scalar::{sc_i, sc_i64, sc_is_zero};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(i64),
    ImagUnit,
    Var(EvenVar),
    Gen(OddGen),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn error(&self, pos: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn next_token(&mut self) -> Result<Option<(usize, Tok)>> {
        self.skip_ws();
        if self.pos >= self.src.len() {
            return Ok(None);
        }
        let start = self.pos;
        let b = self.src[self.pos];
        let tok = match b {
            b'+' => {
                self.pos += 1;
                Tok::Plus
            }
            b'-' => {
                self.pos += 1;
                Tok::Minus
            }
            b'*' => {
                self.pos += 1;
                Tok::Star
            }
            b'/' => {
                self.pos += 1;
                Tok::Slash
            }
            b'^' => {
                self.pos += 1;
                Tok::Caret
            }
            b'(' => {
                self.pos += 1;
                Tok::LParen
            }
            b')' => {
                self.pos += 1;
                Tok::RParen
            }
            b'0'..=b'9' => {
                let mut val: i64 = 0;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    val = val
                        .checked_mul(10)
                        .and_then(|v| v.checked_add((self.src[self.pos] - b'0') as i64))
                        .ok_or_else(|| self.error(start, "integer literal too large"))?;
                    self.pos += 1;
                }
                Tok::Int(val)
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                let mut end = self.pos;
                while end < self.src.len() && self.src[end].is_ascii_alphanumeric() {
                    end += 1;
                }
                let word = std::str::from_utf8(&self.src[self.pos..end]).unwrap();
                self.pos = end;
                match word {
                    "i" => Tok::ImagUnit,
                    "phi" | "lam" | "c" | "cb" => {
                        let idx = self.bracket_index(start)?;
                        match word {
                            "phi" => Tok::Var(EvenVar::Phi(idx)),
                            "lam" => Tok::Var(EvenVar::Lam(idx)),
                            "c" => Tok::Gen(OddGen::C(idx)),
                            _ => Tok::Gen(OddGen::CBar(idx)),
                        }
                    }
                    _ => return Err(self.error(start, format!("unknown symbol `{}`", word))),
                }
            }
            _ => return Err(self.error(start, format!("unexpected character `{}`", b as char))),
        };
        Ok(Some((start, tok)))
    }

    fn bracket_index(&mut self, word_start: usize) -> Result<u32> {
        self.skip_ws();
        if self.pos >= self.src.len() || self.src[self.pos] != b'[' {
            return Err(self.error(word_start, "expected `[index]` after variable name"));
        }
        self.pos += 1;
        self.skip_ws();
        let num_start = self.pos;
        let mut val: u64 = 0;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            val = val * 10 + (self.src[self.pos] - b'0') as u64;
            if val > u32::MAX as u64 {
                return Err(self.error(num_start, "index too large"));
            }
            self.pos += 1;
        }
        if self.pos == num_start {
            return Err(self.error(self.pos, "expected an index"));
        }
        self.skip_ws();
        if self.pos >= self.src.len() || self.src[self.pos] != b']' {
            return Err(self.error(self.pos, "expected `]`"));
        }
        self.pos += 1;
        Ok(val as u32)
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let mut lx = Lexer::new(src);
    let mut out = Vec::new();
    while let Some(t) = lx.next_token()? {
        out.push(t);
    }
    Ok(out)
}

struct Parser {
    n: u32,
    toks: Vec<(usize, Tok)>,
    idx: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.idx).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.idx).map(|(_, t)| t.clone());
        if t.is_some() {
            self.idx += 1;
        }
        t
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos(),
            message: message.into(),
        }
    }

    fn expr(&mut self) -> Result<GradedPolynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<GradedPolynomial> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Slash) => {
                    let pos = self.pos();
                    self.bump();
                    let rhs = self.unary()?;
                    acc = divide_by_constant(acc, rhs, pos)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<GradedPolynomial> {
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.bump();
            return Ok(-&self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<GradedPolynomial> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.bump();
            match self.bump() {
                Some(Tok::Int(k)) if k >= 0 => Ok(base.pow(k as u32)),
                Some(Tok::Int(_)) => Err(self.error("exponent must be non-negative")),
                _ => Err(self.error("expected an integer exponent after `^`")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<GradedPolynomial> {
        match self.bump() {
            Some(Tok::Int(k)) => Ok(GradedPolynomial::constant(self.n, sc_i64(k))),
            Some(Tok::ImagUnit) => Ok(GradedPolynomial::constant(self.n, sc_i())),
            Some(Tok::Var(v)) => GradedPolynomial::var(self.n, v),
            Some(Tok::Gen(g)) => GradedPolynomial::gen(self.n, g),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(self.error("expected `)`")),
                }
            }
            _ => Err(self.error("expected a value")),
        }
    }
}

fn divide_by_constant(
    lhs: GradedPolynomial,
    rhs: GradedPolynomial,
    pos: usize,
) -> Result<GradedPolynomial> {
    let n = rhs.dof();
    let constant = rhs.coeff(&crate::graded::Term::one());
    let is_constant = rhs.num_terms() <= 1 && !sc_is_zero(&constant);
    if !is_constant || rhs.num_terms() == 0 {
        return Err(Error::Parse {
            pos,
            message: "division is only defined by a nonzero constant".to_string(),
        });
    }
    let _ = n;
    let inv = crate::scalar::sc_one() / constant;
    Ok(lhs.scale(&inv))
}

/// Parses an expression in the polynomial grammar for an algebra with `n`
/// degrees of freedom.
pub fn parse_polynomial(n: u32, src: &str) -> Result<GradedPolynomial> {
    let toks = lex(src)?;
    let mut p = Parser {
        n,
        toks,
        idx: 0,
        end: src.len(),
    };
    let out = p.expr()?;
    if p.idx != p.toks.len() {
        return Err(p.error("trailing input"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::{EvenMonomial, GhostMonomial, Term};
    use crate::scalar::{sc_one, sc_ratio};

    #[test]
    fn parses_harmonic_oscillator() {
        let h = parse_polynomial(1, "(phi[1]^2 + phi[2]^2)/2").unwrap();
        assert_eq!(h.num_terms(), 2);
        assert_eq!(
            h.coeff(&Term {
                even: EvenMonomial::from_exponents([(EvenVar::Phi(1), 2)]),
                ghost: GhostMonomial::ONE,
            }),
            sc_ratio(1, 2)
        );
    }

    #[test]
    fn parses_ghosts_and_imaginary_unit() {
        let p = parse_polynomial(1, "i*c[1]*lam[1] - cb[2]").unwrap();
        assert_eq!(p.num_terms(), 2);
        let q = parse_polynomial(1, "c[1]*c[1]").unwrap();
        assert!(q.is_zero());
    }

    #[test]
    fn index_out_of_range() {
        assert!(parse_polynomial(1, "phi[3]").is_err());
        assert!(parse_polynomial(1, "c[0]").is_err());
    }

    #[test]
    fn error_position_reported() {
        let err = parse_polynomial(1, "phi[1] + $").unwrap_err();
        match err {
            Error::Parse { pos, .. } => assert_eq!(pos, 9),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn division_only_by_constants() {
        assert!(parse_polynomial(1, "phi[1]/phi[2]").is_err());
        assert!(parse_polynomial(1, "phi[1]/0").is_err());
        let p = parse_polynomial(1, "phi[1]/2").unwrap();
        assert_eq!(p.coeff(&Term {
            even: EvenMonomial::var(EvenVar::Phi(1)),
            ghost: GhostMonomial::ONE,
        }), sc_ratio(1, 2));
        let _ = sc_one();
    }

    #[test]
    fn negative_exponent_rejected() {
        assert!(parse_polynomial(1, "phi[1]^-1").is_err());
    }

    #[test]
    fn whitespace_and_nesting() {
        let p = parse_polynomial(2, " ( phi[1] + lam[4] ) ^ 2 ").unwrap();
        assert_eq!(p.num_terms(), 3);
    }
}
