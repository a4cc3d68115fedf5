//! Polynomial and ideal expressions.
//!
//! ```text
//! expr   := ['-'] term (('+'|'-') term)*
//! term   := factor ('*'? factor)*
//! factor := nat | var ('^' nat)? | '(' expr ')' ('^' nat)?
//! ```
//!
//! Juxtaposition is multiplication and coefficients are reduced mod p. A
//! leading minus is accepted as shorthand for `0 - ...`.

use fpure_core::{PolyRing, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {offset}: {message}")]
pub struct ParseError {
    /// Byte offset into the source text.
    pub offset: usize,
    pub message: String,
}

/// Degree cap for `(...)^k` so that a typo cannot exhaust memory.
const MAX_POWER_DEGREE: u64 = 1 << 16;

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    ring: &'a PolyRing,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, at: usize, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { offset: at, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) {
        if let Some(c) = self.src[self.pos..].chars().next() {
            self.pos += c.len_utf8();
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let negate = self.peek() == Some('-');
        if negate {
            self.bump();
        }
        let first = self.term()?;
        let mut acc = if negate { -&first } else { first };
        loop {
            match self.peek() {
                Some('+') => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some('-') => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_factor(c: char) -> bool {
        c.is_ascii_digit() || c == '(' || c.is_alphabetic() || c == '_'
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.bump();
                    acc = &acc * &self.factor()?;
                }
                Some(c) if Self::starts_factor(c) => acc = &acc * &self.factor()?,
                _ => return Ok(acc),
            }
        }
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.src[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn exponent(&mut self) -> Result<Option<u32>, ParseError> {
        if self.peek() != Some('^') {
            return Ok(None);
        }
        self.bump();
        self.skip_ws();
        let at = self.pos;
        let text = self.digits();
        if text.is_empty() {
            return self.err(at, "malformed exponent: expected a natural number after `^`");
        }
        match text.parse::<u32>() {
            Ok(e) => Ok(Some(e)),
            Err(_) => self.err(at, format!("malformed exponent: `{text}` is too large")),
        }
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let at = match self.peek() {
            Some(_) => self.pos,
            None => return self.err(self.src.len(), "unexpected end of input"),
        };
        let c = self.peek().unwrap();
        if c.is_ascii_digit() {
            let p = self.ring.p() as u64;
            let value = self.digits().bytes().fold(0u64, |acc, d| (acc * 10 + (d - b'0') as u64) % p);
            return Ok(self.ring.constant(value as i64));
        }
        if c == '(' {
            self.bump();
            let inner = self.expr()?;
            if self.peek() != Some(')') {
                return self.err(self.pos, "expected `)`");
            }
            self.bump();
            return match self.exponent()? {
                None => Ok(inner),
                Some(e) => self.power(inner, e, at),
            };
        }
        if c.is_alphabetic() || c == '_' {
            let start = self.pos;
            while let Some(ch) = self.src[self.pos..].chars().next() {
                if !(ch.is_alphanumeric() || ch == '_') {
                    break;
                }
                self.pos += ch.len_utf8();
            }
            let name = &self.src[start..self.pos];
            let Some(i) = self.ring.var_index(name) else {
                return self.err(start, format!("unknown variable `{name}`"));
            };
            let v = self.ring.var(i);
            return match self.exponent()? {
                None => Ok(v),
                Some(e) => self.power(v, e, at),
            };
        }
        self.err(at, format!("unexpected character `{c}`"))
    }

    fn power(&self, base: Polynomial, e: u32, at: usize) -> Result<Polynomial, ParseError> {
        let degree = if base.is_zero() { 0 } else { base.total_degree().unwrap_or(0) };
        if degree.saturating_mul(e as u64) > MAX_POWER_DEGREE {
            return self.err(at, format!("power of degree {} exceeds the limit {MAX_POWER_DEGREE}", degree * e as u64));
        }
        Ok(base.pow(e as u64))
    }
}

pub fn parse_polynomial(text: &str, ring: &PolyRing) -> Result<Polynomial, ParseError> {
    let mut parser = Parser { src: text, pos: 0, ring };
    if parser.peek().is_none() {
        return parser.err(0, "empty input");
    }
    let poly = parser.expr()?;
    match parser.peek() {
        None => Ok(poly),
        Some(c) => parser.err(parser.pos, format!("unexpected `{c}`")),
    }
}

/// A comma-separated list of polynomials. Commas inside parentheses do not split.
pub fn parse_list(text: &str, ring: &PolyRing) -> Result<Vec<Polynomial>, ParseError> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices().chain([(text.len(), ',')]) {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth <= 0 => {
                let piece = &text[start..i];
                let poly = parse_polynomial(piece, ring)
                    .map_err(|e| ParseError { offset: e.offset + start, message: e.message })?;
                out.push(poly);
                start = i + 1;
            }
            _ => {}
        }
    }
    Ok(out)
}
