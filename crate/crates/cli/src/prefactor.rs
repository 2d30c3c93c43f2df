//! A small expression language for prefactors in `Z[u][L, L^-1]`.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' ['-'] digits)?
//! atom   := digits | 'u' | 'L' | '(' expr ')'
//! ```
//!
//! Negative exponents are accepted only on a bare `L`. Examples: `u^2*L`,
//! `u^2*(L^12 - L^11)`, `3*L^-2 + u`.

use num_bigint::BigInt;
use thiserror::Error;

use ztriv::algebra::{LatticePoly, LefschetzPoly};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("bad prefactor at offset {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

pub fn parse_prefactor(text: &str) -> Result<LatticePoly, ParseError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> ParseError {
        ParseError {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<&str, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn expr(&mut self) -> Result<LatticePoly, ParseError> {
        let mut acc = LatticePoly::zero();
        let mut negate = false;
        if self.eat(b'-') {
            negate = true;
        } else {
            self.eat(b'+');
        }
        loop {
            let t = self.term()?;
            if negate {
                acc = &acc - &t;
            } else {
                acc = &acc + &t;
            }
            if self.eat(b'+') {
                negate = false;
            } else if self.eat(b'-') {
                negate = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<LatticePoly, ParseError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<LatticePoly, ParseError> {
        let is_l = self.peek() == Some(b'L');
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let negative = self.eat(b'-');
        let at = self.pos;
        let n: i64 = self
            .digits()?
            .parse()
            .map_err(|_| ParseError {
                offset: at,
                message: "exponent out of range".into(),
            })?;
        if negative {
            if !is_l {
                return Err(ParseError {
                    offset: at,
                    message: "negative exponents are only allowed on L".into(),
                });
            }
            return Ok(LatticePoly::constant(LefschetzPoly::l_pow(-n)));
        }
        if is_l {
            return Ok(LatticePoly::constant(LefschetzPoly::l_pow(n)));
        }
        let n = u32::try_from(n).map_err(|_| ParseError {
            offset: at,
            message: "exponent out of range".into(),
        })?;
        let mut acc = LatticePoly::one();
        for _ in 0..n {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<LatticePoly, ParseError> {
        match self.peek() {
            Some(b'u') => {
                self.pos += 1;
                Ok(LatticePoly::u_pow(1))
            }
            Some(b'L') => {
                self.pos += 1;
                Ok(LatticePoly::constant(LefschetzPoly::lefschetz()))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n: BigInt = self.digits()?.parse().expect("digits parse");
                Ok(LatticePoly::constant(LefschetzPoly::constant(n)))
            }
            Some(_) => Err(self.error("expected u, L, a number or '('")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}
