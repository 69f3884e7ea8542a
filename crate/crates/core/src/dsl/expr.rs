//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | name | '(' expr ')'
//! ```

use num_bigint::BigInt;

use crate::coeff::Coefficient;
use crate::poly::{PolyRing, Polynomial};

/// Error position is a 0-based byte offset into the expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExprError {
    pub offset: usize,
    pub message: String,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: PolyRing,
    names: &'a [String],
}

type PResult<T> = std::result::Result<T, ExprError>;

impl Parser<'_> {
    fn err<T>(&self, offset: usize, message: impl Into<String>) -> PResult<T> {
        Err(ExprError {
            offset,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> PResult<Polynomial> {
        let mut acc = self.term()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == b'+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> PResult<Polynomial> {
        let mut acc = self.unary()?;
        while let Some(b'*') = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = &acc * &rhs;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> PResult<Polynomial> {
        if let Some(b'-') = self.peek() {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> PResult<Polynomial> {
        let base = self.atom()?;
        if let Some(b'^') = self.peek() {
            self.pos += 1;
            let at = {
                self.skip_ws();
                self.pos
            };
            match self.peek() {
                Some(b'-') => return self.err(at, "exponent must be a non-negative integer"),
                Some(c) if c.is_ascii_digit() => {}
                _ => return self.err(at, "expected an integer exponent after `^`"),
            }
            let digits = self.digits();
            let exp: u32 = digits
                .parse()
                .or_else(|_| self.err(at, format!("exponent `{digits}` is too large")))?;
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> PResult<Polynomial> {
        let start = {
            self.skip_ws();
            self.pos
        };
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    let at = self.pos;
                    return self.err(at, "expected `)`");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits();
                let v: BigInt = digits.parse().expect("ascii digits");
                Ok(Polynomial::constant(
                    self.ring,
                    Coefficient::from_bigint(self.ring.domain, &v),
                ))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                match self.names.iter().position(|n| n == name) {
                    Some(i) => Ok(Polynomial::var(self.ring, i)),
                    None => self.err(start, format!("unknown variable `{name}`")),
                }
            }
            Some(c) => self.err(start, format!("unexpected character `{}`", c as char)),
            None => self.err(start, "unexpected end of expression"),
        }
    }
}

/// Parse `text` as a polynomial in `names` over `ring`.
pub fn parse_polynomial(text: &str, names: &[String], ring: PolyRing) -> Result<Polynomial, ExprError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        ring,
        names,
    };
    let poly = p.expr()?;
    if let Some(c) = p.peek() {
        let at = p.pos;
        return p.err(at, format!("unexpected `{}` after expression", c as char));
    }
    Ok(poly)
}
