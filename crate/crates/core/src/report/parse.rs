//! Polynomial input: expressions in `x` or ascending coefficient lists.

use num_bigint::BigInt;

use crate::error::{NfError, Result};
use crate::exact::IntPoly;

fn err<T>(position: usize, message: impl Into<String>) -> Result<T> {
    Err(NfError::Parse {
        position,
        message: message.into(),
    })
}

/// Parse `x^4 - x^3 + 4*x^2 + 68*x + 152`, `(x - 1)(x + 2)` or
/// `[152, 68, 4, -1, 1]`. Positions in errors are character offsets.
pub fn parse_polynomial(text: &str) -> Result<IntPoly> {
    let chars: Vec<(usize, char)> = text.chars().enumerate().filter(|(_, c)| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return err(0, "empty input");
    }
    let mut p = Parser {
        chars,
        pos: 0,
        end: text.chars().count(),
    };
    let poly = if p.peek() == Some('[') {
        p.list()?
    } else {
        p.expr()?
    };
    if let Some(c) = p.peek() {
        return err(p.offset(), format!("unexpected '{c}'"));
    }
    Ok(poly)
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.end, |&(i, _)| i)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => err(self.offset(), format!("expected '{want}', found '{c}'")),
            None => err(self.offset(), format!("expected '{want}', found end of input")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return err(self.offset(), "expected an integer");
        }
        let digits: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        if matches!(self.peek(), Some('.') | Some('/')) {
            return err(self.offset(), "coefficients must be integers");
        }
        Ok(digits.parse().expect("ascii digits"))
    }

    fn list(&mut self) -> Result<IntPoly> {
        self.expect('[')?;
        let mut coeffs = Vec::new();
        if self.peek() == Some(']') {
            return err(self.offset(), "empty coefficient list");
        }
        loop {
            let neg = match self.peek() {
                Some('-') => {
                    self.pos += 1;
                    true
                }
                Some('+') => {
                    self.pos += 1;
                    false
                }
                _ => false,
            };
            let c = self.integer()?;
            coeffs.push(if neg { -c } else { c });
            match self.bump() {
                Some(',') => continue,
                Some(']') => break,
                Some(c) => return err(self.offset() - 1, format!("unexpected '{c}' in list")),
                None => return err(self.end, "unterminated list"),
            }
        }
        Ok(IntPoly::new(coeffs))
    }

    fn expr(&mut self) -> Result<IntPoly> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.pos += 1;
                self.term()?.scale(&BigInt::from(-1))
            }
            Some('+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some('-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<IntPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some('x') | Some('X') | Some('(') => acc = acc.mul(&self.factor()?),
                Some(c) if c.is_ascii_digit() => {
                    return err(self.offset(), "missing operator before number");
                }
                Some('/') => return err(self.offset(), "division is not allowed; coefficients must be integers"),
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<IntPoly> {
        let base = self.base()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let at = self.offset();
            let e = self.integer()?;
            let e: u32 = match u32::try_from(&e) {
                Ok(e) if e <= 10_000 => e,
                _ => return err(at, "exponent too large"),
            };
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<IntPoly> {
        match self.peek() {
            Some('x') | Some('X') => {
                self.pos += 1;
                Ok(IntPoly::x())
            }
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(IntPoly::new(vec![self.integer()?])),
            Some(c) => err(self.offset(), format!("unexpected '{c}'")),
            None => err(self.end, "unexpected end of input"),
        }
    }
}
