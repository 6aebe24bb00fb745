use num_bigint::BigInt;

use super::scalar::{Backend, Scalar};
use super::Rational;
use crate::error::{AlgebraError, Result};

/// Parses a scalar expression into `backend`.
///
/// Accepts integers, identifiers, `+ - * / ^`, parentheses and signed
/// integer exponents, with arbitrary whitespace. Everything the renderer
/// emits parses back to an equal value.
pub fn parse_scalar(input: &str, backend: &Backend) -> Result<Scalar> {
    let mut p = Parser { src: input.as_bytes(), pos: 0, backend };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    backend: &'a Backend,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> AlgebraError {
        AlgebraError::Parse { pos: self.pos, msg: msg.to_string() }
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

    fn expr(&mut self) -> Result<Scalar> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' { acc.try_add(&rhs)? } else { acc.try_sub(&rhs)? };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Scalar> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if c == b'*' {
                acc.try_mul(&rhs)?
            } else {
                if rhs.is_zero() {
                    return Err(self.error("division by zero"));
                }
                acc.try_div(&rhs)?
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Scalar> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Scalar> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.signed_int()?;
            if e < 0 && base.is_zero() {
                return Err(self.error("negative power of zero"));
            }
            return base.powi(e);
        }
        Ok(base)
    }

    fn signed_int(&mut self) -> Result<i32> {
        let mut neg = false;
        match self.peek() {
            Some(b'-') => {
                neg = true;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        if self.peek() == Some(b'(') {
            self.pos += 1;
            let v = self.signed_int()?;
            if self.peek() != Some(b')') {
                return Err(self.error("expected `)`"));
            }
            self.pos += 1;
            return Ok(if neg { -v } else { v });
        }
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected integer exponent"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        let v: i32 = text.parse().map_err(|_| self.error("exponent too large"))?;
        Ok(if neg { -v } else { v })
    }

    fn atom(&mut self) -> Result<Scalar> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
                let n: BigInt = text.parse().expect("digits parse");
                Ok(self.backend.from_rational(Rational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
                self.backend
                    .variable(name)
                    .map_err(|_| AlgebraError::Parse { pos: start, msg: format!("unknown variable `{name}` for backend {}", self.backend) })
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, Modulus};

    #[test]
    fn rationals() {
        let b = Backend::Rational;
        assert_eq!(parse_scalar(" 3 / 4 ", &b).unwrap(), Scalar::Rational(rat(3, 4)));
        assert_eq!(parse_scalar("-2^3", &b).unwrap(), Scalar::Rational(rat(-8, 1)));
        assert_eq!(parse_scalar("2^-2", &b).unwrap(), Scalar::Rational(rat(1, 4)));
        assert!(parse_scalar("1/0", &b).is_err());
        assert!(parse_scalar("x", &b).is_err());
        assert!(parse_scalar("1 +", &b).is_err());
        assert!(parse_scalar("(1", &b).is_err());
    }

    #[test]
    fn symbolic_roundtrip() {
        let b = Backend::symbolic(&["l1", "l2", "g"]).unwrap();
        for text in ["l1^2-2*l1*l2+l2^2", "(1/2*l1)/(l1+l2)", "-3/7*l1^-1*g^2+5", "(l1^2*g-l2)/(l1*l2+g^3)"] {
            let x = parse_scalar(text, &b).unwrap();
            let y = parse_scalar(&x.render(), &b).unwrap();
            assert_eq!(x, y, "{text}");
            assert_eq!(x.render(), y.render());
        }
        assert_eq!(parse_scalar("l1 * l2 ^ -1", &b).unwrap().render(), "l1*l2^-1");
    }

    #[test]
    fn extension_generator() {
        let b = Backend::Extension(Modulus::cyclotomic6());
        let x = parse_scalar("z^2 - z + 1", &b).unwrap();
        assert!(x.is_zero());
        let y = parse_scalar("1/(z-1)", &b).unwrap();
        assert!(parse_scalar(&y.render(), &b).unwrap() == y);
    }
}
