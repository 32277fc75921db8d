//! Infix polynomial syntax: integers, variable names, `+ - * ^` and parentheses.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' integer)?
//! atom   := integer | name | '(' expr ')'
//! ```

use alloc::format;
use alloc::string::{String, ToString};

use num_bigint::BigInt;
use num_rational::BigRational;

use super::field::CoeffField;
use super::polynomial::Polynomial;
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    names: &'a [String],
    field: CoeffField,
}

impl Parser<'_> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &str {
        let start = self.pos;
        while let Some(c) = self.src[self.pos..].chars().next() {
            if f(c) {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
        &self.src[start..self.pos]
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let digits = self.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            return self.err("expected an integer");
        }
        Ok(digits.parse().expect("ascii digits"))
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let n = self.names.len();
        let mut acc = Polynomial::zero(self.field, n);
        let mut negate = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        loop {
            let t = self.term()?;
            acc = if negate { &acc - &t } else { &acc + &t };
            if self.eat('+') {
                negate = false;
            } else if self.eat('-') {
                negate = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.eat('^') {
            let e = self.integer()?;
            let Ok(e) = u64::try_from(&e) else {
                return self.err("exponent too large");
            };
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let n = self.names.len();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let k = self.integer()?;
                let c = self.field.reduce(&BigRational::from_integer(k))?;
                Ok(Polynomial::constant(self.field, n, c))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                let name = self.take_while(|c| c.is_alphanumeric() || c == '_').to_string();
                match self.names.iter().position(|x| *x == name) {
                    Some(i) => Ok(Polynomial::var(self.field, n, i)),
                    None => {
                        self.pos = start;
                        self.err(format!("unknown variable '{name}'"))
                    }
                }
            }
            Some(c) => self.err(format!("unexpected '{c}'")),
            None => self.err("unexpected end of input"),
        }
    }
}

pub fn parse_polynomial(src: &str, names: &[String], field: CoeffField) -> Result<Polynomial> {
    let mut p = Parser {
        src,
        pos: 0,
        names,
        field,
    };
    let out = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn names() -> Vec<String> {
        ["x0", "x1", "y1"].iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parses_and_renders() {
        let q = CoeffField::Rationals;
        let p = parse_polynomial("x0^2*y1 + 3*x1", &names(), q).unwrap();
        assert_eq!(p.render(&names()), "x0^2*y1 + 3*x1");
        let p = parse_polynomial("-(x0 - x1)^2 + x0*x0", &names(), q).unwrap();
        assert_eq!(p.render(&names()), "2*x0*x1 - x1^2");
        let p = parse_polynomial(" 2 ", &names(), q).unwrap();
        assert_eq!(p.render(&names()), "2");
    }

    #[test]
    fn reduces_over_prime_field() {
        let p = parse_polynomial("103*x0 + 101*x1", &names(), CoeffField::Prime(101)).unwrap();
        assert_eq!(p.render(&names()), "2*x0");
    }

    #[test]
    fn errors_carry_offsets() {
        let q = CoeffField::Rationals;
        match parse_polynomial("x0 + z", &names(), q) {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 5),
            other => panic!("{other:?}"),
        }
        assert!(parse_polynomial("x0 +", &names(), q).is_err());
        assert!(parse_polynomial("(x0", &names(), q).is_err());
        assert!(parse_polynomial("x0 x1", &names(), q).is_err());
        assert!(parse_polynomial("x0^", &names(), q).is_err());
    }
}
