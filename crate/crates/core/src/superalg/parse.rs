//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar:
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (('*' factor) | ('/' integer))*
//! factor := atom ['^' integer]
//! atom   := integer | name ['[' integer ']'] | '(' expr ')' | '-' factor
//! ```
//! A bracketed index is part of the generator name, so `x[2]` names the
//! generator literally called `x[2]`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{Algebra, AlgebraError, Element};

pub(crate) fn parse_element(alg: &Arc<Algebra>, src: &str) -> Result<Element, AlgebraError> {
    let mut p = Parser {
        alg,
        chars: src.char_indices().collect(),
        pos: 0,
        len: src.len(),
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    alg: &'a Arc<Algebra>,
    chars: Vec<(usize, char)>,
    pos: usize,
    len: usize,
}

impl Parser<'_> {
    fn offset(&self) -> usize {
        self.chars.get(self.pos).map(|c| c.0).unwrap_or(self.len)
    }

    fn error(&self, message: &str) -> AlgebraError {
        AlgebraError::Parse {
            position: self.offset(),
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].1.is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt, AlgebraError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].1.is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let s: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
        Ok(s.parse().expect("digits parse"))
    }

    fn small_integer(&mut self) -> Result<u32, AlgebraError> {
        let n = self.integer()?;
        u32::try_from(n).map_err(|_| self.error("integer out of range"))
    }

    fn expr(&mut self) -> Result<Element, AlgebraError> {
        let mut acc = if self.eat('-') {
            -self.term()?
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = acc + self.term()?;
            } else if self.eat('-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Element, AlgebraError> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = acc * self.factor()?;
            } else if self.eat('/') {
                let d = self.integer()?;
                if d.is_zero() {
                    return Err(self.error("division by zero"));
                }
                acc = acc.scale(&BigRational::new(BigInt::from(1), d));
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Element, AlgebraError> {
        let base = self.atom()?;
        if self.eat('^') {
            let e = self.small_integer()?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Element, AlgebraError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(e)
            }
            Some('-') => {
                self.pos += 1;
                Ok(-self.factor()?)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Element::scalar(self.alg, BigRational::from_integer(n)))
            }
            Some(c) if c.is_alphabetic() || c == '_' => self.name(),
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn name(&mut self) -> Result<Element, AlgebraError> {
        let start = self.pos;
        let at = self.offset();
        while self.pos < self.chars.len() {
            let c = self.chars[self.pos].1;
            if c.is_alphanumeric() || c == '_' || c == '\'' {
                self.pos += 1;
            } else {
                break;
            }
        }
        let mut name: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
        if self.pos < self.chars.len() && self.chars[self.pos].1 == '[' {
            self.pos += 1;
            let k = self.integer()?;
            if !self.eat(']') {
                return Err(self.error("expected `]`"));
            }
            name = format!("{name}[{k}]");
        }
        self.alg
            .find(&name)
            .map(|i| Element::generator(self.alg, i))
            .ok_or(AlgebraError::Parse {
                position: at,
                message: format!("unknown generator `{name}`"),
            })
    }
}

#[cfg(test)]
mod tests {
    use super::super::{frac, GenSpec};
    use super::*;

    fn alg() -> Arc<Algebra> {
        Algebra::new(vec![
            GenSpec::even("x[1]", 0),
            GenSpec::even("x[2]", 0),
            GenSpec::odd("ξ", 1),
        ])
        .unwrap()
    }

    #[test]
    fn indexed_names_and_fractions() {
        let a = alg();
        let e = parse_element(&a, "-(x[1] + x[2])^2/4 + 3/2*ξ").unwrap();
        let x1 = Element::var(&a, "x[1]");
        let x2 = Element::var(&a, "x[2]");
        let xi = Element::var(&a, "ξ");
        let expected = (&x1 + &x2).pow(2).scale(&frac(-1, 4)) + xi.scale(&frac(3, 2));
        assert_eq!(e, expected);
    }

    #[test]
    fn errors_carry_position() {
        let a = alg();
        match parse_element(&a, "x[1] + y").unwrap_err() {
            AlgebraError::Parse { position, .. } => assert_eq!(position, 7),
            e => panic!("unexpected {e:?}"),
        }
        assert!(parse_element(&a, "x[1] +").is_err());
        assert!(parse_element(&a, "1/0").is_err());
        assert!(parse_element(&a, "(x[1]").is_err());
    }
}
