//! Recursive descent parser for ring elements.
//!
//! Grammar:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | identifier | '(' expr ')'
//! ```
//!
//! Identifiers are the ring variable and, for GF(p^e) coefficient rings,
//! the generator `z`. Integer literals are reduced in positive
//! characteristic. Division is accepted only by units of the ring.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::rings::TextRing;

/// Largest accepted exponent in `a^k`.
const MAX_EXPONENT: u32 = 4096;

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((start, Token::Int(digits.parse().expect("ascii digits"))));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((start, Token::Ident(chars[start..i].iter().collect())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Token::Op(c)));
            i += 1;
        } else {
            return Err(Error::Syntax {
                position: i,
                message: format!("unexpected character '{c}'"),
            });
        }
    }
    Ok(out)
}

struct Parser<'a, R: TextRing> {
    ring: &'a R,
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl<R: TextRing> Parser<'_, R> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            position: self.offset(),
            message: message.into(),
        })
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<R::Elem> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                let rhs = self.term()?;
                acc = self.ring.add(&acc, &rhs);
            } else if self.eat('-') {
                let rhs = self.term()?;
                acc = self.ring.sub(&acc, &rhs);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<R::Elem> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                let rhs = self.unary()?;
                acc = self.ring.mul(&acc, &rhs);
            } else if self.peek() == Some(&Token::Op('/')) {
                let at = self.offset();
                self.pos += 1;
                let rhs = self.unary()?;
                acc = self.ring.divide(&acc, &rhs).map_err(|e| match e {
                    Error::Division(d) => Error::Syntax {
                        position: at,
                        message: format!("cannot divide by {d} in this ring"),
                    },
                    other => other,
                })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<R::Elem> {
        if self.eat('-') {
            let inner = self.unary()?;
            return Ok(self.ring.neg(&inner));
        }
        self.power()
    }

    fn power(&mut self) -> Result<R::Elem> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        match self.peek().cloned() {
            Some(Token::Int(k)) => {
                let exp = u32::try_from(&k)
                    .ok()
                    .filter(|&e| e <= MAX_EXPONENT)
                    .map_or_else(|| self.error(format!("exponent {k} too large")), Ok)?;
                self.pos += 1;
                Ok(self.ring.pow(&base, exp))
            }
            _ => self.error("expected a nonnegative integer exponent"),
        }
    }

    fn atom(&mut self) -> Result<R::Elem> {
        match self.peek().cloned() {
            Some(Token::Int(k)) => {
                self.pos += 1;
                Ok(self.ring.from_bigint(&k))
            }
            Some(Token::Ident(name)) => {
                let value = if name == self.ring.variable_name() {
                    Some(self.ring.variable())
                } else {
                    self.ring.symbol(&name)
                };
                match value {
                    Some(v) => {
                        self.pos += 1;
                        Ok(v)
                    }
                    None => self.error(format!("unknown identifier '{name}'")),
                }
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return self.error("expected ')'");
                }
                Ok(inner)
            }
            Some(Token::Op(c)) => self.error(format!("unexpected '{c}'")),
            None => self.error("unexpected end of input"),
        }
    }
}

/// Parses `text` into a canonical element of `ring`.
pub fn parse_element<R: TextRing>(text: &str, ring: &R) -> Result<R::Elem> {
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        ring,
        tokens,
        pos: 0,
        end: text.chars().count(),
    };
    if parser.peek().is_none() {
        return parser.error("empty expression");
    }
    let value = parser.expr()?;
    if parser.peek().is_some() {
        return parser.error("trailing input");
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::norm::NormValue;
    use crate::poly::Poly;
    use crate::ratfunc::RationalFunction;
    use crate::rings::{BanachRing, CommRing, FiniteFieldPolyRing, FunctionField, GaussRing};
    use crate::scalar::{integer, Rational};

    fn qx() -> FunctionField<Rational> {
        FunctionField::new("x").unwrap()
    }

    fn poly(cs: &[i64]) -> Poly<Rational> {
        Poly::new(cs.iter().map(|&c| integer(c)).collect())
    }

    #[test]
    fn polynomial_literal() {
        let f = qx();
        let a = parse_element("x^2 - 1", &f).unwrap();
        assert_eq!(a, RationalFunction::from_poly(poly(&[-1, 0, 1])));
    }

    #[test]
    fn rational_function_is_reduced() {
        let f = qx();
        let a = parse_element("(x+1)/(x-1)", &f).unwrap();
        assert_eq!(a.numer(), &poly(&[1, 1]));
        assert_eq!(a.denom(), &poly(&[-1, 1]));
        let b = parse_element("(x^2-1)/(2*x-2)", &f).unwrap();
        assert!(b.is_polynomial());
    }

    #[test]
    fn precedence() {
        let f = qx();
        assert_eq!(
            parse_element("-x^2", &f).unwrap(),
            f.neg(&parse_element("x*x", &f).unwrap())
        );
        assert_eq!(
            parse_element("2*-x + 1", &f).unwrap(),
            parse_element("1 - 2*x", &f).unwrap()
        );
        assert_eq!(
            parse_element("1/2*x^2", &f).unwrap(),
            parse_element("x^2/2", &f).unwrap()
        );
        assert_eq!(parse_element("2-1-1", &f).unwrap(), f.zero());
    }

    #[test]
    fn gauss_norm_of_parsed_element() {
        let g = GaussRing::new("t", 3, 0).unwrap();
        let a = parse_element("3*t + t^2", &g).unwrap();
        assert_eq!(g.norm(&a), NormValue::ONE);
    }

    #[test]
    fn division_only_by_units() {
        let g = GaussRing::new("t", 3, 0).unwrap();
        assert!(parse_element("t/3", &g).is_ok());
        let err = parse_element("1/(1+t)", &g).unwrap_err();
        assert!(matches!(err, Error::Syntax { position: 1, .. }), "{err:?}");
        let f = FiniteFieldPolyRing::new("x", 2, 1).unwrap();
        assert!(parse_element("x/2", &f).is_err());
        assert!(parse_element("1/x", &qx()).is_ok());
    }

    #[test]
    fn characteristic_p_literals_reduce() {
        let f = FiniteFieldPolyRing::new("x", 3, 1).unwrap();
        assert_eq!(parse_element("4*x + 6", &f).unwrap(), parse_element("x", &f).unwrap());
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let f = qx();
        let cases = [
            ("x +", 3),
            ("x ++ 1", 3),
            ("(x", 2),
            ("x $ 1", 2),
            ("y", 0),
            ("x^x", 2),
            ("x 1", 2),
            ("", 0),
            ("1/0", 1),
        ];
        for (text, pos) in cases {
            match parse_element(text, &f) {
                Err(Error::Syntax { position, .. }) => assert_eq!(position, pos, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }
}
