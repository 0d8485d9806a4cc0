//! Recursive-descent parser for the polynomial text grammar:
//!
//! ```text
//! poly   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := number | var ['^' digits]
//! number := digits ['/' digits]
//! ```
//!
//! Whitespace is allowed between tokens. Juxtaposition is rejected.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{Monomial, Poly};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    names: &'a [String],
}

impl<'a> Parser<'a> {
    fn err<T>(&self, offset: usize, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
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

    fn digits(&mut self) -> Result<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err(start, "expected digits");
        }
        // the slice is ASCII digits
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        Ok((start, s))
    }

    fn poly<F: Field>(&mut self) -> Result<Poly<F>> {
        let n = self.names.len();
        let mut terms: Vec<(Monomial, F)> = Vec::new();
        let mut negate = false;
        if self.peek() == Some(b'-') {
            negate = true;
            self.pos += 1;
        }
        loop {
            let (m, c) = self.term::<F>()?;
            terms.push((m, if negate { -c } else { c }));
            match self.peek() {
                Some(b'+') => {
                    negate = false;
                    self.pos += 1;
                }
                Some(b'-') => {
                    negate = true;
                    self.pos += 1;
                }
                None => break,
                Some(_) => {
                    let at = self.pos;
                    return self.err(at, "expected '+', '-' or end of input");
                }
            }
        }
        Ok(Poly::from_terms(n, terms))
    }

    fn term<F: Field>(&mut self) -> Result<(Monomial, F)> {
        let mut m = Monomial::one(self.names.len());
        let mut c = F::one();
        loop {
            self.factor(&mut m, &mut c)?;
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        // juxtaposition such as `2x1` or `x1 x2`
        if let Some(ch) = self.peek() {
            if ch.is_ascii_alphanumeric() || ch == b'_' {
                let at = self.pos;
                return self.err(at, "juxtaposition is not allowed; use '*'");
            }
        }
        Ok((m, c))
    }

    fn factor<F: Field>(&mut self, m: &mut Monomial, c: &mut F) -> Result<()> {
        match self.peek() {
            Some(ch) if ch.is_ascii_digit() => {
                let (_, num) = self.digits()?;
                let num: BigInt = num.parse().expect("digits");
                let value = if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let (dat, den) = self.digits()?;
                    let den: BigInt = den.parse().expect("digits");
                    match F::from_ratio(&num, &den) {
                        Some(v) => v,
                        None => return self.err(dat, "zero denominator"),
                    }
                } else {
                    F::from_bigint(&num)
                };
                *c = c.clone() * value;
                Ok(())
            }
            Some(ch) if ch.is_ascii_alphabetic() || ch == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                let idx = match self.names.iter().position(|v| v == name) {
                    Some(i) => i,
                    None => return self.err(start, format!("unknown variable '{name}'")),
                };
                let mut e = 1u32;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    let (eat, digits) = self.digits()?;
                    e = match digits.parse() {
                        Ok(v) => v,
                        Err(_) => return self.err(eat, "exponent too large"),
                    };
                }
                let slot = &mut m.exponents_mut()[idx];
                *slot = match slot.checked_add(e) {
                    Some(v) => v,
                    None => return self.err(start, "exponent overflow"),
                };
                Ok(())
            }
            Some(_) => {
                let at = self.pos;
                self.err(at, "expected a number or a variable")
            }
            None => {
                let at = self.pos;
                self.err(at, "unexpected end of input")
            }
        }
    }
}

/// Parses a polynomial over the variables `names`.
pub fn parse_poly<F: Field>(src: &str, names: &[String]) -> Result<Poly<F>> {
    if !src.is_ascii() {
        let offset = src
            .char_indices()
            .find(|(_, c)| !c.is_ascii())
            .map(|(i, _)| i)
            .unwrap_or(0);
        return Err(Error::Syntax {
            offset,
            message: "non-ASCII character".into(),
        });
    }
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
        names,
    };
    p.poly()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};
    use crate::poly::default_names;

    #[test]
    fn grammar_example() {
        let names = default_names(3);
        let f: Poly<Rational> = parse_poly("x1^2*x3 - 2*x2^3", &names).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(
            f.coefficient(&Monomial::from_exponents(&[0, 3, 0])),
            Rational::from_i64(-2)
        );
        assert_eq!(f.to_string(), "-2*x2^3 + x1^2*x3");
    }

    #[test]
    fn double_plus_offset() {
        let names = default_names(2);
        let e = parse_poly::<Rational>("x1 + + x2", &names).unwrap_err();
        assert!(matches!(e, Error::Syntax { offset: 5, .. }), "{e:?}");
    }

    #[test]
    fn juxtaposition_rejected() {
        let names = default_names(2);
        assert!(parse_poly::<Rational>("2x1", &names).is_err());
        assert!(parse_poly::<Rational>("x1 x2", &names).is_err());
    }

    #[test]
    fn unknown_variable() {
        let names = default_names(2);
        let e = parse_poly::<Rational>("x1 + z", &names).unwrap_err();
        assert!(matches!(e, Error::Syntax { offset: 5, .. }));
    }

    #[test]
    fn rational_and_modular_coefficients() {
        let names = vec!["a".to_string(), "b".to_string()];
        let f: Poly<Rational> = parse_poly("3/6*a*b + a^2", &names).unwrap();
        assert_eq!(f.display_with(&names).to_string(), "a^2 + 1/2*a*b");
        let g: Poly<Fp<7>> = parse_poly("8*a - 1", &names).unwrap();
        assert_eq!(g.display_with(&names).to_string(), "a - 1");
        assert!(parse_poly::<Rational>("1/0*a", &names).is_err());
    }

    #[test]
    fn repeated_variables_multiply() {
        let names = default_names(2);
        let f: Poly<Rational> = parse_poly("x1*x2*x1^2", &names).unwrap();
        assert_eq!(f.to_string(), "x1^3*x2");
    }
}
