//! Recursive-descent parser for polynomial text.
//!
//! ```text
//! expr     := ['-'] term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' nat)?
//! base     := rational | ident | '(' expr ')'
//! rational := nat ('/' nat)?
//! ```
//!
//! Whitespace is insignificant and multiplication must be written out.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Poly, PolyError};
use crate::exactgeom::Rat;

pub fn parse_poly<S: AsRef<str>>(text: &str, var_names: &[S]) -> Result<Poly, PolyError> {
    let names: Vec<&str> = var_names.iter().map(|s| s.as_ref()).collect();
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        names: &names,
    };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    names: &'a [&'a str],
}

impl Parser<'_> {
    fn nvars(&self) -> usize {
        self.names.len()
    }

    fn error(&self, msg: &str) -> PolyError {
        PolyError::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly, PolyError> {
        let negate = self.eat(b'-');
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly, PolyError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly, PolyError> {
        let base = self.base()?;
        if self.eat(b'^') {
            self.skip_ws();
            let start = self.pos;
            let e = self.nat()?;
            let e: u32 = e.try_into().map_err(|_| PolyError::Syntax {
                pos: start,
                msg: "exponent too large".into(),
            })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Poly, PolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.nat()?;
                if self.eat(b'/') {
                    self.skip_ws();
                    let at = self.pos;
                    let den = self.nat()?;
                    if den.is_zero() {
                        return Err(PolyError::Syntax {
                            pos: at,
                            msg: "zero denominator".into(),
                        });
                    }
                    Ok(Poly::constant(self.nvars(), Rat::new(num, den)))
                } else {
                    Ok(Poly::constant(self.nvars(), Rat::from_integer(num)))
                }
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                    self.pos += 1;
                }
                let ident = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
                match self.names.iter().position(|n| *n == ident) {
                    Some(i) => Ok(Poly::var(self.nvars(), i)),
                    None => Err(PolyError::UnknownVariable {
                        name: ident.to_string(),
                        pos: start,
                    }),
                }
            }
            Some(_) => Err(self.error("expected a number, a variable or '('")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn nat(&mut self) -> Result<BigInt, PolyError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a natural number"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(digits.parse().expect("digits"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::default_names;

    fn names(n: usize, prefix: &str) -> Vec<String> {
        default_names(prefix, n)
    }

    #[test]
    fn quadric() {
        let p = parse_poly("y1*y4 - y2*y3", &names(4, "y")).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.to_string(), "y1*y4 - y2*y3");
    }

    #[test]
    fn zero_and_constants() {
        assert!(parse_poly("0", &names(2, "y")).unwrap().is_zero());
        let p = parse_poly("3/6 - 1/2", &names(1, "y")).unwrap();
        assert!(p.is_zero());
        assert_eq!(parse_poly("-2/3*y1^2", &names(1, "y")).unwrap().to_string(), "-2/3*y1^2");
    }

    #[test]
    fn expands_tau_fourth_component() {
        let x = names(4, "x");
        let p = parse_poly("x4+(x3+x2)*(x3-x2)+x1*(x3-x2)^2", &x).unwrap();
        // x4 + x3² − x2² + x1x3² − 2x1x2x3 + x1x2², expanded by hand
        let hand = parse_poly("x4 + x3^2 - x2^2 + x1*x3^2 - 2*x1*x2*x3 + x1*x2^2", &x).unwrap();
        assert_eq!(p, hand);
        assert_eq!(p.num_terms(), 6);
    }

    #[test]
    fn errors_carry_positions() {
        let y = names(2, "y");
        assert_eq!(
            parse_poly("y1 + z", &y),
            Err(PolyError::UnknownVariable { name: "z".into(), pos: 5 })
        );
        assert!(matches!(parse_poly("2 y1", &y), Err(PolyError::Syntax { pos: 2, .. })));
        assert!(matches!(parse_poly("(y1", &y), Err(PolyError::Syntax { .. })));
        assert!(matches!(parse_poly("y1^", &y), Err(PolyError::Syntax { .. })));
        assert!(matches!(parse_poly("1/0", &y), Err(PolyError::Syntax { .. })));
        assert!(matches!(parse_poly("", &y), Err(PolyError::Syntax { pos: 0, .. })));
    }
}
