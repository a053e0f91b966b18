//! Arithmetic expressions over `Q(s)` and `Q(s)[k^{±1}]`.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' '-'? digits)?
//! atom  := digits | 's' | 'q' | VAR | '(' expr ')'
//! ```
//!
//! `q` is `s^2`. Division and negative powers need a monomial in `VAR`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::basealg::CentralPoly;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Parses a scalar; any variable other than `s` and `q` is rejected.
pub fn parse_scalar(src: &str) -> Result<Scalar> {
    let p = Parser::new(src, None).run()?;
    match (p.low(), p.high()) {
        _ if p.is_zero() => Ok(Scalar::zero()),
        (0, 0) => Ok(p.coeff(0)),
        _ => unreachable!("no variable admitted"),
    }
}

/// Parses a Laurent polynomial in `var` with coefficients in `Q(s)`.
pub fn parse_central(src: &str, var: &str) -> Result<CentralPoly> {
    Parser::new(src, Some(var)).run()
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    var: Option<&'a str>,
}

fn monomial_inverse(p: &CentralPoly) -> Option<CentralPoly> {
    let mut terms = p.terms();
    let (e, c) = terms.next()?;
    if terms.next().is_some() {
        return None;
    }
    Some(CentralPoly::monomial(c.inv().ok()?, -e))
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, var: Option<&'a str>) -> Self {
        Parser { src, pos: 0, var }
    }

    fn err<T>(&self, pos: usize, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos, msg: msg.into() })
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn run(mut self) -> Result<CentralPoly> {
        if self.peek().is_none() {
            return self.err(self.pos, "empty expression");
        }
        let v = self.expr()?;
        match self.peek() {
            None => Ok(v),
            Some(c) => self.err(self.pos, format!("unexpected '{c}'")),
        }
    }

    fn expr(&mut self) -> Result<CentralPoly> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<CentralPoly> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let at = self.pos;
                let d = self.unary()?;
                if d.is_zero() {
                    return self.err(at, "division by zero");
                }
                let Some(inv) = monomial_inverse(&d) else {
                    return self.err(at, "divisor must be a monomial");
                };
                acc = &acc * &inv;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<CentralPoly> {
        if self.eat('-') {
            Ok(-&self.unary()?)
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<CentralPoly> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let neg = self.eat('-');
        self.skip_ws();
        let at = self.pos;
        let digits = self.digits();
        if digits.is_empty() {
            return self.err(at, "expected an integer exponent");
        }
        let Ok(e) = digits.parse::<u32>() else {
            return self.err(at, "exponent too large");
        };
        if !neg {
            return Ok(base.pow(e));
        }
        match monomial_inverse(&base) {
            Some(inv) => Ok(inv.pow(e)),
            None if base.is_zero() => self.err(at, "zero to a negative power"),
            None => self.err(at, "negative power of a non-monomial"),
        }
    }

    fn digits(&mut self) -> &'a str {
        let rest = self.rest();
        let n = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
        self.pos += n;
        &rest[..n]
    }

    fn atom(&mut self) -> Result<CentralPoly> {
        let Some(c) = self.peek() else {
            return self.err(self.pos, "unexpected end of input");
        };
        let at = self.pos;
        if c.is_ascii_digit() {
            let n: BigInt = self.digits().parse().expect("ascii digits");
            return Ok(CentralPoly::constant(Scalar::from_rational(BigRational::from_integer(n))));
        }
        if c == '(' {
            self.pos += 1;
            let v = self.expr()?;
            if !self.eat(')') {
                return self.err(self.pos, "expected ')'");
            }
            return Ok(v);
        }
        let rest = self.rest();
        let n = rest.find(|c: char| !c.is_ascii_alphanumeric() && c != '_').unwrap_or(rest.len());
        if n == 0 {
            return self.err(at, format!("unexpected '{c}'"));
        }
        let ident = &rest[..n];
        self.pos += n;
        match ident {
            "s" => Ok(CentralPoly::constant(Scalar::s())),
            "q" => Ok(CentralPoly::constant(Scalar::q())),
            v if Some(v) == self.var => Ok(CentralPoly::monomial(Scalar::one(), 1)),
            v => self.err(at, format!("unknown symbol '{v}'")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalars() {
        assert_eq!(parse_scalar("1/4").unwrap(), Scalar::ratio(1, 4));
        assert_eq!(parse_scalar("s*(s^2+1)").unwrap(), &Scalar::s() * &(&Scalar::q() + &Scalar::one()));
        assert_eq!(parse_scalar("q^-1 - -2").unwrap(), &Scalar::q_pow(-1) + &Scalar::from_int(2));
        assert_eq!(parse_scalar(" 9 / 4 ").unwrap(), Scalar::ratio(9, 4));
        assert_eq!(parse_scalar("(s^3 + s)/s").unwrap(), &Scalar::q() + &Scalar::one());
        assert_eq!(parse_scalar("1/(1+s)").unwrap(), (&Scalar::s() + &Scalar::one()).inv().unwrap());
    }

    #[test]
    fn central() {
        let p = parse_central("k^-1 + 2*k^2", "k").unwrap();
        assert_eq!(p, CentralPoly::from_terms(vec![(-1, Scalar::one()), (2, Scalar::from_int(2))]));
        assert_eq!(parse_central("1/k", "k").unwrap(), CentralPoly::monomial(Scalar::one(), -1));
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse_scalar("1 + k"), Err(Error::Parse { pos: 4, msg: "unknown symbol 'k'".into() }));
        assert!(matches!(parse_scalar("1/0"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_scalar("(1 + s"), Err(Error::Parse { pos: 6, .. })));
        assert!(matches!(parse_scalar("s^"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_scalar("2 3"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_scalar(""), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse_central("1/(k+1)", "k"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_central("(1+k)^-1", "k"), Err(Error::Parse { pos: 7, .. })));
    }
}
