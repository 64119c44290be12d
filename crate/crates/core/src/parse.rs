//! Text form of polynomials.
//!
//! ```text
//! poly   := term (('+'|'-') term)*
//! term   := coeff ('*' factor)* | factor ('*' factor)*
//! factor := var ('^' uint)?
//! coeff  := int ('/' uint)?
//! ```
//!
//! Whitespace is insignificant and a leading sign is accepted. Printing
//! lists terms in descending degrevlex order with rationals as `num/den`,
//! and parsing the printed form gives back the same polynomial.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{AlgebraError, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::Ring;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Ring,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, msg: impl Into<String>) -> AlgebraError {
        AlgebraError::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn digits(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        s.parse().ok()
    }

    fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        if self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
            while self.pos < self.src.len()
                && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
            {
                self.pos += 1;
            }
            Some(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii"))
        } else {
            None
        }
    }

    fn factor(&mut self, exps: &mut [u32]) -> Result<()> {
        let name = self.ident().ok_or_else(|| self.err("expected a variable"))?;
        let idx = self
            .ring
            .var_index(name)
            .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))?;
        let mut e = 1u32;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let at = self.pos;
            let n = self.digits().ok_or(AlgebraError::MalformedExponent(at))?;
            e = u32::try_from(n).map_err(|_| AlgebraError::MalformedExponent(at))?;
        }
        exps[idx] += e;
        Ok(())
    }

    fn term(&mut self, negative: bool) -> Result<Polynomial> {
        let field = self.ring.field();
        let mut exps = vec![0u32; self.ring.nvars()];
        let at = self.pos;
        let mut coeff = match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits().expect("digit present");
                let den = if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let den_at = self.pos;
                    let d = self.digits().ok_or_else(|| self.err("expected a denominator"))?;
                    if d.is_zero() {
                        return Err(AlgebraError::ZeroDenominator(den_at));
                    }
                    d
                } else {
                    BigInt::from(1)
                };
                let c = field.from_ratio(&num, &den).ok_or(AlgebraError::ZeroDenominator(at))?;
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    self.factor(&mut exps)?;
                }
                c
            }
            Some(c) if c.is_ascii_alphabetic() => {
                self.factor(&mut exps)?;
                field.one()
            }
            _ => return Err(self.err("expected a term")),
        };
        while self.peek() == Some(b'*') {
            self.pos += 1;
            self.factor(&mut exps)?;
        }
        if negative {
            coeff = -coeff;
        }
        Ok(Polynomial::monomial(self.ring, Monomial::new(exps), coeff))
    }

    fn poly(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.ring);
        let mut negative = false;
        match self.peek() {
            Some(b'-') => {
                negative = true;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        loop {
            let t = self.term(negative)?;
            acc = &acc + &t;
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    negative = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negative = true;
                }
                None => return Ok(acc),
                Some(c) => return Err(self.err(format!("unexpected `{}`", c as char))),
            }
        }
    }
}

/// Parses a polynomial in `ring`.
pub fn parse_polynomial(text: &str, ring: &Ring) -> Result<Polynomial> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        ring,
    };
    p.poly()
}

fn write_monomial(f: &mut fmt::Formatter<'_>, ring: &Ring, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (name, &e) in ring.vars().iter().zip(m.exponents()) {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{name}")?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.sorted_terms(MonomialOrder::DegRevLex).iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            if m.is_one() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write_monomial(f, self.ring(), m)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::ring::RingContext;

    #[test]
    fn parses_binomial() {
        let r = RingContext::rational(2);
        let p = parse_polynomial("x1^2 - x2", &r).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.to_string(), "x1^2 - x2");
    }

    #[test]
    fn parses_family_generator() {
        let r = RingContext::new(&["b", "x1", "x2", "x3", "x4"], Field::Rationals).unwrap();
        let p = parse_polynomial("x4^2 - b*x4 - x1^4", &r).unwrap();
        assert_eq!(p.num_terms(), 3);
        assert_eq!(p.to_string(), "-x1^4 - b*x4 + x4^2");
    }

    #[test]
    fn zero_and_rationals() {
        let r = RingContext::rational(2);
        assert!(parse_polynomial("0", &r).unwrap().is_zero());
        let p = parse_polynomial(" 3/6 * x1 * x1 - 4/2", &r).unwrap();
        assert_eq!(p.to_string(), "1/2*x1^2 - 2");
    }

    #[test]
    fn errors() {
        let r = RingContext::rational(2);
        assert_eq!(
            parse_polynomial("x1 + y", &r).unwrap_err(),
            AlgebraError::UnknownVariable("y".into())
        );
        assert!(matches!(
            parse_polynomial("x1^a", &r),
            Err(AlgebraError::MalformedExponent(_))
        ));
        assert!(matches!(
            parse_polynomial("x1^", &r),
            Err(AlgebraError::MalformedExponent(_))
        ));
        assert!(matches!(
            parse_polynomial("1/0*x1", &r),
            Err(AlgebraError::ZeroDenominator(_))
        ));
        assert!(matches!(parse_polynomial("x1 +", &r), Err(AlgebraError::Parse { .. })));
    }

    #[test]
    fn prime_field_residues() {
        let f = Field::prime(11).unwrap();
        let r = RingContext::indexed("x", 2, f).unwrap();
        let p = parse_polynomial("-x1 + 1/2", &r).unwrap();
        assert_eq!(p.to_string(), "10*x1 + 6");
        assert!(matches!(
            parse_polynomial("1/11", &r),
            Err(AlgebraError::ZeroDenominator(_))
        ));
    }
}
