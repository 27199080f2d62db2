//! Canonical text form for polynomials, used in reports and golden files:
//! terms in graded-lex descending order, e.g. `3*t1^2*t2 - 1/2*y + 4`.
//! `parse` accepts exactly this shape (plus redundant whitespace) and
//! round-trips every canonical printout.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::{Monomial, Poly, Var};
use super::rational::Rat;
use crate::error::{Error, Result};

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for &(v, e) in m.factors() {
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{v}")?;
        } else {
            write!(f, "{v}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_unit() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write_monomial(f, m)?;
            } else {
                write!(f, "{mag}*")?;
                write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str) -> Self {
        Parser {
            input: input.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.input.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at byte {}", self.pos))
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected integer"));
        }
        let s = std::str::from_utf8(&self.input[start..self.pos]).unwrap();
        s.parse::<BigInt>()
            .map_err(|e| Error::Parse(format!("bad integer {s:?}: {e}")))
    }

    fn ident(&mut self) -> Result<Var> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.input.len()
            && (self.input[self.pos].is_ascii_alphanumeric() || self.input[self.pos] == b'_')
        {
            self.pos += 1;
        }
        let s = std::str::from_utf8(&self.input[start..self.pos]).unwrap();
        match s {
            "lambda" => Ok(Var::Lambda),
            "y" => Ok(Var::Y),
            _ => {
                if let Some(idx) = s.strip_prefix('t') {
                    let j: u32 = idx
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad variable {s:?}")))?;
                    if j == 0 {
                        return Err(Error::Parse("variable index must be >= 1".into()));
                    }
                    Ok(Var::T(j))
                } else {
                    Err(Error::Parse(format!("unknown variable {s:?}")))
                }
            }
        }
    }

    /// One `*`-joined product of number and variable-power factors.
    fn term(&mut self) -> Result<Poly> {
        let mut coeff = Rat::one();
        let mut mono = Monomial::unit();
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let num = self.integer()?;
                    if self.peek() == Some(b'/') {
                        self.bump();
                        let den = self.integer()?;
                        if den.is_zero() {
                            return Err(self.err("zero denominator"));
                        }
                        coeff *= Rat::new(num, den);
                    } else {
                        coeff *= Rat::from_integer(num);
                    }
                }
                Some(c) if c.is_ascii_alphabetic() => {
                    let v = self.ident()?;
                    let exp = if self.peek() == Some(b'^') {
                        self.bump();
                        let e = self.integer()?;
                        u32::try_from(e).map_err(|_| self.err("exponent out of range"))?
                    } else {
                        1
                    };
                    mono = mono.mul(&Monomial::var(v, exp));
                }
                _ => return Err(self.err("expected term")),
            }
            if self.peek() == Some(b'*') {
                self.bump();
            } else {
                break;
            }
        }
        Ok(Poly::monomial(mono, coeff))
    }

    fn poly(&mut self) -> Result<Poly> {
        let mut negative = false;
        if self.peek() == Some(b'-') {
            self.bump();
            negative = true;
        } else if self.peek() == Some(b'+') {
            self.bump();
        }
        let first = self.term()?;
        let mut acc = if negative { -first } else { first };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(b'-') => {
                    self.bump();
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                None => break,
                Some(c) => return Err(self.err(&format!("unexpected character {:?}", c as char))),
            }
        }
        Ok(acc)
    }
}

impl FromStr for Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Poly> {
        let mut p = Parser::new(s);
        p.poly()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rational::rat;

    #[test]
    fn prints_canonically() {
        let p = &(&Poly::t(1).pow(2) * &Poly::t(2)).scale(&rat(3))
            - &Poly::y().scale(&Rat::new(1.into(), 2.into()));
        let p = &p + &Poly::from_int(4);
        assert_eq!(p.to_string(), "3*t1^2*t2 - 1/2*y + 4");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!((-Poly::t(3)).to_string(), "-t3");
    }

    #[test]
    fn parses_what_it_prints() {
        let samples = [
            "0",
            "1",
            "-1/2",
            "t1",
            "3*t1^2*t2 - 1/2*y + 4",
            "-t1^3 + lambda^2*y - 7/3",
            "t2 + t16 - lambda",
        ];
        for s in samples {
            let p: Poly = s.parse().unwrap();
            assert_eq!(p.to_string(), s, "round trip failed for {s:?}");
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!("".parse::<Poly>().is_err());
        assert!("t0".parse::<Poly>().is_err());
        assert!("q + 1".parse::<Poly>().is_err());
        assert!("1/0".parse::<Poly>().is_err());
        assert!("t1 +".parse::<Poly>().is_err());
    }
}
