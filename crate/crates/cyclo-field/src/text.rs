//! Text form of scalars: an integer polynomial in `z` over a common denominator.
//!
//! Examples: `0 [N=16]`, `1 - z^3 [N=16]`, `(1 - 3*z^2)/2 [N=16]`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::FieldError;
use crate::rat::Rat;
use crate::scalar::CycScalar;

fn write_poly(f: &mut fmt::Formatter<'_>, terms: &[(u32, BigInt)]) -> fmt::Result {
    for (idx, (k, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if idx == 0 {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        }
        match (*k, mag.is_one()) {
            (0, _) => write!(f, "{mag}")?,
            (1, true) => write!(f, "z")?,
            (1, false) => write!(f, "{mag}*z")?,
            (_, true) => write!(f, "z^{k}")?,
            (_, false) => write!(f, "{mag}*z^{k}")?,
        }
    }
    Ok(())
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0 [N={}]", self.order());
        }
        let mut den = BigInt::one();
        for (_, c) in terms {
            den = den.lcm(&c.denom());
        }
        let ints: Vec<(u32, BigInt)> = terms.iter().map(|(k, c)| (*k, c.numer() * (&den / c.denom()))).collect();
        if den.is_one() {
            write_poly(f, &ints)?;
        } else if ints.len() == 1 && ints[0].0 == 0 {
            write!(f, "{}/{}", ints[0].1, den)?;
        } else {
            write!(f, "(")?;
            write_poly(f, &ints)?;
            write!(f, ")/{den}")?;
        }
        write!(f, " [N={}]", self.order())
    }
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err(&self, message: &str) -> FieldError {
        FieldError::Parse { position: self.pos, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<(), FieldError> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", b as char)))
        }
    }

    fn integer(&mut self) -> Result<BigInt, FieldError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits");
        txt.parse::<BigInt>().map_err(|_| self.err("bad integer"))
    }

    fn term(&mut self) -> Result<(BigInt, u64), FieldError> {
        let coeff = if matches!(self.peek(), Some(b'0'..=b'9')) { Some(self.integer()?) } else { None };
        let has_star = self.eat(b'*');
        if self.eat(b'z') {
            let power = if self.eat(b'^') {
                let e = self.integer()?;
                u64::try_from(e).map_err(|_| self.err("exponent too large"))?
            } else {
                1
            };
            Ok((coeff.unwrap_or_else(BigInt::one), power))
        } else if has_star {
            Err(self.err("expected 'z' after '*'"))
        } else {
            coeff.map(|c| (c, 0)).ok_or_else(|| self.err("expected a term"))
        }
    }

    fn poly(&mut self) -> Result<Vec<(BigInt, u64)>, FieldError> {
        let mut out = Vec::new();
        let mut neg = self.eat(b'-');
        loop {
            let (c, k) = self.term()?;
            out.push((if neg { -c } else { c }, k));
            if self.eat(b'+') {
                neg = false;
            } else if self.eat(b'-') {
                neg = true;
            } else {
                return Ok(out);
            }
        }
    }
}

impl FromStr for CycScalar {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<CycScalar, FieldError> {
        let mut cur = Cursor { s: s.as_bytes(), pos: 0 };
        let (poly, den) = if cur.eat(b'(') {
            let p = cur.poly()?;
            cur.expect(b')')?;
            cur.expect(b'/')?;
            (p, cur.integer()?)
        } else {
            let p = cur.poly()?;
            if cur.eat(b'/') {
                (p, cur.integer()?)
            } else {
                (p, BigInt::one())
            }
        };
        if den.is_zero() {
            return Err(cur.err("zero denominator"));
        }
        cur.expect(b'[')?;
        cur.expect(b'N')?;
        cur.expect(b'=')?;
        let n = cur.integer()?;
        let n = u32::try_from(n).map_err(|_| cur.err("order out of range"))?;
        if n == 0 {
            return Err(cur.err("order must be positive"));
        }
        cur.expect(b']')?;
        if cur.peek().is_some() {
            return Err(cur.err("trailing input"));
        }
        let max = poly.iter().map(|(_, k)| *k % n as u64).max().unwrap_or(0) as usize;
        let mut coeffs = vec![Rat::ZERO; max + 1];
        for (c, k) in poly {
            let idx = (k % n as u64) as usize;
            coeffs[idx] += &Rat::from_big(num_rational::BigRational::new(c, den.clone()));
        }
        Ok(CycScalar::from_coeffs(n, &coeffs))
    }
}

impl Serialize for CycScalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CycScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(txt: &str) -> CycScalar {
        txt.parse().unwrap()
    }

    #[test]
    fn renders_common_denominator() {
        let x = s("(1 - z^3)/2 [N=16]");
        assert_eq!(x.to_string(), "(1 - z^3)/2 [N=16]");
        assert_eq!(s("1 - z^3 [N=16]").to_string(), "1 - z^3 [N=16]");
        assert_eq!(CycScalar::zero(16).to_string(), "0 [N=16]");
        assert_eq!(s("-3/4 [N=16]").to_string(), "-3/4 [N=16]");
    }

    #[test]
    fn accepts_juxtaposed_coefficients_and_reduces() {
        assert_eq!(s("3z^2 [N=16]"), s("3*z^2 [N=16]"));
        // z^8 = -1 in Q(zeta_16)
        assert_eq!(s("z^8 [N=16]"), s("-1 [N=16]"));
        assert_eq!(s("z^16 [N=16]"), CycScalar::one(16));
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in ["", "1 + [N=16]", "z [N=0]", "1 [N=16] x", "(1 + z [N=16]", "1/0 [N=8]", "2* [N=8]"] {
            assert!(bad.parse::<CycScalar>().is_err(), "{bad}");
        }
    }
}
