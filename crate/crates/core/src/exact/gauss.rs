use super::{Field, Rat, Ring};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

/// Element of ℚ(i). Serialized as `"p/q+r/si"`; the imaginary part keeps its
/// own sign, e.g. `"1/2+-3/1i"`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussRat { re, im }
    }

    pub fn real(re: Rat) -> Self {
        GaussRat { re, im: Rat::zero() }
    }

    pub fn i() -> Self {
        GaussRat::new(Rat::zero(), Rat::one())
    }

    pub fn conj(&self) -> Self {
        GaussRat::new(self.re.clone(), -self.im.clone())
    }

    /// |z|² = re² + im².
    pub fn norm(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale(&self, r: &Rat) -> Self {
        GaussRat::new(&self.re * r, &self.im * r)
    }
}

impl Ring for GaussRat {
    fn zero() -> Self {
        GaussRat::default()
    }
    fn one() -> Self {
        GaussRat::real(Rat::one())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn from_bigint(n: &BigInt) -> Self {
        GaussRat::real(Rat::from_bigint(n))
    }
}

impl Field for GaussRat {
    fn inverse(&self) -> Option<Self> {
        let n = self.norm().inverse()?;
        Some(self.conj().scale(&n))
    }
}

impl From<Rat> for GaussRat {
    fn from(r: Rat) -> Self {
        GaussRat::real(r)
    }
}

impl Add for GaussRat {
    type Output = GaussRat;
    fn add(self, o: GaussRat) -> GaussRat {
        GaussRat::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for GaussRat {
    type Output = GaussRat;
    fn sub(self, o: GaussRat) -> GaussRat {
        GaussRat::new(self.re - o.re, self.im - o.im)
    }
}

impl Mul for GaussRat {
    type Output = GaussRat;
    fn mul(self, o: GaussRat) -> GaussRat {
        let re = &self.re * &o.re - &self.im * &o.im;
        let im = &self.re * &o.im + &self.im * &o.re;
        GaussRat::new(re, im)
    }
}

impl Div for GaussRat {
    type Output = GaussRat;
    fn div(self, o: GaussRat) -> GaussRat {
        self * o.inverse().expect("division by zero")
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-self.re, -self.im)
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}i", self.re, self.im)
    }
}

impl fmt::Debug for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for GaussRat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.strip_suffix('i') {
            // "re+imi"; the real part never contains '+'
            Some(body) => {
                let (re, im) = body
                    .split_once('+')
                    .ok_or_else(|| Error::Parse(format!("bad gaussian rational {s:?}")))?;
                Ok(GaussRat::new(re.parse()?, im.parse()?))
            }
            None => Ok(GaussRat::real(s.parse()?)),
        }
    }
}

impl Serialize for GaussRat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GaussRat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(GaussRat::i() * GaussRat::i(), -GaussRat::one());
    }

    #[test]
    fn string_form() {
        let z = GaussRat::new(Rat::new(1, 2), Rat::new(-3, 1));
        assert_eq!(z.to_string(), "1/2+-3/1i");
        assert_eq!(z.to_string().parse::<GaussRat>().unwrap(), z);
        assert_eq!("-2/3".parse::<GaussRat>().unwrap(), GaussRat::real(Rat::new(-2, 3)));
    }

    #[test]
    fn inverse() {
        let z = GaussRat::new(Rat::int(3), Rat::int(4));
        assert_eq!(z.clone() * z.inverse().unwrap(), GaussRat::one());
        assert!(GaussRat::zero().inverse().is_none());
    }
}
