use super::{Rat, Ring};
use num_bigint::BigInt;
use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Laurent polynomial in one variable `t` with rational coefficients.
///
/// Zero coefficients are never stored, so the empty map is the zero
/// polynomial. JSON form: `{"t":{"<exp>":"p/q",...}}` with exponents in
/// increasing order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, Rat>,
}

impl LaurentPoly {
    pub fn monomial(c: Rat, exp: i64) -> Self {
        let mut p = LaurentPoly::default();
        p.add_term(exp, c);
        p
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(Rat::one(), 1)
    }

    pub fn t_pow(exp: i64) -> Self {
        Self::monomial(Rat::one(), exp)
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Rat)>) -> Self {
        let mut p = LaurentPoly::default();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exp: i64, c: Rat) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exp).or_insert_with(Rat::zero);
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i64) -> Rat {
        self.coeffs.get(&exp).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rat)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    /// Maximum exponent carrying a nonzero coefficient; `None` stands for −∞
    /// (the zero polynomial).
    pub fn degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// True when only the `t⁰` coefficient may be nonzero.
    pub fn is_constant(&self) -> bool {
        self.coeffs.keys().all(|&e| e == 0)
    }
}

impl Ring for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::default()
    }
    fn one() -> Self {
        LaurentPoly::constant(Rat::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn from_bigint(n: &BigInt) -> Self {
        LaurentPoly::constant(Rat::from_bigint(n))
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, o: LaurentPoly) -> LaurentPoly {
        for (e, c) in o.coeffs {
            self.add_term(e, c);
        }
        self
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: LaurentPoly) -> LaurentPoly {
        self + (-o)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::default();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &o.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{c}")?,
                _ => write!(f, "{c}*t^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

struct Coeffs<'a>(&'a BTreeMap<i64, Rat>);

impl Serialize for Coeffs<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (e, c) in self.0 {
            m.serialize_entry(&e.to_string(), c)?;
        }
        m.end()
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(1))?;
        m.serialize_entry("t", &Coeffs(&self.coeffs))?;
        m.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct TermsVisitor;
        impl<'de> Visitor<'de> for TermsVisitor {
            type Value = Vec<(i64, Rat)>;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "a map from exponent strings to rationals")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> std::result::Result<Self::Value, A::Error> {
                let mut out = Vec::new();
                while let Some((k, v)) = map.next_entry::<String, Rat>()? {
                    let e: i64 = k.parse().map_err(serde::de::Error::custom)?;
                    out.push((e, v));
                }
                Ok(out)
            }
        }
        struct Terms(Vec<(i64, Rat)>);
        impl<'de> Deserialize<'de> for Terms {
            fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                d.deserialize_map(TermsVisitor).map(Terms)
            }
        }
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Wire {
            t: Terms,
        }
        let w = Wire::deserialize(d)?;
        Ok(LaurentPoly::from_terms(w.t.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tinv() -> LaurentPoly {
        LaurentPoly::t_pow(-1)
    }

    #[test]
    fn degree_examples() {
        assert_eq!((LaurentPoly::t() + tinv()).degree(), Some(1));
        assert_eq!(LaurentPoly::zero().degree(), None);
        // -t² + 4 - t⁻²
        let p = LaurentPoly::from_terms([(2, Rat::int(-1)), (0, Rat::int(4)), (-2, Rat::int(-1))]);
        assert_eq!(p.degree(), Some(2));
    }

    #[test]
    fn cancellation_drops_terms() {
        let p = LaurentPoly::t() - LaurentPoly::t();
        assert!(p.is_zero());
        assert_eq!(p.degree(), None);
    }

    #[test]
    fn json_round_trip() {
        let p = LaurentPoly::from_terms([(-2, Rat::int(3)), (10, Rat::new(1, 2)), (2, Rat::int(-1))]);
        let j = serde_json::to_string(&p).unwrap();
        assert_eq!(j, r#"{"t":{"-2":"3/1","2":"-1/1","10":"1/2"}}"#);
        let back: LaurentPoly = serde_json::from_str(&j).unwrap();
        assert_eq!(back, p);
    }
}
