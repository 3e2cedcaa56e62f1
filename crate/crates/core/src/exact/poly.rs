use super::Ring;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exponent vector ordered graded-lexicographically: total degree first,
/// then the exponent of the earliest variable.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Multivariate polynomial with integer coefficients over a named, ordered
/// variable list.
///
/// Binary operations on polynomials with different variable lists work over
/// the union (left operand's variables first). Equality is semantic: two
/// polynomials are equal when they agree after aligning variables.
#[derive(Clone)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero_in(vars: &[&str]) -> Self {
        MultiPoly {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let mut p = MultiPoly::zero_in(&[]);
        p.add_term(Monomial(vec![]), c.into());
        p
    }

    pub fn var(name: &str) -> Self {
        MultiPoly::from_terms(vec![name.to_string()], [(vec![1], BigInt::one())])
    }

    pub fn from_terms(
        vars: Vec<String>,
        terms: impl IntoIterator<Item = (Vec<u32>, BigInt)>,
    ) -> Self {
        let mut p = MultiPoly {
            vars,
            terms: BTreeMap::new(),
        };
        for (e, c) in terms {
            assert_eq!(e.len(), p.vars.len(), "exponent vector length");
            p.add_term(Monomial(e), c);
        }
        p
    }

    /// Parses expressions such as `x^2 + y^2 + z^2 - x*y*z - 2`. Variables
    /// listed in `order` come first, any others follow in order of appearance.
    pub fn parse(src: &str, order: &[&str]) -> Result<Self> {
        let mut parser = Parser {
            src: src.as_bytes(),
            pos: 0,
        };
        let p = parser.expr()?;
        parser.skip_ws();
        if parser.pos != parser.src.len() {
            return Err(Error::Parse(format!("trailing input in {src:?}")));
        }
        let mut vars: Vec<String> = order.iter().map(|s| s.to_string()).collect();
        for v in &p.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        Ok(p.aligned(&vars).expect("superset of variables"))
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Terms in decreasing graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    /// The constant value, if the polynomial has no non-constant terms.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Largest exponent of variable `name` appearing in any term.
    pub fn degree_in(&self, name: &str) -> u32 {
        match self.vars.iter().position(|v| v == name) {
            Some(i) => self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0),
            None => 0,
        }
    }

    /// Re-expresses the polynomial over `vars`, which must contain every
    /// variable that actually occurs.
    pub fn aligned(&self, vars: &[String]) -> Option<MultiPoly> {
        let mut map = Vec::with_capacity(self.vars.len());
        for v in &self.vars {
            match vars.iter().position(|w| w == v) {
                Some(j) => map.push(Some(j)),
                None if self.degree_in(v) == 0 => map.push(None),
                None => return None,
            }
        }
        let mut out = MultiPoly {
            vars: vars.to_vec(),
            terms: BTreeMap::new(),
        };
        for (m, c) in &self.terms {
            let mut e = vec![0; vars.len()];
            for (i, &k) in m.0.iter().enumerate() {
                if let Some(j) = map[i] {
                    e[j] = k;
                }
            }
            out.add_term(Monomial(e), c.clone());
        }
        Some(out)
    }

    pub fn aligned_to(&self, vars: &[&str]) -> Option<MultiPoly> {
        let v: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        self.aligned(&v)
    }

    fn union_vars(&self, o: &MultiPoly) -> Vec<String> {
        let mut vars = self.vars.clone();
        for v in &o.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        vars
    }

    fn harmonize(self, o: MultiPoly) -> (MultiPoly, MultiPoly) {
        if self.vars == o.vars {
            return (self, o);
        }
        let vars = self.union_vars(&o);
        let a = self.aligned(&vars).unwrap();
        let b = o.aligned(&vars).unwrap();
        (a, b)
    }

    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        let mut out = MultiPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (m, k) in &self.terms {
            out.add_term(m.clone(), k * c);
        }
        out
    }

    /// Evaluates the polynomial in any ring, with `value(name)` supplying
    /// each variable. Variables with zero degree are never queried.
    pub fn eval_with<R: Ring>(&self, mut value: impl FnMut(&str) -> Option<R>) -> Result<R> {
        let mut powers: Vec<Vec<R>> = Vec::with_capacity(self.vars.len());
        for v in &self.vars {
            let d = self.degree_in(v);
            let mut pw = vec![R::one()];
            if d > 0 {
                let x = value(v).ok_or_else(|| Error::Parse(format!("no value for variable {v}")))?;
                for k in 1..=d as usize {
                    let next = pw[k - 1].clone() * x.clone();
                    pw.push(next);
                }
            }
            powers.push(pw);
        }
        let mut acc = R::zero();
        for (m, c) in &self.terms {
            let mut t = R::from_bigint(c);
            for (i, &k) in m.0.iter().enumerate() {
                if k > 0 {
                    t = t * powers[i][k as usize].clone();
                }
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Evaluates with values given positionally in the polynomial's own
    /// variable order.
    pub fn eval<R: Ring>(&self, values: &[R]) -> R {
        assert!(values.len() >= self.vars.len(), "too few values");
        let idx = |name: &str| self.vars.iter().position(|v| v == name).unwrap();
        self.eval_with(|name| Some(values[idx(name)].clone())).unwrap()
    }

    /// Substitutes polynomials for the named variables; unnamed variables stay.
    pub fn substitute(&self, images: &[(&str, &MultiPoly)]) -> MultiPoly {
        self.eval_with(|name| {
            Some(
                images
                    .iter()
                    .find(|(n, _)| *n == name)
                    .map(|(_, p)| (*p).clone())
                    .unwrap_or_else(|| MultiPoly::var(name)),
            )
        })
        .unwrap()
    }
}

impl Ring for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero_in(&[])
    }
    fn one() -> Self {
        MultiPoly::constant(1)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn from_bigint(n: &BigInt) -> Self {
        MultiPoly::constant(n.clone())
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, o: &MultiPoly) -> bool {
        if self.vars == o.vars {
            return self.terms == o.terms;
        }
        let vars = self.union_vars(o);
        self.aligned(&vars).unwrap().terms == o.aligned(&vars).unwrap().terms
    }
}

impl Eq for MultiPoly {}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, o: MultiPoly) -> MultiPoly {
        let (mut a, b) = self.harmonize(o);
        for (m, c) in b.terms {
            a.add_term(m, c);
        }
        a
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, o: MultiPoly) -> MultiPoly {
        self + (-o)
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars,
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, o: MultiPoly) -> MultiPoly {
        let (a, b) = self.harmonize(o);
        let mut out = MultiPoly {
            vars: a.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (m1, c1) in &a.terms {
            for (m2, c2) in &b.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let factors: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(j, &k)| match k {
                    1 => self.vars[j].clone(),
                    _ => format!("{}^{}", self.vars[j], k),
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct WireTerm {
    c: WireInt,
    e: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum WireInt {
    Small(i64),
    Big(String),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WirePoly {
    vars: Vec<String>,
    terms: Vec<WireTerm>,
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self
            .terms()
            .map(|(m, c)| WireTerm {
                c: match c.to_i64() {
                    Some(v) => WireInt::Small(v),
                    None => WireInt::Big(c.to_string()),
                },
                e: m.0.clone(),
            })
            .collect();
        WirePoly {
            vars: self.vars.clone(),
            terms,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let w = WirePoly::deserialize(d)?;
        let mut terms = Vec::with_capacity(w.terms.len());
        for t in w.terms {
            if t.e.len() != w.vars.len() {
                return Err(D::Error::custom("exponent vector length differs from vars"));
            }
            let c = match t.c {
                WireInt::Small(v) => BigInt::from(v),
                WireInt::Big(s) => s.parse().map_err(D::Error::custom)?,
            };
            terms.push((t.e, c));
        }
        Ok(MultiPoly::from_terms(w.vars, terms))
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at byte {}", self.pos))
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.power()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc * self.power()?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let e: u32 = std::str::from_utf8(&self.src[start..self.pos])
                .unwrap()
                .parse()
                .map_err(|_| self.err("expected exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n: BigInt = std::str::from_utf8(&self.src[start..self.pos])
                    .unwrap()
                    .parse()
                    .unwrap();
                Ok(MultiPoly::constant(n))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Ok(MultiPoly::var(name))
            }
            _ => Err(self.err("unexpected input")),
        }
    }
}
