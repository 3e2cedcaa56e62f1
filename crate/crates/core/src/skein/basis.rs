//! Multicurve basis of the character algebra of the once-punctured torus.
//!
//! Reduced multicurves on `Σ₁,₁` are `k` parallel copies of one slope `s`
//! together with `m` boundary-parallel copies, so the basis elements are
//! `T_s^k · κ^m` with `T_s` the slope trace and `κ` the boundary trace.

use crate::error::{Error, Result};
use crate::exact::{linalg, Monomial, MultiPoly, Rat, Ring};
use crate::skein::trace::{reduce, TORUS_VARS};
use crate::words::{slope_word, Slope};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

/// `T_slope^k · κ^m`; `k = 0` exactly when `slope` is `None`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BasisKey {
    pub slope: Option<Slope>,
    pub k: u32,
    pub m: u32,
}

impl BasisKey {
    pub fn new(slope: Option<Slope>, k: u32, m: u32) -> Self {
        match (slope, k) {
            (_, 0) => BasisKey { slope: None, k: 0, m },
            (None, _) => panic!("positive slope power without a slope"),
            (s, k) => BasisKey { slope: s, k, m },
        }
    }

    pub fn boundary(m: u32) -> Self {
        BasisKey::new(None, 0, m)
    }

    pub fn poly(&self) -> MultiPoly {
        basis_poly(self)
    }
}

impl fmt::Display for BasisKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(s) = self.slope {
            parts.push(if self.k == 1 {
                format!("T[{s}]")
            } else {
                format!("T[{s}]^{}", self.k)
            });
        }
        match self.m {
            0 => {}
            1 => parts.push("κ".into()),
            m => parts.push(format!("κ^{m}")),
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("·"))
        }
    }
}

fn slope_memo() -> &'static Mutex<HashMap<Slope, MultiPoly>> {
    static MEMO: OnceLock<Mutex<HashMap<Slope, MultiPoly>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

fn basis_memo() -> &'static Mutex<HashMap<BasisKey, MultiPoly>> {
    static MEMO: OnceLock<Mutex<HashMap<BasisKey, MultiPoly>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The trace polynomial `T_s` of the simple closed curve with slope `s`.
pub fn slope_trace(s: &Slope) -> MultiPoly {
    if let Some(p) = slope_memo().lock().unwrap().get(s) {
        return p.clone();
    }
    let p = reduce(&slope_word(s));
    slope_memo().lock().unwrap().insert(*s, p.clone());
    p
}

/// `κ = x² + y² + z² − xyz − 2`, the trace of the boundary loop.
pub fn kappa() -> MultiPoly {
    reduce(&"abAB".parse().expect("static word"))
}

fn basis_poly(key: &BasisKey) -> MultiPoly {
    if let Some(p) = basis_memo().lock().unwrap().get(key) {
        return p.clone();
    }
    let mut p = kappa().pow(key.m);
    if let Some(s) = key.slope {
        p = p * slope_trace(&s).pow(key.k);
    }
    let p = p.aligned_to(&TORUS_VARS).expect("torus polynomial");
    basis_memo().lock().unwrap().insert(*key, p.clone());
    p
}

/// Integer coefficients of a polynomial in the multicurve basis.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Decomposition {
    pub terms: BTreeMap<BasisKey, BigInt>,
}

impl Decomposition {
    pub fn recombine(&self) -> MultiPoly {
        let mut acc = MultiPoly::zero_in(&TORUS_VARS);
        for (k, c) in &self.terms {
            acc = acc + k.poly().scale(c);
        }
        acc
    }

    pub fn coeff(&self, key: &BasisKey) -> BigInt {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let sep = match (i, c.is_negative()) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            write!(f, "{sep}{}·{k}", c.abs())?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct WireTerm {
    slope: Option<String>,
    k: u32,
    m: u32,
    c: serde_json::Value,
}

#[derive(Serialize, Deserialize)]
struct WireDecomposition {
    terms: Vec<WireTerm>,
}

impl Serialize for Decomposition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| WireTerm {
                slope: k.slope.map(|s| s.to_string()),
                k: k.k,
                m: k.m,
                c: match i64::try_from(c) {
                    Ok(v) => v.into(),
                    Err(_) => c.to_string().into(),
                },
            })
            .collect();
        WireDecomposition { terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Decomposition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let w = WireDecomposition::deserialize(d)?;
        let mut terms = BTreeMap::new();
        for t in w.terms {
            let slope = t
                .slope
                .map(|s| s.parse::<Slope>())
                .transpose()
                .map_err(D::Error::custom)?;
            if slope.is_none() != (t.k == 0) {
                return Err(D::Error::custom("k = 0 exactly when slope is null"));
            }
            let c: BigInt = match &t.c {
                serde_json::Value::Number(n) => n
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| D::Error::custom("coefficient must be an integer"))?,
                serde_json::Value::String(s) => s.parse().map_err(D::Error::custom)?,
                _ => return Err(D::Error::custom("coefficient must be an integer")),
            };
            if !c.is_zero() {
                terms.insert(BasisKey::new(slope, t.k, t.m), c);
            }
        }
        Ok(Decomposition { terms })
    }
}

struct Candidate {
    key: BasisKey,
    lead: Monomial,
    lead_coeff: BigInt,
}

fn add_monomials(a: &Monomial, b: &Monomial, times: u32) -> Monomial {
    Monomial(a.0.iter().zip(&b.0).map(|(x, y)| x + times * y).collect())
}

/// Total degree of `T_s` in `(x, y, z)`, known without expanding it.
fn slope_degree(s: &Slope) -> u32 {
    let (p, q) = (s.p().unsigned_abs() as u32, s.q() as u32);
    if s.p() < 0 {
        p + q
    } else {
        p.max(q)
    }
}

fn candidates(max_degree: u32, depth: u32) -> Vec<Candidate> {
    let kap = kappa().aligned_to(&TORUS_VARS).unwrap();
    let (klead, kc) = kap.leading_term().map(|(m, c)| (m.clone(), c.clone())).unwrap();
    let kdeg = klead.degree();
    let zero = Monomial(vec![0, 0, 0]);
    let mut out = Vec::new();
    let mut push = |slope: Option<(Slope, &MultiPoly)>, k: u32| {
        let (base, bc) = match slope {
            Some((_, t)) => {
                let (m, c) = t.leading_term().unwrap();
                (add_monomials(&zero, m, k), c.pow(k))
            }
            None => (zero.clone(), BigInt::one()),
        };
        let mut m = 0;
        while base.degree() + kdeg * m <= max_degree {
            out.push(Candidate {
                key: BasisKey::new(slope.map(|(s, _)| s), k, m),
                lead: add_monomials(&base, &klead, m),
                lead_coeff: &bc * kc.pow(m),
            });
            m += 1;
        }
    };
    push(None, 0);
    for s in Slope::stern_brocot(depth) {
        if slope_degree(&s) > max_degree {
            continue;
        }
        let t = slope_trace(&s).aligned_to(&TORUS_VARS).unwrap();
        let d = t.total_degree().unwrap_or(0);
        if d == 0 {
            continue;
        }
        let mut k = 1;
        while k * d <= max_degree {
            push(Some((s, &t)), k);
            k += 1;
        }
    }
    out
}

/// Expands a polynomial in `(x, y, z)` in the multicurve basis.
///
/// Candidates are `T_s^k κ^m` for Stern–Brocot slopes up to depth `deg f`
/// with `k · deg T_s + 3m ≤ deg f`. The expansion first tries leading-term
/// division, which is exact and certifies independence of the elements it
/// uses whenever their leading monomials are distinct with unit leading
/// coefficients; otherwise it solves the full linear system on monomial
/// coefficients. The depth is raised once before giving up.
pub fn multicurve_decompose(f: &MultiPoly) -> Result<Decomposition> {
    let f = f.aligned_to(&TORUS_VARS).ok_or_else(|| {
        Error::Parse(format!(
            "polynomial must be in x, y, z; got variables {:?}",
            f.vars()
        ))
    })?;
    if f.is_zero() {
        return Ok(Decomposition::default());
    }
    let deg = f.total_degree().unwrap_or(0);
    let first = deg.max(1);
    for depth in [first, first + 2] {
        let cands = candidates(deg, depth);
        if let Some(d) = divide(&f, &cands) {
            return Ok(d);
        }
        if let Some(d) = solve(&f, &cands)? {
            return Ok(d);
        }
    }
    Err(Error::BasisSearchExhausted(format!(
        "no expansion of degree-{deg} polynomial over candidates up to depth {}",
        first + 2
    )))
}

fn divide(f: &MultiPoly, cands: &[Candidate]) -> Option<Decomposition> {
    let mut by_lead: HashMap<&Monomial, Vec<&Candidate>> = HashMap::new();
    for c in cands {
        by_lead.entry(&c.lead).or_default().push(c);
    }
    let mut rest = f.clone();
    let mut out = Decomposition::default();
    while let Some((m, c)) = rest.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
        let hits = by_lead.get(&m)?;
        if hits.len() != 1 || !hits[0].lead_coeff.abs().is_one() {
            return None;
        }
        let cand = hits[0];
        let q = &c * &cand.lead_coeff;
        rest = rest - cand.key.poly().scale(&q);
        out.terms.insert(cand.key, q);
    }
    Some(out)
}

/// Exact linear solve over all candidates; `Ok(None)` when the system is
/// inconsistent on this candidate set.
fn solve(f: &MultiPoly, cands: &[Candidate]) -> Result<Option<Decomposition>> {
    let polys: Vec<MultiPoly> = cands.iter().map(|c| c.key.poly()).collect();
    let mut monos: Vec<Monomial> = polys
        .iter()
        .chain(std::iter::once(f))
        .flat_map(|p| p.terms().map(|(m, _)| m.clone()).collect::<Vec<_>>())
        .collect();
    monos.sort();
    monos.dedup();
    let rows: Vec<Vec<Rat>> = monos
        .iter()
        .map(|m| polys.iter().map(|p| Rat::from(p.coeff(&m.0))).collect())
        .collect();
    let rhs: Vec<Rat> = monos.iter().map(|m| Rat::from(f.coeff(&m.0))).collect();
    let sol = match linalg::solve(&rows, &rhs) {
        Ok(s) => s,
        Err(Error::Inconsistent) => return Ok(None),
        Err(e) => return Err(e),
    };
    let mut out = Decomposition::default();
    for (c, v) in cands.iter().zip(sol) {
        let v = v.to_integer().ok_or_else(|| {
            Error::BasisSearchExhausted(format!("non-integral coefficient {v} on {}", c.key))
        })?;
        if !v.is_zero() {
            out.terms.insert(c.key, v);
        }
    }
    Ok(Some(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        MultiPoly::parse(s, &TORUS_VARS).unwrap()
    }

    fn s(a: i64, b: i64) -> Slope {
        Slope::new(a, b).unwrap()
    }

    fn dec(terms: &[(Option<Slope>, u32, u32, i64)]) -> Decomposition {
        Decomposition {
            terms: terms
                .iter()
                .map(|&(sl, k, m, c)| (BasisKey::new(sl, k, m), BigInt::from(c)))
                .collect(),
        }
    }

    #[test]
    fn slope_traces() {
        assert_eq!(slope_trace(&s(1, 1)), p("z"));
        assert_eq!(slope_trace(&s(2, 1)), p("x*z - y"));
        assert_eq!(slope_trace(&s(1, -1)), p("x*y - z"));
    }

    #[test]
    fn worked_decompositions() {
        let k = p("x^2 + y^2 + z^2 - x*y*z - 2");
        assert_eq!(multicurve_decompose(&k).unwrap(), dec(&[(None, 0, 1, 1)]));
        assert_eq!(
            multicurve_decompose(&p("x*y")).unwrap(),
            dec(&[(Some(s(1, 1)), 1, 0, 1), (Some(s(-1, 1)), 1, 0, 1)])
        );
        assert_eq!(
            multicurve_decompose(&p("x*y*z")).unwrap(),
            dec(&[
                (Some(s(1, 0)), 2, 0, 1),
                (Some(s(0, 1)), 2, 0, 1),
                (Some(s(1, 1)), 2, 0, 1),
                (None, 0, 1, -1),
                (None, 0, 0, -2),
            ])
        );
    }

    #[test]
    fn slope_degrees_match_traces() {
        for s in Slope::stern_brocot(6) {
            assert_eq!(slope_trace(&s).total_degree(), Some(slope_degree(&s)), "{s}");
        }
    }

    #[test]
    fn zero_and_constants() {
        assert!(multicurve_decompose(&MultiPoly::zero_in(&TORUS_VARS)).unwrap().is_empty());
        assert_eq!(multicurve_decompose(&p("5")).unwrap(), dec(&[(None, 0, 0, 5)]));
    }

    #[test]
    fn linear_solve_route_agrees_with_division() {
        let f = p("x^3*y - 2*x*y*z + z^4 - 7");
        let cands = candidates(4, 4);
        let a = divide(&f, &cands).unwrap();
        let b = solve(&f, &cands).unwrap().unwrap();
        assert_eq!(a, b);
        assert_eq!(a.recombine(), f);
    }

    #[test]
    fn json_roundtrip() {
        let d = multicurve_decompose(&p("x*y*z")).unwrap();
        let j = serde_json::to_string(&d).unwrap();
        assert!(j.contains(r#"{"slope":null,"k":0,"m":1,"c":-1}"#), "{j}");
        let back: Decomposition = serde_json::from_str(&j).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn rejects_foreign_variables() {
        assert!(multicurve_decompose(&MultiPoly::parse("w + x", &[]).unwrap()).is_err());
    }
}
