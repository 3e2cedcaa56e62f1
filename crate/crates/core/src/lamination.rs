//! Measured laminations on `Σ₁,₁` and the valuations they define.
//!
//! A lamination here is a single weighted slope plus a boundary weight.
//! Its valuation is `v_λ(Σ c_Γ tr_Γ) = max { i(λ, Γ) : c_Γ ≠ 0 }` over the
//! multicurve expansion; boundary curves meet nothing, so `κ` and constants
//! have value zero. Values use the max-degree sign convention, with `−∞`
//! for the zero function.

use crate::error::{Error, Result};
use crate::exact::{LaurentPoly, MultiPoly, Rat, Ring};
use crate::sample;
use crate::skein::basis::multicurve_decompose;
use crate::skein::rep::{AnyRep, MatrixRep};
use crate::skein::trace::{canonical_cyclic, reduce, TORUS_VARS};
use crate::words::{slope_word, Slope, SurfaceSig, Word};
use rand::Rng;
use serde::Serialize;
use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

/// A value in `ℚ ∪ {−∞}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Val {
    NegInf,
    Fin(Rat),
}

impl Val {
    pub fn int(n: i64) -> Val {
        Val::Fin(Rat::int(n))
    }

    pub fn add(&self, o: &Val) -> Val {
        match (self, o) {
            (Val::Fin(a), Val::Fin(b)) => Val::Fin(a + b),
            _ => Val::NegInf,
        }
    }

    pub fn max(self, o: Val) -> Val {
        if self >= o {
            self
        } else {
            o
        }
    }

    pub fn finite(&self) -> Option<&Rat> {
        match self {
            Val::Fin(r) => Some(r),
            Val::NegInf => None,
        }
    }
}

impl Ord for Val {
    fn cmp(&self, o: &Val) -> Ordering {
        match (self, o) {
            (Val::NegInf, Val::NegInf) => Ordering::Equal,
            (Val::NegInf, _) => Ordering::Less,
            (_, Val::NegInf) => Ordering::Greater,
            (Val::Fin(a), Val::Fin(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for Val {
    fn partial_cmp(&self, o: &Val) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Val {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Val::NegInf => write!(f, "-inf"),
            Val::Fin(r) => write!(f, "{}", r.compact()),
        }
    }
}

impl Serialize for Val {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Val::NegInf => s.serialize_str("-inf"),
            Val::Fin(r) => r.serialize(s),
        }
    }
}

/// A weighted slope together with a boundary weight.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Lamination {
    slope: Option<(Slope, Rat)>,
    boundary: Rat,
}

impl Lamination {
    pub fn zero() -> Self {
        Lamination::default()
    }

    pub fn new(slope: Slope, weight: Rat) -> Result<Self> {
        Lamination::with_boundary(Some((slope, weight)), Rat::zero())
    }

    pub fn with_boundary(slope: Option<(Slope, Rat)>, boundary: Rat) -> Result<Self> {
        if boundary.is_negative() {
            return Err(Error::InvalidLamination("boundary weight must be non-negative".into()));
        }
        let slope = match slope {
            Some((_, w)) if w.is_zero() => None,
            Some((_, w)) if w.is_negative() => {
                return Err(Error::InvalidLamination("slope weights must be positive".into()))
            }
            s => s,
        };
        Ok(Lamination { slope, boundary })
    }

    pub fn slope(&self) -> Option<&(Slope, Rat)> {
        self.slope.as_ref()
    }

    pub fn boundary_weight(&self) -> &Rat {
        &self.boundary
    }

    pub fn is_zero(&self) -> bool {
        self.slope.is_none()
    }

    /// `c · λ` for `c > 0`.
    pub fn scale(&self, c: &Rat) -> Result<Lamination> {
        if !c.is_positive() {
            return Err(Error::InvalidLamination("scale must be positive".into()));
        }
        Lamination::with_boundary(
            self.slope.as_ref().map(|(s, w)| (*s, w * c)),
            &self.boundary * c,
        )
    }

    /// Weighted intersection with the curve of slope `s`.
    pub fn intersection(&self, s: &Slope) -> Rat {
        match &self.slope {
            Some((sigma, w)) => w * &Rat::int(sigma.intersection(s) as i64),
            None => Rat::zero(),
        }
    }

    /// Image under an integral slope action.
    pub fn transform(&self, m: [[i64; 2]; 2]) -> Result<Lamination> {
        let slope = match &self.slope {
            Some((s, w)) => Some((s.transform(m)?, w.clone())),
            None => None,
        };
        Lamination::with_boundary(slope, self.boundary.clone())
    }
}

impl fmt::Display for Lamination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.slope {
            Some((s, w)) => write!(f, "{s}:{}", w.compact())?,
            None => write!(f, "0")?,
        }
        if !self.boundary.is_zero() {
            write!(f, ",boundary:{}", &self.boundary.compact())?;
        }
        Ok(())
    }
}

impl FromStr for Lamination {
    type Err = Error;

    /// Parses `"p/q:w"`, `"p/q:w,boundary:b"` or `"0"` for the zero lamination.
    fn from_str(s: &str) -> Result<Self> {
        let mut slope = None;
        let mut boundary = Rat::zero();
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty() && *t != "0") {
            let (k, w) = tok
                .rsplit_once(':')
                .ok_or_else(|| Error::InvalidLamination(format!("expected key:weight, got {tok:?}")))?;
            let w: Rat = w.parse()?;
            if k == "boundary" {
                boundary = w;
            } else if slope.is_some() {
                return Err(Error::InvalidLamination(
                    "distinct torus slopes intersect; at most one slope allowed".into(),
                ));
            } else {
                slope = Some((k.parse::<Slope>()?, w));
            }
        }
        Lamination::with_boundary(slope, boundary)
    }
}

/// `v_λ(f)` via the multicurve expansion of `f`.
pub fn valuate(lam: &Lamination, f: &MultiPoly) -> Result<Val> {
    let d = multicurve_decompose(f)?;
    Ok(d.terms
        .keys()
        .map(|k| {
            let i = k.slope.map_or(Rat::zero(), |s| lam.intersection(&s));
            Val::Fin(&i * &Rat::int(k.k as i64))
        })
        .fold(Val::NegInf, Val::max))
}

/// Outcome of comparing the two routes to `i(λ, w)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThurstonCheck {
    pub value: Val,
    pub simple_slope: Option<String>,
    pub intersection: Option<Val>,
    pub consistent: bool,
}

/// Recognises a word freely homotopic to a simple closed curve: either a
/// slope word (either orientation) or the boundary loop.
pub fn simple_class(w: &Word) -> Option<Option<Slope>> {
    let c = canonical_cyclic(w);
    let (p, q) = (w.exponent_sum(0), w.exponent_sum(1));
    if p == 0 && q == 0 {
        let b = SurfaceSig::ONCE_PUNCTURED_TORUS.boundary_word(1).ok()?;
        return (c == canonical_cyclic(&b)).then_some(None);
    }
    let s = Slope::new(p, q).ok()?;
    (c == canonical_cyclic(&slope_word(&s))).then_some(Some(s))
}

/// Compares `v_λ(tr_w)` with `weight · i(δ, ·)` for a lamination supported
/// on one slope. For simple `w` the second route is the intersection number
/// of slopes; otherwise only the valuation route is available.
pub fn thurston_check(lam: &Lamination, w: &Word) -> Result<ThurstonCheck> {
    if w.rank_used() > 2 {
        return Err(Error::GeneratorOutOfRange(w.rank_used() - 1));
    }
    let value = valuate(lam, &reduce(w))?;
    let (simple_slope, intersection) = match simple_class(w) {
        Some(Some(s)) => (Some(s.to_string()), Some(Val::Fin(lam.intersection(&s)))),
        Some(None) => (Some("boundary".to_string()), Some(Val::Fin(Rat::zero()))),
        None => (None, None),
    };
    let consistent = intersection.as_ref().map_or(true, |i| *i == value);
    Ok(ThurstonCheck {
        value,
        simple_slope,
        intersection,
        consistent,
    })
}

/// `max(0, 2v)`: translation length on the dual tree.
pub fn translation_length(v: &Rat) -> Rat {
    let t = v + v;
    if t.is_negative() {
        Rat::zero()
    } else {
        t
    }
}

/// Edge relation of the Farey graph, the curve complex of `Σ₁,₁` and `Σ₀,₄`.
pub fn farey_adjacent(s: &Slope, u: &Slope) -> bool {
    s.intersection(u) == 1
}

/// Farey neighbours of `s` with height at most `h`.
pub fn farey_neighbors(s: &Slope, h: u64) -> Vec<Slope> {
    Slope::up_to_height(h)
        .into_iter()
        .filter(|u| farey_adjacent(s, u))
        .collect()
}

/// Slopes within graph distance `radius` of `center`, restricted to height
/// at most `h`, with their distances.
pub fn farey_ball(center: &Slope, radius: u32, h: u64) -> Vec<(Slope, u32)> {
    let universe = Slope::up_to_height(h.max(center.height()));
    let mut seen = BTreeSet::from([*center]);
    let mut out = vec![(*center, 0)];
    let mut queue = VecDeque::from([(*center, 0)]);
    while let Some((s, d)) = queue.pop_front() {
        if d == radius {
            continue;
        }
        for u in universe.iter().filter(|u| farey_adjacent(&s, u)) {
            if seen.insert(*u) {
                out.push((*u, d + 1));
                queue.push_back((*u, d + 1));
            }
        }
    }
    out
}

/// A degenerating family of `Σ₁,₁` representations over `ℚ[t, t⁻¹]` whose
/// boundary trace is constant.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentRep {
    rep: MatrixRep<LaurentPoly>,
}

impl LaurentRep {
    pub fn new(rep: MatrixRep<LaurentPoly>) -> Result<Self> {
        let sig = *rep.sig();
        if sig != SurfaceSig::ONCE_PUNCTURED_TORUS {
            return Err(Error::InvalidSurface {
                genus: sig.genus(),
                punctures: sig.punctures(),
                reason: "Laurent degenerations are supported on Σ₁,₁ only",
            });
        }
        let b = sig.boundary_word(1)?;
        let tr = rep.evaluate_trace(&b)?;
        if !tr.is_constant() {
            return Err(Error::NonConstantBoundary(tr.to_string()));
        }
        Ok(LaurentRep { rep })
    }

    pub fn rep(&self) -> &MatrixRep<LaurentPoly> {
        &self.rep
    }

    /// `f(tr a, tr b, tr ab)` as a Laurent polynomial.
    pub fn evaluate(&self, f: &MultiPoly) -> Result<LaurentPoly> {
        let c = self.rep.torus_coords()?;
        f.eval_with(|v| TORUS_VARS.iter().position(|t| *t == v).map(|i| c[i].clone()))
    }

    pub fn word_degree(&self, w: &Word) -> Result<Val> {
        Ok(degree_val(&self.rep.evaluate_trace(w)?))
    }
}

/// The degenerating families shipped with the crate, by name.
pub fn shipped_fixtures() -> Vec<(&'static str, LaurentRep)> {
    const SOURCES: [(&str, &str); 4] = [
        ("diag_t", include_str!("../fixtures/laurent_diag_t.json")),
        ("diag_t2", include_str!("../fixtures/laurent_diag_t2.json")),
        ("constant", include_str!("../fixtures/laurent_constant.json")),
        ("mirrored", include_str!("../fixtures/laurent_mirrored.json")),
    ];
    SOURCES
        .iter()
        .map(|(name, src)| {
            let rep = match AnyRep::from_json(src) {
                Ok(AnyRep::Laurent(r)) => r,
                other => panic!("fixture {name} is not a Laurent rep: {other:?}"),
            };
            (*name, LaurentRep::new(rep).expect("fixture has constant boundary trace"))
        })
        .collect()
}

fn degree_val(p: &LaurentPoly) -> Val {
    p.degree().map_or(Val::NegInf, Val::int)
}

/// `t`-degree of `f` along the family: a pseudo-valuation, since the
/// evaluation can kill nonzero functions.
pub fn laurent_valuate(l: &LaurentRep, f: &MultiPoly) -> Result<Val> {
    Ok(degree_val(&l.evaluate(f)?))
}

/// What [`dominate`] found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominationReport {
    pub lamination: String,
    pub height: u64,
    pub slopes_tested: usize,
    pub samples: usize,
    pub skipped_neg_inf: usize,
    pub max_gap: Option<Val>,
}

/// Fits the weighted slope `λ` whose intersection numbers reproduce the
/// `t`-degrees of all slope traces of height at most `h`, then checks
/// `laurent_valuate(f) ≤ v_λ(f)` on `samples` random polynomials.
pub fn dominate<G: Rng + ?Sized>(
    l: &LaurentRep,
    h: u64,
    samples: usize,
    g: &mut G,
) -> Result<(Lamination, DominationReport)> {
    let slopes = Slope::up_to_height(h.max(1));
    let degs: Vec<(Slope, Val)> = slopes
        .iter()
        .map(|s| Ok((*s, l.word_degree(&slope_word(s))?)))
        .collect::<Result<_>>()?;
    let lam = fit_lamination(&degs).ok_or(Error::NoDominator(h))?;
    for (s, d) in &degs {
        if *d != Val::Fin(lam.intersection(s)) {
            return Err(Error::NoDominator(h));
        }
    }
    let mut skipped = 0;
    let mut max_gap: Option<Val> = None;
    for _ in 0..samples {
        let f = sample::poly(g, &TORUS_VARS, 4, 5, 6);
        let lv = laurent_valuate(l, &f)?;
        let v = valuate(&lam, &f)?;
        if lv == Val::NegInf {
            skipped += 1;
            continue;
        }
        if lv > v {
            return Err(Error::DominationViolated(format!(
                "v({f}) = {lv} exceeds v_λ = {v} for λ = {lam}"
            )));
        }
        if let (Val::Fin(a), Val::Fin(b)) = (&v, &lv) {
            let gap = Val::Fin(a - b);
            max_gap = Some(max_gap.map_or(gap.clone(), |m| m.max(gap)));
        }
    }
    let report = DominationReport {
        lamination: lam.to_string(),
        height: h,
        slopes_tested: degs.len(),
        samples,
        skipped_neg_inf: skipped,
        max_gap,
    };
    Ok((lam, report))
}

fn fit_lamination(degs: &[(Slope, Val)]) -> Option<Lamination> {
    if degs.iter().all(|(_, d)| *d == Val::int(0)) {
        return Some(Lamination::zero());
    }
    let zeros: Vec<Slope> = degs
        .iter()
        .filter(|(_, d)| *d == Val::int(0))
        .map(|(s, _)| *s)
        .collect();
    let [sigma] = zeros[..] else {
        return None;
    };
    let (s, d) = degs.iter().find(|(s, _)| sigma.intersection(s) == 1)?;
    let w = d.finite()?.clone() / Rat::int(sigma.intersection(s) as i64);
    Lamination::new(sigma, w).ok()
}
