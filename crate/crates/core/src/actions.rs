//! Relative automorphisms acting on trace coordinates.
//!
//! A [`CoordMap`] is a ring endomorphism given by the images of the
//! coordinates. Applying it to `f` substitutes those images into `f`, and
//! `(F ∘ G)(f) = F(G(f))`. A mapping class `φ` acts by `tr_w ↦ tr_{φ⁻¹(w)}`,
//! which on `Σ₁,₁` turns `(a, b) ↦ (a, ab)` into `(x, y, z) ↦ (x, xy − z, y)`.

use crate::error::{Error, Result};
use crate::exact::MultiPoly;
use crate::skein::basis::{kappa, slope_trace};
use crate::skein::fiber::{fiber_law, FIBER_PARAM_VARS, FOUR_HOLED_VARS};
use crate::skein::trace::{reduce, TORUS_VARS};
use crate::words::{FreeAut, Slope, SurfaceSig, Word};
use num_bigint::BigInt;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

/// The coordinate ring a map acts on.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CoordSystem {
    /// `Σ₁,₁` in `(x, y, z)`.
    Torus,
    /// `Σ₀,₃` in `(x, y, z) = (tr c₁, tr c₂, tr c₁c₂)`.
    Pants,
    /// `Σ₀,₄` in `(x, y, z, p₁, p₂, p₃, p₄)`.
    FourHoled,
    /// `Σ₀,₄` fibers with formal coefficients, `(x, y, z, A, B, C, D)`.
    FourHoledSymbolic,
}

impl CoordSystem {
    pub fn from_sig(sig: &SurfaceSig) -> Result<Self> {
        match (sig.genus(), sig.punctures()) {
            (1, 1) => Ok(CoordSystem::Torus),
            (0, 3) => Ok(CoordSystem::Pants),
            (0, 4) => Ok(CoordSystem::FourHoled),
            _ => Err(Error::InvalidSurface {
                genus: sig.genus(),
                punctures: sig.punctures(),
                reason: "symbolic coordinates exist only for Σ₁,₁, Σ₀,₃ and Σ₀,₄",
            }),
        }
    }

    pub fn sig(&self) -> SurfaceSig {
        match self {
            CoordSystem::Torus => SurfaceSig::ONCE_PUNCTURED_TORUS,
            CoordSystem::Pants => SurfaceSig::PAIR_OF_PANTS,
            _ => SurfaceSig::FOUR_HOLED_SPHERE,
        }
    }

    pub fn vars(&self) -> &'static [&'static str] {
        match self {
            CoordSystem::Torus | CoordSystem::Pants => &TORUS_VARS,
            CoordSystem::FourHoled => &FOUR_HOLED_VARS,
            CoordSystem::FourHoledSymbolic => &FIBER_PARAM_VARS,
        }
    }

    /// Words whose traces are the coordinates, where that makes sense.
    pub fn coordinate_words(&self) -> Option<Vec<Word>> {
        let ws: &[&str] = match self {
            CoordSystem::Torus | CoordSystem::Pants => &["a", "b", "ab"],
            CoordSystem::FourHoled => &["ab", "bc", "ac", "a", "b", "c", "abc"],
            CoordSystem::FourHoledSymbolic => return None,
        };
        Some(ws.iter().map(|s| s.parse().expect("static word")).collect())
    }

    /// The boundary trace functions a relative automorphism must fix.
    pub fn boundary_polys(&self) -> Vec<(String, MultiPoly)> {
        let vars = |names: &[&str]| {
            names
                .iter()
                .map(|n| (n.to_string(), MultiPoly::var(n)))
                .collect()
        };
        match self {
            CoordSystem::Torus => vec![("κ".to_string(), kappa())],
            CoordSystem::Pants => vars(&["x", "y", "z"]),
            CoordSystem::FourHoled => vars(&["p1", "p2", "p3", "p4"]),
            CoordSystem::FourHoledSymbolic => vars(&["A", "B", "C", "D"]),
        }
    }

    fn align(&self, f: &MultiPoly) -> MultiPoly {
        f.aligned_to(self.vars()).unwrap_or_else(|| f.clone())
    }
}

/// Integral 2×2 matrix acting on slopes `(p, q)` as column vectors.
pub type SlopeMatrix = [[i64; 2]; 2];

fn mat_mul(a: &SlopeMatrix, b: &SlopeMatrix) -> SlopeMatrix {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

/// A ring endomorphism of a coordinate ring, optionally carrying an
/// inverse candidate and, for torus mapping classes, its action on slopes.
#[derive(Clone, Debug, PartialEq)]
pub struct CoordMap {
    system: CoordSystem,
    images: Vec<MultiPoly>,
    inverse: Option<Vec<MultiPoly>>,
    slopes: Option<SlopeMatrix>,
}

impl CoordMap {
    pub fn new(system: CoordSystem, images: Vec<MultiPoly>) -> Result<Self> {
        if images.len() != system.vars().len() {
            return Err(Error::SizeMismatch(images.len(), system.vars().len()));
        }
        let images = images.iter().map(|p| system.align(p)).collect();
        Ok(CoordMap {
            system,
            images,
            inverse: None,
            slopes: None,
        })
    }

    pub fn identity(system: CoordSystem) -> Self {
        let images: Vec<MultiPoly> = system.vars().iter().map(|v| MultiPoly::var(v)).collect();
        CoordMap::new(system, images.clone())
            .expect("sizes match")
            .with_inverse(images)
            .expect("sizes match")
            .with_slopes([[1, 0], [0, 1]])
    }

    fn parse_images(system: CoordSystem, srcs: &[&str]) -> Vec<MultiPoly> {
        srcs.iter()
            .map(|s| MultiPoly::parse(s, system.vars()).expect("static polynomial"))
            .collect()
    }

    pub fn with_inverse(mut self, inverse: Vec<MultiPoly>) -> Result<Self> {
        if inverse.len() != self.images.len() {
            return Err(Error::SizeMismatch(inverse.len(), self.images.len()));
        }
        self.inverse = Some(inverse.iter().map(|p| self.system.align(p)).collect());
        Ok(self)
    }

    pub fn with_slopes(mut self, m: SlopeMatrix) -> Self {
        self.slopes = Some(m);
        self
    }

    pub fn system(&self) -> CoordSystem {
        self.system
    }

    pub fn images(&self) -> &[MultiPoly] {
        &self.images
    }

    pub fn slope_matrix(&self) -> Option<SlopeMatrix> {
        self.slopes
    }

    /// The attached inverse candidate as a map.
    pub fn inverse(&self) -> Option<CoordMap> {
        let inv = self.inverse.clone()?;
        Some(CoordMap {
            system: self.system,
            images: inv,
            inverse: Some(self.images.clone()),
            slopes: self.slopes.map(|m| {
                let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
                [[det * m[1][1], -det * m[0][1]], [-det * m[1][0], det * m[0][0]]]
            }),
        })
    }

    pub fn apply(&self, f: &MultiPoly) -> MultiPoly {
        let subs: Vec<(&str, &MultiPoly)> = self
            .system
            .vars()
            .iter()
            .copied()
            .zip(&self.images)
            .collect();
        self.system.align(&f.substitute(&subs))
    }

    /// `self ∘ other`, i.e. `other` first.
    pub fn compose(&self, other: &CoordMap) -> Result<CoordMap> {
        if self.system != other.system {
            return Err(Error::SystemMismatch);
        }
        let images = other.images.iter().map(|p| self.apply(p)).collect();
        let inverse = match (self.inverse(), other.inverse()) {
            (Some(si), Some(oi)) => Some(oi.compose_images(&si)),
            _ => None,
        };
        let slopes = match (self.slopes, other.slopes) {
            (Some(a), Some(b)) => Some(mat_mul(&a, &b)),
            _ => None,
        };
        Ok(CoordMap {
            system: self.system,
            images,
            inverse,
            slopes,
        })
    }

    fn compose_images(&self, other: &CoordMap) -> Vec<MultiPoly> {
        other.images.iter().map(|p| self.apply(p)).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.system
            .vars()
            .iter()
            .zip(&self.images)
            .all(|(v, p)| *p == MultiPoly::var(v))
    }

    /// Image of a slope under the induced curve-complex action.
    pub fn slope_image(&self, s: &Slope) -> Option<Slope> {
        self.slopes.map(|m| s.transform(m).expect("invertible matrix"))
    }
}

impl fmt::Display for CoordMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .system
            .vars()
            .iter()
            .zip(&self.images)
            .map(|(v, p)| format!("{v} ↦ {p}"))
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// Evidence for or against a map being a relative automorphism.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub has_inverse: bool,
    pub inverse_verified: bool,
    pub boundary: Vec<(String, bool)>,
}

impl Certificate {
    pub fn holds(&self) -> bool {
        self.inverse_verified && self.boundary.iter().all(|(_, ok)| *ok)
    }
}

/// Checks `m ∘ m⁻¹ = m⁻¹ ∘ m = id` for the attached inverse and that every
/// boundary trace is fixed.
pub fn is_relative_automorphism(m: &CoordMap) -> Certificate {
    let inverse_verified = m.inverse().is_some_and(|inv| {
        m.compose(&inv).is_ok_and(|c| c.is_identity()) && inv.compose(m).is_ok_and(|c| c.is_identity())
    });
    let boundary = m
        .system
        .boundary_polys()
        .into_iter()
        .map(|(name, b)| {
            let ok = m.apply(&b) == m.system.align(&b);
            (name, ok)
        })
        .collect();
    Certificate {
        has_inverse: m.inverse.is_some(),
        inverse_verified,
        boundary,
    }
}

/// Named mapping classes and involutions of `Σ₁,₁`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum TorusGen {
    /// `(a, b) ↦ (b, a)`.
    R,
    /// `(a, b) ↦ (a, ab)`.
    T,
    /// `(a, b) ↦ (a, b⁻¹)`.
    U,
    /// The inverse of `T`, `(a, b) ↦ (a, a⁻¹b)`.
    TInv,
}

impl TorusGen {
    pub const ALL: [TorusGen; 4] = [TorusGen::R, TorusGen::T, TorusGen::U, TorusGen::TInv];

    /// The automorphism of `⟨a, b⟩` and its inverse.
    pub fn free_aut(&self) -> (FreeAut, FreeAut) {
        let f = |a: &str, b: &str| FreeAut::new(vec![a.parse().unwrap(), b.parse().unwrap()]);
        match self {
            TorusGen::R => (f("b", "a"), f("b", "a")),
            TorusGen::T => (f("a", "ab"), f("a", "Ab")),
            TorusGen::U => (f("a", "B"), f("a", "B")),
            TorusGen::TInv => (f("a", "Ab"), f("a", "ab")),
        }
    }

    /// The coordinate map written out by hand.
    pub fn coord_map(&self) -> CoordMap {
        let sys = CoordSystem::Torus;
        let (img, inv, slopes): (&[&str], &[&str], SlopeMatrix) = match self {
            TorusGen::R => (&["y", "x", "z"], &["y", "x", "z"], [[0, 1], [1, 0]]),
            TorusGen::T => (&["x", "x*y - z", "y"], &["x", "z", "x*z - y"], [[1, -1], [0, 1]]),
            TorusGen::U => (&["x", "y", "x*y - z"], &["x", "y", "x*y - z"], [[1, 0], [0, -1]]),
            TorusGen::TInv => (&["x", "z", "x*z - y"], &["x", "x*y - z", "y"], [[1, 1], [0, 1]]),
        };
        CoordMap::new(sys, CoordMap::parse_images(sys, img))
            .and_then(|m| m.with_inverse(CoordMap::parse_images(sys, inv)))
            .expect("static map")
            .with_slopes(slopes)
    }
}

impl FromStr for TorusGen {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "R" | "R^-1" => Ok(TorusGen::R),
            "T" => Ok(TorusGen::T),
            "U" | "U^-1" => Ok(TorusGen::U),
            "T^-1" | "t" => Ok(TorusGen::TInv),
            other => Err(Error::UnknownGenerator(other.to_string())),
        }
    }
}

impl fmt::Display for TorusGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TorusGen::R => "R",
            TorusGen::T => "T",
            TorusGen::U => "U",
            TorusGen::TInv => "T^-1",
        };
        write!(f, "{s}")
    }
}

/// Parses `"T,R,U"`.
pub fn parse_gens(s: &str) -> Result<Vec<TorusGen>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(str::parse)
        .collect()
}

/// The map obtained by applying `gens` to a function left to right.
pub fn word_map(gens: &[TorusGen]) -> CoordMap {
    gens.iter().fold(CoordMap::identity(CoordSystem::Torus), |acc, g| {
        g.coord_map().compose(&acc).expect("same system")
    })
}

/// The coordinate map induced by an automorphism of `⟨a, b⟩` via
/// `tr_w ↦ tr_{φ⁻¹(w)}`, computed by trace rewriting. The slope action is
/// the abelianization of `φ⁻¹`.
pub fn induced_map(phi: &FreeAut, phi_inv: &FreeAut) -> Result<CoordMap> {
    let sys = CoordSystem::Torus;
    let words = sys.coordinate_words().expect("torus words");
    let img = |f: &FreeAut| -> Result<Vec<MultiPoly>> {
        words.iter().map(|w| Ok(reduce(&f.apply(w)?))).collect()
    };
    let ab = phi_inv.abelianization();
    let m = [[ab[0][0], ab[0][1]], [ab[1][0], ab[1][1]]];
    Ok(CoordMap::new(sys, img(phi_inv)?)?
        .with_inverse(img(phi)?)?
        .with_slopes(m))
}

/// Simultaneous Vieta involution swapping the roots of the relation in one
/// coordinate.
pub fn vieta(system: CoordSystem, axis: char) -> Result<CoordMap> {
    let i = match axis {
        'x' => 0,
        'y' => 1,
        'z' => 2,
        _ => return Err(Error::Parse(format!("axis must be x, y or z, got {axis}"))),
    };
    let (o1, o2) = (["y", "x", "x"][i], ["z", "z", "y"][i]);
    let v = ["x", "y", "z"][i];
    let src = match system {
        CoordSystem::Torus => format!("{o1}*{o2} - {v}"),
        CoordSystem::FourHoledSymbolic | CoordSystem::FourHoled => {
            let s = fiber_law().xyz_sign;
            let coef = ["A", "B", "C"][i];
            format!("{coef} - ({s})*{o1}*{o2} - {v}")
        }
        CoordSystem::Pants => {
            return Err(Error::Parse("the pair of pants has no Vieta involutions".into()))
        }
    };
    let mut img = MultiPoly::parse(&src, FIBER_PARAM_VARS.as_slice()).expect("static polynomial");
    if system == CoordSystem::FourHoled {
        let law = fiber_law();
        img = img.substitute(&[("A", &law.a), ("B", &law.b), ("C", &law.c)]);
    }
    let mut images: Vec<MultiPoly> = system.vars().iter().map(|v| MultiPoly::var(v)).collect();
    images[i] = img;
    CoordMap::new(system, images.clone())?.with_inverse(images)
}

/// `ε: generators → {±1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct SignVector(pub Vec<i8>);

impl SignVector {
    pub fn trivial(rank: usize) -> Self {
        SignVector(vec![1; rank])
    }

    /// All `2^rank` sign vectors.
    pub fn all(rank: usize) -> Vec<SignVector> {
        (0..1u32 << rank)
            .map(|bits| SignVector((0..rank).map(|i| if bits >> i & 1 == 1 { -1 } else { 1 }).collect()))
            .collect()
    }

    pub fn product(&self) -> i8 {
        self.0.iter().product()
    }

    /// `ε(w) = ∏ ε(g)^{exponent sum of g in w}`.
    pub fn on_word(&self, w: &Word) -> i8 {
        self.0
            .iter()
            .enumerate()
            .map(|(g, &e)| if w.exponent_sum(g).rem_euclid(2) == 1 { e } else { 1 })
            .product()
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .map(|(i, e)| format!("{}:{}", (b'a' + i as u8) as char, if *e > 0 { "+1" } else { "-1" }))
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for SignVector {
    type Err = Error;

    /// Parses `"a:-1,b:+1"` or positional `"-1,+1"`.
    fn from_str(s: &str) -> Result<Self> {
        let mut vals: Vec<(usize, i8)> = Vec::new();
        for (pos, tok) in s.split(',').map(str::trim).filter(|t| !t.is_empty()).enumerate() {
            let (idx, v) = match tok.split_once(':') {
                Some((g, v)) => {
                    let c = g.trim().chars().next().filter(|c| c.is_ascii_lowercase());
                    let c = c.ok_or_else(|| Error::Parse(format!("bad generator in {tok:?}")))?;
                    (c as usize - 'a' as usize, v)
                }
                None => (pos, tok),
            };
            let v = match v.trim() {
                "+1" | "1" | "+" => 1,
                "-1" | "-" => -1,
                other => return Err(Error::Parse(format!("sign must be ±1, got {other:?}"))),
            };
            vals.push((idx, v));
        }
        let n = vals.iter().map(|(i, _)| i + 1).max().unwrap_or(0);
        let mut out = vec![1; n];
        for (i, v) in vals {
            out[i] = v;
        }
        Ok(SignVector(out))
    }
}

/// The sign change `tr_w ↦ ε(w) tr_w` on the coordinates.
pub fn sign_action(system: CoordSystem, eps: &SignVector) -> Result<CoordMap> {
    let words = system.coordinate_words().ok_or_else(|| {
        Error::Parse("sign actions need concrete coordinate words".into())
    })?;
    let rank = system.sig().rank();
    if eps.0.len() > rank {
        return Err(Error::GeneratorOutOfRange(eps.0.len() - 1));
    }
    let mut full = eps.0.clone();
    full.resize(rank, 1);
    let full = SignVector(full);
    let images: Vec<MultiPoly> = system
        .vars()
        .iter()
        .zip(&words)
        .map(|(v, w)| MultiPoly::var(v).scale(&BigInt::from(full.on_word(w))))
        .collect();
    let m = CoordMap::new(system, images.clone())?.with_inverse(images)?;
    Ok(if system == CoordSystem::Torus {
        m.with_slopes([[1, 0], [0, 1]])
    } else {
        m
    })
}

/// Independent sign changes `(x, y, z) ↦ (ε₁x, ε₂y, ε₃z)` on `Σ₁,₁`. Those
/// with `ε₁ε₂ε₃ = 1` are exactly the sign actions of generator sign vectors.
pub fn coordinate_signs(eps: [i8; 3]) -> CoordMap {
    let sys = CoordSystem::Torus;
    let images: Vec<MultiPoly> = TORUS_VARS
        .iter()
        .zip(eps)
        .map(|(v, e)| MultiPoly::var(v).scale(&BigInt::from(e)))
        .collect();
    CoordMap::new(sys, images.clone())
        .and_then(|m| m.with_inverse(images))
        .expect("sizes match")
        .with_slopes([[1, 0], [0, 1]])
}

/// The sign vector `ε′` with `G ∘ S_ε ∘ G⁻¹ = S_ε′`, where `G` is the map
/// of the generator word.
pub fn conjugate_sign(gens: &[TorusGen], eps: &SignVector) -> Result<SignVector> {
    let g = word_map(gens);
    let ginv = g.inverse().expect("generator words carry inverses");
    let s = sign_action(CoordSystem::Torus, eps)?;
    let conj = g.compose(&s)?.compose(&ginv)?;
    let sign_of = |i: usize, v: &str| -> Result<i8> {
        let p = &conj.images()[i];
        if *p == MultiPoly::var(v) {
            Ok(1)
        } else if *p == -MultiPoly::var(v) {
            Ok(-1)
        } else {
            Err(Error::NotASignAction)
        }
    };
    let out = SignVector(vec![sign_of(0, "x")?, sign_of(1, "y")?]);
    let check = sign_action(CoordSystem::Torus, &out)?;
    if check.images() != conj.images() {
        return Err(Error::NotASignAction);
    }
    Ok(out)
}

/// Verifies `g(T_s) = T_{g·s}` for every slope of height at most `h` and
/// returns the slope pairs.
pub fn slope_equivariance(map: &CoordMap, h: u64) -> Result<Vec<(Slope, Slope)>> {
    let mut out = Vec::new();
    for s in Slope::up_to_height(h) {
        let t = map
            .slope_image(&s)
            .ok_or_else(|| Error::Parse("map carries no slope action".into()))?;
        if map.apply(&slope_trace(&s)) != slope_trace(&t) {
            return Err(Error::Inconsistent);
        }
        out.push((s, t));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        MultiPoly::parse(s, &TORUS_VARS).unwrap()
    }

    #[test]
    fn generator_examples() {
        let t = TorusGen::T.coord_map();
        assert_eq!(t.apply(&p("z")), p("y"));
        let r = TorusGen::R.coord_map();
        assert!(r.compose(&r).unwrap().is_identity());
        for g in TorusGen::ALL {
            assert_eq!(g.coord_map().apply(&kappa()), kappa(), "{g}");
            assert!(is_relative_automorphism(&g.coord_map()).holds(), "{g}");
        }
    }

    #[test]
    fn hand_written_and_induced_maps_agree() {
        for g in TorusGen::ALL {
            let (phi, inv) = g.free_aut();
            assert_eq!(induced_map(&phi, &inv).unwrap(), g.coord_map(), "{g}");
        }
    }

    #[test]
    fn hyperelliptic_involution_acts_trivially() {
        let phi = FreeAut::new(vec!["A".parse().unwrap(), "B".parse().unwrap()]);
        let m = induced_map(&phi, &phi).unwrap();
        assert!(m.is_identity());
    }

    #[test]
    fn torus_vieta() {
        let tz = vieta(CoordSystem::Torus, 'z').unwrap();
        assert_eq!(tz.apply(&p("z")), p("x*y - z"));
        assert!(tz.compose(&tz).unwrap().is_identity());
        assert!(is_relative_automorphism(&tz).holds());
    }

    #[test]
    fn sign_examples() {
        let s = sign_action(CoordSystem::Torus, &"a:-1,b:-1".parse().unwrap()).unwrap();
        assert_eq!(s.images(), &[p("-x"), p("-y"), p("z")]);
        assert!(is_relative_automorphism(&s).holds());
        // every generator sign vector fixes κ because ε([a, b]) = 1
        let e = sign_action(CoordSystem::Torus, &"a:-1,b:+1".parse().unwrap()).unwrap();
        assert_eq!(e.images(), &[p("-x"), p("y"), p("-z")]);
        assert_eq!(e.apply(&kappa()), kappa());
        let bad = coordinate_signs([-1, 1, 1]);
        assert_eq!(bad.apply(&kappa()), p("x^2 + y^2 + z^2 + x*y*z - 2"));
        assert!(!is_relative_automorphism(&bad).holds());
        assert_eq!(coordinate_signs([-1, 1, -1]), e);
        assert!(sign_action(CoordSystem::Torus, &SignVector::trivial(2)).unwrap().is_identity());
    }

    #[test]
    fn conjugated_signs() {
        let e: SignVector = "a:+1,b:-1".parse().unwrap();
        assert_eq!(conjugate_sign(&[TorusGen::T], &e).unwrap(), e);
        assert_eq!(conjugate_sign(&[], &e).unwrap(), e);
        let f: SignVector = "a:-1,b:+1".parse().unwrap();
        assert_eq!(conjugate_sign(&[TorusGen::R], &f).unwrap(), e);
    }

    #[test]
    fn slope_action_examples() {
        let t = TorusGen::T.coord_map();
        let pairs = slope_equivariance(&t, 3).unwrap();
        assert!(pairs.contains(&(Slope::new(1, 1).unwrap(), Slope::new(0, 1).unwrap())));
    }

    #[test]
    fn sign_vector_parsing() {
        let e: SignVector = "-1,+1,-1".parse().unwrap();
        assert_eq!(e.0, vec![-1, 1, -1]);
        assert_eq!(e.to_string(), "a:-1,b:+1,c:-1");
        assert!("a:2".parse::<SignVector>().is_err());
    }
}
