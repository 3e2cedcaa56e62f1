//! Ordered configurations of sphere points, the braid action, and the
//! correspondence with tuples of matrices.

use super::point::{mat_to_vec, pairing, reflect, SpherePoint, Vec4};
use crate::error::{Error, Result};
use crate::exact::{GaussRat, Mat2, Ring};
use serde::{Deserialize, Serialize};

/// `(u₁, …, u_r)` on the sphere. When `normalized`, `u_r = I`.
#[derive(Clone, Debug, PartialEq)]
pub struct SphereConfig {
    points: Vec<SpherePoint>,
    normalized: bool,
}

#[derive(Serialize, Deserialize)]
struct WireConfig {
    r: usize,
    points: Vec<SpherePoint>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    normalized: bool,
}

impl SphereConfig {
    pub fn new(points: Vec<SpherePoint>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::Parse("a configuration needs at least one point".into()));
        }
        Ok(SphereConfig {
            points,
            normalized: false,
        })
    }

    /// Marks the configuration as normalized; the last point must be `I`.
    pub fn new_normalized(points: Vec<SpherePoint>) -> Result<Self> {
        let mut c = SphereConfig::new(points)?;
        if c.points.last() != Some(&SpherePoint::identity()) {
            return Err(Error::Parse("normalized configurations end with the identity".into()));
        }
        c.normalized = true;
        Ok(c)
    }

    pub fn r(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[SpherePoint] {
        &self.points
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    /// Right translation `u_j ↦ u_j u_r⁻¹`, which lies in `SO(4)`.
    pub fn normalize(&self) -> SphereConfig {
        let g = self.points.last().expect("nonempty").inverse();
        SphereConfig {
            points: self.points.iter().map(|u| u * &g).collect(),
            normalized: true,
        }
    }

    pub fn right_translate(&self, g: &SpherePoint) -> SphereConfig {
        SphereConfig {
            points: self.points.iter().map(|u| u * g).collect(),
            normalized: false,
        }
    }

    pub fn negate(&self) -> SphereConfig {
        SphereConfig {
            points: self.points.iter().map(|u| u.neg()).collect(),
            normalized: false,
        }
    }

    /// `σ_i` for `1 ≤ i < r`: positions `i, i+1` become `(s_{u_i}(u_{i+1}), u_i)`.
    pub fn braid_act(&self, i: usize) -> Result<SphereConfig> {
        self.check_index(i)?;
        let mut pts = self.points.clone();
        let (u, v) = (&self.points[i - 1], &self.points[i]);
        pts[i - 1] = reflect(u, v);
        pts[i] = u.clone();
        self.finish(pts, i)
    }

    /// `σ_i⁻¹`: positions `i, i+1` become `(u_{i+1}, s_{u_{i+1}}(u_i))`.
    pub fn braid_act_inverse(&self, i: usize) -> Result<SphereConfig> {
        self.check_index(i)?;
        let mut pts = self.points.clone();
        let (u, v) = (&self.points[i - 1], &self.points[i]);
        pts[i - 1] = v.clone();
        pts[i] = reflect(v, u);
        self.finish(pts, i)
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.r() {
            return Err(Error::BraidIndex { index: i, r: self.r() });
        }
        Ok(())
    }

    fn finish(&self, points: Vec<SpherePoint>, i: usize) -> Result<SphereConfig> {
        let out = SphereConfig {
            points,
            normalized: false,
        };
        Ok(if self.normalized && i == self.r() - 1 {
            out.normalize()
        } else {
            SphereConfig {
                normalized: self.normalized,
                ..out
            }
        })
    }

    /// Applies a braid word given as signed generator indices, left to right.
    pub fn braid_word(&self, word: &[i64]) -> Result<SphereConfig> {
        let mut c = self.clone();
        for &g in word {
            let i = g.unsigned_abs() as usize;
            c = if g > 0 {
                c.braid_act(i)?
            } else {
                c.braid_act_inverse(i)?
            };
        }
        Ok(c)
    }

    /// `(⟨u_i, u_j⟩)`.
    pub fn gram(&self) -> Vec<Vec<GaussRat>> {
        self.points
            .iter()
            .map(|u| self.points.iter().map(|v| pairing(u.matrix(), v.matrix())).collect())
            .collect()
    }

    pub fn vectors(&self) -> Vec<Vec4> {
        self.points.iter().map(|u| mat_to_vec(u.matrix())).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(WireConfig {
            r: self.r(),
            points: self.points.clone(),
            normalized: self.normalized,
        })
        .expect("serializable")
    }

    pub fn from_json(src: &str) -> Result<SphereConfig> {
        let w: WireConfig = serde_json::from_str(src).map_err(|e| Error::Parse(e.to_string()))?;
        if w.r != w.points.len() {
            return Err(Error::SizeMismatch(w.r, w.points.len()));
        }
        if w.normalized {
            SphereConfig::new_normalized(w.points)
        } else {
            SphereConfig::new(w.points)
        }
    }
}

/// `(A₁ ⋯ A_{r−1}, A₂ ⋯ A_{r−1}, …, A_{r−1}, I)`.
pub fn rep_to_sphere(a: &[SpherePoint]) -> SphereConfig {
    let mut pts = vec![SpherePoint::identity()];
    for m in a.iter().rev() {
        let next = m * pts.last().expect("nonempty");
        pts.push(next);
    }
    pts.reverse();
    SphereConfig {
        points: pts,
        normalized: true,
    }
}

/// `A_j = u_j u_{j+1}⁻¹` after normalizing.
pub fn sphere_to_rep(c: &SphereConfig) -> Vec<SpherePoint> {
    let n = c.normalize();
    n.points
        .windows(2)
        .map(|w| &w[0] * &w[1].inverse())
        .collect()
}

/// The braid action on matrix tuples, obtained by conjugating the sphere
/// action through the correspondence.
pub fn braid_on_rep(a: &[SpherePoint], i: usize) -> Result<Vec<SpherePoint>> {
    Ok(sphere_to_rep(&rep_to_sphere(a).braid_act(i)?))
}

/// Outcome of comparing two configurations modulo `SO(4)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ModuliCmp {
    Equal,
    Different,
    /// Gram matrices agree but the points span less than four dimensions.
    Degenerate,
}

fn det4(v: [&Vec4; 4]) -> GaussRat {
    let mut m: Vec<Vec<GaussRat>> = v.iter().map(|r| r.to_vec()).collect();
    let mut det = GaussRat::one();
    for col in 0..4 {
        let Some(p) = (col..4).find(|&i| !m[i][col].is_zero()) else {
            return GaussRat::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let piv = m[col][col].clone();
        det = det * piv.clone();
        for i in col + 1..4 {
            let f = m[i][col].clone() / piv.clone();
            for k in col..4 {
                let d = f.clone() * m[col][k].clone();
                m[i][k] = m[i][k].clone() - d;
            }
        }
    }
    det
}

/// Determinants of every 4-subset of the configuration's vectors.
pub fn orientation_data(c: &SphereConfig) -> Vec<GaussRat> {
    let v = c.vectors();
    let r = v.len();
    let mut out = Vec::new();
    for a in 0..r {
        for b in a + 1..r {
            for cc in b + 1..r {
                for d in cc + 1..r {
                    out.push(det4([&v[a], &v[b], &v[cc], &v[d]]));
                }
            }
        }
    }
    out
}

/// Equality in `S(4)^r ⫽ SO(4)` via the Gram matrix and the 4×4 minors.
pub fn moduli_equal(c: &SphereConfig, d: &SphereConfig) -> Result<ModuliCmp> {
    if c.r() != d.r() {
        return Err(Error::SizeMismatch(c.r(), d.r()));
    }
    if c.gram() != d.gram() {
        return Ok(ModuliCmp::Different);
    }
    let (oc, od) = (orientation_data(c), orientation_data(d));
    if oc.iter().all(GaussRat::is_zero) {
        return Ok(ModuliCmp::Degenerate);
    }
    Ok(if oc == od {
        ModuliCmp::Equal
    } else {
        ModuliCmp::Different
    })
}

pub fn identity_points(r: usize) -> Vec<SpherePoint> {
    vec![SpherePoint::identity(); r]
}

/// Checks `u_r = I`, the matrix form of normalization.
pub fn is_identity(m: &Mat2<GaussRat>) -> bool {
    *m == Mat2::identity()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Unimodular;
    use crate::sample;

    fn um(a: i64, b: i64, c: i64, d: i64) -> SpherePoint {
        Unimodular::from_ints(a, b, c, d).unwrap()
    }

    fn random_config(seed: u64, r: usize) -> SphereConfig {
        let mut g = sample::rng(seed);
        SphereConfig::new((0..r).map(|_| sample::unimodular_gauss(&mut g)).collect()).unwrap()
    }

    #[test]
    fn braid_examples() {
        let c = SphereConfig::new(identity_points(4)).unwrap();
        assert_eq!(c.braid_act(2).unwrap(), c);
        let c = SphereConfig::new(vec![um(1, 1, 0, 1), um(1, 0, 1, 1), um(1, 0, 0, 1)]).unwrap();
        let d = c.braid_act(1).unwrap();
        assert_eq!(d.points(), &[um(0, 1, -1, 0), um(1, 1, 0, 1), um(1, 0, 0, 1)]);
        assert!(matches!(c.braid_act(3), Err(Error::BraidIndex { .. })));
        assert!(c.braid_act(0).is_err());
    }

    #[test]
    fn braid_relation_and_inverse() {
        let c = random_config(9, 3);
        assert_eq!(c.braid_word(&[1, 2, 1]).unwrap(), c.braid_word(&[2, 1, 2]).unwrap());
        assert_eq!(c.braid_word(&[2, -2]).unwrap(), c);
        assert_eq!(c.braid_word(&[-1, 1]).unwrap(), c);
    }

    #[test]
    fn correspondence_examples() {
        let a = vec![um(1, 1, 0, 1), um(1, 0, 1, 1)];
        let c = rep_to_sphere(&a);
        assert_eq!(c.points(), &[um(2, 1, 1, 1), um(1, 0, 1, 1), um(1, 0, 0, 1)]);
        assert_eq!(sphere_to_rep(&c), a);
        assert_eq!(
            rep_to_sphere(&identity_points(2)).points(),
            identity_points(3).as_slice()
        );
        let g = um(3, 2, 1, 1);
        assert_eq!(sphere_to_rep(&c.right_translate(&g)), a);
    }

    #[test]
    fn moduli_examples() {
        let c = random_config(5, 5);
        assert_eq!(moduli_equal(&c, &c).unwrap(), ModuliCmp::Equal);
        assert_eq!(moduli_equal(&c, &c.negate()).unwrap(), ModuliCmp::Equal);
        let mut pts = c.points().to_vec();
        pts[2] = pts[2].neg();
        let d = SphereConfig::new(pts).unwrap();
        assert_eq!(moduli_equal(&c, &d).unwrap(), ModuliCmp::Different);
        let flat = SphereConfig::new(identity_points(5)).unwrap();
        assert_eq!(moduli_equal(&flat, &flat).unwrap(), ModuliCmp::Degenerate);
    }

    #[test]
    fn json_roundtrip() {
        let c = rep_to_sphere(&[um(1, 1, 0, 1), um(1, 0, 1, 1)]);
        let back = SphereConfig::from_json(&c.to_json().to_string()).unwrap();
        assert_eq!(back, c);
    }
}
