//! The Clifford algebra of `ℂ⁴` realised on 4×4 Gaussian-rational matrices,
//! and the Coxeter invariant of a configuration.

use super::config::SphereConfig;
use super::point::{mat_to_vec, Vec4};
use crate::exact::{GaussRat, Rat, Ring};
use std::fmt;
use std::ops::Mul;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat4(pub [[GaussRat; 4]; 4]);

impl Mat4 {
    pub fn zero() -> Self {
        Mat4(std::array::from_fn(|_| std::array::from_fn(|_| GaussRat::zero())))
    }

    pub fn identity() -> Self {
        let mut m = Mat4::zero();
        for i in 0..4 {
            m.0[i][i] = GaussRat::one();
        }
        m
    }

    pub fn add(&self, o: &Mat4) -> Mat4 {
        Mat4(std::array::from_fn(|i| {
            std::array::from_fn(|j| self.0[i][j].clone() + o.0[i][j].clone())
        }))
    }

    pub fn scale(&self, s: &GaussRat) -> Mat4 {
        Mat4(std::array::from_fn(|i| {
            std::array::from_fn(|j| s.clone() * self.0[i][j].clone())
        }))
    }

    pub fn trace(&self) -> GaussRat {
        (0..4).fold(GaussRat::zero(), |acc, i| acc + self.0[i][i].clone())
    }

    /// `A ⊗ B` for 2×2 blocks given row-major.
    fn kron(a: [[GaussRat; 2]; 2], b: [[GaussRat; 2]; 2]) -> Mat4 {
        Mat4(std::array::from_fn(|i| {
            std::array::from_fn(|j| a[i / 2][j / 2].clone() * b[i % 2][j % 2].clone())
        }))
    }
}

impl Mul for &Mat4 {
    type Output = Mat4;

    fn mul(self, o: &Mat4) -> Mat4 {
        Mat4(std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                (0..4).fold(GaussRat::zero(), |acc, k| {
                    acc + self.0[i][k].clone() * o.0[k][j].clone()
                })
            })
        }))
    }
}

fn pauli() -> [[[GaussRat; 2]; 2]; 4] {
    let z = GaussRat::zero;
    let o = GaussRat::one;
    let i = GaussRat::i;
    [
        [[o(), z()], [z(), o()]],
        [[z(), o()], [o(), z()]],
        [[z(), -i()], [i(), z()]],
        [[o(), z()], [z(), -o()]],
    ]
}

/// `γ₁ = σx⊗I, γ₂ = σy⊗I, γ₃ = σz⊗σx, γ₄ = σz⊗σy`.
pub fn gammas() -> [Mat4; 4] {
    let [id, sx, sy, sz] = pauli();
    [
        Mat4::kron(sx, id.clone()),
        Mat4::kron(sy, id),
        Mat4::kron(sz.clone(), pauli()[1].clone()),
        Mat4::kron(sz, pauli()[2].clone()),
    ]
}

/// Every pair satisfies `γ_k γ_l + γ_l γ_k = 2δ_{kl} I`.
pub fn check_anticommutation() -> bool {
    let g = gammas();
    let two = GaussRat::real(Rat::int(2));
    (0..4).all(|k| {
        (0..4).all(|l| {
            let s = (&g[k] * &g[l]).add(&(&g[l] * &g[k]));
            let want = if k == l {
                Mat4::identity().scale(&two)
            } else {
                Mat4::zero()
            };
            s == want
        })
    })
}

/// `γ(v) = Σ v_k γ_k`.
pub fn clifford_of(v: &Vec4) -> Mat4 {
    let g = gammas();
    (0..4).fold(Mat4::zero(), |acc, k| acc.add(&g[k].scale(&v[k])))
}

/// `γ(u₁) ⋯ γ(u_r)`.
pub fn coxeter_product(c: &SphereConfig) -> Mat4 {
    c.points()
        .iter()
        .fold(Mat4::identity(), |acc, u| &acc * &clifford_of(&mat_to_vec(u.matrix())))
}

/// Monic characteristic polynomial, coefficients from `X⁰` up to `X⁴`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharPoly(pub Vec<GaussRat>);

/// Faddeev–LeVerrier recursion.
pub fn char_poly(a: &Mat4) -> CharPoly {
    let n = 4;
    let mut c = vec![GaussRat::zero(); n + 1];
    c[n] = GaussRat::one();
    let mut m = Mat4::zero();
    for k in 1..=n {
        m = (&(a * &m)).add(&Mat4::identity().scale(&c[n - k + 1]));
        let am = a * &m;
        let inv_k = GaussRat::real(Rat::new(-1, k as i64));
        c[n - k] = inv_k * am.trace();
    }
    CharPoly(c)
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => "X".into(),
                _ => format!("X^{k}"),
            };
            parts.push(match (c.is_one(), mono.is_empty()) {
                (true, false) => mono,
                (_, true) => format!("({c})"),
                _ => format!("({c})*{mono}"),
            });
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sphere::point::{vec_to_mat, SpherePoint};
    use crate::exact::Unimodular;

    fn e(k: usize) -> SpherePoint {
        let mut v: Vec4 = std::array::from_fn(|_| GaussRat::zero());
        v[k] = GaussRat::one();
        Unimodular::new(vec_to_mat(&v)).unwrap()
    }

    fn g(n: i64) -> GaussRat {
        GaussRat::real(Rat::int(n))
    }

    #[test]
    fn gammas_anticommute() {
        assert!(check_anticommutation());
    }

    #[test]
    fn char_poly_examples() {
        // (X − 1)⁴ = X⁴ − 4X³ + 6X² − 4X + 1
        let c = SphereConfig::new(vec![e(0); 4]).unwrap();
        assert_eq!(coxeter_product(&c), Mat4::identity());
        assert_eq!(char_poly(&coxeter_product(&c)).0, vec![g(1), g(-4), g(6), g(-4), g(1)]);
        // (X² − 1)² = X⁴ − 2X² + 1
        let c = SphereConfig::new(vec![e(1)]).unwrap();
        assert_eq!(char_poly(&coxeter_product(&c)).0, vec![g(1), g(0), g(-2), g(0), g(1)]);
    }
}
