//! Points of the complex 3-sphere `q(x) = x₁² + x₂² + x₃² + x₄² = 1`,
//! identified with `SL(2, ℂ)` through
//! `x ↦ [[x₁ + i x₂, x₃ + i x₄], [−x₃ + i x₄, x₁ − i x₂]]`, under which `q`
//! becomes the determinant.

use crate::exact::{GaussRat, Mat2, Rat, Ring, Unimodular};

pub type SpherePoint = Unimodular<GaussRat>;
pub type Vec4 = [GaussRat; 4];

pub fn vec_to_mat(v: &Vec4) -> Mat2<GaussRat> {
    let i = GaussRat::i();
    let [x1, x2, x3, x4] = v.clone();
    Mat2::new(
        x1.clone() + i.clone() * x2.clone(),
        x3.clone() + i.clone() * x4.clone(),
        -x3 + i.clone() * x4,
        x1 - i * x2,
    )
}

pub fn mat_to_vec(m: &Mat2<GaussRat>) -> Vec4 {
    let half = GaussRat::real(Rat::half());
    let minus_half_i = GaussRat::new(Rat::zero(), -Rat::half());
    [
        half.clone() * (m.a.clone() + m.d.clone()),
        minus_half_i.clone() * (m.a.clone() - m.d.clone()),
        half * (m.b.clone() - m.c.clone()),
        minus_half_i * (m.b.clone() + m.c.clone()),
    ]
}

pub fn quad(v: &Vec4) -> GaussRat {
    v.iter().fold(GaussRat::zero(), |acc, x| acc + x.clone() * x.clone())
}

/// `⟨U, V⟩ = ½ tr(adj(U) V)`, the polarization of the determinant.
pub fn pairing(u: &Mat2<GaussRat>, v: &Mat2<GaussRat>) -> GaussRat {
    GaussRat::real(Rat::half()) * (&u.adjugate() * v).trace()
}

/// `s_U(V) = 2⟨U, V⟩U − V = tr(U⁻¹V)·U − V`.
pub fn reflect(u: &SpherePoint, v: &SpherePoint) -> SpherePoint {
    let k = (&u.inverse() * v).trace();
    let m = u.matrix().scale(&k).sub(v.matrix());
    Unimodular::new(m).expect("reflections preserve the determinant")
}

/// `U V⁻¹ U`, the group-theoretic form of the same reflection.
pub fn reflect_group(u: &SpherePoint, v: &SpherePoint) -> SpherePoint {
    &(u * &v.inverse()) * u
}
