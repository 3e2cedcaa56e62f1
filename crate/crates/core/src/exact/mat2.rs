use super::{Field, Ring};
use crate::error::{Error, Result};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::ops::Mul;

/// 2×2 matrix `[[a, b], [c, d]]` over a ring. JSON form is the nested array
/// `[[a,b],[c,d]]` of ring elements.
#[derive(Clone, PartialEq, Debug)]
pub struct Mat2<R> {
    pub a: R,
    pub b: R,
    pub c: R,
    pub d: R,
}

impl<R: Ring> Mat2<R> {
    pub fn new(a: R, b: R, c: R, d: R) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn identity() -> Self {
        Mat2::new(R::one(), R::zero(), R::zero(), R::one())
    }

    pub fn diag(p: R, q: R) -> Self {
        Mat2::new(p, R::zero(), R::zero(), q)
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Mat2::new(R::from_i64(a), R::from_i64(b), R::from_i64(c), R::from_i64(d))
    }

    pub fn det(&self) -> R {
        self.a.clone() * self.d.clone() - self.b.clone() * self.c.clone()
    }

    pub fn trace(&self) -> R {
        self.a.clone() + self.d.clone()
    }

    /// Adjugate `[[d, −b], [−c, a]]`; the inverse when det = 1.
    pub fn adjugate(&self) -> Self {
        Mat2::new(
            self.d.clone(),
            -self.b.clone(),
            -self.c.clone(),
            self.a.clone(),
        )
    }

    pub fn scale(&self, s: &R) -> Self {
        Mat2::new(
            s.clone() * self.a.clone(),
            s.clone() * self.b.clone(),
            s.clone() * self.c.clone(),
            s.clone() * self.d.clone(),
        )
    }

    pub fn add(&self, o: &Self) -> Self {
        Mat2::new(
            self.a.clone() + o.a.clone(),
            self.b.clone() + o.b.clone(),
            self.c.clone() + o.c.clone(),
            self.d.clone() + o.d.clone(),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        Mat2::new(
            self.a.clone() - o.a.clone(),
            self.b.clone() - o.b.clone(),
            self.c.clone() - o.c.clone(),
            self.d.clone() - o.d.clone(),
        )
    }

    pub fn neg(&self) -> Self {
        self.scale(&-R::one())
    }

    pub fn map<S>(&self, f: impl Fn(&R) -> S) -> Mat2<S> {
        Mat2 {
            a: f(&self.a),
            b: f(&self.b),
            c: f(&self.c),
            d: f(&self.d),
        }
    }
}

impl<R: Field> Mat2<R> {
    pub fn inverse(&self) -> Option<Self> {
        let di = self.det().inverse()?;
        Some(self.adjugate().scale(&di))
    }
}

impl<R: Ring> Mul for &Mat2<R> {
    type Output = Mat2<R>;
    fn mul(self, o: &Mat2<R>) -> Mat2<R> {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        Mat2::new(
            a.clone() * o.a.clone() + b.clone() * o.c.clone(),
            a.clone() * o.b.clone() + b.clone() * o.d.clone(),
            c.clone() * o.a.clone() + d.clone() * o.c.clone(),
            c.clone() * o.b.clone() + d.clone() * o.d.clone(),
        )
    }
}

impl<R: Ring> Mul for Mat2<R> {
    type Output = Mat2<R>;
    fn mul(self, o: Mat2<R>) -> Mat2<R> {
        &self * &o
    }
}

impl<R: Serialize> Serialize for Mat2<R> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [[&self.a, &self.b], [&self.c, &self.d]].serialize(s)
    }
}

impl<'de, R: Deserialize<'de>> Deserialize<'de> for Mat2<R> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [[a, b], [c, dd]] = <[[R; 2]; 2]>::deserialize(d)?;
        Ok(Mat2 { a, b, c, d: dd })
    }
}

/// A matrix certified to have determinant exactly 1.
#[derive(Clone, PartialEq, Debug)]
pub struct Unimodular<R>(Mat2<R>);

impl<R: Ring> Unimodular<R> {
    pub fn new(m: Mat2<R>) -> Result<Self> {
        let det = m.det();
        if det.is_one() {
            Ok(Unimodular(m))
        } else {
            Err(Error::NotUnimodular(format!("{det:?}")))
        }
    }

    pub fn identity() -> Self {
        Unimodular(Mat2::identity())
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Unimodular::new(Mat2::from_ints(a, b, c, d))
    }

    pub fn matrix(&self) -> &Mat2<R> {
        &self.0
    }

    pub fn into_matrix(self) -> Mat2<R> {
        self.0
    }

    pub fn inverse(&self) -> Self {
        Unimodular(self.0.adjugate())
    }

    pub fn trace(&self) -> R {
        self.0.trace()
    }

    /// −M, still unimodular.
    pub fn neg(&self) -> Self {
        Unimodular(self.0.neg())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Unimodular<S> {
        Unimodular(self.0.map(f))
    }
}

impl<R: Ring> Mul for &Unimodular<R> {
    type Output = Unimodular<R>;
    fn mul(self, o: &Unimodular<R>) -> Unimodular<R> {
        Unimodular(&self.0 * &o.0)
    }
}

impl<R: Ring> Mul for Unimodular<R> {
    type Output = Unimodular<R>;
    fn mul(self, o: Unimodular<R>) -> Unimodular<R> {
        &self * &o
    }
}

impl<R: Serialize> Serialize for Unimodular<R> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de, R: Ring + Deserialize<'de>> Deserialize<'de> for Unimodular<R> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let m = Mat2::<R>::deserialize(d)?;
        Unimodular::new(m).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{LaurentPoly, Rat};

    #[test]
    fn product_examples() {
        let u = Mat2::<Rat>::from_ints(1, 1, 0, 1);
        let l = Mat2::<Rat>::from_ints(1, 0, 1, 1);
        assert_eq!(&u * &l, Mat2::from_ints(2, 1, 1, 1));
        assert_eq!(&u * &Mat2::identity(), u);
    }

    #[test]
    fn laurent_diagonal() {
        let t = LaurentPoly::t();
        let ti = LaurentPoly::t_pow(-1);
        let m = Mat2::diag(t, ti);
        let sq = &m * &m;
        assert_eq!(sq, Mat2::diag(LaurentPoly::t_pow(2), LaurentPoly::t_pow(-2)));
        assert!(Unimodular::new(sq).is_ok());
    }

    #[test]
    fn rejects_non_unimodular() {
        assert!(Unimodular::<Rat>::from_ints(2, 0, 0, 1).is_err());
        let bad: std::result::Result<Unimodular<Rat>, _> =
            serde_json::from_str(r#"[["2/1","0/1"],["0/1","1/1"]]"#);
        assert!(bad.is_err());
    }

    #[test]
    fn inverse_is_adjugate() {
        let m = Unimodular::<Rat>::from_ints(2, 1, 3, 2).unwrap();
        assert_eq!(&m * &m.inverse(), Unimodular::identity());
    }
}
