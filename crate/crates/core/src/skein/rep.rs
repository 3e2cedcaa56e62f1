//! Matrix representations: the evaluation oracle for trace functions on any
//! surface.

use crate::error::{Error, Result};
use crate::exact::{GaussRat, LaurentPoly, Mat2, Rat, Ring, Unimodular};
use crate::words::{SurfaceSig, Word};
use serde::{Deserialize, Serialize};

/// Images of the free generators of `π₁ Σ` in `SL(2, R)`.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixRep<R: Ring> {
    sig: SurfaceSig,
    images: Vec<Unimodular<R>>,
}

impl<R: Ring> MatrixRep<R> {
    /// Images may be fewer than the rank; evaluating a word that uses a
    /// missing generator is an error.
    pub fn new(sig: SurfaceSig, images: Vec<Unimodular<R>>) -> Result<Self> {
        if images.len() > sig.rank() {
            return Err(Error::GeneratorOutOfRange(images.len() - 1));
        }
        Ok(MatrixRep { sig, images })
    }

    pub fn sig(&self) -> &SurfaceSig {
        &self.sig
    }

    pub fn images(&self) -> &[Unimodular<R>] {
        &self.images
    }

    pub fn evaluate_word(&self, w: &Word) -> Result<Mat2<R>> {
        let mut acc = Mat2::identity();
        for l in w.letters() {
            let m = self.images.get(l.gen).ok_or(Error::MissingGenerator(l.gen))?;
            acc = if l.inv {
                &acc * &m.inverse().into_matrix()
            } else {
                &acc * m.matrix()
            };
        }
        Ok(acc)
    }

    pub fn evaluate_trace(&self, w: &Word) -> Result<R> {
        Ok(self.evaluate_word(w)?.trace())
    }

    /// Trace coordinates `(tr a, tr b, tr ab)` of a rank-two representation.
    pub fn torus_coords(&self) -> Result<[R; 3]> {
        let t = |s: &str| self.evaluate_trace(&s.parse().expect("static word"));
        Ok([t("a")?, t("b")?, t("ab")?])
    }

    /// Coordinates `(x, y, z, p₁, p₂, p₃, p₄)` of a four-holed sphere
    /// representation.
    pub fn four_holed_coords(&self) -> Result<[R; 7]> {
        let t = |s: &str| self.evaluate_trace(&s.parse().expect("static word"));
        Ok([t("ab")?, t("bc")?, t("ac")?, t("a")?, t("b")?, t("c")?, t("abc")?])
    }
}

/// A representation read from JSON, over whichever coefficient ring the file
/// names.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyRep {
    Rat(MatrixRep<Rat>),
    Gauss(MatrixRep<GaussRat>),
    Laurent(MatrixRep<LaurentPoly>),
}

#[derive(Serialize, Deserialize)]
struct RepFile {
    surface: String,
    ring: String,
    images: Vec<serde_json::Value>,
}

fn parse_images<R>(vals: Vec<serde_json::Value>) -> Result<Vec<Unimodular<R>>>
where
    R: Ring + for<'de> Deserialize<'de>,
{
    vals.into_iter()
        .map(|v| serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string())))
        .collect()
}

impl AnyRep {
    /// Parses `{"surface":"1,1","ring":"rat"|"gauss"|"laurent","images":[…]}`.
    pub fn from_json(src: &str) -> Result<AnyRep> {
        let f: RepFile = serde_json::from_str(src).map_err(|e| Error::Parse(e.to_string()))?;
        let sig: SurfaceSig = f.surface.parse()?;
        match f.ring.as_str() {
            "rat" => Ok(AnyRep::Rat(MatrixRep::new(sig, parse_images(f.images)?)?)),
            "gauss" => Ok(AnyRep::Gauss(MatrixRep::new(sig, parse_images(f.images)?)?)),
            "laurent" => Ok(AnyRep::Laurent(MatrixRep::new(sig, parse_images(f.images)?)?)),
            other => Err(Error::Parse(format!("unknown ring {other:?}"))),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        fn file<R: Ring + Serialize>(ring: &str, r: &MatrixRep<R>) -> serde_json::Value {
            serde_json::json!({
                "surface": r.sig.to_string(),
                "ring": ring,
                "images": r.images,
            })
        }
        match self {
            AnyRep::Rat(r) => file("rat", r),
            AnyRep::Gauss(r) => file("gauss", r),
            AnyRep::Laurent(r) => file("laurent", r),
        }
    }

    pub fn sig(&self) -> &SurfaceSig {
        match self {
            AnyRep::Rat(r) => r.sig(),
            AnyRep::Gauss(r) => r.sig(),
            AnyRep::Laurent(r) => r.sig(),
        }
    }

    /// Trace of `w`, rendered as JSON in the ring's own encoding.
    pub fn trace_json(&self, w: &Word) -> Result<serde_json::Value> {
        let v = match self {
            AnyRep::Rat(r) => serde_json::to_value(r.evaluate_trace(w)?),
            AnyRep::Gauss(r) => serde_json::to_value(r.evaluate_trace(w)?),
            AnyRep::Laurent(r) => serde_json::to_value(r.evaluate_trace(w)?),
        };
        v.map_err(|e| Error::Parse(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(a: i64, b: i64, c: i64, d: i64) -> Unimodular<Rat> {
        Unimodular::from_ints(a, b, c, d).unwrap()
    }

    #[test]
    fn evaluation_examples() {
        let rep = MatrixRep::new(
            SurfaceSig::ONCE_PUNCTURED_TORUS,
            vec![m(1, 1, 0, 1), m(1, 0, 1, 1)],
        )
        .unwrap();
        assert_eq!(rep.evaluate_trace(&"ab".parse().unwrap()).unwrap(), Rat::int(3));
        assert_eq!(rep.evaluate_trace(&Word::empty()).unwrap(), Rat::int(2));
        let one = MatrixRep::new(SurfaceSig::ONCE_PUNCTURED_TORUS, vec![m(2, 1, 3, 2)]).unwrap();
        assert_eq!(one.evaluate_trace(&"a".parse().unwrap()).unwrap(), Rat::int(4));
        assert!(matches!(
            one.evaluate_trace(&"ab".parse().unwrap()),
            Err(Error::MissingGenerator(1))
        ));
    }

    #[test]
    fn json_roundtrip() {
        let src = r#"{"surface":"1,1","ring":"laurent","images":[
            [[{"t":{"1":"1/1"}},{"t":{}}],[{"t":{}},{"t":{"-1":"1/1"}}]],
            [[{"t":{"0":"1/1"}},{"t":{"0":"1/1"}}],[{"t":{}},{"t":{"0":"1/1"}}]]]}"#;
        let rep = AnyRep::from_json(src).unwrap();
        let back = AnyRep::from_json(&rep.to_json().to_string()).unwrap();
        assert_eq!(rep, back);
        let tr = rep.trace_json(&"a".parse().unwrap()).unwrap();
        assert_eq!(tr.to_string(), r#"{"t":{"-1":"1/1","1":"1/1"}}"#);
    }

    #[test]
    fn rejects_non_unimodular_images() {
        let src = r#"{"surface":"1,1","ring":"rat","images":[[["2/1","0/1"],["0/1","1/1"]]]}"#;
        assert!(AnyRep::from_json(src).is_err());
    }
}
