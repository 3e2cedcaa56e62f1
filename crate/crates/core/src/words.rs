//! Free-group words, surface presentations and torus slopes.
//!
//! Words are written with one letter per generator: generator `k` is the
//! `k`-th lowercase letter and its inverse the matching uppercase letter, so
//! the commutator `[a, b]` reads `"abAB"`. For `Σ_{g,n}` the generators are
//! ordered `a₁, b₁, …, a_g, b_g, c₁, …, c_{n−1}`.

use crate::error::{Error, Result};
use num_integer::Integer;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Letter {
    pub gen: usize,
    pub inv: bool,
}

impl Letter {
    pub fn new(gen: usize, inv: bool) -> Self {
        Letter { gen, inv }
    }

    pub fn inverse(self) -> Letter {
        Letter {
            gen: self.gen,
            inv: !self.inv,
        }
    }

    pub fn exponent(self) -> i64 {
        if self.inv {
            -1
        } else {
            1
        }
    }

    fn from_char(c: char) -> Option<Letter> {
        match c {
            'a'..='z' => Some(Letter::new(c as usize - 'a' as usize, false)),
            'A'..='Z' => Some(Letter::new(c as usize - 'A' as usize, true)),
            _ => None,
        }
    }

    fn to_char(self) -> char {
        let base = if self.inv { b'A' } else { b'a' };
        (base + self.gen as u8) as char
    }
}

/// A freely reduced word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn gen(k: usize) -> Self {
        Word(vec![Letter::new(k, false)])
    }

    /// Cancels adjacent inverse pairs until none remain.
    pub fn free_reduce(raw: impl IntoIterator<Item = Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in raw {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn concat(&self, o: &Word) -> Word {
        Word::free_reduce(self.0.iter().chain(&o.0).copied())
    }

    pub fn pow(&self, k: u32) -> Word {
        (0..k).fold(Word::empty(), |acc, _| acc.concat(self))
    }

    /// Cyclic rotation moving the first `k` letters to the end. The result
    /// may fail to be freely reduced only across the seam, which is fixed up.
    pub fn rotate(&self, k: usize) -> Word {
        if self.0.is_empty() {
            return self.clone();
        }
        let k = k % self.0.len();
        Word::free_reduce(self.0[k..].iter().chain(&self.0[..k]).copied())
    }

    /// Removes cancelling pairs between the two ends.
    pub fn cyclic_reduce(&self) -> Word {
        let mut v = self.0.as_slice();
        while v.len() >= 2 && v[0] == v[v.len() - 1].inverse() {
            v = &v[1..v.len() - 1];
        }
        Word(v.to_vec())
    }

    pub fn exponent_sum(&self, gen: usize) -> i64 {
        self.0
            .iter()
            .filter(|l| l.gen == gen)
            .map(|l| l.exponent())
            .sum()
    }

    /// One past the largest generator index used.
    pub fn rank_used(&self) -> usize {
        self.0.iter().map(|l| l.gen + 1).max().unwrap_or(0)
    }

    /// Replaces every letter by the image of its generator (inverted for
    /// inverse letters).
    pub fn substitute(&self, images: &[Word]) -> Result<Word> {
        let mut raw = Vec::new();
        for l in &self.0 {
            let img = images.get(l.gen).ok_or(Error::GeneratorOutOfRange(l.gen))?;
            if l.inv {
                raw.extend(img.inverse().0);
            } else {
                raw.extend_from_slice(&img.0);
            }
        }
        Ok(Word::free_reduce(raw))
    }

    /// Substitutes `a` ↦ `a⁻¹` for generator `gen`.
    pub fn invert_generator(&self, gen: usize) -> Word {
        Word(
            self.0
                .iter()
                .map(|&l| if l.gen == gen { l.inverse() } else { l })
                .collect(),
        )
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?})", self.to_string())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses `"abAB"`; whitespace is ignored and `"1"` denotes the empty word.
    fn from_str(s: &str) -> Result<Word> {
        let s = s.trim();
        if s == "1" {
            return Ok(Word::empty());
        }
        let mut raw = Vec::with_capacity(s.len());
        for c in s.chars().filter(|c| !c.is_whitespace()) {
            raw.push(Letter::from_char(c).ok_or_else(|| Error::Parse(format!("bad letter {c:?} in word")))?);
        }
        Ok(Word::free_reduce(raw))
    }
}

/// Signature `(g, n)` of a punctured surface `Σ_{g,n}` with `n ≥ 1` and
/// negative Euler characteristic. Its fundamental group is free of rank
/// `2g + n − 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SurfaceSig {
    genus: u32,
    punctures: u32,
}

impl SurfaceSig {
    pub const ONCE_PUNCTURED_TORUS: SurfaceSig = SurfaceSig {
        genus: 1,
        punctures: 1,
    };
    pub const PAIR_OF_PANTS: SurfaceSig = SurfaceSig {
        genus: 0,
        punctures: 3,
    };
    pub const FOUR_HOLED_SPHERE: SurfaceSig = SurfaceSig {
        genus: 0,
        punctures: 4,
    };

    pub fn new(genus: u32, punctures: u32) -> Result<Self> {
        let bad = |reason| Error::InvalidSurface {
            genus,
            punctures,
            reason,
        };
        if punctures == 0 {
            return Err(bad("closed surfaces are not supported"));
        }
        if 2 * genus + punctures < 3 {
            return Err(bad("Euler characteristic must be negative"));
        }
        Ok(SurfaceSig { genus, punctures })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn punctures(&self) -> u32 {
        self.punctures
    }

    pub fn rank(&self) -> usize {
        (2 * self.genus + self.punctures - 1) as usize
    }

    /// Generator names `a1, b1, …, c1, …` in index order.
    pub fn generator_names(&self) -> Vec<String> {
        let mut names = Vec::with_capacity(self.rank());
        for i in 1..=self.genus {
            names.push(format!("a{i}"));
            names.push(format!("b{i}"));
        }
        for j in 1..self.punctures {
            names.push(format!("c{j}"));
        }
        names
    }

    /// The word of the loop around puncture `index` (1-based). The last
    /// puncture is the inverse of `∏[a_i, b_i] · c₁ ⋯ c_{n−1}`.
    pub fn boundary_word(&self, index: usize) -> Result<Word> {
        let n = self.punctures as usize;
        if index == 0 || index > n {
            return Err(Error::InvalidBoundaryIndex {
                index,
                punctures: self.punctures,
            });
        }
        let g = self.genus as usize;
        if index < n {
            return Ok(Word::gen(2 * g + index - 1));
        }
        let mut raw = Vec::new();
        for i in 0..g {
            let (a, b) = (2 * i, 2 * i + 1);
            raw.extend([
                Letter::new(a, false),
                Letter::new(b, false),
                Letter::new(a, true),
                Letter::new(b, true),
            ]);
        }
        for j in 0..n - 1 {
            raw.push(Letter::new(2 * g + j, false));
        }
        Ok(Word::free_reduce(raw).inverse())
    }
}

impl fmt::Display for SurfaceSig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.genus, self.punctures)
    }
}

impl FromStr for SurfaceSig {
    type Err = Error;

    /// Parses `"g,n"`.
    fn from_str(s: &str) -> Result<Self> {
        let (g, n) = s
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("surface must be \"g,n\", got {s:?}")))?;
        let g = g.trim().parse().map_err(|_| Error::Parse(format!("bad genus in {s:?}")))?;
        let n = n.trim().parse().map_err(|_| Error::Parse(format!("bad puncture count in {s:?}")))?;
        SurfaceSig::new(g, n)
    }
}

/// Slope `p/q` of an essential simple closed curve on the once-punctured
/// torus, in canonical form: `gcd(|p|, |q|) = 1` and `q > 0`, except for the
/// slope at infinity `1/0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Slope {
    p: i64,
    q: i64,
}

impl Slope {
    pub const INFINITY: Slope = Slope { p: 1, q: 0 };
    pub const ZERO: Slope = Slope { p: 0, q: 1 };

    /// Normalizes `(p, q)` to canonical form; `(0, 0)` is rejected.
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p == 0 && q == 0 {
            return Err(Error::InvalidSlope(p, q));
        }
        let g = p.gcd(&q);
        let (mut p, mut q) = (p / g, q / g);
        if q < 0 || (q == 0 && p < 0) {
            p = -p;
            q = -q;
        }
        Ok(Slope { p, q })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn height(&self) -> u64 {
        self.p.unsigned_abs().max(self.q.unsigned_abs())
    }

    /// Geometric intersection number `|p q' − q p'|` on the torus.
    pub fn intersection(&self, o: &Slope) -> u64 {
        (self.p as i128 * o.q as i128 - self.q as i128 * o.p as i128).unsigned_abs() as u64
    }

    /// Image under an integral 2×2 matrix acting on `(p, q)` as a column.
    pub fn transform(&self, m: [[i64; 2]; 2]) -> Result<Slope> {
        Slope::new(
            m[0][0] * self.p + m[0][1] * self.q,
            m[1][0] * self.p + m[1][1] * self.q,
        )
    }

    /// All canonical slopes with `max(|p|, |q|) ≤ h`.
    pub fn up_to_height(h: u64) -> Vec<Slope> {
        let h = h as i64;
        let mut out = Vec::new();
        for q in 0..=h {
            for p in -h..=h {
                if p.gcd(&q) == 1 {
                    if let Ok(s) = Slope::new(p, q) {
                        if s.p == p && s.q == q {
                            out.push(s);
                        }
                    }
                }
            }
        }
        out
    }

    /// Slopes reachable within `depth` mediant steps: `1/0` and `0/1` at
    /// depth 0, then the Stern–Brocot tree below `1/1` and its mirror below
    /// `−1/1`.
    pub fn stern_brocot(depth: u32) -> Vec<Slope> {
        let mut out = vec![Slope::INFINITY, Slope::ZERO];
        fn walk(l: (i64, i64), r: (i64, i64), d: u32, max: u32, out: &mut Vec<Slope>) {
            if d > max {
                return;
            }
            let m = (l.0 + r.0, l.1 + r.1);
            out.push(Slope { p: m.0, q: m.1 });
            out.push(Slope { p: -m.0, q: m.1 });
            walk(l, m, d + 1, max, out);
            walk(m, r, d + 1, max, out);
        }
        walk((0, 1), (1, 0), 1, depth, &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for Slope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (p, q) = s
            .trim()
            .split_once('/')
            .ok_or_else(|| Error::Parse(format!("slope must be \"p/q\", got {s:?}")))?;
        let p = p.trim().parse().map_err(|_| Error::Parse(format!("bad slope {s:?}")))?;
        let q = q.trim().parse().map_err(|_| Error::Parse(format!("bad slope {s:?}")))?;
        Slope::new(p, q)
    }
}

/// Word of the simple closed curve with slope `s` on `Σ₁,₁` with `π₁ = ⟨a, b⟩`.
///
/// Built by Stern–Brocot descent: `W(1/0) = a`, `W(0/1) = b`, and a mediant
/// of Farey neighbours is the word of the larger ratio followed by the word
/// of the smaller one. Negative slopes use the mirrored tree, `a ↦ a⁻¹`.
pub fn slope_word(s: &Slope) -> Word {
    if s.q == 0 {
        return Word::gen(0);
    }
    if s.p == 0 {
        return Word::gen(1);
    }
    let (tp, tq) = (s.p.abs(), s.q);
    let (mut l, mut lw) = ((0i64, 1i64), Word::gen(1));
    let (mut r, mut rw) = ((1i64, 0i64), Word::gen(0));
    let w = loop {
        let m = (l.0 + r.0, l.1 + r.1);
        let mw = Word(rw.0.iter().chain(&lw.0).copied().collect());
        if m == (tp, tq) {
            break mw;
        }
        if (tp as i128) * (m.1 as i128) < (m.0 as i128) * (tq as i128) {
            r = m;
            rw = mw;
        } else {
            l = m;
            lw = mw;
        }
    };
    if s.p < 0 {
        w.invert_generator(0)
    } else {
        w
    }
}

/// Automorphism of a free group given by the images of its generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FreeAut {
    pub images: Vec<Word>,
}

impl FreeAut {
    pub fn new(images: Vec<Word>) -> Self {
        FreeAut { images }
    }

    pub fn identity(rank: usize) -> Self {
        FreeAut::new((0..rank).map(Word::gen).collect())
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        w.substitute(&self.images)
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &FreeAut) -> Result<FreeAut> {
        Ok(FreeAut::new(
            other
                .images
                .iter()
                .map(|w| self.apply(w))
                .collect::<Result<_>>()?,
        ))
    }

    /// Action on homology: column `j` holds the exponent sums of the image of
    /// generator `j`.
    pub fn abelianization(&self) -> Vec<Vec<i64>> {
        let n = self.images.len();
        (0..n)
            .map(|i| self.images.iter().map(|w| w.exponent_sum(i)).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn free_reduction_examples() {
        assert_eq!(w("aA").to_string(), "");
        assert_eq!(w("abAB").to_string(), "abAB");
        assert_eq!(w("abBA").to_string(), "");
        assert_eq!(w("1"), Word::empty());
        assert!("ab$".parse::<Word>().is_err());
    }

    #[test]
    fn boundary_words() {
        let t = SurfaceSig::ONCE_PUNCTURED_TORUS;
        assert_eq!(t.boundary_word(1).unwrap(), w("abAB").inverse());
        let p = SurfaceSig::PAIR_OF_PANTS;
        assert_eq!(p.boundary_word(1).unwrap(), w("a"));
        let s = SurfaceSig::FOUR_HOLED_SPHERE;
        assert_eq!(s.boundary_word(4).unwrap(), w("abc").inverse());
        assert!(matches!(t.boundary_word(2), Err(Error::InvalidBoundaryIndex { .. })));
        assert!(t.boundary_word(0).is_err());
    }

    #[test]
    fn surface_validation() {
        assert!(SurfaceSig::new(0, 2).is_err());
        assert!(SurfaceSig::new(1, 0).is_err());
        assert_eq!(SurfaceSig::new(2, 1).unwrap().rank(), 4);
        assert_eq!("1,2".parse::<SurfaceSig>().unwrap().rank(), 3);
        assert_eq!(
            SurfaceSig::new(1, 2).unwrap().generator_names(),
            vec!["a1", "b1", "c1"]
        );
    }

    #[test]
    fn slope_words() {
        assert_eq!(slope_word(&Slope::new(1, 0).unwrap()).to_string(), "a");
        assert_eq!(slope_word(&Slope::new(0, 1).unwrap()).to_string(), "b");
        assert_eq!(slope_word(&Slope::new(1, 1).unwrap()).to_string(), "ab");
        assert_eq!(slope_word(&Slope::new(2, 1).unwrap()).to_string(), "aab");
        assert_eq!(slope_word(&Slope::new(-1, 1).unwrap()).to_string(), "Ab");
        assert_eq!(slope_word(&Slope::new(1, 2).unwrap()).to_string(), "abb");
    }

    #[test]
    fn slope_canonical_form() {
        assert_eq!(Slope::new(1, -1).unwrap(), Slope::new(-1, 1).unwrap());
        assert_eq!(Slope::new(-2, 0).unwrap(), Slope::INFINITY);
        assert_eq!(Slope::new(4, 6).unwrap().to_string(), "2/3");
        assert!(Slope::new(0, 0).is_err());
        assert_eq!("1/0".parse::<Slope>().unwrap(), Slope::INFINITY);
    }

    #[test]
    fn intersection_examples() {
        let s = |p, q| Slope::new(p, q).unwrap();
        assert_eq!(s(1, 0).intersection(&s(0, 1)), 1);
        assert_eq!(s(2, 1).intersection(&s(1, 1)), 1);
        assert_eq!(s(2, 3).intersection(&s(2, 3)), 0);
    }

    #[test]
    fn distinct_torus_slopes_intersect() {
        let all = Slope::up_to_height(5);
        for a in &all {
            for b in &all {
                assert_eq!(a.intersection(b) == 0, a == b, "{a} {b}");
            }
        }
    }

    #[test]
    fn stern_brocot_levels() {
        let d1 = Slope::stern_brocot(1);
        assert_eq!(d1.len(), 4);
        assert!(d1.contains(&Slope::new(-1, 1).unwrap()));
        let d2 = Slope::stern_brocot(2);
        assert!(d2.contains(&Slope::new(2, 1).unwrap()));
        assert!(d2.contains(&Slope::new(-1, 2).unwrap()));
        assert_eq!(d2.len(), 8);
    }

    #[test]
    fn free_aut_composition() {
        // (a, b) -> (a, ab) and its inverse (a, b) -> (a, Ab)
        let t = FreeAut::new(vec![w("a"), w("ab")]);
        let ti = FreeAut::new(vec![w("a"), w("Ab")]);
        assert_eq!(t.compose(&ti).unwrap(), FreeAut::identity(2));
        assert_eq!(t.abelianization(), vec![vec![1, 1], vec![0, 1]]);
    }
}
