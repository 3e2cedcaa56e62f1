//! Seeded random generators for exact test data.
//!
//! All randomness in the crate flows through a caller-supplied [`Rng`] so
//! that property sweeps and reports are reproducible from a seed.

use crate::exact::{GaussRat, Mat2, MultiPoly, Rat, Ring, Unimodular};
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rational with numerator in `[-bound, bound]` and denominator in `[1, bound]`.
pub fn rat<G: Rng + ?Sized>(g: &mut G, bound: i64) -> Rat {
    Rat::new(g.gen_range(-bound..=bound), g.gen_range(1..=bound.max(1)))
}

pub fn nonzero_rat<G: Rng + ?Sized>(g: &mut G, bound: i64) -> Rat {
    loop {
        let r = rat(g, bound);
        if !r.is_zero() {
            return r;
        }
    }
}

pub fn gauss<G: Rng + ?Sized>(g: &mut G, bound: i64) -> GaussRat {
    GaussRat::new(rat(g, bound), rat(g, bound))
}

fn elementary<R: Ring>(s: R, t: R, u: R, d: R, dinv: R) -> Mat2<R> {
    let up = Mat2::new(R::one(), s, R::zero(), R::one());
    let low = Mat2::new(R::one(), R::zero(), t, R::one());
    let up2 = Mat2::new(R::one(), u, R::zero(), R::one());
    &(&(&up * &low) * &up2) * &Mat2::diag(d, dinv)
}

/// Random determinant-one rational matrix, built as a product of elementary
/// matrices and a diagonal factor.
pub fn unimodular_rat<G: Rng + ?Sized>(g: &mut G) -> Unimodular<Rat> {
    let d = nonzero_rat(g, 3);
    let dinv = Rat::one() / d.clone();
    let m = elementary(rat(g, 4), rat(g, 4), rat(g, 4), d, dinv);
    Unimodular::new(m).expect("product of unimodular factors")
}

/// Random element of `SL(2, ℤ)` with small entries.
pub fn unimodular_int<G: Rng + ?Sized>(g: &mut G, bound: i64) -> Unimodular<Rat> {
    let r = |g: &mut G| Rat::int(g.gen_range(-bound..=bound));
    let sign = if g.gen_bool(0.5) { Rat::one() } else { -Rat::one() };
    let m = elementary(r(g), r(g), r(g), sign.clone(), sign);
    Unimodular::new(m).expect("product of unimodular factors")
}

pub fn unimodular_gauss<G: Rng + ?Sized>(g: &mut G) -> Unimodular<GaussRat> {
    let d = loop {
        let d = gauss(g, 2);
        if !d.is_zero() {
            break d;
        }
    };
    let dinv = GaussRat::one() / d.clone();
    let m = elementary(gauss(g, 3), gauss(g, 3), gauss(g, 3), d, dinv);
    Unimodular::new(m).expect("product of unimodular factors")
}

/// Random polynomial in `vars` with up to `nterms` terms of total degree at
/// most `max_degree` and integer coefficients in `[-coeff, coeff]`.
pub fn poly<G: Rng + ?Sized>(
    g: &mut G,
    vars: &[&str],
    max_degree: u32,
    nterms: usize,
    coeff: i64,
) -> MultiPoly {
    let mut terms = Vec::with_capacity(nterms);
    for _ in 0..nterms {
        let deg = g.gen_range(0..=max_degree);
        let mut e = vec![0u32; vars.len()];
        for _ in 0..deg {
            e[g.gen_range(0..vars.len())] += 1;
        }
        terms.push((e, BigInt::from(g.gen_range(-coeff..=coeff))));
    }
    MultiPoly::from_terms(vars.iter().map(|s| s.to_string()).collect(), terms)
}
