//! Trace rewriting for rank-two free groups.
//!
//! Every trace function on `F₂ = ⟨a, b⟩` is a polynomial in
//! `x = tr a`, `y = tr b`, `z = tr ab`. The rewriting uses only
//! `tr 1 = 2`, cyclic invariance, `tr w = tr w⁻¹` and the product relation
//! `tr α · tr β = tr αβ + tr αβ⁻¹`, applied as
//!
//! * `tr(W g⁻¹) = tr g · tr W − tr(W g)` to remove inverse letters, and
//! * `tr(g U g V) = tr(gU) · tr(gV) − tr(U V⁻¹)` on positive words.
//!
//! Each rule strictly decreases (length, number of inverse letters), so the
//! recursion terminates. Results are memoised on a canonical representative
//! of the unoriented conjugacy class.

use crate::error::{Error, Result};
use crate::exact::MultiPoly;
use crate::words::{SurfaceSig, Word};
use num_bigint::BigInt;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

pub const TORUS_VARS: [&str; 3] = ["x", "y", "z"];

fn memo() -> &'static Mutex<HashMap<Word, MultiPoly>> {
    static MEMO: OnceLock<Mutex<HashMap<Word, MultiPoly>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

fn vars() -> Vec<String> {
    TORUS_VARS.iter().map(|s| s.to_string()).collect()
}

fn constant(c: i64) -> MultiPoly {
    MultiPoly::from_terms(vars(), [(vec![0, 0, 0], BigInt::from(c))])
}

fn coord(i: usize) -> MultiPoly {
    let mut e = vec![0, 0, 0];
    e[i] = 1;
    MultiPoly::from_terms(vars(), [(e, BigInt::from(1))])
}

/// Smallest rotation of the cyclically reduced word or of its inverse.
pub fn canonical_cyclic(w: &Word) -> Word {
    let w = w.cyclic_reduce();
    if w.is_empty() {
        return w;
    }
    let inv = w.inverse();
    (0..w.len())
        .flat_map(|k| [w.rotate(k), inv.rotate(k)])
        .min()
        .expect("nonempty")
}

/// The trace polynomial of `w` in `(x, y, z)` for a rank-two surface
/// (`Σ₁,₁` or `Σ₀,₃`).
pub fn trace_reduce(sig: &SurfaceSig, w: &Word) -> Result<MultiPoly> {
    if sig.rank() != 2 {
        return Err(Error::RankNotTwo(sig.rank()));
    }
    if w.rank_used() > 2 {
        return Err(Error::GeneratorOutOfRange(w.rank_used() - 1));
    }
    Ok(reduce(w))
}

/// Rank-two trace polynomial without a surface check; the word must only use
/// `a` and `b`.
pub(crate) fn reduce(w: &Word) -> MultiPoly {
    let c = canonical_cyclic(w);
    if let Some(p) = memo().lock().unwrap().get(&c) {
        return p.clone();
    }
    let p = compute(&c);
    memo().lock().unwrap().insert(c, p.clone());
    p
}

fn compute(w: &Word) -> MultiPoly {
    let letters = w.letters();
    let n = letters.len();
    if n == 0 {
        return constant(2);
    }
    if n == 1 {
        return coord(letters[0].gen);
    }
    let inverses = letters.iter().filter(|l| l.inv).count();
    if 2 * inverses > n {
        return compute(&w.inverse());
    }
    if let Some(i) = letters.iter().position(|l| l.inv) {
        // Rotate so the inverse letter is last: tr(W g⁻¹) = tr g tr W − tr(W g).
        let r = w.rotate(i + 1);
        let rl = r.letters();
        let g = rl[rl.len() - 1].inverse();
        let body = Word::free_reduce(rl[..rl.len() - 1].iter().copied());
        let with_g = Word::free_reduce(body.letters().iter().copied().chain([g]));
        return coord(g.gen) * reduce(&body) - reduce(&with_g);
    }
    // Positive word.
    let first = letters[0];
    if letters.iter().all(|&l| l == first) {
        // Chebyshev recursion tr gⁿ = tr g · tr gⁿ⁻¹ − tr gⁿ⁻².
        let g = Word::gen(first.gen);
        return coord(first.gen) * reduce(&g.pow(n as u32 - 1)) - reduce(&g.pow(n as u32 - 2));
    }
    if n == 2 {
        return coord(2);
    }
    // Some generator occurs twice; split at the pair of occurrences closest
    // to antipodal to keep both halves short.
    let mut best: Option<(usize, usize, usize)> = None;
    for i in 0..n {
        for j in i + 1..n {
            if letters[i] == letters[j] {
                let gap = j - i;
                let score = gap.min(n - gap);
                if best.map_or(true, |(_, _, s)| score > s) {
                    best = Some((i, j, score));
                }
            }
        }
    }
    let (i, j, _) = best.expect("positive word of length ≥ 3 over two letters repeats a letter");
    let r = w.rotate(i);
    let rl = r.letters();
    let j = j - i;
    let u = Word::free_reduce(rl[1..j].iter().copied());
    let v = Word::free_reduce(rl[j + 1..].iter().copied());
    let gu = Word::free_reduce(rl[..j].iter().copied());
    let gv = Word::free_reduce(rl[j..].iter().copied());
    reduce(&gu) * reduce(&gv) - reduce(&u.concat(&v.inverse()))
}
