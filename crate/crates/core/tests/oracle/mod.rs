//! Independent reference computations for the integration tests: plain
//! 2×2 and 4×4 arrays, word evaluation from strings, intersection numbers.

#![allow(dead_code)]

use skeinlab::exact::{Ring, Unimodular};

pub type M2<R> = [[R; 2]; 2];
pub type M4<R> = [[R; 4]; 4];

pub fn id2<R: Ring>() -> M2<R> {
    [[R::one(), R::zero()], [R::zero(), R::one()]]
}

pub fn mul2<R: Ring>(x: &M2<R>, y: &M2<R>) -> M2<R> {
    let e = |i: usize, j: usize| x[i][0].clone() * y[0][j].clone() + x[i][1].clone() * y[1][j].clone();
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

/// Inverse of a determinant-one matrix.
pub fn inv2<R: Ring>(x: &M2<R>) -> M2<R> {
    [
        [x[1][1].clone(), -x[0][1].clone()],
        [-x[1][0].clone(), x[0][0].clone()],
    ]
}

pub fn tr2<R: Ring>(x: &M2<R>) -> R {
    x[0][0].clone() + x[1][1].clone()
}

pub fn det2<R: Ring>(x: &M2<R>) -> R {
    x[0][0].clone() * x[1][1].clone() - x[0][1].clone() * x[1][0].clone()
}

pub fn scale2<R: Ring>(k: &R, x: &M2<R>) -> M2<R> {
    let s = |i: usize, j: usize| k.clone() * x[i][j].clone();
    [[s(0, 0), s(0, 1)], [s(1, 0), s(1, 1)]]
}

pub fn sub2<R: Ring>(x: &M2<R>, y: &M2<R>) -> M2<R> {
    let s = |i: usize, j: usize| x[i][j].clone() - y[i][j].clone();
    [[s(0, 0), s(0, 1)], [s(1, 0), s(1, 1)]]
}

pub fn neg2<R: Ring>(x: &M2<R>) -> M2<R> {
    let s = |i: usize, j: usize| -x[i][j].clone();
    [[s(0, 0), s(0, 1)], [s(1, 0), s(1, 1)]]
}

pub fn from_um<R: Ring>(u: &Unimodular<R>) -> M2<R> {
    let m = u.matrix();
    [[m.a.clone(), m.b.clone()], [m.c.clone(), m.d.clone()]]
}

pub fn prod2<'a, R: Ring + 'a>(ms: impl IntoIterator<Item = &'a M2<R>>) -> M2<R> {
    ms.into_iter().fold(id2(), |acc, m| mul2(&acc, m))
}

/// Evaluates a word written with `a, b, …` for generators and capitals for
/// inverses.
pub fn eval_word<R: Ring>(w: &str, gens: &[M2<R>]) -> M2<R> {
    w.chars().fold(id2(), |acc, ch| {
        let i = (ch.to_ascii_lowercase() as u8 - b'a') as usize;
        let g = if ch.is_ascii_uppercase() {
            inv2(&gens[i])
        } else {
            gens[i].clone()
        };
        mul2(&acc, &g)
    })
}

/// All freely reduced words over `a, A, b, B` of length at most `n`,
/// including the empty word.
pub fn reduced_word_strings(n: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut layer = vec![String::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for w in &layer {
            for c in ['a', 'A', 'b', 'B'] {
                let cancels = w.chars().last().is_some_and(|l| l != c && l.eq_ignore_ascii_case(&c));
                if !cancels {
                    next.push(format!("{w}{c}"));
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

pub fn mul4<R: Ring>(x: &M4<R>, y: &M4<R>) -> M4<R> {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| (0..4).fold(R::zero(), |acc, k| acc + x[i][k].clone() * y[k][j].clone()))
    })
}

pub fn tr4<R: Ring>(x: &M4<R>) -> R {
    (0..4).fold(R::zero(), |acc, i| acc + x[i][i].clone())
}

/// `tr M, tr M², tr M³, tr M⁴`, which determine the characteristic
/// polynomial in characteristic zero.
pub fn power_traces<R: Ring>(x: &M4<R>) -> Vec<R> {
    let mut p = x.clone();
    let mut out = vec![tr4(&p)];
    for _ in 1..4 {
        p = mul4(&p, x);
        out.push(tr4(&p));
    }
    out
}

/// `|p s − q r|` for slopes `p/q` and `r/s`.
pub fn intersection(p: i64, q: i64, r: i64, s: i64) -> i64 {
    (p * s - q * r).abs()
}

/// Boundary loop traces of the hyperelliptic generators `A₁ … A_{r−1}`.
pub fn boundary_traces<R: Ring>(a: &[M2<R>], n: u8) -> Vec<R> {
    let odd = prod2(a.iter().step_by(2));
    let even = prod2(a.iter().skip(1).step_by(2));
    let all_inv = inv2(&prod2(a.iter()));
    match n {
        1 => vec![tr2(&mul2(&mul2(&odd, &all_inv), &even))],
        _ => vec![tr2(&odd), tr2(&mul2(&all_inv, &even))],
    }
}
