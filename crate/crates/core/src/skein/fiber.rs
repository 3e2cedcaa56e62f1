//! Relative character varieties of the four-holed sphere.
//!
//! With `π₁ Σ₀,₄ = ⟨c₁, c₂, c₃⟩`, `c₄ = (c₁c₂c₃)⁻¹`, the coordinates are
//! `x = tr c₁c₂`, `y = tr c₂c₃`, `z = tr c₁c₃` and `pᵢ = tr cᵢ`. Each fiber
//! over fixed boundary traces is a cubic surface
//!
//! `x² + y² + z² + s·xyz − Ax − By − Cz − D = 0`
//!
//! with `s = ±1` and `A, B, C, D` polynomials in the `pᵢ`. Both the sign and
//! the coefficients are recovered by exact fitting on sampled
//! representations, never taken from a table.

use crate::error::{Error, Result};
use crate::exact::{linalg, Mat2, MultiPoly, Rat, Ring, Unimodular};
use crate::sample;
use num_bigint::BigInt;
use rand::Rng;
use serde::Serialize;
use std::fmt;
use std::sync::OnceLock;

pub const FOUR_HOLED_VARS: [&str; 7] = ["x", "y", "z", "p1", "p2", "p3", "p4"];
pub const FIBER_PARAM_VARS: [&str; 7] = ["x", "y", "z", "A", "B", "C", "D"];
const BOUNDARY_VARS: [&str; 4] = ["p1", "p2", "p3", "p4"];

/// Images of `c₁, c₂, c₃` in `SL(2, ℚ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Triple(pub [Unimodular<Rat>; 3]);

impl Triple {
    /// `[x, y, z, p₁, p₂, p₃, p₄]`.
    pub fn coords(&self) -> [Rat; 7] {
        let [c1, c2, c3] = &self.0;
        let c12 = c1 * c2;
        [
            c12.trace(),
            (c2 * c3).trace(),
            (c1 * c3).trace(),
            c1.trace(),
            c2.trace(),
            c3.trace(),
            (&c12 * c3).trace(),
        ]
    }

    pub fn boundary(&self) -> [Rat; 4] {
        let c = self.coords();
        [c[3].clone(), c[4].clone(), c[5].clone(), c[6].clone()]
    }

    pub fn random_integral<G: Rng + ?Sized>(g: &mut G, bound: i64) -> Triple {
        Triple([
            sample::unimodular_int(g, bound),
            sample::unimodular_int(g, bound),
            sample::unimodular_int(g, bound),
        ])
    }

    pub fn random<G: Rng + ?Sized>(g: &mut G) -> Triple {
        Triple([
            sample::unimodular_rat(g),
            sample::unimodular_rat(g),
            sample::unimodular_rat(g),
        ])
    }

    /// Traceless triple used as a seed for the fiber over `p = 0`.
    pub fn traceless_seed() -> Triple {
        let m = |a, b, c, d| Unimodular::from_ints(a, b, c, d).expect("det 1");
        Triple([m(0, -1, 1, 0), m(1, 1, -2, -1), m(0, 1, -1, 0)])
    }

    /// Moves `c_slot` along the conic of matrices with the same trace and
    /// the same `tr c₁c₂c₃`, so all four boundary traces are preserved.
    /// `dir` picks the secant direction; `None` for the degenerate choices.
    pub fn conic_move(&self, slot: usize, dir: (Rat, Rat)) -> Option<Triple> {
        let [c1, c2, c3] = &self.0;
        let (c, m) = match slot {
            0 => (c1, c2 * c3),
            1 => (c2, c3 * c1),
            2 => (c3, c1 * c2),
            _ => return None,
        };
        let m = m.into_matrix();
        // Traceless directions D = d₁E₁ + d₂E₂ + d₃E₃ with tr(MD) = 0.
        let e = [
            Mat2::from_ints(1, 0, 0, -1),
            Mat2::from_ints(0, 1, 0, 0),
            Mat2::from_ints(0, 0, 1, 0),
        ];
        let r: Vec<Rat> = e.iter().map(|ei| (&m * ei).trace()).collect();
        let basis: [[Rat; 3]; 2] = if !r[0].is_zero() {
            [
                [-r[1].clone(), r[0].clone(), Rat::zero()],
                [-r[2].clone(), Rat::zero(), r[0].clone()],
            ]
        } else if !r[1].is_zero() {
            [
                [Rat::one(), Rat::zero(), Rat::zero()],
                [Rat::zero(), -r[2].clone(), r[1].clone()],
            ]
        } else {
            [
                [Rat::one(), Rat::zero(), Rat::zero()],
                [Rat::zero(), Rat::one(), Rat::zero()],
            ]
        };
        let d: Vec<Rat> = (0..3)
            .map(|i| &dir.0 * &basis[0][i] + &dir.1 * &basis[1][i])
            .collect();
        let dm = e[0]
            .scale(&d[0])
            .add(&e[1].scale(&d[1]))
            .add(&e[2].scale(&d[2]));
        let det = dm.det();
        let lin = (&c.matrix().adjugate() * &dm).trace();
        if det.is_zero() || lin.is_zero() {
            return None;
        }
        let t = -(lin / det);
        let moved = Unimodular::new(c.matrix().add(&dm.scale(&t))).ok()?;
        let mut out = self.0.clone();
        out[slot] = moved;
        Some(Triple(out))
    }

    /// Random point of the same fiber, reached by `steps` conic moves.
    pub fn wander<G: Rng + ?Sized>(&self, g: &mut G, steps: usize) -> Triple {
        let mut cur = self.clone();
        let mut done = 0;
        let mut slot = g.gen_range(0..3);
        while done < steps {
            let dir = (
                Rat::int(g.gen_range(-3..=3)),
                Rat::int(g.gen_range(-3..=3)),
            );
            if let Some(next) = cur.conic_move(slot, dir) {
                cur = next;
                done += 1;
                slot = (slot + g.gen_range(1..3)) % 3;
            }
        }
        cur
    }
}

/// The fiber equation over one boundary-trace vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberEquation {
    pub xyz_sign: Rat,
    #[serde(rename = "A")]
    pub a: Rat,
    #[serde(rename = "B")]
    pub b: Rat,
    #[serde(rename = "C")]
    pub c: Rat,
    #[serde(rename = "D")]
    pub d: Rat,
}

impl FiberEquation {
    /// Value of `x² + y² + z² + s·xyz − Ax − By − Cz − D`.
    pub fn eval(&self, x: &Rat, y: &Rat, z: &Rat) -> Rat {
        x * x + y * y + z * z + &(&self.xyz_sign * &(x * y)) * z
            - &self.a * x
            - &self.b * y
            - &self.c * z
            - self.d.clone()
    }

    /// Residual of the identity representation, where `x = y = z = 2`.
    pub fn identity_residual(&self) -> Rat {
        let two = Rat::int(2);
        self.eval(&two, &two, &two)
    }
}

impl fmt::Display for FiberEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let term = |c: &Rat, m: &str| {
            if c.is_zero() {
                String::new()
            } else if c.is_negative() {
                format!(" + {}{m}", (-c.clone()).compact())
            } else {
                format!(" - {}{m}", c.compact())
            }
        };
        let s = &self.xyz_sign;
        let xyz = if s.is_negative() { format!(" - {}xyz", (-s.clone()).compact()) } else { format!(" + {}xyz", s.compact()) };
        write!(
            f,
            "x^2 + y^2 + z^2{}{}{}{}{} = 0",
            xyz.replace(" 1xyz", " xyz"),
            term(&self.a, "x"),
            term(&self.b, "y"),
            term(&self.c, "z"),
            term(&self.d, "")
        )
    }
}

/// Symbolic fiber polynomial in `(x, y, z, A, B, C, D)` for a given sign.
pub fn fiber_poly_symbolic(xyz_sign: i64) -> MultiPoly {
    let src = format!("x^2 + y^2 + z^2 + ({xyz_sign})*x*y*z - A*x - B*y - C*z - D");
    MultiPoly::parse(&src, &FIBER_PARAM_VARS).expect("static polynomial")
}

/// The coefficients `A, B, C, D` as polynomials in `p₁, …, p₄`, together with
/// the `xyz` sign, valid on every fiber.
#[derive(Clone, Debug, PartialEq)]
pub struct FiberLaw {
    pub xyz_sign: i64,
    pub a: MultiPoly,
    pub b: MultiPoly,
    pub c: MultiPoly,
    pub d: MultiPoly,
}

impl FiberLaw {
    pub fn at(&self, p: &[Rat; 4]) -> FiberEquation {
        let ev = |f: &MultiPoly| {
            f.eval_with(|v| {
                BOUNDARY_VARS
                    .iter()
                    .position(|b| *b == v)
                    .map(|i| p[i].clone())
            })
            .expect("boundary variables only")
        };
        FiberEquation {
            xyz_sign: Rat::int(self.xyz_sign),
            a: ev(&self.a),
            b: ev(&self.b),
            c: ev(&self.c),
            d: ev(&self.d),
        }
    }

    /// The fiber polynomial in `(x, y, z, p₁, …, p₄)`.
    pub fn poly(&self) -> MultiPoly {
        let sym = fiber_poly_symbolic(self.xyz_sign);
        sym.substitute(&[("A", &self.a), ("B", &self.b), ("C", &self.c), ("D", &self.d)])
            .aligned_to(&FOUR_HOLED_VARS)
            .expect("fiber variables")
    }
}

fn exponents(nvars: usize, max_degree: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..nvars {
        out = out
            .into_iter()
            .flat_map(|e: Vec<u32>| {
                let used: u32 = e.iter().sum();
                (0..=max_degree - used).map(move |k| {
                    let mut f = e.clone();
                    f.push(k);
                    f
                })
            })
            .collect();
    }
    out.sort_by_key(|e| std::cmp::Reverse(crate::exact::Monomial(e.clone())));
    out
}

/// Fits the universal fiber law from integral sample triples and certifies
/// it exactly on fresh rational triples.
///
/// All sample data is integral, so the system is solved modulo a large
/// prime and lifted; the exact check afterwards is what makes the result
/// trustworthy.
pub fn fit_fiber_law<G: Rng + ?Sized>(g: &mut G) -> Result<FiberLaw> {
    let lin = exponents(4, 2);
    let quart = exponents(4, 4);
    let unknowns = 1 + 3 * lin.len() + quart.len();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    let int = |r: &Rat| r.to_integer().expect("integral sample");
    while rows.len() < unknowns + 40 {
        let t = Triple::random_integral(g, 2);
        let c: Vec<BigInt> = t.coords().iter().map(int).collect();
        let (x, y, z, p) = (&c[0], &c[1], &c[2], &c[3..]);
        let mono = |e: &[u32]| -> BigInt {
            e.iter()
                .zip(p)
                .fold(BigInt::from(1), |acc, (&k, v)| acc * num_traits::pow(v.clone(), k as usize))
        };
        let mut row = Vec::with_capacity(unknowns);
        row.push(x * y * z);
        for v in [x, y, z] {
            row.extend(lin.iter().map(|e| -(v * mono(e))));
        }
        row.extend(quart.iter().map(|e| -mono(e)));
        rows.push(row);
        rhs.push(-(x * x + y * y + z * z));
    }
    let sol = linalg::solve_integral_mod_p(&rows, &rhs)
        .map_err(|e| Error::FitFailed(e.to_string()))?;
    let sign = i64::try_from(&sol[0]).unwrap_or(0);
    if sign.abs() != 1 {
        return Err(Error::FitFailed(format!("xyz coefficient {} is not a sign", sol[0])));
    }
    let vars: Vec<String> = BOUNDARY_VARS.iter().map(|s| s.to_string()).collect();
    let build = |exps: &[Vec<u32>], vals: &[BigInt]| {
        MultiPoly::from_terms(vars.clone(), exps.iter().cloned().zip(vals.iter().cloned()))
    };
    let n = lin.len();
    let law = FiberLaw {
        xyz_sign: sign,
        a: build(&lin, &sol[1..1 + n]),
        b: build(&lin, &sol[1 + n..1 + 2 * n]),
        c: build(&lin, &sol[1 + 2 * n..1 + 3 * n]),
        d: build(&quart, &sol[1 + 3 * n..]),
    };
    for _ in 0..20 {
        let t = Triple::random(g);
        let [x, y, z, p1, p2, p3, p4] = t.coords();
        if !law.at(&[p1, p2, p3, p4]).eval(&x, &y, &z).is_zero() {
            return Err(Error::FitFailed("fitted law fails on a fresh triple".into()));
        }
    }
    Ok(law)
}

/// The universal law, fitted once per process from a fixed seed.
pub fn fiber_law() -> &'static FiberLaw {
    static LAW: OnceLock<FiberLaw> = OnceLock::new();
    LAW.get_or_init(|| {
        fit_fiber_law(&mut sample::rng(0x5eed_f1be)).expect("fiber law fit on generic samples")
    })
}

/// Fiber equation over the boundary traces `p`.
pub fn fiber_coefficients(p: &[Rat; 4]) -> FiberEquation {
    fiber_law().at(p)
}

/// Fits the five unknowns `(s, A, B, C, D)` on the single fiber through
/// `seed`, from points reached by conic moves, and checks the result on
/// twenty further points of that fiber.
pub fn fit_fiber_at<G: Rng + ?Sized>(seed: &Triple, g: &mut G) -> Result<FiberEquation> {
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    let mut seen = Vec::new();
    let mut attempts = 0;
    while rows.len() < 8 {
        attempts += 1;
        if attempts > 200 {
            return Err(Error::FitFailed("fiber through the seed is too degenerate".into()));
        }
        let t = seed.wander(g, 1 + rows.len() % 2);
        let [x, y, z, ..] = t.coords();
        if seen.contains(&(x.clone(), y.clone(), z.clone())) {
            continue;
        }
        seen.push((x.clone(), y.clone(), z.clone()));
        rows.push(vec![&(&x * &y) * &z, -x.clone(), -y.clone(), -z.clone(), -Rat::one()]);
        rhs.push(-(&x * &x + &y * &y + &z * &z));
    }
    let sol = linalg::solve(&rows, &rhs).map_err(|e| Error::FitFailed(e.to_string()))?;
    let eq = FiberEquation {
        xyz_sign: sol[0].clone(),
        a: sol[1].clone(),
        b: sol[2].clone(),
        c: sol[3].clone(),
        d: sol[4].clone(),
    };
    for _ in 0..20 {
        let t = seed.wander(g, 2);
        let [x, y, z, ..] = t.coords();
        if !eq.eval(&x, &y, &z).is_zero() {
            return Err(Error::FitFailed("fiber fit fails on a fresh point".into()));
        }
    }
    Ok(eq)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conic_moves_preserve_boundary() {
        let mut g = sample::rng(3);
        let t = Triple::random(&mut g);
        for slot in 0..3 {
            let moved = t.conic_move(slot, (Rat::int(1), Rat::int(2))).unwrap();
            assert_eq!(moved.boundary(), t.boundary());
            assert_ne!(moved, t);
        }
    }

    #[test]
    fn traceless_seed_has_zero_boundary() {
        let t = Triple::traceless_seed();
        assert!(t.boundary().iter().all(|p| p.is_zero()));
    }

    #[test]
    fn exponent_lists() {
        assert_eq!(exponents(4, 2).len(), 15);
        assert_eq!(exponents(4, 4).len(), 70);
    }
}
