//! Seeded property batteries with a machine-readable report.
//!
//! Every suite is deterministic in `(seed, scale)`; `scale` multiplies the
//! number of random cases. The wall time is kept out of the JSON so that
//! equal seeds give byte-identical reports.

use crate::actions::{
    self, coordinate_signs, is_relative_automorphism, sign_action, vieta, word_map, CoordMap,
    CoordSystem, SignVector, TorusGen,
};
use crate::error::{Error, Result};
use crate::exact::{GaussRat, MultiPoly, Rat, Ring, Unimodular};
use crate::lamination::{self, laurent_valuate, valuate, Lamination, Val};
use crate::sample;
use crate::skein::{
    fiber::{fiber_poly_symbolic, FOUR_HOLED_VARS}, fiber_coefficients, fiber_law, fit_fiber_at, kappa, multicurve_decompose,
    trace_reduce, BasisKey, MatrixRep, Triple, TORUS_VARS,
};
use crate::sphere::central::{boundary_preserved_on, signed_tuple};
use crate::sphere::clifford::check_anticommutation;
use crate::sphere::point::quad;
use crate::sphere::{
    boundary_monodromy, boundary_preserved_by_signs, braid_on_rep, central_to_sphere, char_poly,
    coxeter_product, moduli_equal, pairing, reflect, rep_to_sphere,
    sphere_to_rep, ModuliCmp, SphereConfig, SpherePoint,
};
use crate::words::{FreeAut, Letter, Slope, SurfaceSig, Word};
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::time::Instant;

/// Suite names accepted by [`run_suite`].
pub const SUITES: [&str; 11] = [
    "skein-oracle",
    "decomposition",
    "actions",
    "valuation-axioms",
    "domination",
    "fiber",
    "braid",
    "coxeter",
    "fan-whang",
    "signs",
    "all",
];

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    pub check: String,
    pub input: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteCount {
    pub suite: String,
    pub cases: u64,
    pub failures: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub suite: String,
    pub seed: u64,
    pub scale: u64,
    pub cases: u64,
    pub failures: Vec<Failure>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub breakdown: Vec<SuiteCount>,
    #[serde(skip)]
    pub wall_time_ms: u128,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Deterministic JSON (no wall time).
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Runs one suite, or every suite for `"all"`.
pub fn run_suite(name: &str, seed: u64, scale: u64) -> Result<RunReport> {
    let start = Instant::now();
    let scale = scale.max(1);
    let mut report = if name == "all" {
        let mut all = RunReport {
            suite: "all".into(),
            seed,
            scale,
            cases: 0,
            failures: Vec::new(),
            breakdown: Vec::new(),
            wall_time_ms: 0,
        };
        for s in SUITES.iter().filter(|s| **s != "all") {
            let r = run_one(s, seed, scale)?;
            all.cases += r.cases;
            all.breakdown.push(SuiteCount {
                suite: s.to_string(),
                cases: r.cases,
                failures: r.failures.len(),
            });
            all.failures.extend(r.failures.into_iter().map(|mut f| {
                f.check = format!("{s}/{}", f.check);
                f
            }));
        }
        all
    } else {
        run_one(name, seed, scale)?
    };
    report.failures.sort();
    report.wall_time_ms = start.elapsed().as_millis();
    Ok(report)
}

fn run_one(name: &str, seed: u64, scale: u64) -> Result<RunReport> {
    let mut run = Run {
        g: sample::rng(seed),
        scale: scale as usize,
        cases: 0,
        failures: Vec::new(),
    };
    match name {
        "skein-oracle" => skein_oracle(&mut run),
        "decomposition" => decomposition(&mut run),
        "actions" => actions_suite(&mut run),
        "valuation-axioms" => valuation_axioms(&mut run),
        "domination" => domination(&mut run),
        "fiber" => fiber(&mut run),
        "braid" => braid(&mut run),
        "coxeter" => coxeter(&mut run),
        "fan-whang" => fan_whang(&mut run),
        "signs" => signs(&mut run),
        _ => return Err(Error::UnknownSuite(name.to_string())),
    }
    Ok(RunReport {
        suite: name.to_string(),
        seed,
        scale,
        cases: run.cases,
        failures: run.failures,
        breakdown: Vec::new(),
        wall_time_ms: 0,
    })
}

struct Run {
    g: ChaCha8Rng,
    scale: usize,
    cases: u64,
    failures: Vec<Failure>,
}

impl Run {
    fn n(&self, base: usize) -> usize {
        base * self.scale
    }

    /// Records one case; errors count as failures.
    fn check(&mut self, check: &str, input: impl FnOnce() -> String, outcome: Result<bool>) {
        self.cases += 1;
        let detail = match outcome {
            Ok(true) => return,
            Ok(false) => "property does not hold".to_string(),
            Err(e) => e.to_string(),
        };
        self.failures.push(Failure {
            check: check.to_string(),
            input: input(),
            detail,
        });
    }
}

/// All freely reduced words of length at most `n` in two generators.
pub fn reduced_words(n: usize) -> Vec<Word> {
    let letters = [
        Letter::new(0, false),
        Letter::new(0, true),
        Letter::new(1, false),
        Letter::new(1, true),
    ];
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..n {
        let mut next = Vec::new();
        for w in &layer {
            for l in letters {
                if w.letters().last() == Some(&l.inverse()) {
                    continue;
                }
                let mut v = w.letters().to_vec();
                v.push(l);
                next.push(Word::free_reduce(v));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn eval_torus(f: &MultiPoly, c: &[Rat; 3]) -> Result<Rat> {
    f.eval_with(|v| TORUS_VARS.iter().position(|t| *t == v).map(|i| c[i].clone()))
}

fn skein_oracle(run: &mut Run) {
    let sig = SurfaceSig::ONCE_PUNCTURED_TORUS;
    let reps: Vec<MatrixRep<Rat>> = (0..run.n(5))
        .map(|_| {
            let imgs = vec![sample::unimodular_rat(&mut run.g), sample::unimodular_rat(&mut run.g)];
            MatrixRep::new(sig, imgs).expect("rank 2")
        })
        .collect();
    let coords: Vec<[Rat; 3]> = reps.iter().map(|r| r.torus_coords().expect("rank 2")).collect();
    for w in reduced_words(6) {
        let f = trace_reduce(&sig, &w);
        for (rep, c) in reps.iter().zip(&coords) {
            let outcome = f.clone().and_then(|f| Ok(eval_torus(&f, c)? == rep.evaluate_trace(&w)?));
            run.check("trace-oracle", || format!("word {w}, images {:?}", rep.images()), outcome);
        }
    }
    let comm: Word = "abAB".parse().expect("static word");
    let outcome = trace_reduce(&sig, &comm).map(|k| k == kappa());
    run.check("commutator-identity", || "abAB".into(), outcome);
    run.check(
        "kappa-form",
        || "x^2+y^2+z^2-xyz-2".into(),
        Ok(kappa() == MultiPoly::parse("x^2 + y^2 + z^2 - x*y*z - 2", &TORUS_VARS).unwrap()),
    );
}

fn decomposition(run: &mut Run) {
    for _ in 0..run.n(100) {
        let f = sample::poly(&mut run.g, &TORUS_VARS, 5, 6, 5);
        let outcome = multicurve_decompose(&f).map(|d| d.recombine() == f);
        run.check("round-trip", || f.to_string(), outcome);
    }
    let p = |s: &str| MultiPoly::parse(s, &TORUS_VARS).unwrap();
    let s = |a, b| Some(Slope::new(a, b).unwrap());
    let worked: [(&str, Vec<(Option<Slope>, u32, u32, i64)>); 3] = [
        ("x^2 + y^2 + z^2 - x*y*z - 2", vec![(None, 0, 1, 1)]),
        ("x*y", vec![(s(1, 1), 1, 0, 1), (s(-1, 1), 1, 0, 1)]),
        (
            "x*y*z",
            vec![
                (s(1, 0), 2, 0, 1),
                (s(0, 1), 2, 0, 1),
                (s(1, 1), 2, 0, 1),
                (None, 0, 1, -1),
                (None, 0, 0, -2),
            ],
        ),
    ];
    for (src, want) in worked {
        let outcome = multicurve_decompose(&p(src)).map(|d| {
            d.terms.len() == want.len()
                && want
                    .iter()
                    .all(|&(sl, k, m, c)| d.coeff(&BasisKey::new(sl, k, m)) == BigInt::from(c))
        });
        run.check("worked-example", || src.to_string(), outcome);
    }
}

fn automorphism_case(run: &mut Run, check: &str, m: &CoordMap, expect: bool) {
    let holds = is_relative_automorphism(m).holds();
    run.check(check, || m.to_string(), Ok(holds == expect));
}

fn actions_suite(run: &mut Run) {
    let torus = CoordSystem::Torus;
    for g in TorusGen::ALL {
        automorphism_case(run, "generator", &g.coord_map(), true);
        let (phi, inv) = g.free_aut();
        let outcome = actions::induced_map(&phi, &inv).map(|m| m == g.coord_map());
        run.check("generator-matches-induced", || g.to_string(), outcome);
    }
    for axis in ['x', 'y', 'z'] {
        let m = vieta(torus, axis).expect("axis");
        automorphism_case(run, "vieta", &m, true);
        run.check("vieta-involutive", || m.to_string(), m.compose(&m).map(|c| c.is_identity()));
    }
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    for p in perms {
        let images = p.iter().map(|&i| MultiPoly::var(TORUS_VARS[i])).collect();
        let m = CoordMap::new(torus, images).expect("three images");
        let inv_images = (0..3)
            .map(|j| MultiPoly::var(TORUS_VARS[p.iter().position(|&i| i == j).unwrap()]))
            .collect();
        let m = m.with_inverse(inv_images).expect("three images");
        automorphism_case(run, "permutation", &m, true);
    }
    for e in SignVector::all(2) {
        let m = sign_action(torus, &e).expect("rank 2");
        automorphism_case(run, "generator-sign", &m, true);
    }
    for bits in 0..8u8 {
        let eps = [0, 1, 2].map(|i| if bits >> i & 1 == 1 { -1 } else { 1 });
        let m = coordinate_signs(eps);
        let expect = eps.iter().product::<i8>() == 1;
        automorphism_case(run, "coordinate-sign", &m, expect);
    }
    let hyper = FreeAut::new(vec!["A".parse().unwrap(), "B".parse().unwrap()]);
    let outcome = actions::induced_map(&hyper, &hyper).map(|m| m.is_identity());
    run.check("hyperelliptic-trivial", || "(a,b) -> (A,B)".into(), outcome);

    for _ in 0..run.n(20) {
        let len = run.g.gen_range(1..=5);
        let gens: Vec<TorusGen> = (0..len).map(|_| TorusGen::ALL[run.g.gen_range(0..4)]).collect();
        let label = || gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(",");
        let m = word_map(&gens);
        automorphism_case(run, "word", &m, true);
        let outcome = actions::slope_equivariance(&m, 3).map(|_| true);
        run.check("slope-equivariance", label, outcome);
        let e = SignVector::all(2)[run.g.gen_range(0..4)].clone();
        let outcome = actions::conjugate_sign(&gens, &e).map(|_| true);
        run.check("conjugated-sign", || format!("{} / {e}", label()), outcome);
    }

    for system in [CoordSystem::FourHoled, CoordSystem::FourHoledSymbolic] {
        for axis in ['x', 'y', 'z'] {
            let m = vieta(system, axis).expect("axis");
            automorphism_case(run, "four-holed-vieta", &m, true);
        }
    }
    // c₄ picks up ε₁ε₂ε₃, so only the trivial vector fixes every p_i
    for e in SignVector::all(3) {
        let m = sign_action(CoordSystem::FourHoled, &e).expect("rank 3");
        let trivial = e.0.iter().all(|&s| s == 1);
        automorphism_case(run, "four-holed-sign", &m, trivial);
    }
}

fn axiom_laminations() -> Vec<Lamination> {
    ["0/1:1", "1/0:2", "1/1:1/2", "-2/3:3", "3/5:1"]
        .iter()
        .map(|s| s.parse().expect("static lamination"))
        .collect()
}

fn valuation_axioms(run: &mut Run) {
    for lam in axiom_laminations() {
        for _ in 0..run.n(200) {
            let f = sample::poly(&mut run.g, &TORUS_VARS, 4, 5, 6);
            let g = sample::poly(&mut run.g, &TORUS_VARS, 4, 5, 6);
            let input = || format!("λ = {lam}, f = {f}, g = {g}");
            let (vf, vg) = match (valuate(&lam, &f), valuate(&lam, &g)) {
                (Ok(a), Ok(b)) => (a, b),
                (Err(e), _) | (_, Err(e)) => {
                    run.check("valuate", input, Err(e));
                    continue;
                }
            };
            run.check("zero-iff-neg-inf", input, Ok((vf == Val::NegInf) == f.is_zero()));
            let outcome = valuate(&lam, &(f.clone() * g.clone())).map(|v| v == vf.add(&vg));
            run.check("multiplicative", input, outcome);
            let outcome = valuate(&lam, &(f.clone() + g.clone())).map(|v| {
                let m = vf.clone().max(vg.clone());
                v <= m && (vf == vg || v == m)
            });
            run.check("ultrametric", input, outcome);
        }
        let k = kappa();
        for _ in 0..run.n(10) {
            let deg = run.g.gen_range(0..=3u32);
            let c: Vec<i64> = (0..=deg).map(|_| run.g.gen_range(-5..=5)).collect();
            let mut r = MultiPoly::zero_in(&TORUS_VARS);
            for (i, ci) in c.iter().enumerate() {
                r = r + k.pow(i as u32).scale(&BigInt::from(*ci));
            }
            let expect = if r.is_zero() { Val::NegInf } else { Val::int(0) };
            let outcome = valuate(&lam, &r).map(|v| v == expect);
            run.check("boundary-ring-zero", || format!("λ = {lam}, r = {r}"), outcome);
        }
    }
}

fn domination(run: &mut Run) {
    let want = ["0/1:1", "0/1:2", "0", "-1/1:1"];
    for ((name, rep), w) in lamination::shipped_fixtures().into_iter().zip(want) {
        let samples = run.n(100);
        let outcome = lamination::dominate(&rep, 3, samples, &mut run.g)
            .map(|(lam, _)| lam == w.parse::<Lamination>().expect("static lamination"));
        run.check("dominate", || format!("fixture {name}"), outcome);
        for _ in 0..run.n(10) {
            let f = sample::poly(&mut run.g, &TORUS_VARS, 3, 4, 4);
            let h = sample::poly(&mut run.g, &TORUS_VARS, 3, 4, 4);
            let outcome = (|| -> Result<bool> {
                let lhs = laurent_valuate(&rep, &(f.clone() * h.clone()))?;
                Ok(lhs == laurent_valuate(&rep, &f)?.add(&laurent_valuate(&rep, &h)?))
            })();
            run.check("laurent-multiplicative", || format!("{name}: f = {f}, g = {h}"), outcome);
        }
    }
}

fn fiber(run: &mut Run) {
    let law = fiber_law();
    let two = Rat::int(2);
    let id = fiber_coefficients(&[two.clone(), two.clone(), two.clone(), two]);
    run.check("identity-on-fiber", || "p = (2,2,2,2)".into(), Ok(id.identity_residual().is_zero()));
    for _ in 0..run.n(5) {
        let seed = Triple::random(&mut run.g);
        let p = seed.boundary();
        let eq = fiber_coefficients(&p);
        for _ in 0..20 {
            let t = seed.wander(&mut run.g, 2);
            let [x, y, z, ..] = t.coords();
            run.check("fiber-vanishes", || format!("p = {p:?}, x = {x}, y = {y}, z = {z}"), Ok(eq.eval(&x, &y, &z).is_zero()));
        }
        let outcome = fit_fiber_at(&seed, &mut run.g).map(|fit| fit == eq);
        run.check("fixed-fiber-fit", || format!("p = {p:?}"), outcome);
    }
    for _ in 0..run.n(20) {
        let t = Triple::random(&mut run.g);
        let c = t.coords();
        let outcome = law.poly().eval_with(|v| {
            FOUR_HOLED_VARS.iter().position(|n| *n == v).map(|i| c[i].clone())
        });
        run.check("universal-law", || format!("{c:?}"), outcome.map(|r| r.is_zero()));
    }
    let sym = fiber_poly_symbolic(law.xyz_sign);
    for axis in ['x', 'y', 'z'] {
        let m = vieta(CoordSystem::FourHoledSymbolic, axis).expect("axis");
        run.check("vieta-preserves-fiber", || axis.to_string(), Ok(m.apply(&sym) == sym));
    }
}

fn random_config(g: &mut ChaCha8Rng, r: usize) -> SphereConfig {
    let pts = (0..r).map(|_| sample::unimodular_gauss(g)).collect();
    SphereConfig::new(pts).expect("nonempty")
}

fn random_tuple(g: &mut ChaCha8Rng, r: usize) -> Vec<SpherePoint> {
    (0..r - 1).map(|_| sample::unimodular_gauss(g)).collect()
}

fn braid(run: &mut Run) {
    for r in 3..=6 {
        for _ in 0..run.n(20) {
            let c = random_config(&mut run.g, r);
            let input = || c.to_json().to_string();
            if r >= 4 {
                let g = sample::unimodular_gauss(&mut run.g);
                for d in [c.right_translate(&g), c.negate()] {
                    let outcome = moduli_equal(&c, &d).map(|m| m == ModuliCmp::Equal);
                    run.check("moduli-invariance", input, outcome);
                }
            }
            for i in 1..r {
                let outcome = c.braid_word(&[i as i64, -(i as i64)]).map(|d| d == c);
                run.check("inverse", input, outcome);
                if i + 1 < r {
                    let (a, b) = (i as i64, i as i64 + 1);
                    let outcome = (|| Ok(c.braid_word(&[a, b, a])? == c.braid_word(&[b, a, b])?))();
                    run.check("braid-relation", input, outcome);
                }
                for j in i + 2..r {
                    let (a, b) = (i as i64, j as i64);
                    let outcome = (|| Ok(c.braid_word(&[a, b])? == c.braid_word(&[b, a])?))();
                    run.check("far-commutation", input, outcome);
                }
            }
        }
    }
    for _ in 0..run.n(100) {
        let u = sample::unimodular_gauss(&mut run.g);
        let v = sample::unimodular_gauss(&mut run.g);
        let input = || format!("u = {u:?}, v = {v:?}");
        let s = reflect(&u, &v);
        run.check("reflect-involutive", input, Ok(reflect(&u, &s) == v));
        let q = |m: &SpherePoint| quad(&crate::sphere::point::mat_to_vec(m.matrix()));
        run.check("reflect-quadric", input, Ok(q(&s) == q(&v)));
        let p = pairing(u.matrix(), v.matrix());
        run.check("reflect-pairing", input, Ok(pairing(u.matrix(), s.matrix()) == p));
        let uvu = &(&u * &v.inverse()) * &u;
        run.check("reflect-identity", input, Ok(s == uvu));
    }
}

fn coxeter(run: &mut Run) {
    run.check("gamma-anticommutation", || "gammas".into(), Ok(check_anticommutation()));
    for r in 3..=5 {
        for _ in 0..run.n(20) {
            let c = random_config(&mut run.g, r);
            let cp = char_poly(&coxeter_product(&c));
            for i in 1..r {
                let outcome = c.braid_act(i).map(|d| char_poly(&coxeter_product(&d)) == cp);
                run.check("coxeter-invariant", || format!("σ{i} on {}", c.to_json()), outcome);
            }
        }
    }
}

fn fan_whang(run: &mut Run) {
    let half = GaussRat::real(Rat::half());
    for r in 3..=6 {
        let n = if r % 2 == 1 { 1 } else { 2 };
        for _ in 0..run.n(20) {
            let a = random_tuple(&mut run.g, r);
            let input = || format!("{a:?}");
            let c = rep_to_sphere(&a);
            run.check("roundtrip", input, Ok(sphere_to_rep(&c) == a));
            let gram = c.gram();
            let ok = (0..r - 1).all(|j| gram[j][j + 1] == half.clone() * a[j].trace());
            run.check("gram-entry", input, Ok(ok));
            let renormalized = c.right_translate(&sample::unimodular_gauss(&mut run.g)).normalize();
            run.check("normalize", input, Ok(renormalized == c));
            let base = boundary_monodromy(&a, n);
            for i in 1..r {
                let outcome = (|| Ok(boundary_monodromy(&braid_on_rep(&a, i)?, n)? == base.clone()?))();
                run.check("boundary-invariant", input, outcome);
                let outcome = (|| {
                    let direct = c.braid_act(i)?.normalize();
                    Ok(direct.points() == rep_to_sphere(&braid_on_rep(&a, i)?).points())
                })();
                run.check("braid-compatible", input, outcome);
            }
        }
    }
}

fn sign_vectors(len: usize) -> Vec<Vec<i8>> {
    (0..1u32 << len)
        .map(|bits| (0..len).map(|i| if bits >> i & 1 == 1 { -1 } else { 1 }).collect())
        .collect()
}

fn signs(run: &mut Run) {
    for r in 3..=6 {
        for _ in 0..run.n(20) {
            let a = random_tuple(&mut run.g, r);
            let eps: Vec<i8> = (0..r - 1).map(|_| if run.g.gen_bool(0.5) { -1 } else { 1 }).collect();
            let outcome = (|| -> Result<bool> {
                let twisted = rep_to_sphere(&signed_tuple(&eps, &a)?);
                let sphere_signs = central_to_sphere(&eps);
                let expect: Vec<SpherePoint> = rep_to_sphere(&a)
                    .points()
                    .iter()
                    .zip(&sphere_signs)
                    .map(|(u, &s)| if s < 0 { u.neg() } else { u.clone() })
                    .collect();
                Ok(twisted.points() == expect.as_slice())
            })();
            run.check("central-equivariance", || format!("a = {eps:?}, A = {a:?}"), outcome);
        }
    }
    for (r, n) in [(4usize, 2u8), (6, 2), (3, 1), (5, 1)] {
        let tuples: Vec<Vec<Unimodular<GaussRat>>> =
            (0..run.n(10)).map(|_| random_tuple(&mut run.g, r)).collect();
        for eps in sign_vectors(r - 1) {
            let predicted = boundary_preserved_by_signs(&eps, n);
            for a in &tuples {
                let outcome = predicted.clone().and_then(|p| Ok(p == boundary_preserved_on(&eps, a, n)?));
                run.check("sign-criterion", || format!("r = {r}, n = {n}, a = {eps:?}"), outcome);
            }
        }
    }
}
