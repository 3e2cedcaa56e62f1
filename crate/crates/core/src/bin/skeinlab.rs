use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use skeinlab::actions::{
    self, coordinate_signs, is_relative_automorphism, sign_action, vieta, CoordMap, CoordSystem,
    SignVector, TorusGen,
};
use skeinlab::exact::{GaussRat, MultiPoly, Rat, Unimodular};
use skeinlab::lamination::{self, Lamination, LaurentRep};
use skeinlab::sample;
use skeinlab::skein::{self, AnyRep, TORUS_VARS};
use skeinlab::sphere::{self, central, SphereConfig, SpherePoint};
use skeinlab::verify;
use skeinlab::words::{Slope, SurfaceSig, Word};
use skeinlab::{Error, Result};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "skeinlab", version, about = "Exact computations on SL2 character varieties")]
struct Cli {
    /// Seed for every randomized routine.
    #[arg(long, global = true, env = "SKEINLAB_SEED", default_value_t = 1)]
    seed: u64,
    /// Multiplier for the number of random cases.
    #[arg(long, global = true, default_value_t = 1)]
    scale: u64,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Trace rewriting, evaluation and the multicurve basis.
    #[command(subcommand)]
    Skein(SkeinCmd),
    /// Relative automorphisms of the character variety.
    #[command(subcommand)]
    Act(ActCmd),
    /// Lamination valuations and domination.
    #[command(subcommand)]
    Lam(LamCmd),
    /// Points on the 3-sphere and the braid action.
    #[command(subcommand)]
    Sphere(SphereCmd),
    /// Run a property suite.
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(verify::SUITES))]
        suite: String,
    },
}

#[derive(Args)]
struct PolyArg {
    /// Polynomial JSON file.
    #[arg(long, conflicts_with = "expr", required_unless_present = "expr")]
    poly: Option<String>,
    /// Polynomial written inline in x, y, z.
    #[arg(long)]
    expr: Option<String>,
}

#[derive(Subcommand)]
enum SkeinCmd {
    /// Trace polynomial of a word in the trace coordinates.
    Reduce {
        #[arg(long, default_value = "1,1")]
        surface: SurfaceSig,
        #[arg(long)]
        word: Word,
    },
    /// Trace of a word under a matrix representation.
    Eval {
        #[arg(long)]
        rep: String,
        #[arg(long)]
        word: Word,
    },
    /// Expand a polynomial in the multicurve basis.
    Decompose(PolyArg),
    /// Cubic fiber equation of the four-holed sphere at given boundary traces.
    Fiber {
        /// Boundary traces p1,p2,p3,p4.
        #[arg(long)]
        traces: String,
    },
}

#[derive(Subcommand)]
enum ActCmd {
    /// Apply a composite of generators to a polynomial.
    Apply {
        #[arg(long, default_value = "1,1")]
        surface: SurfaceSig,
        /// Comma-separated generators applied left to right: R, T, U, T^-1,
        /// Vx, Vy, Vz.
        #[arg(long)]
        gens: String,
        #[command(flatten)]
        poly: PolyArg,
    },
    /// Certify that maps preserve the boundary trace.
    Verify {
        #[arg(long, default_value = "1,1")]
        surface: SurfaceSig,
        /// Certify every built-in map on the surface.
        #[arg(long, conflicts_with = "gens", required_unless_present = "gens")]
        all: bool,
        #[arg(long)]
        gens: Option<String>,
    },
    /// Conjugate a coordinate sign change by generators.
    ConjSign {
        #[arg(long)]
        gens: String,
        #[arg(long, allow_hyphen_values = true)]
        eps: SignVector,
    },
}

#[derive(Subcommand)]
enum LamCmd {
    /// Valuation of a polynomial along a lamination.
    Valuate {
        #[arg(long)]
        lam: Lamination,
        #[command(flatten)]
        poly: PolyArg,
    },
    /// Fit the lamination governing the degrees of a Laurent representation.
    Dominate {
        #[arg(long)]
        rep: String,
        #[arg(long, default_value_t = 3)]
        height: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Slopes in a Farey ball around a slope.
    Farey {
        #[arg(long, allow_hyphen_values = true)]
        slope: Slope,
        #[arg(long, default_value_t = 1)]
        ball: u32,
        /// Height bound for the listed slopes.
        #[arg(long, default_value_t = 4)]
        height: u64,
    },
}

#[derive(Subcommand)]
enum SphereCmd {
    /// Sphere configuration of a representation.
    FromRep {
        #[arg(long)]
        rep: String,
    },
    /// Apply a braid word to a sphere configuration.
    Braid {
        #[arg(long)]
        config: String,
        /// Signed generator indices, e.g. "1,2,-1".
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Coxeter element and its characteristic polynomial.
    Coxeter {
        #[arg(long)]
        config: String,
    },
    /// Boundary traces of a representation.
    Boundary {
        #[arg(long)]
        rep: String,
        #[arg(long)]
        n: Option<u8>,
    },
    /// Whether a central sign vector preserves boundary data.
    Signs {
        /// Signs a_1, ..., a_{r-1}.
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long)]
        n: u8,
        /// Optional tuple for a brute-force comparison.
        #[arg(long)]
        rep: Option<String>,
    },
}

/// Command output: JSON plus a text rendering, and whether it passed.
struct Out {
    json: Value,
    text: String,
    ok: bool,
}

impl Out {
    fn new(json: Value, text: impl Into<String>) -> Out {
        Out { json, text: text.into(), ok: true }
    }
}

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))
}

fn load_poly(p: &PolyArg) -> Result<MultiPoly> {
    match (&p.poly, &p.expr) {
        (Some(path), _) => serde_json::from_str(&read(path)?).map_err(|e| Error::Parse(e.to_string())),
        (None, Some(e)) => MultiPoly::parse(e, &TORUS_VARS),
        (None, None) => Err(Error::Parse("need --poly or --expr".into())),
    }
}

fn load_rep(path: &str) -> Result<AnyRep> {
    AnyRep::from_json(&read(path)?)
}

fn gauss_images(rep: &AnyRep) -> Result<Vec<SpherePoint>> {
    match rep {
        AnyRep::Rat(r) => Ok(r.images().iter().map(|m| m.map(|x| GaussRat::real(x.clone()))).collect()),
        AnyRep::Gauss(r) => Ok(r.images().to_vec()),
        AnyRep::Laurent(_) => Err(Error::Parse("expected a rat or gauss representation".into())),
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn parse_list<T: std::str::FromStr<Err = Error>>(s: &str) -> Result<Vec<T>> {
    s.split(',').map(|t| t.trim().parse()).collect()
}

fn parse_signs(s: &str) -> Result<Vec<i8>> {
    s.split(',')
        .map(|t| match t.trim() {
            "+1" | "1" | "+" => Ok(1),
            "-1" | "-" => Ok(-1),
            o => Err(Error::Parse(format!("sign must be ±1, got {o:?}"))),
        })
        .collect()
}

fn system_for(sig: &SurfaceSig) -> Result<CoordSystem> {
    CoordSystem::from_sig(sig)
}

fn gen_map(system: CoordSystem, token: &str) -> Result<CoordMap> {
    let t = token.trim();
    if let Some(axis) = t.strip_prefix('V') {
        let mut c = axis.chars();
        return match (c.next(), c.next()) {
            (Some(a), None) => vieta(system, a),
            _ => Err(Error::UnknownGenerator(t.to_string())),
        };
    }
    if system != CoordSystem::Torus {
        return Err(Error::UnknownGenerator(t.to_string()));
    }
    Ok(t.parse::<TorusGen>()?.coord_map())
}

fn compose_tokens(system: CoordSystem, gens: &str) -> Result<CoordMap> {
    gens.split(',')
        .filter(|t| !t.trim().is_empty())
        .try_fold(CoordMap::identity(system), |acc, t| gen_map(system, t)?.compose(&acc))
}

/// Built-in maps with whether each is expected to be relative.
fn builtin_maps(system: CoordSystem) -> Result<Vec<(String, CoordMap, bool)>> {
    let mut out = Vec::new();
    let torus = system == CoordSystem::Torus;
    if torus {
        for g in TorusGen::ALL {
            out.push((g.to_string(), g.coord_map(), true));
        }
    }
    for axis in ['x', 'y', 'z'] {
        out.push((format!("V{axis}"), vieta(system, axis)?, true));
    }
    for e in SignVector::all(system.sig().rank()) {
        let expect = torus || e.0.iter().all(|&s| s == 1);
        out.push((format!("sign {e}"), sign_action(system, &e)?, expect));
    }
    if torus {
        for bits in 0..8u8 {
            let eps = [0, 1, 2].map(|i| if bits >> i & 1 == 1 { -1i8 } else { 1 });
            let expect = eps.iter().product::<i8>() == 1;
            out.push((format!("coordinate signs {eps:?}"), coordinate_signs(eps), expect));
        }
    }
    Ok(out)
}

fn skein(cmd: SkeinCmd) -> Result<Out> {
    match cmd {
        SkeinCmd::Reduce { surface, word } => {
            let f = skein::trace_reduce(&surface, &word)?;
            Ok(Out::new(json!({"word": word.to_string(), "trace": f}), f.to_string()))
        }
        SkeinCmd::Eval { rep, word } => {
            let t = load_rep(&rep)?.trace_json(&word)?;
            Ok(Out::new(json!({"word": word.to_string(), "trace": t}), t.to_string()))
        }
        SkeinCmd::Decompose(p) => {
            let d = skein::multicurve_decompose(&load_poly(&p)?)?;
            Ok(Out::new(to_json(&d), d.to_string()))
        }
        SkeinCmd::Fiber { traces } => {
            let p: Vec<Rat> = parse_list(&traces)?;
            let p: [Rat; 4] = p
                .try_into()
                .map_err(|v: Vec<Rat>| Error::Parse(format!("need 4 traces, got {}", v.len())))?;
            let e = skein::fiber_coefficients(&p);
            Ok(Out::new(to_json(&e), e.to_string()))
        }
    }
}

fn act(cmd: ActCmd) -> Result<Out> {
    match cmd {
        ActCmd::Apply { surface, gens, poly } => {
            let m = compose_tokens(system_for(&surface)?, &gens)?;
            let f = m.apply(&load_poly(&poly)?);
            Ok(Out::new(json!({"map": m.to_string(), "result": f}), f.to_string()))
        }
        ActCmd::Verify { surface, all, gens } => {
            let system = system_for(&surface)?;
            let maps = match gens {
                Some(g) if !all => vec![(g.clone(), compose_tokens(system, &g)?, true)],
                _ => builtin_maps(system)?,
            };
            let mut rows = Vec::new();
            let mut text = String::new();
            let mut ok = true;
            for (name, m, expect) in &maps {
                let cert = is_relative_automorphism(m);
                ok &= cert.holds() == *expect;
                let verdict = if cert.holds() { "relative" } else { "not relative" };
                text.push_str(&format!("{name}: {verdict} (expected {})\n", if *expect { "relative" } else { "not relative" }));
                rows.push(json!({"map": name, "holds": cert.holds(), "expected": expect, "certificate": cert}));
            }
            Ok(Out { ok, ..Out::new(Value::Array(rows), text.trim_end()) })
        }
        ActCmd::ConjSign { gens, eps } => {
            let gens = actions::parse_gens(&gens)?;
            let out = actions::conjugate_sign(&gens, &eps)?;
            Ok(Out::new(json!({"eps": eps.to_string(), "conjugate": out.to_string()}), out.to_string()))
        }
    }
}

fn laurent_rep(path: &str) -> Result<LaurentRep> {
    match load_rep(path)? {
        AnyRep::Laurent(r) => LaurentRep::new(r),
        _ => Err(Error::Parse("expected a laurent representation".into())),
    }
}

fn lam(cmd: LamCmd, seed: u64, scale: u64) -> Result<Out> {
    match cmd {
        LamCmd::Valuate { lam, poly } => {
            let v = lamination::valuate(&lam, &load_poly(&poly)?)?;
            Ok(Out::new(json!({"lamination": lam.to_string(), "value": v}), v.to_string()))
        }
        LamCmd::Dominate { rep, height, samples } => {
            let l = laurent_rep(&rep)?;
            let samples = samples * scale.max(1) as usize;
            let (fit, report) = lamination::dominate(&l, height, samples, &mut sample::rng(seed))?;
            Ok(Out::new(to_json(&report), fit.to_string()))
        }
        LamCmd::Farey { slope, ball, height } => {
            let pts = lamination::farey_ball(&slope, ball, height);
            let rows: Vec<Value> = pts
                .iter()
                .map(|(s, d)| json!({"slope": s.to_string(), "distance": d}))
                .collect();
            let text = pts.iter().map(|(s, d)| format!("{s}\t{d}")).collect::<Vec<_>>().join("\n");
            Ok(Out::new(Value::Array(rows), text))
        }
    }
}

fn load_config(path: &str) -> Result<SphereConfig> {
    SphereConfig::from_json(&read(path)?)
}

fn sphere(cmd: SphereCmd) -> Result<Out> {
    match cmd {
        SphereCmd::FromRep { rep } => {
            let c = sphere::rep_to_sphere(&gauss_images(&load_rep(&rep)?)?);
            let j = c.to_json();
            Ok(Out::new(j.clone(), j.to_string()))
        }
        SphereCmd::Braid { config, word } => {
            let word: Vec<i64> = word
                .split(',')
                .map(|t| t.trim().parse().map_err(|_| Error::Parse(format!("bad braid letter {t:?}"))))
                .collect::<Result<_>>()?;
            let c = load_config(&config)?;
            let d = c.braid_word(&word)?;
            let j = d.to_json();
            Ok(Out::new(j.clone(), j.to_string()))
        }
        SphereCmd::Coxeter { config } => {
            let cp = sphere::char_poly(&sphere::coxeter_product(&load_config(&config)?));
            let coeffs: Vec<String> = cp.0.iter().map(GaussRat::to_string).collect();
            Ok(Out::new(json!({"char_poly": coeffs}), coeffs.join(", ")))
        }
        SphereCmd::Boundary { rep, n } => {
            let rep = load_rep(&rep)?;
            let n = n.unwrap_or(rep.sig().punctures() as u8);
            let t = sphere::boundary_monodromy(&gauss_images(&rep)?, n)?;
            let vals: Vec<String> = t.iter().map(GaussRat::to_string).collect();
            Ok(Out::new(json!({"n": n, "traces": vals}), vals.join(", ")))
        }
        SphereCmd::Signs { a, n, rep } => {
            let a = parse_signs(&a)?;
            let on_sphere = central::central_to_sphere(&a);
            let (odd, even) = central::alternating_products(&a);
            let preserved = sphere::boundary_preserved_by_signs(&a, n)?;
            let mut out = Out::new(
                json!({"a": a, "sphere": on_sphere, "odd": odd, "even": even, "preserved": preserved}),
                format!("sphere signs {on_sphere:?}; boundary preserved: {preserved}"),
            );
            if let Some(path) = rep {
                let imgs: Vec<Unimodular<GaussRat>> = gauss_images(&load_rep(&path)?)?;
                let brute = central::boundary_preserved_on(&a, &imgs, n)?;
                out.json["brute_force"] = json!(brute);
                out.text.push_str(&format!("; brute force: {brute}"));
                out.ok = brute == preserved;
            }
            Ok(out)
        }
    }
}

fn run(cli: Cli) -> Result<Out> {
    match cli.cmd {
        Cmd::Skein(c) => skein(c),
        Cmd::Act(c) => act(c),
        Cmd::Lam(c) => lam(c, cli.seed, cli.scale),
        Cmd::Sphere(c) => sphere(c),
        Cmd::Verify { suite } => {
            let r = verify::run_suite(&suite, cli.seed, cli.scale)?;
            let mut text = format!(
                "{}: {} cases, {} failures ({} ms)",
                r.suite,
                r.cases,
                r.failures.len(),
                r.wall_time_ms
            );
            for b in &r.breakdown {
                text.push_str(&format!("\n  {}: {} cases, {} failures", b.suite, b.cases, b.failures));
            }
            for f in &r.failures {
                text.push_str(&format!("\n  FAIL {}: {} [{}]", f.check, f.detail, f.input));
            }
            let json: Value = serde_json::from_str(&r.to_json()).expect("report json");
            Ok(Out { json, text, ok: r.passed() })
        }
    }
}

fn is_usage(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse(_)
            | Error::Io(_)
            | Error::UnknownSuite(_)
            | Error::UnknownGenerator(_)
            | Error::InvalidSurface { .. }
            | Error::InvalidSlope(..)
            | Error::InvalidLamination(_)
            | Error::InvalidBoundaryIndex { .. }
            | Error::GeneratorOutOfRange(_)
            | Error::MissingGenerator(_)
            | Error::NotUnimodular(_)
            | Error::RankNotTwo(_)
            | Error::BraidIndex { .. }
            | Error::ParityMismatch { .. }
            | Error::SizeMismatch(..)
            | Error::NonConstantBoundary(_)
    )
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let as_json = cli.json;
    match run(cli) {
        Ok(out) => {
            if as_json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("json"));
            } else {
                println!("{}", out.text);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if is_usage(&e) { 2 } else { 1 })
        }
    }
}
