//! Command-line front end.
//!
//! Every verb reads its structures as inline JSON, a file path, or `-` for
//! stdin, and prints JSON (default) or a plain table. Exit codes: 0 success,
//! 1 domain error, 2 parse or usage error; `verify-paper` exits 1 iff an
//! item fails.

use std::ffi::OsString;
use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactnum::{format_rational, parse_rational, ExtScalar, QMatrix, Rational, Scalar, SolutionSpace};
use crate::io::{
    catalog_to_json, classification_to_json, linear_pair_from_json, matrix_from_json, matrix_to_json, mvf_from_json,
    mvf_to_json, orbit_pairs_to_json, quadratic_pair_from_json, space_to_json, vector_to_json,
};
use crate::linclass::{classify, decompose, LinearPair};
use crate::multivec::{is_poisson, jacobiator, modular_field, schouten, MultiVectorField};
use crate::quaddef::{
    catalog, deform_check, enumerate_orbit_pairs, jordan_family_of, p2_orbit_rep, solve_f, space_polys, t_of_v_f64,
    KSpec, P2Point, QuadraticPair, DEFAULT_FLOAT_TOLERANCE,
};
use crate::verify::{self, Golden};

#[derive(Parser, Debug)]
#[command(name = "poisson-forge", version, about = "Exact Lie-Poisson classification and quadratic deformations on R³")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Residual bound for floating fallbacks.
    #[arg(long, global = true, default_value_t = DEFAULT_FLOAT_TOLERANCE)]
    tolerance: f64,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Standard form of a linear pair {"k", "A"}.
    Classify { pair: String },
    /// Splits a linear bivector into modular vector and exact part.
    Decompose { bivector: String },
    /// Schouten bracket of {"U": field, "V": field}.
    Bracket { input: String },
    /// Modular vector field of a bivector.
    Modular { bivector: String },
    /// Jacobi identity check of a bivector.
    IsPoisson { bivector: String },
    /// Cubics F deforming a linear pair with a traceless K.
    DeformSolve { pair: String, k: String },
    /// Whether a quadratic pair {"K", "F"} deforms a linear pair.
    DeformCheck { pair: String, qpair: String },
    /// Orbit representatives of the automorphism group of K on P².
    Orbits {
        k: String,
        /// Also solve for F against this standard case.
        #[arg(long)]
        case: Option<u8>,
        /// Parameter of cases 8 and 9.
        #[arg(long, default_value = "1")]
        a: String,
        /// Classify a point of P², as comma-separated coordinates.
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
    },
    /// Recompute every published result and compare with the golden data.
    VerifyPaper {
        /// Golden data file; the built-in copy by default.
        #[arg(long)]
        golden: Option<String>,
        /// Worker threads (0 = available parallelism).
        #[arg(long, default_value_t = 0)]
        threads: usize,
    },
}

/// Result of one invocation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { code: 0, stdout, stderr: String::new() }
    }
}

/// Exit code of a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => 2,
        _ => 1,
    }
}

/// Runs the CLI on `args` (program name first).
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match dispatch(&cli, stdin) {
        Ok(out) => out,
        Err(e) => Outcome { code: exit_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read) -> Result<Outcome> {
    if !(cli.tolerance.is_finite() && cli.tolerance >= 0.0) {
        return Err(Error::Parse(format!("tolerance must be a nonnegative number, found {}", cli.tolerance)));
    }
    let mut input = Input { stdin, used: false };
    let table = cli.format == Format::Table;
    let (value, text) = match &cli.verb {
        Verb::Classify { pair } => cmd_classify(&input.json(pair)?)?,
        Verb::Decompose { bivector } => cmd_decompose(&input.json(bivector)?)?,
        Verb::Bracket { input: src } => cmd_bracket(&input.json(src)?)?,
        Verb::Modular { bivector } => {
            let pi: MultiVectorField<Rational> = mvf_from_json(&input.json(bivector)?)?;
            let m = modular_field(&pi)?;
            (mvf_to_json(&m), format!("modular field: {m}\n"))
        }
        Verb::IsPoisson { bivector } => {
            let pi: MultiVectorField<Rational> = mvf_from_json(&input.json(bivector)?)?;
            let jac = jacobiator(&pi)?;
            let ok = is_poisson(&pi)?;
            (json!({"poisson": ok, "jacobiator": mvf_to_json(&jac)}), format!("poisson: {ok}\njacobiator: {jac}\n"))
        }
        Verb::DeformSolve { pair, k } => {
            let lp = pair_from(&input.json(pair)?)?;
            let k: QMatrix = matrix_from_json(&input.json(k)?)?;
            let space = solve_f(&lp, &k)?;
            (space_to_json(&space), space_table(&space))
        }
        Verb::DeformCheck { pair, qpair } => {
            let lp = pair_from(&input.json(pair)?)?;
            let qp: QuadraticPair<ExtScalar> = quadratic_pair_from_json(&input.json(qpair)?)?;
            let ok = deform_check(&lp, &qp)?;
            (json!({"deformation": ok}), format!("deformation: {ok}\n"))
        }
        Verb::Orbits { k, case, a, point } => {
            let k: QMatrix = matrix_from_json(&input.json(k)?)?;
            cmd_orbits(&k, *case, a, point.as_deref(), cli.tolerance)?
        }
        Verb::VerifyPaper { golden, threads } => {
            let golden = match golden {
                Some(src) => Golden::parse(&input.text(src)?)?,
                None => Golden::embedded(),
            };
            let results = verify::run(&golden, *threads);
            let stdout = if table { verify::render_table(&results) } else { render(&verify::render_json(&results)) };
            let code = if verify::all_pass(&results) { 0 } else { 1 };
            return Ok(Outcome { code, stdout, stderr: String::new() });
        }
    };
    Ok(Outcome::ok(if table { text } else { render(&value) }))
}

fn render(v: &Value) -> String {
    format!("{v}\n")
}

/// Inline JSON, a file path, or `-` for stdin (readable once).
struct Input<'a> {
    stdin: &'a mut dyn Read,
    used: bool,
}

impl Input<'_> {
    fn text(&mut self, src: &str) -> Result<String> {
        let t = src.trim_start();
        if t.starts_with('{') || t.starts_with('[') {
            return Ok(src.to_string());
        }
        if src == "-" {
            if self.used {
                return Err(Error::Parse("stdin can supply only one argument".into()));
            }
            self.used = true;
            let mut s = String::new();
            self.stdin.read_to_string(&mut s).map_err(|e| Error::Parse(format!("reading stdin: {e}")))?;
            return Ok(s);
        }
        std::fs::read_to_string(src).map_err(|e| Error::Parse(format!("reading {src}: {e}")))
    }

    fn json(&mut self, src: &str) -> Result<Value> {
        let text = self.text(src)?;
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))
    }
}

fn pair_from(v: &Value) -> Result<LinearPair> {
    linear_pair_from_json(v)
}

fn vec_table<S: Scalar>(v: &[S]) -> String {
    let c: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", c.join(", "))
}

fn cmd_classify(v: &Value) -> Result<(Value, String)> {
    let c = classify(&pair_from(v)?)?;
    let mut text = format!("case: {}\n", c.label.case_id);
    if let Some(a2) = &c.label.a_squared {
        text.push_str(&format!("a²: {}\n", format_rational(a2)));
    }
    text.push_str(&format!("witness R: {}\nwitness d: {}\n", c.witness.r, vec_table(&c.witness.d)));
    Ok((classification_to_json(&c), text))
}

fn cmd_decompose(v: &Value) -> Result<(Value, String)> {
    let pi: MultiVectorField<Rational> = mvf_from_json(v)?;
    let d = decompose(&pi)?;
    let value = json!({"k": vector_to_json(&d.k), "lambda": mvf_to_json(&d.lambda), "compatible": d.compatible});
    let text = format!("k: {}\nΛ: {}\ncompatible: {}\n", vec_table(&d.k), d.lambda, d.compatible);
    Ok((value, text))
}

fn cmd_bracket(v: &Value) -> Result<(Value, String)> {
    let field = |key: &str| v.get(key).ok_or_else(|| Error::Parse(format!("missing field \"{key}\"")));
    let u: MultiVectorField<Rational> = mvf_from_json(field("U")?)?;
    let w: MultiVectorField<Rational> = mvf_from_json(field("V")?)?;
    let b = schouten(&u, &w)?;
    Ok((mvf_to_json(&b), format!("[U, V] = {b}\n")))
}

fn space_table<S: Scalar>(s: &SolutionSpace<S>) -> String {
    let (particular, basis) = space_polys(s);
    let Some(p) = particular else { return "empty\n".into() };
    let mut text = format!("particular: {p}\n");
    if basis.is_empty() {
        text.push_str("basis: none\n");
    }
    for b in basis {
        text.push_str(&format!("basis: {b}\n"));
    }
    text
}

fn parse_point(s: &str) -> Result<[Rational; 3]> {
    let coords: Vec<Rational> = s.split(',').map(parse_rational).collect::<Result<_>>()?;
    coords.try_into().map_err(|_| Error::Parse(format!("a point of P² needs 3 coordinates: {s:?}")))
}

fn float_rows(t: &[[f64; 3]; 3]) -> Value {
    json!(t)
}

fn cmd_orbits(k: &QMatrix, case: Option<u8>, a: &str, point: Option<&str>, tol: f64) -> Result<(Value, String)> {
    let fam = jordan_family_of(k)?;
    let normal = fam.matrix().ok_or_else(|| Error::NoOrbitData(fam.to_string()))?;
    let pairs = enumerate_orbit_pairs(&fam)?;
    let mut value = json!({
        "family": fam.name(),
        "normal_form": matrix_to_json(&normal),
        "orbits": orbit_pairs_to_json(&pairs),
    });
    let mut text = format!("family: {fam}\nnormal form K: {normal}\n");
    for p in &pairs {
        let f: Vec<String> = p.f_basis.iter().map(|f| f.to_string()).collect();
        text.push_str(&format!("orbit {}: rep {}  K = {}  F ∈ span{{{}}}\n", p.rep.index, p.rep.point, p.k, f.join(", ")));
    }
    if let Some(case) = case {
        let entries = catalog(case, &parse_rational(a)?, &KSpec::Family(fam.clone()))?;
        value["catalog"] = catalog_to_json(&entries);
        for e in &entries {
            text.push_str(&format!("case {case} orbit {}: {}\n", e.orbit, space_table(&e.solution).trim_end().replace('\n', "; ")));
        }
    }
    if let Some(point) = point {
        let v = parse_point(point)?;
        let floats = v.clone().map(|c| c.to_f64());
        let rep = p2_orbit_rep(&fam, &P2Point::from_rationals(v)?)?;
        let t = t_of_v_f64(floats, tol)?;
        value["point"] = json!({
            "orbit": rep.index,
            "rep": vector_to_json(rep.point.coords()),
            "T": matrix_to_json(&rep.t),
            "T_of_point": float_rows(&t),
        });
        text.push_str(&format!("point orbit: {} (rep {})\nT(point) ≈ {:?}\n", rep.index, rep.point, t));
    }
    Ok((value, text))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cli(args: &[&str]) -> Outcome {
        let mut argv = vec!["poisson-forge"];
        argv.extend_from_slice(args);
        run(argv, &mut std::io::empty())
    }

    #[test]
    fn classify_case_eight() {
        let out = cli(&["classify", r#"{"k":["0","0","1"],"A":[["2","0","0"],["0","2","0"],["0","0","0"]]}"#]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert!(out.stdout.starts_with(r#"{"case":8,"a_squared":"4","#), "{}", out.stdout);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(cli(&["classify", r#"{"k":["1","0","0"],"A":[["1","0","0"],["0","0","0"],["0","0","0"]]}"#]).code, 1);
        assert_eq!(cli(&["classify", "{not json"]).code, 2);
        assert_eq!(cli(&["frobnicate"]).code, 2);
        assert_eq!(cli(&["--format", "xml", "classify", "{}"]).code, 2);
        assert_eq!(cli(&["--help"]).code, 0);
    }

    #[test]
    fn stdin_is_read_once() {
        let pair = r#"{"k":[0,0,0],"A":[[0,0,0],[0,0,0],[0,0,0]]}"#;
        let mut stdin = pair.as_bytes();
        let out = run(["poisson-forge", "--format", "table", "classify", "-"], &mut stdin);
        assert_eq!(out.stdout.lines().next(), Some("case: 1"));
        let mut stdin = pair.as_bytes();
        assert_eq!(run(["poisson-forge", "deform-check", "-", "-"], &mut stdin).code, 2);
    }

    #[test]
    fn deform_solve_table() {
        let pair = r#"{"k":[0,0,1],"A":[[0,0,0],[0,0,0],[0,0,0]]}"#;
        let out = cli(&["--format", "table", "deform-solve", pair, "[[1,0,0],[0,2,0],[0,0,-3]]"]);
        assert_eq!(out.stdout, "particular: 1/6·xyz\nbasis: none\n");
        assert_eq!(cli(&["deform-solve", pair, "[[1,0,0],[0,0,0],[0,0,0]]"]).code, 1);
    }
}
