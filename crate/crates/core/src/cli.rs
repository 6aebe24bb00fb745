//! Command-line front end. [`run`] returns the exit code and captured
//! output so the binary stays a thin wrapper.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 a mathematical check
//! returned false.

use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::algebra::{parse_scalar, Backend, Scalar};
use crate::classify::sampling::{degenerate_spec, random_spec};
use crate::classify::{burnside_oracle, classify, q_closed, ClassifyOptions};
use crate::error::RepError;
use crate::rep::{build_rep, parse_modulus, rep_from_json, rep_to_json, structure_report, verify_braid, Family, Rep, RepSpec};
use crate::tensor_dims::{verify_series, Series};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_CHECK: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "b3rep", version, about = "Exact B3 representations of dimension at most 5")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Oracle {
    Burnside,
    None,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    All,
    Braid,
    Triangular,
    Prop13,
    Delta,
    Conjugation,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanMode {
    Random,
    Grid,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build A and B and print them as JSON.
    Construct(SpecArgs),
    /// Check the braid relation and structure identities of a rep JSON.
    Verify {
        /// Rep JSON file; standard input when omitted.
        file: Option<String>,
        #[arg(long, value_enum, default_values_t = [Check::All])]
        check: Vec<Check>,
    },
    /// Decide simplicity and the SL(2,Z)/PSL(2,Z) flags.
    Classify {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, value_enum, default_value_t = Oracle::None)]
        oracle: Oracle,
        /// Also run the eigenspace check with this sixth root of delta.
        #[arg(long, allow_hyphen_values = true)]
        sixth_root: Option<String>,
        /// Exit 0 even when the module is not simple.
        #[arg(long)]
        exit_zero: bool,
    },
    /// Print the closed forms Q_rs for all r != s.
    Qpoly(SpecArgs),
    /// Classify a seeded random sample or a grid; CSV on standard output.
    Scan(ScanArgs),
    /// Compare categorical dimensions from eigenvalues with closed formulas.
    Dims {
        #[arg(long)]
        series: String,
    },
}

#[derive(Args, Debug, Clone, Default)]
pub struct SpecArgs {
    #[arg(long)]
    pub dim: usize,
    /// Eigenvalue (repeatable, in order); for d=4,5 the last may be omitted.
    #[arg(long = "eig", allow_hyphen_values = true)]
    pub eig: Vec<String>,
    /// Root parameter for d=4.
    #[arg(long = "D", allow_hyphen_values = true)]
    pub d_root: Option<String>,
    /// Root parameter for d=5.
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: Option<String>,
    /// Free symbolic parameters instead of values.
    #[arg(long)]
    pub symbolic: bool,
    /// Variable names usable in the scalar strings (comma separated).
    #[arg(long, value_delimiter = ',')]
    pub vars: Vec<String>,
    /// Work in Q[z]/(modulus), e.g. `z^2-z+1`.
    #[arg(long)]
    pub modulus: Option<String>,
    /// Use the binomial family; `--eig` lists all parameters.
    #[arg(long)]
    pub binomial: bool,
    /// The constant c of the binomial family.
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct ScanArgs {
    #[arg(long)]
    pub dim: usize,
    #[arg(long, value_enum, default_value_t = ScanMode::Random)]
    pub mode: ScanMode,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    /// Additional instances on which an obstruction generator vanishes.
    #[arg(long, default_value_t = 0)]
    pub degenerate: usize,
    /// Bound on numerators and denominators of sampled rationals.
    #[arg(long, default_value_t = 10)]
    pub bound: i64,
    /// Values for every free parameter in grid mode (comma separated).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub grid: Vec<String>,
    #[arg(long, value_enum, default_value_t = Oracle::Burnside)]
    pub oracle: Oracle,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn input_error(msg: impl std::fmt::Display) -> Self {
        Self { code: EXIT_INPUT, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }

    fn checked(passed: bool, stdout: String) -> Self {
        Self { code: if passed { EXIT_OK } else { EXIT_CHECK }, stdout, stderr: String::new() }
    }
}

impl From<RepError> for Outcome {
    fn from(e: RepError) -> Self {
        Outcome::input_error(e)
    }
}

pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: text },
            };
        }
    };
    let fmt = cli.format;
    let res = match cli.command {
        Command::Construct(spec) => cmd_construct(&spec, fmt),
        Command::Verify { file, check } => cmd_verify(file.as_deref(), &check, stdin, fmt),
        Command::Classify { spec, oracle, sixth_root, exit_zero } => cmd_classify(&spec, oracle, sixth_root.as_deref(), exit_zero, fmt),
        Command::Qpoly(spec) => cmd_qpoly(&spec, fmt),
        Command::Scan(args) => cmd_scan(&args),
        Command::Dims { series } => cmd_dims(&series, fmt),
    };
    res.unwrap_or_else(Outcome::from)
}

fn backend_for(args: &SpecArgs) -> Result<Backend, RepError> {
    match (&args.modulus, args.vars.is_empty()) {
        (Some(_), false) => Err(RepError::Constraint("--modulus and --vars are exclusive".into())),
        (Some(m), true) => Ok(Backend::Extension(parse_modulus("z", m)?)),
        (None, false) => Ok(Backend::symbolic(&args.vars)?),
        (None, true) => Ok(Backend::Rational),
    }
}

fn parse_all(b: &Backend, items: &[String]) -> Result<Vec<Scalar>, RepError> {
    items.iter().map(|s| parse_scalar(s, b).map_err(RepError::from)).collect()
}

/// Builds the spec described by the flags.
pub fn spec_from_args(args: &SpecArgs) -> Result<RepSpec, RepError> {
    let d = args.dim;
    if args.symbolic {
        if !args.eig.is_empty() || args.binomial {
            return Err(RepError::Constraint("--symbolic takes no --eig values".into()));
        }
        return RepSpec::generic(d);
    }
    let b = backend_for(args)?;
    let eigs = parse_all(&b, &args.eig)?;
    if args.binomial {
        if eigs.len() != d {
            return Err(RepError::Constraint(format!("binomial family of size {d} needs {d} --eig values")));
        }
        let c = args.c.as_ref().ok_or_else(|| RepError::Constraint("--binomial needs --c".into()))?;
        return RepSpec::binomial(eigs, parse_scalar(c, &b)?);
    }
    let root = match (d, &args.d_root, &args.gamma) {
        (_, Some(_), Some(_)) => return Err(RepError::Constraint("give only one of --D and --gamma".into())),
        (4, Some(r), None) | (5, None, Some(r)) => Some(parse_scalar(r, &b)?),
        (4, None, Some(_)) => return Err(RepError::Constraint("d=4 takes --D, not --gamma".into())),
        (5, Some(_), None) => return Err(RepError::Constraint("d=5 takes --gamma, not --D".into())),
        (_, None, None) => None,
        _ => return Err(RepError::Constraint(format!("no root parameter is used for d={d}"))),
    };
    match (eigs.len(), root) {
        (n, Some(r)) if n + 1 == d => RepSpec::classified_derived(eigs, r),
        (n, root) if n == d => RepSpec::classified(eigs, root),
        (n, _) => Err(RepError::Constraint(format!("d={d} needs {d} eigenvalues (or {} with the root parameter), got {n}", d - 1))),
    }
}

fn render_rep_text(rep: &Rep) -> String {
    format!("A =\n{}\nB =\n{}\n", rep.a, rep.b)
}

fn cmd_construct(args: &SpecArgs, fmt: Format) -> Result<Outcome, RepError> {
    let rep = build_rep(&spec_from_args(args)?)?;
    Ok(Outcome::ok(match fmt {
        Format::Json => rep_to_json(&rep) + "\n",
        Format::Text => render_rep_text(&rep),
    }))
}

fn emit(v: &Value, fmt: Format) -> String {
    match fmt {
        Format::Json => serde_json::to_string_pretty(v).expect("serializable") + "\n",
        Format::Text => {
            let mut out = String::new();
            if let Value::Object(m) = v {
                for (k, x) in m {
                    let s = match x {
                        Value::String(s) => s.clone(),
                        other => other.to_string(),
                    };
                    out.push_str(&format!("{k}: {s}\n"));
                }
            }
            out
        }
    }
}

fn cmd_verify(file: Option<&str>, checks: &[Check], stdin: &mut dyn Read, fmt: Format) -> Result<Outcome, RepError> {
    let mut text = String::new();
    match file {
        Some(path) => text = std::fs::read_to_string(path).map_err(|e| RepError::Json(format!("{path}: {e}")))?,
        None => {
            stdin.read_to_string(&mut text).map_err(|e| RepError::Json(e.to_string()))?;
        }
    }
    let rep = rep_from_json(&text)?;
    let want = |c: Check| checks.contains(&Check::All) || checks.contains(&c);
    let mut out = Map::new();
    let braid = verify_braid(&rep);
    if want(Check::Braid) {
        out.insert("braid_ok".into(), json!(braid));
    }
    let needs_structure = [Check::Triangular, Check::Prop13, Check::Delta, Check::Conjugation].into_iter().any(want);
    if needs_structure {
        if !braid {
            out.insert("braid_ok".into(), json!(false));
        } else if rep.spec.family() == Family::Binomial {
            if !checks.contains(&Check::All) {
                return Err(RepError::Unsupported("structure checks apply to the classified family".into()));
            }
        } else {
            let r = structure_report(&rep)?;
            if want(Check::Triangular) {
                out.insert("ordered_triangular_ok".into(), json!(r.ordered_triangular_ok));
            }
            if want(Check::Prop13) {
                out.insert("skew_diag_ok".into(), json!(r.skew_diag_ok));
                out.insert("prop13b_ok".into(), json!(r.prop13b_ok));
                out.insert("prop13c_ok".into(), json!(r.prop13c_ok));
                out.insert("prop13d_ok".into(), json!(r.prop13d_ok));
                out.insert("cor13a_ok".into(), json!(r.cor13a_ok));
            }
            if want(Check::Delta) {
                out.insert("sigma".into(), json!(r.sigma.render()));
                out.insert("delta".into(), json!(r.delta.as_ref().map(Scalar::render)));
                out.insert("delta_power_ok".into(), json!(r.delta_power_ok));
            }
            if want(Check::Conjugation) {
                out.insert("conjugation_ok".into(), json!(r.conjugation_ok));
            }
        }
    }
    let passed = out.values().all(|v| !matches!(v, Value::Bool(false)) && !v.is_null());
    out.insert("ok".into(), json!(passed));
    Ok(Outcome::checked(passed, emit(&Value::Object(out), fmt)))
}

fn cmd_classify(args: &SpecArgs, oracle: Oracle, sixth_root: Option<&str>, exit_zero: bool, fmt: Format) -> Result<Outcome, RepError> {
    let spec = spec_from_args(args)?;
    let westbury_sixth_root = sixth_root.map(|s| parse_scalar(s, spec.backend())).transpose()?;
    let opts = ClassifyOptions { burnside: oracle == Oracle::Burnside, westbury_sixth_root };
    let report = classify(&spec, &opts)?;
    let mut v = serde_json::to_value(&report).expect("serializable");
    let agree = report.burnside.map(|b| b == report.simple);
    if let (Value::Object(m), Some(a)) = (&mut v, agree) {
        m.insert("oracle_agrees".into(), json!(a));
    }
    let westbury_ok = report.westbury.as_ref().is_none_or(|w| w.sums_ok(spec.dim()) && w.inequality_ok());
    let passed = agree != Some(false) && westbury_ok && (report.simple || exit_zero);
    Ok(Outcome::checked(passed, emit(&v, fmt)))
}

fn cmd_qpoly(args: &SpecArgs, fmt: Format) -> Result<Outcome, RepError> {
    let spec = if args.eig.is_empty() && !args.symbolic { RepSpec::generic(args.dim)? } else { spec_from_args(args)? };
    if spec.family() != Family::Classified {
        return Err(RepError::Unsupported("Q_rs is defined for the classified family".into()));
    }
    let l = spec.eigenvalues();
    let gamma = spec.gamma();
    let mut m = Map::new();
    for r in 0..l.len() {
        for s in 0..l.len() {
            if r != s {
                m.insert(format!("Q_{}{}", r + 1, s + 1), json!(q_closed(r, s, l, gamma.as_ref())?.render()));
            }
        }
    }
    Ok(Outcome::ok(emit(&Value::Object(m), fmt)))
}

/// Frozen CSV header of `scan`.
pub const SCAN_HEADER: [&str; 12] =
    ["index", "dim", "eigenvalues", "root_param", "simple", "vanishing", "oracle", "agreement", "sl2z", "psl2z", "deligne", "error"];

fn grid_specs(args: &ScanArgs) -> Result<Vec<Result<RepSpec, RepError>>, RepError> {
    let b = Backend::Rational;
    let values = parse_all(&b, &args.grid)?;
    let d = args.dim;
    if !(2..=5).contains(&d) {
        return Err(RepError::Unsupported(format!("scan supports d in 2..=5, got {d}")));
    }
    if values.is_empty() {
        return Ok(Vec::new());
    }
    // d free parameters: the eigenvalues for d ≤ 3, else d − 1 eigenvalues and the root.
    let mut out = Vec::new();
    let total = values.len().pow(d as u32);
    for mut k in 0..total {
        let mut p = Vec::with_capacity(d);
        for _ in 0..d {
            p.push(values[k % values.len()].clone());
            k /= values.len();
        }
        p.reverse();
        out.push(if d <= 3 {
            RepSpec::classified(p, None)
        } else {
            let root = p.pop().expect("nonempty");
            RepSpec::classified_derived(p, root)
        });
    }
    Ok(out)
}

fn random_specs(args: &ScanArgs) -> Vec<Result<RepSpec, RepError>> {
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let mut out: Vec<_> = (0..args.count).map(|_| random_spec(args.dim, &mut rng, args.bound)).collect();
    out.extend((0..args.degenerate).map(|_| degenerate_spec(args.dim, &mut rng, args.bound)));
    out
}

fn flag(b: Option<bool>) -> String {
    b.map_or_else(String::new, |x| x.to_string())
}

fn scan_row(index: usize, d: usize, spec: &Result<RepSpec, RepError>, oracle: Oracle) -> Vec<String> {
    let mut row = vec![index.to_string(), d.to_string()];
    let spec = match spec {
        Ok(s) => s,
        Err(e) => {
            row.extend(std::iter::repeat_n(String::new(), SCAN_HEADER.len() - 3));
            row.push(e.to_string());
            return row;
        }
    };
    row.push(spec.eigenvalues().iter().map(Scalar::render).collect::<Vec<_>>().join(";"));
    row.push(spec.root_param().map(Scalar::render).unwrap_or_default());
    let result = (|| -> Result<Vec<String>, RepError> {
        let rep = classify(spec, &ClassifyOptions::default())?;
        let burnside = match oracle {
            Oracle::Burnside => Some(burnside_oracle(&build_rep(spec)?)?),
            Oracle::None => None,
        };
        let agreement = match burnside {
            Some(b) if b == rep.simple => "agree",
            Some(_) => "disagree",
            None => "",
        };
        Ok(vec![
            rep.simple.to_string(),
            rep.vanishing_factors.iter().map(|v| v.generator.clone()).collect::<Vec<_>>().join(";"),
            flag(burnside),
            agreement.to_string(),
            flag(rep.sl2z),
            flag(rep.psl2z),
            flag(rep.deligne_certificate),
            String::new(),
        ])
    })();
    match result {
        Ok(cols) => row.extend(cols),
        Err(e) => {
            row.extend(std::iter::repeat_n(String::new(), SCAN_HEADER.len() - 5));
            row.push(e.to_string());
        }
    }
    row
}

fn cmd_scan(args: &ScanArgs) -> Result<Outcome, RepError> {
    if !(2..=5).contains(&args.dim) {
        return Err(RepError::Unsupported(format!("scan supports d in 2..=5, got {}", args.dim)));
    }
    let specs = match args.mode {
        ScanMode::Random => {
            if !args.grid.is_empty() {
                return Err(RepError::Constraint("--grid needs --mode grid".into()));
            }
            random_specs(args)
        }
        ScanMode::Grid => grid_specs(args)?,
    };
    // Rows are computed in parallel and collected in input order.
    let rows: Vec<Vec<String>> = specs.par_iter().enumerate().map(|(i, s)| scan_row(i, args.dim, s, args.oracle)).collect();
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(SCAN_HEADER).map_err(|e| RepError::Internal(e.to_string()))?;
    for r in &rows {
        w.write_record(r).map_err(|e| RepError::Internal(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| RepError::Internal(e.to_string()))?;
    Ok(Outcome::ok(String::from_utf8(bytes).expect("utf-8")))
}

fn cmd_dims(series: &str, fmt: Format) -> Result<Outcome, RepError> {
    let s = Series::parse(series).ok_or_else(|| RepError::Constraint(format!("unknown series `{series}` (expected bcd or exceptional)")))?;
    let report = verify_series(s)?;
    let text = match fmt {
        Format::Json => report.to_json() + "\n",
        Format::Text => {
            let mut out = String::new();
            for r in &report.reports {
                out.push_str(&format!("{}: equal={} sign_flip={}\n", r.summand, r.equal, r.convention.sign_flip));
            }
            for c in &report.checks {
                out.push_str(&format!("{}: {}\n", c.name, c.ok));
            }
            out
        }
    };
    Ok(Outcome::checked(report.all_equal(), text))
}
