//! The `pnrd` command line.
//!
//! Exit status: 0 on success, 2 when the input fails validation, 3 when a
//! computation fails on validated input, 64 on a usage error.

pub mod input;
pub mod output;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::error::Error;
use crate::exactmath::{format_rational, parse_rational, Rational};
use crate::oracle::{class_of, oracle_chi, oracle_inertia, oracle_regcont, sym_matrix_of};
use crate::regularity::{classify, reg_cont, reg_cont_bundle, scan_window, sweep, RegularityResult};
use crate::riemannroch::{bundle_invariants, pnrd_pencil, BundleClass, VanishingRanges};
use crate::wedderburn::{SymmetricClass, VarietyContext};
use input::{Document, Located};
use output::{coefficients, rational, render, Format};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_COMPUTATION: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug)]
#[command(name = "pnrd", version, about = "Exact Hilbert polynomials, indices and continuous regularity from endomorphism algebra data")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the variety and every class in the document
    Validate(Common),
    /// Euler characteristic
    Chi(Common),
    /// Hilbert polynomial and its root profile
    Hilbert(Common),
    /// Index, kernel dimension and negative root count
    Index(Common),
    /// Cohomology degrees forced to vanish
    Vanishing(Common),
    /// IT / WIT classification
    Classify(Common),
    /// Continuous Castelnuovo-Mumford regularity
    Regcont(Common),
    /// Regularity along the ray class + s * direction
    Sweep(SweepArgs),
    /// Compare against the brute-force matrix model
    OracleCheck(Common),
}

#[derive(Args, Debug)]
struct Common {
    /// Input document with the variety and named classes
    #[arg(long)]
    input: PathBuf,
    /// Name of the class to use
    #[arg(long)]
    class: Option<String>,
    /// File with one class, or with a `classes` map
    #[arg(long)]
    class_file: Option<PathBuf>,
    /// Read the class as det of a bundle of this rank
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    rank: Option<u32>,
    #[arg(long, value_enum, default_value = "table")]
    output: Format,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[command(flatten)]
    common: Common,
    /// Comma-separated rationals, e.g. "-1,0,1/2,1"
    #[arg(long, allow_hyphen_values = true)]
    grid: String,
    /// Name of the direction class
    #[arg(long)]
    direction: String,
}

enum Failure {
    Usage(String),
    Input(Located),
    Computation(Error),
}

impl From<Located> for Failure {
    fn from(e: Located) -> Self {
        Failure::Input(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_validation() {
            Failure::Input(Located {
                path: String::new(),
                error: e,
            })
        } else {
            Failure::Computation(e)
        }
    }
}

type Outcome = std::result::Result<Map<String, Value>, Failure>;

/// Runs one command line (`argv[0]` included) and returns the exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let format = match &cli.command {
        Command::Sweep(s) => s.common.output,
        Command::Validate(c)
        | Command::Chi(c)
        | Command::Hilbert(c)
        | Command::Index(c)
        | Command::Vanishing(c)
        | Command::Classify(c)
        | Command::Regcont(c)
        | Command::OracleCheck(c) => c.output,
    };
    match dispatch(&cli.command) {
        Ok(report) => {
            let _ = out.write_all(render(&report, format).as_bytes());
            EXIT_OK
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Input(loc)) => {
            let _ = writeln!(err, "error: {loc}");
            if loc.error.is_validation() {
                EXIT_VALIDATION
            } else {
                EXIT_COMPUTATION
            }
        }
        Err(Failure::Computation(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_COMPUTATION
        }
    }
}

fn read_json(path: &PathBuf) -> std::result::Result<Value, Located> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| Located {
        path: shown.clone(),
        error: Error::InvalidInput(format!("cannot read file: {e}")),
    })?;
    input::parse_json(&text, &shown)
}

/// The document plus every class available by name: those of the
/// document, then those of the class file (which take precedence).
struct Session {
    doc: Document,
    classes: Vec<(String, String, Value)>,
    /// The first `from_file` entries of `classes` come from the class file.
    from_file: usize,
}

impl Session {
    fn open(c: &Common) -> std::result::Result<Self, Failure> {
        let doc = input::parse_document(&read_json(&c.input)?)?;
        let mut classes: Vec<(String, String, Value)> = doc
            .classes
            .iter()
            .map(|(k, v)| (k.clone(), format!("$.classes.{k}"), v.clone()))
            .collect();
        let mut count = 0;
        if let Some(file) = &c.class_file {
            let default = c.class.clone().unwrap_or_else(|| "class".into());
            let entries = input::class_file_entries(&read_json(file)?, &default)?;
            let shown = file.display();
            let mut from_file: Vec<(String, String, Value)> = entries
                .into_iter()
                .map(|(k, v)| (k.clone(), format!("{shown}:$.classes.{k}"), v))
                .collect();
            classes.retain(|(k, _, _)| !from_file.iter().any(|(f, _, _)| f == k));
            count = from_file.len();
            from_file.append(&mut classes);
            classes = from_file;
        }
        Ok(Self {
            doc,
            classes,
            from_file: count,
        })
    }

    fn ctx(&self) -> &VarietyContext {
        &self.doc.context
    }

    fn class_named(&self, name: &str) -> std::result::Result<SymmetricClass, Failure> {
        let (_, path, v) = self
            .classes
            .iter()
            .find(|(k, _, _)| k == name)
            .ok_or_else(|| Failure::Usage(format!("no class named `{name}`")))?;
        Ok(input::parse_class(self.ctx(), v, path)?)
    }

    /// The selected class: `--class`, else the only class of the class
    /// file, else the only class of the document.
    fn selected(&self, c: &Common) -> std::result::Result<(String, SymmetricClass), Failure> {
        let candidates = if self.from_file > 0 {
            &self.classes[..self.from_file]
        } else {
            &self.classes[..]
        };
        let name = match &c.class {
            Some(n) => n.clone(),
            None => match candidates {
                [(only, _, _)] => only.clone(),
                [] => return Err(Failure::Usage("no class given; use --class or --class-file".into())),
                _ => return Err(Failure::Usage("several classes available; choose one with --class".into())),
            },
        };
        let class = self.class_named(&name)?;
        Ok((name, class))
    }
}

fn report(pairs: Vec<(&str, Value)>) -> Map<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn dispatch(cmd: &Command) -> Outcome {
    match cmd {
        Command::Validate(c) => validate(c),
        Command::Chi(c) => chi(c),
        Command::Hilbert(c) => hilbert(c),
        Command::Index(c) => index(c),
        Command::Vanishing(c) => vanishing(c),
        Command::Classify(c) => classify_cmd(c),
        Command::Regcont(c) => regcont(c),
        Command::Sweep(s) => sweep_cmd(s),
        Command::OracleCheck(c) => oracle_check(c),
    }
}

fn validate(c: &Common) -> Outcome {
    let session = Session::open(c)?;
    let ctx = session.ctx();
    let names: Vec<String> = match &c.class {
        Some(n) => vec![n.clone()],
        None => session.classes.iter().map(|(k, _, _)| k.clone()).collect(),
    };
    for n in &names {
        session.class_named(n)?;
    }
    let factors: Vec<Value> = ctx
        .components()
        .iter()
        .map(|comp| {
            json!({
                "name": comp.name(),
                "albert_type": format!("{:?}", comp.albert_type()),
                "t": comp.center_degree(),
                "m": comp.division_degree(),
                "r": comp.mult_r(),
                "g": comp.dim_g(),
                "e": comp.exponent(),
            })
        })
        .collect();
    Ok(report(vec![
        ("valid", json!(true)),
        ("g", json!(ctx.dimension())),
        ("sqrt_deg_phi", rational(ctx.sqrt_deg_phi())),
        ("classes", json!(names)),
        ("factors", Value::Array(factors)),
    ]))
}

fn bundle(session: &Session, det: SymmetricClass, rank: u32) -> std::result::Result<BundleClass, Failure> {
    Ok(BundleClass::new(session.ctx(), det, rank)?)
}

fn chi(c: &Common) -> Outcome {
    let session = Session::open(c)?;
    let (name, class) = session.selected(c)?;
    let ctx = session.ctx();
    let g = ctx.dimension();
    match c.rank {
        None => {
            let data = pnrd_pencil(ctx, &class)?;
            Ok(report(vec![
                ("class", json!(name)),
                ("g", json!(g)),
                ("chi", rational(&(ctx.sqrt_deg_phi() * data.q.coeff(0)))),
            ]))
        }
        Some(r) => {
            let b = bundle(&session, class, r)?;
            let chi_det = ctx.sqrt_deg_phi() * pnrd_pencil(ctx, b.det_class())?.q.coeff(0);
            let inv = bundle_invariants(ctx, &b)?;
            Ok(report(vec![
                ("class", json!(name)),
                ("g", json!(g)),
                ("rank", json!(r)),
                ("chi_det", rational(&chi_det)),
                ("chi_bundle", rational(&inv.chi_bundle)),
                ("ord_k", inv.ord_k.as_ref().map_or(Value::Null, rational)),
            ]))
        }
    }
}

fn hilbert(c: &Common) -> Outcome {
    if c.rank.is_some() {
        return Err(Failure::Usage("hilbert takes a line bundle class; --rank is not supported".into()));
    }
    let session = Session::open(c)?;
    let (name, class) = session.selected(c)?;
    let data = pnrd_pencil(session.ctx(), &class)?;
    Ok(report(vec![
        ("class", json!(name)),
        ("g", json!(session.ctx().dimension())),
        ("q", json!(data.q.to_string())),
        ("q_coeffs", coefficients(&data.q)),
        ("hilbert", json!(data.scaled.to_string())),
        ("hilbert_coeffs", coefficients(&data.scaled)),
        ("positive", json!(data.profile.positive)),
        ("zero", json!(data.profile.zero)),
        ("negative", json!(data.profile.negative)),
    ]))
}

/// Index data of the class, or of `det` with the bundle's Euler
/// characteristic when `--rank` is given.
struct IndexData {
    chi: Rational,
    i: usize,
    dim_k: usize,
    neg: usize,
}

fn index_data(session: &Session, c: &Common, class: SymmetricClass) -> std::result::Result<IndexData, Failure> {
    let ctx = session.ctx();
    let data = pnrd_pencil(ctx, &class)?;
    let chi = match c.rank {
        None => ctx.sqrt_deg_phi() * data.q.coeff(0),
        Some(r) => bundle_invariants(ctx, &bundle(session, class, r)?)?.chi_bundle,
    };
    Ok(IndexData {
        chi,
        i: data.profile.positive,
        dim_k: data.profile.zero,
        neg: data.negative(),
    })
}

fn with_rank(mut pairs: Vec<(&'static str, Value)>, rank: Option<u32>) -> Vec<(&'static str, Value)> {
    if let Some(r) = rank {
        pairs.insert(2, ("rank", json!(r)));
    }
    pairs
}

fn index(c: &Common) -> Outcome {
    let session = Session::open(c)?;
    let (name, class) = session.selected(c)?;
    let d = index_data(&session, c, class)?;
    Ok(report(with_rank(
        vec![
            ("class", json!(name)),
            ("g", json!(session.ctx().dimension())),
            ("i", json!(d.i)),
            ("dimK", json!(d.dim_k)),
            ("neg", json!(d.neg)),
            ("chi", rational(&d.chi)),
        ],
        c.rank,
    )))
}

fn vanishing(c: &Common) -> Outcome {
    let session = Session::open(c)?;
    let (name, class) = session.selected(c)?;
    let g = session.ctx().dimension() as usize;
    let d = index_data(&session, c, class)?;
    let v = VanishingRanges::from_counts(d.i, d.dim_k, g);
    Ok(report(with_rank(
        vec![
            ("class", json!(name)),
            ("g", json!(g)),
            ("i", json!(d.i)),
            ("dimK", json!(d.dim_k)),
            ("neg", json!(d.neg)),
            ("vanish_low", json!(v.vanish_low)),
            ("vanish_high", json!(v.vanish_high)),
        ],
        c.rank,
    )))
}

fn classify_cmd(c: &Common) -> Outcome {
    let session = Session::open(c)?;
    let (name, class) = session.selected(c)?;
    let ctx = session.ctx();
    let mut cl = classify(ctx, &class)?;
    if let Some(r) = c.rank {
        // nondegeneracy, index and weak index are those of det
        cl.chi = bundle_invariants(ctx, &bundle(&session, class, r)?)?.chi_bundle;
    }
    Ok(report(with_rank(
        vec![
            ("class", json!(name)),
            ("g", json!(ctx.dimension())),
            ("chi", rational(&cl.chi)),
            ("i", json!(cl.index_i)),
            ("dimK", json!(cl.dim_k)),
            ("j", json!(cl.weak_index_j)),
            ("label", json!(cl.label.to_string())),
            ("all_vanishing_possible", json!(cl.all_vanishing_possible)),
            ("gv_note", json!(cl.gv_note)),
        ],
        c.rank,
    )))
}

fn regularity_report(name: &str, rank: Option<u32>, r: &RegularityResult) -> Map<String, Value> {
    let table: Vec<Value> = r
        .predicate_table
        .iter()
        .flat_map(|row| {
            row.entries.iter().map(move |e| {
                json!({
                    "m": row.m,
                    "i": e.i,
                    "degenerate": e.degenerate,
                    "positive_roots": e.positive_roots,
                    "holds": e.holds,
                })
            })
        })
        .collect();
    let mut pairs = vec![
        ("m", json!(r.m)),
        ("g", json!(r.g)),
        ("class", json!(name)),
    ];
    if let Some(rank) = rank {
        pairs.push(("rank", json!(rank)));
    }
    pairs.push(("scan_window", json!([r.scan_window.0, r.scan_window.1])));
    pairs.push(("gv_note", json!(r.gv_note)));
    pairs.push(("predicate_table", Value::Array(table)));
    report(pairs)
}

fn regcont(c: &Common) -> Outcome {
    let session = Session::open(c)?;
    let (name, class) = session.selected(c)?;
    let ctx = session.ctx();
    let result = match c.rank {
        None => reg_cont(ctx, &class)?,
        Some(r) => reg_cont_bundle(ctx, &bundle(&session, class, r)?)?,
    };
    Ok(regularity_report(&name, c.rank, &result))
}

fn parse_grid(text: &str) -> std::result::Result<Vec<Rational>, Failure> {
    text.split(',')
        .map(|s| parse_rational(s.trim()).map_err(|e| Failure::Usage(format!("--grid: {e}"))))
        .collect()
}

fn sweep_cmd(s: &SweepArgs) -> Outcome {
    let c = &s.common;
    let grid = parse_grid(&s.grid)?;
    let session = Session::open(c)?;
    let (name, mut base) = session.selected(c)?;
    let mut direction = session.class_named(&s.direction)?;
    let ctx = session.ctx();
    if let Some(r) = c.rank {
        let inv = Rational::new(1.into(), r.into());
        base = ctx.scale(&base, &inv)?;
        direction = ctx.scale(&direction, &inv)?;
    }
    let table = sweep(ctx, &base, &direction, &grid);
    let points: Vec<Value> = table
        .points
        .iter()
        .map(|p| {
            let (m, error) = match &p.result {
                Ok(m) => (json!(m), Value::Null),
                Err(e) => (Value::Null, json!(e.to_string())),
            };
            json!({"s": format_rational(&p.s), "m": m, "error": error})
        })
        .collect();
    let segments: Vec<Value> = table
        .segments
        .iter()
        .map(|seg| {
            json!({
                "from": format_rational(&seg.from),
                "to": format_rational(&seg.to),
                "points": seg.points,
                "m": seg.m,
            })
        })
        .collect();
    Ok(report(with_rank(
        vec![
            ("class", json!(name)),
            ("g", json!(ctx.dimension())),
            ("direction", json!(s.direction)),
            ("points", Value::Array(points)),
            ("segments", Value::Array(segments)),
        ],
        c.rank,
    )))
}

fn oracle_check(c: &Common) -> Outcome {
    if c.rank.is_some() {
        return Err(Failure::Usage("oracle-check compares line bundle classes; --rank is not supported".into()));
    }
    let session = Session::open(c)?;
    let ctx = session.ctx();
    let names: Vec<String> = match &c.class {
        Some(n) => vec![n.clone()],
        None => session.classes.iter().map(|(k, _, _)| k.clone()).collect(),
    };
    let mut all_agree = true;
    let mut checks = Vec::new();
    for name in &names {
        let class = session.class_named(name)?;
        let m = sym_matrix_of(ctx, &class)?;
        debug_assert_eq!(class_of(ctx, &m).as_ref(), Ok(&class));
        let data = pnrd_pencil(ctx, &class)?;
        let chi = ctx.sqrt_deg_phi() * data.q.coeff(0);
        let o_chi = ctx.sqrt_deg_phi() * oracle_chi(&m);
        let inertia = oracle_inertia(&m);
        let reg = reg_cont(ctx, &class)?;
        let o_reg = oracle_regcont(&m, scan_window(&data.q)?)?;
        let agree = chi == o_chi
            && data.profile.positive == inertia.n_minus
            && data.profile.zero == inertia.n_zero
            && reg.m == o_reg;
        all_agree &= agree;
        checks.push(json!({
            "class": name,
            "chi": format_rational(&chi),
            "oracle_chi": format_rational(&o_chi),
            "i": data.profile.positive,
            "oracle_n_minus": inertia.n_minus,
            "dimK": data.profile.zero,
            "oracle_n_zero": inertia.n_zero,
            "m": reg.m,
            "oracle_m": o_reg,
            "agree": agree,
        }));
    }
    if !all_agree {
        return Err(Failure::Computation(Error::OracleDisagreement(
            Value::Array(checks).to_string(),
        )));
    }
    Ok(report(vec![
        ("g", json!(ctx.dimension())),
        ("agree", json!(all_agree)),
        ("checks", Value::Array(checks)),
    ]))
}
