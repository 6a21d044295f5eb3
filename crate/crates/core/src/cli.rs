//! The `schurdet` command line. Every subcommand prints JSON lines unless `--pretty` is given.

use std::collections::BTreeMap;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::identities::{
    verify_attach_rule, verify_converse, verify_factorial, verify_general_hg, verify_giambelli,
    verify_hamel_goulden, verify_kreiman, verify_kreiman_straight, verify_lp, verify_lp_straight,
    verify_main, verify_outer_strip_formula, FactorialForm, IdentityReport, KreimanLhs, TheoremId,
    Verdict,
};
use crate::random::{self, SchurRng};
use crate::render::{render_cells, render_decomposition, render_shape};
use crate::schur::{classical_of, schur9, schur9_shape};
use crate::shapes::{Cell, CellSet, Partition, SkewShape};
use crate::strips::{
    decompose_shape, glue, inner_strip, kreiman, lascoux_pragacz, outer_strip, BorderStrip,
    CompatWindow,
};

#[derive(Parser, Debug)]
#[command(
    name = "schurdet",
    version,
    about = "Exact checks of Schur determinant identities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Verify an identity on one instance or on seeded random instances.
    Verify(VerifyArgs),
    /// Decompose a skew shape into border strips.
    Decompose(DecomposeArgs),
    /// Draw a shape as ASCII.
    Render(RenderArgs),
    /// The ninth variation of a skew shape, or its classical value.
    Schur(SchurArgs),
    /// Seeded random instances of every identity.
    RandomSuite(SuiteArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum UpperLhs {
    Swapped,
    Literal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Window {
    Exact,
    Widened,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Form {
    Corrected,
    Original,
}

#[derive(Args, Clone, Debug)]
pub struct Options {
    /// Human-readable output instead of JSON lines.
    #[arg(long)]
    pub pretty: bool,
    /// Include `elapsed_ms` in reports.
    #[arg(long)]
    pub timing: bool,
    /// Left-hand side of the upper Kreiman form.
    #[arg(long, value_enum, default_value_t = UpperLhs::Swapped)]
    pub kreiman_upper: UpperLhs,
    /// Content window used for partition compatibility.
    #[arg(long, value_enum, default_value_t = Window::Widened)]
    pub window: Window,
    /// Determinant used for the factorial Schur identity.
    #[arg(long, value_enum, default_value_t = Form::Corrected)]
    pub factorial: Form,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            pretty: false,
            timing: false,
            kreiman_upper: UpperLhs::Swapped,
            window: Window::Widened,
            factorial: Form::Corrected,
        }
    }
}

impl Options {
    fn upper(&self) -> KreimanLhs {
        match self.kreiman_upper {
            UpperLhs::Swapped => KreimanLhs::Swapped,
            UpperLhs::Literal => KreimanLhs::Literal,
        }
    }

    fn window(&self) -> CompatWindow {
        match self.window {
            Window::Exact => CompatWindow::Exact,
            Window::Widened => CompatWindow::Widened,
        }
    }

    fn form(&self) -> FactorialForm {
        match self.factorial {
            Form::Corrected => FactorialForm::Corrected,
            Form::Original => FactorialForm::Original,
        }
    }
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// thm3.3, thm4.2, thm4.3, cor4.4, cor4.5, cor4.6, cor4.7, thm5.3, cor5.7, cor5.9, lem5.10 or thm6.1
    pub id: String,
    /// Instance as a JSON object.
    #[arg(long, conflicts_with = "random", required_unless_present = "random")]
    pub instance: Option<String>,
    #[arg(long)]
    pub random: bool,
    #[arg(long, default_value_t = 10)]
    pub count: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 8)]
    pub max_size: i64,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CuttingStrip {
    Outer,
    Inner,
    Custom,
}

#[derive(Args, Debug)]
pub struct DecomposeArgs {
    /// `[6,6,6,3,3]`, `{"outer":[..],"inner":[..]}` or `{"lambda":[..],"mu":[..]}`.
    #[arg(long)]
    pub shape: String,
    #[arg(long, value_enum, default_value_t = CuttingStrip::Outer)]
    pub cutting_strip: CuttingStrip,
    /// Cells of a custom cutting strip, `[[i,j],...]`.
    #[arg(long, required_if_eq("cutting_strip", "custom"))]
    pub strip: Option<String>,
    #[arg(long)]
    pub pretty: bool,
}

#[derive(Args, Debug)]
pub struct RenderArgs {
    /// A skew shape, as for `decompose`.
    #[arg(long, required_unless_present_any = ["cells", "glue"])]
    pub shape: Option<String>,
    /// A placed cell set `[[i,j],...]`.
    #[arg(long)]
    pub cells: Option<String>,
    /// `{"gamma":[[i,j],...],"nu":[..],"lambda":[..]}`, drawn as the glued shape.
    #[arg(long)]
    pub glue: Option<String>,
    /// Show contents instead of `#`.
    #[arg(long)]
    pub contents: bool,
    #[arg(long)]
    pub pretty: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Spec {
    Ninth,
    Classical,
}

#[derive(Args, Debug)]
pub struct SchurArgs {
    #[arg(long)]
    pub shape: String,
    /// Number of rows of the determinant; defaults to the length of the outer partition.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, value_enum, default_value_t = Spec::Ninth)]
    pub spec: Spec,
    /// Number of variables; must match `--at` when both are given.
    #[arg(long)]
    pub vars: Option<usize>,
    /// Comma-separated rationals, e.g. `1/2,3,-1`.
    #[arg(long, allow_hyphen_values = true)]
    pub at: Option<String>,
}

#[derive(Args, Debug)]
pub struct SuiteArgs {
    #[arg(long, default_value_t = 10)]
    pub count: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 8)]
    pub max_size: i64,
    /// Comma-separated identity ids; all when absent.
    #[arg(long)]
    pub only: Option<String>,
    #[command(flatten)]
    pub opts: Options,
}

pub fn parse_json(s: &str) -> Result<Value> {
    serde_json::from_str(s).map_err(|e| Error::Input(format!("malformed JSON: {e}")))
}

fn decode<T: DeserializeOwned>(v: &Value, what: &str) -> Result<T> {
    serde_json::from_value(v.clone()).map_err(|e| Error::Input(format!("{what}: {e}")))
}

fn get<'a>(inst: &'a Value, key: &str) -> Result<&'a Value> {
    inst.get(key)
        .ok_or_else(|| Error::Input(format!("missing key '{key}'")))
}

fn partition(inst: &Value, key: &str) -> Result<Partition> {
    decode(get(inst, key)?, key)
}

fn partition_or_empty(inst: &Value, key: &str) -> Result<Partition> {
    inst.get(key)
        .map_or(Ok(Partition::empty()), |v| decode(v, key))
}

fn ints(inst: &Value, key: &str) -> Result<Vec<i64>> {
    decode(get(inst, key)?, key)
}

fn ints_or_empty(inst: &Value, key: &str) -> Result<Vec<i64>> {
    inst.get(key).map_or(Ok(Vec::new()), |v| decode(v, key))
}

fn usize_opt(inst: &Value, key: &str) -> Result<Option<usize>> {
    inst.get(key).map(|v| decode(v, key)).transpose()
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Input(format!("'{s}' is not a rational number"));
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn rational(v: &Value) -> Result<BigRational> {
    match v {
        Value::Number(n) => parse_rational(&n.to_string()),
        Value::String(s) => parse_rational(s),
        _ => Err(Error::Input(format!("{v} is not a rational number"))),
    }
}

fn rationals(v: &Value) -> Result<Vec<BigRational>> {
    v.as_array()
        .ok_or_else(|| Error::Input(format!("{v} is not a list")))?
        .iter()
        .map(rational)
        .collect()
}

/// `x` when given, else `trials` points in `d` variables drawn from `seed`.
fn points(inst: &Value, d: usize) -> Result<Vec<Vec<BigRational>>> {
    if let Some(x) = inst.get("x") {
        let pts = x
            .as_array()
            .ok_or_else(|| Error::Input("x must be a list of points".into()))?
            .iter()
            .map(rationals)
            .collect::<Result<Vec<_>>>()?;
        return Ok(pts);
    }
    let trials = usize_opt(inst, "trials")?.unwrap_or(5);
    let seed: u64 = inst
        .get("seed")
        .map(|v| decode(v, "seed"))
        .transpose()?
        .unwrap_or(0);
    Ok(random::rational_points(&mut random::rng(seed), trials, d))
}

/// An array is a straight shape; objects use `outer`/`inner` or `lambda`/`mu`.
pub fn parse_skew(v: &Value) -> Result<SkewShape> {
    if v.is_array() {
        return Ok(SkewShape::straight(decode(v, "shape")?));
    }
    if v.get("outer").is_some() {
        return SkewShape::new(partition(v, "outer")?, partition_or_empty(v, "inner")?);
    }
    SkewShape::new(partition(v, "lambda")?, partition_or_empty(v, "mu")?)
}

fn strip_or_outer(inst: &Value, key: &str, lambda: &Partition) -> Result<BorderStrip> {
    match inst.get(key) {
        Some(v) => decode(v, key),
        None => outer_strip(lambda).ok_or_else(|| Error::Precondition("λ is empty".into())),
    }
}

fn show_points(pts: &[Vec<BigRational>]) -> Value {
    json!(pts
        .iter()
        .map(|x| x.iter().map(|v| v.to_string()).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

/// Run one identity check on a JSON instance.
pub fn run_instance(
    theorem: TheoremId,
    inst: &Value,
    opts: &Options,
) -> Result<Vec<IdentityReport>> {
    let triple = || -> Result<(Partition, Partition, Partition, Option<usize>)> {
        Ok((
            partition(inst, "lambda")?,
            partition_or_empty(inst, "mu")?,
            partition_or_empty(inst, "nu")?,
            usize_opt(inst, "n")?,
        ))
    };
    let pair = || -> Result<(Partition, Partition)> {
        Ok((partition(inst, "lambda")?, partition_or_empty(inst, "mu")?))
    };
    Ok(match theorem {
        TheoremId::Main => {
            let (l, m, n, k) = triple()?;
            verify_main(&l, &m, &n, k)?
        }
        TheoremId::LascouxPragacz => {
            let (l, m, n, k) = triple()?;
            verify_lp(&l, &m, &n, k)?
        }
        TheoremId::Kreiman => {
            let (l, m, n, k) = triple()?;
            verify_kreiman(&l, &m, &n, k, opts.upper())?
        }
        TheoremId::OuterStrip => {
            let (l, m) = pair()?;
            vec![verify_outer_strip_formula(&l, &m)?]
        }
        TheoremId::LpStraight => {
            let (l, m) = pair()?;
            vec![verify_lp_straight(&l, &m)?]
        }
        TheoremId::KreimanStraight => {
            let (l, m) = pair()?;
            vec![verify_kreiman_straight(&l, &m)?]
        }
        TheoremId::Factorial => {
            let (l, m) = pair()?;
            let d = usize_opt(inst, "d")?.unwrap_or(l.len().max(1));
            let a = rationals(get(inst, "a")?)?;
            let pts = points(inst, d)?;
            vec![verify_factorial(&l, &m, &a, &pts, opts.form())?]
        }
        TheoremId::GeneralHamelGoulden => {
            let (l, m) = pair()?;
            let nu = partition(inst, "nu")?;
            let gamma = strip_or_outer(inst, "gamma", &l)?;
            vec![verify_general_hg(&nu, &l, &m, &gamma, opts.window())?]
        }
        TheoremId::HamelGoulden => {
            let (l, m) = pair()?;
            let gamma = strip_or_outer(inst, "gamma", &l)?;
            vec![verify_hamel_goulden(&l, &m, &gamma)?]
        }
        TheoremId::Giambelli => vec![verify_giambelli(
            &ints(inst, "a")?,
            &ints(inst, "b")?,
            &ints_or_empty(inst, "c")?,
            &ints_or_empty(inst, "d")?,
        )?],
        TheoremId::AttachRule => {
            vec![verify_attach_rule(
                &parse_skew(get(inst, "alpha")?)?,
                &parse_skew(get(inst, "beta")?)?,
            )?]
        }
        TheoremId::Converse => {
            let alpha = parse_skew(get(inst, "alpha")?)?;
            let d = usize_opt(inst, "d")?.unwrap_or(3);
            let pts = points(inst, d)?;
            vec![verify_converse(
                &alpha,
                &ints(inst, "a")?,
                &ints(inst, "b")?,
                &pts,
            )?]
        }
    })
}

fn top_right(cells: &CellSet) -> Option<Cell> {
    let top = cells.iter().map(|c| c.row).min()?;
    cells
        .iter()
        .filter(|c| c.row == top)
        .max_by_key(|c| c.col)
        .copied()
}

fn bottom_left(cells: &CellSet) -> Option<Cell> {
    let bottom = cells.iter().map(|c| c.row).max()?;
    cells
        .iter()
        .filter(|c| c.row == bottom)
        .min_by_key(|c| c.col)
        .copied()
}

/// `β` moved so the content of its bottom-left corner follows the top-right corner of `α`.
fn retarget(alpha: &SkewShape, beta: &SkewShape) -> Result<SkewShape> {
    let (a, b) = (alpha.cells(), beta.cells());
    let (Some(x), Some(y)) = (top_right(&a), bottom_left(&b)) else {
        return Ok(beta.clone());
    };
    let delta = x.content() + 1 - y.content();
    let moved = if delta >= 0 {
        b.translate(0, delta)
    } else {
        b.translate(-delta, 0)
    };
    moved.to_skew_shape()
}

fn frobenius_blocks<R: Rng>(rng: &mut R, r: usize, s: usize) -> (Vec<i64>, Vec<i64>) {
    let mut pool: Vec<i64> = (0..=5).collect();
    pool.shuffle(rng);
    let mut v: Vec<i64> = pool[..r + s].to_vec();
    v.sort_unstable_by(|a, b| b.cmp(a));
    (v[..r].to_vec(), v[r..].to_vec())
}

/// A seeded random instance for `theorem` with shapes of roughly `max_size` cells.
pub fn random_instance(theorem: TheoremId, rng: &mut SchurRng, max_size: i64) -> Value {
    let m = max_size.max(1);
    match theorem {
        TheoremId::Main => {
            let n = rng.gen_range(1..=3);
            let parts: Vec<Partition> = (0..3).map(|_| random::partition(rng, m, n, m)).collect();
            json!({ "lambda": parts[0], "mu": parts[1], "nu": parts[2], "n": n })
        }
        TheoremId::LascouxPragacz | TheoremId::Kreiman => {
            let l = random::partition(rng, m, 4, 5);
            let mu = random::subpartition(rng, &l);
            let nu = random::partition(rng, m, 4, 5);
            json!({ "lambda": l, "mu": mu, "nu": nu })
        }
        TheoremId::OuterStrip | TheoremId::LpStraight | TheoremId::KreimanStraight => {
            let l = random::partition(rng, m + 2, 5, 6);
            let mu = random::subpartition(rng, &l);
            json!({ "lambda": l, "mu": mu })
        }
        TheoremId::Factorial => {
            let d: usize = rng.gen_range(1..=3);
            let l = random::partition(rng, m.min(7), d, 4);
            let mu = random::subpartition(rng, &l);
            let need = (l.part(1).max(0) as usize + 2 * d + 2).max(4);
            let a = random::integer_parameters(rng, need);
            let x = random::rational_points(rng, 3, d);
            json!({
                "lambda": l,
                "mu": mu,
                "d": d,
                "a": a.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                "x": show_points(&x),
            })
        }
        TheoremId::GeneralHamelGoulden => {
            let h = random::hg_instance(rng, m + 4);
            json!({ "nu": h.nu, "lambda": h.lambda, "mu": h.mu, "gamma": h.gamma })
        }
        TheoremId::HamelGoulden => loop {
            let l = random::partition(rng, m + 2, 5, 6);
            let Some((lo, hi)) = l.content_range() else {
                continue;
            };
            let mu = random::subpartition(rng, &l);
            let (e1, e2) = (rng.gen_range(0..=2), rng.gen_range(0..=2));
            let gamma = random::border_strip(rng, lo - e1, hi + e2);
            break json!({ "lambda": l, "mu": mu, "gamma": gamma });
        },
        TheoremId::Giambelli => {
            let (r, s) = (rng.gen_range(0..=3), rng.gen_range(0..=2));
            let (a, c) = frobenius_blocks(rng, r, s);
            let (b, d) = frobenius_blocks(rng, r, s);
            json!({ "a": a, "b": b, "c": c, "d": d })
        }
        TheoremId::AttachRule => {
            let half = (m / 2).max(1);
            let alpha = random::connected_skew(rng, 3, 4, half);
            let beta = random::connected_skew(rng, 3, 4, half);
            let beta = retarget(&alpha, &beta).unwrap_or(beta);
            json!({ "alpha": alpha, "beta": beta })
        }
        TheoremId::Converse => {
            let c = random::converse_instance(rng, m + 2, 3);
            let x = random::rational_points(rng, 5, 3);
            json!({ "alpha": c.alpha, "a": c.a, "b": c.b, "d": 3, "x": show_points(&x) })
        }
    }
}

/// Tally of one run; decides the exit code.
#[derive(Clone, Debug, Default)]
pub struct Tally {
    pub counts: BTreeMap<String, BTreeMap<&'static str, usize>>,
    pub failed: bool,
    pub input_error: bool,
}

impl Tally {
    fn bump(&mut self, theorem: TheoremId, key: &'static str) {
        *self
            .counts
            .entry(theorem.id().to_string())
            .or_default()
            .entry(key)
            .or_default() += 1;
    }

    pub fn exit_code(&self) -> i32 {
        if self.failed {
            1
        } else if self.input_error {
            2
        } else {
            0
        }
    }
}

fn verdict_key(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "pass",
        Verdict::Fail => "fail",
        Verdict::TrivialPass => "trivial_pass",
        Verdict::Zero => "zero",
    }
}

fn emit_outcome(
    out: &mut dyn Write,
    theorem: TheoremId,
    instance: &Value,
    outcome: Result<Vec<IdentityReport>>,
    opts: &Options,
    tally: &mut Tally,
) -> std::io::Result<()> {
    match outcome {
        Ok(reports) => {
            for mut r in reports {
                if !opts.timing {
                    r.elapsed_ms = None;
                }
                tally.bump(theorem, verdict_key(r.verdict));
                tally.failed |= r.verdict == Verdict::Fail;
                if opts.pretty {
                    let ms = r.elapsed_ms.map(|t| format!(" {t}ms")).unwrap_or_default();
                    writeln!(
                        out,
                        "{:<8} {:<10} k={:<2} {:<12?}{} {}",
                        r.theorem.id(),
                        r.form,
                        r.k,
                        r.verdict,
                        ms,
                        r.instance
                    )?;
                } else {
                    writeln!(
                        out,
                        "{}",
                        serde_json::to_string(&r).expect("reports serialize")
                    )?;
                }
            }
        }
        Err(e) => {
            let unavailable = matches!(e, Error::ConstructionUnavailable(_));
            tally.bump(theorem, if unavailable { "unavailable" } else { "error" });
            tally.input_error |= !unavailable;
            let line = json!({
                "theorem": theorem,
                "instance": instance,
                "error": { "kind": e.kind(), "message": e.to_string() },
            });
            if opts.pretty {
                writeln!(out, "{:<8} {} {}", theorem.id(), e.kind(), e)?;
            } else {
                writeln!(out, "{line}")?;
            }
        }
    }
    Ok(())
}

fn run_batch(
    out: &mut dyn Write,
    jobs: Vec<(TheoremId, Value)>,
    opts: &Options,
    tally: &mut Tally,
) -> std::io::Result<()> {
    let results: Vec<Result<Vec<IdentityReport>>> = jobs
        .par_iter()
        .map(|(t, inst)| run_instance(*t, inst, opts))
        .collect();
    for ((t, inst), res) in jobs.iter().zip(results) {
        emit_outcome(out, *t, inst, res, opts, tally)?;
    }
    Ok(())
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<Tally> {
    let theorem: TheoremId = args.id.parse()?;
    let mut tally = Tally::default();
    let jobs = match &args.instance {
        Some(s) => vec![(theorem, parse_json(s)?)],
        None => {
            let mut rng = random::rng(args.seed);
            (0..args.count)
                .map(|_| (theorem, random_instance(theorem, &mut rng, args.max_size)))
                .collect()
        }
    };
    run_batch(out, jobs, &args.opts, &mut tally).map_err(io_error)?;
    Ok(tally)
}

fn cmd_suite(args: &SuiteArgs, out: &mut dyn Write) -> Result<Tally> {
    let ids: Vec<TheoremId> = match &args.only {
        Some(s) => s
            .split(',')
            .map(|x| x.trim().parse())
            .collect::<Result<_>>()?,
        None => TheoremId::ALL.to_vec(),
    };
    let mut rng = random::rng(args.seed);
    let mut jobs = Vec::new();
    for &t in &ids {
        for _ in 0..args.count {
            jobs.push((t, random_instance(t, &mut rng, args.max_size)));
        }
    }
    let mut tally = Tally::default();
    run_batch(out, jobs, &args.opts, &mut tally).map_err(io_error)?;
    writeln!(out, "{}", json!({ "summary": tally.counts })).map_err(io_error)?;
    Ok(tally)
}

fn io_error(e: std::io::Error) -> Error {
    Error::Input(format!("write failed: {e}"))
}

fn cmd_decompose(args: &DecomposeArgs, out: &mut dyn Write) -> Result<()> {
    let s = parse_skew(&parse_json(&args.shape)?)?;
    let (gamma, d) = match args.cutting_strip {
        CuttingStrip::Outer => (outer_strip(&s.outer), lascoux_pragacz(&s)?),
        CuttingStrip::Inner => (inner_strip(&s)?, kreiman(&s)?),
        CuttingStrip::Custom => {
            let text = args
                .strip
                .as_deref()
                .ok_or_else(|| Error::Input("--strip is required".into()))?;
            let g: BorderStrip = decode(&parse_json(text)?, "strip")?;
            let d = decompose_shape(&s, &g)?;
            (Some(g), d)
        }
    };
    let diagram = render_decomposition(&s, &d);
    if args.pretty {
        write!(out, "{diagram}").map_err(io_error)?;
    } else {
        let line = json!({ "shape": s, "cutting_strip": gamma, "k": d.len(), "decomposition": d, "diagram": diagram });
        writeln!(out, "{line}").map_err(io_error)?;
    }
    Ok(())
}

fn cmd_render(args: &RenderArgs, out: &mut dyn Write) -> Result<()> {
    let (diagram, shape) = if let Some(g) = &args.glue {
        let v = parse_json(g)?;
        let gamma: BorderStrip = decode(get(&v, "gamma")?, "gamma")?;
        let glued = glue(&gamma, &partition(&v, "nu")?, &partition(&v, "lambda")?)?;
        let cells = glued.cells.normalized();
        (render_cells(&cells, args.contents), json!(cells))
    } else if let Some(c) = &args.cells {
        let cells: CellSet = decode(&parse_json(c)?, "cells")?;
        (render_cells(&cells, args.contents), json!(cells))
    } else {
        let text = args
            .shape
            .as_deref()
            .ok_or_else(|| Error::Input("--shape is required".into()))?;
        let s = parse_skew(&parse_json(text)?)?;
        (render_shape(&s, args.contents), json!(s))
    };
    if args.pretty {
        write!(out, "{diagram}").map_err(io_error)?;
    } else {
        writeln!(out, "{}", json!({ "shape": shape, "diagram": diagram })).map_err(io_error)?;
    }
    Ok(())
}

fn cmd_schur(args: &SchurArgs, out: &mut dyn Write) -> Result<()> {
    let s = parse_skew(&parse_json(&args.shape)?)?;
    let poly = match args.n {
        Some(n) => schur9(&s.outer, &s.inner, n)?,
        None => schur9_shape(&s)?,
    };
    let line = match args.spec {
        Spec::Ninth => {
            json!({ "shape": s, "spec": "ninth", "poly": poly.to_string(), "fingerprint": poly.fingerprint() })
        }
        Spec::Classical => {
            let collapsed = poly.collapse();
            match &args.at {
                Some(at) => {
                    let x = at
                        .split(',')
                        .map(parse_rational)
                        .collect::<Result<Vec<_>>>()?;
                    if let Some(d) = args.vars {
                        if d != x.len() {
                            return Err(Error::Input(format!(
                                "--vars {d} but {} values given",
                                x.len()
                            )));
                        }
                    }
                    let value = classical_of(&poly, &x)?;
                    json!({ "shape": s, "spec": "classical", "x": at.split(',').collect::<Vec<_>>(), "value": value.to_string() })
                }
                None => {
                    json!({ "shape": s, "spec": "classical", "poly": collapsed.to_string(), "fingerprint": collapsed.fingerprint() })
                }
            }
        }
    };
    writeln!(out, "{line}").map_err(io_error)?;
    Ok(())
}

/// Run a parsed command; returns the exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match &cli.command {
        Command::Verify(a) => cmd_verify(a, out).map(|t| t.exit_code()),
        Command::RandomSuite(a) => cmd_suite(a, out).map(|t| t.exit_code()),
        Command::Decompose(a) => cmd_decompose(a, out).map(|_| 0),
        Command::Render(a) => cmd_render(a, out).map(|_| 0),
        Command::Schur(a) => cmd_schur(a, out).map(|_| 0),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(
                err,
                "{}",
                json!({ "error": { "kind": e.kind(), "message": e.to_string() } })
            );
            2
        }
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var("SCHURDET_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global();
    }
}

pub fn main() -> i32 {
    configure_threads();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    run(&cli, &mut out, &mut std::io::stderr())
}
