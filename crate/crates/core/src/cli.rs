//! Command-line front end: one job per invocation, rendered as a sectioned
//! text report (`[meta]`, `[result]`, `[trace]`, `[verify]`) or its JSON mirror.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use serde_json::{json, Map, Value};

use crate::determinant::{cdet, rdet, Settings};
use crate::error::{Error, Result};
use crate::format::{parse_any, parse_text, JsonMatrix};
use crate::inverses::{
    core_ep_left_traced, core_ep_right_traced, mp_inverse_traced, preferred_route, projector_p,
    projector_q, wdrazin_hermitian_traced, wdrazin_traced, wdrazin_u_traced, wdrazin_v_traced,
    Product, WeightedPair,
};
use crate::matrix::QMatrix;
use crate::oracle::{verify_system, System, VerificationVerdict};
use crate::quaternion::Quaternion;
use crate::trace::{Trace, TraceValue};
use crate::weighted::{
    wcep_left_traced, wcep_right_traced, wcmp_traced, wdmp_traced, wmpd_traced, Variant,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Mp,
    Projectors,
    Wdrazin,
    CoreEp,
    Wcep,
    Wdmp,
    Wmpd,
    Wcmp,
    Rdet,
    Cdet,
    Rank,
    Index,
    Verify,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Mp => "mp",
            Command::Projectors => "projectors",
            Command::Wdrazin => "wdrazin",
            Command::CoreEp => "core-ep",
            Command::Wcep => "wcep",
            Command::Wdmp => "wdmp",
            Command::Wmpd => "wmpd",
            Command::Wcmp => "wcmp",
            Command::Rdet => "rdet",
            Command::Cdet => "cdet",
            Command::Rank => "rank",
            Command::Index => "index",
            Command::Verify => "verify",
        }
    }

    fn weighted(self) -> bool {
        matches!(
            self,
            Command::Wdrazin | Command::Wcep | Command::Wdmp | Command::Wmpd | Command::Wcmp
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Auto,
    General,
    GeneralU,
    GeneralV,
    HermitianWa,
    HermitianAw,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::Auto => Variant::Auto,
            VariantArg::General => Variant::General,
            VariantArg::GeneralU => Variant::GeneralU,
            VariantArg::GeneralV => Variant::GeneralV,
            VariantArg::HermitianWa => Variant::HermitianWa,
            VariantArg::HermitianAw => Variant::HermitianAw,
        }
    }
}

/// Exact generalized inverses of quaternion matrices.
///
/// Matrix files hold a `m n` header followed by `m` lines of `;`-separated
/// quaternion literals such as `1/2-3*i+k`, or the JSON form
/// `{"rows":m,"cols":n,"data":[["0","i"],...]}`.
#[derive(Debug, Parser)]
#[command(name = "qginv", version)]
pub struct Args {
    /// What to compute.
    #[arg(value_enum)]
    pub command: Command,
    /// Matrix file for A.
    pub a: PathBuf,
    /// Weight matrix file W (n x m); required by the weighted commands.
    #[arg(short, long)]
    pub weight: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "auto")]
    pub variant: VariantArg,
    /// Required by core-ep and wcep.
    #[arg(long, value_enum)]
    pub side: Option<Side>,
    /// Print every named intermediate.
    #[arg(long)]
    pub trace: bool,
    /// Check the result against its characterizing equations.
    #[arg(long)]
    pub verify: bool,
    /// Emit the JSON mirror of the report.
    #[arg(long)]
    pub json: bool,
    /// Largest square dimension a determinantal sum may use.
    #[arg(long, default_value_t = 7)]
    pub max_dim: usize,
    /// Worker threads for determinant evaluation (1 = serial).
    #[arg(long)]
    pub threads: Option<usize>,
    /// Row or column for rdet/cdet (1-based).
    #[arg(long, default_value_t = 1)]
    pub index: usize,
    /// Equation system for `verify`.
    #[arg(long)]
    pub system: Option<String>,
    /// Candidate matrix X for `verify`.
    #[arg(long)]
    pub candidate: Option<PathBuf>,
    /// Write the report here instead of stdout.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

/// A fully specified job.
#[derive(Clone, Debug)]
pub struct JobSpec {
    pub command: Command,
    pub a: PathBuf,
    pub weight: Option<PathBuf>,
    pub variant: Variant,
    pub side: Option<Side>,
    pub trace: bool,
    pub verify: bool,
    pub json: bool,
    pub settings: Settings,
    pub threads: Option<usize>,
    pub index: usize,
    pub system: Option<String>,
    pub candidate: Option<PathBuf>,
    pub output: Option<PathBuf>,
}

impl JobSpec {
    pub fn new(command: Command, a: impl Into<PathBuf>) -> Self {
        JobSpec {
            command,
            a: a.into(),
            weight: None,
            variant: Variant::Auto,
            side: None,
            trace: false,
            verify: false,
            json: false,
            settings: Settings::default(),
            threads: None,
            index: 1,
            system: None,
            candidate: None,
            output: None,
        }
    }
}

impl From<Args> for JobSpec {
    fn from(a: Args) -> Self {
        let parallel = a.threads.is_some_and(|t| t > 1);
        JobSpec {
            command: a.command,
            a: a.a,
            weight: a.weight,
            variant: a.variant.into(),
            side: a.side,
            trace: a.trace,
            verify: a.verify,
            json: a.json,
            settings: Settings {
                max_dim: a.max_dim,
                parallel,
            },
            threads: a.threads,
            index: a.index,
            system: a.system,
            candidate: a.candidate,
            output: a.output,
        }
    }
}

/// What a job produced.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub meta: Vec<(String, String)>,
    pub result: Option<QMatrix>,
    /// Further named result matrices (the second projector).
    pub extra: Vec<(String, QMatrix)>,
    pub value: Option<String>,
    pub trace: Option<Trace>,
    pub verdicts: Vec<VerificationVerdict>,
}

impl Report {
    fn meta(&mut self, key: &str, value: impl ToString) {
        self.meta.push((key.into(), value.to_string()));
    }

    pub fn to_text(&self) -> String {
        let mut s = String::from("[meta]\n");
        for (k, v) in &self.meta {
            let _ = writeln!(s, "{k} = {v}");
        }
        if self.result.is_some() || self.value.is_some() {
            s.push_str("\n[result]\n");
            if let Some(m) = &self.result {
                s.push_str(&m.to_string());
            }
            if let Some(v) = &self.value {
                let _ = writeln!(s, "value = {v}");
            }
        }
        for (name, m) in &self.extra {
            let _ = write!(s, "\n[result.{name}]\n{m}");
        }
        if let Some(t) = &self.trace {
            s.push_str("\n[trace]\n");
            for step in t.steps() {
                match &step.value {
                    TraceValue::Matrix(m) => {
                        let _ = write!(s, "{} = {}\n{m}", step.name, step.formula);
                    }
                    TraceValue::Scalar(r) => {
                        let _ = writeln!(s, "{} = {r}    # {}", step.name, step.formula);
                    }
                    TraceValue::Count(c) => {
                        let _ = writeln!(s, "{} = {c}    # {}", step.name, step.formula);
                    }
                    TraceValue::Text(v) => {
                        let _ = writeln!(s, "{} = {v}", step.name);
                    }
                }
            }
        }
        if !self.verdicts.is_empty() {
            s.push_str("\n[verify]\n");
            for v in &self.verdicts {
                s.push_str(&v.to_string());
            }
        }
        s
    }

    pub fn to_json(&self) -> Value {
        let meta: Map<String, Value> = self
            .meta
            .iter()
            .map(|(k, v)| (k.clone(), json!(v)))
            .collect();
        let mut out = json!({ "meta": meta });
        if let Some(m) = &self.result {
            out["result"] = json!(JsonMatrix::from(m));
        }
        if let Some(v) = &self.value {
            out["value"] = json!(v);
        }
        for (name, m) in &self.extra {
            out[format!("result.{name}")] = json!(JsonMatrix::from(m));
        }
        if let Some(t) = &self.trace {
            let steps: Vec<Value> = t
                .steps()
                .iter()
                .map(|st| {
                    let value = match &st.value {
                        TraceValue::Matrix(m) => json!(JsonMatrix::from(m)),
                        TraceValue::Scalar(r) => json!(r.to_string()),
                        TraceValue::Count(c) => json!(c),
                        TraceValue::Text(v) => json!(v),
                    };
                    json!({ "name": st.name, "formula": st.formula, "value": value })
                })
                .collect();
            out["trace"] = json!(steps);
        }
        if !self.verdicts.is_empty() {
            let v: Vec<Value> = self
                .verdicts
                .iter()
                .map(|v| {
                    let checks: Vec<Value> = v
                        .checks
                        .iter()
                        .map(|c| json!({ "label": c.label, "holds": c.holds, "residual": c.residual.to_string() }))
                        .collect();
                    json!({ "system": v.system, "holds": v.all_hold(), "checks": checks })
                })
                .collect();
            out["verify"] = json!(v);
        }
        out
    }

    pub fn verified(&self) -> bool {
        self.verdicts.iter().all(VerificationVerdict::all_hold)
    }
}

/// Pulls the matrix out of a `[section]` of a text report.
pub fn section_matrix(report: &str, section: &str) -> Result<QMatrix> {
    let header = format!("[{section}]");
    let body: String = report
        .lines()
        .skip_while(|l| l.trim() != header)
        .skip(1)
        .take_while(|l| !l.starts_with('['))
        .filter(|l| !l.starts_with("value ="))
        .map(|l| format!("{l}\n"))
        .collect();
    parse_text(&body)
}

/// Exit status of a finished job.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => 1,
        Error::InternalOracleFailure(_) => 3,
        _ => 2,
    }
}

fn read_matrix(path: &PathBuf) -> Result<QMatrix> {
    let src = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_any(&src)
}

fn usage(msg: &str) -> Error {
    Error::Parse(msg.into())
}

fn weighted_pair(spec: &JobSpec, a: QMatrix) -> Result<WeightedPair> {
    let w = read_matrix(
        spec.weight
            .as_ref()
            .ok_or_else(|| usage("this command needs --weight"))?,
    )?;
    WeightedPair::new(a, w)
}

fn check(
    report: &mut Report,
    spec: &JobSpec,
    system: System,
    a: &QMatrix,
    w: Option<&QMatrix>,
    x: &QMatrix,
) -> Result<()> {
    if spec.verify {
        report.verdicts.push(verify_system(system, a, w, x)?);
    }
    Ok(())
}

fn record_pair(report: &mut Report, pair: &WeightedPair) {
    report.meta("m", pair.m());
    report.meta("n", pair.n());
    report.meta("r", pair.rank_a());
    report.meta("ind_wa", pair.index_u());
    report.meta("ind_aw", pair.index_v());
    report.meta("k", pair.k());
    report.meta("rank_wa_k", pair.rank_u_k());
    report.meta("rank_aw_k", pair.rank_v_k());
}

fn execute(spec: &JobSpec, report: &mut Report) -> Result<()> {
    let cfg = &spec.settings;
    if spec.weight.is_some() && !spec.command.weighted() && spec.command != Command::Verify {
        return Err(usage(
            "--weight only applies to weighted commands and verify",
        ));
    }
    let a = read_matrix(&spec.a)?;
    let mut t = Trace::new();
    match spec.command {
        Command::Mp => {
            report.meta("r", a.rank());
            let x = mp_inverse_traced(&a, preferred_route(&a), cfg, &mut t)?;
            check(report, spec, System::Penrose, &a, None, &x)?;
            report.result = Some(x);
        }
        Command::Projectors => {
            report.meta("r", a.rank());
            let p = projector_p(&a, cfg)?;
            let q = projector_q(&a, cfg)?;
            check(report, spec, System::ProjectorP, &a, None, &p)?;
            check(report, spec, System::ProjectorQ, &a, None, &q)?;
            report.result = Some(p);
            report.extra.push(("Q".into(), q));
        }
        Command::CoreEp => {
            let side = spec
                .side
                .ok_or_else(|| usage("core-ep needs --side left|right"))?;
            report.meta("side", format!("{side:?}").to_lowercase());
            let (x, sys) = match side {
                Side::Right => (core_ep_right_traced(&a, cfg, &mut t)?, System::CoreEpRight),
                Side::Left => (core_ep_left_traced(&a, cfg, &mut t)?, System::CoreEpLeft),
            };
            report.meta("ind", a.index_of()?);
            check(report, spec, sys, &a, None, &x)?;
            report.result = Some(x);
        }
        Command::Rdet | Command::Cdet => {
            let v = if spec.command == Command::Rdet {
                rdet(spec.index, &a, cfg)?
            } else {
                cdet(spec.index, &a, cfg)?
            };
            report.meta("anchor", spec.index);
            report.value = Some(v.to_string());
        }
        Command::Rank => report.value = Some(a.rank().to_string()),
        Command::Index => report.value = Some(a.index_of()?.to_string()),
        Command::Verify => {
            let name = spec
                .system
                .as_deref()
                .ok_or_else(|| usage("verify needs --system"))?;
            let system: System = name.parse()?;
            let x = read_matrix(
                spec.candidate
                    .as_ref()
                    .ok_or_else(|| usage("verify needs --candidate"))?,
            )?;
            let w = spec.weight.as_ref().map(read_matrix).transpose()?;
            report
                .verdicts
                .push(verify_system(system, &a, w.as_ref(), &x)?);
            report.result = Some(x);
        }
        Command::Wdrazin | Command::Wcep | Command::Wdmp | Command::Wmpd | Command::Wcmp => {
            let pair = weighted_pair(spec, a.clone())?;
            record_pair(report, &pair);
            let (x, sys) = match spec.command {
                Command::Wdrazin => {
                    let x = match spec.variant {
                        Variant::Auto => wdrazin_traced(&pair, cfg, &mut t)?,
                        Variant::General if pair.n() <= pair.m() => {
                            wdrazin_u_traced(&pair, cfg, &mut t)?
                        }
                        Variant::General => wdrazin_v_traced(&pair, cfg, &mut t)?,
                        Variant::GeneralU => wdrazin_u_traced(&pair, cfg, &mut t)?,
                        Variant::GeneralV => wdrazin_v_traced(&pair, cfg, &mut t)?,
                        Variant::HermitianWa => {
                            wdrazin_hermitian_traced(&pair, Product::Wa, cfg, &mut t)?
                        }
                        Variant::HermitianAw => {
                            wdrazin_hermitian_traced(&pair, Product::Aw, cfg, &mut t)?
                        }
                    };
                    (x, System::WeightedDrazin)
                }
                Command::Wcep => match spec
                    .side
                    .ok_or_else(|| usage("wcep needs --side left|right"))?
                {
                    Side::Right => (wcep_right_traced(&pair, cfg, &mut t)?, System::WcepRight),
                    Side::Left => (wcep_left_traced(&pair, cfg, &mut t)?, System::WcepLeft),
                },
                Command::Wdmp => (wdmp_traced(&pair, spec.variant, cfg, &mut t)?, System::Wdmp),
                Command::Wmpd => (wmpd_traced(&pair, spec.variant, cfg, &mut t)?, System::Wmpd),
                _ => (wcmp_traced(&pair, spec.variant, cfg, &mut t)?, System::Wcmp),
            };
            if let Some(v) = t.get_text("variant") {
                report.meta("variant", v);
            }
            check(report, spec, sys, pair.a(), Some(pair.w()), &x)?;
            report.result = Some(x);
        }
    }
    if spec.trace {
        report.trace = Some(t);
    }
    Ok(())
}

fn run_job(spec: &JobSpec) -> (i32, Report) {
    let mut report = Report::default();
    report.meta("command", spec.command.name());
    let status = match execute(spec, &mut report) {
        Ok(()) if report.verified() => 0,
        Ok(()) => 3,
        Err(e) => {
            report.meta("error", &e);
            exit_code(&e)
        }
    };
    let label = match status {
        0 => "ok",
        3 => "verification failed",
        _ => "error",
    };
    report.meta("status", label);
    (status, report)
}

/// Runs a job; returns the exit status and the rendered report.
pub fn run(spec: &JobSpec) -> (i32, String) {
    let job = || run_job(spec);
    let (status, report) = match spec.threads {
        Some(n) if n > 0 => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(job),
            Err(_) => job(),
        },
        _ => job(),
    };
    let rendered = if spec.json {
        format!("{:#}\n", report.to_json())
    } else {
        report.to_text()
    };
    (status, rendered)
}

/// Entry point shared by the binary: parses `argv`, runs, writes the report.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let spec = JobSpec::from(args);
    let (status, report) = run(&spec);
    match &spec.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &report) {
                eprintln!("cannot write {}: {e}", path.display());
                return 1;
            }
        }
        None => print!("{report}"),
    }
    status
}

/// A scalar result as a quaternion, for callers that read `value = ...` lines back.
pub fn parse_value(report: &str) -> Option<Quaternion> {
    report
        .lines()
        .find_map(|l| l.strip_prefix("value = "))
        .and_then(|v| v.parse().ok())
}
