//! Command-line front end: build shadows, compute invariants, run Volume
//! Conjecture scans, and run the verification suite.
//!
//! All outputs are deterministic across runs and thread counts: symbolic
//! results are exact canonical forms, and numeric sums reduce in a fixed
//! order at a fixed precision.

pub mod verify;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::builders::{
    diagram_to_shadow, tetrahedron_shadow, trefoil_collapsed_shadow, trefoil_diagram_shadow,
    universal_graph_c1_alt, universal_shadow, universal_shadow_canonical, unknot_shadow,
    PlanarDiagram,
};
use crate::qring::{EvalOutcome, NumCtx, RationalFunc, DEFAULT_PRECISION, MIN_PRECISION};
use crate::shadow::{ShadowError, ShadowPolyhedron};
use crate::statesum::{jones_numeric, jones_symbolic, StatesumError};
use crate::volume::{vc_sequence, vc_target};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_INFINITE: i32 = 3;
pub const EXIT_POLE: i32 = 4;
pub const EXIT_INPUT: i32 = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Pretty,
    Json,
}

/// Runtime configuration shared by all commands.
#[derive(Clone, Debug)]
pub struct CliConfig {
    pub precision_bits: u32,
    pub threads: usize,
    pub output: Option<PathBuf>,
    pub format: OutputFormat,
}

impl Default for CliConfig {
    fn default() -> Self {
        CliConfig {
            precision_bits: precision_from_env().unwrap_or(DEFAULT_PRECISION),
            threads: 0,
            output: None,
            format: OutputFormat::Pretty,
        }
    }
}

fn precision_from_env() -> Option<u32> {
    std::env::var("SHADOWJONES_PRECISION")
        .ok()
        .and_then(|s| s.parse().ok())
}

#[derive(Parser, Debug)]
#[command(
    name = "shadowjones",
    about = "Shadow state-sum colored Jones invariants and Volume Conjecture scans",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Working precision in bits (>= 53); also settable via
    /// SHADOWJONES_PRECISION.
    #[arg(long, global = true)]
    pub precision: Option<u32>,
    /// Worker threads (0 = all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,
    /// Output path (stdout when absent).
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a shadow and emit its JSON. Kinds: unknot, trefoil-diagram,
    /// trefoil-collapsed, tetrahedron, universal (with complexity),
    /// from-diagram (with a diagram JSON path).
    Build {
        kind: String,
        /// Complexity for `universal`, or input path for `from-diagram`.
        param: Option<String>,
    },
    /// Compute the d-colored Jones invariant of a shadow (a builder name
    /// or a shadow JSON path).
    Jones {
        shadow: String,
        d: u32,
        /// Exact rational-function output (default).
        #[arg(long)]
        symbolic: bool,
        /// Evaluate numerically at t = e^(2*pi*i/r).
        #[arg(long, value_name = "r")]
        numeric: Option<u32>,
    },
    /// Volume Conjecture scan for a universal link of complexity c over
    /// odd d <= d_max (CSV with target and gap columns).
    Vcscan { c: u32, d_max: u32 },
    /// Run the verification suite: all, algebra, invariance, or vc.
    Verify {
        #[arg(default_value = "all")]
        suite: String,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Statesum(#[from] StatesumError),
    #[error(transparent)]
    Volume(#[from] crate::volume::VolumeError),
    #[error(transparent)]
    Builder(#[from] crate::builders::BuilderError),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("evaluation hit a pole at the requested root of unity")]
    Pole,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) | CliError::Builder(_) => EXIT_INPUT,
            CliError::Io(_) => EXIT_INPUT,
            CliError::Pole => EXIT_POLE,
            CliError::Volume(_) => EXIT_ERROR,
            CliError::Statesum(e) => match e {
                StatesumError::Shadow(ShadowError::ValidationFailed(_)) => EXIT_VALIDATION,
                StatesumError::Shadow(ShadowError::InfiniteShadow { .. }) => EXIT_INFINITE,
                StatesumError::PoleInStateSum => EXIT_POLE,
                _ => EXIT_ERROR,
            },
        }
    }
}

/// Resolve a shadow argument: builder names first, then a file path.
pub fn resolve_shadow(arg: &str) -> Result<ShadowPolyhedron, CliError> {
    let built = match arg {
        "unknot" => Some(unknot_shadow()),
        "trefoil-diagram" => Some(trefoil_diagram_shadow()),
        "trefoil-collapsed" => Some(trefoil_collapsed_shadow()),
        "tetrahedron" => Some(tetrahedron_shadow()),
        "universal-1-alt" => Some(universal_shadow(&universal_graph_c1_alt())?),
        _ => {
            if let Some(c) = arg.strip_prefix("universal-") {
                let c: u32 = c
                    .parse()
                    .map_err(|_| CliError::Input(format!("bad universal complexity {arg:?}")))?;
                Some(universal_shadow_canonical(c)?)
            } else {
                None
            }
        }
    };
    if let Some(p) = built {
        return Ok(p);
    }
    let text = std::fs::read_to_string(arg)
        .map_err(|e| CliError::Input(format!("cannot read shadow {arg:?}: {e}")))?;
    ShadowPolyhedron::from_json(&text)
        .map_err(|e| CliError::Statesum(StatesumError::Shadow(e)))
}

fn build_shadow(kind: &str, param: Option<&str>) -> Result<ShadowPolyhedron, CliError> {
    match kind {
        "unknot" | "trefoil-diagram" | "trefoil-collapsed" | "tetrahedron" => {
            resolve_shadow(kind)
        }
        "universal" => {
            let c: u32 = param
                .ok_or_else(|| CliError::Input("universal needs a complexity".into()))?
                .parse()
                .map_err(|_| CliError::Input("bad complexity".into()))?;
            Ok(universal_shadow_canonical(c)?)
        }
        "from-diagram" => {
            let path = param
                .ok_or_else(|| CliError::Input("from-diagram needs an input path".into()))?;
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Input(format!("cannot read diagram {path:?}: {e}")))?;
            let dg = PlanarDiagram::from_json(&text)?;
            Ok(diagram_to_shadow(&dg)?)
        }
        other => Err(CliError::Input(format!("unknown build kind {other:?}"))),
    }
}

/// Exact invariant in the requested output format.
pub fn format_symbolic(f: &RationalFunc, format: OutputFormat) -> String {
    match format {
        OutputFormat::Pretty => format!("{f}"),
        OutputFormat::Json => ratfunc_json(f).to_string(),
        OutputFormat::Csv => {
            let mut out = String::from("part,u_exp,re,im\n");
            for (part, poly) in [("num", f.num()), ("den", f.den())] {
                for (e, c) in poly.terms() {
                    out.push_str(&format!("{part},{e},{},{}\n", c.re, c.im));
                }
            }
            out
        }
    }
}

/// JSON encoding: coefficient/exponent lists in u-units plus the graded
/// pretty form.
pub fn ratfunc_json(f: &RationalFunc) -> serde_json::Value {
    let poly = |p: &crate::qring::LaurentPoly| -> serde_json::Value {
        p.terms()
            .map(|(e, c)| serde_json::json!([e, c.re.to_string(), c.im.to_string()]))
            .collect()
    };
    serde_json::json!({
        "num_u": poly(f.num()),
        "den_u": poly(f.den()),
        "pretty": format!("{f}"),
        "quarter_graded": f.is_quarter_graded(),
    })
}

fn format_numeric(out: &EvalOutcome, ctx: &NumCtx, format: OutputFormat) -> String {
    let (status, log_mag, phase) = match out {
        EvalOutcome::Value(v) => (
            "ok",
            Some((v.log_mag_f64(ctx), format!("{}", v.log_mag))),
            Some((v.phase_f64(ctx), format!("{}", v.phase))),
        ),
        EvalOutcome::Zero => ("zero", None, None),
        EvalOutcome::Pole => ("pole", None, None),
    };
    match format {
        OutputFormat::Pretty => match (&log_mag, &phase) {
            (Some((lm, _)), Some((ph, _))) => {
                format!("status: ok\nlog_mag: {lm}\nphase: {ph}\n|value|: {}", lm.exp())
            }
            _ => format!("status: {status}"),
        },
        OutputFormat::Json => serde_json::json!({
            "status": status,
            "log_mag": log_mag.as_ref().map(|(v, _)| *v),
            "phase": phase.as_ref().map(|(v, _)| *v),
            "log_mag_exact": log_mag.as_ref().map(|(_, s)| s.clone()),
            "phase_exact": phase.as_ref().map(|(_, s)| s.clone()),
        })
        .to_string(),
        OutputFormat::Csv => format!(
            "status,log_mag,phase\n{},{},{}",
            status,
            log_mag.map(|(v, _)| v.to_string()).unwrap_or_default(),
            phase.map(|(v, _)| v.to_string()).unwrap_or_default()
        ),
    }
}

/// Volume Conjecture scan as CSV with the target and gap columns.
pub fn vcscan_csv(c: u32, d_max: u32, precision_bits: u32) -> Result<String, CliError> {
    let records = vc_sequence(c, d_max, precision_bits)?;
    let target = vc_target(c);
    let mut out = String::from("d,status,log_mag,a_d,target,gap\n");
    for r in &records {
        let gap = r.a_d.map(|a| target - a);
        out.push_str(&format!(
            "{},{},{}\n",
            r.to_csv_row(),
            target,
            gap.map(|g| g.to_string()).unwrap_or_default()
        ));
    }
    Ok(out)
}

fn emit(cfg: &CliConfig, text: &str) -> Result<(), CliError> {
    match &cfg.output {
        Some(path) => {
            let mut f = std::fs::File::create(path)?;
            f.write_all(text.as_bytes())?;
            if !text.ends_with('\n') {
                f.write_all(b"\n")?;
            }
        }
        None => {
            println!("{text}");
        }
    }
    Ok(())
}

fn run_command(cli: &Cli, cfg: &CliConfig) -> Result<i32, CliError> {
    match &cli.command {
        Command::Build { kind, param } => {
            let p = build_shadow(kind, param.as_deref())?;
            let diags = p.validate();
            if !diags.is_empty() {
                return Err(CliError::Statesum(
                    ShadowError::ValidationFailed(diags).into(),
                ));
            }
            for w in p.warnings() {
                eprintln!("warning: {w}");
            }
            emit(cfg, &p.to_json())?;
            Ok(EXIT_OK)
        }
        Command::Jones {
            shadow,
            d,
            symbolic,
            numeric,
        } => {
            let p = resolve_shadow(shadow)?;
            if *symbolic && numeric.is_some() {
                return Err(CliError::Input(
                    "choose one of --symbolic / --numeric".into(),
                ));
            }
            match numeric {
                None => {
                    let f = jones_symbolic(&p, *d)?;
                    emit(cfg, &format_symbolic(&f, cfg.format))?;
                    Ok(EXIT_OK)
                }
                Some(r) => {
                    let out = jones_numeric(&p, *d, *r, cfg.precision_bits)?;
                    let ctx = NumCtx::new(cfg.precision_bits)
                        .map_err(|e| CliError::Statesum(e.into()))?;
                    let is_pole = matches!(out, EvalOutcome::Pole);
                    emit(cfg, &format_numeric(&out, &ctx, cfg.format))?;
                    Ok(if is_pole { EXIT_POLE } else { EXIT_OK })
                }
            }
        }
        Command::Vcscan { c, d_max } => {
            let csv = vcscan_csv(*c, *d_max, cfg.precision_bits)?;
            emit(cfg, &csv)?;
            Ok(EXIT_OK)
        }
        Command::Verify { suite } => {
            let suite = verify::Suite::parse(suite)
                .ok_or_else(|| CliError::Input(format!("unknown suite {suite:?}")))?;
            let outcomes = verify::run_suite(suite, cfg);
            let mut all_ok = true;
            let mut report = String::new();
            for o in &outcomes {
                all_ok &= o.passed;
                report.push_str(&o.report_line());
                report.push('\n');
            }
            report.push_str(if all_ok {
                "verification: all checks passed"
            } else {
                "verification: FAILURES present"
            });
            emit(cfg, &report)?;
            Ok(if all_ok { EXIT_OK } else { EXIT_ERROR })
        }
    }
}

/// Entry point used by the binary. Returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    let mut cfg = CliConfig::default();
    if let Some(p) = cli.precision {
        cfg.precision_bits = p;
    }
    if let Some(t) = cli.threads {
        cfg.threads = t;
    }
    if let Some(f) = cli.format {
        cfg.format = f;
    } else if matches!(cli.command, Command::Vcscan { .. }) {
        cfg.format = OutputFormat::Csv;
    }
    cfg.output = cli.output.clone();

    if cfg.precision_bits < MIN_PRECISION {
        eprintln!("error: precision must be at least {MIN_PRECISION} bits");
        return EXIT_INPUT;
    }
    if cfg.threads > 0 {
        // Ignore the error if a pool already exists (e.g. under tests).
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.threads)
            .build_global();
    }

    match run_command(&cli, &cfg) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builder_names_resolve() {
        for name in [
            "unknot",
            "trefoil-diagram",
            "trefoil-collapsed",
            "tetrahedron",
            "universal-1",
            "universal-1-alt",
            "universal-2",
            "universal-3",
        ] {
            assert!(resolve_shadow(name).is_ok(), "{name}");
        }
        assert!(resolve_shadow("no-such-shadow.json").is_err());
    }

    #[test]
    fn jones_symbolic_pretty_output() {
        let p = resolve_shadow("unknot").unwrap();
        let f = jones_symbolic(&p, 7).unwrap();
        assert_eq!(format_symbolic(&f, OutputFormat::Pretty), "1");
        let zero = jones_symbolic(&resolve_shadow("universal-1").unwrap(), 4).unwrap();
        assert_eq!(format_symbolic(&zero, OutputFormat::Pretty), "0");
    }

    #[test]
    fn vcscan_csv_shape() {
        let csv = vcscan_csv(1, 9, 96).unwrap();
        let lines: Vec<&str> = csv.trim_end().lines().collect();
        assert_eq!(lines[0], "d,status,log_mag,a_d,target,gap");
        assert_eq!(lines.len(), 1 + 4); // d = 3, 5, 7, 9
        assert!(lines[1].starts_with("3,ok,"));
    }

    #[test]
    fn json_symbolic_roundtrip_fields() {
        let p = resolve_shadow("trefoil-collapsed").unwrap();
        let f = jones_symbolic(&p, 2).unwrap();
        let v: serde_json::Value =
            serde_json::from_str(&ratfunc_json(&f).to_string()).unwrap();
        assert!(v["quarter_graded"].as_bool().unwrap());
        // Canonical form divides out the common (1+t): t^(-7/4)(1 - t - t^3).
        assert_eq!(v["num_u"].as_array().unwrap().len(), 3);
        assert_eq!(v["den_u"].as_array().unwrap().len(), 1);
    }
}
