//! Command-line front end. [`run`] parses argv, executes one subcommand and
//! returns the exit code together with the text for stdout and stderr.
//!
//! Exit codes: 0 success, 2 domain error, 3 verification failure, 64 usage
//! error. Tolerance defaults can be overridden with the `ANISOKIN_ATOL` and
//! `ANISOKIN_RTOL` environment variables.

use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::approx::{
    a_factor_minus_one, a_inv_minus_one, a_inv_series, a_series, compose_series, energy_series,
    energy_series_corrected, invert_series, remainder_order_check, subtract_series, sync_check,
    SeriesInput, SeriesOp, DEFAULT_FD_STEP,
};
use crate::error::KinematicsError;
use crate::metric::{
    hamiltonian, kinematic_length, momentum_energy_closed_form, momentum_from_velocity,
    solve_dispersion, CoMomentum, MassShellQuery,
};
use crate::oracle::ledger::{
    ledger_with_samples, verify_identity, Ledger, DEFAULT_LEDGER_SAMPLES, DEFAULT_SEED,
};
use crate::oracle::OracleError;
use crate::suites::{run_suite, SuiteConfig, DEFAULT_MARGIN, SUITES};
use crate::tolerance::{Tolerance, DEFAULT_ATOL, DEFAULT_RTOL};
use crate::transforms::{boost_matrix, transform, FourVector};
use crate::velocity::{compose, invert, subtract, Velocity3};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

pub const ENV_ATOL: &str = "ANISOKIN_ATOL";
pub const ENV_RTOL: &str = "ANISOKIN_RTOL";

/// Default gradient bound for `sync-check`.
pub const SYNC_THRESHOLD: f64 = 1e-8;

/// Comma-separated list of exactly `N` floats.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Components<const N: usize>(pub [f64; N]);

impl<const N: usize> FromStr for Components<N> {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != N {
            return Err(format!(
                "expected {N} comma-separated numbers, got {}",
                parts.len()
            ));
        }
        let mut out = [0.0; N];
        for (slot, part) in out.iter_mut().zip(parts) {
            let x: f64 = part
                .parse()
                .map_err(|_| format!("not a number: {part:?}"))?;
            if !x.is_finite() {
                return Err(format!("not finite: {part:?}"));
            }
            *slot = x;
        }
        Ok(Components(out))
    }
}

type Vec3 = Components<3>;
type Vec4 = Components<4>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

fn positive(s: &str) -> Result<f64, String> {
    let x: f64 = s.parse().map_err(|_| format!("not a number: {s:?}"))?;
    if x.is_finite() && x > 0.0 {
        Ok(x)
    } else {
        Err(format!("must be a positive finite number, got {s}"))
    }
}

fn at_least_one(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(n) if n >= 1 => Ok(n),
        _ => Err(format!("must be an integer ≥ 1, got {s}")),
    }
}

/// Options shared by every subcommand.
#[derive(Debug, Clone, Args)]
pub struct CliConfig {
    /// Absolute tolerance.
    #[arg(long, global = true, env = ENV_ATOL, default_value_t = DEFAULT_ATOL, value_parser = positive)]
    pub atol: f64,
    /// Relative tolerance.
    #[arg(long, global = true, env = ENV_RTOL, default_value_t = DEFAULT_RTOL, value_parser = positive)]
    pub rtol: f64,
    /// Sample count for sweeps (per-command default when omitted).
    #[arg(long, global = true, value_parser = at_least_one)]
    pub samples: Option<usize>,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Output format (per-command default when omitted).
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Accept velocities outside the open domain.
    #[arg(long, global = true)]
    pub unchecked: bool,
}

impl CliConfig {
    pub fn tolerance(&self) -> Tolerance {
        Tolerance::new(self.atol, self.rtol)
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "anisokin",
    version,
    about = "Four-directional anisotropic relativistic kinematics"
)]
pub struct Cli {
    #[command(flatten)]
    pub config: CliConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Boost a four-vector: Y' = Λ(s)Y.
    Transform {
        #[arg(long)]
        s: Vec3,
        #[arg(long)]
        y: Vec4,
    },
    /// The 4×4 boost matrix Λ(s), row-major.
    BoostMatrix {
        #[arg(long)]
        s: Vec3,
    },
    /// a ⊕ b.
    Compose {
        #[arg(long)]
        a: Vec3,
        #[arg(long)]
        b: Vec3,
    },
    /// ⊖s.
    Invert {
        #[arg(long)]
        s: Vec3,
    },
    /// a ⊖ b.
    Subtract {
        #[arg(long)]
        a: Vec3,
        #[arg(long)]
        b: Vec3,
    },
    /// Kinematic length F(Y).
    Length {
        #[arg(long)]
        y: Vec4,
    },
    /// Hamiltonian H(P).
    Hamiltonian {
        #[arg(long)]
        p: Vec4,
    },
    /// Momentum P = m ∂F/∂V of a forward-cone four-velocity.
    Momentum {
        #[arg(long)]
        mass: f64,
        #[arg(long)]
        v: Vec4,
    },
    /// Energy on the mass shell for a spatial momentum.
    Dispersion {
        #[arg(long)]
        mass: f64,
        #[arg(long)]
        momentum: Vec3,
    },
    /// Truncated series against the exact value, or a remainder sweep.
    Approx {
        #[arg(long)]
        op: String,
        #[arg(long)]
        s: Option<Vec3>,
        #[arg(long)]
        a: Option<Vec3>,
        #[arg(long)]
        b: Option<Vec3>,
        #[arg(long)]
        mass: Option<f64>,
        #[arg(long)]
        momentum: Option<Vec3>,
        /// Halve the input this many times and tabulate the remainder.
        #[arg(long)]
        sweep: Option<u32>,
    },
    /// Gradient of the clock-rate ratio at s = 0.
    SyncCheck {
        #[arg(long)]
        u: Vec3,
        #[arg(long, default_value_t = DEFAULT_FD_STEP, value_parser = positive)]
        h: f64,
        #[arg(long, default_value_t = SYNC_THRESHOLD, value_parser = positive)]
        threshold: f64,
    },
    /// Floating-point property suites.
    Verify {
        /// Suite name; repeatable. All suites when omitted.
        #[arg(long)]
        suite: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_MARGIN)]
        margin: f64,
    },
    /// Exact-rational identity ledger.
    Ledger {
        /// Restrict to these identity ids; repeatable.
        #[arg(long)]
        id: Vec<String>,
    },
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
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

enum Failure {
    Domain(String),
    Usage(String),
}

impl From<KinematicsError> for Failure {
    fn from(e: KinematicsError) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Step<T> = std::result::Result<T, Failure>;

/// Parses argv (including the program name) and runs it.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::fail(EXIT_USAGE, text)
            } else {
                Outcome::ok(text)
            };
        }
    };
    match execute(&cli.config, &cli.command) {
        Ok(out) => out,
        Err(Failure::Domain(msg)) => Outcome::fail(EXIT_DOMAIN, format!("error: {msg}\n")),
        Err(Failure::Usage(msg)) => Outcome::fail(EXIT_USAGE, format!("error: {msg}\n")),
    }
}

fn velocity(cfg: &CliConfig, v: Vec3) -> Step<Velocity3> {
    if cfg.unchecked {
        Ok(Velocity3::from_array_unchecked(v.0))
    } else {
        Ok(Velocity3::try_from_array(v.0)?)
    }
}

fn emit(cfg: &CliConfig, value: Value) -> Outcome {
    match cfg.format.unwrap_or(Format::Json) {
        Format::Json => Outcome::ok(format!("{value}\n")),
        Format::Csv => {
            let mut flat = Vec::new();
            flatten("", &value, &mut flat);
            let header: Vec<&str> = flat.iter().map(|(k, _)| k.as_str()).collect();
            let row: Vec<&str> = flat.iter().map(|(_, v)| v.as_str()).collect();
            Outcome::ok(csv_text(&header, &[row]))
        }
    }
}

fn flatten(prefix: &str, value: &Value, out: &mut Vec<(String, String)>) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}_{k}")
        }
    };
    match value {
        Value::Object(map) => map.iter().for_each(|(k, v)| flatten(&key(k), v, out)),
        Value::Array(items) => items
            .iter()
            .enumerate()
            .for_each(|(i, v)| flatten(&key(&i.to_string()), v, out)),
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

fn csv_text<R: AsRef<[u8]>>(header: &[&str], rows: &[Vec<R>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory csv");
    for row in rows {
        w.write_record(row).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8 csv")
}

fn verdict_outcome(mut out: Outcome, passed: bool) -> Outcome {
    if !passed {
        out.code = EXIT_VERIFICATION;
    }
    out
}

fn series_input(
    op: SeriesOp,
    cfg: &CliConfig,
    s: Option<Vec3>,
    a: Option<Vec3>,
    b: Option<Vec3>,
    mass: Option<f64>,
    momentum: Option<Vec3>,
) -> Step<SeriesInput> {
    let need = |flag: &str| Failure::Usage(format!("--op {} requires {flag}", op.name()));
    Ok(match op {
        SeriesOp::ASeries | SeriesOp::AInvSeries | SeriesOp::InvertSeries => {
            SeriesInput::Velocity(velocity(cfg, s.ok_or_else(|| need("--s"))?)?)
        }
        SeriesOp::SubtractSeries | SeriesOp::ComposeSeries => SeriesInput::Pair(
            velocity(cfg, a.ok_or_else(|| need("--a and --b"))?)?,
            velocity(cfg, b.ok_or_else(|| need("--a and --b"))?)?,
        ),
        SeriesOp::EnergySeries | SeriesOp::EnergySeriesCorrected => {
            SeriesInput::Momentum(MassShellQuery::new(
                mass.ok_or_else(|| need("--mass and --momentum"))?,
                momentum.ok_or_else(|| need("--mass and --momentum"))?.0,
            )?)
        }
    })
}

fn series_value(op: SeriesOp, input: &SeriesInput) -> Step<Value> {
    let v3 = |v: Velocity3| json!(v.components());
    Ok(match (op, input) {
        (SeriesOp::ASeries, SeriesInput::Velocity(s)) => {
            json!({"series": a_series(s), "exact": 1.0 + a_factor_minus_one(s)?})
        }
        (SeriesOp::AInvSeries, SeriesInput::Velocity(s)) => {
            json!({"series": a_inv_series(s), "exact": 1.0 + a_inv_minus_one(s)?})
        }
        (SeriesOp::InvertSeries, SeriesInput::Velocity(s)) => {
            json!({"series": v3(invert_series(s)), "exact": v3(invert(s)?)})
        }
        (SeriesOp::SubtractSeries, SeriesInput::Pair(a, b)) => {
            json!({"series": v3(subtract_series(a, b)), "exact": v3(subtract(a, b)?)})
        }
        (SeriesOp::ComposeSeries, SeriesInput::Pair(a, b)) => {
            json!({"series": v3(compose_series(a, b)), "exact": v3(compose(a, b)?)})
        }
        (SeriesOp::EnergySeries, SeriesInput::Momentum(q)) => {
            json!({"series": energy_series(q), "exact": solve_dispersion(q)?.energy})
        }
        (SeriesOp::EnergySeriesCorrected, SeriesInput::Momentum(q)) => {
            json!({"series": energy_series_corrected(q), "exact": solve_dispersion(q)?.energy})
        }
        _ => {
            return Err(Failure::Usage(format!(
                "input does not match --op {}",
                op.name()
            )))
        }
    })
}

fn execute(cfg: &CliConfig, cmd: &Command) -> Step<Outcome> {
    Ok(match cmd {
        Command::Transform { s, y } => {
            let out = transform(&velocity(cfg, *s)?, &FourVector(y.0))?;
            emit(cfg, json!({"result": out.0}))
        }
        Command::BoostMatrix { s } => {
            let m = boost_matrix(&velocity(cfg, *s)?)?;
            emit(cfg, json!({"result": m.entries}))
        }
        Command::Compose { a, b } => {
            let out = compose(&velocity(cfg, *a)?, &velocity(cfg, *b)?)?;
            emit(cfg, json!({"result": out.components()}))
        }
        Command::Invert { s } => {
            let out = invert(&velocity(cfg, *s)?)?;
            emit(cfg, json!({"result": out.components()}))
        }
        Command::Subtract { a, b } => {
            let out = subtract(&velocity(cfg, *a)?, &velocity(cfg, *b)?)?;
            emit(cfg, json!({"result": out.components()}))
        }
        Command::Length { y } => emit(cfg, json!({"length": kinematic_length(&FourVector(y.0))?})),
        Command::Hamiltonian { p } => {
            emit(cfg, json!({"hamiltonian": hamiltonian(&CoMomentum(p.0))?}))
        }
        Command::Momentum { mass, v } => {
            let v4 = FourVector(v.0);
            let p = momentum_from_velocity(*mass, &v4)?;
            emit(
                cfg,
                json!({
                    "momentum": p.0,
                    "energy_closed_form": momentum_energy_closed_form(*mass, &v4)?,
                    "hamiltonian": hamiltonian(&p)?,
                }),
            )
        }
        Command::Dispersion { mass, momentum } => {
            let root = solve_dispersion(&MassShellQuery::new(*mass, momentum.0)?)?;
            emit(
                cfg,
                json!({"energy": root.energy, "residual": root.residual, "iterations": root.iterations}),
            )
        }
        Command::Approx {
            op,
            s,
            a,
            b,
            mass,
            momentum,
            sweep,
        } => {
            let op = SeriesOp::from_name(op).ok_or_else(|| {
                let names: Vec<&str> = SeriesOp::ALL.iter().map(|o| o.name()).collect();
                Failure::Usage(format!(
                    "unknown --op {op:?}; expected one of {}",
                    names.join(", ")
                ))
            })?;
            let input = series_input(op, cfg, *s, *a, *b, *mass, *momentum)?;
            match sweep {
                None => emit(cfg, series_value(op, &input)?),
                Some(levels) => {
                    let report = remainder_order_check(op, &input, *levels)?;
                    match cfg.format.unwrap_or(Format::Csv) {
                        Format::Json => Outcome::ok(format!("{}\n", json!(report))),
                        Format::Csv => {
                            let rows: Vec<Vec<String>> = report
                                .rows
                                .iter()
                                .map(|r| {
                                    vec![
                                        r.level.to_string(),
                                        r.scale.to_string(),
                                        r.abs_error.to_string(),
                                    ]
                                })
                                .collect();
                            Outcome::ok(csv_text(&["level", "scale", "abs_error"], &rows))
                        }
                    }
                }
            }
        }
        Command::SyncCheck { u, h, threshold } => {
            let g = sync_check(&velocity(cfg, *u)?, *h)?;
            let passed = g.iter().all(|x| x.abs() <= *threshold);
            let out = emit(
                cfg,
                json!({"gradient": g, "threshold": threshold, "passed": passed}),
            );
            verdict_outcome(out, passed)
        }
        Command::Verify { suite, margin } => {
            if !(margin.is_finite() && (0.0..1.0).contains(margin)) {
                return Err(Failure::Usage(format!(
                    "--margin must lie in [0, 1), got {margin}"
                )));
            }
            let names: Vec<String> = if suite.is_empty() {
                SUITES.iter().map(|s| s.to_string()).collect()
            } else {
                suite.clone()
            };
            let suite_cfg = SuiteConfig {
                samples: cfg.samples.unwrap_or(SuiteConfig::default().samples),
                seed: cfg.seed,
                tol: cfg.tolerance(),
                margin: *margin,
            };
            let mut reports = Vec::with_capacity(names.len());
            for name in &names {
                let report = run_suite(name, &suite_cfg).ok_or_else(|| {
                    Failure::Usage(format!(
                        "unknown suite {name:?}; expected one of {}",
                        SUITES.join(", ")
                    ))
                })?;
                reports.push(report);
            }
            let passed = reports.iter().all(|r| r.passed);
            let out = match cfg.format.unwrap_or(Format::Json) {
                Format::Json => Outcome::ok(format!(
                    "{}\n",
                    json!({"seed": cfg.seed, "margin": margin, "passed": passed, "suites": reports})
                )),
                Format::Csv => {
                    let rows: Vec<Vec<String>> = reports
                        .iter()
                        .map(|r| {
                            vec![
                                r.name.clone(),
                                r.samples.to_string(),
                                r.threshold.to_string(),
                                r.max_deviation.to_string(),
                                r.failures.to_string(),
                                r.passed.to_string(),
                            ]
                        })
                        .collect();
                    Outcome::ok(csv_text(
                        &[
                            "suite",
                            "samples",
                            "threshold",
                            "max_deviation",
                            "failures",
                            "passed",
                        ],
                        &rows,
                    ))
                }
            };
            verdict_outcome(out, passed)
        }
        Command::Ledger { id } => {
            let samples = cfg.samples.unwrap_or(DEFAULT_LEDGER_SAMPLES);
            let ledger = if id.is_empty() {
                ledger_with_samples(cfg.seed, samples)
            } else {
                Ledger {
                    seed: cfg.seed,
                    samples,
                    entries: id
                        .iter()
                        .map(|i| verify_identity(i, samples, cfg.seed))
                        .collect::<std::result::Result<_, _>>()?,
                }
            };
            match cfg.format.unwrap_or(Format::Json) {
                Format::Json => Outcome::ok(format!("{}\n", ledger.to_json())),
                Format::Csv => {
                    let rows: Vec<Vec<String>> = ledger
                        .entries
                        .iter()
                        .map(|e| {
                            let inputs: Map<String, Value> = e
                                .witness
                                .inputs
                                .iter()
                                .map(|(k, v)| (k.clone(), json!(v)))
                                .collect();
                            vec![
                                e.identity_id.clone(),
                                e.verdict.as_str().to_string(),
                                e.contested.to_string(),
                                e.seed.to_string(),
                                e.samples.to_string(),
                                Value::Object(inputs).to_string(),
                                e.witness.detail.clone(),
                            ]
                        })
                        .collect();
                    Outcome::ok(csv_text(
                        &[
                            "identity_id",
                            "verdict",
                            "contested",
                            "seed",
                            "samples",
                            "witness_inputs",
                            "witness_detail",
                        ],
                        &rows,
                    ))
                }
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> Outcome {
        run(std::iter::once("anisokin").chain(args.iter().copied()))
    }

    #[test]
    fn components_parse_exact_counts() {
        assert_eq!(
            "0.1, 0,-2".parse::<Vec3>(),
            Ok(Components([0.1, 0.0, -2.0]))
        );
        assert!("0.1,0".parse::<Vec3>().is_err());
        assert!("a,b,c".parse::<Vec3>().is_err());
        assert!("inf,0,0".parse::<Vec3>().is_err());
    }

    #[test]
    fn compose_collinear() {
        let out = call(&["compose", "--a", "0.1,0,0", "--b", "0.2,0,0"]);
        assert_eq!(out.code, EXIT_OK);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert!((v["result"][0].as_f64().unwrap() - 0.3 / 1.02).abs() < 1e-16);
    }

    #[test]
    fn domain_errors_name_the_inequality() {
        let out = call(&["invert", "--s", "0.9,0.5,-0.9"]);
        assert_eq!(out.code, EXIT_DOMAIN);
        assert!(out.stderr.contains("≤ 0"), "{}", out.stderr);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["compose", "--a", "0.1,0"]).code, EXIT_USAGE);
        assert_eq!(call(&["frobnicate"]).code, EXIT_USAGE);
        assert_eq!(
            call(&["approx", "--op", "nope", "--s", "0,0,0"]).code,
            EXIT_USAGE
        );
        assert_eq!(call(&["ledger", "--id", "9.99"]).code, EXIT_USAGE);
        assert_eq!(call(&["--samples", "0", "ledger"]).code, EXIT_USAGE);
        assert_eq!(call(&["--help"]).code, EXIT_OK);
    }

    #[test]
    fn csv_flattening() {
        let out = call(&["--format", "csv", "invert", "--s", "0.1,0,0"]);
        let mut lines = out.stdout.lines();
        assert_eq!(lines.next(), Some("result_0,result_1,result_2"));
    }
}
