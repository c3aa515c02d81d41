//! `hopfgraft`: one subcommand per library operation, JSON or CSV output.
//!
//! Exit codes: 0 success, 2 violated precondition, 1 internal error,
//! 64 usage error.

mod args;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use serde::Serialize;
use serde_json::{json, Value};

use args::{BundleArgs, Cli, Command, MotivicCommand, Pair, ReportArgs};
use hopfgraft_core::bundle::{self, BundleHopfForm, BundleTauForm};
use hopfgraft_core::cobordism::{self, CompactificationOptions, ReportOptions};
use hopfgraft_core::diophantine::diophantine_report;
use hopfgraft_core::hopf::{self, HopfSurface};
use hopfgraft_core::k0::{self, WitnessBudget};
use hopfgraft_core::motivic::motivic_class_blowup_p2;
use hopfgraft_core::surfaces::{self, NinePointConfig};
use hopfgraft_core::torus::{j_invariant, reduce_to_fundamental_domain, HalfPlanePoint};
use hopfgraft_core::Error;
use output::{write_envelope, Envelope, ErrorEnvelope, SCHEMA_VERSION};

const EXIT_PRECONDITION: u8 = 2;
const EXIT_INTERNAL: u8 = 1;
const EXIT_USAGE: u8 = 64;

/// A computed result plus the bounds its verdicts depend on.
struct Outcome {
    result: Value,
    warnings: Vec<String>,
    /// Render CSV with the report columns.
    reports: bool,
}

enum Failure {
    Core(Error),
    Io(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn to_value<T: Serialize>(v: &T) -> Result<Value, Failure> {
    serde_json::to_value(v).map_err(|e| Failure::Internal(e.to_string()))
}

fn tau(p: Pair) -> Result<HalfPlanePoint, Error> {
    HalfPlanePoint::new(p.0, p.1)
}

fn bundle_of(a: &BundleArgs) -> Result<BundleTauForm, Error> {
    BundleTauForm::new(tau(a.tau)?, a.u.0, a.v.0)
}

fn report_options(r: &ReportArgs) -> ReportOptions {
    ReportOptions {
        torsion_bound: r.bound,
        n_max: r.nmax,
        isogeny_max_degree: (r.max_degree > 0).then_some(r.max_degree),
        ..Default::default()
    }
}

fn report_warnings(r: &ReportArgs) -> Vec<String> {
    let mut w = vec![
        format!("torsion verdicts: non-torsion means no denominator up to {}", r.bound),
        format!("diophantine verdicts: heuristic, n up to {}", r.nmax),
    ];
    if r.max_degree > 0 {
        w.push(format!("isogeny search: degrees up to {}; absence is not a proof of non-isogeny", r.max_degree));
    } else {
        w.push("isogeny search: disabled".to_string());
    }
    w
}

fn torsion_warning(bound: u64) -> String {
    format!("torsion verdict: non-torsion means no denominator up to {bound}")
}

fn relation_warning(bound: u64) -> String {
    format!("hopf classification: relations searched up to |n|, |m| <= {bound}")
}

fn read_config(path: &std::path::Path) -> Result<NinePointConfig, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::Core(Error::InvalidConfig(format!("{}: {e}", path.display()))))
}

fn plain(result: Value, warnings: Vec<String>) -> Outcome {
    Outcome {
        result,
        warnings,
        reports: false,
    }
}

fn execute(cmd: &Command) -> Result<Outcome, Failure> {
    Ok(match cmd {
        Command::Reduce(a) => {
            let t = tau(a.tau)?;
            let (r, g) = reduce_to_fundamental_domain(t);
            plain(json!({ "tau_reduced": to_value(&r)?, "matrix": to_value(&g)? }), vec![])
        }
        Command::Jinv(a) => {
            let t = tau(a.tau)?;
            let (r, _) = reduce_to_fundamental_domain(t);
            let j = j_invariant(t);
            plain(json!({ "tau_reduced": to_value(&r)?, "j": [j.re, j.im] }), vec![])
        }
        Command::Class(a) => {
            let b = bundle_of(a)?;
            let p = bundle::pic0_point(&b);
            let (x, y) = p.coords();
            plain(json!({ "point": [p.z.re, p.z.im], "coords": [x, y], "tau": to_value(&b.tau)? }), vec![])
        }
        Command::Torsion { bundle: a, bound } => {
            let v = bundle::is_torsion(&bundle_of(a)?, *bound)?;
            plain(to_value(&v)?, vec![torsion_warning(*bound)])
        }
        Command::Diophantine { bundle: a, nmax } => {
            let r = diophantine_report(&bundle_of(a)?, *nmax)?;
            plain(
                to_value(&r)?,
                vec![format!("diophantine verdict: heuristic, n up to {nmax}")],
            )
        }
        Command::ToHopf { bundle: a, u_rep } => {
            let b = bundle_of(a)?;
            let rep = match u_rep {
                Some(r) => r.0,
                None if b.u < 0.0 => b.u,
                None => b.default_u_rep(),
            };
            let h = bundle::tau_to_hopf(&b, rep)?;
            plain(json!({ "u_rep": rep, "bundle": to_value(&h)? }), vec![])
        }
        Command::FromHopf { tau: t, sigma } => {
            let h = BundleHopfForm {
                base_exp: tau(*t)?,
                fiber_exp: tau(*sigma)?,
            };
            plain(to_value(&bundle::hopf_to_tau(&h))?, vec![])
        }
        Command::ClassifyHopf { lambda, mu, bound } => {
            let h = HopfSurface::new(tau(*lambda)?, tau(*mu)?);
            let c = hopf::classify_hopf(&h, *bound)?;
            plain(
                json!({ "surface": to_value(&h)?, "classification": to_value(&c)? }),
                vec![relation_warning(*bound)],
            )
        }
        Command::JointHopf { tau_e, tau_f, bound } => {
            let (h, c) = hopf::joint_hopf_with_bound(tau(*tau_e)?, tau(*tau_f)?, *bound)?;
            plain(
                json!({ "surface": to_value(&h)?, "classification": to_value(&c)? }),
                vec![relation_warning(*bound)],
            )
        }
        Command::Cobordants { bundle: a, count, report } => {
            let r = cobordism::enumerate_cobordant_with(&bundle_of(a)?, *count, &report_options(report))?;
            Outcome {
                result: to_value(&r)?,
                warnings: report_warnings(report),
                reports: true,
            }
        }
        Command::Duals { bundle: a, count, report } => {
            let r = cobordism::enumerate_hopf_duals_with(&bundle_of(a)?, *count, &report_options(report))?;
            Outcome {
                result: to_value(&r)?,
                warnings: report_warnings(report),
                reports: true,
            }
        }
        Command::Compactifications {
            bundle: a,
            count,
            max_primary,
            bound,
        } => {
            let opts = CompactificationOptions {
                torsion_bound: *bound,
                max_primary: *max_primary,
                ..Default::default()
            };
            let r = cobordism::minimal_compactifications_with(&bundle_of(a)?, *count, &opts)?;
            plain(
                to_value(&r)?,
                vec![
                    torsion_warning(*bound),
                    relation_warning(opts.relation_bound),
                    format!("secondary descriptors: n up to {}", opts.max_secondary_n),
                ],
            )
        }
        Command::NinePoints { config, bound } => {
            let cfg = read_config(config)?;
            let b = surfaces::normal_bundle_class(&cfg);
            let t = bundle::is_torsion(&b, *bound)?;
            let p = bundle::pic0_point(&b);
            plain(
                json!({ "bundle": to_value(&b)?, "class": [p.z.re, p.z.im], "torsion": to_value(&t)? }),
                vec![torsion_warning(*bound)],
            )
        }
        Command::Structures { config, count, report } => {
            let cfg = read_config(config)?;
            let r = surfaces::enumerate_algebraic_structures_with(&cfg, *count, &report_options(report))?;
            Outcome {
                result: to_value(&r)?,
                warnings: report_warnings(report),
                reports: true,
            }
        }
        Command::Motivic(MotivicCommand::BlowupP2 { points }) => {
            let c = motivic_class_blowup_p2(*points)?;
            plain(
                json!({
                    "coefficients": c.coefficients(),
                    "display": c.to_string(),
                    "euler_characteristic": c.euler_characteristic(),
                }),
                vec![],
            )
        }
        Command::K0anWitness {
            tau_e,
            tau_f,
            budget,
            seed,
            nmax,
            bound,
        } => {
            let b = WitnessBudget {
                candidates: *budget,
                seed: *seed,
                n_max: *nmax,
                torsion_bound: *bound,
                ..Default::default()
            };
            let out = k0::verify_k0an_equality(tau(*tau_e)?, tau(*tau_f)?, &b)?;
            plain(
                to_value(&out)?,
                vec![
                    relation_warning(b.relation_bound),
                    torsion_warning(b.torsion_bound),
                    format!("diophantine checks: heuristic, n up to {}", b.n_max),
                    format!("search: {} candidates from offset {}", b.candidates, b.seed),
                ],
            )
        }
    })
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Reduce(_) => "reduce",
        Command::Jinv(_) => "jinv",
        Command::Class(_) => "class",
        Command::Torsion { .. } => "torsion",
        Command::Diophantine { .. } => "diophantine",
        Command::ToHopf { .. } => "to-hopf",
        Command::FromHopf { .. } => "from-hopf",
        Command::ClassifyHopf { .. } => "classify-hopf",
        Command::JointHopf { .. } => "joint-hopf",
        Command::Cobordants { .. } => "cobordants",
        Command::Duals { .. } => "duals",
        Command::Compactifications { .. } => "compactifications",
        Command::NinePoints { .. } => "nine-points",
        Command::Structures { .. } => "structures",
        Command::Motivic(MotivicCommand::BlowupP2 { .. }) => "motivic blowup-p2",
        Command::K0anWitness { .. } => "k0an-witness",
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let name = command_name(&cli.command).to_string();
    let params = serde_json::to_value(&cli.command).unwrap_or(Value::Null);
    let stdout = std::io::stdout();
    let mut out = stdout.lock();

    let fail = |out: &mut std::io::StdoutLock, hypothesis: &str, kind: &str, message: String, code: u8| {
        eprintln!("error: {message}");
        let env = ErrorEnvelope::new(name.clone(), params.clone(), hypothesis, kind, message);
        if let Ok(s) = serde_json::to_string_pretty(&env) {
            let _ = writeln!(out, "{s}");
        }
        ExitCode::from(code)
    };

    match execute(&cli.command) {
        Ok(o) => {
            let env = Envelope {
                schema_version: SCHEMA_VERSION,
                command: name.clone(),
                params: params.clone(),
                result: o.result,
                warnings: o.warnings,
            };
            match write_envelope(&mut out, &env, cli.format, o.reports) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => fail(&mut out, "internal", "internal", e.to_string(), EXIT_INTERNAL),
            }
        }
        Err(Failure::Core(e)) if e.is_precondition() => {
            fail(&mut out, e.hypothesis(), "precondition", e.to_string(), EXIT_PRECONDITION)
        }
        Err(Failure::Core(e)) => fail(&mut out, e.hypothesis(), "internal", e.to_string(), EXIT_INTERNAL),
        Err(Failure::Io(m)) => fail(&mut out, "readable-config", "precondition", m, EXIT_PRECONDITION),
        Err(Failure::Internal(m)) => fail(&mut out, "internal", "internal", m, EXIT_INTERNAL),
    }
}
