//! Command-line front end. Machine-readable lines start with `VERDICT:`,
//! `CERT:`, `REFUTE:`, `THETA:` or `ITEM:`; everything else is prose.
//!
//! Exit codes: 0 when the command ran (whatever the verdict), 1 when
//! `reproduce` has a failing item, 2 on bad input.

mod reproduce;

pub use reproduce::{reproduce, Item, ReproduceReport, Status};

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::classify::{
    classify, witness_representation, Certification, ClassificationVerdict, ClassifyError, Witness,
};
use crate::cyclic_lift::{companion_lift, find_divisor_lift, CyclicLiftError};
use crate::finite_rings::{PrimeCtx, RingError};
use crate::groups::{make_family, parse_family, parse_table, BadKind, FiniteGroup, GroupError};
use crate::obstruction::{parse_elt, theta, write_elt, AlgFp, ObstructionError};
use crate::replift::{
    brute_force_lift, check_lift, parse_rep, verify_certificate, write_rep, LiftCertificate,
    LiftVerdict, Refutation, RepError, Representation, DEFAULT_BRUTE_BUDGET,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    InFile {
        path: PathBuf,
        source: Box<CliError>,
    },
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Obstruction(#[from] ObstructionError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    CyclicLift(#[from] CyclicLiftError),
    #[error("{0}")]
    Usage(String),
    #[error("verification of the emitted certificate failed")]
    Verification,
}

#[derive(Debug, Parser)]
#[command(
    name = "liftcheck",
    version,
    about = "Lift mod-p representations of finite groups to Z/p^2"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether each representation file lifts.
    Check(CheckArgs),
    /// Classify a group as liftable or not.
    Classify(GroupArgs),
    /// Compute θ(f, h) for two group algebra elements.
    Theta(ThetaArgs),
    /// Rerun every built-in result and report PASS/FAIL per item.
    Reproduce(ReproduceArgs),
    /// Print a built-in representation in the input format.
    Emit {
        #[command(subcommand)]
        what: EmitCommand,
    },
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(required = true)]
    pub files: Vec<PathBuf>,
    /// Cross-check with brute force when it needs at most this many
    /// assignments; 0 disables.
    #[arg(long, default_value_t = DEFAULT_BRUTE_BUDGET)]
    pub max_brute: u64,
    /// Re-check certificates and refutations before printing them.
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
    pub verify: bool,
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    /// Family spec: `C <n>`, `Q <2^n>`, `D <2^n>`, `CxC <a> <b>`, `C3xC3`,
    /// `C3semi <2^n>`, `A4`.
    #[arg(conflicts_with = "table", required_unless_present = "table")]
    pub spec: Vec<String>,
    /// Multiplication table file instead of a family spec.
    #[arg(long)]
    pub table: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ThetaArgs {
    #[arg(short, long)]
    pub p: u32,
    /// Family spec of the group, e.g. `"C 9"`.
    #[arg(long, conflicts_with = "table", required_unless_present = "table")]
    pub group: Option<String>,
    #[arg(long)]
    pub table: Option<PathBuf>,
    pub f: PathBuf,
    pub h: PathBuf,
}

#[derive(Debug, Args)]
pub struct ReproduceArgs {
    #[arg(long)]
    pub json: bool,
    /// Swap the Klein witness for a liftable one, to see a FAIL row.
    #[arg(long)]
    pub corrupt: bool,
}

#[derive(Debug, Subcommand)]
pub enum EmitCommand {
    /// Witness of an obstruction subgroup: `C2xC2`, `Q8`, `C3xC3`, `C9`
    /// or `C<p>` for a prime `p >= 5`.
    Witness { kind: String },
    /// Companion lift of the Jordan block of size `i` of `C_{p^n}`.
    Companion {
        #[arg(short, long)]
        p: u32,
        #[arg(short, long)]
        n: u32,
        #[arg(short, long)]
        i: u32,
    },
    /// `(1 - σ)^k` in `F_p[C_order]`, in the element format.
    Power {
        #[arg(short, long)]
        p: u32,
        #[arg(long)]
        order: usize,
        #[arg(short, long)]
        k: u32,
    },
}

/// What a run printed and its exit code.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let mut out = String::new();
    let result = match cli.command {
        Command::Check(a) => cmd_check(&a, &mut out).map(|_| 0),
        Command::Classify(a) => cmd_classify(&a, &mut out).map(|_| 0),
        Command::Theta(a) => cmd_theta(&a, &mut out).map(|_| 0),
        Command::Reproduce(a) => Ok(cmd_reproduce(&a, &mut out)),
        Command::Emit { what } => cmd_emit(&what, &mut out).map(|_| 0),
    };
    match result {
        Ok(code) => Outcome {
            code,
            stdout: out,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: 2,
            stdout: out,
            stderr: format!("error: {e}\n"),
        },
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn in_file<T>(path: &Path, r: Result<T, impl Into<CliError>>) -> Result<T, CliError> {
    r.map_err(|e| CliError::InFile {
        path: path.to_path_buf(),
        source: Box::new(e.into()),
    })
}

fn rows_str(rows: &[Vec<u32>]) -> String {
    let inner: Vec<String> = rows
        .iter()
        .map(|r| {
            format!(
                "[{}]",
                r.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
            )
        })
        .collect();
    format!("[{}]", inner.join(","))
}

fn write_certificate(rep: &Representation, cert: &LiftCertificate, out: &mut String) {
    let p2 = rep.ctx().p() * rep.ctx().p();
    for (name, m) in rep.presentation().names().iter().zip(&cert.mats) {
        let _ = writeln!(out, "CERT: {name} mod {p2} = {}", rows_str(&m.rows()));
    }
}

fn write_refutation(rep: &Representation, r: &Refutation, out: &mut String) {
    let n = rep.dim();
    let names = rep.presentation().names();
    let terms: Vec<String> = r
        .support()
        .into_iter()
        .map(|(row, c)| {
            let (w, rc) = (row / (n * n), row % (n * n));
            let rel = rep.presentation().relators()[w].render(names);
            format!("{c}*[{rel}]({},{})", rc / n, rc % n)
        })
        .collect();
    let _ = writeln!(out, "REFUTE: {}", terms.join(" + "));
}

fn cmd_check(a: &CheckArgs, out: &mut String) -> Result<(), CliError> {
    // Each file's report is assembled whole before it is appended.
    for path in &a.files {
        let mut buf = String::new();
        let rep = in_file(path, parse_rep(&read(path)?))?;
        let _ = writeln!(buf, "FILE: {}", path.display());
        let _ = writeln!(
            buf,
            "p = {}, n = {}, {} generators",
            rep.ctx().p(),
            rep.dim(),
            rep.gen_mats().len()
        );
        let verdict = check_lift(&rep)?;
        match &verdict {
            LiftVerdict::Liftable(cert) => {
                if a.verify && !verify_certificate(&rep, cert) {
                    return Err(CliError::Verification);
                }
                let _ = writeln!(buf, "VERDICT: LIFTABLE");
                write_certificate(&rep, cert, &mut buf);
            }
            LiftVerdict::NotLiftable(r) => {
                if a.verify && !r.is_valid() {
                    return Err(CliError::Verification);
                }
                let _ = writeln!(buf, "VERDICT: NOT_LIFTABLE");
                write_refutation(&rep, r, &mut buf);
            }
        }
        if a.max_brute > 0 {
            match brute_force_lift(&rep, a.max_brute) {
                Ok(found) => {
                    let agree = found.is_some() == verdict.is_liftable();
                    let _ = writeln!(buf, "ORACLE: {}", if agree { "AGREE" } else { "DISAGREE" });
                }
                Err(RepError::BudgetExceeded { .. }) => {
                    let _ = writeln!(buf, "ORACLE: SKIPPED (over budget)");
                }
                Err(e) => return Err(e.into()),
            }
        }
        out.push_str(&buf);
    }
    Ok(())
}

fn load_group(spec: &[String], table: Option<&Path>) -> Result<FiniteGroup, CliError> {
    match table {
        Some(path) => in_file(path, parse_table(&read(path)?)),
        None => {
            let tokens: Vec<&str> = spec.iter().flat_map(|s| s.split_whitespace()).collect();
            Ok(make_family(&parse_family(&tokens)?)?)
        }
    }
}

fn write_witness(w: &Witness, out: &mut String) {
    let _ = writeln!(
        out,
        "bad subgroup {} generated by elements {:?}",
        w.bad.kind, w.bad.generators
    );
    let _ = writeln!(
        out,
        "witness: dimension {} over F_{}, checked at {} level",
        w.rep.dim(),
        w.rep.ctx().p(),
        match w.level {
            crate::classify::CertifiedAt::Group => "group",
            crate::classify::CertifiedAt::Subgroup => "subgroup",
        }
    );
    match &w.certification {
        Certification::Refuted(r) => write_refutation(&w.rep, r, out),
        Certification::Lifts(_) => {
            let _ = writeln!(
                out,
                "UNCERTIFIED: the {} witness lifts; the verdict rests on the classification alone",
                w.bad.kind
            );
        }
    }
}

fn cmd_classify(a: &GroupArgs, out: &mut String) -> Result<(), CliError> {
    let g = load_group(&a.spec, a.table.as_deref())?;
    let _ = writeln!(out, "group of order {}", g.order());
    match classify(&g)? {
        ClassificationVerdict::Liftable(tag) => {
            let _ = writeln!(out, "VERDICT: LIFTABLE ({tag})");
        }
        ClassificationVerdict::NotLiftable(w) => {
            let _ = writeln!(out, "VERDICT: NOT_LIFTABLE ({})", w.bad.kind);
            write_witness(&w, out);
        }
    }
    Ok(())
}

fn cmd_theta(a: &ThetaArgs, out: &mut String) -> Result<(), CliError> {
    let spec: Vec<String> = a.group.iter().cloned().collect();
    let g = load_group(&spec, a.table.as_deref())?;
    let ctx = PrimeCtx::new(a.p)?;
    let f = in_file(&a.f, parse_elt(&read(&a.f)?, ctx, g.order()))?;
    let h = in_file(&a.h, parse_elt(&read(&a.h)?, ctx, g.order()))?;
    let class = theta(&g, &f, &h)?;
    let _ = writeln!(
        out,
        "THETA: {}",
        if class.is_zero { "ZERO" } else { "NONZERO" }
    );
    let _ = writeln!(
        out,
        "representative: {}",
        write_elt(&class.representative).trim_end()
    );
    let _ = writeln!(
        out,
        "quotient dimension: {}",
        g.order() - class.quotient.rank()
    );
    Ok(())
}

fn cmd_reproduce(a: &ReproduceArgs, out: &mut String) -> i32 {
    let report = reproduce(a.corrupt);
    if a.json {
        out.push_str(&serde_json::to_string_pretty(&report).expect("report serializes"));
        out.push('\n');
    } else {
        out.push_str(&report.render());
    }
    if report.all_pass() {
        0
    } else {
        1
    }
}

/// `C2xC2`, `Q8`, `C3xC3`, `C9`, `C<p>`.
pub fn parse_kind(s: &str) -> Result<BadKind, CliError> {
    let bad = || CliError::Usage(format!("unknown witness kind `{s}`"));
    match s {
        "C2xC2" => Ok(BadKind::C2xC2),
        "Q8" => Ok(BadKind::Q8),
        "C3xC3" => Ok(BadKind::C3xC3),
        "C9" => Ok(BadKind::C9),
        _ => {
            let p: u32 = s
                .strip_prefix('C')
                .and_then(|n| n.parse().ok())
                .ok_or_else(bad)?;
            if p >= 5 && crate::finite_rings::is_prime(p as u64) {
                Ok(BadKind::Cp(p))
            } else {
                Err(bad())
            }
        }
    }
}

fn cmd_emit(what: &EmitCommand, out: &mut String) -> Result<(), CliError> {
    match what {
        EmitCommand::Witness { kind } => {
            let rep = witness_representation(parse_kind(kind)?)?;
            let _ = writeln!(out, "# {kind} witness");
            out.push_str(&write_rep(&rep));
        }
        EmitCommand::Companion { p, n, i } => {
            let ctx = PrimeCtx::new(*p)?;
            let divisor = find_divisor_lift(ctx, *n, *i)?.ok_or_else(|| {
                CliError::Usage(format!("no divisor lift of (t-1)^{i} for p={p}, n={n}"))
            })?;
            let (rep, cert) = companion_lift(ctx, *n, *i, &divisor)?;
            let _ = writeln!(
                out,
                "# Jordan block of size {i} for C{}; lifts via {divisor}",
                p.pow(*n)
            );
            out.push_str(&write_rep(&rep));
            for (name, m) in rep.presentation().names().iter().zip(&cert.mats) {
                let _ = writeln!(out, "# lift {name} = {}", rows_str(&m.rows()));
            }
        }
        EmitCommand::Power { p, order, k } => {
            let ctx = PrimeCtx::new(*p)?;
            let g = make_family(&crate::groups::Family::Cyclic(*order))?;
            let sigma = g.generators().first().copied().unwrap_or(0);
            out.push_str(&write_elt(&AlgFp::one_minus_pow(&g, ctx, sigma, *k)));
        }
    }
    Ok(())
}
