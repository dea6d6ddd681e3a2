//! `dbracket`: reports, classification, structure constants and the
//! verification sweep from the command line.
//!
//! Exit codes: 0 success or isomorphic, 1 verification failure or not
//! isomorphic, 2 usage error.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use dbracket::classify::{iso_decision, AlgebraSpec, ClassificationVerdict, WitnessKind};
use dbracket::derived::build_algebra;
use dbracket::linalg::format_ratio;
use dbracket::structure::{verify_levi_decomposition, DecompositionReport};
use dbracket::sweep::{run_sweep, verify_table, SweepConfig, SweepReport};
use dbracket::DerivedAlgebra;

const EXIT_OK: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "dbracket",
    version,
    about = "Derived-bracket Lie algebras from gl(m|n)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Levi decomposition report for the rank-R algebra of gl(M|N).
    Info {
        m: usize,
        n: usize,
        r: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Decide whether the rank-R1 algebra of gl(M|N) and the rank-R2 algebra
    /// of gl(P|Q) are isomorphic.
    Classify {
        m: usize,
        n: usize,
        r1: usize,
        p: usize,
        q: usize,
        r2: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Structure constants of the rank-R algebra of gl(M|N).
    Constants {
        m: usize,
        n: usize,
        r: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the exhaustive verification sweep, or check a constants table.
    Verify {
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
        max_dim: u64,
        /// JSON constants table to check instead of running the sweep.
        #[arg(long)]
        table: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    eprintln!("usage: dbracket info M N R | classify M N R1 P Q R2 | constants M N R [--format json|text] | verify [--max-dim K]");
    ExitCode::from(EXIT_USAGE)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Info { m, n, r, format } => cmd_info(m, n, r, format),
        Command::Classify {
            m,
            n,
            r1,
            p,
            q,
            r2,
            format,
        } => cmd_classify((m, n, r1), (p, q, r2), format),
        Command::Constants { m, n, r, format } => cmd_constants(m, n, r, format),
        Command::Verify {
            max_dim,
            table,
            format,
        } => cmd_verify(max_dim as usize, table, format),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn render_report(rep: &DecompositionReport) -> String {
    let rows = [
        (
            "algebra",
            format!("gl({}|{}), rank {}", rep.m, rep.n, rep.rank_r),
        ),
        ("dim_total", rep.dim_total.to_string()),
        ("dim_levi", rep.dim_levi.to_string()),
        ("dim_radical", rep.dim_radical.to_string()),
        ("dim_center", rep.dim_center.to_string()),
        ("abelian", yes_no(rep.is_abelian).to_string()),
        ("solvable", yes_no(rep.is_solvable).to_string()),
        ("levi_factor", rep.levi_name()),
    ];
    let mut out = String::new();
    for (k, v) in rows {
        let _ = writeln!(out, "{k:<12} {v}");
    }
    out
}

fn cmd_info(m: usize, n: usize, r: usize, format: Format) -> ExitCode {
    let spec = match AlgebraSpec::new(m, n, r) {
        Ok(s) => s,
        Err(e) => return usage_error(e),
    };
    match verify_levi_decomposition(spec.shape(), r) {
        Ok(rep) => {
            match format {
                Format::Text => print!("{}", render_report(&rep)),
                Format::Json => {
                    let mut v = serde_json::to_value(&rep).expect("report serializes");
                    v["levi_factor"] = json!(rep.levi_name());
                    println!("{}", serde_json::to_string_pretty(&v).expect("json value"));
                }
            }
            ExitCode::from(EXIT_OK)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(EXIT_FAIL)
        }
    }
}

fn witness_description(kind: WitnessKind) -> &'static str {
    match kind {
        WitnessKind::Identity => "identity (same shape and rank)",
        WitnessKind::Flip => "flip: F_i_j -> -F'_j_i (supertranspose after block swap)",
        WitnessKind::AbelianBijection => "coordinate bijection of abelian algebras",
        WitnessKind::ComposedConjugation => "composed conjugation",
    }
}

fn verdict_json(s1: AlgebraSpec, s2: AlgebraSpec, v: &ClassificationVerdict) -> serde_json::Value {
    let witness = v.witness.as_ref().map(|w| {
        let mat = w.map.matrix();
        let rows: Vec<Vec<String>> = (0..mat.rows())
            .map(|i| mat.row(i).iter().map(format_ratio).collect())
            .collect();
        json!({ "kind": w.kind, "matrix": rows })
    });
    json!({
        "left": s1,
        "right": s2,
        "isomorphic": v.isomorphic,
        "witness": witness,
        "separator": v.separator,
        "abelian_extension": v.abelian_extension,
    })
}

fn cmd_classify(a: (usize, usize, usize), b: (usize, usize, usize), format: Format) -> ExitCode {
    let (s1, s2) = match (
        AlgebraSpec::new(a.0, a.1, a.2),
        AlgebraSpec::new(b.0, b.1, b.2),
    ) {
        (Ok(x), Ok(y)) => (x, y),
        (Err(e), _) | (_, Err(e)) => return usage_error(e),
    };
    let v = iso_decision(s1, s2);
    match format {
        Format::Text => {
            println!("{s1}  vs  {s2}");
            if v.isomorphic {
                println!("ISOMORPHIC");
                if let Some(w) = &v.witness {
                    println!("witness: {}", witness_description(w.kind));
                }
            } else {
                println!("NOT ISOMORPHIC");
                if let Some(sep) = &v.separator {
                    println!("separator: {sep}");
                }
            }
            if v.abelian_extension {
                println!("note: decided by the abelian rule (rank 0 or gl(1|1)), an extension of the rank >= 1 criterion");
            }
        }
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&verdict_json(s1, s2, &v)).expect("json value")
            );
        }
    }
    ExitCode::from(if v.isomorphic { EXIT_OK } else { EXIT_FAIL })
}

fn render_constants(alg: &DerivedAlgebra) -> String {
    let labels = alg.basis_labels();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{} rank {}  dim {}  ({} nonzero brackets)",
        alg.shape(),
        alg.rank_r(),
        alg.dim(),
        alg.constants().count()
    );
    let _ = writeln!(
        out,
        "basis: {}",
        labels
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    );
    let width = labels
        .iter()
        .map(|l| l.to_string().len())
        .max()
        .unwrap_or(0);
    for (u, v, terms) in alg.constants() {
        let rhs: Vec<String> = terms
            .iter()
            .map(|(k, x)| format!("{} {}", format_ratio(x), labels[*k]))
            .collect();
        let _ = writeln!(
            out,
            "[{:<width$}, {:<width$}] = {}",
            labels[u].to_string(),
            labels[v].to_string(),
            rhs.join(" + ")
        );
    }
    out
}

fn cmd_constants(m: usize, n: usize, r: usize, format: Format) -> ExitCode {
    let spec = match AlgebraSpec::new(m, n, r) {
        Ok(s) => s,
        Err(e) => return usage_error(e),
    };
    let alg = build_algebra(spec.shape(), r).expect("spec validated");
    match format {
        Format::Text => print!("{}", render_constants(&alg)),
        Format::Json => println!("{}", alg.to_json()),
    }
    ExitCode::from(EXIT_OK)
}

fn seed_from_env() -> Result<u64, String> {
    match std::env::var("DB_SEED") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| format!("DB_SEED must be a non-negative integer, got {s:?}")),
        Err(std::env::VarError::NotPresent) => Ok(0),
        Err(e) => Err(e.to_string()),
    }
}

fn print_sweep(report: &SweepReport, format: Format) {
    match format {
        Format::Text => print!("{report}"),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(report).expect("report serializes")
        ),
    }
}

fn cmd_verify(max_dim: usize, table: Option<PathBuf>, format: Format) -> ExitCode {
    let report = match table {
        Some(path) => {
            let text = match std::fs::read_to_string(&path) {
                Ok(t) => t,
                Err(e) => return usage_error(format!("cannot read {}: {e}", path.display())),
            };
            match DerivedAlgebra::from_json(&text) {
                Ok(alg) => verify_table(&alg),
                Err(e) => {
                    eprintln!("{}: {e}", path.display());
                    return ExitCode::from(EXIT_FAIL);
                }
            }
        }
        None => {
            let seed = match seed_from_env() {
                Ok(s) => s,
                Err(e) => return usage_error(e),
            };
            run_sweep(&SweepConfig::new(max_dim, seed))
        }
    };
    print_sweep(&report, format);
    match report.first_failure() {
        None => ExitCode::from(EXIT_OK),
        Some((family, msg)) => {
            eprintln!("FAILED [{family}]: {msg}");
            ExitCode::from(EXIT_FAIL)
        }
    }
}
