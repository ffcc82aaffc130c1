//! `fthresh`: exact positive-characteristic invariants of graded rings from
//! the command line. Reads a problem file describing F_p[vars]/(quotient)
//! and named ideals, runs one computation, and prints a deterministic JSON
//! report (or a derived text table).

use clap::{Args, Parser, Subcommand};
use fthresh_cli::commands::{exit_status, execute, Command as Op, ExitStatus, SweepOp};
use fthresh_cli::problem;
use fthresh_cli::report;
use fthresh_core::groebner::GbLimits;
use fthresh_core::mult::FSigMethod;
use fthresh_core::{Error, Limits};
use problem::ProblemFile;
use report::{ContextOut, ErrorOut, ReportDocument, TimingOut, ToolInfo};
use std::io::Read;

#[derive(Parser)]
#[command(
    name = "fthresh",
    version,
    about = "Exact F-thresholds, F-purity, splitting ideals, Hilbert-Kunz colengths and F-signature estimates over F_p"
)]
struct Cli {
    /// Emit the JSON report (default).
    #[arg(long, global = true)]
    json: bool,
    /// Emit an aligned text table derived from the JSON instead.
    #[arg(long, global = true, conflicts_with = "json")]
    table: bool,
    /// Worker threads for independent per-e rows (default 1 keeps timings
    /// deterministic).
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
    /// Budget for Groebner S-pair reductions.
    #[arg(long, global = true)]
    max_gb_pairs: Option<u64>,
    /// Budget for power ladders in nu searches.
    #[arg(long, global = true)]
    max_power: Option<u64>,
    /// Raise budgets for the minutes-scale example suites.
    #[arg(long, global = true)]
    slow: bool,
    #[command(subcommand)]
    command: CliCommand,
}

#[derive(Args, Clone)]
struct FileArg {
    /// Problem file (`-` reads standard input).
    file: String,
}

#[derive(Subcommand, Clone)]
enum CliCommand {
    /// F-purity of the quotient by Fedder's criterion.
    Fedder(FileArg),
    /// Exact nu_a^J(p^e).
    Nu {
        #[arg(long)]
        a: String,
        #[arg(long = "J")]
        j: String,
        #[arg(long, default_value_t = 1)]
        e: u32,
        #[command(flatten)]
        file: FileArg,
    },
    /// Certified interval for the F-threshold c^J(a).
    Threshold {
        #[arg(long)]
        a: String,
        #[arg(long = "J")]
        j: String,
        #[arg(long, default_value_t = 2)]
        emax: u32,
        #[command(flatten)]
        file: FileArg,
    },
    /// Certified interval for the F-pure threshold fpt(a).
    Fpt {
        #[arg(long, default_value = "m")]
        a: String,
        #[arg(long, default_value_t = 1)]
        emax: u32,
        #[arg(long, default_value_t = 1)]
        smax: u32,
        #[command(flatten)]
        file: FileArg,
    },
    /// Splitting ideals I_e with b_a(p^e) and colengths.
    Splitting {
        #[arg(long, default_value = "m")]
        a: String,
        #[arg(long, default_value_t = 1)]
        emax: u32,
        #[command(flatten)]
        file: FileArg,
    },
    /// Hilbert-Kunz colength sequence of an m-primary ideal.
    Hk {
        #[arg(long = "J")]
        j: String,
        #[arg(long, default_value_t = 1)]
        emax: u32,
        #[command(flatten)]
        file: FileArg,
    },
    /// F-signature estimates (direct or Gorenstein shortcut).
    Fsig {
        #[arg(long, default_value_t = 1)]
        emax: u32,
        #[arg(long, default_value = "direct")]
        method: String,
        #[arg(long)]
        jsop: Option<String>,
        #[command(flatten)]
        file: FileArg,
    },
    /// Socle degree a_0(R/J) of an m-primary ideal.
    Ainv0 {
        #[arg(long = "J")]
        j: String,
        #[command(flatten)]
        file: FileArg,
    },
    /// Top a-invariant of a complete-intersection quotient.
    Atop(FileArg),
    /// Checks the relation chain fpt <= -a_d <= c^m, the nu formula, and
    /// the F-signature lower bound; exit code 2 on a violated relation.
    Verify {
        #[arg(long, default_value_t = 1)]
        emax: u32,
        #[arg(long = "J")]
        j: Option<String>,
        #[arg(long)]
        jsop: Option<String>,
        /// Asserted a_d for quotients that are not complete intersections.
        #[arg(long)]
        ad: Option<i64>,
        /// Also compare c^{I_e}(m) against p^e c^m(m) level by level.
        #[arg(long)]
        check_fpt_cm: bool,
        #[command(flatten)]
        file: FileArg,
    },
    /// Re-runs one operation for e = 1..emax, streaming progress rows.
    Sweep {
        #[arg(long)]
        op: String,
        #[arg(long, default_value = "m")]
        a: String,
        #[arg(long = "J", default_value = "m")]
        j: String,
        #[arg(long, default_value_t = 2)]
        emax: u32,
        #[command(flatten)]
        file: FileArg,
    },
}

fn file_of(cmd: &CliCommand) -> &str {
    match cmd {
        CliCommand::Fedder(f) | CliCommand::Atop(f) => &f.file,
        CliCommand::Nu { file, .. }
        | CliCommand::Threshold { file, .. }
        | CliCommand::Fpt { file, .. }
        | CliCommand::Splitting { file, .. }
        | CliCommand::Hk { file, .. }
        | CliCommand::Fsig { file, .. }
        | CliCommand::Ainv0 { file, .. }
        | CliCommand::Verify { file, .. }
        | CliCommand::Sweep { file, .. } => &file.file,
    }
}

fn to_op(cmd: &CliCommand) -> Result<Op, Error> {
    Ok(match cmd.clone() {
        CliCommand::Fedder(_) => Op::Fedder,
        CliCommand::Nu { a, j, e, .. } => Op::Nu { a, j, e },
        CliCommand::Threshold { a, j, emax, .. } => Op::Threshold { a, j, emax },
        CliCommand::Fpt { a, emax, smax, .. } => Op::Fpt { a, emax, smax },
        CliCommand::Splitting { a, emax, .. } => Op::Splitting { a, emax },
        CliCommand::Hk { j, emax, .. } => Op::Hk { j, emax },
        CliCommand::Fsig {
            emax, method, jsop, ..
        } => Op::Fsig {
            emax,
            method: match method.as_str() {
                "direct" => FSigMethod::Direct,
                "gorenstein" => FSigMethod::Gorenstein,
                other => {
                    return Err(Error::InvalidParameter(format!(
                        "unknown fsig method `{other}` (expected direct or gorenstein)"
                    )))
                }
            },
            jsop,
        },
        CliCommand::Ainv0 { j, .. } => Op::Ainv0 { j },
        CliCommand::Atop(_) => Op::Atop,
        CliCommand::Verify {
            emax,
            j,
            jsop,
            ad,
            check_fpt_cm,
            ..
        } => Op::Verify {
            emax,
            j,
            jsop,
            ad,
            check_fpt_cm,
        },
        CliCommand::Sweep { op, a, j, emax, .. } => Op::Sweep {
            op: match op.as_str() {
                "nu" => SweepOp::Nu,
                "hk" => SweepOp::Hk,
                "splitting" => SweepOp::Splitting,
                other => {
                    return Err(Error::InvalidParameter(format!(
                        "unknown sweep op `{other}` (expected nu, hk or splitting)"
                    )))
                }
            },
            a,
            j,
            emax,
        },
    })
}

fn read_input(path: &str) -> std::io::Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
    }
}

fn main() {
    let cli = Cli::parse();
    let started = std::time::Instant::now();

    let mut gb = GbLimits::default();
    if let Some(pairs) = cli.max_gb_pairs {
        gb.max_pairs = pairs;
    } else if cli.slow {
        gb.max_pairs = gb.max_pairs.saturating_mul(10);
    }
    let limits = Limits {
        gb,
        max_power: cli.max_power,
    };

    let path = file_of(&cli.command).to_string();
    let text = match read_input(&path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read `{path}`: {e}");
            std::process::exit(ExitStatus::Error as i32);
        }
    };
    let digest = report::digest_hex(text.as_bytes());

    let mut errors: Vec<ErrorOut> = Vec::new();
    let mut results = Vec::new();
    let mut relations = Vec::new();
    let mut footnotes = Vec::new();
    let mut context_out = ContextOut {
        p: 0,
        vars: vec![],
        quotient: vec![],
        dim: None,
        multiplicity: None,
        f_pure: None,
    };

    let mut run = || -> Result<(), Error> {
        let pf = ProblemFile::parse(&text)?;
        let ctx = pf.context(limits)?;
        context_out.p = ctx.p();
        context_out.vars = ctx.var_names().to_vec();
        context_out.quotient = ctx
            .defining_ideal()
            .gens()
            .iter()
            .map(|g| g.display(ctx.var_names()).to_string())
            .collect();
        let op = to_op(&cli.command)?;
        if let Ok((dim, mult)) = ctx.dim_and_multiplicity() {
            context_out.dim = Some(dim);
            context_out.multiplicity = Some(mult);
        }
        let outcome = execute(&op, &pf, &ctx, cli.workers.max(1))?;
        context_out.f_pure = ctx.f_purity_if_computed();
        results = outcome.results;
        relations = outcome.relations;
        footnotes = outcome.footnotes;
        Ok(())
    };

    let had_error = match run() {
        Ok(()) => false,
        Err(e) => {
            errors.push(ErrorOut {
                code: e.code().to_string(),
                message: e.to_string(),
            });
            true
        }
    };

    let doc = ReportDocument {
        tool: ToolInfo {
            name: "fthresh",
            version: env!("CARGO_PKG_VERSION"),
        },
        input_digest: digest,
        context: context_out,
        results,
        relations,
        errors,
        footnotes,
        timing: TimingOut {
            total_ms: started.elapsed().as_millis(),
        },
    };

    if cli.table {
        print!("{}", doc.to_table());
    } else {
        println!("{}", doc.to_json());
    }
    std::process::exit(exit_status(&doc.relations, had_error) as i32);
}
