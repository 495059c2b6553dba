use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use defring_audit::audit::GnAuditInput;
use defring_audit::partitions::Partition;
use defring_audit::scenario::{
    batch_exit_code, parse_scenarios, run_batch, run_scenario, CohomologyTask, DensityTask,
    JChoice, JSpec, MatrixSpec, PartitionTask, Payload, Report, Scenario, TaylorTask,
};
use defring_audit::verify::verify_all;
use defring_audit::Error;

#[derive(Parser)]
#[command(
    name = "defring-audit",
    version,
    about = "Exact audits of deformation-ring dimension bookkeeping"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario file (one object or an array).
    Run {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Smoothness and dual-Selmer audit for G_n.
    GnAudit {
        #[arg(long)]
        n: u64,
        #[arg(long = "degF")]
        deg_f: u64,
        #[arg(long = "s", default_value_t = 0)]
        s_count: u64,
        #[arg(long, value_delimiter = ',')]
        ell: Vec<u64>,
    },
    /// Run all twelve self-checks.
    VerifyAll {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Conjugate partitions and the nilpotent kernel dictionary.
    #[command(subcommand)]
    Partition(PartitionCmd),
    /// Cohomology of finite cyclic groups and the twisted involution.
    #[command(subcommand)]
    Cohom(CohomCmd),
    /// Splitting density bound for Γ × (Z/2)^k × Z/2.
    Density {
        #[arg(long)]
        gamma: String,
        #[arg(long, default_value = "trivial")]
        subgroup: String,
        #[arg(long)]
        k: u32,
    },
    /// Taylor's condition: threshold, unipotent type and q-power checks.
    #[command(subcommand)]
    Taylor(TaylorCmd),
}

#[derive(Subcommand)]
enum PartitionCmd {
    Conjugate {
        partition: Partition,
    },
    Theta {
        partition: Partition,
        #[arg(long, default_value_t = 5)]
        p: u64,
    },
    VerifyLemma {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 5)]
        p: u64,
    },
}

#[derive(Subcommand)]
enum CohomCmd {
    /// Cohomology of Z/order acting through a matrix given as JSON {"p", "m", "rows"}.
    Cyclic {
        #[arg(long)]
        order: u64,
        #[arg(long)]
        sigma: String,
    },
    /// Eigenspaces of x -> -J x^t J^{-1} on gl_n.
    Involution {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 5)]
        p: u64,
        /// `antidiag`, `symplectic`, or a JSON matrix.
        #[arg(long = "J", default_value = "antidiag")]
        j: String,
    },
}

#[derive(Subcommand)]
enum TaylorCmd {
    Threshold {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        ell: Option<u64>,
    },
    CheckType {
        #[arg(long)]
        matrix: String,
    },
    Qpower {
        #[arg(long)]
        matrix: String,
        #[arg(long)]
        phi: String,
        #[arg(long)]
        q: u64,
    },
}

fn matrix(json: &str) -> Result<MatrixSpec, Error> {
    serde_json::from_str(json).map_err(|e| Error::InvalidInput(format!("matrix JSON: {e}")))
}

fn payload(command: Command) -> Result<Payload, Error> {
    Ok(match command {
        Command::GnAudit {
            n,
            deg_f,
            s_count,
            ell,
        } => Payload::GnAudit(GnAuditInput {
            n,
            deg_f,
            s_count,
            ell_degrees: ell,
        }),
        Command::Partition(c) => Payload::Partition(match c {
            PartitionCmd::Conjugate { partition } => PartitionTask::Conjugate { partition },
            PartitionCmd::Theta { partition, p } => PartitionTask::Theta { partition, p },
            PartitionCmd::VerifyLemma { n, p } => PartitionTask::VerifyLemma { n, p },
        }),
        Command::Cohom(c) => Payload::Cohomology(match c {
            CohomCmd::Cyclic { order, sigma } => CohomologyTask::Cyclic {
                order,
                sigma: matrix(&sigma)?,
            },
            CohomCmd::Involution { n, p, j } => {
                let j = match j.as_str() {
                    "antidiag" | "antidiagonal" => JSpec::Named(JChoice::Antidiagonal),
                    "symplectic" => JSpec::Named(JChoice::Symplectic),
                    other => JSpec::Matrix(matrix(other)?),
                };
                CohomologyTask::Involution { n, p, j }
            }
        }),
        Command::Density { gamma, subgroup, k } => {
            Payload::Density(DensityTask { gamma, subgroup, k })
        }
        Command::Taylor(c) => Payload::Taylor(match c {
            TaylorCmd::Threshold { q, n, ell } => TaylorTask::Threshold { q, n, ell },
            TaylorCmd::CheckType { matrix: m } => TaylorTask::CheckType {
                matrix: matrix(&m)?,
            },
            TaylorCmd::Qpower { matrix: m, phi, q } => TaylorTask::Qpower {
                matrix: matrix(&m)?,
                phi: matrix(&phi)?,
                q,
            },
        }),
        Command::Run { .. } | Command::VerifyAll { .. } => unreachable!("handled separately"),
    })
}

fn emit(json: String, out: Option<&PathBuf>) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, json + "\n")
            .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display()))),
        None => {
            print_stdout(&json);
            Ok(())
        }
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn print_stdout(text: &str) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout(), "{text}");
}

fn pretty<T: serde::Serialize>(x: &T) -> String {
    serde_json::to_string_pretty(x).expect("reports serialize")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result: Result<i32, Error> = match cli.command {
        Command::Run { file, out } => (|| {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", file.display())))?;
            let is_batch = text.trim_start().starts_with('[');
            let reports: Vec<Report> = run_batch(&parse_scenarios(&text)?)?;
            let json = if is_batch {
                pretty(&reports)
            } else {
                pretty(&reports[0])
            };
            emit(json, out.as_ref())?;
            Ok(batch_exit_code(&reports))
        })(),
        Command::VerifyAll { max_n, seed } => {
            let report = verify_all(max_n, seed);
            for c in &report.criteria {
                eprintln!(
                    "[{}] {:>2} {} ({} ms, budget {} ms): {}",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.id,
                    c.name,
                    c.elapsed_ms,
                    c.budget_ms,
                    c.detail
                );
            }
            print_stdout(&pretty(&report));
            Ok(if report.passed { 0 } else { 1 })
        }
        other => payload(other).map(|payload| {
            let name = payload.mode().to_string();
            let report = run_scenario(&Scenario { name, payload });
            print_stdout(&pretty(&report));
            report.exit_code
        }),
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
