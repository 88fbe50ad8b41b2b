//! `hyperlie`: exact verification reports for hypercomplex and complex
//! product structures, printed as JSON.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hyperlie::scalars::GaussRational;

use report::Report;

#[derive(Parser)]
#[command(name = "hyperlie", version, about = "Exact verification of hypercomplex structures on Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Cp,
    Obata,
}

#[derive(Clone, Copy, ValueEnum)]
enum HktAlgebra {
    #[value(name = "gl2c")]
    Gl2c,
    #[value(name = "sl2n1c")]
    Sl2n1c,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    #[value(name = "I")]
    I,
    #[value(name = "II")]
    II,
    #[value(name = "all")]
    All,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(format!("{s} is not a positive integer")),
    }
}

fn unit_disc(s: &str) -> Result<GaussRational, String> {
    let z: GaussRational = s.parse().map_err(|e| format!("{e}"))?;
    if z.norm_sq() >= hyperlie::scalars::Rational::from(1) {
        return Err(format!("|{z}| must be < 1"));
    }
    Ok(z)
}

#[derive(Subcommand)]
enum Command {
    /// Jacobi, complex product, Sasaki and inclusion checks.
    CatalogVerify {
        #[arg(long, default_value = "1", value_parser = positive)]
        n: usize,
    },
    /// Bracket tables, symbolic or at a value of lambda.
    SasakiTables {
        #[arg(long, value_parser = unit_disc, allow_hyphen_values = true, conflicts_with = "symbolic")]
        lambda: Option<GaussRational>,
        #[arg(long)]
        symbolic: bool,
    },
    /// Torsion, parallelism, flatness and the curvature closed forms.
    ConnectionCheck {
        #[arg(long, value_parser = positive)]
        n: usize,
    },
    Holonomy {
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long, value_parser = positive)]
        n: usize,
    },
    /// Non-existence of HKT metrics.
    HktCheck {
        #[arg(long, value_enum)]
        algebra: HktAlgebra,
        #[arg(long, default_value = "1", value_parser = positive)]
        n: usize,
    },
    /// Replays the non-existence proof on sl(3,R).
    Sl3Proof {
        #[arg(long, value_enum, default_value = "all")]
        family: Family,
    },
    EquivalenceIiIii,
    /// Writes a structure-constant or holonomy file.
    Export {
        #[arg(long)]
        object: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Reads and Jacobi-checks a structure-constant file.
    Import { path: PathBuf },
}

fn run(command: Command) -> (String, Result<Report, String>) {
    match command {
        Command::CatalogVerify { n } => ("catalog-verify".into(), commands::catalog_verify(n)),
        Command::SasakiTables { lambda, .. } => ("sasaki-tables".into(), commands::sasaki_tables(lambda)),
        Command::ConnectionCheck { n } => ("connection-check".into(), commands::connection_check(n)),
        Command::Holonomy { target, n } => {
            let t = match target {
                Target::Cp => "cp",
                Target::Obata => "obata",
            };
            ("holonomy".into(), commands::holonomy(t, n))
        }
        Command::HktCheck { algebra, n } => {
            let a = match algebra {
                HktAlgebra::Gl2c => "gl2c",
                HktAlgebra::Sl2n1c => "sl2n1c",
            };
            ("hkt-check".into(), commands::hkt_check(a, n))
        }
        Command::Sl3Proof { family } => {
            let f = match family {
                Family::I => "I",
                Family::II => "II",
                Family::All => "all",
            };
            ("sl3-proof".into(), commands::sl3_proof(f))
        }
        Command::EquivalenceIiIii => ("equivalence-ii-iii".into(), commands::equivalence_ii_iii()),
        Command::Export { object, out } => ("export".into(), commands::export(&object, &out)),
        Command::Import { path } => ("import".into(), commands::import(&path)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, outcome) = run(cli.command);
    let report = outcome.unwrap_or_else(|e| Report::error(&name, e));
    println!("{}", report.to_json());
    ExitCode::from(report.exit_code() as u8)
}
