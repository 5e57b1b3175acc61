use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use euler_char::{chi_table, configure_threads, golden_table, Backend, ChiTable, SpecializationParams};
use exact_core::format_rational;
use kp_npoint::{AffineBackend, NPointBackend};
use series_algebra::{GradedPoly, NPointSeries};
use serde_json::json;
use virasoro_recursions::{fat_min_order, FatBackend, ThinBackend};

mod verify;

#[derive(Parser)]
#[command(name = "moduli-euler", version, about = "Exact 1D gravity n-point functions and Euler characteristics of Mbar_{g,n}")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BackendArg {
    Affine,
    Thin,
    Fat,
}

impl From<BackendArg> for Backend {
    fn from(b: BackendArg) -> Self {
        match b {
            BackendArg::Affine => Backend::Affine,
            BackendArg::Thin => Backend::Thin,
            BackendArg::Fat => Backend::Fat,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Partition function Z up to t-degree D.
    Zpart {
        #[arg(long, value_parser = clap::value_parser!(u32).range(0..=40))]
        degree: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Free energy log Z up to t-degree D.
    FreeEnergy {
        #[arg(long, value_parser = clap::value_parser!(u32).range(0..=40))]
        degree: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Connected n-point function up to total order L, as JSON.
    Npoint {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=32))]
        n: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        order: u32,
        #[arg(long, value_enum, default_value_t = BackendArg::Affine)]
        backend: BackendArg,
        /// Second backend; exit nonzero unless it gives the identical series.
        #[arg(long, value_enum)]
        cross_check: Option<BackendArg>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Table of chi(Mbar_{g,n}) for g <= gmax, n <= nmax.
    Chi {
        #[arg(long, default_value_t = 8)]
        gmax: u32,
        #[arg(long, default_value_t = 6)]
        nmax: u32,
        #[arg(long, value_enum, default_value_t = BackendArg::Affine)]
        backend: BackendArg,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Render as a markdown table instead.
        #[arg(long)]
        markdown: bool,
        /// Compare with the shipped table, or with a CSV file.
        #[arg(long, num_args = 0..=1)]
        gold: Option<Option<PathBuf>>,
        /// Second backend; exit nonzero unless it gives the identical table.
        #[arg(long, value_enum)]
        cross_check: Option<BackendArg>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run an invariant suite, one PASS/FAIL line per property.
    Verify {
        #[arg(value_enum)]
        suite: verify::Suite,
    },
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn poly_text(p: &GradedPoly, format: Format) -> Result<String, String> {
    match format {
        Format::Text => Ok(p.dump()),
        Format::Json => {
            let terms: Vec<_> = p
                .terms()
                .map(|(m, c)| json!({"monomial": m.to_string(), "c": format_rational(c)}))
                .collect();
            let v = json!({"degree": p.degree_cap(), "terms": terms});
            Ok(serde_json::to_string_pretty(&v).expect("json") + "\n")
        }
        Format::Csv => Err("csv output is only available for chi".into()),
    }
}

fn npoint_engine(b: BackendArg, n: usize, order: u32) -> Box<dyn NPointBackend> {
    match b {
        BackendArg::Affine => Box::new(AffineBackend),
        BackendArg::Thin => Box::new(ThinBackend),
        BackendArg::Fat => {
            let max_genus = (0..).take_while(|&g| fat_min_order(g, n) <= order).last().unwrap_or(0);
            Box::new(FatBackend { max_genus })
        }
    }
}

fn npoint(n: u32, order: u32, backend: BackendArg) -> Result<NPointSeries, String> {
    let n = n as usize;
    npoint_engine(backend, n, order).npoint(n, order).map_err(|e| e.to_string())
}

fn table_text(t: &ChiTable, format: Format, markdown: bool) -> Result<String, String> {
    if markdown {
        return Ok(t.to_markdown());
    }
    match format {
        Format::Csv => Ok(t.to_csv()),
        Format::Json => Ok(t.to_json_string()),
        Format::Text => Ok(t.to_markdown()),
    }
}

fn run(cli: Cli) -> Result<bool, String> {
    configure_threads().map_err(|e| e.to_string())?;
    match cli.command {
        Command::Zpart { degree, format, out } => {
            emit(&poly_text(&gravity_1d::partition_function(degree), format)?, &out)?;
        }
        Command::FreeEnergy { degree, format, out } => {
            emit(&poly_text(&gravity_1d::free_energy(degree), format)?, &out)?;
        }
        Command::Npoint { n, order, backend, cross_check, out } => {
            let series = npoint(n, order, backend)?;
            emit(&series.to_json_string(), &out)?;
            if let Some(other) = cross_check {
                let second = npoint(n, order, other)?;
                if let Some((key, a, b)) = series.first_difference(&second) {
                    eprintln!("{backend:?} and {other:?} differ at {key:?}: {a} vs {b}");
                    return Ok(false);
                }
            }
        }
        Command::Chi { gmax, nmax, backend, format, markdown, gold, cross_check, out } => {
            let params = SpecializationParams::new(gmax, nmax).map_err(|e| e.to_string())?;
            let table = chi_table(&params, backend.into()).map_err(|e| e.to_string())?;
            emit(&table_text(&table, format, markdown)?, &out)?;
            let mut ok = true;
            if let Some(other) = cross_check {
                let second = chi_table(&params, other.into()).map_err(|e| e.to_string())?;
                for m in table.mismatches(&second) {
                    eprintln!("cross-check mismatch at ({}, {}): {:?} vs {:?}", m.g, m.n, m.ours, m.theirs);
                    ok = false;
                }
            }
            if let Some(path) = gold {
                let reference = match path {
                    None => golden_table(),
                    Some(path) => {
                        let text = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
                        ChiTable::from_csv(&text).map_err(|e| e.to_string())?
                    }
                };
                let bad = table.check_against(&reference);
                for m in &bad {
                    eprintln!("gold mismatch at ({}, {}): {:?} vs {:?}", m.g, m.n, m.ours, m.theirs);
                }
                let compared = reference.entries().filter(|(g, n, _)| *g <= gmax && *n <= nmax).count();
                eprintln!("gold: {} of {compared} entries agree", compared - bad.len());
                ok &= bad.is_empty();
            }
            return Ok(ok);
        }
        Command::Verify { suite } => return Ok(verify::run(suite)),
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
