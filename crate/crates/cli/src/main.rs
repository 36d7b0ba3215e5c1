//! `sympro`: batch front end for catalog verification, prolongation queries, realizations,
//! Fedosov reports and CE cohomology.
//!
//! Output is one `kind key=value ...` record per line, starting with a `config` record that echoes
//! every setting of the run (defaults included). `--format text` prints the same records as indented
//! blocks. Exit status is 0 when every check passes, 1 when a verification fails and 2 on malformed
//! input.

mod commands;
mod input;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use sympro::realizations::families::default_truncation;
use sympro::record::Record;

#[derive(Parser, Debug)]
#[command(name = "sympro", version, about = "Exact prolongation, realization and Fedosov computations")]
struct Cli {
    /// Output layout.
    #[arg(long, value_enum, global = true, default_value_t = Format::Records)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    /// One `kind key=value ...` line per record.
    Records,
    /// The kind on its own line, then one `key: value` line per field.
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List or verify catalog entries.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Prolongation dimensions of the subalgebra spanned by the generators in a file.
    Prolong {
        #[arg(long)]
        gens: PathBuf,
        #[arg(long, default_value_t = sympro::prolongation::DEFAULT_KMAX)]
        kmax: usize,
    },
    /// Finite-type verdict for the subalgebra spanned by the generators in a file.
    FiniteType {
        #[arg(long)]
        gens: PathBuf,
    },
    /// Build and check a transitive algebra in one of the abstract models.
    Realize {
        #[command(subcommand)]
        which: RealizeKind,
    },
    /// Left-symmetric product, connection, curvature and Ricci tensor of a symplectic Lie algebra.
    Fedosov {
        #[arg(long)]
        algebra: PathBuf,
        /// `summary` or `full` (adds the product, connection and curvature tables).
        #[arg(long, default_value = "summary")]
        report: String,
    },
    /// First CE cohomology of a quadratic subalgebra acting on a span of tensors by Poisson bracket.
    CeH1 {
        /// Basis tensors of the algebra, separated by `;`.
        #[arg(long)]
        algebra: String,
        /// Basis tensors of the module, separated by `;`.
        #[arg(long)]
        module: String,
        /// Half-dimension of the symplectic space.
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    List,
    Verify {
        /// Entry name or label; all entries at representative parameters when omitted.
        name: Option<String>,
        /// Parameter assignment `name=value`, repeatable.
        #[arg(long = "param")]
        params: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
enum RealizeKind {
    #[command(name = "thmK1")]
    K1Realization {
        /// hyperbolic, sphere, sl2aff or euclid.
        #[arg(long)]
        base: String,
        #[arg(long)]
        k: u32,
        #[arg(long = "N", default_value_t = 0)]
        n: u32,
        /// Degree up to which the area-form check is expanded; defaults to max(2k+2, 8).
        #[arg(long)]
        truncation: Option<u32>,
    },
    #[command(name = "thmK2")]
    K2Realization {
        /// sl2aff2, gl2aff2, conf or euc:ALPHA.
        #[arg(long)]
        base: String,
        /// `Pk` or a sum of triangle tops such as `W(1,1)+W(1,-1)`.
        #[arg(long)]
        xi: String,
    },
}

fn config(cli: &Cli) -> Record {
    let fmt = match cli.format {
        Format::Records => "records",
        Format::Text => "text",
    };
    let r = Record::new("config");
    let r = match &cli.command {
        Command::Catalog { action: CatalogAction::List } => r.field("command", "catalog-list"),
        Command::Catalog { action: CatalogAction::Verify { name, params } } => r
            .field("command", "catalog-verify")
            .field("name", name.as_deref().unwrap_or("-"))
            .field("params", if params.is_empty() { "-".to_string() } else { params.join(",") })
            .field("grid", input::grid_text()),
        Command::Prolong { gens, kmax } => {
            r.field("command", "prolong").field("gens", gens.display()).field("kmax", kmax)
        }
        Command::FiniteType { gens } => {
            r.field("command", "finite-type").field("gens", gens.display()).field("grid", input::grid_text())
        }
        Command::Realize { which: RealizeKind::K1Realization { base, k, n, truncation } } => r
            .field("command", "realize-thmK1")
            .field("base", base)
            .field("k", k)
            .field("N", n)
            .field("truncation", truncation.unwrap_or_else(|| default_truncation(*k))),
        Command::Realize { which: RealizeKind::K2Realization { base, xi } } => {
            r.field("command", "realize-thmK2").field("base", base).field("xi", xi)
        }
        Command::Fedosov { algebra, report } => {
            r.field("command", "fedosov").field("algebra", algebra.display()).field("report", report)
        }
        Command::CeH1 { algebra, module, n } => {
            r.field("command", "ce-h1").field("algebra", algebra).field("module", module).field("n", n)
        }
    };
    r.field("format", fmt)
}

fn print(out: &mut impl Write, record: &Record, format: Format) -> io::Result<()> {
    match format {
        Format::Records => writeln!(out, "{record}"),
        Format::Text => {
            writeln!(out, "{}", record.kind())?;
            for (k, v) in record.fields() {
                writeln!(out, "  {k}: {v}")?;
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = io::stdout().lock();
    // a closed pipe only truncates the report; the exit status still reflects the run
    let _ = print(&mut out, &config(&cli), cli.format);
    let result = match cli.command {
        Command::Catalog { action: CatalogAction::List } => commands::catalog_list(),
        Command::Catalog { action: CatalogAction::Verify { name, params } } => {
            commands::catalog_verify(name.as_deref(), &params)
        }
        Command::Prolong { gens, kmax } => commands::prolong(&gens, kmax),
        Command::FiniteType { gens } => commands::finite_type(&gens),
        Command::Realize { which: RealizeKind::K1Realization { base, k, n, truncation } } => {
            commands::realize_k1(&base, k, n, truncation)
        }
        Command::Realize { which: RealizeKind::K2Realization { base, xi } } => commands::realize_k2(&base, &xi),
        Command::Fedosov { algebra, report } => commands::fedosov(&algebra, &report),
        Command::CeH1 { algebra, module, n } => commands::ce_h1(&algebra, &module, n),
    };
    match result {
        Ok(report) => {
            let _ = report.lines.iter().try_for_each(|line| print(&mut out, line, cli.format));
            if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
