use clap::{Parser, Subcommand, ValueEnum};
use process_algebra::export::{self, DatasetKind, EmitParams};
use process_algebra::groupoid::CompositionMode;
use process_algebra::tables::{self, ProductTable};
use process_algebra::verify::{self, Suite, VerifyOptions};
use process_algebra::weyl::WeylAlgebra;
use process_algebra::{Error, Signature};
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser)]
#[command(name = "procalg", version, about = "Clifford process algebras: tables, verification suites and datasets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Print a multiplication table.
    Table {
        /// cl(p,q), p,q or one of schrodinger, pauli, dirac, conformal, weyl:n
        #[arg(long, default_value = "cl(0,2)")]
        algebra: String,
        /// Only the generator-by-generator products.
        #[arg(long)]
        generators_only: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run a named verification suite.
    Verify {
        /// groupoid, rotors, kcalculus, hopf, chirality, twistor, bohm, expectation, weyl or all
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Restrict the weyl suite to one order.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Write a dataset: lightcone-samples, bohm-residuals, quantum-potential-profile or weyl-points.
    Emit {
        dataset: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 1.0)]
        sigma: f64,
        #[arg(long = "m", default_value_t = 1.0)]
        mass: f64,
        #[arg(long, default_value_t = 201)]
        sites: usize,
        #[arg(long, default_value_t = 8)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        levels: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Io(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(m) => Failure::Io(m),
            other => Failure::Usage(other.to_string()),
        }
    }
}

enum Algebra {
    Clifford(Arc<Signature>),
    Weyl(usize),
}

fn parse_algebra(s: &str) -> Result<Algebra, Failure> {
    let s = s.trim().to_ascii_lowercase();
    let named = match s.as_str() {
        "schrodinger" => Some(Signature::schrodinger()),
        "pauli" => Some(Signature::pauli()),
        "dirac" => Some(Signature::dirac()),
        "conformal" => Some(Signature::conformal()),
        _ => None,
    };
    if let Some(sig) = named {
        return Ok(Algebra::Clifford(Arc::new(sig)));
    }
    if let Some(n) = s.strip_prefix("weyl:") {
        let n = n.parse().map_err(|_| Failure::Usage(format!("bad order in '{s}'")))?;
        WeylAlgebra::new(n)?;
        return Ok(Algebra::Weyl(n));
    }
    let inner = s.strip_prefix("cl(").and_then(|r| r.strip_suffix(')')).unwrap_or(&s);
    let (p, q) = inner
        .split_once(',')
        .and_then(|(p, q)| Some((p.trim().parse().ok()?, q.trim().parse().ok()?)))
        .ok_or_else(|| Failure::Usage(format!("unknown algebra '{s}'")))?;
    Ok(Algebra::Clifford(Arc::new(Signature::new(p, q)?)))
}

fn write_out(path: &Option<PathBuf>, body: &str) -> Result<(), Failure> {
    let res = match path {
        Some(p) => File::create(p).and_then(|mut f| f.write_all(body.as_bytes())),
        None => io::stdout().write_all(body.as_bytes()),
    };
    res.map_err(|e| Failure::Io(e.to_string()))
}

fn json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn tables_csv(ts: &[ProductTable]) -> String {
    let mut out = String::new();
    for t in ts {
        out.push_str(&format!("{},{}\n", t.title, t.col_labels.join(",")));
        for (label, row) in t.row_labels.iter().zip(&t.cells) {
            out.push_str(&format!("{label},{}\n", row.join(",")));
        }
    }
    out
}

/// Products of U and V written as phase times R(j, k) = U^j V^k, with the
/// phase a power of tau.
fn weyl_table(n: usize) -> Result<ProductTable, Failure> {
    let w = WeylAlgebra::new(n)?;
    let gens = [("U", w.shift()), ("V", w.clock())];
    let mut cells = Vec::new();
    for (_, a) in &gens {
        let mut row = Vec::new();
        for (_, b) in &gens {
            let p = w.product(a, b)?;
            let (j, k) = (0..n * n)
                .map(|i| (i / n, i % n))
                .find(|&(j, k)| p.coeff(j, k).norm() > 0.5)
                .expect("monomial");
            let c = p.coeff(j, k);
            let m = (0..2 * n as i64).find(|&m| (w.tau_pow(m) - c).norm() < 1e-12).unwrap_or(0);
            row.push(if m == 0 {
                format!("R({j},{k})")
            } else {
                format!("tau^{m} R({j},{k})")
            });
        }
        cells.push(row);
    }
    let labels: Vec<String> = gens.iter().map(|(l, _)| l.to_string()).collect();
    Ok(ProductTable {
        title: format!("weyl:{n} generator products"),
        row_labels: labels.clone(),
        col_labels: labels,
        cells,
    })
}

fn cmd_table(algebra: &str, generators_only: bool) -> Result<Vec<ProductTable>, Failure> {
    let sig = match parse_algebra(algebra)? {
        Algebra::Weyl(n) => return Ok(vec![weyl_table(n)?]),
        Algebra::Clifford(sig) => sig,
    };
    let mut out = Vec::new();
    if generators_only {
        let failures = tables::anticommutation_failures(&sig);
        let mut t = tables::generator_table(&sig);
        t.title = if failures.is_empty() {
            format!("{} (distinct generators anticommute)", t.title)
        } else {
            format!("{} (commuting pairs: {failures:?})", t.title)
        };
        out.push(t);
    } else {
        match tables::full_table(&sig) {
            Ok(t) => out.push(t),
            Err(Error::TableTooLarge { blades }) => {
                return Err(Failure::Usage(format!(
                    "{sig} has {blades} blades, too many for a full table; use --generators-only"
                )))
            }
            Err(e) => return Err(e.into()),
        }
    }
    let process = match (sig.p(), sig.q()) {
        (0, 2) => Some(tables::quaternion_process()?),
        (1, 1) => Some(tables::spacetime_process()?),
        _ => None,
    };
    if let Some(p) = process {
        out.push(tables::process_table(&p, CompositionMode::Groupoid)?);
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Table {
            algebra,
            generators_only,
            format,
            output,
        } => {
            let ts = cmd_table(&algebra, generators_only)?;
            let body = match format {
                Format::Table => ts.iter().map(|t| t.to_string()).collect::<Vec<_>>().join("\n"),
                Format::Json => json(&ts),
                Format::Csv => tables_csv(&ts),
            };
            write_out(&output, &body)
        }
        Command::Verify {
            suite,
            seed,
            n,
            format,
            output,
        } => {
            let suite: Suite = suite.parse()?;
            let mut opts = VerifyOptions {
                seed,
                ..Default::default()
            };
            if let Some(n) = n {
                WeylAlgebra::new(n)?;
                opts.weyl_orders = vec![n];
            }
            let report = verify::run(suite, &opts)?;
            let body = match format {
                Format::Table => format!("{report}\n"),
                Format::Json => json(&report),
                Format::Csv => {
                    let mut s = String::from("name,residual,tolerance,pass\n");
                    for c in &report.checks {
                        s.push_str(&format!("{},{:e},{:e},{}\n", c.name.replace(',', ";"), c.residual, c.tolerance, c.pass));
                    }
                    s
                }
            };
            write_out(&output, &body)?;
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::Emit {
            dataset,
            seed,
            count,
            sigma,
            mass,
            sites,
            n,
            levels,
            format,
            output,
        } => {
            let kind: DatasetKind = dataset.parse()?;
            let params = EmitParams {
                seed,
                count,
                sigma,
                mass,
                sites,
                n,
                levels,
            };
            let data = export::emit(kind, &params)?;
            let body = match format {
                Format::Json => json(&data),
                Format::Csv | Format::Table => data.to_csv_string()?,
            };
            write_out(&output, &body)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(EXIT_FAILED),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Io(m)) => {
            eprintln!("io error: {m}");
            ExitCode::from(EXIT_IO)
        }
    }
}
