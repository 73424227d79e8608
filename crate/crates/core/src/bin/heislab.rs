use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use heislab::lab::config::ListValue;
use heislab::lab::{read_rows, run_experiment, theorem_report, verify_suite, write_rows, GrowthOptions, VerifySuite};
use heislab::{Error, FieldCtx};

/// Exact counting laboratory for product growth in Heisenberg groups.
///
/// Exit status: 0 on success, 1 when a verification assertion fails,
/// 2 on invalid input. HEISLAB_LIMIT overrides the enumeration limits.
#[derive(Parser)]
#[command(name = "heislab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Finite field utilities.
    Field {
        #[command(subcommand)]
        action: FieldAction,
    },
    /// Run a parameter sweep and write one row per cell and bound.
    Growth(GrowthArgs),
    /// Run a verification suite (core, spectral, reduction, incidence, complex or all).
    Verify {
        #[arg(long)]
        suite: String,
        /// Print the failure list as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Summarize sweep rows against one theorem.
    Report {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        theorem: String,
    },
}

#[derive(Subcommand)]
enum FieldAction {
    /// Build F_{p^k} and print its modulus and generator.
    Check {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        k: u32,
        /// Little-endian coefficients with the leading 1, e.g. 1,0,1 for x^2 + 1.
        #[arg(long, value_delimiter = ',')]
        modulus: Option<Vec<u64>>,
    },
}

#[derive(Args)]
struct GrowthArgs {
    /// TOML file with the same keys as these flags.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    suite: Option<String>,
    /// Field orders: a list (5,7,11) or an inclusive range (5..31).
    #[arg(long)]
    p: Option<String>,
    /// Set family, e.g. random:size=8 or mult_subgroup:d=3.
    #[arg(long)]
    family: Option<String>,
    /// Values of the family's size parameter, e.g. 4,8,12 or 4..12.
    #[arg(long)]
    sizes: Option<String>,
    #[arg(long)]
    trials: Option<u32>,
    #[arg(long)]
    seed: Option<u64>,
    /// Dimension n for vector and brick suites.
    #[arg(long)]
    n: Option<usize>,
    /// Output file; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    format: Option<String>,
    #[arg(long)]
    workers: Option<usize>,
    /// Fill the runtime_ms column (output is then no longer reproducible).
    #[arg(long)]
    timing: bool,
}

impl GrowthArgs {
    fn options(self) -> heislab::Result<GrowthOptions> {
        let file = match &self.config {
            Some(path) => GrowthOptions::load(path)?,
            None => GrowthOptions::default(),
        };
        let cli = GrowthOptions {
            suite: self.suite,
            p: self.p.map(ListValue::Text),
            family: self.family,
            sizes: self.sizes.map(ListValue::Text),
            trials: self.trials,
            seed: self.seed,
            n: self.n,
            out: self.out,
            format: self.format,
            workers: self.workers,
            timing: self.timing.then_some(true),
        };
        Ok(file.overridden_by(cli))
    }
}

fn field_check(p: u64, k: u32, modulus: Option<Vec<u64>>) -> heislab::Result<()> {
    let ctx = FieldCtx::new(p, k, modulus.as_deref())?;
    let poly: Vec<String> = ctx
        .modulus()
        .iter()
        .enumerate()
        .rev()
        .filter(|&(_, &c)| c != 0)
        .map(|(i, &c)| match (i, c) {
            (0, c) => c.to_string(),
            (1, 1) => "x".into(),
            (i, 1) => format!("x^{i}"),
            (1, c) => format!("{c}x"),
            (i, c) => format!("{c}x^{i}"),
        })
        .collect();
    println!("{ctx}: q = {}", ctx.q());
    println!("modulus {} (irreducible)", poly.join(" + "));
    println!("generator {}", ctx.format(ctx.generator()));
    Ok(())
}

fn growth(args: GrowthArgs) -> heislab::Result<()> {
    let options = args.options()?;
    let config = options.sweep_config()?;
    let format = options.output_format()?;
    let rows = run_experiment(&config)?;
    match &options.out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            write_rows(&rows, format, &mut w)?;
            w.flush()?;
        }
        None => write_rows(&rows, format, io::stdout().lock())?,
    }
    let errors = rows.iter().filter(|r| r.is_error()).count();
    eprintln!("{} rows, {errors} cells with errors", rows.len());
    Ok(())
}

fn verify(suite: &str, json: bool) -> heislab::Result<bool> {
    let suites = if suite == "all" { VerifySuite::ALL.to_vec() } else { vec![suite.parse()?] };
    let mut ok = true;
    for s in suites {
        let report = verify_suite(s);
        ok &= report.passed();
        if json {
            println!("{}", report.failures_json());
        } else {
            print!("{report}");
        }
    }
    Ok(ok)
}

fn report(input: PathBuf, theorem: &str) -> heislab::Result<()> {
    let rows = read_rows(File::open(&input)?)?;
    print!("{}", theorem_report(&rows, theorem)?);
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result: Result<bool, Error> = match cli.command {
        Command::Field { action: FieldAction::Check { p, k, modulus } } => field_check(p, k, modulus).map(|_| true),
        Command::Growth(args) => growth(args).map(|_| true),
        Command::Verify { suite, json } => verify(&suite, json),
        Command::Report { input, theorem } => report(input, &theorem).map(|_| true),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
