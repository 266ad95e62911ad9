//! Command-line front end: argument parsing, configuration, and report
//! output for the verification suites in [`suites`].

pub mod config;
pub mod error;
pub mod report;
pub mod suites;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use config::Config;
use error::{CliError, CliResult};
use report::CheckReport;

#[derive(Debug, Parser)]
#[command(
    name = "surfrr",
    version,
    about = "Exact checks of integral Riemann-Roch identities for surface bundles"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Prime p.
    #[arg(long, global = true)]
    pub prime: Option<u64>,
    /// Adams index k; defaults to a generator of (Z/p^2)^* (3 when p = 2).
    #[arg(long, global = true)]
    pub k: Option<u64>,
    /// Largest Bernoulli index n.
    #[arg(long, global = true)]
    pub n_max: Option<usize>,
    /// Truncation N of K(CP^N).
    #[arg(long, global = true)]
    pub truncation: Option<usize>,
    /// Degree of the polynomial generator of the Bockstein models.
    #[arg(long, global = true)]
    pub deg: Option<u64>,
    /// Number of Bockstein pages past E^1.
    #[arg(long, global = true)]
    pub pages: Option<u32>,
    /// Degree bound for Bockstein pages; defaults to 2 deg p^3.
    #[arg(long, global = true)]
    pub max_deg: Option<u64>,
    /// Emit a JSON array instead of a table.
    #[arg(long, global = true)]
    pub json: bool,
    /// Attach elapsed_ms to each row (output is then not byte-stable).
    #[arg(long, global = true)]
    pub timings: bool,
    /// Flat JSON object with any of the flag names as keys.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Bernoulli numbers, Num/Denom(B_n/2n) and the generating series.
    Bernoulli,
    /// Eigenvalue, denominator valuations and coefficient identity per n.
    #[command(name = "theorem-a")]
    Denominators,
    /// Eigenvalue of r^k on odd primitive classes.
    Eigenvalue,
    /// Certificate that the standard-class integral identity fails mod p.
    Akita,
    /// Theta integrality, logarithm form and the double loop l_(p).
    ArtinHasse,
    /// Bockstein pages of the two model algebras.
    Bockstein,
    /// Every suite over the configured primes.
    All,
}

impl Cli {
    fn flags(&self) -> Config {
        Config {
            prime: self.prime,
            primes: None,
            k: self.k,
            n_max: self.n_max,
            truncation: self.truncation,
            deg: self.deg,
            degs: None,
            pages: self.pages,
            max_deg: self.max_deg,
            json: self.json.then_some(true),
            timings: self.timings.then_some(true),
        }
    }

    /// Config file values overlaid with explicit flags.
    pub fn resolve(&self) -> CliResult<Config> {
        let file = match &self.config {
            Some(path) => Config::load(path)?,
            None => Config::default(),
        };
        Ok(file.overlay(self.flags()))
    }
}

/// Runs one subcommand against a resolved configuration.
pub fn execute(command: Command, cfg: &Config) -> CliResult<Vec<CheckReport>> {
    let p = cfg.prime();
    let timings = cfg.timings.unwrap_or(false);
    let job: suites::Job = match command {
        Command::All => return suites::cmd_all(cfg),
        Command::Bernoulli => {
            let n = cfg.n_max();
            Box::new(move || suites::cmd_bernoulli(n))
        }
        Command::Denominators => {
            let (n, k) = (cfg.n_max(), cfg.k);
            Box::new(move || suites::cmd_denominators(p, n, k))
        }
        Command::Eigenvalue => {
            let (n, k, t) = (cfg.n_max(), cfg.k, cfg.truncation);
            Box::new(move || suites::cmd_eigenvalue(p, k, n, t))
        }
        Command::Akita => Box::new(move || suites::cmd_akita(p)),
        Command::ArtinHasse => {
            let t = cfg.truncation();
            Box::new(move || suites::cmd_artin_hasse(p, t))
        }
        Command::Bockstein => {
            let (deg, pages) = (cfg.deg(), cfg.pages());
            let max_deg = cfg.max_deg(p, deg);
            Box::new(move || suites::cmd_bockstein(p, deg, pages, max_deg))
        }
    };
    suites::run_jobs(vec![job], timings)
}

/// Parses `args`, runs, writes the report to `out` and diagnostics to
/// `err`. Returns the process exit code: 0 all pass, 1 any failure,
/// 2 usage or configuration error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let outcome = cli.resolve().and_then(|cfg| {
        let rows = execute(cli.command, &cfg)?;
        Ok((rows, cfg.json.unwrap_or(false)))
    });
    match outcome {
        Ok((rows, json)) => {
            let text = if json {
                report::to_json(&rows) + "\n"
            } else {
                report::to_table(&rows)
            };
            let _ = out.write_all(text.as_bytes());
            report::exit_code(&rows)
        }
        Err(e @ (CliError::Usage(_) | CliError::Config(_))) => {
            let _ = writeln!(err, "surfrr: {e}");
            2
        }
    }
}
