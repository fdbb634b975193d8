use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::commands::{cmd_hasse, cmd_qn, cmd_tables, Which};
use crate::config::{Format, RunConfig};
use crate::error::CliError;
use crate::memo::TableCache;
use crate::output::Output;
use crate::verify::cmd_verify;

#[derive(Debug, Parser)]
#[command(name = "encone", version, about = "Orbits, Kostka polynomials and point counts for the enhanced nilpotent cone")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Size of the vector space.
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write data here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Allow n > 5 and the n = 4 exact cross-checks.
    #[arg(long)]
    large: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the orbits with b, dimension and flag composition.
    Qn(Common),
    /// Covering relations of the closure order (DOT renders the diagram).
    Hasse(Common),
    /// Dump one polynomial table.
    Tables {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Which::Kostka)]
        which: Which,
    },
    /// Run the invariant suite for every size up to n.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Primes to enumerate over, comma separated.
        #[arg(long, value_delimiter = ',', default_value = "2")]
        q: Vec<u32>,
        /// Raise the brute-force budget (n = 4 at q = 2).
        #[arg(long)]
        enumerate: bool,
    },
}

fn config(c: &Common) -> RunConfig {
    RunConfig { n: c.n, qs: vec![2], format: c.format, large: c.large, enumerate: false }
}

fn emit(out: &Output, c: &Common, stdout: &mut dyn Write) -> Result<(), CliError> {
    let text = out.render(c.format)?;
    match &c.out {
        Some(path) => std::fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Runs the command line `args` (program name first); returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(stderr, "{e}") } else { write!(stdout, "{e}") };
            return code;
        }
    };
    let cache = TableCache::new();
    let res = (|| -> Result<i32, CliError> {
        match &cli.command {
            Command::Qn(c) => {
                config(c).validate()?;
                emit(&cmd_qn(c.n), c, stdout)?;
            }
            Command::Hasse(c) => {
                config(c).validate()?;
                emit(&cmd_hasse(c.n), c, stdout)?;
            }
            Command::Tables { common, which } => {
                config(common).validate()?;
                if common.format == Format::Dot {
                    return Err(CliError::Usage("dot output is only available for hasse".into()));
                }
                emit(&cmd_tables(common.n, *which, &cache)?, common, stdout)?;
            }
            Command::Verify { common, q, enumerate } => {
                let cfg = RunConfig { qs: q.clone(), enumerate: *enumerate, ..config(common) };
                cfg.validate()?;
                if common.format == Format::Dot {
                    return Err(CliError::Usage("dot output is only available for hasse".into()));
                }
                let report = cmd_verify(&cfg, &cache, &mut |o| {
                    let _ = writeln!(stderr, "{}", o.line());
                });
                let _ = writeln!(
                    stderr,
                    "{} passed, {} failed, {} skipped",
                    report.count(|s| *s == crate::verify::Status::Pass),
                    report.count(|s| *s == crate::verify::Status::Fail),
                    report.count(|s| matches!(s, crate::verify::Status::Skipped(_))),
                );
                emit(&report.to_output(), common, stdout)?;
                return Ok(if report.passed() { 0 } else { 1 });
            }
        }
        Ok(0)
    })();
    match res {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "{e}");
            e.exit_code()
        }
    }
}
