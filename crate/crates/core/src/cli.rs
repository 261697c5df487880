//! Command-line front end: argument parsing and exit codes.
//!
//! Exit codes: 0 when every requested scenario passes, 1 when any fails,
//! 2 on a usage error (bad flag, unknown scenario, unnormalized coefficients).

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::hilbert::C64;
use crate::report::{render, render_list};
use crate::scenarios::{run_all, run_scenario, Format, ScenarioConfig};

#[derive(Debug, Parser)]
#[command(name = "uncopy", version, about = "Run the copy/delete scenarios")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run one scenario by name, or `all`.
    Run(RunArgs),
    /// List scenario names with one-line descriptions.
    List,
}

#[derive(Debug, clap::Args)]
struct RunArgs {
    /// Scenario name or `all`.
    target: String,
    /// Amplitude of |0⟩: `RE`, `RE,IM` or a literal such as `0.6+0.2i`.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    alpha: Option<C64>,
    /// Amplitude of |1⟩, same syntax as --alpha.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    beta: Option<C64>,
    #[arg(long, default_value_t = crate::hilbert::DEFAULT_TOL)]
    tolerance: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    /// Blank state: 0 for H, 1 for V.
    #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=1))]
    sigma: u8,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        }
    }
}

/// Accepts `RE`, `RE,IM`, or a complex literal like `0.5-0.5i`.
pub fn parse_complex(s: &str) -> Result<C64, String> {
    let s = s.trim();
    let parsed = if let Some((re, im)) = s.split_once(',') {
        let re: f64 = re.trim().parse().map_err(|e| format!("bad real part `{re}`: {e}"))?;
        let im: f64 = im.trim().parse().map_err(|e| format!("bad imaginary part `{im}`: {e}"))?;
        C64::new(re, im)
    } else {
        s.parse::<C64>()
            .map_err(|_| format!("`{s}` is not a number or complex literal"))?
    };
    if !(parsed.re.is_finite() && parsed.im.is_finite()) {
        return Err(format!("`{s}` is not finite"));
    }
    Ok(parsed)
}

/// Runs the CLI with explicit argument list and output streams; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    2
                }
            };
        }
    };

    match cli.command {
        Command::List => {
            let _ = out.write_all(render_list().as_bytes());
            0
        }
        Command::Run(args) => run_command(args, out, err),
    }
}

fn run_command(args: RunArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let defaults = ScenarioConfig::default();
    let config = ScenarioConfig {
        alpha: args.alpha.unwrap_or(defaults.alpha),
        beta: args.beta.unwrap_or(defaults.beta),
        tolerance: args.tolerance,
        seed: args.seed,
        trials: args.trials,
        sigma_index: args.sigma,
        format: args.format.into(),
    };
    if let Err(e) = config.validate() {
        let _ = writeln!(err, "error: {e}");
        return 2;
    }

    let (reports, code) = if args.target == "all" {
        run_all(&config)
    } else {
        match run_scenario(&args.target, &config) {
            Ok(r) => {
                let code = if r.passed() { 0 } else { 1 };
                (vec![r], code)
            }
            Err(e) => {
                let _ = writeln!(err, "error: {e}; try `uncopy list`");
                return 2;
            }
        }
    };
    for r in reports.iter().filter(|r| r.error.is_some()) {
        let _ = writeln!(err, "{}: {}", r.scenario, r.error.as_deref().unwrap_or_default());
    }
    let _ = out.write_all(render(&reports, &config, config.format).as_bytes());
    code
}
