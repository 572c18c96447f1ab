use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand};

mod commands;
mod report;

use commands::{parse_range, Ring};
use report::{Format, Report};

#[derive(Parser, Debug)]
#[command(name = "picard", version, about = "Characteristic classes, lattices and stable rings for universal Picard varieties")]
struct Cli {
    /// Output format. Defaults to markdown for `reproduce`, csv otherwise.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Directory for reports when --output is not given.
    #[arg(long, global = true, env = "PICARD_OUTPUT_DIR", hide_env_values = true)]
    output_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List ring generators up to a degree.
    Generators {
        #[arg(long, value_enum, default_value = "hol")]
        ring: Ring,
        #[arg(long, default_value_t = 6, allow_hyphen_values = true)]
        g: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, default_value_t = 4)]
        maxdeg: u32,
    },
    /// Hilbert series, or the collapse check with --check-collapse.
    Hilbert {
        #[arg(long, value_enum, default_value = "hol")]
        ring: Ring,
        #[arg(long, default_value_t = 6, allow_hyphen_values = true)]
        g: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, default_value_t = 12)]
        maxdeg: u32,
        #[arg(long)]
        check_collapse: bool,
    },
    /// Expand the Chern character of the twisted index bundle.
    Grr {
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        r: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        s: i64,
        /// Treat r and s as indeterminates.
        #[arg(long, conflicts_with_all = ["r", "s"])]
        symbolic: bool,
        #[arg(long, default_value_t = 2)]
        maxdeg: u32,
    },
    /// Evaluate (lambda, m_{0,1}, zeta) on the test bundles and check unimodularity.
    BasisCheck {
        /// Four-manifold model: `hirzebruch` or a JSON file.
        #[arg(long, default_value = "hirzebruch")]
        model: String,
        #[arg(long, default_value_t = 2, allow_hyphen_values = true)]
        g: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        k: i64,
    },
    /// Torsion orders over a (g, k) grid.
    Orders {
        #[arg(long, allow_hyphen_values = true, conflicts_with = "g_range")]
        g: Option<i64>,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "k_range")]
        k: Option<i64>,
        /// Inclusive range a:b.
        #[arg(long, allow_hyphen_values = true)]
        g_range: Option<String>,
        /// Inclusive range a:b.
        #[arg(long, allow_hyphen_values = true)]
        k_range: Option<String>,
    },
    /// Restrict classes to the product family over CP^inf.
    Restrict {
        #[arg(long, default_value_t = 2, allow_hyphen_values = true)]
        g: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        k: i64,
        #[arg(long = "class", default_values_t = ["lambda".to_string(), "zeta".to_string(), "m_{0,1}".to_string()])]
        classes: Vec<String>,
        /// Highest power of x kept.
        #[arg(long, default_value_t = 8)]
        truncation: u32,
    },
    /// Run every acceptance check.
    Reproduce,
}

fn range(single: Option<i64>, text: Option<&str>, default: (i64, i64)) -> Result<(i64, i64)> {
    match (single, text) {
        (Some(v), _) => Ok((v, v)),
        (None, Some(t)) => parse_range(t),
        (None, None) => Ok(default),
    }
}

fn build(command: &Command) -> Result<Report> {
    match command {
        Command::Generators { ring, g, k, maxdeg } => commands::generators(*ring, *g, *k, *maxdeg),
        Command::Hilbert {
            ring,
            g,
            k,
            maxdeg,
            check_collapse,
        } => commands::hilbert(*ring, *g, *k, *maxdeg, *check_collapse),
        Command::Grr {
            r,
            s,
            symbolic,
            maxdeg,
        } => commands::grr(*r, *s, *symbolic, *maxdeg),
        Command::BasisCheck { model, g, k } => commands::basis_check(model, *g, *k),
        Command::Orders {
            g,
            k,
            g_range,
            k_range,
        } => {
            let gr = range(*g, g_range.as_deref(), (6, 6))?;
            let kr = range(*k, k_range.as_deref(), (0, 0))?;
            commands::orders(gr, kr)
        }
        Command::Restrict {
            g,
            k,
            classes,
            truncation,
        } => {
            if classes.is_empty() {
                bail!("no classes given");
            }
            commands::restrict(*g, *k, classes, *truncation)
        }
        Command::Reproduce => commands::reproduce(),
    }
}

fn run(cli: Cli) -> Result<bool> {
    let report = build(&cli.command)?;
    let format = cli.format.unwrap_or(match cli.command {
        Command::Reproduce => Format::Markdown,
        _ => Format::Csv,
    });
    let text = report.render(format)?;
    let target = match (&cli.output, &cli.output_dir) {
        (Some(path), _) => Some(path.clone()),
        (None, Some(dir)) => Some(dir.join(format!("{}.{}", report.command, format.extension()))),
        (None, None) => None,
    };
    match target {
        Some(path) => {
            if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
                std::fs::create_dir_all(parent)?;
            }
            std::fs::write(&path, text)?;
            eprintln!("wrote {}", path.display());
        }
        None => print!("{text}"),
    }
    Ok(report.pass)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
