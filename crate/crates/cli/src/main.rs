use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use multiproj_cli::{load, render_text, run, InputFormat, Options, Status};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// Relevance, potions, atlases and twists for multigraded polynomial rings.
#[derive(Parser, Debug)]
#[command(name = "multiproj", version)]
struct Cli {
    /// Problem file (TOML or JSON); reads standard input when absent or "-".
    input: Option<PathBuf>,
    /// Search bound for writing fractions in chart generators.
    #[arg(long, value_name = "N")]
    bound: Option<u64>,
    /// Suppress diagnostics on standard error.
    #[arg(long, short)]
    quiet: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

fn read_input(path: &Option<PathBuf>) -> std::io::Result<(String, Option<InputFormat>)> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            let src = std::fs::read_to_string(p)?;
            let fmt = match p.extension().and_then(|e| e.to_str()) {
                Some("json") => Some(InputFormat::Json),
                Some("toml") => Some(InputFormat::Toml),
                _ => None,
            };
            Ok((src, fmt))
        }
        _ => {
            let mut src = String::new();
            std::io::stdin().read_to_string(&mut src)?;
            Ok((src, None))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (src, fmt) = match read_input(&cli.input) {
        Ok(x) => x,
        Err(e) => {
            if !cli.quiet {
                eprintln!("error: cannot read input: {e}");
            }
            return ExitCode::from(Status::Spec.code() as u8);
        }
    };
    let fmt = fmt.unwrap_or_else(|| InputFormat::sniff(&src));
    let problem = match load(&src, fmt) {
        Ok(p) => p,
        Err(e) => {
            if !cli.quiet {
                eprintln!("error: {e}");
            }
            return ExitCode::from(Status::Spec.code() as u8);
        }
    };
    let mut opts = Options::default();
    if let Some(b) = cli.bound {
        opts.bound = b;
    }
    let (doc, status) = run(&problem, opts);
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&doc).expect("document serializes")),
        Format::Text => print!("{}", render_text(&doc)),
    }
    if status != Status::Ok && !cli.quiet {
        eprintln!("error: one or more requests failed (exit {})", status.code());
    }
    ExitCode::from(status.code() as u8)
}
