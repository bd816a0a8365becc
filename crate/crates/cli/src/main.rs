use std::process::ExitCode;

use clap::Parser;
use traverse_laws_cli::{run, Cli, Format, CAP_ENV, EXIT_USAGE};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE as u8 } else { 0 });
        }
    };
    let env_cap = std::env::var(CAP_ENV).ok();
    match run(&cli, env_cap.as_deref()) {
        Ok(doc) => {
            match cli.format {
                Format::Text => print!("{}", doc.to_text()),
                Format::Json => println!("{}", doc.to_json()),
            }
            ExitCode::from(doc.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("lawcheck: {}", e.message);
            ExitCode::from(e.code as u8)
        }
    }
}
