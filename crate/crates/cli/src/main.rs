use clap::Parser;
use ordkit_cli::args::Cli;
use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = ordkit_cli::run(&cli).and_then(|out| match &cli.global.out {
        Some(path) => std::fs::write(path, out).map_err(Into::into),
        None => std::io::stdout().write_all(out.as_bytes()).map_err(Into::into),
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if e.exit_code() == 2 {
                eprintln!("error: {e}");
            } else {
                let doc = serde_json::to_string(&e.to_doc()).expect("error document serializes");
                eprintln!("{doc}");
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
