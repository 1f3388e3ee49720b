use std::process::ExitCode;

use clap::Parser;
use conwalk_cli::{emit, error_json, run, Cli, RunConfig, EXIT_DOMAIN};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // usage errors are input errors; exit code 2 is reserved for caps
            return ExitCode::from(if e.use_stderr() { EXIT_DOMAIN as u8 } else { 0 });
        }
    };
    if let Some(n) = cli.command.common().threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n.get()).build_global() {
            eprintln!("{}", serde_json::json!({ "warning": e.to_string() }));
        }
    }
    let config = RunConfig::from_command(&cli.command);
    match run(&config).and_then(|report| emit(&config, &report)) {
        Ok(Some(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Ok(None) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", error_json(&e));
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
