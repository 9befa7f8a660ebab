use std::process::ExitCode;

use clap::Parser;

use cartan_lift::cli::{run, Cli};
use cartan_lift::json;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = run(&cli);
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, json::to_string(&result.payload)) {
            eprintln!("cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    print!("{}", json::to_string(&result));
    ExitCode::from(result.status.exit_code() as u8)
}
