use clap::Parser;
use qdot::config::thread_cap;
use qdot::{run, Args, CliError, Outcome, RunConfig};
use std::process::ExitCode;

fn execute(args: Args) -> Result<Outcome, CliError> {
    if let Some(n) = thread_cap()? {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Usage(format!("cannot size worker pool: {e}")))?;
    }
    let config = RunConfig::from_args(args)?;
    run(&config)
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match execute(args) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail(first)) => {
            eprintln!("qdot: FAIL {first}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("qdot: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
