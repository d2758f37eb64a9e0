use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let run = roughdep_cli::execute(std::env::args_os());
    eprint!("{}", run.stderr);
    if let Err(e) = std::io::stdout().lock().write_all(&run.stdout) {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(run.code)
}
