use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let result = braidscope::cli::run(std::env::args_os());
    let mut out = std::io::stdout().lock();
    // a closed pipe is not an error worth reporting
    let _ = out.write_all(result.stdout().as_bytes());
    if !result.diagnostics.is_empty() {
        eprint!("{}", result.diagnostics);
    }
    ExitCode::from(result.status as u8)
}
