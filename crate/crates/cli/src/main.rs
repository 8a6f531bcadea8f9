use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let exec = folcalc::run_command(std::env::args_os());
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(exec.output.as_bytes());
    let _ = out.flush();
    ExitCode::from(exec.exit_code as u8)
}
