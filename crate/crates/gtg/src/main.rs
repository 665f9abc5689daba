use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let ex = gtg::run(std::env::args_os());
    let _ = std::io::stdout().write_all(ex.stdout.as_bytes());
    let _ = std::io::stderr().write_all(ex.stderr.as_bytes());
    ExitCode::from(ex.code as u8)
}
