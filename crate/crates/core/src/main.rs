use std::process::ExitCode;

fn main() -> ExitCode {
    let code = composite_fading::cli::run(std::env::args_os());
    ExitCode::from(code as u8)
}
