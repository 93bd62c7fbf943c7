use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(bidx::run(std::env::args()) as u8)
}
