use std::process::ExitCode;

fn main() -> ExitCode {
    percolattice::cli::run(std::env::args_os())
}
