use std::process::ExitCode;

fn main() -> ExitCode {
    curvgeom::cli::run(std::env::args_os())
}
