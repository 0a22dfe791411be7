use std::process::ExitCode;

fn main() -> ExitCode {
    hermite_series::cli::main()
}
