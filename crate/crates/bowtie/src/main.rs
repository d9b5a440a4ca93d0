use std::process::ExitCode;

fn main() -> ExitCode {
    bowtie::cli::run()
}
