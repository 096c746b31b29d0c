// Driving the command line from code and reading the JSON report.

use clap::Parser;
use tautmat::io::cli::{run, Cli};

pub fn run_example() -> tautmat::Result<String> {
    let cli = Cli::try_parse_from(["tautmat", "check", "corpus:M(K4)", "uniform:2:5"])
        .map_err(|e| tautmat::Error::InvalidArgument(e.to_string()))?;
    let report = run(&cli)?;
    print!("{}", report.to_text());
    assert!(report.all_passed());
    Ok(report.to_json_string())
}

fn main() -> tautmat::Result<()> {
    run_example().map(|_| ())
}
