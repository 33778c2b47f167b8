use clap::Parser;

use chipnoise::cli::{run, Cli};

fn main() {
    let cli = Cli::parse(); // usage errors exit with code 2
    if let Err(err) = run(cli) {
        eprintln!("error: {err}");
        std::process::exit(err.exit_code());
    }
}
