use clap::Parser;
use palmgrove_cli::args::Cli;

fn main() {
    let cli = Cli::parse();
    if let Err(e) = palmgrove_cli::commands::run(cli) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
