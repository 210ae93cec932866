use clap::Parser;

fn main() {
    let cli = shadowjones::cli::Cli::parse();
    std::process::exit(shadowjones::cli::run(cli));
}
