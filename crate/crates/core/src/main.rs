use clap::Parser;

fn main() {
    let cli = franel::cli::Cli::parse();
    std::process::exit(franel::cli::run(cli));
}
