use clap::Parser;

fn main() {
    let cli = fsind_cli::Cli::parse();
    std::process::exit(fsind_cli::run(cli));
}
