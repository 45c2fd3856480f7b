use clap::Parser;

fn main() {
    let args = fn3::cli::Args::parse();
    std::process::exit(fn3::cli::execute(&args));
}
