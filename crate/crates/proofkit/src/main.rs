fn main() {
    std::process::exit(proofkit::cli::run_cli(std::env::args_os()));
}
