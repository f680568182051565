fn main() {
    std::process::exit(gapped::cli::run(std::env::args_os()));
}
