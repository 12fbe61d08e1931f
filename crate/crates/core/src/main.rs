fn main() {
    std::process::exit(secant_designs::cli::run(std::env::args_os()));
}
