fn main() {
    std::process::exit(tautmat::io::cli::main_with_args(std::env::args()));
}
