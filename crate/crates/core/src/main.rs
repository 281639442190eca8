fn main() {
    std::process::exit(psl22::cli::run(std::env::args_os()));
}
