fn main() {
    std::process::exit(jetdiff::cli::run(std::env::args_os()));
}
