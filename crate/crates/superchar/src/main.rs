fn main() {
    std::process::exit(superchar::cli::run(std::env::args_os()));
}
