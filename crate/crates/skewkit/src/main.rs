fn main() {
    std::process::exit(skewkit::cli::run(std::env::args_os()));
}
