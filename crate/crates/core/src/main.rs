fn main() {
    std::process::exit(codesign::cli::run(std::env::args_os()));
}
