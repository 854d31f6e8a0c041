fn main() {
    std::process::exit(gray_auth::cli::run(std::env::args_os()));
}
