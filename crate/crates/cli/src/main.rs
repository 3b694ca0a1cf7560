fn main() {
    std::process::exit(krivine_cli::run(std::env::args_os()));
}
