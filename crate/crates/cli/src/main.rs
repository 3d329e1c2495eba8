fn main() {
    std::process::exit(chevalley_cli::run(std::env::args_os()));
}
