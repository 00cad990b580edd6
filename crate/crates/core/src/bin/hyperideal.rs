fn main() {
    std::process::exit(hyperideal::cli::run(std::env::args_os()));
}
