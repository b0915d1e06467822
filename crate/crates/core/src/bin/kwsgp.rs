fn main() {
    std::process::exit(kwsgp::cli::main_with(std::env::args_os()));
}
