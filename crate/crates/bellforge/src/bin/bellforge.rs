fn main() {
    std::process::exit(bellforge::cli::main_with_args(std::env::args_os()));
}
