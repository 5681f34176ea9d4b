fn main() {
    std::process::exit(zenoline::cli::main_with_args(std::env::args_os()));
}
