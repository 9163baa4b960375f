fn main() {
    std::process::exit(tropgroup::cli::main_with_args(std::env::args_os()));
}
