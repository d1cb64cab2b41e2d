fn main() {
    std::process::exit(abcd_cli::main_with_args(std::env::args_os()));
}
