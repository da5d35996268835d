fn main() {
    std::process::exit(qginv::cli::main_with_args(std::env::args_os()));
}
