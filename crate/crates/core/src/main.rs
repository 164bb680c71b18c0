fn main() {
    std::process::exit(metric_mahler::cli::main_with_args(std::env::args_os()));
}
