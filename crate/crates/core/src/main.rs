fn main() {
    std::process::exit(stretch_lab::cli::run(std::env::args_os()));
}
