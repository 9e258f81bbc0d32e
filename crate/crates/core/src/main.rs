fn main() {
    std::process::exit(qboson::cli::run(std::env::args_os()));
}
