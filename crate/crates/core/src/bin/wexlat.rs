fn main() {
    std::process::exit(wexlat::cli::run(std::env::args_os()));
}
