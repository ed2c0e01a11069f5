fn main() {
    std::process::exit(cellres::cli::entry(std::env::args_os()));
}
