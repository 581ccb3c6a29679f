fn main() {
    std::process::exit(zblanden::cli::run());
}
