fn main() {
    std::process::exit(bakit::cli::run());
}
