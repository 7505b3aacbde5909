fn main() {
    std::process::exit(premeasure::cli::run());
}
