fn main() {
    std::process::exit(frobsing::cli::run());
}
