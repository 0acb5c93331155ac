fn main() {
    std::process::exit(nanip::cli::run());
}
