fn main() {
    std::process::exit(normord::cli::main());
}
