fn main() {
    std::process::exit(schurdet::cli::main());
}
