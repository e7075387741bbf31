fn main() {
    std::process::exit(frieze_bracket::cli::main());
}
