fn main() {
    std::process::exit(glcohom::cli::main());
}
