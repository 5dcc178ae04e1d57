fn main() {
    std::process::exit(spectral_riesz::cli::main_from_env());
}
