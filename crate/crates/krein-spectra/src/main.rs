fn main() {
    std::process::exit(krein_spectra::cli::run(std::env::args_os()));
}
