fn main() {
    std::process::exit(pairinglab::cli::run(std::env::args_os()));
}
