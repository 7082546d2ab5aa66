fn main() {
    std::process::exit(hypvol::run(std::env::args_os()));
}
