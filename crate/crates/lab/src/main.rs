fn main() {
    std::process::exit(prodap_lab::run(std::env::args_os()));
}
