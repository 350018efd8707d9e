fn main() {
    std::process::exit(toruschar::run());
}
