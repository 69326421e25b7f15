fn main() {
    std::process::exit(gghecke::run(std::env::args_os()));
}
