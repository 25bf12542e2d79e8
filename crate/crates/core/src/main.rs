fn main() {
    std::process::exit(subword_complex::commands::run(std::env::args_os()));
}
