fn main() {
    std::process::exit(groebner_sat::cli::run(std::env::args_os()));
}
