fn main() {
    std::process::exit(progdisc::cli::main_from(std::env::args_os()));
}
