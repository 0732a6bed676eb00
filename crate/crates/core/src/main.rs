fn main() {
    std::process::exit(blogsum::cli::run(std::env::args_os()));
}
