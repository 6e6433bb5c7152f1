fn main() {
    std::process::exit(cnt_cli::run(std::env::args_os()));
}
