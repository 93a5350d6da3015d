fn main() -> std::process::ExitCode {
    leibxmod::cli::main()
}
