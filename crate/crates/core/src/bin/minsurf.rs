fn main() -> std::process::ExitCode {
    minsurf::cli::main()
}
