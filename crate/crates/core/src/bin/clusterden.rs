fn main() {
    let code = cluster_denominators::cli::run(std::env::args_os(), &mut std::io::stdout().lock());
    std::process::exit(code);
}
