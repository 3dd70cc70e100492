fn main() {
    std::process::exit(syncgraph::cli::run_from_args());
}
