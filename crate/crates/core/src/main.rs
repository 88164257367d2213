fn main() { std::process::exit(topomech::cli::main()) }
