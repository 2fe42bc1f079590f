use std::io;

fn main() {
    let code = ctrlhub::cli::run(std::env::args_os(), &mut io::stdin().lock(), &mut io::stdout().lock(), &mut io::stderr());
    std::process::exit(code);
}
