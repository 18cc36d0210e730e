use std::io;

fn main() {
    let stdin = io::stdin();
    let stdout = io::stdout();
    let code = neutral_rewriter::cli::run(
        std::env::args_os(),
        &mut stdin.lock(),
        &mut io::BufWriter::new(stdout.lock()),
        &mut io::stderr(),
    );
    std::process::exit(code);
}
