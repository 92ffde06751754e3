use std::io::Write;

fn main() {
    let result = hypercomp::cli::run(std::env::args());
    let mut out = std::io::stdout();
    let mut err = std::io::stderr();
    let _ = out.write_all(result.stdout.as_bytes());
    let _ = err.write_all(result.stderr.as_bytes());
    std::process::exit(result.exit_code);
}
