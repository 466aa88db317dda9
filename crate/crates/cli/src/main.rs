use std::io::Write;

fn main() {
    let max_int = std::env::var(twincover_cli::MAX_INT_VAR).ok();
    let out = twincover_cli::main_with(std::env::args_os(), max_int.as_deref());
    let mut stdout = std::io::stdout().lock();
    // A closed pipe is not worth reporting.
    let _ = stdout.write_all(out.stdout.as_bytes()).and_then(|_| stdout.flush());
    std::process::exit(out.code);
}
