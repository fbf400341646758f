use std::io::Write;
use std::process::ExitCode;

use shi_basis::cli::run_args;

fn configure_threads() {
    let Ok(raw) = std::env::var("SHI_BASIS_THREADS") else {
        return;
    };
    match raw.trim().parse::<usize>() {
        Ok(n) if n > 0 => {
            if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
                eprintln!("warning: could not set thread count: {e}");
            }
        }
        _ => eprintln!("warning: ignoring SHI_BASIS_THREADS={raw:?}; expected a positive integer"),
    }
}

fn main() -> ExitCode {
    configure_threads();
    let out = run_args(std::env::args_os());
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(out.stdout.as_bytes()).and_then(|_| stdout.flush()).is_err() {
        return ExitCode::from(1);
    }
    eprint!("{}", out.stderr);
    ExitCode::from(out.code as u8)
}
