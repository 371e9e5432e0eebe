use std::io;
use std::process::ExitCode;

use numerus::cli;

fn main() -> ExitCode {
    let cap = match cli::max_product_from_env() {
        Ok(cap) => cap,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(cli::EXIT_USAGE as u8);
        }
    };
    let code = cli::run(
        std::env::args_os(),
        cap,
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    ExitCode::from(code as u8)
}
