use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, text) = qcrystal::cli::run(std::env::args_os());
    if code == qcrystal::cli::EXIT_INPUT {
        eprint!("{text}");
    } else {
        let _ = std::io::stdout().write_all(text.as_bytes());
    }
    ExitCode::from(code as u8)
}
