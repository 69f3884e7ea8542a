use std::io::{self, IsTerminal};
use std::process::ExitCode;

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let color = io::stdout().is_terminal() && std::env::var_os("NO_COLOR").is_none();
    let code = tensordim_cli::run_styled(&argv, &mut io::stdout().lock(), &mut io::stderr().lock(), color);
    ExitCode::from(code as u8)
}
