use std::io::{self, IsTerminal, Read, Write};
use std::process::ExitCode;

fn needs_stdin(args: &[String]) -> bool {
    args.iter().any(|a| a == "canon" || a == "-")
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let mut input = String::new();
    if needs_stdin(&args) && !io::stdin().is_terminal() {
        if let Err(e) = io::stdin().read_to_string(&mut input) {
            eprintln!("error: cannot read stdin: {e}");
            return ExitCode::from(2);
        }
    }
    let outcome = ugqsym_cli::run(&args, &input);
    let _ = io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
