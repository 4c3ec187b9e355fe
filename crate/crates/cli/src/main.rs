use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use entwine_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = run(&cli);
    if let Some((path, doc)) = &out.file {
        if let Err(e) = std::fs::write(path, doc) {
            out.stderr
                .push_str(&format!("error: cannot write {}: {e}\n", path.display()));
            out.code = 2;
        }
    }
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
