use std::process::ExitCode;

use clap::Parser;

use orelab::{error_report, run, Args};

fn write_json(path: &std::path::Path, value: &serde_json::Value) -> std::io::Result<()> {
    let mut text = serde_json::to_string_pretty(value).expect("reports serialize");
    text.push('\n');
    std::fs::write(path, text)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let (code, report) = match run(&args) {
        Ok(run) => {
            print!("{}", run.text);
            (run.exit, run.report)
        }
        Err(err) => {
            eprintln!("error: {err}");
            (err.exit_code(), error_report(args.command, &err))
        }
    };
    if let Some(path) = &args.json {
        if let Err(e) = write_json(path, &report) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(4);
        }
    }
    ExitCode::from(code as u8)
}
