//! Running CLI commands in-process on a bundled model document.
//!
//! cargo run --example documents -- models/jackson.toml check-rbs

use rbsys::cli::{emit_model, parse_model, run_text, Command, Format, Options};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let path = args.next().unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/models/jackson.toml").into());
    let cmd: Command = args.next().unwrap_or_else(|| "characterize".into()).parse()?;
    let text = std::fs::read_to_string(&path)?;
    let report = run_text(cmd, &text, &Options::default())?;
    print!("{}", report.emit(Format::Human));
    println!("\ncanonical form:\n{}", emit_model(&parse_model(&text)?));
    Ok(())
}
