//! One catalog entry on one fixture, as JSON with its witnesses.
//!
//! `cargo run --example theorem_report -- paper-example T5`

use std::sync::Arc;

use hyperideal::harness::{check_theorem, fixture, render_json, TheoremId};
use hyperideal::ideals::Mode;

fn main() -> hyperideal::Result<()> {
    let mut args = std::env::args().skip(1);
    let ring = Arc::new(fixture(&args.next().unwrap_or_else(|| "paper-example".into()))?);
    let id: TheoremId = args.next().as_deref().unwrap_or("T5").parse()?;
    let mut report = check_theorem(&ring, id, Mode::Lenient)?;
    report.runtime_ms = None;
    println!("{}", render_json(&[report]));
    Ok(())
}
