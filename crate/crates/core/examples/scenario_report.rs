//! Runs every stage on a scenario file and prints the combined report.
//!
//! `cargo run --example scenario_report -- crates/core/scenarios/towers.toml`

use patchsls::io::{load_scenario, RunReport};

fn main() -> patchsls::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/scenarios/towers.toml").to_string());
    let scenario = load_scenario(&path)?;
    print!("{}", RunReport::build(&scenario)?.render());
    Ok(())
}
