//! Drive a full campaign the way the `backbone-siege attack` command does and write the
//! per-strike trace CSV.
//!
//! ```bash
//! cargo run -p backbone-siege --example export_csv [OUT.csv]
//! ```

use backbone_siege::export::{cmd_attack, Budget, CampaignConfig};
use backbone_siege::{AttackStrategy, RecordFiles};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let out = std::env::args()
        .nth(1)
        .unwrap_or_else(|| std::env::temp_dir().join("sample-trace.csv").display().to_string());
    let files = RecordFiles::in_dir(concat!(env!("CARGO_MANIFEST_DIR"), "/data/sample"));

    let mut config = CampaignConfig::new(files, &out);
    config.strategy = AttackStrategy::BetweennessSequential;
    config.budget = "50%".parse::<Budget>()?;
    config.checkpoints = vec![0.05, 0.1, 0.2, 0.5];

    let report = cmd_attack(&config)?;
    for w in &report.warnings {
        eprintln!("warning: {w}");
    }
    print!("{}", report.summary);

    println!("\nwrote {} rows to {out}; first lines:", report.trace.strikes.len());
    let body = std::fs::read_to_string(&out)?;
    for line in body.lines().take(6) {
        println!("  {line}");
    }
    Ok(())
}
