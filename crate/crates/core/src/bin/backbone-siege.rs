use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use backbone_siege::export::{
    cmd_attack, cmd_compare, cmd_stats, parse_checkpoints, Budget, CampaignConfig,
};
use backbone_siege::{AttackStrategy, Error, RecordFiles};

#[derive(Parser)]
#[command(name = "backbone-siege", version, about = "Edge-removal attacks on peering graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Node/edge counts, label counts, degree histogram, LCC and supply metrics.
    Stats(Inputs),
    /// Run one attack and write the per-strike trace.
    Attack(Campaign),
    /// Run several strategies with one budget and tabulate R_n.
    Compare(Campaign),
}

#[derive(Args)]
struct Inputs {
    #[arg(long)]
    ixp: PathBuf,
    #[arg(long)]
    facility: PathBuf,
    #[arg(long)]
    links: PathBuf,
    #[arg(long)]
    providers: PathBuf,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct Campaign {
    #[command(flatten)]
    inputs: Inputs,
    /// betweenness-seq, betweenness-sim, random or random:SEED. Repeat for `compare`.
    #[arg(long, default_value = "betweenness-seq")]
    strategy: Vec<String>,
    /// Seed for `random` strategies given without an inline seed.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Strike count or percentage of edges, e.g. 50 or 20%.
    #[arg(long, default_value = "20%")]
    budget: String,
    /// Comma-separated fractions of the edge count for R_n reporting.
    #[arg(long, default_value = "0.01,0.1,0.2")]
    checkpoints: String,
    /// Worker threads for betweenness.
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

impl Inputs {
    fn files(&self) -> RecordFiles {
        RecordFiles {
            ixp: self.ixp.clone(),
            facility: self.facility.clone(),
            links: self.links.clone(),
            providers: self.providers.clone(),
        }
    }
}

impl Campaign {
    fn strategies(&self) -> Result<Vec<AttackStrategy>, Error> {
        self.strategy
            .iter()
            .map(|s| match s.as_str() {
                "random" => Ok(AttackStrategy::RandomUniform { seed: self.seed }),
                other => other.parse(),
            })
            .collect()
    }

    fn config(&self, strategy: AttackStrategy) -> Result<CampaignConfig, Error> {
        let mut config = CampaignConfig::new(self.inputs.files(), &self.inputs.out);
        config.strategy = strategy;
        config.budget = self.budget.parse::<Budget>()?;
        config.checkpoints = parse_checkpoints(&self.checkpoints)?;
        config.workers = self.workers;
        Ok(config)
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Stats(inputs) => {
            let report = cmd_stats(&inputs.files(), &inputs.out)?;
            print!("{}", report.text);
        }
        Command::Attack(campaign) => {
            let strategies = campaign.strategies()?;
            let [strategy] = strategies[..] else {
                return Err(Error::UnknownStrategy(campaign.strategy.join(",")));
            };
            let report = cmd_attack(&campaign.config(strategy)?)?;
            for w in &report.warnings {
                eprintln!("warning: {w}");
            }
            print!("{}", report.summary);
        }
        Command::Compare(campaign) => {
            let strategies = campaign.strategies()?;
            let config = campaign.config(strategies[0])?;
            let report = cmd_compare(&config, &strategies)?;
            for w in &report.warnings {
                eprintln!("warning: {w}");
            }
            print!("{}", String::from_utf8_lossy(&report.csv));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
