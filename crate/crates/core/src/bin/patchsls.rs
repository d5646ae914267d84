//! Batch front end: `patchsls <design|sweep|pattern|plan> --scenario FILE`.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use patchsls::design::DesignMode;
use patchsls::io::{load_scenario, run_design, run_pattern, run_plan, run_sweep};
use patchsls::{Error, Frequency};

#[derive(Parser)]
#[command(name = "patchsls", version, about = "Microstrip patch synthesis and tower planning")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Scenario file (TOML)
    #[arg(long, global = true)]
    scenario: Option<PathBuf>,

    /// Output CSV path
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Overrides the search seed
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Overrides the design mode
    #[arg(long, global = true, value_enum)]
    mode: Option<Mode>,

    /// Cross-check the plan against the brute-force optimum (n <= 10)
    #[arg(long, global = true)]
    verify: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Paper,
    Resonant,
}

#[derive(Subcommand)]
enum Command {
    /// Print the patch dimension table
    Design,
    /// Write the impedance / S11 / VSWR sweep
    Sweep,
    /// Write the far-field pattern
    Pattern {
        /// Frequency in GHz (defaults to the design frequency)
        #[arg(long)]
        freq: Option<f64>,
    },
    /// Plan the tower connection order
    Plan,
}

fn run(cli: Cli) -> Result<(), Error> {
    let path = cli
        .scenario
        .ok_or_else(|| Error::Input("--scenario <path> is required".into()))?;
    let mode = cli.mode.map(|m| match m {
        Mode::Paper => DesignMode::PaperGeometry,
        Mode::Resonant => DesignMode::ResonantGeometry,
    });
    let scenario = load_scenario(&path)?.with_overrides(cli.seed, mode);
    scenario.validate()?;
    let out = || {
        cli.out
            .clone()
            .ok_or_else(|| Error::Input("--out <path> is required".into()))
    };

    match cli.command {
        Command::Design => {
            let (_, table) = run_design(&scenario)?;
            print!("{table}");
        }
        Command::Sweep => {
            let result = run_sweep(&scenario, &out()?)?;
            let s = result.summary();
            println!("points={}", result.len());
            println!("f_min_s11_ghz={:.4}", s.f_min_s11.ghz());
            println!("min_s11_db={:.3}", s.min_s11_db);
            println!("vswr_at_min={:.3}", s.vswr_at_min);
            if let Some(f) = result.extrapolation_start() {
                println!("# surrogate-model extrapolation above {:.4} GHz", f.ghz());
            }
        }
        Command::Pattern { freq } => {
            let f = Frequency::from_ghz(freq.unwrap_or(scenario.design.f_design_ghz));
            let (_, d) = run_pattern(&scenario, f, &out()?)?;
            println!("directivity_dbi={d:.3}");
        }
        Command::Plan => {
            let outcome = run_plan(&scenario, &out()?, cli.verify)?;
            print!("{}", outcome.summary());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    // clap would exit 2 on bad arguments, which is the model-range code here.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
