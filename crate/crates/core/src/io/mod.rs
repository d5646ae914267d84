//! Scenario ingestion and CSV / report emission.

pub mod commands;
pub mod format;
mod report;
mod scenario;

pub use commands::{
    design_table, pattern_csv, plan_csv, run_design, run_pattern, run_plan, run_sweep, sweep_csv, PlanOutcome,
    PATTERN_HEADER, PLAN_HEADER, SWEEP_HEADER,
};
pub use report::RunReport;
pub use scenario::{
    load_scenario, save_scenario, AnnealingSection, Band, BandSection, DeploymentSection, DesignSection, LinkSection,
    ModeName, ObjectiveName, PatternSection, Scenario, SearchSection, SiteEntry, SubstrateSection, TowerGainMode,
    SCHEMA_VERSION,
};
