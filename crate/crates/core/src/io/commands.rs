//! The four batch commands: design table, S11/VSWR sweep, far-field
//! pattern and tower plan. Each writes its artefact and returns what it
//! computed; all arithmetic happens in the library modules.

use std::fmt::Write as _;
use std::path::Path;

use crate::design::{design_patch, PatchGeometry};
use crate::em::{directivity, far_field, RadiationPattern, SweepResult, TwoSlotModel};
use crate::error::{Error, Result};
use crate::planner::{
    assign_devices, brute_force_optimal, stochastic_search, uncovered_ids, Assignment, Objective, TopologyPlan,
    TowerGain, BRUTE_FORCE_MAX, IMPROVEMENT_EPS,
};
use crate::units::Frequency;

use super::format::{fixed, significant};
use super::scenario::{Scenario, TowerGainMode};

pub const SWEEP_HEADER: &str = "freq_ghz,re_zin_ohm,im_zin_ohm,s11_db,vswr";
pub const PATTERN_HEADER: &str = "theta_deg,phi_deg,intensity_db";
pub const PLAN_HEADER: &str = "step,tower_id,x_m,y_m,edge_m";

/// Floor for pattern intensities in dB.
const PATTERN_FLOOR_DB: f64 = -300.0;

fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|e| Error::io(path, e))
}

/// Nine-row dimension table, mm with three decimals.
pub fn design_table(geometry: &PatchGeometry) -> String {
    let mut out = String::from("Parameter        mm\n");
    for (name, value) in geometry.table_rows() {
        let _ = writeln!(out, "{name:<9}{:>10}", fixed(value, 3));
    }
    out
}

pub fn run_design(scenario: &Scenario) -> Result<(PatchGeometry, String)> {
    let geometry = design_patch(&scenario.design_request())?;
    let table = design_table(&geometry);
    Ok((geometry, table))
}

pub fn sweep_csv(result: &SweepResult) -> String {
    let mut out = String::with_capacity(64 * (result.len() + 1));
    out.push_str(SWEEP_HEADER);
    out.push('\n');
    for i in 0..result.len() {
        let z = result.z_in[i];
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            significant(result.frequencies[i].ghz(), 6),
            significant(z.re, 6),
            significant(z.im, 6),
            significant(result.s11_db[i], 6),
            significant(result.vswr[i], 6)
        );
    }
    out
}

pub fn run_sweep(scenario: &Scenario, out_csv: &Path) -> Result<SweepResult> {
    let geometry = design_patch(&scenario.design_request())?;
    let band = scenario.band();
    let result = TwoSlotModel::default().sweep(&geometry, band.f_start, band.f_stop, band.n_points)?;
    write_file(out_csv, &sweep_csv(&result))?;
    Ok(result)
}

pub fn pattern_csv(pattern: &RadiationPattern, directivity_dbi: f64) -> String {
    let mut out = String::with_capacity(32 * (pattern.intensity.len() + 2));
    out.push_str(PATTERN_HEADER);
    out.push('\n');
    for (i, t) in pattern.theta.iter().enumerate() {
        for (j, p) in pattern.phi.iter().enumerate() {
            let u = pattern.at(i, j);
            let db = if u > 0.0 {
                (10.0 * u.log10()).max(PATTERN_FLOOR_DB)
            } else {
                PATTERN_FLOOR_DB
            };
            let _ = writeln!(
                out,
                "{},{},{}",
                fixed(t.to_degrees(), 3),
                fixed(p.to_degrees(), 3),
                fixed(db, 3)
            );
        }
    }
    let _ = writeln!(out, "# directivity_dbi={}", fixed(directivity_dbi, 3));
    out
}

pub fn run_pattern(scenario: &Scenario, f: Frequency, out_csv: &Path) -> Result<(RadiationPattern, f64)> {
    let geometry = design_patch(&scenario.design_request())?;
    let pattern = far_field(&geometry, f, scenario.pattern.n_theta, scenario.pattern.n_phi)?;
    let d = directivity(&pattern)?;
    write_file(out_csv, &pattern_csv(&pattern, d))?;
    Ok((pattern, d))
}

/// Everything `run_plan` produced.
#[derive(Clone, Debug, PartialEq)]
pub struct PlanOutcome {
    pub plan: TopologyPlan,
    pub tower_ids: Vec<String>,
    pub assignments: Vec<Assignment>,
    /// Brute-force optimum when verification ran.
    pub optimum_m: Option<f64>,
}

impl PlanOutcome {
    pub fn summary(&self) -> String {
        let mut out = String::new();
        let objective = match self.plan.objective {
            Objective::OpenPath => "open_path",
            Objective::ClosedTour => "closed_tour",
        };
        let _ = writeln!(out, "total_length_m={}", fixed(self.plan.total_length, 3));
        let _ = writeln!(out, "objective={objective}");
        let _ = writeln!(out, "restarts={}", self.plan.restarts_used);
        let _ = writeln!(out, "evaluations={}", self.plan.evaluations);
        let _ = writeln!(out, "locally_optimal={}", self.plan.locally_optimal);
        if let Some(opt) = self.optimum_m {
            let _ = writeln!(out, "optimum_m={}", fixed(opt, 3));
        }
        let uncovered = uncovered_ids(&self.assignments);
        let _ = writeln!(out, "covered={}", self.assignments.len() - uncovered.len());
        let _ = writeln!(
            out,
            "uncovered={}",
            if uncovered.is_empty() {
                "none".to_string()
            } else {
                uncovered.join(";")
            }
        );
        out
    }
}

/// Visit-order CSV. Closed tours end with a row returning to the start, so
/// the `edge_m` column always sums to the total length.
pub fn plan_csv(plan: &TopologyPlan, towers: &[(String, f64, f64)]) -> String {
    let mut out = String::from(PLAN_HEADER);
    out.push('\n');
    let mut stops: Vec<usize> = plan.order.clone();
    if plan.objective == Objective::ClosedTour && stops.len() > 1 {
        stops.push(stops[0]);
    }
    let mut prev: Option<usize> = None;
    for (step, &k) in stops.iter().enumerate() {
        let (id, x, y) = &towers[k];
        let edge = prev.map_or(0.0, |p| {
            let (_, px, py) = &towers[p];
            (x - px).hypot(y - py)
        });
        let _ = writeln!(out, "{step},{id},{},{},{}", fixed(*x, 3), fixed(*y, 3), fixed(edge, 3));
        prev = Some(k);
    }
    out
}

pub fn run_plan(scenario: &Scenario, out_csv: &Path, verify: bool) -> Result<PlanOutcome> {
    let deployment = scenario
        .deployment()?
        .ok_or_else(|| Error::validation("deployment", "plan needs a [deployment] section"))?;
    let config = scenario
        .search_config()
        .ok_or_else(|| Error::validation("search", "plan needs a [search] section"))?;
    deployment.validate()?;

    let matrix = deployment.tower_matrix()?;
    let plan = stochastic_search(&matrix, &config)?;

    let optimum_m = if verify {
        if matrix.len() > BRUTE_FORCE_MAX {
            return Err(Error::SizeGuard {
                n: matrix.len(),
                max: BRUTE_FORCE_MAX,
            });
        }
        let best = brute_force_optimal(&matrix, config.objective)?;
        Some(best.total_length)
    } else {
        None
    };

    let assignments = if deployment.devices.is_empty() {
        Vec::new()
    } else {
        let geometry = design_patch(&scenario.design_request())?;
        let dep = scenario.deployment.as_ref().expect("deployment present");
        let pattern = far_field(
            &geometry,
            deployment.frequency,
            scenario.pattern.n_theta,
            scenario.pattern.n_phi,
        )?;
        let peak = directivity(&pattern)?;
        let gain = match dep.tower_gain {
            TowerGainMode::Broadside => TowerGain::Scalar(peak),
            TowerGainMode::Pattern => TowerGain::Pattern {
                pattern,
                peak_dbi: peak,
                boresight: dep.boresight_deg.to_radians(),
            },
        };
        assign_devices(&deployment, &scenario.link_params(), &gain)?
    };

    let towers: Vec<(String, f64, f64)> = deployment.towers.iter().map(|t| (t.id.clone(), t.x, t.y)).collect();
    write_file(out_csv, &plan_csv(&plan, &towers))?;

    if let Some(opt) = optimum_m {
        if plan.total_length > opt + IMPROVEMENT_EPS {
            return Err(Error::Verification {
                plan_m: plan.total_length,
                optimum_m: opt,
            });
        }
    }

    Ok(PlanOutcome {
        plan,
        tower_ids: towers.into_iter().map(|t| t.0).collect(),
        assignments,
        optimum_m,
    })
}
