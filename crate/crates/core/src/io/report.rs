use std::fmt::Write as _;

use crate::design::{design_patch, PatchGeometry};
use crate::em::{directivity, far_field, SweepSummary, TwoSlotModel};
use crate::error::Result;
use crate::planner::{assign_devices, stochastic_search, uncovered_ids, TopologyPlan, TowerGain};

use super::format::fixed;
use super::scenario::Scenario;

/// One-shot summary of a scenario: geometry, sweep, directivity and, when
/// configured, the tower plan and device coverage.
#[derive(Clone, Debug, PartialEq)]
pub struct RunReport {
    pub geometry: PatchGeometry,
    pub sweep_summary: SweepSummary,
    pub directivity_dbi: f64,
    pub plan: Option<TopologyPlan>,
    /// `(covered count, uncovered ids)`.
    pub coverage: Option<(usize, Vec<String>)>,
}

impl RunReport {
    pub fn build(scenario: &Scenario) -> Result<Self> {
        let geometry = design_patch(&scenario.design_request())?;
        let band = scenario.band();
        let sweep = TwoSlotModel::default().sweep(&geometry, band.f_start, band.f_stop, band.n_points)?;
        let pattern = far_field(
            &geometry,
            scenario.design_request().f_design,
            scenario.pattern.n_theta,
            scenario.pattern.n_phi,
        )?;
        let directivity_dbi = directivity(&pattern)?;

        let deployment = scenario.deployment()?;
        let plan = match (&deployment, scenario.search_config()) {
            (Some(dep), Some(cfg)) => Some(stochastic_search(&dep.tower_matrix()?, &cfg)?),
            _ => None,
        };
        let coverage = match &deployment {
            Some(dep) if !dep.devices.is_empty() => {
                let link_pattern = far_field(
                    &geometry,
                    dep.frequency,
                    scenario.pattern.n_theta,
                    scenario.pattern.n_phi,
                )?;
                let gain = TowerGain::Scalar(directivity(&link_pattern)?);
                let a = assign_devices(dep, &scenario.link_params(), &gain)?;
                let uncovered = uncovered_ids(&a);
                Some((a.len() - uncovered.len(), uncovered))
            }
            _ => None,
        };

        Ok(RunReport {
            geometry,
            sweep_summary: sweep.summary(),
            directivity_dbi,
            plan,
            coverage,
        })
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (name, v) in self.geometry.table_rows() {
            let _ = writeln!(out, "{name}_mm={}", fixed(v, 3));
        }
        let s = &self.sweep_summary;
        let _ = writeln!(out, "f_min_s11_ghz={}", fixed(s.f_min_s11.ghz(), 4));
        let _ = writeln!(out, "min_s11_db={}", fixed(s.min_s11_db, 3));
        let _ = writeln!(out, "vswr_at_min={}", fixed(s.vswr_at_min, 3));
        let _ = writeln!(out, "directivity_dbi={}", fixed(self.directivity_dbi, 3));
        if let Some(p) = &self.plan {
            let order: Vec<String> = p.order.iter().map(|i| i.to_string()).collect();
            let _ = writeln!(out, "plan_order={}", order.join(" "));
            let _ = writeln!(out, "plan_length_m={}", fixed(p.total_length, 3));
        }
        if let Some((covered, uncovered)) = &self.coverage {
            let _ = writeln!(out, "covered={covered}");
            let _ = writeln!(
                out,
                "uncovered={}",
                if uncovered.is_empty() {
                    "none".into()
                } else {
                    uncovered.join(";")
                }
            );
        }
        out
    }
}
