//! Scenario files: TOML documents with a versioned schema.
//!
//! Values are kept in interface units (GHz, mm, m, dBm, dBi) exactly as
//! written so that saving a loaded scenario reproduces it.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::design::{DesignMode, DesignRequest, SubstrateSpec};
use crate::error::{Error, Result};
use crate::planner::{Annealing, Deployment, LinkParams, Objective, SearchConfig, Site};
use crate::units::{Frequency, Length};

pub const SCHEMA_VERSION: u32 = 1;

fn default_schema() -> u32 {
    SCHEMA_VERSION
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    #[serde(default = "default_schema")]
    pub schema_version: u32,
    pub design: DesignSection,
    #[serde(default)]
    pub band: BandSection,
    #[serde(default)]
    pub pattern: PatternSection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deployment: Option<DeploymentSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub search: Option<SearchSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub link: Option<LinkSection>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModeName {
    #[default]
    Paper,
    Resonant,
}

impl From<ModeName> for DesignMode {
    fn from(m: ModeName) -> Self {
        match m {
            ModeName::Paper => DesignMode::PaperGeometry,
            ModeName::Resonant => DesignMode::ResonantGeometry,
        }
    }
}

impl From<DesignMode> for ModeName {
    fn from(m: DesignMode) -> Self {
        match m {
            DesignMode::PaperGeometry => ModeName::Paper,
            DesignMode::ResonantGeometry => ModeName::Resonant,
        }
    }
}

fn fifty() -> f64 {
    50.0
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DesignSection {
    pub f_design_ghz: f64,
    #[serde(default = "fifty")]
    pub z_feed_ohm: f64,
    #[serde(default)]
    pub mode: ModeName,
    #[serde(default)]
    pub substrate: SubstrateSection,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SubstrateSection {
    pub eps_r: f64,
    pub h_mm: f64,
    pub t_copper_mm: f64,
    pub loss_tangent: f64,
}

impl Default for SubstrateSection {
    fn default() -> Self {
        SubstrateSection {
            eps_r: 4.7,
            h_mm: 1.6,
            t_copper_mm: 0.035,
            loss_tangent: 0.0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct BandSection {
    pub f_start_ghz: f64,
    pub f_stop_ghz: f64,
    pub n_points: usize,
}

impl Default for BandSection {
    fn default() -> Self {
        BandSection {
            f_start_ghz: 2.4,
            f_stop_ghz: 24.0,
            n_points: 500,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct PatternSection {
    pub n_theta: usize,
    pub n_phi: usize,
}

impl Default for PatternSection {
    fn default() -> Self {
        PatternSection { n_theta: 91, n_phi: 72 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SiteEntry {
    pub id: String,
    pub x_m: f64,
    pub y_m: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TowerGainMode {
    /// Patch broadside directivity in every direction.
    #[default]
    Broadside,
    /// E-plane pattern lookup around `boresight_deg`.
    Pattern,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeploymentSection {
    /// Defaults to the design frequency.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frequency_ghz: Option<f64>,
    #[serde(default)]
    pub tower_gain: TowerGainMode,
    #[serde(default)]
    pub boresight_deg: f64,
    pub towers: Vec<SiteEntry>,
    #[serde(default)]
    pub devices: Vec<SiteEntry>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ObjectiveName {
    #[default]
    OpenPath,
    ClosedTour,
}

impl From<ObjectiveName> for Objective {
    fn from(o: ObjectiveName) -> Self {
        match o {
            ObjectiveName::OpenPath => Objective::OpenPath,
            ObjectiveName::ClosedTour => Objective::ClosedTour,
        }
    }
}

fn twenty() -> usize {
    20
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchSection {
    #[serde(default)]
    pub objective: ObjectiveName,
    #[serde(default = "twenty")]
    pub restarts: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub annealing: Option<AnnealingSection>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnnealingSection {
    pub t_initial: f64,
    pub cooling: f64,
    pub steps_per_temp: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinkSection {
    pub p_tx_dbm: f64,
    pub sensitivity_dbm: f64,
    #[serde(default)]
    pub g_rx_dbi: f64,
}

/// Sweep band in GHz.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Band {
    pub f_start: Frequency,
    pub f_stop: Frequency,
    pub n_points: usize,
}

fn finite(field: &str, v: f64) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(Error::validation(field, format!("must be finite (got {v})")))
    }
}

impl Scenario {
    /// Scenario with only a design section; everything else defaulted.
    pub fn for_design(f_design_ghz: f64, mode: DesignMode) -> Self {
        Scenario {
            schema_version: SCHEMA_VERSION,
            design: DesignSection {
                f_design_ghz,
                z_feed_ohm: 50.0,
                mode: mode.into(),
                substrate: SubstrateSection::default(),
            },
            band: BandSection::default(),
            pattern: PatternSection::default(),
            deployment: None,
            search: None,
            link: None,
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let scenario: Scenario = toml::from_str(text).map_err(|e| {
            let line = e
                .span()
                .map(|s| text[..s.start.min(text.len())].matches('\n').count() + 1)
                .unwrap_or(1);
            Error::Parse {
                line,
                message: e.message().to_string(),
            }
        })?;
        scenario.validate()?;
        Ok(scenario)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("scenario serialises to TOML")
    }

    /// Checks every invariant; errors name the offending field by its path
    /// in the file.
    pub fn validate(&self) -> Result<()> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::validation(
                "schema_version",
                format!(
                    "unsupported version {} (expected {SCHEMA_VERSION})",
                    self.schema_version
                ),
            ));
        }
        let d = &self.design;
        if !(d.f_design_ghz > 0.0) || !d.f_design_ghz.is_finite() {
            return Err(Error::validation(
                "design.f_design_ghz",
                format!("must be > 0 (got {})", d.f_design_ghz),
            ));
        }
        if !(d.z_feed_ohm > 0.0) || !d.z_feed_ohm.is_finite() {
            return Err(Error::validation(
                "design.z_feed_ohm",
                format!("must be > 0 (got {})", d.z_feed_ohm),
            ));
        }
        let s = &d.substrate;
        if !(s.eps_r >= 1.0) || !s.eps_r.is_finite() {
            return Err(Error::validation(
                "design.substrate.eps_r",
                format!("must be >= 1 (got {})", s.eps_r),
            ));
        }
        if !(s.h_mm > 0.0) || !s.h_mm.is_finite() {
            return Err(Error::validation(
                "design.substrate.h_mm",
                format!("must be > 0 (got {})", s.h_mm),
            ));
        }
        if !(s.t_copper_mm >= 0.0) || !s.t_copper_mm.is_finite() {
            return Err(Error::validation(
                "design.substrate.t_copper_mm",
                format!("must be >= 0 (got {})", s.t_copper_mm),
            ));
        }
        if !(s.loss_tangent >= 0.0) || !s.loss_tangent.is_finite() {
            return Err(Error::validation(
                "design.substrate.loss_tangent",
                format!("must be >= 0 (got {})", s.loss_tangent),
            ));
        }

        let b = &self.band;
        finite("band.f_start_ghz", b.f_start_ghz)?;
        finite("band.f_stop_ghz", b.f_stop_ghz)?;
        if !(b.f_start_ghz > 0.0) {
            return Err(Error::validation("band.f_start_ghz", "must be > 0"));
        }
        if !(b.f_start_ghz < b.f_stop_ghz) {
            return Err(Error::validation(
                "band.f_stop_ghz",
                format!("must exceed f_start_ghz ({} <= {})", b.f_stop_ghz, b.f_start_ghz),
            ));
        }
        if b.n_points < 2 {
            return Err(Error::validation(
                "band.n_points",
                format!("must be >= 2 (got {})", b.n_points),
            ));
        }
        if self.pattern.n_theta < 8 {
            return Err(Error::validation("pattern.n_theta", "must be >= 8"));
        }
        if self.pattern.n_phi < 8 {
            return Err(Error::validation("pattern.n_phi", "must be >= 8"));
        }

        if let Some(dep) = &self.deployment {
            if let Some(f) = dep.frequency_ghz {
                if !(f > 0.0) || !f.is_finite() {
                    return Err(Error::validation(
                        "deployment.frequency_ghz",
                        format!("must be > 0 (got {f})"),
                    ));
                }
            }
            finite("deployment.boresight_deg", dep.boresight_deg)?;
            self.deployment()?
                .expect("deployment present")
                .validate()
                .map_err(|e| match e {
                    Error::Validation { field, message } => Error::Validation {
                        field: format!("deployment.{field}"),
                        message,
                    },
                    other => other,
                })?;
        }
        if let Some(cfg) = self.search_config() {
            cfg.validate().map_err(|e| match e {
                Error::Validation { field, message } => {
                    let prefix = if field == "restarts" {
                        "search"
                    } else {
                        "search.annealing"
                    };
                    Error::Validation {
                        field: format!("{prefix}.{field}"),
                        message,
                    }
                }
                other => other,
            })?;
        }
        if let Some(l) = &self.link {
            finite("link.p_tx_dbm", l.p_tx_dbm)?;
            finite("link.sensitivity_dbm", l.sensitivity_dbm)?;
            finite("link.g_rx_dbi", l.g_rx_dbi)?;
        }
        Ok(())
    }

    pub fn design_request(&self) -> DesignRequest {
        let s = &self.design.substrate;
        DesignRequest {
            f_design: Frequency::from_ghz(self.design.f_design_ghz),
            substrate: SubstrateSpec {
                eps_r: s.eps_r,
                h: Length::from_mm(s.h_mm),
                t_copper: Length::from_mm(s.t_copper_mm),
                loss_tangent: s.loss_tangent,
            },
            z_feed: self.design.z_feed_ohm,
            mode: self.design.mode.into(),
        }
    }

    pub fn band(&self) -> Band {
        Band {
            f_start: Frequency::from_ghz(self.band.f_start_ghz),
            f_stop: Frequency::from_ghz(self.band.f_stop_ghz),
            n_points: self.band.n_points,
        }
    }

    pub fn deployment_frequency(&self) -> Frequency {
        let ghz = self
            .deployment
            .as_ref()
            .and_then(|d| d.frequency_ghz)
            .unwrap_or(self.design.f_design_ghz);
        Frequency::from_ghz(ghz)
    }

    pub fn deployment(&self) -> Result<Option<Deployment>> {
        let Some(dep) = &self.deployment else {
            return Ok(None);
        };
        let site = |e: &SiteEntry| Site::new(e.id.clone(), e.x_m, e.y_m);
        Ok(Some(Deployment {
            towers: dep.towers.iter().map(site).collect(),
            devices: dep.devices.iter().map(site).collect(),
            frequency: self.deployment_frequency(),
        }))
    }

    pub fn search_config(&self) -> Option<SearchConfig> {
        self.search.as_ref().map(|s| SearchConfig {
            objective: s.objective.into(),
            restarts: s.restarts,
            seed: s.seed,
            annealing: s.annealing.as_ref().map(|a| Annealing {
                t_initial: a.t_initial,
                cooling: a.cooling,
                steps_per_temp: a.steps_per_temp,
            }),
        })
    }

    pub fn link_params(&self) -> LinkParams {
        self.link
            .as_ref()
            .map(|l| LinkParams {
                p_tx_dbm: l.p_tx_dbm,
                sensitivity_dbm: l.sensitivity_dbm,
                g_rx_dbi: l.g_rx_dbi,
            })
            .unwrap_or_default()
    }

    /// Applies command-line overrides.
    pub fn with_overrides(mut self, seed: Option<u64>, mode: Option<DesignMode>) -> Self {
        if let Some(mode) = mode {
            self.design.mode = mode.into();
        }
        if let Some(seed) = seed {
            self.search.get_or_insert_with(|| SearchSection {
                objective: ObjectiveName::default(),
                restarts: twenty(),
                seed,
                annealing: None,
            });
            if let Some(s) = self.search.as_mut() {
                s.seed = seed;
            }
        }
        self
    }
}

pub fn load_scenario(path: impl AsRef<Path>) -> Result<Scenario> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    Scenario::parse(&text)
}

pub fn save_scenario(scenario: &Scenario, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, scenario.to_toml()).map_err(|e| Error::io(path, e))
}
