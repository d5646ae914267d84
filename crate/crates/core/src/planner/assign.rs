use std::collections::HashSet;

use crate::em::{link_budget, LinkBudget, PatternCut, RadiationPattern};
use crate::error::{Error, Result};
use crate::units::Frequency;

use super::{distance_matrix, DistanceMatrix};

/// Floor applied to link distances so colocated nodes keep a finite path loss.
pub const MIN_LINK_DISTANCE_M: f64 = 0.1;

/// A tower or device on the deployment plane.
#[derive(Clone, Debug, PartialEq)]
pub struct Site {
    pub id: String,
    pub x: f64,
    pub y: f64,
}

impl Site {
    pub fn new(id: impl Into<String>, x: f64, y: f64) -> Self {
        Site { id: id.into(), x, y }
    }

    pub fn distance_to(&self, other: &Site) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Deployment {
    pub towers: Vec<Site>,
    pub devices: Vec<Site>,
    pub frequency: Frequency,
}

impl Deployment {
    pub fn validate(&self) -> Result<()> {
        if self.towers.is_empty() {
            return Err(Error::validation("towers", "at least one tower is required"));
        }
        let mut ids = HashSet::new();
        for (kind, sites) in [("towers", &self.towers), ("devices", &self.devices)] {
            for s in sites.iter() {
                if !ids.insert(s.id.as_str()) {
                    return Err(Error::validation(kind, format!("duplicate id {:?}", s.id)));
                }
                if !s.x.is_finite() || !s.y.is_finite() {
                    return Err(Error::validation(
                        kind,
                        format!("site {:?} has a non-finite coordinate", s.id),
                    ));
                }
            }
        }
        if !(self.frequency.hz() > 0.0) || !self.frequency.hz().is_finite() {
            return Err(Error::validation("frequency", "must be > 0"));
        }
        Ok(())
    }

    pub fn tower_matrix(&self) -> Result<DistanceMatrix> {
        let pts: Vec<(f64, f64)> = self.towers.iter().map(|t| (t.x, t.y)).collect();
        distance_matrix(&pts)
    }
}

/// Transmit side of device links.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LinkParams {
    pub p_tx_dbm: f64,
    pub sensitivity_dbm: f64,
    pub g_rx_dbi: f64,
}

impl Default for LinkParams {
    fn default() -> Self {
        LinkParams {
            p_tx_dbm: 20.0,
            sensitivity_dbm: -90.0,
            g_rx_dbi: 0.0,
        }
    }
}

/// Gain of a tower antenna toward a device.
#[derive(Clone, Debug, PartialEq)]
pub enum TowerGain {
    /// Same gain in every direction, usually the patch broadside directivity.
    Scalar(f64),
    /// Patch mounted with its normal horizontal along `boresight` (radians,
    /// from +x); the E-plane cut of `pattern` scales `peak_dbi`.
    Pattern {
        pattern: RadiationPattern,
        peak_dbi: f64,
        boresight: f64,
    },
}

const GAIN_FLOOR_DB: f64 = -300.0;

impl TowerGain {
    pub fn toward(&self, tower: &Site, device: &Site) -> f64 {
        match self {
            TowerGain::Scalar(g) => *g,
            TowerGain::Pattern {
                pattern,
                peak_dbi,
                boresight,
            } => {
                let bearing = (device.y - tower.y).atan2(device.x - tower.x);
                let off = (bearing - boresight + std::f64::consts::PI).rem_euclid(2.0 * std::f64::consts::PI)
                    - std::f64::consts::PI;
                let u = pattern.cut_intensity(PatternCut::EPlane, off.abs()).unwrap_or(0.0);
                if u > 0.0 {
                    peak_dbi + (10.0 * u.log10()).max(GAIN_FLOOR_DB)
                } else {
                    peak_dbi + GAIN_FLOOR_DB
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Assignment {
    pub device_id: String,
    /// Serving tower index, `None` when no tower closes the link.
    pub tower: Option<usize>,
    /// Budget to the serving tower, or to the nearest tower when uncovered.
    pub budget: LinkBudget,
}

/// Maps each device to the nearest tower whose link budget is feasible.
/// Distances below [`MIN_LINK_DISTANCE_M`] are floored; equidistant towers
/// go to the lower index.
pub fn assign_devices(deployment: &Deployment, link: &LinkParams, gain: &TowerGain) -> Result<Vec<Assignment>> {
    deployment.validate()?;
    let mut out = Vec::with_capacity(deployment.devices.len());
    for device in &deployment.devices {
        let mut ranked: Vec<(usize, f64)> = deployment
            .towers
            .iter()
            .enumerate()
            .map(|(i, t)| (i, t.distance_to(device)))
            .collect();
        ranked.sort_by(|a, b| a.1.total_cmp(&b.1).then(a.0.cmp(&b.0)));

        let mut nearest: Option<LinkBudget> = None;
        let mut chosen = None;
        for &(i, d) in &ranked {
            let tower = &deployment.towers[i];
            let budget = link_budget(
                link.p_tx_dbm,
                gain.toward(tower, device),
                link.g_rx_dbi,
                d.max(MIN_LINK_DISTANCE_M),
                deployment.frequency,
                link.sensitivity_dbm,
            )?;
            nearest.get_or_insert(budget);
            if budget.feasible {
                chosen = Some((i, budget));
                break;
            }
        }
        out.push(match chosen {
            Some((i, budget)) => Assignment {
                device_id: device.id.clone(),
                tower: Some(i),
                budget,
            },
            None => Assignment {
                device_id: device.id.clone(),
                tower: None,
                budget: nearest.expect("deployment has at least one tower"),
            },
        });
    }
    Ok(out)
}

/// Ids of devices left without a serving tower.
pub fn uncovered_ids(assignments: &[Assignment]) -> Vec<String> {
    assignments
        .iter()
        .filter(|a| a.tower.is_none())
        .map(|a| a.device_id.clone())
        .collect()
}
