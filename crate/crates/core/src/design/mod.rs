//! Patch synthesis: substrate description, closed-form dimensioning and
//! assembly of a complete inset-fed patch geometry.

mod equations;
mod feed;

pub use equations::{
    compute_delta_l, compute_eps_eff, compute_resonant_length, compute_width, ResonantLength, DELTA_L_POLE,
};
pub use feed::{line_eps_eff, microstrip_impedance, synthesize_feed_width, BRANCH_RATIO};

use crate::error::{Error, Result};
use crate::units::{Frequency, Length};

/// Gap between the patch and the inset-feed notch walls.
pub const INSET_GAP: Length = Length::from_m(1.0e-3);

/// Dielectric stack-up.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SubstrateSpec {
    pub eps_r: f64,
    /// Substrate height (Hs).
    pub h: Length,
    /// Conductor thickness (Ht).
    pub t_copper: Length,
    pub loss_tangent: f64,
}

impl SubstrateSpec {
    pub fn new(eps_r: f64, h: Length, t_copper: Length, loss_tangent: f64) -> Result<Self> {
        let s = SubstrateSpec {
            eps_r,
            h,
            t_copper,
            loss_tangent,
        };
        s.validate()?;
        Ok(s)
    }

    /// FR4 board with eps_r = 4.7, 1.6 mm core and 35 um copper.
    pub fn fr4() -> Self {
        SubstrateSpec {
            eps_r: 4.7,
            h: Length::from_mm(1.6),
            t_copper: Length::from_mm(0.035),
            loss_tangent: 0.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.eps_r >= 1.0) || !self.eps_r.is_finite() {
            return Err(Error::validation("eps_r", format!("must be >= 1 (got {})", self.eps_r)));
        }
        if !(self.h.m() > 0.0) || !self.h.m().is_finite() {
            return Err(Error::validation("h", format!("must be > 0 (got {} mm)", self.h.mm())));
        }
        if !(self.t_copper.m() >= 0.0) || !self.t_copper.m().is_finite() {
            return Err(Error::validation(
                "t_copper",
                format!("must be >= 0 (got {} mm)", self.t_copper.mm()),
            ));
        }
        if !(self.loss_tangent >= 0.0) || !self.loss_tangent.is_finite() {
            return Err(Error::validation(
                "loss_tangent",
                format!("must be >= 0 (got {})", self.loss_tangent),
            ));
        }
        Ok(())
    }
}

impl Default for SubstrateSpec {
    fn default() -> Self {
        Self::fr4()
    }
}

/// How the patch length is chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DesignMode {
    /// Tabulated proportions: L = 2W, ground 2L x 2W.
    #[default]
    PaperGeometry,
    /// Physically resonant length L = L_eff - 2·delta_L.
    ResonantGeometry,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DesignRequest {
    pub f_design: Frequency,
    pub substrate: SubstrateSpec,
    /// Feed impedance in ohms.
    pub z_feed: f64,
    pub mode: DesignMode,
}

impl DesignRequest {
    pub fn new(f_design: Frequency, substrate: SubstrateSpec, mode: DesignMode) -> Self {
        DesignRequest {
            f_design,
            substrate,
            z_feed: 50.0,
            mode,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.f_design.hz() > 0.0) || !self.f_design.hz().is_finite() {
            return Err(Error::validation(
                "f_design",
                format!("must be > 0 (got {} GHz)", self.f_design.ghz()),
            ));
        }
        if !(self.z_feed > 0.0) || !self.z_feed.is_finite() {
            return Err(Error::validation(
                "z_feed",
                format!("must be > 0 (got {})", self.z_feed),
            ));
        }
        self.substrate.validate()
    }
}

/// Every physical dimension of the patch, its inset feed and ground plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PatchGeometry {
    pub width: Length,
    pub length: Length,
    pub eps_eff: f64,
    pub delta_l: Length,
    pub length_eff: Length,
    /// Inset depth (Fi).
    pub inset_depth: Length,
    /// Feed-line width (Wf).
    pub feed_width: Length,
    /// Inset gap (Gpf).
    pub inset_gap: Length,
    pub ground_length: Length,
    pub ground_width: Length,
    pub substrate: SubstrateSpec,
    pub mode: DesignMode,
}

impl PatchGeometry {
    /// Checks the structural invariants shared by both design modes.
    pub fn validate(&self) -> Result<()> {
        let lengths = [
            ("W", self.width),
            ("L", self.length),
            ("delta_L", self.delta_l),
            ("L_eff", self.length_eff),
            ("Fi", self.inset_depth),
            ("Wf", self.feed_width),
            ("Gpf", self.inset_gap),
            ("Lg", self.ground_length),
            ("Wg", self.ground_width),
        ];
        for (name, len) in lengths {
            if !(len.m() > 0.0) || !len.m().is_finite() {
                return Err(Error::Geometry(format!(
                    "{name} must be positive (got {} mm)",
                    len.mm()
                )));
            }
        }
        if self.inset_depth.m() >= self.length.m() / 2.0 {
            return Err(Error::Geometry(format!(
                "inset depth {:.3} mm must stay below L/2 = {:.3} mm",
                self.inset_depth.mm(),
                self.length.mm() / 2.0
            )));
        }
        if !(self.eps_eff >= 1.0 && self.eps_eff <= self.substrate.eps_r) {
            return Err(Error::Geometry(format!(
                "eps_eff {} outside [1, {}]",
                self.eps_eff, self.substrate.eps_r
            )));
        }
        Ok(())
    }

    /// Rows of the dimension table in display order, values in mm.
    pub fn table_rows(&self) -> [(&'static str, f64); 9] {
        [
            ("W", self.width.mm()),
            ("L", self.length.mm()),
            ("Fi", self.inset_depth.mm()),
            ("Wf", self.feed_width.mm()),
            ("Gpf", self.inset_gap.mm()),
            ("Lg", self.ground_length.mm()),
            ("Wg", self.ground_width.mm()),
            ("Ht", self.substrate.t_copper.mm()),
            ("Hs", self.substrate.h.mm()),
        ]
    }
}

/// Assembles a full patch geometry for `request`.
///
/// Fi = 3h, Gpf = 1 mm, Lg = 2L and Wg = 2W in both modes; the mode only
/// selects how L is obtained.
pub fn design_patch(request: &DesignRequest) -> Result<PatchGeometry> {
    request.validate()?;
    let sub = request.substrate;
    let width = compute_width(request.f_design, sub.eps_r)?;
    let eps_eff = compute_eps_eff(sub.eps_r, sub.h, width)?;
    let delta_l = compute_delta_l(sub.h, eps_eff, width)?;
    let resonant = compute_resonant_length(request.f_design, eps_eff, delta_l)?;
    let length = match request.mode {
        DesignMode::PaperGeometry => 2.0 * width,
        DesignMode::ResonantGeometry => resonant.physical,
    };
    let geometry = PatchGeometry {
        width,
        length,
        eps_eff,
        delta_l,
        length_eff: resonant.effective,
        inset_depth: 3.0 * sub.h,
        feed_width: synthesize_feed_width(request.z_feed, sub.eps_r, sub.h)?,
        inset_gap: INSET_GAP,
        ground_length: 2.0 * length,
        ground_width: 2.0 * width,
        substrate: sub,
        mode: request.mode,
    };
    geometry.validate()?;
    Ok(geometry)
}
