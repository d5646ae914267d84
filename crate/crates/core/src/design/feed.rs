//! Microstrip feed-line synthesis and analysis (Wheeler / Hammerstad).

use crate::error::{Error, Result};
use crate::units::{Length, ETA_0};

/// Width-to-height ratio at which synthesis switches from the narrow-strip to
/// the wide-strip formula.
pub const BRANCH_RATIO: f64 = 2.0;

/// Width of a microstrip line with characteristic impedance `z0` on a
/// substrate of permittivity `eps_r` and height `h`.
pub fn synthesize_feed_width(z0: f64, eps_r: f64, h: Length) -> Result<Length> {
    if !(z0 > 0.0) || !z0.is_finite() {
        return Err(Error::Domain(format!("z0 must be positive, got {z0}")));
    }
    if !(eps_r >= 1.0) {
        return Err(Error::Domain(format!("eps_r must be >= 1, got {eps_r}")));
    }
    if !(h.m() > 0.0) {
        return Err(Error::Domain(format!("h must be positive, got {} mm", h.mm())));
    }
    let a = z0 / 60.0 * ((eps_r + 1.0) / 2.0).sqrt() + (eps_r - 1.0) / (eps_r + 1.0) * (0.23 + 0.11 / eps_r);
    let narrow = 8.0 * a.exp() / ((2.0 * a).exp() - 2.0);
    let ratio = if narrow > 0.0 && narrow < BRANCH_RATIO {
        narrow
    } else {
        let b = ETA_0 * std::f64::consts::PI / (2.0 * z0 * eps_r.sqrt());
        2.0 / std::f64::consts::PI
            * (b - 1.0 - (2.0 * b - 1.0).ln() + (eps_r - 1.0) / (2.0 * eps_r) * ((b - 1.0).ln() + 0.39 - 0.61 / eps_r))
    };
    if !(ratio > 0.0) || !ratio.is_finite() {
        return Err(Error::Domain(format!(
            "no physical strip width realises {z0} ohm on eps_r = {eps_r}"
        )));
    }
    Ok(ratio * h)
}

/// Quasi-static effective permittivity of a strip, including the narrow-strip
/// correction term for `W/h < 1`.
pub fn line_eps_eff(w: Length, eps_r: f64, h: Length) -> f64 {
    let u = w.m() / h.m();
    let mut e = (eps_r + 1.0) / 2.0 + (eps_r - 1.0) / 2.0 / (1.0 + 12.0 / u).sqrt();
    if u < 1.0 {
        e += (eps_r - 1.0) / 2.0 * 0.04 * (1.0 - u).powi(2);
    }
    e
}

/// Characteristic impedance (Ω) of a microstrip of width `w`.
pub fn microstrip_impedance(w: Length, eps_r: f64, h: Length) -> f64 {
    let u = w.m() / h.m();
    let e = line_eps_eff(w, eps_r, h);
    if u <= 1.0 {
        60.0 / e.sqrt() * (8.0 / u + u / 4.0).ln()
    } else {
        ETA_0 / (e.sqrt() * (u + 1.393 + 0.667 * (u + 1.444).ln()))
    }
}
