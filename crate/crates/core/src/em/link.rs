use crate::error::{Error, Result};
use crate::units::{Frequency, SPEED_OF_LIGHT};

/// Free-space path loss `20 log10(4 pi d f / c)` in dB, `d` in metres.
pub fn fspl(d: f64, f: Frequency) -> Result<f64> {
    if !(d > 0.0) || !d.is_finite() {
        return Err(Error::Domain(format!("distance must be positive, got {d} m")));
    }
    if !(f.hz() > 0.0) || !f.hz().is_finite() {
        return Err(Error::Domain(format!(
            "frequency must be positive, got {} GHz",
            f.ghz()
        )));
    }
    Ok(20.0 * (4.0 * std::f64::consts::PI * d * f.hz() / SPEED_OF_LIGHT).log10())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LinkBudget {
    pub p_tx_dbm: f64,
    pub g_tx_dbi: f64,
    pub g_rx_dbi: f64,
    pub distance_m: f64,
    pub frequency: Frequency,
    pub p_rx_dbm: f64,
    pub sensitivity_dbm: f64,
    pub feasible: bool,
}

impl LinkBudget {
    pub fn margin_db(&self) -> f64 {
        self.p_rx_dbm - self.sensitivity_dbm
    }
}

pub fn link_budget(
    p_tx_dbm: f64,
    g_tx_dbi: f64,
    g_rx_dbi: f64,
    d: f64,
    f: Frequency,
    sensitivity_dbm: f64,
) -> Result<LinkBudget> {
    let loss = fspl(d, f)?;
    let p_rx_dbm = p_tx_dbm + g_tx_dbi + g_rx_dbi - loss;
    Ok(LinkBudget {
        p_tx_dbm,
        g_tx_dbi,
        g_rx_dbi,
        distance_m: d,
        frequency: f,
        p_rx_dbm,
        sensitivity_dbm,
        feasible: p_rx_dbm >= sensitivity_dbm,
    })
}
