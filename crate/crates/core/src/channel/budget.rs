//! Friis free-space link budget.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;
/// Horn antenna gain.
pub const HORN_GAIN_DBI: f64 = 22.4;
/// Patch antenna gain.
pub const PATCH_GAIN_DBI: f64 = 8.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LinkBudgetParams {
    pub ptx_dbm: f64,
    pub gtx_dbi: f64,
    pub grx_dbi: f64,
    pub freq_hz: f64,
    pub distance_m: f64,
}

impl Default for LinkBudgetParams {
    /// 0 dBm into horn antennas at both ends, 60 GHz, 10 m.
    fn default() -> Self {
        LinkBudgetParams {
            ptx_dbm: 0.0,
            gtx_dbi: HORN_GAIN_DBI,
            grx_dbi: HORN_GAIN_DBI,
            freq_hz: 60e9,
            distance_m: 10.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinkBudget {
    pub fspl_db: f64,
    pub prx_dbm: f64,
}

pub fn link_budget(params: &LinkBudgetParams) -> Result<LinkBudget> {
    if !params.distance_m.is_finite() || params.distance_m <= 0.0 {
        return Err(Error::config(format!(
            "distance {} m must be positive",
            params.distance_m
        )));
    }
    if !params.freq_hz.is_finite() || params.freq_hz <= 0.0 {
        return Err(Error::config(format!(
            "frequency {} Hz must be positive",
            params.freq_hz
        )));
    }
    let fspl_db = 20.0 * (4.0 * std::f64::consts::PI * params.distance_m * params.freq_hz / SPEED_OF_LIGHT).log10();
    Ok(LinkBudget {
        fspl_db,
        prx_dbm: params.ptx_dbm + params.gtx_dbi + params.grx_dbi - fspl_db,
    })
}

/// Eb/N0 in dB for a received power, a noise density in dBm/Hz and a bit
/// rate.
pub fn ebn0_from_budget(prx_dbm: f64, noise_density_dbm_hz: f64, bit_rate: f64) -> f64 {
    prx_dbm - noise_density_dbm_hz - 10.0 * bit_rate.log10()
}
