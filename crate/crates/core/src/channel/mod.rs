//! Channel models and link-budget arithmetic.
//!
//! All noise is drawn from ChaCha8 streams addressed by `(seed, stream)`, so
//! any trial can be regenerated on its own.

pub mod awgn;
pub mod bsc;
pub mod budget;
pub mod fir;
pub mod rng;

use serde::{Deserialize, Serialize};

use crate::linecoding::SymbolStream;
use crate::{Error, Result};

pub use awgn::{awgn, dbpsk_ber_theory, dbpsk_error_count_variance, noise_sigma, q_function};
pub use bsc::{bsc, bsc_mask};
pub use budget::{ebn0_from_budget, link_budget, LinkBudget, LinkBudgetParams, HORN_GAIN_DBI, PATCH_GAIN_DBI};
pub use fir::{fir, DEFAULT_MULTIPATH_TAPS};
pub use rng::{derive_seed, stream_rng};

/// One channel operating point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum ChannelConfig {
    Noiseless,
    /// Bit flips with probability `p`, applied to the demodulated bits.
    Bsc {
        p: f64,
    },
    Awgn {
        ebn0_db: f64,
    },
    /// Multipath FIR followed by AWGN.
    FirAwgn {
        taps: Vec<f64>,
        ebn0_db: f64,
    },
}

impl ChannelConfig {
    pub fn validate(&self) -> Result<()> {
        match self {
            ChannelConfig::Noiseless => Ok(()),
            ChannelConfig::Bsc { p } => {
                if (0.0..=1.0).contains(p) {
                    Ok(())
                } else {
                    Err(Error::config(format!("BSC p = {p} outside [0, 1]")))
                }
            }
            ChannelConfig::Awgn { ebn0_db } => check_ebn0(*ebn0_db),
            ChannelConfig::FirAwgn { taps, ebn0_db } => {
                fir::validate_taps(taps)?;
                check_ebn0(*ebn0_db)
            }
        }
    }

    /// Same channel kind at a different sweep value (`p` or Eb/N0 in dB).
    pub fn at(&self, value: f64) -> ChannelConfig {
        match self {
            ChannelConfig::Noiseless => ChannelConfig::Noiseless,
            ChannelConfig::Bsc { .. } => ChannelConfig::Bsc { p: value },
            ChannelConfig::Awgn { .. } => ChannelConfig::Awgn { ebn0_db: value },
            ChannelConfig::FirAwgn { taps, .. } => ChannelConfig::FirAwgn {
                taps: taps.clone(),
                ebn0_db: value,
            },
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ChannelConfig::Noiseless => "noiseless",
            ChannelConfig::Bsc { .. } => "bsc",
            ChannelConfig::Awgn { .. } => "awgn",
            ChannelConfig::FirAwgn { .. } => "fir-awgn",
        }
    }

    pub fn p(&self) -> Option<f64> {
        match self {
            ChannelConfig::Bsc { p } => Some(*p),
            _ => None,
        }
    }

    pub fn ebn0_db(&self) -> Option<f64> {
        match self {
            ChannelConfig::Awgn { ebn0_db } | ChannelConfig::FirAwgn { ebn0_db, .. } => Some(*ebn0_db),
            _ => None,
        }
    }

    /// Applies the symbol-domain part of the channel in place.
    pub fn apply_symbols<R: rand::Rng>(&self, symbols: &mut SymbolStream, rng: &mut R) {
        match self {
            ChannelConfig::Awgn { ebn0_db } => awgn::add_awgn(symbols, *ebn0_db, rng),
            ChannelConfig::FirAwgn { taps, ebn0_db } => {
                *symbols = fir(symbols, taps);
                awgn::add_awgn(symbols, *ebn0_db, rng);
            }
            ChannelConfig::Noiseless | ChannelConfig::Bsc { .. } => {}
        }
    }

    /// Applies the bit-domain part of the channel in place.
    pub fn apply_bits<R: rand::Rng>(&self, bits: &mut [u8], rng: &mut R) {
        if let ChannelConfig::Bsc { p } = self {
            bsc::flip_in_place(bits, *p, rng);
        }
    }
}

fn check_ebn0(ebn0_db: f64) -> Result<()> {
    if ebn0_db.is_finite() {
        Ok(())
    } else {
        Err(Error::config("Eb/N0 must be finite"))
    }
}
