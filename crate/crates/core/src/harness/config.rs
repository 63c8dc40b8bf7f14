//! Run descriptors and the TOML configuration file.
//!
//! ```toml
//! seed = 7            # master seed shared by all subcommands
//! threads = 2         # worker threads (results do not depend on it)
//!
//! [ber]
//! frames = 10000
//! coding = true       # false scores the raw demodulated payload
//! sweep = [6.0, 8.0]  # p for bsc, Eb/N0 in dB for awgn / fir-awgn
//! [ber.channel]
//! kind = "awgn"       # noiseless | bsc | awgn | fir-awgn
//! ebn0_db = 8.0       # bsc takes `p`, fir-awgn also takes `taps`
//! [ber.sync]
//! gamma = 28
//! banks = 2
//!
//! [sync-stats]
//! gammas = [26, 28, 30, 32]
//! ps = [0.0, 0.005, 0.01, 0.02]
//! banks = [1, 2]
//! miss_trials = 100000
//! false_alarm_trials = 10000000
//!
//! [fifo-sim]
//! capacity = 2048
//! start = 1024
//! ticks = 10000000
//! side = "transmit"   # or "receive"
//!
//! [link-budget]
//! ptx_dbm = 0.0
//! gtx_dbi = 22.4
//! grx_dbi = 22.4
//! freq_hz = 60e9
//! distance_m = 10.0
//! ```
//!
//! Every section and key is optional; missing values take the defaults
//! shown by `RunConfig::default()` and friends.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::channel::{ChannelConfig, LinkBudgetParams};
use crate::sync::SyncConfig;
use crate::{Error, Result};

/// One BER campaign.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub channel: ChannelConfig,
    pub sync: SyncConfig,
    /// Frames per operating point.
    pub frames: u64,
    pub coding: bool,
    pub seed: u64,
    /// Operating points; empty means the channel's own value only.
    pub sweep: Vec<f64>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            channel: ChannelConfig::Awgn { ebn0_db: 8.0 },
            sync: SyncConfig::default(),
            frames: 1000,
            coding: true,
            seed: 1,
            sweep: Vec::new(),
        }
    }
}

impl RunConfig {
    /// Channel configurations in sweep order.
    pub fn points(&self) -> Vec<ChannelConfig> {
        if self.sweep.is_empty() {
            vec![self.channel.clone()]
        } else {
            self.sweep.iter().map(|&v| self.channel.at(v)).collect()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.frames == 0 {
            return Err(Error::config("frames must be at least 1"));
        }
        self.sync.validate()?;
        if !self.sweep.is_empty() && self.channel == ChannelConfig::Noiseless {
            return Err(Error::config("a noiseless channel has nothing to sweep"));
        }
        self.points().iter().try_for_each(ChannelConfig::validate)
    }
}

/// Grid for the synchronization statistics campaign.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SyncCampaign {
    pub gammas: Vec<u32>,
    pub ps: Vec<f64>,
    pub banks: Vec<u32>,
    pub miss_trials: u64,
    pub false_alarm_trials: u64,
    pub seed: u64,
}

impl Default for SyncCampaign {
    fn default() -> Self {
        SyncCampaign {
            gammas: vec![26, 28, 30, 32],
            ps: vec![0.0, 0.005, 0.01, 0.02],
            banks: vec![1, 2],
            miss_trials: 100_000,
            false_alarm_trials: 1_000_000,
            seed: 1,
        }
    }
}

impl SyncCampaign {
    pub fn validate(&self) -> Result<()> {
        if self.gammas.is_empty() || self.banks.is_empty() {
            return Err(Error::config(
                "sync campaign needs at least one gamma and one bank count",
            ));
        }
        for &g in &self.gammas {
            SyncConfig::new(g, 1)?;
        }
        for &b in &self.banks {
            SyncConfig::new(0, b)?;
        }
        if let Some(p) = self.ps.iter().find(|p| !(0.0..=1.0).contains(*p)) {
            return Err(Error::config(format!("p = {p} outside [0, 1]")));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FifoSettings {
    pub capacity: u64,
    pub start: u64,
    pub ticks: u64,
    pub side: Side,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    Transmit,
    Receive,
}

impl Default for FifoSettings {
    fn default() -> Self {
        FifoSettings {
            capacity: 2048,
            start: 1024,
            ticks: 10_000_000,
            side: Side::Transmit,
        }
    }
}

/// Whole configuration file.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FileConfig {
    pub seed: Option<u64>,
    pub threads: Option<usize>,
    pub ber: Option<RunConfig>,
    #[serde(rename = "sync-stats")]
    pub sync_stats: Option<SyncCampaign>,
    #[serde(rename = "fifo-sim")]
    pub fifo_sim: Option<FifoSettings>,
    #[serde(rename = "link-budget")]
    pub link_budget: Option<LinkBudgetParams>,
}

impl FileConfig {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::config(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text).map_err(|e| Error::config(format!("{}: {e}", path.display())))
    }
}
