//! Analytic versus Monte Carlo synchronization statistics.

use crate::channel::derive_seed;
use crate::framing::FrameConfig;
use crate::sync::{
    frame_false_alarm_bound, monte_carlo_false_alarm, monte_carlo_miss, p_false_alarm_analytic, p_miss_analytic,
    Estimate, SyncConfig, CORRELATORS,
};
use crate::Result;

use super::config::SyncCampaign;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    Miss,
    FalseAlarm,
}

impl Metric {
    pub fn name(self) -> &'static str {
        match self {
            Metric::Miss => "miss",
            Metric::FalseAlarm => "false_alarm",
        }
    }
}

/// One line of the campaign table. False-alarm rows do not depend on `p`.
#[derive(Debug, Clone, PartialEq)]
pub struct SyncRow {
    pub metric: Metric,
    pub gamma: u32,
    pub p: Option<f64>,
    pub banks: u32,
    pub analytic: f64,
    pub empirical: Estimate,
    /// Union bound over one frame period of window evaluations.
    pub frame_bound: Option<f64>,
}

/// Window evaluations per frame period.
pub fn evaluations_per_frame(banks: u32) -> u64 {
    let sync = SyncConfig::new(0, banks).expect("banks validated");
    let span = if banks == 2 {
        sync.decision_span()
    } else {
        sync.bank_spacing + 4
    };
    (span * CORRELATORS) as u64
}

/// Rows ordered by banks, gamma, then miss rows for each `p` followed by the
/// false-alarm row.
pub fn run_sync_campaign(config: &SyncCampaign) -> Result<Vec<SyncRow>> {
    config.validate()?;
    let preamble = FrameConfig::standard().preamble_word();
    let mut rows = Vec::new();
    let mut next_seed = {
        let mut i = 0u64;
        move || {
            i += 1;
            derive_seed(config.seed, i - 1)
        }
    };
    for &banks in &config.banks {
        for &gamma in &config.gammas {
            for &p in &config.ps {
                rows.push(SyncRow {
                    metric: Metric::Miss,
                    gamma,
                    p: Some(p),
                    banks,
                    analytic: p_miss_analytic(p, gamma, banks),
                    empirical: monte_carlo_miss(preamble, p, gamma, banks, config.miss_trials, next_seed()),
                    frame_bound: None,
                });
            }
            rows.push(SyncRow {
                metric: Metric::FalseAlarm,
                gamma,
                p: None,
                banks,
                analytic: p_false_alarm_analytic(gamma, banks),
                empirical: monte_carlo_false_alarm(preamble, gamma, banks, config.false_alarm_trials, next_seed()),
                frame_bound: Some(frame_false_alarm_bound(gamma, banks, evaluations_per_frame(banks))),
            });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SyncCampaign {
        SyncCampaign {
            gammas: vec![28],
            ps: vec![0.0, 0.01],
            banks: vec![1, 2],
            miss_trials: 200_000,
            false_alarm_trials: 100_000,
            seed: 3,
        }
    }

    #[test]
    fn layout_and_anchors() {
        let rows = run_sync_campaign(&small()).unwrap();
        assert_eq!(rows.len(), 6);
        let zero = &rows[3];
        assert_eq!((zero.metric, zero.p, zero.banks), (Metric::Miss, Some(0.0), 2));
        assert_eq!((zero.analytic, zero.empirical.events), (0.0, 0));
        let fa1 = &rows[2];
        let fa2 = &rows[5];
        assert!((fa1.analytic - 9.65e-6).abs() < 5e-9);
        assert!((fa2.analytic - 9.31e-11).abs() < 5e-14);
        assert_eq!(fa2.frame_bound, Some(2112.0 * fa2.analytic));
        assert_eq!(evaluations_per_frame(1), 2112);
    }

    #[test]
    fn miss_at_28_and_one_percent() {
        let rows = run_sync_campaign(&small()).unwrap();
        let r = &rows[4];
        assert_eq!((r.gamma, r.p, r.banks), (28, Some(0.01), 2));
        assert!(r.empirical.within_sigma(r.analytic, 3.0), "{r:?}");
    }

    #[test]
    fn deterministic() {
        assert_eq!(
            run_sync_campaign(&small()).unwrap(),
            run_sync_campaign(&small()).unwrap()
        );
    }
}
