//! Seeded Monte Carlo estimates of the miss and false-alarm rates.
//!
//! Trials are split into fixed-size chunks, each with its own generator
//! stream, so the counts depend only on the seed and never on how many
//! worker threads run the chunks.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::correlator::correlate32;
use crate::channel::{bsc_mask, stream_rng};

const CHUNK: u64 = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Estimate {
    pub events: u64,
    pub trials: u64,
}

impl Estimate {
    pub fn rate(&self) -> f64 {
        if self.trials == 0 {
            return 0.0;
        }
        self.events as f64 / self.trials as f64
    }

    /// Binomial standard error of the observed rate.
    pub fn stderr(&self) -> f64 {
        binomial_sigma(self.rate(), self.trials)
    }

    /// True when the observed rate is within `k` standard deviations of
    /// `expected`, using the spread implied by `expected` itself.
    pub fn within_sigma(&self, expected: f64, k: f64) -> bool {
        (self.rate() - expected).abs() <= k * binomial_sigma(expected, self.trials)
    }
}

pub fn binomial_sigma(rate: f64, trials: u64) -> f64 {
    if trials == 0 {
        return 0.0;
    }
    (rate * (1.0 - rate) / trials as f64).sqrt()
}

fn run_chunked<F>(trials: u64, seed: u64, trial: F) -> Estimate
where
    F: Fn(&mut ChaCha8Rng) -> bool + Sync,
{
    let chunks = trials.div_ceil(CHUNK);
    let events = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = stream_rng(seed, c);
            let n = CHUNK.min(trials - c * CHUNK);
            (0..n).filter(|_| trial(&mut rng)).count() as u64
        })
        .sum();
    Estimate { events, trials }
}

/// Sends `banks` copies of the preamble through a BSC and counts the trials
/// where some copy falls below `gamma`.
pub fn monte_carlo_miss(preamble: u32, p: f64, gamma: u32, banks: u32, trials: u64, seed: u64) -> Estimate {
    run_chunked(trials, seed, |rng| {
        (0..banks).any(|_| {
            let received = preamble ^ bsc_mask(rng, p, 32) as u32;
            correlate32(received, preamble) < gamma
        })
    })
}

/// Draws `banks` independent uniform 32-bit windows per trial and counts
/// trials where all of them clear `gamma`.
pub fn monte_carlo_false_alarm(preamble: u32, gamma: u32, banks: u32, trials: u64, seed: u64) -> Estimate {
    run_chunked(trials, seed, |rng| {
        (0..banks).all(|_| correlate32(rng.random::<u32>(), preamble) >= gamma)
    })
}
