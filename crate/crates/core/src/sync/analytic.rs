//! Closed-form miss and false-alarm probabilities of the correlator banks.
//!
//! A preamble passes one bank when at most `32 − γ` of its bits are flipped
//! by the channel; with two banks both copies must pass. A random data word
//! passes one correlator with probability `2⁻³² Σ_{j≥γ} C(32, j)`, and two
//! banks see independent words.

use super::correlator::PREAMBLE_BITS;

const N: u64 = PREAMBLE_BITS as u64;

/// `C(32, j)` in exact integer arithmetic.
pub fn binomial32(j: u64) -> u64 {
    if j > N {
        return 0;
    }
    let j = j.min(N - j);
    (0..j).fold(1u64, |acc, i| acc * (N - i) / (i + 1))
}

/// Number of 32-bit words agreeing with a fixed preamble in at least
/// `gamma` positions.
pub fn tail_count(gamma: u32) -> u64 {
    (gamma as u64..=N).map(binomial32).sum()
}

/// Probability that one noisy preamble copy falls below `gamma`.
pub fn bank_fail_probability(p: f64, gamma: u32) -> f64 {
    if gamma as u64 > N {
        return 1.0;
    }
    let max_errors = N - gamma as u64;
    (max_errors + 1..=N)
        .map(|e| binomial32(e) as f64 * p.powi(e as i32) * (1.0 - p).powi((N - e) as i32))
        .sum::<f64>()
        .min(1.0)
}

/// Probability that one noisy preamble copy clears `gamma`.
pub fn bank_pass_probability(p: f64, gamma: u32) -> f64 {
    1.0 - bank_fail_probability(p, gamma)
}

/// `1 − B^banks`, evaluated from the failure tail to avoid cancellation.
pub fn p_miss_analytic(p: f64, gamma: u32, banks: u32) -> f64 {
    assert!((0.0..=1.0).contains(&p), "p = {p} outside [0, 1]");
    let fail = bank_fail_probability(p, gamma);
    if fail >= 1.0 {
        return 1.0;
    }
    -(banks as f64 * (-fail).ln_1p()).exp_m1()
}

/// Per-window, per-correlator false-alarm probability: `q` for one bank,
/// `q²` for two.
pub fn p_false_alarm_analytic(gamma: u32, banks: u32) -> f64 {
    let q = tail_count(gamma) as f64 / 2f64.powi(PREAMBLE_BITS as i32);
    q.powi(banks as i32)
}

/// Union bound over all window evaluations of one frame period
/// (`264 · 8 = 2112` by default).
pub fn frame_false_alarm_bound(gamma: u32, banks: u32, evaluations: u64) -> f64 {
    (evaluations as f64 * p_false_alarm_analytic(gamma, banks)).min(1.0)
}
