//! Real AWGN at one bit per symbol: `σ² = 1 / (2·Eb/N0)` for unit-energy
//! symbols.

use rand::Rng;
use rand_distr::StandardNormal;
use statrs::function::erf::erfc;

use crate::linecoding::SymbolStream;

pub fn noise_sigma(ebn0_db: f64) -> f64 {
    (0.5 / 10f64.powf(ebn0_db / 10.0)).sqrt()
}

pub fn awgn<R: Rng>(symbols: &SymbolStream, ebn0_db: f64, rng: &mut R) -> SymbolStream {
    let mut out = symbols.clone();
    add_awgn(&mut out, ebn0_db, rng);
    out
}

pub(crate) fn add_awgn<R: Rng>(symbols: &mut [f64], ebn0_db: f64, rng: &mut R) {
    let sigma = noise_sigma(ebn0_db);
    for s in symbols.iter_mut() {
        let n: f64 = rng.sample(StandardNormal);
        *s += sigma * n;
    }
}

/// Gaussian tail `Q(x) = P(Z > x)`.
pub fn q_function(x: f64) -> f64 {
    0.5 * erfc(x / std::f64::consts::SQRT_2)
}

/// Bit error rate of the delay-product detector. Each decision is wrong
/// when exactly one of the two symbols it multiplies has its sign flipped
/// by noise, so `BER = 2q(1−q)` with `q = Q(√(2·Eb/N0))`.
pub fn dbpsk_ber_theory(ebn0_db: f64) -> f64 {
    let q = q_function((2.0 * 10f64.powf(ebn0_db / 10.0)).sqrt());
    2.0 * q * (1.0 - q)
}

/// Variance of the error count over `bits` consecutive decisions.
/// Neighbouring decisions share a symbol, which adds a covariance of
/// `q(1−q) − π²` per adjacent pair (`π` = BER).
pub fn dbpsk_error_count_variance(ebn0_db: f64, bits: u64) -> f64 {
    let ber = dbpsk_ber_theory(ebn0_db);
    let n = bits as f64;
    n * ber * (1.0 - ber) + 2.0 * (n - 1.0).max(0.0) * (ber / 2.0 - ber * ber)
}
