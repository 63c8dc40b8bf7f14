//! Exact clock arithmetic for the two baseband domains.
//!
//! `F2` is the serial line rate and `F1 = F2 · 239/260` the payload serial
//! rate; the byte clocks are `f1 = F1/8` and `f2 = F2/8`. Everything is kept
//! as a rational number of hertz.

use num_rational::Ratio;

use crate::{Error, Result};

pub type Hz = Ratio<u64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClockPlan {
    /// `F2`, serial line rate in bit/s.
    pub line_rate: Hz,
    /// `F1 / F2`.
    pub payload_ratio: Ratio<u64>,
}

impl Default for ClockPlan {
    /// `F2 = IF/4` with a 3.5 GHz IF, ratio 239/260.
    fn default() -> Self {
        ClockPlan::from_if(Ratio::from_integer(3_500_000_000))
    }
}

impl ClockPlan {
    pub fn new(line_rate: Hz, payload_ratio: Ratio<u64>) -> Result<Self> {
        if line_rate == Ratio::from_integer(0) {
            return Err(Error::config("line rate must be positive"));
        }
        if payload_ratio == Ratio::from_integer(0) || payload_ratio > Ratio::from_integer(1) {
            return Err(Error::config("payload ratio must lie in (0, 1]"));
        }
        Ok(ClockPlan {
            line_rate,
            payload_ratio,
        })
    }

    pub fn from_if(intermediate_frequency: Hz) -> Self {
        ClockPlan {
            line_rate: intermediate_frequency / 4,
            payload_ratio: Ratio::new(239, 260),
        }
    }

    /// `F1`.
    pub fn payload_rate(&self) -> Hz {
        self.line_rate * self.payload_ratio
    }

    /// `f1 = F1/8`, the continuous byte clock on the Ethernet side.
    pub fn f1(&self) -> Hz {
        self.payload_rate() / 8
    }

    /// `f2 = F2/8`, the framed byte clock.
    pub fn f2(&self) -> Hz {
        self.line_rate / 8
    }

    /// Net payload bit rate.
    pub fn throughput(&self) -> Hz {
        self.payload_rate()
    }
}

/// Net payload rate for a plan.
pub fn throughput(plan: &ClockPlan) -> Hz {
    plan.throughput()
}

/// Decimal rendering of `value / scale` with `decimals` digits, rounding
/// halves toward zero (109.375 → "109.37", 804.3269… → "804.33").
pub fn format_scaled(value: Hz, scale: u64, decimals: u32) -> String {
    let v = value / scale;
    let pow = 10u128.pow(decimals);
    let num = *v.numer() as u128 * pow;
    let den = *v.denom() as u128;
    let (q, r) = (num / den, num % den);
    let rounded = if 2 * r > den { q + 1 } else { q };
    if decimals == 0 {
        return rounded.to_string();
    }
    let int = rounded / pow;
    let frac = rounded % pow;
    format!("{int}.{frac:0width$}", width = decimals as usize)
}

pub fn to_f64(v: Hz) -> f64 {
    *v.numer() as f64 / *v.denom() as f64
}
