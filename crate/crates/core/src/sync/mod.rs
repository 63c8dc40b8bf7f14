//! Byte/frame synchronization: correlator banks, periodic preamble
//! detection, and the analytic and Monte Carlo miss/false-alarm rates.

pub mod analytic;
pub mod correlator;
pub mod detect;
pub mod montecarlo;

pub use analytic::{frame_false_alarm_bound, p_false_alarm_analytic, p_miss_analytic};
pub use correlator::{bank_scan, correlate32, BANK_WINDOW, CORRELATORS, PREAMBLE_BITS};
pub use detect::{detect_frame, Detection, Detections, SyncConfig};
pub use montecarlo::{monte_carlo_false_alarm, monte_carlo_miss, Estimate};
