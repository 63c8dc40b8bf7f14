//! End-to-end link runs.
//!
//! Each frame is sent as `j` random lead-in bits (`j` uniform in 0..8), the
//! frame itself, the next frame's preamble (for the second correlator bank)
//! and 7 random tail bits. The receiver sees only the demodulated stream and
//! must find the frame on its own.
//!
//! Raw (pre-FEC) errors are always measured at the true frame position, so
//! the uncoded number is a pure modem statistic. The scored errors follow
//! what the receiver actually delivers: the decoded payload, the raw
//! systematic bytes when decoding fails, or, for a frame that was not
//! acquired at its true position, half the payload bits.

use std::time::{Duration, Instant};

use rand::Rng;
use rayon::prelude::*;

use crate::channel::{derive_seed, stream_rng, ChannelConfig};
use crate::fec::K;
use crate::framing::{build_frame, descramble_codeword, FrameConfig, FRAME_BITS};
use crate::linecoding::bits::{deserialize_bits, serialize_bytes};
use crate::linecoding::{bpsk_map, diff_demod, diff_encode};
use crate::sync::{detect_frame, SyncConfig};
use crate::{Error, Result};

use super::config::RunConfig;

/// Payload bits per frame.
pub const PAYLOAD_BITS: u64 = (K * 8) as u64;
/// Errors charged for a frame the receiver never locked onto.
pub const LOST_FRAME_ERRORS: u64 = PAYLOAD_BITS / 2;

const TAIL_BITS: usize = 7;

/// What happened to one frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FrameOutcome {
    /// Lead-in length, i.e. the true frame start.
    pub offset: usize,
    pub detected_at: Option<usize>,
    /// Payload Hamming distance before correction, at the true position.
    pub raw_errors: u64,
    /// Payload bit errors in what the receiver delivered.
    pub errors: u64,
    pub corrected: u64,
    pub decode_failure: bool,
    /// Decoder reported success but the payload is wrong.
    pub miscorrection: bool,
}

impl FrameOutcome {
    pub fn synced(&self) -> bool {
        self.detected_at == Some(self.offset)
    }

    pub fn false_alarm(&self) -> bool {
        self.detected_at.is_some_and(|d| d != self.offset)
    }

    pub fn frame_error(&self) -> bool {
        !self.synced() || self.errors > 0
    }
}

/// Counters for one operating point.
#[derive(Debug, Clone, PartialEq)]
pub struct BerPoint {
    pub channel: ChannelConfig,
    pub coding: bool,
    pub frames_tx: u64,
    pub bits_tx: u64,
    pub raw_bit_errors: u64,
    /// Σ raw_errors² over frames, for batch variance estimates.
    pub raw_bit_errors_sq: u64,
    pub bit_errors: u64,
    pub frame_errors: u64,
    /// Frames not acquired at their true position (includes false alarms).
    pub sync_misses: u64,
    /// Frames whose first detection was at a wrong position.
    pub false_alarms: u64,
    pub corrected_bytes_total: u64,
    pub decode_failures: u64,
    pub miscorrections: u64,
    /// Not part of the CSV output.
    pub wall_time: Duration,
}

impl BerPoint {
    pub fn ber(&self) -> f64 {
        ratio(self.bit_errors, self.bits_tx)
    }

    pub fn raw_ber(&self) -> f64 {
        ratio(self.raw_bit_errors, self.bits_tx)
    }

    pub fn fer(&self) -> f64 {
        ratio(self.frame_errors, self.frames_tx)
    }

    /// Standard error of `raw_ber` from the spread of per-frame counts.
    pub fn raw_ber_stderr(&self) -> f64 {
        let n = self.frames_tx as f64;
        if self.frames_tx < 2 {
            return 0.0;
        }
        let mean = self.raw_bit_errors as f64 / n;
        let var = (self.raw_bit_errors_sq as f64 / n - mean * mean).max(0.0) * n / (n - 1.0);
        (var / n).sqrt() / PAYLOAD_BITS as f64
    }
}

fn ratio(a: u64, b: u64) -> f64 {
    if b == 0 {
        0.0
    } else {
        a as f64 / b as f64
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct BerReport {
    pub points: Vec<BerPoint>,
}

#[derive(Debug, Clone, Copy, Default)]
struct Tally {
    frames: u64,
    raw: u64,
    raw_sq: u64,
    errors: u64,
    frame_errors: u64,
    misses: u64,
    false_alarms: u64,
    corrected: u64,
    failures: u64,
    miscorrections: u64,
}

impl Tally {
    fn of(o: &FrameOutcome) -> Self {
        Tally {
            frames: 1,
            raw: o.raw_errors,
            raw_sq: o.raw_errors * o.raw_errors,
            errors: o.errors,
            frame_errors: o.frame_error() as u64,
            misses: !o.synced() as u64,
            false_alarms: o.false_alarm() as u64,
            corrected: o.corrected,
            failures: o.decode_failure as u64,
            miscorrections: o.miscorrection as u64,
        }
    }

    fn merge(self, o: Tally) -> Tally {
        Tally {
            frames: self.frames + o.frames,
            raw: self.raw + o.raw,
            raw_sq: self.raw_sq + o.raw_sq,
            errors: self.errors + o.errors,
            frame_errors: self.frame_errors + o.frame_errors,
            misses: self.misses + o.misses,
            false_alarms: self.false_alarms + o.false_alarms,
            corrected: self.corrected + o.corrected,
            failures: self.failures + o.failures,
            miscorrections: self.miscorrections + o.miscorrections,
        }
    }
}

fn hamming(a: &[u8], b: &[u8]) -> u64 {
    a.iter().zip(b).map(|(x, y)| (x ^ y).count_ones() as u64).sum()
}

/// Runs frame `index` of an operating point seeded with `point_seed`.
pub fn simulate_frame(
    frame_cfg: &FrameConfig,
    channel: &ChannelConfig,
    sync: &SyncConfig,
    coding: bool,
    point_seed: u64,
    index: u64,
) -> Result<FrameOutcome> {
    let mut rng = stream_rng(point_seed, index);
    let offset = rng.random_range(0..8usize);
    let mut payload = [0u8; K];
    rng.fill(&mut payload[..]);
    let frame = build_frame(&payload, frame_cfg)?;

    let mut tx: Vec<u8> = Vec::with_capacity(offset + FRAME_BITS + 32 + TAIL_BITS);
    tx.extend((0..offset).map(|_| rng.random_range(0..2u8)));
    tx.extend_from_slice(&serialize_bytes(frame.as_bytes()));
    tx.extend_from_slice(&serialize_bytes(&frame_cfg.preamble));
    tx.extend((0..TAIL_BITS).map(|_| rng.random_range(0..2u8)));

    let mut symbols = bpsk_map(&diff_encode(&tx, 0));
    channel.apply_symbols(&mut symbols, &mut rng);
    let mut rx = diff_demod(&symbols, 1.0).into_inner();
    channel.apply_bits(&mut rx, &mut rng);

    let aligned = |start: usize| deserialize_bits(&rx[start..start + FRAME_BITS]);
    let genie = descramble_codeword(&aligned(offset)?, frame_cfg)?;
    let raw_errors = hamming(&genie[..K], &payload);

    let detected_at = detect_frame(&rx, frame_cfg.preamble_word(), sync).map(|d| d.frame_start);
    let mut out = FrameOutcome {
        offset,
        detected_at,
        raw_errors,
        ..FrameOutcome::default()
    };
    if !out.synced() {
        out.errors = LOST_FRAME_ERRORS;
        return Ok(out);
    }
    // The detected position equals the true one, so the genie bytes are
    // exactly what the byte aligner would hand over.
    if !coding {
        out.errors = raw_errors;
        return Ok(out);
    }
    match frame_cfg.codec.decode(&genie) {
        Ok(d) => {
            out.errors = hamming(&d.payload, &payload);
            out.corrected = d.corrected as u64;
            out.miscorrection = out.errors > 0;
        }
        Err(Error::DecodeFailure) => {
            out.errors = raw_errors;
            out.decode_failure = true;
        }
        Err(e) => return Err(e),
    }
    Ok(out)
}

/// Runs every operating point of `config` on the current rayon pool.
pub fn run_link(config: &RunConfig) -> Result<BerReport> {
    config.validate()?;
    let frame_cfg = FrameConfig::standard();
    let mut points = Vec::new();
    for (i, channel) in config.points().into_iter().enumerate() {
        let start = Instant::now();
        let point_seed = derive_seed(config.seed, i as u64);
        let tally = (0..config.frames)
            .into_par_iter()
            .map(|f| {
                simulate_frame(frame_cfg, &channel, &config.sync, config.coding, point_seed, f).map(|o| Tally::of(&o))
            })
            .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))?;
        points.push(BerPoint {
            channel,
            coding: config.coding,
            frames_tx: tally.frames,
            bits_tx: tally.frames * PAYLOAD_BITS,
            raw_bit_errors: tally.raw,
            raw_bit_errors_sq: tally.raw_sq,
            bit_errors: tally.errors,
            frame_errors: tally.frame_errors,
            sync_misses: tally.misses,
            false_alarms: tally.false_alarms,
            corrected_bytes_total: tally.corrected,
            decode_failures: tally.failures,
            miscorrections: tally.miscorrections,
            wall_time: start.elapsed(),
        });
    }
    Ok(BerReport { points })
}

/// [`run_link`] on a dedicated pool of `threads` workers.
pub fn run_link_with_threads(config: &RunConfig, threads: usize) -> Result<BerReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::config(format!("thread pool: {e}")))?;
    pool.install(|| run_link(config))
}
