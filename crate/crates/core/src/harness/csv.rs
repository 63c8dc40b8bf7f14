//! CSV output.
//!
//! Floats are written with Rust's shortest round-trip formatting, which never
//! uses an exponent, so every value parses back bit for bit. Absent values
//! are empty fields.

use std::io::Write;
use std::path::Path;

use crate::framing::{Checkpoint, DummyCandidate};
use crate::{Error, Result};

use super::campaign::SyncRow;
use super::link::{BerPoint, BerReport};

pub trait CsvRecord {
    fn header() -> &'static [&'static str];
    fn record(&self) -> Vec<String>;
}

fn opt(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

impl CsvRecord for BerPoint {
    fn header() -> &'static [&'static str] {
        &[
            "channel",
            "p",
            "ebn0_db",
            "coding",
            "frames_tx",
            "bits_tx",
            "raw_bit_errors",
            "raw_ber",
            "bit_errors",
            "ber",
            "frame_errors",
            "fer",
            "sync_misses",
            "false_alarms",
            "corrected_bytes_total",
            "decode_failures",
            "miscorrections",
        ]
    }

    fn record(&self) -> Vec<String> {
        vec![
            self.channel.name().to_string(),
            opt(self.channel.p()),
            opt(self.channel.ebn0_db()),
            if self.coding { "on" } else { "off" }.to_string(),
            self.frames_tx.to_string(),
            self.bits_tx.to_string(),
            self.raw_bit_errors.to_string(),
            self.raw_ber().to_string(),
            self.bit_errors.to_string(),
            self.ber().to_string(),
            self.frame_errors.to_string(),
            self.fer().to_string(),
            self.sync_misses.to_string(),
            self.false_alarms.to_string(),
            self.corrected_bytes_total.to_string(),
            self.decode_failures.to_string(),
            self.miscorrections.to_string(),
        ]
    }
}

impl CsvRecord for SyncRow {
    fn header() -> &'static [&'static str] {
        &[
            "metric",
            "gamma",
            "p",
            "banks",
            "analytic",
            "empirical",
            "events",
            "trials",
            "stderr",
            "frame_bound",
        ]
    }

    fn record(&self) -> Vec<String> {
        vec![
            self.metric.name().to_string(),
            self.gamma.to_string(),
            opt(self.p),
            self.banks.to_string(),
            self.analytic.to_string(),
            self.empirical.rate().to_string(),
            self.empirical.events.to_string(),
            self.empirical.trials.to_string(),
            self.empirical.stderr().to_string(),
            opt(self.frame_bound),
        ]
    }
}

impl CsvRecord for DummyCandidate {
    fn header() -> &'static [&'static str] {
        &["k", "d", "mcor", "c1", "c2", "c3", "c4", "c5", "c6", "c7", "c8"]
    }

    fn record(&self) -> Vec<String> {
        let mut r = vec![self.k.to_string(), self.d.to_string(), self.mcor.to_string()];
        r.extend(self.correlations.iter().map(u32::to_string));
        r
    }
}

impl CsvRecord for Checkpoint {
    fn header() -> &'static [&'static str] {
        &["tick", "occupancy", "writes", "reads"]
    }

    fn record(&self) -> Vec<String> {
        vec![
            self.tick.to_string(),
            self.occupancy.to_string(),
            self.writes.to_string(),
            self.reads.to_string(),
        ]
    }
}

pub fn write_csv<T: CsvRecord, W: Write>(rows: &[T], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(T::header())?;
    for r in rows {
        w.write_record(r.record())?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn csv_string<T: CsvRecord>(rows: &[T]) -> Result<String> {
    let mut buf = Vec::new();
    write_csv(rows, &mut buf)?;
    Ok(String::from_utf8(buf).expect("csv output is utf-8"))
}

/// Writes `rows` to `destination`, naming the path in any I/O error.
pub fn emit_csv<T: CsvRecord>(rows: &[T], destination: &Path) -> Result<()> {
    let text = csv_string(rows)?;
    std::fs::write(destination, text).map_err(|source| Error::Write {
        path: destination.to_path_buf(),
        source,
    })
}

pub fn ber_csv(report: &BerReport) -> Result<String> {
    csv_string(&report.points)
}
