//! Dual-clock FIFO between the continuous `f1` byte clock and the gated
//! `f2` frame clock.
//!
//! On the transmit side bytes are written continuously at `f1` and read at
//! `f2` only during the 239 active slots of each 260-slot frame schedule
//! (4 preamble slots before, 17 check/dummy slots after). The receive side
//! mirrors it: gated writes at `f2`, continuous reads at `f1`.
//!
//! Time is exact. With `f1/f2 = a/b` in lowest terms, continuous tick `n`
//! happens at `n·b` and gated tick `m` at `m·a` in units of `1/(a·f2)`.
//! Events landing on the same instant are applied write-then-read and the
//! occupancy envelope is sampled once per instant.

use super::clock::ClockPlan;
use crate::{Error, Result};

/// Cyclic gating pattern of the `f2` clock.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Schedule {
    pub lead_idle: u64,
    pub active: u64,
    pub tail_idle: u64,
}

impl Default for Schedule {
    fn default() -> Self {
        Schedule {
            lead_idle: 4,
            active: 239,
            tail_idle: 17,
        }
    }
}

impl Schedule {
    pub fn all_active() -> Self {
        Schedule {
            lead_idle: 0,
            active: 1,
            tail_idle: 0,
        }
    }

    pub fn period(&self) -> u64 {
        self.lead_idle + self.active + self.tail_idle
    }

    #[inline]
    pub fn is_active(&self, tick: u64) -> bool {
        let slot = tick % self.period();
        slot >= self.lead_idle && slot < self.lead_idle + self.active
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FifoSide {
    /// Continuous writes at `f1`, gated reads at `f2`.
    Transmit,
    /// Gated writes at `f2`, continuous reads at `f1`.
    Receive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FifoModel {
    pub capacity: u64,
    pub start_occupancy: u64,
    pub schedule: Schedule,
    pub side: FifoSide,
}

impl Default for FifoModel {
    fn default() -> Self {
        FifoModel {
            capacity: 2048,
            start_occupancy: 1024,
            schedule: Schedule::default(),
            side: FifoSide::Transmit,
        }
    }
}

/// Occupancy at the end of a schedule period.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Checkpoint {
    /// Gated (`f2`) ticks elapsed.
    pub tick: u64,
    pub occupancy: u64,
    pub writes: u64,
    pub reads: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FifoReport {
    pub min_occupancy: u64,
    pub max_occupancy: u64,
    pub end_occupancy: u64,
    pub overflow: bool,
    pub underflow: bool,
    /// Gated tick of the first read attempted on an empty FIFO.
    pub first_underflow_tick: Option<u64>,
    pub first_overflow_tick: Option<u64>,
    /// Writes that landed / reads that completed.
    pub writes: u64,
    pub reads: u64,
    /// Writes dropped on a full FIFO / reads attempted on an empty one.
    pub dropped_writes: u64,
    pub starved_reads: u64,
    pub trace: Vec<Checkpoint>,
}

impl FifoReport {
    /// Largest distance of the occupancy from its starting value.
    pub fn excursion(&self, start: u64) -> u64 {
        (self.max_occupancy - start.min(self.max_occupancy)).max(start - self.min_occupancy.min(start))
    }
}

/// Runs the FIFO for `duration_ticks` ticks of the gated `f2` clock.
pub fn fifo_simulate(plan: &ClockPlan, fifo: &FifoModel, duration_ticks: u64) -> Result<FifoReport> {
    if fifo.capacity == 0 {
        return Err(Error::config("FIFO capacity must be positive"));
    }
    if fifo.start_occupancy > fifo.capacity {
        return Err(Error::config("start occupancy exceeds capacity"));
    }
    if fifo.schedule.period() == 0 || fifo.schedule.active == 0 {
        return Err(Error::config("schedule must have at least one active slot"));
    }
    let ratio = plan.f1() / plan.f2();
    let (a, b) = (*ratio.numer() as u128, *ratio.denom() as u128);
    let horizon = duration_ticks as u128 * a;
    let period = fifo.schedule.period();

    let mut occ = fifo.start_occupancy;
    let mut report = FifoReport {
        min_occupancy: occ,
        max_occupancy: occ,
        end_occupancy: occ,
        overflow: false,
        underflow: false,
        first_underflow_tick: None,
        first_overflow_tick: None,
        writes: 0,
        reads: 0,
        dropped_writes: 0,
        starved_reads: 0,
        trace: Vec::with_capacity((duration_ticks / period) as usize + 1),
    };

    let (mut n, mut m) = (0u64, 0u64);
    loop {
        let t_cont = n as u128 * b;
        let t_gated = m as u128 * a;
        let now = t_cont.min(t_gated);
        if now >= horizon {
            break;
        }
        let cont = t_cont == now;
        let gated = t_gated == now && fifo.schedule.is_active(m);
        let (write, read) = match fifo.side {
            FifoSide::Transmit => (cont, gated),
            FifoSide::Receive => (gated, cont),
        };
        if write {
            if occ == fifo.capacity {
                report.overflow = true;
                report.dropped_writes += 1;
                report.first_overflow_tick.get_or_insert(m);
            } else {
                occ += 1;
                report.writes += 1;
            }
        }
        if read {
            if occ == 0 {
                report.underflow = true;
                report.starved_reads += 1;
                report.first_underflow_tick.get_or_insert(m);
            } else {
                occ -= 1;
                report.reads += 1;
            }
        }
        report.min_occupancy = report.min_occupancy.min(occ);
        report.max_occupancy = report.max_occupancy.max(occ);

        if t_cont == now {
            n += 1;
        }
        if t_gated == now {
            m += 1;
            if m % period == 0 {
                report.trace.push(Checkpoint {
                    tick: m,
                    occupancy: occ,
                    writes: report.writes,
                    reads: report.reads,
                });
            }
        }
    }
    report.end_occupancy = occ;
    Ok(report)
}
