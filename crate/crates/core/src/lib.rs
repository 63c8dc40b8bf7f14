//! Bit-exact baseband simulator for a single-carrier DBPSK near-gigabit
//! wireless link.
//!
//! The transmit chain is: payload → RS(255,239) → scrambler → frame
//! (preamble | codeword | dummy) → serializer → differential encoder → BPSK.
//! The receive chain mirrors it with a delay-product differential detector,
//! a dual correlator-bank frame synchronizer, descrambler and RS decoder.
//!
//! Module map:
//!
//! - [`fec`]: GF(2⁸) arithmetic and the RS(255,239) codec.
//! - [`linecoding`]: PN sequences, scrambling, bit packing, differential
//!   coding, BPSK mapping and delay-product demodulation.
//! - [`framing`]: frame build/parse, dummy-byte minimax search, clock plan
//!   and dual-clock FIFO model.
//! - [`sync`]: correlator banks, frame detection and the analytic
//!   miss/false-alarm kernels.
//! - [`channel`]: BSC, AWGN, multipath FIR and the Friis link budget.
//! - [`harness`]: end-to-end link runs, sync campaigns and CSV output.

pub mod channel;
pub mod error;
pub mod fec;
pub mod framing;
pub mod harness;
pub mod linecoding;
pub mod sync;

pub use error::{Error, Result};
