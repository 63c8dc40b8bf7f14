//! Line coding: bit packing, PN sequences, scrambling, differential coding,
//! BPSK mapping and delay-product differential demodulation.
//!
//! Everything here works at symbol rate with one bit per symbol.

pub mod bits;
pub mod modem;
pub mod pn;
pub mod scrambler;

pub use bits::{deserialize_bits, serialize_bytes, BitVector};
pub use modem::{bpsk_map, diff_demod, diff_encode, SymbolStream, SYMBOL_DURATION_S};
pub use pn::{PadRule, PnSequence};
pub use scrambler::{max_sliding_agreement, scramble, select_scrambler_phase, ScramblerChoice};
