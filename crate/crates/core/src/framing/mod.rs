//! Frame construction and parsing, dummy-byte search, clock plan and the
//! dual-clock FIFO rate-matching model.

pub mod clock;
pub mod dummy;
pub mod fifo;
pub mod frame;

pub use clock::{format_scaled, throughput, ClockPlan, Hz};
pub use dummy::{search_dummy_byte, DummyCandidate, DummySearch};
pub use fifo::{fifo_simulate, Checkpoint, FifoModel, FifoReport, FifoSide, Schedule};
pub use frame::{
    build_frame, descramble_codeword, parse_frame, Frame, FrameConfig, FRAME_BITS, FRAME_LEN, PREAMBLE_LEN,
    SCRAMBLED_LEN,
};
