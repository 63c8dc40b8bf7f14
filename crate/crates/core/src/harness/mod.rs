//! Campaign drivers: BER/FER link runs, sync statistics and CSV output.

pub mod campaign;
pub mod config;
pub mod csv;
pub mod link;

pub use campaign::{evaluations_per_frame, run_sync_campaign, Metric, SyncRow};
pub use config::{FifoSettings, FileConfig, RunConfig, Side, SyncCampaign};
pub use csv::{ber_csv, csv_string, emit_csv, write_csv, CsvRecord};
pub use link::{
    run_link, run_link_with_threads, simulate_frame, BerPoint, BerReport, FrameOutcome, LOST_FRAME_ERRORS, PAYLOAD_BITS,
};
