//! Forward error correction: GF(2⁸) arithmetic and the RS(255,239) codec.

pub mod gf256;
pub mod rs;

pub use gf256::{gf_mul, FieldElement, GaloisField, DEFAULT_FIELD_POLY};
pub use rs::{rs_decode, rs_encode, CodeWord, Decoded, RsCodec, K, N, PARITY, T};
