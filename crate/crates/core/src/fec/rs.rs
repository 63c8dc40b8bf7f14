//! Systematic RS(255,239) over GF(2⁸).
//!
//! Byte `i` of a codeword is the coefficient of `x^(254-i)`: the 239 payload
//! bytes come first, followed by the 16 check bytes. The generator has the
//! 16 consecutive roots `α^b, α^(b+1), …, α^(b+15)` where `b` is the first
//! consecutive root (0 by default).
//!
//! Decoding is bounded-distance: syndromes, Berlekamp-Massey, Chien search
//! and Forney. A locator whose root count disagrees with its degree is
//! reported as [`Error::DecodeFailure`].

use std::sync::OnceLock;

use super::gf256::{GaloisField, DEFAULT_FIELD_POLY, FIELD_ORDER};
use crate::{Error, Result};

/// Codeword length in bytes.
pub const N: usize = 255;
/// Payload bytes per codeword.
pub const K: usize = 239;
/// Check bytes per codeword.
pub const PARITY: usize = N - K;
/// Correctable byte errors.
pub const T: usize = PARITY / 2;

/// Exponent of the first generator root.
pub const DEFAULT_FIRST_ROOT: u8 = 0;

/// A 255-byte codeword laid out as payload followed by check bytes.
#[derive(Clone, PartialEq, Eq)]
pub struct CodeWord(pub [u8; N]);

impl std::fmt::Debug for CodeWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CodeWord(")?;
        for b in &self.0[K..] {
            write!(f, "{b:02x}")?;
        }
        write!(f, " check)")
    }
}

impl CodeWord {
    pub fn payload(&self) -> &[u8] {
        &self.0[..K]
    }

    pub fn check(&self) -> &[u8] {
        &self.0[K..]
    }

    pub fn as_bytes(&self) -> &[u8; N] {
        &self.0
    }
}

/// Result of a successful decode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decoded {
    pub payload: [u8; K],
    /// Number of byte positions that were changed.
    pub corrected: usize,
}

#[derive(Debug, Clone)]
pub struct RsCodec {
    field: GaloisField,
    first_root: u8,
    // descending: generator[0] is the x^16 coefficient (always 1)
    generator: [u8; PARITY + 1],
}

impl RsCodec {
    pub fn new(field_poly: u16, first_root: u8) -> Result<Self> {
        let field = GaloisField::new(field_poly)?;
        let mut generator = [0u8; PARITY + 1];
        generator[0] = 1;
        // multiply by (x + α^(b+j)) one root at a time
        for j in 0..PARITY {
            let root = field.alpha_pow(first_root as i64 + j as i64);
            for i in (1..=j + 1).rev() {
                generator[i] ^= field.mul(generator[i - 1], root);
            }
        }
        Ok(RsCodec {
            field,
            first_root,
            generator,
        })
    }

    /// Codec with field 0x11D and roots `α⁰..α¹⁵`.
    pub fn standard() -> &'static RsCodec {
        static CODEC: OnceLock<RsCodec> = OnceLock::new();
        CODEC.get_or_init(|| RsCodec::new(DEFAULT_FIELD_POLY, DEFAULT_FIRST_ROOT).expect("default RS parameters"))
    }

    pub fn field(&self) -> &GaloisField {
        &self.field
    }

    pub fn first_root(&self) -> u8 {
        self.first_root
    }

    /// Generator coefficients, highest degree first.
    pub fn generator(&self) -> &[u8; PARITY + 1] {
        &self.generator
    }

    pub fn encode(&self, payload: &[u8]) -> Result<CodeWord> {
        if payload.len() != K {
            return Err(Error::length("RS payload", K, payload.len()));
        }
        let f = &self.field;
        let mut word = [0u8; N];
        word[..K].copy_from_slice(payload);
        // remainder register, rem[0] is the highest-degree coefficient
        let mut rem = [0u8; PARITY];
        for &byte in payload {
            let feedback = byte ^ rem[0];
            rem.copy_within(1.., 0);
            rem[PARITY - 1] = 0;
            if feedback != 0 {
                for (r, &g) in rem.iter_mut().zip(&self.generator[1..]) {
                    *r ^= f.mul(g, feedback);
                }
            }
        }
        word[K..].copy_from_slice(&rem);
        Ok(CodeWord(word))
    }

    /// `S_j = r(α^(b+j))` for `j = 0..16`.
    pub fn syndromes(&self, received: &[u8; N]) -> [u8; PARITY] {
        let f = &self.field;
        let mut out = [0u8; PARITY];
        for (j, s) in out.iter_mut().enumerate() {
            let x = f.alpha_pow(self.first_root as i64 + j as i64);
            *s = received.iter().fold(0u8, |acc, &c| f.mul(acc, x) ^ c);
        }
        out
    }

    pub fn decode(&self, received: &[u8]) -> Result<Decoded> {
        let received: &[u8; N] = received
            .try_into()
            .map_err(|_| Error::length("RS codeword", N, received.len()))?;
        let mut word = *received;
        let synd = self.syndromes(&word);
        if synd.iter().all(|&s| s == 0) {
            return Ok(Decoded {
                payload: word[..K].try_into().unwrap(),
                corrected: 0,
            });
        }

        let locator = self.berlekamp_massey(&synd);
        let degree = locator.len() - 1;
        if degree > T {
            return Err(Error::DecodeFailure);
        }
        let positions = self.chien_search(&locator);
        if positions.len() != degree {
            return Err(Error::DecodeFailure);
        }

        let f = &self.field;
        // Ω(x) = S(x)Λ(x) mod x^16, ascending
        let mut omega = [0u8; PARITY];
        for (i, &l) in locator.iter().enumerate() {
            for j in 0..PARITY - i {
                omega[i + j] ^= f.mul(l, synd[j]);
            }
        }
        for &pos in &positions {
            let power = (N - 1 - pos) as i64;
            let x_inv = f.alpha_pow(-power);
            let num = eval_ascending(f, &omega, x_inv);
            // formal derivative keeps odd-degree terms only
            let mut den = 0u8;
            let mut xp = 1u8;
            let x_inv_sq = f.mul(x_inv, x_inv);
            for k in (1..locator.len()).step_by(2) {
                den ^= f.mul(locator[k], xp);
                xp = f.mul(xp, x_inv_sq);
            }
            if den == 0 {
                return Err(Error::DecodeFailure);
            }
            let scale = f.alpha_pow(power * (1 - self.first_root as i64));
            let magnitude = f.mul(scale, f.div(num, den));
            if magnitude == 0 {
                return Err(Error::DecodeFailure);
            }
            word[pos] ^= magnitude;
        }

        if self.syndromes(&word).iter().any(|&s| s != 0) {
            return Err(Error::DecodeFailure);
        }
        Ok(Decoded {
            payload: word[..K].try_into().unwrap(),
            corrected: positions.len(),
        })
    }

    /// Error locator Λ(x), ascending, trimmed to its true degree.
    fn berlekamp_massey(&self, synd: &[u8; PARITY]) -> Vec<u8> {
        let f = &self.field;
        let mut lambda = vec![0u8; PARITY + 1];
        let mut prev = vec![0u8; PARITY + 1];
        lambda[0] = 1;
        prev[0] = 1;
        let mut len = 0usize;
        let mut shift = 1usize;
        let mut prev_disc = 1u8;

        for n in 0..PARITY {
            let mut disc = synd[n];
            for i in 1..=len {
                disc ^= f.mul(lambda[i], synd[n - i]);
            }
            if disc == 0 {
                shift += 1;
                continue;
            }
            let coef = f.div(disc, prev_disc);
            let snapshot = lambda.clone();
            for i in 0..=PARITY - shift {
                lambda[i + shift] ^= f.mul(coef, prev[i]);
            }
            if 2 * len <= n {
                len = n + 1 - len;
                prev = snapshot;
                prev_disc = disc;
                shift = 1;
            } else {
                shift += 1;
            }
        }
        let degree = lambda.iter().rposition(|&c| c != 0).unwrap_or(0);
        lambda.truncate(degree + 1);
        lambda
    }

    /// Codeword indices `i` whose locator `X = α^(254-i)` satisfies Λ(X⁻¹) = 0.
    fn chien_search(&self, locator: &[u8]) -> Vec<usize> {
        let f = &self.field;
        (0..N)
            .filter(|&pos| {
                let power = (N - 1 - pos) as i64;
                eval_ascending(f, locator, f.alpha_pow(-power)) == 0
            })
            .collect()
    }
}

fn eval_ascending(f: &GaloisField, poly: &[u8], x: u8) -> u8 {
    poly.iter().rev().fold(0u8, |acc, &c| f.mul(acc, x) ^ c)
}

/// Encodes with the standard codec.
pub fn rs_encode(payload: &[u8]) -> Result<CodeWord> {
    RsCodec::standard().encode(payload)
}

/// Decodes with the standard codec.
pub fn rs_decode(received: &[u8]) -> Result<Decoded> {
    RsCodec::standard().decode(received)
}

const _: () = assert!(FIELD_ORDER == N);
