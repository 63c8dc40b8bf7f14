//! DBPSK at symbol rate: differential encoder, BPSK mapper and the
//! delay-product detector.

use std::ops::{Deref, DerefMut};

use super::bits::BitVector;

/// Symbol duration of the 875 Mbaud line, in seconds. Metadata only.
pub const SYMBOL_DURATION_S: f64 = 1.14e-9;

/// Real amplitudes, one per symbol, nominal ±1.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SymbolStream {
    pub amplitudes: Vec<f64>,
    pub symbol_duration: f64,
}

impl SymbolStream {
    pub fn new(amplitudes: Vec<f64>) -> Self {
        SymbolStream {
            amplitudes,
            symbol_duration: SYMBOL_DURATION_S,
        }
    }
}

impl Deref for SymbolStream {
    type Target = [f64];
    fn deref(&self) -> &[f64] {
        &self.amplitudes
    }
}

impl DerefMut for SymbolStream {
    fn deref_mut(&mut self) -> &mut [f64] {
        &mut self.amplitudes
    }
}

impl From<Vec<f64>> for SymbolStream {
    fn from(v: Vec<f64>) -> Self {
        SymbolStream::new(v)
    }
}

/// `e[0] = b[0] ^ initial`, `e[k] = b[k] ^ e[k-1]`.
pub fn diff_encode(bits: &[u8], initial: u8) -> BitVector {
    let mut prev = initial & 1;
    bits.iter()
        .map(|&b| {
            prev ^= b & 1;
            prev
        })
        .collect()
}

/// 0 → +1, 1 → −1.
pub fn bpsk_map(bits: &[u8]) -> SymbolStream {
    SymbolStream::new(bits.iter().map(|&b| if b & 1 == 0 { 1.0 } else { -1.0 }).collect())
}

/// Decides 1 wherever consecutive symbols have a negative product.
///
/// `reference` is the amplitude preceding the first symbol (+1 pairs with
/// `diff_encode(.., 0)`). A zero product decodes as 0.
pub fn diff_demod(symbols: &[f64], reference: f64) -> BitVector {
    let mut prev = reference;
    symbols
        .iter()
        .map(|&r| {
            let bit = (r * prev < 0.0) as u8;
            prev = r;
            bit
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn encoder_cases() {
        assert_eq!(&*diff_encode(&[0; 6], 0), &[0; 6]);
        assert_eq!(&*diff_encode(&[1; 6], 0), &[1, 0, 1, 0, 1, 0]);
        assert_eq!(&*diff_encode(&[1, 0, 1, 1, 0], 0), &[1, 1, 0, 1, 1]);
        assert_eq!(&*diff_encode(&[0, 0], 1), &[1, 1]);
    }

    #[test]
    fn mapper_cases() {
        assert_eq!(&*bpsk_map(&[0, 0, 0]), &[1.0, 1.0, 1.0]);
        assert_eq!(&*bpsk_map(&[1, 1]), &[-1.0, -1.0]);
        assert!(bpsk_map(&[]).is_empty());
        assert_eq!(bpsk_map(&[0]).symbol_duration, 1.14e-9);
    }

    #[test]
    fn detector_worked_example() {
        assert_eq!(&*diff_demod(&[-1.0, -1.0, 1.0], 1.0), &[1, 0, 1]);
        assert_eq!(&*diff_demod(&[1.0, -1.0, -1.0, 1.0], 1.0), &[0, 1, 0, 1]);
    }

    #[test]
    fn zero_product_decodes_as_zero() {
        assert_eq!(&*diff_demod(&[0.0, -1.0], 1.0), &[0, 0]);
    }

    #[test]
    fn single_symbol_corruption_flips_at_most_two_bits() {
        let bits: Vec<u8> = (0..200).map(|i| ((i * 7 + i / 3) % 2) as u8).collect();
        let clean = bpsk_map(&diff_encode(&bits, 0));
        for j in 0..clean.len() {
            let mut s = clean.clone();
            s[j] = -s[j];
            let out = diff_demod(&s, 1.0);
            let errors: Vec<usize> = (0..bits.len()).filter(|&i| out[i] != bits[i]).collect();
            let expected: Vec<usize> = if j + 1 < bits.len() { vec![j, j + 1] } else { vec![j] };
            assert_eq!(errors, expected);
        }
    }

    proptest! {
        #[test]
        fn noiseless_chain_is_identity(bits in proptest::collection::vec(0u8..2, 0..500), initial in 0u8..2) {
            let reference = if initial == 0 { 1.0 } else { -1.0 };
            let out = diff_demod(&bpsk_map(&diff_encode(&bits, initial)), reference);
            prop_assert_eq!(&*out, &bits[..]);
        }

        #[test]
        fn tail_sign_flip_changes_one_bit(bits in proptest::collection::vec(0u8..2, 1..300), j in 0usize..300) {
            let j = j % bits.len();
            let mut s = bpsk_map(&diff_encode(&bits, 0));
            for a in &mut s[j..] {
                *a = -*a;
            }
            let out = diff_demod(&s, 1.0);
            for i in 0..bits.len() {
                prop_assert_eq!(out[i] != bits[i], i == j);
            }
        }
    }
}
