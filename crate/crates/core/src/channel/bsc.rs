use rand::Rng;

use crate::linecoding::BitVector;

/// Flips each bit independently with probability `p`.
pub fn bsc<R: Rng>(bits: &[u8], p: f64, rng: &mut R) -> BitVector {
    let mut out = BitVector::from_bits(bits.iter().copied());
    flip_in_place(&mut out, p, rng);
    out
}

pub(crate) fn flip_in_place<R: Rng>(bits: &mut [u8], p: f64, rng: &mut R) {
    if p <= 0.0 {
        return;
    }
    for b in bits.iter_mut() {
        if rng.random_bool(p) {
            *b ^= 1;
        }
    }
}

/// Error pattern over `width` bits, set bits mark flips.
pub fn bsc_mask<R: Rng>(rng: &mut R, p: f64, width: u32) -> u64 {
    if p <= 0.0 {
        return 0;
    }
    (0..width).fold(0u64, |m, i| m | ((rng.random_bool(p) as u64) << i))
}
