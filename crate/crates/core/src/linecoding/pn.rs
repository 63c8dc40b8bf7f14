//! Pseudo-noise sequences from a Fibonacci LFSR.
//!
//! A polynomial `x^m + … + 1` given by its exponent set defines the
//! recurrence `a[n+m] = XOR of a[n+e]` over the exponents `e < m`. The seed
//! supplies `a[0..m]`, most significant bit first. For a primitive
//! polynomial the output is an m-sequence of period `2^m − 1`; one pad bit
//! rounds the 31-bit sequence of the default generator to a 32-bit word.

use serde::{Deserialize, Serialize};

use super::bits::{pack_word, BitVector};
use crate::{Error, Result};

/// Where the extra bit goes and what value it takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PadRule {
    Append(u8),
    Prepend(u8),
    None,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PnSequence {
    /// Exponents of the feedback polynomial, including the degree and 0.
    pub taps: Vec<u32>,
    /// Initial register contents `a[0..m]`, MSB = `a[0]`.
    pub seed: u32,
    /// Number of LFSR output bits before padding.
    pub length: usize,
    pub pad_rule: PadRule,
}

impl Default for PnSequence {
    /// `x⁵+x²+1`, seed `10000`, 31 bits plus a trailing 0.
    fn default() -> Self {
        PnSequence {
            taps: vec![5, 2, 0],
            seed: 0b10000,
            length: 31,
            pad_rule: PadRule::Append(0),
        }
    }
}

impl PnSequence {
    pub fn degree(&self) -> u32 {
        self.taps.iter().copied().max().unwrap_or(0)
    }

    pub fn validate(&self) -> Result<()> {
        let m = self.degree();
        if m == 0 || m > 31 {
            return Err(Error::config(format!("LFSR degree {m} out of range 1..=31")));
        }
        if !self.taps.contains(&0) {
            return Err(Error::config("LFSR polynomial must have a constant term"));
        }
        if self.seed == 0 {
            return Err(Error::config("LFSR seed must be nonzero"));
        }
        if self.seed >> m != 0 {
            return Err(Error::config(format!(
                "LFSR seed {:#b} wider than degree {m}",
                self.seed
            )));
        }
        if let PadRule::Append(b) | PadRule::Prepend(b) = self.pad_rule {
            if b > 1 {
                return Err(Error::config("pad bit must be 0 or 1"));
            }
        }
        Ok(())
    }

    /// Raw LFSR output `a[0..n]`.
    pub fn lfsr_bits(&self, n: usize) -> Result<Vec<u8>> {
        self.validate()?;
        let m = self.degree() as usize;
        let feedback: Vec<usize> = self
            .taps
            .iter()
            .filter(|&&e| (e as usize) < m)
            .map(|&e| e as usize)
            .collect();
        let mut a: Vec<u8> = (0..m).rev().map(|i| ((self.seed >> i) & 1) as u8).collect();
        while a.len() < n {
            let base = a.len() - m;
            let next = feedback.iter().fold(0u8, |acc, &e| acc ^ a[base + e]);
            a.push(next);
        }
        a.truncate(n);
        Ok(a)
    }

    /// Smallest `P` such that the output repeats with period `P`
    /// (searched up to `2^m − 1`).
    pub fn period(&self) -> Result<usize> {
        let max = (1usize << self.degree()) - 1;
        let a = self.lfsr_bits(2 * max + self.degree() as usize)?;
        Ok((1..=max)
            .find(|&p| (0..max + self.degree() as usize).all(|i| a[i] == a[i + p]))
            .unwrap_or(max))
    }

    /// `length` output bits starting at phase `shift`, padded per the rule.
    pub fn phase(&self, shift: usize) -> Result<BitVector> {
        let raw = self.lfsr_bits(shift + self.length)?;
        let mut out = BitVector::with_capacity(self.length + 1);
        if let PadRule::Prepend(b) = self.pad_rule {
            out.push(b);
        }
        out.extend_from_bits(&raw[shift..]);
        if let PadRule::Append(b) = self.pad_rule {
            out.push(b);
        }
        Ok(out)
    }

    pub fn generate(&self) -> Result<BitVector> {
        self.phase(0)
    }

    /// The padded sequence at `shift` as a 32-bit word (MSB first).
    pub fn word(&self, shift: usize) -> Result<u32> {
        let bits = self.phase(shift)?;
        if bits.len() != 32 {
            return Err(Error::length("padded PN sequence", 32, bits.len()));
        }
        Ok(pack_word(&bits) as u32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_is_maximal_length() {
        let pn = PnSequence::default();
        assert_eq!(pn.period().unwrap(), 31);
        let bits = pn.lfsr_bits(31).unwrap();
        // m-sequence balance: 16 ones, 15 zeros
        assert_eq!(bits.iter().filter(|&&b| b == 1).count(), 16);
    }

    #[test]
    fn default_preamble_word() {
        let pn = PnSequence::default();
        let bits = pn.generate().unwrap();
        assert_eq!(bits.len(), 32);
        assert_eq!(bits[31], 0);
        assert_eq!(pn.word(0).unwrap(), 0x84b3_e374);
    }

    #[test]
    fn recurrence_holds() {
        let a = PnSequence::default().lfsr_bits(100).unwrap();
        assert_eq!(&a[..5], &[1, 0, 0, 0, 0]);
        for n in 0..95 {
            assert_eq!(a[n + 5], a[n + 2] ^ a[n]);
        }
    }

    #[test]
    fn phases_are_cyclic_shifts() {
        let pn = PnSequence::default();
        let base = pn.lfsr_bits(31).unwrap();
        for s in 0..31 {
            let ph = pn.phase(s).unwrap();
            for i in 0..31 {
                assert_eq!(ph[i], base[(i + s) % 31]);
            }
        }
    }

    #[test]
    fn zero_seed_is_rejected() {
        let pn = PnSequence {
            seed: 0,
            ..PnSequence::default()
        };
        assert!(pn.validate().is_err());
        let pn = PnSequence {
            seed: 0b100000,
            ..PnSequence::default()
        };
        assert!(pn.validate().is_err());
    }

    #[test]
    fn pad_rules() {
        let mut pn = PnSequence {
            pad_rule: PadRule::Prepend(1),
            ..PnSequence::default()
        };
        let bits = pn.generate().unwrap();
        assert_eq!(bits[0], 1);
        assert_eq!(&bits[1..], &pn.lfsr_bits(31).unwrap()[..]);
        pn.pad_rule = PadRule::None;
        assert_eq!(pn.generate().unwrap().len(), 31);
        assert!(pn.word(0).is_err());
    }

    #[test]
    fn non_primitive_polynomial_has_short_period() {
        // x⁴+x²+1 = (x²+x+1)² is not primitive
        let pn = PnSequence {
            taps: vec![4, 2, 0],
            seed: 0b1000,
            length: 15,
            pad_rule: PadRule::None,
        };
        assert!(pn.period().unwrap() < 15);
    }
}
