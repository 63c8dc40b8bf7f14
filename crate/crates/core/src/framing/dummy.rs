//! Minimax search for the dummy byte that precedes the next preamble.
//!
//! On the wire the dummy byte `d(1)…d(8)` is followed directly by the
//! preamble `P(1)…P(32)`. For a bit shift `i` in 1..=8 the window
//! `T_i = [d(9−i)…d(8) P(1)…P(32−i)]` is what a correlator sees `i` bits
//! early. Each candidate is scored by the largest agreement between `P` and
//! any `T_i`; the winning candidate minimizes that maximum.
//!
//! Candidates are indexed by `k = Σ 2^(j−1)·d(j)`, so `d(1)` is the least
//! significant bit of `k`. Because `d(1)` is transmitted first and bytes are
//! serialized MSB-first, the on-air byte is `k` with its bits reversed.

/// Scores for one candidate dummy byte.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DummyCandidate {
    pub k: u8,
    /// On-air byte value (MSB transmitted first).
    pub d: u8,
    /// Agreement of `P` with `T_i` for `i = 1..=8`.
    pub correlations: [u32; 8],
    /// `max_i correlations`.
    pub mcor: u32,
}

impl DummyCandidate {
    fn sorted_desc(&self) -> [u32; 8] {
        let mut c = self.correlations;
        c.sort_unstable_by(|a, b| b.cmp(a));
        c
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DummySearch {
    pub k: u8,
    pub d: u8,
    pub mcor: u32,
    /// All 256 candidates, indexed by `k`.
    pub profile: Vec<DummyCandidate>,
}

impl DummySearch {
    pub fn best(&self) -> &DummyCandidate {
        &self.profile[self.k as usize]
    }
}

/// On-air byte for candidate `k`.
pub fn k_to_on_air(k: u8) -> u8 {
    k.reverse_bits()
}

pub fn on_air_to_k(d: u8) -> u8 {
    d.reverse_bits()
}

fn candidate(preamble: u32, k: u8) -> DummyCandidate {
    let d = k_to_on_air(k);
    let stream = ((d as u64) << 32) | preamble as u64;
    let mut correlations = [0u32; 8];
    for (slot, i) in correlations.iter_mut().zip(1..=8) {
        let window = (stream >> i) as u32;
        *slot = 32 - (window ^ preamble).count_ones();
    }
    DummyCandidate {
        k,
        d,
        correlations,
        mcor: *correlations.iter().max().unwrap(),
    }
}

/// Ranks all 256 candidates: lowest `mcor`, then the lexicographically
/// smallest descending-sorted profile, then smallest `k`.
pub fn search_dummy_byte(preamble: u32) -> DummySearch {
    let profile: Vec<DummyCandidate> = (0..=255u8).map(|k| candidate(preamble, k)).collect();
    let best = profile
        .iter()
        .min_by(|a, b| {
            a.mcor
                .cmp(&b.mcor)
                .then_with(|| a.sorted_desc().cmp(&b.sorted_desc()))
                .then_with(|| a.k.cmp(&b.k))
        })
        .copied()
        .unwrap();
    DummySearch {
        k: best.k,
        d: best.d,
        mcor: best.mcor,
        profile,
    }
}
