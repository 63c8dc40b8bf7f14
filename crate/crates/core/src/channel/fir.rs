use crate::linecoding::SymbolStream;
use crate::{Error, Result};

/// Three-tap multipath preset with two weak echoes. Illustrative only, not
/// a measured channel.
pub const DEFAULT_MULTIPATH_TAPS: [f64; 3] = [1.0, 0.18, 0.08];

pub(crate) fn validate_taps(taps: &[f64]) -> Result<()> {
    match taps.first() {
        None => Err(Error::config("FIR taps must be nonempty")),
        Some(&0.0) => Err(Error::config("first FIR tap must be nonzero")),
        _ if taps.iter().any(|t| !t.is_finite()) => Err(Error::config("FIR taps must be finite")),
        _ => Ok(()),
    }
}

/// Causal convolution at symbol rate, truncated to the input length.
pub fn fir(symbols: &[f64], taps: &[f64]) -> SymbolStream {
    let out = (0..symbols.len())
        .map(|n| {
            taps.iter()
                .enumerate()
                .take(n + 1)
                .map(|(k, &h)| h * symbols[n - k])
                .sum()
        })
        .collect();
    SymbolStream::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::stream_rng;
    use proptest::prelude::*;
    use rand::Rng;

    #[test]
    fn identity_and_impulse() {
        let x = [0.3, -1.0, 2.0];
        assert_eq!(&*fir(&x, &[1.0]), &x);
        assert_eq!(&*fir(&[1.0, 0.0, 0.0, 0.0], &[1.0, 0.5]), &[1.0, 0.5, 0.0, 0.0]);
    }

    #[test]
    fn matches_direct_sum() {
        let mut rng = stream_rng(7, 0);
        let x: Vec<f64> = (0..500)
            .map(|_| if rng.random_bool(0.5) { 1.0 } else { -1.0 })
            .collect();
        let h = [0.9, 0.3, 0.1];
        let y = fir(&x, &h);
        for n in 0..x.len() {
            let mut acc = 0.0;
            for k in 0..h.len() {
                if n >= k {
                    acc += h[k] * x[n - k];
                }
            }
            assert!((y[n] - acc).abs() < 1e-12);
        }
    }

    proptest! {
        #[test]
        fn linear(
            x in proptest::collection::vec(-1.0f64..1.0, 64),
            y in proptest::collection::vec(-1.0f64..1.0, 64),
            a in -3.0f64..3.0,
            b in -3.0f64..3.0,
        ) {
            let h = DEFAULT_MULTIPATH_TAPS;
            let mix: Vec<f64> = x.iter().zip(&y).map(|(p, q)| a * p + b * q).collect();
            let lhs = fir(&mix, &h);
            let (fx, fy) = (fir(&x, &h), fir(&y, &h));
            for i in 0..64 {
                prop_assert!((lhs[i] - (a * fx[i] + b * fy[i])).abs() < 1e-9);
            }
        }
    }
}
