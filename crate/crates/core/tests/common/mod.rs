//! Test-side oracles that share no code with the library's closed forms.
#![allow(dead_code)]

/// Gaussian density with mean `mu` and deviation `sigma`.
fn normal_pdf(x: f64, mu: f64, sigma: f64) -> f64 {
    let z = (x - mu) / sigma;
    (-0.5 * z * z).exp() / (sigma * (2.0 * std::f64::consts::PI).sqrt())
}

/// Composite Simpson weights on `[a, b]` with `panels` (even) intervals.
fn simpson_nodes(a: f64, b: f64, panels: usize) -> Vec<(f64, f64)> {
    assert!(panels.is_multiple_of(2));
    let h = (b - a) / panels as f64;
    (0..=panels)
        .map(|i| {
            let w = if i == 0 || i == panels {
                1.0
            } else if i % 2 == 1 {
                4.0
            } else {
                2.0
            };
            (a + i as f64 * h, w * h / 3.0)
        })
        .collect()
}

/// ∬ over the rectangle `[x0, x1] × [y0, y1]` of the product density of two
/// independent received samples with means `mx`, `my`.
fn rect_mass(x: (f64, f64), y: (f64, f64), mx: f64, my: f64, sigma: f64, panels: usize) -> f64 {
    if x.0 >= x.1 || y.0 >= y.1 {
        return 0.0;
    }
    let xs = simpson_nodes(x.0, x.1, panels);
    let ys = simpson_nodes(y.0, y.1, panels);
    let mut total = 0.0;
    for &(xv, wx) in &xs {
        let fx = normal_pdf(xv, mx, sigma);
        for &(yv, wy) in &ys {
            total += wx * wy * fx * normal_pdf(yv, my, sigma);
        }
    }
    total
}

/// Bit error probability of the delay-product detector at `ebn0_db`, by
/// direct 2-D numerical integration of the decision regions.
///
/// Consecutive symbols `r₁ = s₁ + n₁`, `r₂ = s₂ + n₂` with unit amplitude
/// and `σ² = N0/2Eb`. Without a phase transition an error is `r₁r₂ < 0`,
/// with one it is `r₁r₂ > 0`; both cases are integrated and averaged.
pub fn dbpsk_ber_quadrature(ebn0_db: f64) -> f64 {
    let sigma = (1.0 / (2.0 * 10f64.powf(ebn0_db / 10.0))).sqrt();
    let span = 14.0 * sigma;
    let panels = 1200;
    let lo = |m: f64| m - span;
    let hi = |m: f64| m + span;
    // mass in {x < 0, y > 0} and {x > 0, y < 0}, clipped to ±14σ boxes
    let opposite = |mx: f64, my: f64| {
        rect_mass(
            (lo(mx), hi(mx).min(0.0)),
            (lo(my).max(0.0), hi(my)),
            mx,
            my,
            sigma,
            panels,
        ) + rect_mass(
            (lo(mx).max(0.0), hi(mx)),
            (lo(my), hi(my).min(0.0)),
            mx,
            my,
            sigma,
            panels,
        )
    };
    let same = |mx: f64, my: f64| {
        rect_mass(
            (lo(mx).max(0.0), hi(mx)),
            (lo(my).max(0.0), hi(my)),
            mx,
            my,
            sigma,
            panels,
        ) + rect_mass(
            (lo(mx), hi(mx).min(0.0)),
            (lo(my), hi(my).min(0.0)),
            mx,
            my,
            sigma,
            panels,
        )
    };
    let no_transition = opposite(1.0, 1.0);
    let transition = same(1.0, -1.0);
    0.5 * (no_transition + transition)
}
