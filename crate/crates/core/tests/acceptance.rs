//! Acceptance suite. Runs every criterion at its stated tolerance and prints
//! one PASS/FAIL line per criterion; exits nonzero if any fails.

mod common;

use std::process::Command;
use std::time::Instant;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gigaphy::channel::{
    dbpsk_error_count_variance, link_budget, ChannelConfig, LinkBudgetParams, HORN_GAIN_DBI, PATCH_GAIN_DBI,
};
use gigaphy::fec::{RsCodec, K, N};
use gigaphy::framing::dummy::k_to_on_air;
use gigaphy::framing::{
    fifo_simulate, format_scaled, search_dummy_byte, ClockPlan, FifoModel, FifoSide, FrameConfig, Hz,
};
use gigaphy::harness::{run_link, simulate_frame, RunConfig, PAYLOAD_BITS};
use gigaphy::sync::{monte_carlo_false_alarm, monte_carlo_miss, p_false_alarm_analytic, p_miss_analytic, SyncConfig};
use gigaphy::Error;

type Criterion = (u32, &'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn preamble() -> u32 {
    FrameConfig::standard().preamble_word()
}

fn c1_false_alarm_anchor() -> Outcome {
    let pf1 = p_false_alarm_analytic(28, 1);
    let pf2 = p_false_alarm_analytic(28, 2);
    let exact = pf1 == 41449.0 / 2f64.powi(32);
    let ratio = 1e-5 / pf1;
    let factor_ok = (1.0 / 1.1..=1.1).contains(&ratio);
    let square = pf2 == pf1 * pf1;
    outcome(
        exact && factor_ok && square && (pf2 - 9.31e-11).abs() < 5e-14,
        format!("PF1 = {pf1:.4e} (41449/2^32, 1e-5 ratio {ratio:.3}), PF2 = {pf2:.4e} = PF1^2: {square}"),
    )
}

fn c2_false_alarm_mc() -> Outcome {
    let trials = 100_000_000;
    let mut pass = true;
    let mut parts = Vec::new();
    for (i, gamma) in [18u32, 20, 22].into_iter().enumerate() {
        let e = monte_carlo_false_alarm(preamble(), gamma, 1, trials, 0xfa00 + i as u64);
        let a = p_false_alarm_analytic(gamma, 1);
        let z = (e.rate() - a) / (a * (1.0 - a) / trials as f64).sqrt();
        pass &= z.abs() <= 3.0;
        parts.push(format!("g={gamma}: {:.6e} vs {a:.6e} (z={z:+.2})", e.rate()));
    }
    outcome(pass, format!("{trials} windows each; {}", parts.join(", ")))
}

fn c3_miss_grid() -> Outcome {
    let trials = 200_000;
    let mut pass = true;
    let mut worst = (0.0f64, 0u32, 0.0f64);
    let mut seed = 0x3300;
    for gamma in [26u32, 28, 30, 32] {
        for p in [0.005, 0.01, 0.02] {
            seed += 1;
            let e = monte_carlo_miss(preamble(), p, gamma, 2, trials, seed);
            let a = p_miss_analytic(p, gamma, 2);
            let sigma = (a * (1.0 - a) / trials as f64).sqrt();
            let z = if sigma > 0.0 { (e.rate() - a) / sigma } else { 0.0 };
            if a == 0.0 {
                pass &= e.events == 0;
            }
            pass &= e.within_sigma(a, 3.0);
            if z.abs() >= worst.0.abs() {
                worst = (z, gamma, p);
            }
        }
    }
    outcome(
        pass,
        format!(
            "12 points x {trials} dual-bank trials; largest |z| = {:.2} at g={}, p={}",
            worst.0, worst.1, worst.2
        ),
    )
}

fn c4_rs_guarantee() -> Outcome {
    let codec = RsCodec::standard();
    let mut rng = ChaCha8Rng::seed_from_u64(0x4400);
    let trials = 10_000;
    let corrupt = |rng: &mut ChaCha8Rng, word: &mut [u8; N], e: usize| {
        for pos in sample(rng, N, e) {
            word[pos] ^= rng.random_range(1..=255u8);
        }
    };
    let mut pass = true;
    for e in 1..=8 {
        for _ in 0..trials {
            let mut payload = [0u8; K];
            rng.fill(&mut payload[..]);
            let mut word = codec.encode(&payload).unwrap().0;
            corrupt(&mut rng, &mut word, e);
            match codec.decode(&word) {
                Ok(d) if d.payload == payload && d.corrected == e => {}
                _ => pass = false,
            }
        }
    }
    let (mut failures, mut miscorrections) = (0u32, 0u32);
    for _ in 0..trials {
        let mut payload = [0u8; K];
        rng.fill(&mut payload[..]);
        let mut word = codec.encode(&payload).unwrap().0;
        corrupt(&mut rng, &mut word, 12);
        match codec.decode(&word) {
            Err(Error::DecodeFailure) => failures += 1,
            Ok(d) if d.payload != payload => miscorrections += 1,
            _ => {}
        }
    }
    let rate = failures as f64 / trials as f64;
    outcome(
        pass && rate >= 0.99,
        format!(
            "e=1..8: all {trials} trials exact = {pass}; weight 12: {failures}/{trials} DecodeFailure ({:.2}%), {miscorrections} miscorrections",
            100.0 * rate
        ),
    )
}

fn c5_round_trip() -> Outcome {
    let frames = 10_000;
    let cfg = FrameConfig::standard();
    let sync = SyncConfig::default();
    let mut shifts = [0u32; 8];
    let mut bad = 0;
    for i in 0..frames {
        let o = simulate_frame(cfg, &ChannelConfig::Noiseless, &sync, true, 0x5500, i).unwrap();
        let shift_ok = o.detected_at.map(|d| d % 8) == Some(o.offset);
        if !o.synced() || !shift_ok || o.errors != 0 || o.raw_errors != 0 || o.corrected != 0 {
            bad += 1;
        }
        shifts[o.offset] += 1;
    }
    let report = run_link(&RunConfig {
        channel: ChannelConfig::Noiseless,
        frames,
        seed: 0x5501,
        ..RunConfig::default()
    })
    .unwrap();
    let p = &report.points[0];
    let all_shifts = shifts.iter().all(|&s| s > 0);
    outcome(
        bad == 0 && all_shifts && p.bit_errors == 0 && p.frame_errors == 0 && p.sync_misses == 0,
        format!(
            "{frames} frames, {bad} bad, offsets per shift {shifts:?}; link run ber={} fer={}",
            p.ber(),
            p.fer()
        ),
    )
}

/// Independent enumeration: lay the on-air dummy bits and the preamble bits
/// side by side and slide a 32-bit window over them.
fn dummy_oracle(pre: u32) -> Vec<(u8, u8, [u32; 8])> {
    let pre_bits: Vec<u8> = (0..32).map(|i| ((pre >> (31 - i)) & 1) as u8).collect();
    (0..=255u8)
        .map(|k| {
            // k = Σ 2^(j−1) d(j) and d(1) goes out first
            let d_bits: Vec<u8> = (0..8).map(|j| (k >> j) & 1).collect();
            let d = d_bits.iter().fold(0u8, |acc, &b| (acc << 1) | b);
            let stream: Vec<u8> = d_bits.iter().chain(&pre_bits).copied().collect();
            let mut c = [0u32; 8];
            for i in 1..=8 {
                let window = &stream[8 - i..40 - i];
                c[i - 1] = window.iter().zip(&pre_bits).filter(|(a, b)| a == b).count() as u32;
            }
            (k, d, c)
        })
        .collect()
}

fn c6_dummy_search() -> Outcome {
    let pre = preamble();
    let s = search_dummy_byte(pre);
    let oracle = dummy_oracle(pre);
    let best = oracle
        .iter()
        .min_by_key(|(k, _, c)| {
            let mut sorted = *c;
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            (*c.iter().max().unwrap(), sorted, *k)
        })
        .unwrap();
    let global_min = oracle.iter().map(|(_, _, c)| *c.iter().max().unwrap()).min().unwrap();
    let profile_ok = s
        .profile
        .iter()
        .zip(&oracle)
        .all(|(m, (k, d, c))| m.k == *k && m.d == *d && m.correlations == *c);
    let chosen = (best.0, best.1, *best.2.iter().max().unwrap());
    let k64 = &s.profile[64];
    outcome(
        profile_ok && chosen == (s.k, s.d, s.mcor) && s.mcor == global_min,
        format!(
            "k={} d=0x{:02x} Mcor={} (oracle k={} d=0x{:02x} Mcor={}, global min {global_min}); k=64 (d=0x{:02x}) gives Mcor={} here",
            s.k,
            s.d,
            s.mcor,
            chosen.0,
            chosen.1,
            chosen.2,
            k_to_on_air(64),
            k64.mcor
        ),
    )
}

fn c7_clock_identities() -> Outcome {
    let plan = ClockPlan::default();
    let mhz = |v: Hz| format_scaled(v, 1_000_000, 2);
    let tp = mhz(plan.throughput());
    let exact = plan.throughput() == Hz::new(875_000_000 * 239, 260);
    let (f1, f2) = (mhz(plan.f1()), mhz(plan.f2()));
    outcome(
        exact && tp == "804.33" && f1 == "100.54" && f2 == "109.37",
        format!("throughput {tp} Mbps (875*239/260 exact: {exact}), f1 {f1} MHz, f2 {f2} MHz"),
    )
}

fn c8_fifo() -> Outcome {
    let plan = ClockPlan::default();
    let ticks = 10_000_000;
    let mut pass = true;
    let mut parts = Vec::new();
    for side in [FifoSide::Transmit, FifoSide::Receive] {
        let model = FifoModel {
            side,
            ..FifoModel::default()
        };
        let r = fifo_simulate(&plan, &model, ticks).unwrap();
        let exc = r.excursion(model.start_occupancy);
        pass &= !r.overflow && !r.underflow && exc <= 260;
        parts.push(format!(
            "{side:?}: occupancy {}..{}, excursion {exc}, overflow {}, underflow {}",
            r.min_occupancy, r.max_occupancy, r.overflow, r.underflow
        ));
    }
    outcome(pass, format!("{ticks} ticks; {}", parts.join("; ")))
}

fn c9_link_budget() -> Outcome {
    let at = |g: f64| {
        link_budget(&LinkBudgetParams {
            gtx_dbi: g,
            grx_dbi: g,
            ..LinkBudgetParams::default()
        })
        .unwrap()
    };
    let horn = at(HORN_GAIN_DBI);
    let patch = at(PATCH_GAIN_DBI);
    let diff = horn.prx_dbm - patch.prx_dbm;
    outcome(
        (diff - 28.8).abs() < 1e-9 && (horn.fspl_db - 88.0).abs() <= 0.1,
        format!(
            "horn - patch = {diff:.6} dB, FSPL(10 m, 60 GHz) = {:.4} dB",
            horn.fspl_db
        ),
    )
}

fn c10_modem() -> Outcome {
    let points = [(6.0, 6_000u64), (8.0, 6_000), (10.0, 60_000), (12.0, 600_000)];
    let mut pass = true;
    let mut parts = Vec::new();
    let mut last = f64::INFINITY;
    for (i, &(db, frames)) in points.iter().enumerate() {
        let report = run_link(&RunConfig {
            channel: ChannelConfig::Awgn { ebn0_db: db },
            frames,
            coding: false,
            seed: 0xa000 + i as u64,
            ..RunConfig::default()
        })
        .unwrap();
        let p = &report.points[0];
        let oracle = common::dbpsk_ber_quadrature(db);
        let sigma = (frames as f64 * dbpsk_error_count_variance(db, PAYLOAD_BITS)).sqrt() / p.bits_tx as f64;
        let z = (p.raw_ber() - oracle) / sigma;
        pass &= p.bits_tx >= 10_000_000 && z.abs() <= 3.0 && p.raw_ber() < last;
        last = p.raw_ber();
        parts.push(format!(
            "{db} dB: {:.4e} vs {oracle:.4e} over {:.2e} bits (z={z:+.2})",
            p.raw_ber(),
            p.bits_tx as f64
        ));
    }
    outcome(pass, parts.join("; "))
}

fn c11_determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let bin = env!("CARGO_BIN_EXE_gigaphy");
    let campaigns: [&[&str]; 2] = [
        &[
            "ber",
            "--channel",
            "awgn",
            "--sweep",
            "5,6,7",
            "--frames",
            "600",
            "--seed",
            "11",
        ],
        &[
            "sync-stats",
            "--gammas",
            "20,28",
            "--ps",
            "0,0.01,0.02",
            "--banks",
            "1,2",
            "--miss-trials",
            "100000",
            "--false-alarm-trials",
            "300000",
            "--seed",
            "12",
        ],
    ];
    let mut pass = true;
    let mut parts = Vec::new();
    for args in campaigns {
        let mut outputs = Vec::new();
        for threads in ["1", "4"] {
            let path = dir.path().join(format!("{}-{threads}.csv", args[0]));
            let status = Command::new(bin)
                .args(args)
                .args(["--threads", threads, "--out"])
                .arg(&path)
                .output()
                .unwrap()
                .status;
            pass &= status.success();
            outputs.push(std::fs::read(&path).unwrap_or_default());
        }
        let same = !outputs[0].is_empty() && outputs[0] == outputs[1];
        pass &= same;
        parts.push(format!("{} ({} bytes) identical: {same}", args[0], outputs[0].len()));
    }
    outcome(pass, format!("threads 1 vs 4: {}", parts.join(", ")))
}

fn main() {
    let criteria: [Criterion; 11] = [
        (1, "false-alarm anchor", c1_false_alarm_anchor),
        (2, "false-alarm Monte Carlo", c2_false_alarm_mc),
        (3, "miss detection", c3_miss_grid),
        (4, "RS guarantee", c4_rs_guarantee),
        (5, "round-trip integrity", c5_round_trip),
        (6, "dummy-byte search", c6_dummy_search),
        (7, "throughput/clock identities", c7_clock_identities),
        (8, "FIFO boundedness", c8_fifo),
        (9, "link budget", c9_link_budget),
        (10, "modem statistics", c10_modem),
        (11, "determinism", c11_determinism),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    let mut ran = 0;
    for (id, name, run) in criteria {
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str()) || id.to_string() == *f) {
            continue;
        }
        ran += 1;
        let start = Instant::now();
        let o = run();
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        println!("{verdict} [{id:>2}] {name}: {} ({:.1?})", o.detail, start.elapsed());
        failed += !o.pass as u32;
    }
    println!("acceptance: {}/{ran} criteria passed", ran - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
