use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use gigaphy::channel::{
    link_budget, ChannelConfig, LinkBudgetParams, DEFAULT_MULTIPATH_TAPS, HORN_GAIN_DBI, PATCH_GAIN_DBI,
};
use gigaphy::framing::{fifo_simulate, format_scaled, search_dummy_byte, ClockPlan, FifoModel, FifoSide, FrameConfig};
use gigaphy::harness::{
    csv_string, emit_csv, run_link, run_sync_campaign, CsvRecord, FifoSettings, FileConfig, RunConfig, Side,
    SyncCampaign,
};

#[derive(Parser)]
#[command(name = "gigaphy", version, about = "DBPSK near-gigabit link simulator")]
struct Cli {
    /// TOML configuration file.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Master seed (overrides the file).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Write the CSV here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads; results do not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// BER/FER sweep over the full link.
    Ber(BerArgs),
    /// Analytic vs Monte Carlo miss and false-alarm rates.
    SyncStats(SyncArgs),
    /// Minimax dummy-byte enumeration for a preamble.
    DummySearch(DummyArgs),
    /// Dual-clock FIFO occupancy simulation.
    FifoSim(FifoArgs),
    /// Free-space link budget.
    LinkBudget(BudgetArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Noiseless,
    Bsc,
    Awgn,
    FirAwgn,
}

#[derive(Clone, Copy, ValueEnum)]
enum OnOff {
    On,
    Off,
}

#[derive(Args)]
struct BerArgs {
    #[arg(long, value_enum)]
    channel: Option<Kind>,
    /// Comma-separated operating points (p or Eb/N0 dB).
    #[arg(long, value_delimiter = ',')]
    sweep: Option<Vec<f64>>,
    #[arg(long)]
    frames: Option<u64>,
    #[arg(long, value_enum)]
    coding: Option<OnOff>,
    #[arg(long)]
    gamma: Option<u32>,
    #[arg(long)]
    banks: Option<u32>,
}

#[derive(Args)]
struct SyncArgs {
    #[arg(long, value_delimiter = ',')]
    gammas: Option<Vec<u32>>,
    #[arg(long, value_delimiter = ',')]
    ps: Option<Vec<f64>>,
    #[arg(long, value_delimiter = ',')]
    banks: Option<Vec<u32>>,
    #[arg(long)]
    miss_trials: Option<u64>,
    #[arg(long)]
    false_alarm_trials: Option<u64>,
}

#[derive(Args)]
struct DummyArgs {
    /// Preamble as 8 hex digits; defaults to the PN-derived one.
    #[arg(long)]
    preamble: Option<String>,
}

#[derive(Args)]
struct FifoArgs {
    #[arg(long)]
    capacity: Option<u64>,
    #[arg(long)]
    start: Option<u64>,
    /// Duration in gated-clock ticks.
    #[arg(long)]
    ticks: Option<u64>,
    #[arg(long, value_enum)]
    side: Option<SideArg>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Transmit,
    Receive,
}

#[derive(Args)]
struct BudgetArgs {
    #[arg(long, allow_negative_numbers = true)]
    ptx_dbm: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    gtx_dbi: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    grx_dbi: Option<f64>,
    #[arg(long)]
    freq_hz: Option<f64>,
    #[arg(long)]
    distance_m: Option<f64>,
}

fn main() {
    if let Err(e) = run(Cli::parse()) {
        eprintln!("error: {e:#}");
        std::process::exit(2);
    }
}

fn run(cli: Cli) -> Result<()> {
    let file = match &cli.config {
        Some(p) => FileConfig::load(p)?,
        None => FileConfig::default(),
    };
    if let Some(n) = cli.threads.or(file.threads) {
        if n == 0 {
            bail!("--threads must be at least 1");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("starting worker pool")?;
    }
    let seed = cli.seed.or(file.seed);
    let out = cli.out.as_deref();
    match cli.command {
        Command::Ber(a) => ber(a, file.ber.unwrap_or_default(), seed, out),
        Command::SyncStats(a) => sync_stats(a, file.sync_stats.unwrap_or_default(), seed, out),
        Command::DummySearch(a) => dummy_search(a, out),
        Command::FifoSim(a) => fifo_sim(a, file.fifo_sim.unwrap_or_default(), out),
        Command::LinkBudget(a) => budget(a, file.link_budget.unwrap_or_default(), out),
    }
}

fn write<T: CsvRecord>(rows: &[T], out: Option<&Path>) -> Result<()> {
    match out {
        Some(p) => emit_csv(rows, p)?,
        None => print!("{}", csv_string(rows)?),
    }
    Ok(())
}

fn ber(a: BerArgs, mut cfg: RunConfig, seed: Option<u64>, out: Option<&Path>) -> Result<()> {
    if let Some(k) = a.channel {
        cfg.channel = match k {
            Kind::Noiseless => ChannelConfig::Noiseless,
            Kind::Bsc => ChannelConfig::Bsc { p: 1e-3 },
            Kind::Awgn => ChannelConfig::Awgn { ebn0_db: 8.0 },
            Kind::FirAwgn => ChannelConfig::FirAwgn {
                taps: DEFAULT_MULTIPATH_TAPS.to_vec(),
                ebn0_db: 8.0,
            },
        };
    }
    if let Some(s) = a.sweep {
        cfg.sweep = s;
    }
    if let Some(f) = a.frames {
        cfg.frames = f;
    }
    if let Some(c) = a.coding {
        cfg.coding = matches!(c, OnOff::On);
    }
    if let Some(g) = a.gamma {
        cfg.sync.gamma = g;
    }
    if let Some(b) = a.banks {
        cfg.sync.banks = b;
    }
    if let Some(s) = seed {
        cfg.seed = s;
    }
    let report = run_link(&cfg)?;
    write(&report.points, out)?;
    for p in &report.points {
        let at = p
            .channel
            .p()
            .or(p.channel.ebn0_db())
            .map(|v| format!(" {v}"))
            .unwrap_or_default();
        eprintln!(
            "{}{at}: raw_ber={:.3e} ber={:.3e} fer={:.3e} ({:.2?})",
            p.channel.name(),
            p.raw_ber(),
            p.ber(),
            p.fer(),
            p.wall_time
        );
    }
    Ok(())
}

fn sync_stats(a: SyncArgs, mut cfg: SyncCampaign, seed: Option<u64>, out: Option<&Path>) -> Result<()> {
    if let Some(v) = a.gammas {
        cfg.gammas = v;
    }
    if let Some(v) = a.ps {
        cfg.ps = v;
    }
    if let Some(v) = a.banks {
        cfg.banks = v;
    }
    if let Some(v) = a.miss_trials {
        cfg.miss_trials = v;
    }
    if let Some(v) = a.false_alarm_trials {
        cfg.false_alarm_trials = v;
    }
    if let Some(s) = seed {
        cfg.seed = s;
    }
    write(&run_sync_campaign(&cfg)?, out)
}

fn dummy_search(a: DummyArgs, out: Option<&Path>) -> Result<()> {
    let preamble = match a.preamble {
        Some(h) => u32::from_str_radix(h.trim_start_matches("0x"), 16)
            .with_context(|| format!("preamble {h:?} is not 8 hex digits"))?,
        None => FrameConfig::standard().preamble_word(),
    };
    let s = search_dummy_byte(preamble);
    write(&s.profile, out)?;
    eprintln!("preamble {preamble:08x}: k={} d=0x{:02x} mcor={}", s.k, s.d, s.mcor);
    Ok(())
}

fn fifo_sim(a: FifoArgs, mut cfg: FifoSettings, out: Option<&Path>) -> Result<()> {
    cfg.capacity = a.capacity.unwrap_or(cfg.capacity);
    cfg.start = a.start.unwrap_or(cfg.start);
    cfg.ticks = a.ticks.unwrap_or(cfg.ticks);
    if let Some(s) = a.side {
        cfg.side = match s {
            SideArg::Transmit => Side::Transmit,
            SideArg::Receive => Side::Receive,
        };
    }
    let plan = ClockPlan::default();
    let model = FifoModel {
        capacity: cfg.capacity,
        start_occupancy: cfg.start,
        side: match cfg.side {
            Side::Transmit => FifoSide::Transmit,
            Side::Receive => FifoSide::Receive,
        },
        ..FifoModel::default()
    };
    let r = fifo_simulate(&plan, &model, cfg.ticks)?;
    if let Some(p) = out {
        emit_csv(&r.trace, p)?;
    }
    println!("f1 = {} MHz", format_scaled(plan.f1(), 1_000_000, 2));
    println!("f2 = {} MHz", format_scaled(plan.f2(), 1_000_000, 2));
    println!("throughput = {} Mbps", format_scaled(plan.throughput(), 1_000_000, 2));
    println!("ticks = {}, writes = {}, reads = {}", cfg.ticks, r.writes, r.reads);
    println!(
        "occupancy min = {}, max = {}, end = {}, excursion = {}",
        r.min_occupancy,
        r.max_occupancy,
        r.end_occupancy,
        r.excursion(cfg.start)
    );
    println!("overflow = {}, underflow = {}", r.overflow, r.underflow);
    Ok(())
}

struct BudgetLine {
    item: &'static str,
    value: f64,
}

impl CsvRecord for BudgetLine {
    fn header() -> &'static [&'static str] {
        &["item", "value"]
    }

    fn record(&self) -> Vec<String> {
        vec![self.item.to_string(), self.value.to_string()]
    }
}

fn budget(a: BudgetArgs, mut p: LinkBudgetParams, out: Option<&Path>) -> Result<()> {
    p.ptx_dbm = a.ptx_dbm.unwrap_or(p.ptx_dbm);
    p.gtx_dbi = a.gtx_dbi.unwrap_or(p.gtx_dbi);
    p.grx_dbi = a.grx_dbi.unwrap_or(p.grx_dbi);
    p.freq_hz = a.freq_hz.unwrap_or(p.freq_hz);
    p.distance_m = a.distance_m.unwrap_or(p.distance_m);
    let b = link_budget(&p)?;
    // (csv item, table label, value)
    let rows = [
        ("ptx_dbm", "tx power (dBm)", p.ptx_dbm),
        ("gtx_dbi", "tx gain (dBi)", p.gtx_dbi),
        ("grx_dbi", "rx gain (dBi)", p.grx_dbi),
        ("fspl_db", "path loss (dB)", -b.fspl_db),
        ("prx_dbm", "rx power (dBm)", b.prx_dbm),
        // derived, not part of the budget sum
        (
            "horn_to_patch_db",
            "one horn -> patch (dB)",
            PATCH_GAIN_DBI - HORN_GAIN_DBI,
        ),
    ];
    match out {
        Some(path) => {
            let lines: Vec<BudgetLine> = rows
                .iter()
                .map(|&(item, _, value)| BudgetLine {
                    item,
                    value: if item == "fspl_db" { -value } else { value },
                })
                .collect();
            emit_csv(&lines, path)?;
        }
        None => {
            println!("{:<24}{:>10}", "item", "dB");
            for (i, (_, label, value)) in rows.iter().enumerate() {
                if i == 5 {
                    println!("{}", "-".repeat(34));
                }
                println!("{label:<24}{value:>10.2}");
            }
        }
    }
    Ok(())
}
