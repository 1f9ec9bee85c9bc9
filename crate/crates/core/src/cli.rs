//! Command-line front end. [`run`] parses arguments, executes one subcommand
//! and returns the process exit code, writing results to the given sinks so
//! it can be driven from tests as well as from the binary.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::asymptotics::{
    fit_affine, fit_fixed_volume, fit_free, gnuplot_affine_script, gnuplot_script, FitResult,
    ModelTag, QvSeries,
};
use crate::coloring::{count_admissible, enumerate_fast};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::hyperbolic::{manifold_volume, volumes};
use crate::numerics::{format_real, PrecisionContext, DEFAULT_PRECISION};
use crate::sixj::CacheMode;
use crate::turaev_viro::{tv_invariant_with, TvOptions, TvResult};

pub const SWEEP_HEADER: [&str; 10] = [
    "g", "r", "s", "prec", "tv_re", "tv_im", "qv_re", "qv_im", "terms", "seconds",
];
pub const FIT_HEADER: [&str; 7] = ["g", "model", "a", "b", "c", "rss", "r2"];
pub const VOLUME_HEADER: [&str; 3] = ["g", "vol_tetrahedron", "vol_manifold"];

#[derive(Debug, Parser)]
#[command(
    name = "tvqv",
    version,
    about = "Turaev-Viro invariants, QV sweeps, hyperbolic volumes and asymptotic fits for Frigerio manifolds"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Vol(T_g) and Vol(M_g) for each genus.
    Volume(VolumeArgs),
    /// TV_{r,s}(M_g) and QV_{r,s}(M_g) at a single level.
    Tv(TvArgs),
    /// One TV/QV row per level over a range of r.
    QvSweep(SweepArgs),
    /// Admissible colorings of T_g as CSV.
    Colorings(ColoringArgs),
    /// Fit Re QV against the asymptotic expansion.
    Fit(FitArgs),
    /// Affine fit of the b coefficient against the genus.
    Bfit(BfitArgs),
    /// Print the embedded reference tables.
    Fixtures(FixtureArgs),
}

#[derive(Debug, Args)]
pub struct Output {
    /// Write CSV to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Significant digits for high-precision values.
    #[arg(long, default_value_t = 20)]
    pub digits: usize,
}

#[derive(Debug, Args)]
pub struct Precision {
    /// Mantissa bits of every high-precision scalar.
    #[arg(long, default_value_t = DEFAULT_PRECISION)]
    pub prec: u32,
}

#[derive(Debug, Args)]
pub struct VolumeArgs {
    /// Genera to evaluate.
    pub genera: Vec<u32>,
    #[command(flatten)]
    pub precision: Precision,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct StateSumArgs {
    #[arg(long, default_value_t = 2)]
    pub s: u32,
    #[command(flatten)]
    pub precision: Precision,
    /// Worker threads; 1 is the deterministic serial reference, 0 uses every core.
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    /// Recompute every 6j symbol instead of memoizing.
    #[arg(long)]
    pub no_cache: bool,
    /// Report 6j cache statistics on standard error.
    #[arg(long)]
    pub cache_stats: bool,
    /// Report max |term| / |TV| on standard error.
    #[arg(long)]
    pub diagnostics: bool,
}

#[derive(Debug, Args)]
pub struct TvArgs {
    #[arg(long)]
    pub g: u32,
    #[arg(long)]
    pub r: u32,
    #[command(flatten)]
    pub sum: StateSumArgs,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub g: u32,
    #[arg(long)]
    pub r_min: u32,
    #[arg(long)]
    pub r_max: u32,
    /// Include even r (skipped by default, the conjecture concerns odd r).
    #[arg(long)]
    pub all_r: bool,
    #[command(flatten)]
    pub sum: StateSumArgs,
    #[command(flatten)]
    pub output: Output,
    /// Write a gnuplot script of Re QV against r.
    #[arg(long)]
    pub plot: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ColoringArgs {
    #[arg(long)]
    pub g: u32,
    #[arg(long)]
    pub r: u32,
    /// Only print the number of colorings.
    #[arg(long)]
    pub count: bool,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FitModel {
    Free,
    FixedVolume,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FitFormat {
    Csv,
    Jsonl,
}

#[derive(Debug, Args)]
pub struct FitArgs {
    /// QV sweep CSV; the embedded reference table is used when absent.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Restrict to these genera (repeatable).
    #[arg(long = "g")]
    pub genera: Vec<u32>,
    #[arg(long, value_enum, default_value_t = FitModel::Free)]
    pub model: FitModel,
    /// Drop points with r above this level.
    #[arg(long)]
    pub r_max: Option<u32>,
    /// Keep reference rows flagged as anomalous.
    #[arg(long)]
    pub include_anomalous: bool,
    #[command(flatten)]
    pub precision: Precision,
    #[arg(long, value_enum, default_value_t = FitFormat::Csv)]
    pub format: FitFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub plot: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BfitArgs {
    /// Fit CSV (g,model,a,b,c,rss,r2); the reference fixed-volume b values are used when absent.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FitFormat::Csv)]
    pub format: FitFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub plot: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FixtureTable {
    Volumes,
    Qv,
    FreeFits,
    FixedFits,
}

#[derive(Debug, Args)]
pub struct FixtureArgs {
    #[arg(value_enum, default_value_t = FixtureTable::Qv)]
    pub table: FixtureTable,
    #[arg(long)]
    pub include_anomalous: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { 3 } else { 0 };
        }
    };
    match execute(&cli.command, stdout, stderr) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(command: &Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<()> {
    match command {
        Command::Volume(args) => with_sink(&args.output.out, stdout, |w| cmd_volume(args, w)),
        Command::Tv(args) => with_sink(&args.output.out, stdout, |w| cmd_tv(args, w, stderr)),
        Command::QvSweep(args) => {
            with_sink(&args.output.out, stdout, |w| cmd_qv_sweep(args, w, stderr))
        }
        Command::Colorings(args) => with_sink(&args.output.out, stdout, |w| cmd_colorings(args, w)),
        Command::Fit(args) => with_sink(&args.out, stdout, |w| cmd_fit(args, w)),
        Command::Bfit(args) => with_sink(&args.out, stdout, |w| cmd_bfit(args, w)),
        Command::Fixtures(args) => with_sink(&args.out, stdout, |w| cmd_fixtures(args, w)),
    }
}

fn with_sink<F>(path: &Option<PathBuf>, stdout: &mut dyn Write, f: F) -> Result<()>
where
    F: FnOnce(&mut dyn Write) -> Result<()>,
{
    match path {
        Some(p) => {
            let mut file = BufWriter::new(File::create(p)?);
            f(&mut file)?;
            file.flush()?;
            Ok(())
        }
        None => {
            f(stdout)?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn csv_writer(w: &mut dyn Write) -> csv::Writer<&mut dyn Write> {
    csv::WriterBuilder::new().from_writer(w)
}

fn csv_err(e: csv::Error) -> Error {
    let line = e.position().map(|p| p.line()).unwrap_or(0);
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::Io(io),
        other => Error::Parse {
            line,
            message: format!("{other:?}"),
        },
    }
}

pub fn cmd_volume(args: &VolumeArgs, w: &mut dyn Write) -> Result<()> {
    let ctx = PrecisionContext::new(args.precision.prec)?;
    let mut out = csv_writer(w);
    out.write_record(VOLUME_HEADER).map_err(csv_err)?;
    for &g in &args.genera {
        let (tet, manifold) = volumes(g, &ctx)?;
        out.write_record([
            g.to_string(),
            format_real(&tet, args.output.digits),
            format_real(&manifold, args.output.digits),
        ])
        .map_err(csv_err)?;
    }
    out.flush()?;
    Ok(())
}

fn options(sum: &StateSumArgs) -> TvOptions {
    TvOptions {
        threads: sum.threads,
        cache: if sum.no_cache {
            CacheMode::Canonical
        } else {
            CacheMode::Memoized
        },
        ..TvOptions::default()
    }
}

/// One sweep-schema row for a result.
pub fn sweep_record(res: &TvResult, digits: usize) -> [String; 10] {
    let (qv_re, qv_im) = match &res.qv {
        Some(q) => (format_real(&q.re, digits), format_real(&q.im, digits)),
        None => ("-inf".to_string(), "0".to_string()),
    };
    [
        res.g.to_string(),
        res.r.to_string(),
        res.s.to_string(),
        res.precision_bits.to_string(),
        format_real(&res.tv.re, digits),
        format_real(&res.tv.im, digits),
        qv_re,
        qv_im,
        res.term_count.to_string(),
        format!("{:.6}", res.wall_time),
    ]
}

fn report(res: &TvResult, sum: &StateSumArgs, stderr: &mut dyn Write) -> Result<()> {
    if sum.cache_stats {
        let c = res.cache;
        writeln!(
            stderr,
            "cache g={} r={} s={}: hits={} misses={} size={} odd_parity={}",
            res.g, res.r, res.s, c.hits, c.misses, c.size, c.odd_parity
        )?;
    }
    if sum.diagnostics {
        writeln!(
            stderr,
            "diagnostics g={} r={} s={}: max|term|/|tv|={:.3e} |Im tv|/(1+|Re tv|)={:.3e}",
            res.g,
            res.r,
            res.s,
            res.cancellation,
            res.imaginary_ratio()
        )?;
    }
    Ok(())
}

pub fn cmd_tv(args: &TvArgs, w: &mut dyn Write, stderr: &mut dyn Write) -> Result<()> {
    let ctx = PrecisionContext::new(args.sum.precision.prec)?;
    let res = tv_invariant_with(args.g, args.r, args.sum.s, ctx, &options(&args.sum))?;
    report(&res, &args.sum, stderr)?;
    let mut out = csv_writer(w);
    out.write_record(SWEEP_HEADER).map_err(csv_err)?;
    out.write_record(sweep_record(&res, args.output.digits))
        .map_err(csv_err)?;
    out.flush()?;
    Ok(())
}

pub fn cmd_qv_sweep(args: &SweepArgs, w: &mut dyn Write, stderr: &mut dyn Write) -> Result<()> {
    if args.r_min < 3 {
        return Err(Error::InvalidLevel {
            r: args.r_min,
            s: args.sum.s,
            reason: "sweeps start at r >= 3",
        });
    }
    let ctx = PrecisionContext::new(args.sum.precision.prec)?;
    let opts = options(&args.sum);
    let mut out = csv_writer(w);
    out.write_record(SWEEP_HEADER).map_err(csv_err)?;
    out.flush()?;
    let mut points = Vec::new();
    for r in args.r_min..=args.r_max {
        if !args.all_r && r % 2 == 0 {
            continue;
        }
        let res = tv_invariant_with(args.g, r, args.sum.s, ctx, &opts)?;
        report(&res, &args.sum, stderr)?;
        out.write_record(sweep_record(&res, args.output.digits))
            .map_err(csv_err)?;
        out.flush()?;
        if let Some(q) = &res.qv {
            points.push((r, q.re.to_f64()));
        }
    }
    if let Some(path) = &args.plot {
        let series = QvSeries::new(
            args.g,
            points
                .into_iter()
                .filter(|p| p.0 >= 5 && p.0 % 2 == 1)
                .collect(),
        )?;
        let vol = manifold_volume(args.g, &ctx)?.to_f64();
        write_file(path, &gnuplot_script(&[series], &[], &[(args.g, vol)]))?;
    }
    Ok(())
}

pub fn cmd_colorings(args: &ColoringArgs, w: &mut dyn Write) -> Result<()> {
    let mut out = csv_writer(w);
    if args.count {
        out.write_record(["g", "r", "count"]).map_err(csv_err)?;
        out.write_record([
            args.g.to_string(),
            args.r.to_string(),
            count_admissible(args.g, args.r)?.to_string(),
        ])
        .map_err(csv_err)?;
        out.flush()?;
        return Ok(());
    }
    let mut header = vec!["a".to_string(), "b".to_string()];
    header.extend((0..=args.g).map(|i| format!("c_{i}")));
    out.write_record(&header).map_err(csv_err)?;
    for col in enumerate_fast(args.g, args.r)? {
        let mut row = vec![col.a.to_string(), col.b.to_string()];
        row.extend(col.c.iter().map(|c| c.to_string()));
        out.write_record(&row).map_err(csv_err)?;
    }
    out.flush()?;
    Ok(())
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents)?;
    Ok(())
}

fn read_input(path: &Path) -> Result<String> {
    let mut s = String::new();
    if path == Path::new("-") {
        io::stdin().read_to_string(&mut s)?;
    } else {
        File::open(path)?.read_to_string(&mut s)?;
    }
    Ok(s)
}

fn column(headers: &csv::StringRecord, name: &str) -> Result<usize> {
    headers
        .iter()
        .position(|h| h.trim() == name)
        .ok_or_else(|| Error::Parse {
            line: 1,
            message: format!("missing column {name:?}"),
        })
}

fn field<T: std::str::FromStr>(rec: &csv::StringRecord, idx: usize, name: &str) -> Result<T> {
    let line = rec.position().map(|p| p.line()).unwrap_or(0);
    let raw = rec.get(idx).ok_or_else(|| Error::Parse {
        line,
        message: format!("missing field {name}"),
    })?;
    raw.trim().parse().map_err(|_| Error::Parse {
        line,
        message: format!("bad {name} value {raw:?}"),
    })
}

/// Reads sweep-schema CSV into one series per genus, ordered by `r`.
pub fn parse_sweep_csv(text: &str) -> Result<Vec<QvSeries>> {
    let mut reader = csv::ReaderBuilder::new().from_reader(text.as_bytes());
    let headers = reader.headers().map_err(csv_err)?.clone();
    let (gi, ri, qi) = (
        column(&headers, "g")?,
        column(&headers, "r")?,
        column(&headers, "qv_re")?,
    );
    let mut by_g: BTreeMap<u32, Vec<(u32, f64)>> = BTreeMap::new();
    for rec in reader.records() {
        let rec = rec.map_err(csv_err)?;
        let g: u32 = field(&rec, gi, "g")?;
        let r: u32 = field(&rec, ri, "r")?;
        let qv: f64 = field(&rec, qi, "qv_re")?;
        by_g.entry(g).or_default().push((r, qv));
    }
    if by_g.is_empty() {
        return Err(Error::NotEnoughData("input has no data rows".into()));
    }
    by_g.into_iter()
        .map(|(g, mut pts)| {
            pts.sort_by_key(|p| p.0);
            QvSeries::new(g, pts)
        })
        .collect()
}

/// Reads fit-schema CSV into `(g, b)` pairs, skipping affine rows.
pub fn parse_fit_csv(text: &str) -> Result<Vec<(u32, f64)>> {
    let mut reader = csv::ReaderBuilder::new().from_reader(text.as_bytes());
    let headers = reader.headers().map_err(csv_err)?.clone();
    let (gi, mi, bi) = (
        column(&headers, "g")?,
        column(&headers, "model")?,
        column(&headers, "b")?,
    );
    let mut pairs = Vec::new();
    for rec in reader.records() {
        let rec = rec.map_err(csv_err)?;
        let model: ModelTag =
            field::<String>(&rec, mi, "model")?
                .parse()
                .map_err(|_| Error::Parse {
                    line: rec.position().map(|p| p.line()).unwrap_or(0),
                    message: "unknown model".into(),
                })?;
        if model == ModelTag::Affine {
            continue;
        }
        pairs.push((field(&rec, gi, "g")?, field(&rec, bi, "b")?));
    }
    Ok(pairs)
}

#[derive(Serialize)]
struct FitRecord {
    g: Option<u32>,
    model: &'static str,
    a: f64,
    b: f64,
    c: Option<f64>,
    rss: f64,
    r2: Option<f64>,
}

impl From<&FitResult> for FitRecord {
    fn from(f: &FitResult) -> Self {
        FitRecord {
            g: f.g,
            model: f.model.as_str(),
            a: f.a,
            b: f.b,
            c: f.c,
            rss: f.rss,
            r2: f.r_squared,
        }
    }
}

// `{:?}` is the shortest round-trip form and switches to exponent notation
// for very small or large magnitudes.
fn num(x: f64) -> String {
    format!("{x:?}")
}

/// One fit-schema row.
pub fn fit_record(f: &FitResult) -> [String; 7] {
    [
        f.g.map(|g| g.to_string()).unwrap_or_default(),
        f.model.to_string(),
        num(f.a),
        num(f.b),
        f.c.map(num).unwrap_or_default(),
        num(f.rss),
        f.r_squared.map(num).unwrap_or_default(),
    ]
}

fn write_fits(fits: &[FitResult], format: FitFormat, w: &mut dyn Write) -> Result<()> {
    match format {
        FitFormat::Csv => {
            let mut out = csv_writer(w);
            out.write_record(FIT_HEADER).map_err(csv_err)?;
            for f in fits {
                out.write_record(fit_record(f)).map_err(csv_err)?;
            }
            out.flush()?;
        }
        FitFormat::Jsonl => {
            for f in fits {
                let line =
                    serde_json::to_string(&FitRecord::from(f)).map_err(|e| Error::Io(e.into()))?;
                writeln!(w, "{line}")?;
            }
        }
    }
    Ok(())
}

pub fn cmd_fit(args: &FitArgs, w: &mut dyn Write) -> Result<()> {
    let mut series = match &args.input {
        Some(path) => parse_sweep_csv(&read_input(path)?)?,
        None => {
            let genera = if args.genera.is_empty() {
                fixtures::genera()
            } else {
                args.genera.clone()
            };
            genera
                .into_iter()
                .map(|g| fixtures::qv_series(g, args.include_anomalous))
                .collect::<Result<Vec<_>>>()?
        }
    };
    if !args.genera.is_empty() {
        series.retain(|s| args.genera.contains(&s.g()));
    }
    if let Some(r_max) = args.r_max {
        series = series.iter().map(|s| s.truncated(r_max)).collect();
    }
    if series.is_empty() {
        return Err(Error::NotEnoughData("no series selected".into()));
    }
    let ctx = PrecisionContext::new(args.precision.prec)?;
    let mut fits = Vec::new();
    let mut vols = Vec::new();
    for s in &series {
        let vol = manifold_volume(s.g(), &ctx)?.to_f64();
        vols.push((s.g(), vol));
        fits.push(match args.model {
            FitModel::Free => fit_free(s)?,
            FitModel::FixedVolume => fit_fixed_volume(s, vol)?,
        });
    }
    write_fits(&fits, args.format, w)?;
    if let Some(path) = &args.plot {
        write_file(path, &gnuplot_script(&series, &fits, &vols))?;
    }
    Ok(())
}

pub fn cmd_bfit(args: &BfitArgs, w: &mut dyn Write) -> Result<()> {
    let pairs = match &args.input {
        Some(path) => parse_fit_csv(&read_input(path)?)?,
        None => fixtures::fixed_b_pairs(),
    };
    let fit = fit_affine(&pairs)?;
    write_fits(std::slice::from_ref(&fit), args.format, w)?;
    if let Some(path) = &args.plot {
        write_file(path, &gnuplot_affine_script(&pairs, &fit))?;
    }
    Ok(())
}

pub fn cmd_fixtures(args: &FixtureArgs, w: &mut dyn Write) -> Result<()> {
    let mut out = csv_writer(w);
    match args.table {
        FixtureTable::Volumes => {
            out.write_record(VOLUME_HEADER).map_err(csv_err)?;
            for row in fixtures::VOLUMES {
                out.write_record([&row.g.to_string(), row.tetrahedron, row.manifold])
                    .map_err(csv_err)?;
            }
        }
        FixtureTable::Qv => {
            out.write_record(["g", "r", "qv_re", "anomalous"])
                .map_err(csv_err)?;
            for row in fixtures::QV
                .iter()
                .filter(|r| args.include_anomalous || !r.anomalous)
            {
                out.write_record([
                    &row.g.to_string(),
                    &row.r.to_string(),
                    row.qv,
                    &row.anomalous.to_string(),
                ])
                .map_err(csv_err)?;
            }
        }
        FixtureTable::FreeFits => {
            out.write_record(["g", "r_max", "vol", "a", "b", "c"])
                .map_err(csv_err)?;
            for row in fixtures::FREE_FITS {
                out.write_record([
                    &row.g.to_string(),
                    &row.r_max.to_string(),
                    row.volume,
                    row.a,
                    row.b,
                    row.c,
                ])
                .map_err(csv_err)?;
            }
        }
        FixtureTable::FixedFits => {
            out.write_record(["g", "r_max", "vol", "b", "c"])
                .map_err(csv_err)?;
            for row in fixtures::FIXED_FITS {
                out.write_record([
                    &row.g.to_string(),
                    &row.r_max.to_string(),
                    row.volume,
                    row.b,
                    row.c,
                ])
                .map_err(csv_err)?;
            }
        }
    }
    out.flush()?;
    Ok(())
}
