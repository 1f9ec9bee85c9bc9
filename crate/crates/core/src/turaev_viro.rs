//! The state sum `TV_{r,s}(M_g)` over admissible colorings and `QV = (sπ/(r-2)) log TV`.

use std::time::Instant;

use rayon::prelude::*;

use crate::coloring::{enumerate_fast, enumerate_partition, partitions, Coloring};
use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::numerics::{BigComplex, BigReal, PrecisionContext};
use crate::sixj::{CacheMode, CacheStats, Level, SixJCache};

/// Column order used when writing the tetrahedron symbols of a term.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Arrangement {
    /// `|a b b; c_i c_i c_{i-1}|` and `|a b b; c_i c_i c_{i+1}|`.
    #[default]
    Reduced,
    /// `|b a b; c_i c_i c_{i-1}|` and `|b a b; c_{i+1} c_i c_i|`, read off the
    /// colored tetrahedra before any symmetry is applied.
    Tetrahedral,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TvOptions {
    /// 1 is the serial reference; 0 lets the thread pool pick.
    pub threads: usize,
    pub cache: CacheMode,
    pub arrangement: Arrangement,
}

impl Default for TvOptions {
    fn default() -> Self {
        TvOptions {
            threads: 1,
            cache: CacheMode::Memoized,
            arrangement: Arrangement::Reduced,
        }
    }
}

#[derive(Clone, Debug)]
pub struct TvResult {
    pub g: u32,
    pub r: u32,
    pub s: u32,
    pub precision_bits: u32,
    pub tv: BigComplex,
    /// `None` when `tv` is exactly zero.
    pub qv: Option<BigComplex>,
    pub term_count: u64,
    pub wall_time: f64,
    /// `max |term| / |tv|`; large values mean heavy cancellation.
    pub cancellation: f64,
    pub cache: CacheStats,
}

impl TvResult {
    /// `|Im tv| / (1 + |Re tv|)`.
    pub fn imaginary_ratio(&self) -> f64 {
        let im = self.tv.im.clone().abs();
        let re = self.tv.re.clone().abs() + 1u32;
        (im / re).to_f64()
    }
}

fn symbols_for(col: &Coloring, i: usize, arrangement: Arrangement) -> [[HalfInt; 6]; 2] {
    let n = col.c.len();
    let (a, b) = (col.a, col.b);
    let c = col.c[i];
    let prev = col.c[(i + n - 1) % n];
    let next = col.c[(i + 1) % n];
    match arrangement {
        Arrangement::Reduced => [[a, b, b, c, c, prev], [a, b, b, c, c, next]],
        Arrangement::Tetrahedral => [[b, a, b, c, c, prev], [b, a, b, next, c, c]],
    }
}

/// One summand `w_a w_b ∏ w_{c_i} ∏_i |a b b; c_i c_i c_{i-1}| |a b b; c_i c_i c_{i+1}|`.
pub fn coloring_term(
    col: &Coloring,
    cache: &SixJCache,
    arrangement: Arrangement,
) -> Result<BigComplex> {
    let level = cache.level();
    let mut weight = level.edge_weight(col.a)?;
    weight *= level.edge_weight(col.b)?;
    for &c in &col.c {
        weight *= level.edge_weight(c)?;
    }
    let mut acc = BigComplex::from_real(weight);
    for i in 0..col.c.len() {
        for t in symbols_for(col, i, arrangement) {
            acc = &acc * &cache.symbol(&t)?;
        }
    }
    Ok(acc)
}

/// Running sum of terms plus the largest term magnitude seen.
#[derive(Clone, Debug)]
pub struct PartialSum {
    pub sum: BigComplex,
    pub count: u64,
    pub max_abs: BigReal,
}

impl PartialSum {
    fn new(ctx: &PrecisionContext) -> Self {
        PartialSum {
            sum: ctx.complex_zero(),
            count: 0,
            max_abs: ctx.zero(),
        }
    }

    fn push(&mut self, term: BigComplex) {
        let abs = term.abs();
        if abs > self.max_abs {
            self.max_abs = abs;
        }
        self.sum = &self.sum + &term;
        self.count += 1;
    }

    fn absorb(&mut self, other: PartialSum) {
        if other.max_abs > self.max_abs {
            self.max_abs = other.max_abs;
        }
        self.sum = &self.sum + &other.sum;
        self.count += other.count;
    }
}

/// Sums [`coloring_term`] over any stream of colorings, in stream order.
pub fn sum_terms<I>(colorings: I, cache: &SixJCache, arrangement: Arrangement) -> Result<PartialSum>
where
    I: IntoIterator<Item = Coloring>,
{
    let mut acc = PartialSum::new(cache.level().ctx());
    for col in colorings {
        acc.push(coloring_term(&col, cache, arrangement)?);
    }
    Ok(acc)
}

/// `(sπ/(r-2)) log tv`, with the argument of the logarithm taken in `[0, 2π)`.
pub fn qv_from_tv(tv: &BigComplex, r: u32, s: u32, ctx: &PrecisionContext) -> Result<BigComplex> {
    if tv.is_zero() {
        return Err(Error::ZeroInvariant);
    }
    let mut factor = ctx.pi();
    factor *= s;
    factor /= r - 2;
    Ok(tv.ln_nonnegative_arg().scale(&factor))
}

fn run(
    g: u32,
    r: u32,
    s: u32,
    ctx: PrecisionContext,
    opts: &TvOptions,
) -> Result<(PartialSum, CacheStats)> {
    let cache = SixJCache::new(Level::new(r, s, ctx)?, opts.cache);
    let total = if opts.threads == 1 {
        sum_terms(enumerate_fast(g, r)?, &cache, opts.arrangement)?
    } else {
        let parts = partitions(r)?;
        let work = || -> Result<Vec<PartialSum>> {
            parts
                .par_iter()
                .map(|&p| sum_terms(enumerate_partition(g, r, p)?, &cache, opts.arrangement))
                .collect()
        };
        let partials = if opts.threads == 0 {
            work()?
        } else {
            rayon::ThreadPoolBuilder::new()
                .num_threads(opts.threads)
                .build()
                .map_err(|e| Error::Io(std::io::Error::other(e)))?
                .install(work)?
        };
        let mut acc = PartialSum::new(&ctx);
        for p in partials {
            acc.absorb(p);
        }
        acc
    };
    Ok((total, cache.stats()))
}

/// Evaluates `TV_{r,s}(M_g)` with the serial reference settings.
pub fn tv_invariant(g: u32, r: u32, s: u32, ctx: PrecisionContext) -> Result<TvResult> {
    tv_invariant_with(g, r, s, ctx, &TvOptions::default())
}

pub fn tv_invariant_with(
    g: u32,
    r: u32,
    s: u32,
    ctx: PrecisionContext,
    opts: &TvOptions,
) -> Result<TvResult> {
    let start = Instant::now();
    let (total, stats) = run(g, r, s, ctx, opts)?;
    let tv = total.sum;
    let qv = match qv_from_tv(&tv, r, s, &ctx) {
        Ok(q) => Some(q),
        Err(Error::ZeroInvariant) => None,
        Err(e) => return Err(e),
    };
    let cancellation = if tv.is_zero() {
        f64::INFINITY
    } else {
        (total.max_abs / tv.abs()).to_f64()
    };
    Ok(TvResult {
        g,
        r,
        s,
        precision_bits: ctx.bits(),
        tv,
        qv,
        term_count: total.count,
        wall_time: start.elapsed().as_secs_f64(),
        cancellation,
        cache: stats,
    })
}

pub fn qv_invariant(g: u32, r: u32, s: u32, ctx: PrecisionContext) -> Result<BigComplex> {
    let res = tv_invariant(g, r, s, ctx)?;
    res.qv.ok_or(Error::ZeroInvariant)
}
