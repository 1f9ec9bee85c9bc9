//! Quantum integers, Δ coefficients and quantum 6j symbols at a root of unity.
//!
//! A [`Level`] fixes `(r, s)` and a precision and tabulates the quantum
//! numbers `[n] = sin(n s π / r) / sin(s π / r)` and their factorials once.
//! [`SixJCache`] memoizes symbols under the 24-element tetrahedral symmetry
//! group, keyed by the lexicographically smallest image of the 6-tuple.

use std::sync::atomic::{AtomicU64, Ordering};

use dashmap::DashMap;
use rug::Float;

use crate::error::{Error, Result};
use crate::halfint::{admissible_unchecked, HalfInt};
use crate::numerics::{principal_sqrt, BigComplex, BigReal, PrecisionContext};

/// `(r, s)` together with tabulated quantum numbers and factorials.
#[derive(Clone, Debug)]
pub struct Level {
    r: u32,
    s: u32,
    ctx: PrecisionContext,
    numbers: Vec<BigReal>,
    factorials: Vec<BigReal>,
}

fn check_level(r: u32, s: u32) -> Result<()> {
    if r < 3 {
        return Err(Error::InvalidLevel {
            r,
            s,
            reason: "r must be at least 3",
        });
    }
    if s == 0 {
        return Err(Error::InvalidLevel {
            r,
            s,
            reason: "s must be at least 1",
        });
    }
    if s.is_multiple_of(r) {
        return Err(Error::InvalidLevel {
            r,
            s,
            reason: "sin(s*pi/r) vanishes",
        });
    }
    Ok(())
}

// sin(k*pi/r) with k reduced exactly modulo 2r first.
fn sin_pi_fraction(k: u64, r: u32, ctx: &PrecisionContext) -> BigReal {
    let period = 2 * r as u64;
    let k = k % period;
    if k == 0 || k == r as u64 {
        return ctx.zero();
    }
    let mut angle = ctx.pi();
    angle *= k as u32;
    angle /= r;
    angle.sin()
}

/// `[n] = sin(n s π / r) / sin(s π / r)`.
pub fn quantum_number(r: u32, s: u32, n: u32, ctx: &PrecisionContext) -> Result<BigReal> {
    check_level(r, s)?;
    let num = sin_pi_fraction(n as u64 * s as u64, r, ctx);
    let den = sin_pi_fraction(s as u64, r, ctx);
    Ok(num / den)
}

/// `[n]! = [n][n-1]...[1]`, with `[0]! = 1`.
pub fn quantum_factorial(r: u32, s: u32, n: u32, ctx: &PrecisionContext) -> Result<BigReal> {
    check_level(r, s)?;
    let mut acc = ctx.one();
    for k in 1..=n {
        acc *= quantum_number(r, s, k, ctx)?;
    }
    Ok(acc)
}

impl Level {
    pub fn new(r: u32, s: u32, ctx: PrecisionContext) -> Result<Level> {
        check_level(r, s)?;
        // factorial arguments in a 6j symbol never exceed 2(r-2)+1
        let size = 2 * r as usize + 2;
        let mut numbers = Vec::with_capacity(size);
        let mut factorials = Vec::with_capacity(size);
        let mut acc = ctx.one();
        for n in 0..size as u32 {
            let q = quantum_number(r, s, n, &ctx)?;
            if n > 0 {
                acc *= &q;
            }
            numbers.push(q);
            factorials.push(acc.clone());
        }
        Ok(Level {
            r,
            s,
            ctx,
            numbers,
            factorials,
        })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn ctx(&self) -> &PrecisionContext {
        &self.ctx
    }

    pub fn quantum_number(&self, n: u32) -> Result<BigReal> {
        match self.numbers.get(n as usize) {
            Some(q) => Ok(q.clone()),
            None => quantum_number(self.r, self.s, n, &self.ctx),
        }
    }

    fn factorial(&self, n: u32) -> &BigReal {
        &self.factorials[n as usize]
    }

    pub fn quantum_factorial(&self, n: u32) -> Result<BigReal> {
        match self.factorials.get(n as usize) {
            Some(f) => Ok(f.clone()),
            None => quantum_factorial(self.r, self.s, n, &self.ctx),
        }
    }

    fn check_colors(&self, colors: &[HalfInt]) -> Result<()> {
        for &c in colors {
            if c.doubled() > self.r - 2 {
                return Err(Error::ColorOutOfRange {
                    color: c.to_string(),
                    r: self.r,
                });
            }
        }
        Ok(())
    }

    /// `Δ(i,j,k) = sqrt([i+j-k]! [i-j+k]! [-i+j+k]! / [i+j+k+1]!)`, real or purely imaginary.
    pub fn delta(&self, i: HalfInt, j: HalfInt, k: HalfInt) -> Result<BigComplex> {
        self.check_colors(&[i, j, k])?;
        if !admissible_unchecked(i, j, k, self.r) {
            return Err(Error::Inadmissible(format!("{i}, {j}, {k}")));
        }
        Ok(self.delta_unchecked(i, j, k))
    }

    fn delta_unchecked(&self, i: HalfInt, j: HalfInt, k: HalfInt) -> BigComplex {
        let (i, j, k) = (i.doubled(), j.doubled(), k.doubled());
        let mut ratio = self.factorial((i + j - k) / 2).clone();
        ratio *= self.factorial((i + k - j) / 2);
        ratio *= self.factorial((j + k - i) / 2);
        ratio /= self.factorial((i + j + k) / 2 + 1);
        principal_sqrt(&ratio)
    }

    /// `w_i = (-1)^(2i) [2i+1]`.
    pub fn edge_weight(&self, i: HalfInt) -> Result<BigReal> {
        self.check_colors(&[i])?;
        let q = self.quantum_number(i.doubled() + 1)?;
        Ok(if i.is_integer() { q } else { -q })
    }

    /// Evaluates the symbol for the 6-tuple exactly in the order given.
    pub fn sixj_direct(&self, t: &[HalfInt; 6]) -> Result<BigComplex> {
        self.check_colors(t)?;
        let [i, j, k, l, m, n] = *t;
        for (a, b, c) in [(i, j, k), (j, l, n), (i, m, n), (k, l, m)] {
            if !admissible_unchecked(a, b, c, self.r) {
                return Err(Error::Inadmissible(format!("{a}, {b}, {c}")));
            }
        }
        let d = t.map(HalfInt::doubled);
        let [i, j, k, l, m, n] = d;
        let half = |x: u32| {
            debug_assert!(x.is_multiple_of(2), "odd doubled bound");
            x / 2
        };
        let tri = [
            half(i + j + k),
            half(j + l + n),
            half(i + m + n),
            half(k + l + m),
        ];
        let quad = [
            half(i + j + l + m),
            half(i + k + l + n),
            half(j + k + m + n),
        ];
        let z_min = *tri.iter().max().unwrap();
        let z_max = *quad.iter().min().unwrap();

        let p = self.ctx.bits();
        let mut sum = self.ctx.zero();
        for z in z_min..=z_max {
            let mut den = self.ctx.one();
            for &tv in &tri {
                den *= self.factorial(z - tv);
            }
            for &qv in &quad {
                den *= self.factorial(qv - z);
            }
            if den.is_zero() {
                return Err(Error::InvalidLevel {
                    r: self.r,
                    s: self.s,
                    reason: "vanishing quantum factorial in a 6j denominator",
                });
            }
            let term = Float::with_val(p, self.factorial(z + 1) / &den);
            if z % 2 == 0 {
                sum += term;
            } else {
                sum -= term;
            }
        }

        let mut prefactor = self.delta_unchecked(t[0], t[1], t[2]);
        prefactor = &prefactor * &self.delta_unchecked(t[1], t[3], t[5]);
        prefactor = &prefactor * &self.delta_unchecked(t[0], t[4], t[5]);
        prefactor = &prefactor * &self.delta_unchecked(t[2], t[3], t[4]);
        let twice_total: u32 = d.iter().sum();
        Ok(prefactor.scale(&sum).mul_i_pow(twice_total % 4))
    }
}

/// The 24 images of a 6-tuple `|i j k; l m n|` under the tetrahedral group:
/// any permutation of the three columns combined with swapping upper and
/// lower entries in an even number of columns.
pub fn symmetry_images(t: &[HalfInt; 6]) -> [[HalfInt; 6]; 24] {
    const COLUMN_PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    const FLIPS: [[bool; 3]; 4] = [
        [false, false, false],
        [true, true, false],
        [true, false, true],
        [false, true, true],
    ];
    let columns = [(t[0], t[3]), (t[1], t[4]), (t[2], t[5])];
    let mut out = [[HalfInt::ZERO; 6]; 24];
    let mut idx = 0;
    for perm in COLUMN_PERMS {
        for flip in FLIPS {
            let mut image = [HalfInt::ZERO; 6];
            for c in 0..3 {
                let (top, bottom) = columns[perm[c]];
                let (top, bottom) = if flip[c] {
                    (bottom, top)
                } else {
                    (top, bottom)
                };
                image[c] = top;
                image[c + 3] = bottom;
            }
            out[idx] = image;
            idx += 1;
        }
    }
    out
}

/// The identity plus the five generating permutations of the symbol.
pub fn allowed_permutations(t: &[HalfInt; 6]) -> [[HalfInt; 6]; 6] {
    let [i, j, k, l, m, n] = *t;
    [
        [i, j, k, l, m, n],
        [j, i, k, m, l, n],
        [i, k, j, l, n, m],
        [i, m, n, l, j, k],
        [l, m, k, i, j, n],
        [l, j, n, i, m, k],
    ]
}

/// Canonical representative of a 6-tuple's symmetry class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SixJKey([HalfInt; 6]);

impl SixJKey {
    pub fn canonical(t: &[HalfInt; 6]) -> SixJKey {
        let images = symmetry_images(t);
        SixJKey(*images.iter().min().unwrap())
    }

    pub fn as_array(&self) -> &[HalfInt; 6] {
        &self.0
    }
}

/// How [`SixJCache::symbol`] evaluates a request.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CacheMode {
    /// Canonicalize, then memoize.
    #[default]
    Memoized,
    /// Canonicalize, recompute every time. Bit-identical to `Memoized`.
    Canonical,
    /// Evaluate in the order given, no canonicalization and no storage.
    Raw,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CacheStats {
    pub hits: u64,
    pub misses: u64,
    pub size: usize,
    /// Evaluated symbols whose `2(i+j+k+l+m+n)` is odd.
    pub odd_parity: u64,
}

/// Concurrent memo table of 6j symbols for one level.
#[derive(Debug)]
pub struct SixJCache {
    level: Level,
    mode: CacheMode,
    map: DashMap<SixJKey, BigComplex>,
    hits: AtomicU64,
    misses: AtomicU64,
    odd_parity: AtomicU64,
}

impl SixJCache {
    pub fn new(level: Level, mode: CacheMode) -> SixJCache {
        SixJCache {
            level,
            mode,
            map: DashMap::new(),
            hits: AtomicU64::new(0),
            misses: AtomicU64::new(0),
            odd_parity: AtomicU64::new(0),
        }
    }

    pub fn level(&self) -> &Level {
        &self.level
    }

    pub fn mode(&self) -> CacheMode {
        self.mode
    }

    pub fn symbol(&self, t: &[HalfInt; 6]) -> Result<BigComplex> {
        let key = match self.mode {
            CacheMode::Raw => return self.evaluate(t),
            _ => SixJKey::canonical(t),
        };
        if self.mode == CacheMode::Memoized {
            if let Some(v) = self.map.get(&key) {
                self.hits.fetch_add(1, Ordering::Relaxed);
                return Ok(v.clone());
            }
        }
        let value = self.evaluate(key.as_array())?;
        if self.mode == CacheMode::Memoized {
            self.map.insert(key, value.clone());
        }
        Ok(value)
    }

    fn evaluate(&self, t: &[HalfInt; 6]) -> Result<BigComplex> {
        self.misses.fetch_add(1, Ordering::Relaxed);
        if t.iter().map(|x| x.doubled()).sum::<u32>() % 2 == 1 {
            self.odd_parity.fetch_add(1, Ordering::Relaxed);
        }
        self.level.sixj_direct(t)
    }

    pub fn stats(&self) -> CacheStats {
        CacheStats {
            hits: self.hits.load(Ordering::Relaxed),
            misses: self.misses.load(Ordering::Relaxed),
            size: self.map.len(),
            odd_parity: self.odd_parity.load(Ordering::Relaxed),
        }
    }
}

/// The quantum 6j symbol `|i j k; l m n|`, served through `cache`.
pub fn sixj_symbol(t: &[HalfInt; 6], cache: &SixJCache) -> Result<BigComplex> {
    cache.symbol(t)
}
