//! Admissible colorings of the ideal triangulation `T_g`.
//!
//! A coloring assigns `a`, `b` and a cyclic chain `c_0..c_g` to the `g + 3`
//! edge classes. [`enumerate_fast`] walks the chain with per-level bounds so
//! that only admissible states are ever generated; [`enumerate_oracle`]
//! filters the whole product `I_r^(g+3)` through the raw triple conditions
//! and exists to check the former.

use std::fmt;

use crate::error::{Error, Result};
use crate::halfint::{admissible_unchecked, HalfInt};

/// Largest product size [`enumerate_oracle`] accepts.
pub const ORACLE_LIMIT: u128 = 1_000_000_000;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coloring {
    pub a: HalfInt,
    pub b: HalfInt,
    /// `c_0, ..., c_g`.
    pub c: Vec<HalfInt>,
}

impl Coloring {
    pub fn genus(&self) -> usize {
        self.c.len() - 1
    }

    /// True when every `c_i` is an integer.
    pub fn is_integer_branch(&self) -> bool {
        self.c.iter().all(|x| x.is_integer())
    }

    pub fn rotated(&self, k: usize) -> Coloring {
        let mut c = self.c.clone();
        let len = c.len();
        c.rotate_left(k % len);
        Coloring { c, ..*self }
    }

    /// Checks every triple condition from scratch.
    pub fn is_admissible(&self, r: u32) -> bool {
        let (a, b, c) = (self.a, self.b, &self.c);
        if r < 3 || c.len() < 3 {
            return false;
        }
        let max = r - 2;
        if a.doubled() > max || b.doubled() > max || c.iter().any(|x| x.doubled() > max) {
            return false;
        }
        let g = c.len() - 1;
        let ok = |i: HalfInt, j: HalfInt, k: HalfInt| admissible_unchecked(i, j, k, r);
        ok(a, b, b)
            && ok(a, c[g], c[0])
            && ok(b, c[g], c[g])
            && ok(b, c[g], c[0])
            && (0..g).all(|i| ok(a, c[i], c[i + 1]) && ok(b, c[i], c[i]) && ok(b, c[i], c[i + 1]))
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}", self.a, self.b)?;
        for c in &self.c {
            write!(f, ", {c}")?;
        }
        write!(f, ")")
    }
}

fn check_args(g: u32, r: u32) -> Result<()> {
    if g < 2 {
        return Err(Error::InvalidGenus(g));
    }
    if r < 3 {
        return Err(Error::InvalidLevel {
            r,
            s: 0,
            reason: "r must be at least 3",
        });
    }
    Ok(())
}

/// An outer `(a, b)` pair. Colorings with different pairs are disjoint,
/// which makes partitions the unit of parallel work.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    pub a: HalfInt,
    pub b: HalfInt,
}

/// All admissible `(a, b)` pairs in lexicographic order:
/// `a, b` integers with `a/2 <= b <= (r-2-a)/2`.
pub fn partitions(r: u32) -> Result<Vec<Partition>> {
    check_args(2, r)?;
    let r2 = 2 * (r - 2);
    let mut out = Vec::new();
    for a in (0..=r2).step_by(2) {
        for b in (0..=r2).step_by(2) {
            if a <= 2 * b && 2 * b + a <= r2 {
                out.push(Partition {
                    a: HalfInt::from_doubled(a),
                    b: HalfInt::from_doubled(b),
                });
            }
        }
    }
    Ok(out)
}

/// Streams the `c`-chains compatible with a fixed `(a, b)` and parity.
/// Works on doubled values as signed integers so bound arithmetic cannot wrap.
#[derive(Clone, Debug)]
struct ChainWalker {
    a: i64,
    b: i64,
    r2: i64,
    parity: i64,
    cur: Vec<i64>,
    hi: Vec<i64>,
    started: bool,
    done: bool,
}

impl ChainWalker {
    fn new(g: u32, r: u32, part: Partition, parity: i64) -> Self {
        let len = g as usize + 1;
        ChainWalker {
            a: part.a.doubled() as i64,
            b: part.b.doubled() as i64,
            r2: 2 * (r as i64 - 2),
            parity,
            cur: vec![0; len],
            hi: vec![0; len],
            started: false,
            done: false,
        }
    }

    fn align_up(&self, x: i64) -> i64 {
        if x.rem_euclid(2) == self.parity {
            x
        } else {
            x + 1
        }
    }

    fn align_down(&self, x: i64) -> i64 {
        if x.rem_euclid(2) == self.parity {
            x
        } else {
            x - 1
        }
    }

    fn bounds(&self, level: usize) -> (i64, i64) {
        let (a, b, r2) = (self.a, self.b, self.r2);
        let (lo, hi) = if level == 0 {
            (b / 2, (r2 - b) / 2)
        } else {
            let prev = self.cur[level - 1];
            let m = a.min(b);
            (
                (b / 2).max(a - prev).max(prev - m),
                ((r2 - b) / 2).min(r2 - a - prev).min(prev + m),
            )
        };
        (self.align_up(lo), self.align_down(hi))
    }

    fn closes(&self) -> bool {
        let last = *self.cur.last().unwrap();
        let first = self.cur[0];
        self.a - last <= first
            && first <= self.r2 - self.a - last
            && (last - first).abs() <= self.a.min(self.b)
    }

    fn enter(&mut self, level: usize) {
        let (lo, hi) = self.bounds(level);
        self.cur[level] = lo;
        self.hi[level] = hi;
    }

    /// Moves to the next complete chain; false once exhausted.
    fn advance(&mut self) -> bool {
        let top = self.cur.len() - 1;
        let mut level;
        let mut bump;
        if self.started {
            level = top;
            bump = true;
        } else {
            self.started = true;
            self.enter(0);
            level = 0;
            bump = false;
        }
        loop {
            if bump {
                self.cur[level] += 2;
            }
            if self.cur[level] > self.hi[level] {
                if level == 0 {
                    return false;
                }
                level -= 1;
                bump = true;
                continue;
            }
            if level == top {
                if self.closes() {
                    return true;
                }
                bump = true;
                continue;
            }
            level += 1;
            self.enter(level);
            bump = false;
        }
    }

    fn next_chain(&mut self) -> Option<Vec<HalfInt>> {
        if self.done {
            return None;
        }
        if !self.advance() {
            self.done = true;
            return None;
        }
        Some(
            self.cur
                .iter()
                .map(|&x| HalfInt::from_doubled(x as u32))
                .collect(),
        )
    }
}

/// Colorings of one partition: integer `c`-branch first, then half-odd.
#[derive(Clone, Debug)]
pub struct PartitionColorings {
    part: Partition,
    walkers: [ChainWalker; 2],
    branch: usize,
}

impl Iterator for PartitionColorings {
    type Item = Coloring;

    fn next(&mut self) -> Option<Coloring> {
        while self.branch < 2 {
            if let Some(c) = self.walkers[self.branch].next_chain() {
                return Some(Coloring {
                    a: self.part.a,
                    b: self.part.b,
                    c,
                });
            }
            self.branch += 1;
        }
        None
    }
}

pub fn enumerate_partition(g: u32, r: u32, part: Partition) -> Result<PartitionColorings> {
    check_args(g, r)?;
    Ok(PartitionColorings {
        part,
        walkers: [
            ChainWalker::new(g, r, part, 0),
            ChainWalker::new(g, r, part, 1),
        ],
        branch: 0,
    })
}

/// Streaming enumeration of all admissible colorings in deterministic order.
#[derive(Clone, Debug)]
pub struct FastColorings {
    g: u32,
    r: u32,
    parts: std::vec::IntoIter<Partition>,
    current: Option<PartitionColorings>,
}

impl Iterator for FastColorings {
    type Item = Coloring;

    fn next(&mut self) -> Option<Coloring> {
        loop {
            if let Some(col) = self.current.as_mut().and_then(Iterator::next) {
                return Some(col);
            }
            let part = self.parts.next()?;
            self.current = Some(
                enumerate_partition(self.g, self.r, part)
                    .expect("arguments checked at construction"),
            );
        }
    }
}

pub fn enumerate_fast(g: u32, r: u32) -> Result<FastColorings> {
    check_args(g, r)?;
    Ok(FastColorings {
        g,
        r,
        parts: partitions(r)?.into_iter(),
        current: None,
    })
}

pub fn count_admissible(g: u32, r: u32) -> Result<u64> {
    Ok(enumerate_fast(g, r)?.count() as u64)
}

/// Brute-force enumeration over `I_r^(g+3)`, lexicographic in `(a, b, c_0, ..., c_g)`.
#[derive(Clone, Debug)]
pub struct OracleColorings {
    r: u32,
    digits: Vec<u32>,
    done: bool,
}

impl OracleColorings {
    fn current_is_admissible(&self) -> bool {
        let d = &self.digits;
        let h = HalfInt::from_doubled;
        let (a, b, c) = (h(d[0]), h(d[1]), &d[2..]);
        let g = c.len() - 1;
        let ok = |i: HalfInt, j: u32, k: u32| admissible_unchecked(i, h(j), h(k), self.r);
        ok(a, d[1], d[1])
            && ok(a, c[g], c[0])
            && ok(b, c[g], c[g])
            && ok(b, c[g], c[0])
            && (0..g).all(|i| ok(a, c[i], c[i + 1]) && ok(b, c[i], c[i]) && ok(b, c[i], c[i + 1]))
    }

    /// Odometer step, last digit fastest.
    fn step(&mut self) {
        let max = self.r - 2;
        for pos in (0..self.digits.len()).rev() {
            if self.digits[pos] < max {
                self.digits[pos] += 1;
                return;
            }
            self.digits[pos] = 0;
        }
        self.done = true;
    }
}

impl Iterator for OracleColorings {
    type Item = Coloring;

    fn next(&mut self) -> Option<Coloring> {
        while !self.done {
            let hit = self.current_is_admissible().then(|| Coloring {
                a: HalfInt::from_doubled(self.digits[0]),
                b: HalfInt::from_doubled(self.digits[1]),
                c: self.digits[2..]
                    .iter()
                    .map(|&x| HalfInt::from_doubled(x))
                    .collect(),
            });
            self.step();
            if hit.is_some() {
                return hit;
            }
        }
        None
    }
}

pub fn enumerate_oracle(g: u32, r: u32) -> Result<OracleColorings> {
    check_args(g, r)?;
    let size = (r as u128 - 1).checked_pow(g + 3).unwrap_or(u128::MAX);
    if size > ORACLE_LIMIT {
        return Err(Error::EnumerationTooLarge {
            size,
            limit: ORACLE_LIMIT,
        });
    }
    Ok(OracleColorings {
        r,
        digits: vec![0; g as usize + 3],
        done: false,
    })
}
