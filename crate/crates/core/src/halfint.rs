//! Half-integer colors and the admissibility predicate.

use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A non-negative half-integer, stored as twice its value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(u32);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);

    pub const fn from_doubled(doubled: u32) -> Self {
        HalfInt(doubled)
    }

    pub const fn from_int(n: u32) -> Self {
        HalfInt(2 * n)
    }

    pub const fn doubled(self) -> u32 {
        self.0
    }

    pub const fn is_integer(self) -> bool {
        self.0.is_multiple_of(2)
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }

    pub fn checked_sub(self, rhs: HalfInt) -> Option<HalfInt> {
        self.0.checked_sub(rhs.0).map(HalfInt)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    /// Accepts `n`, `n/2` and decimal forms such as `1.5`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse {
            line: 0,
            message: format!("not a non-negative half-integer: {s:?}"),
        };
        if let Some(num) = s.strip_suffix("/2") {
            return num.trim().parse::<u32>().map(HalfInt).map_err(|_| bad());
        }
        if let Ok(n) = s.parse::<u32>() {
            return Ok(HalfInt::from_int(n));
        }
        let x: f64 = s.parse().map_err(|_| bad())?;
        let doubled = 2.0 * x;
        if x < 0.0 || doubled.fract() != 0.0 || doubled > u32::MAX as f64 {
            return Err(bad());
        }
        Ok(HalfInt(doubled as u32))
    }
}

/// The color set `I_r = {0, 1/2, ..., (r-2)/2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorRange {
    r: u32,
    elements: Vec<HalfInt>,
}

impl ColorRange {
    pub fn new(r: u32) -> Result<Self> {
        if r < 3 {
            return Err(Error::InvalidLevel {
                r,
                s: 0,
                reason: "r must be at least 3",
            });
        }
        let elements = (0..=r - 2).map(HalfInt::from_doubled).collect();
        Ok(ColorRange { r, elements })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn elements(&self) -> &[HalfInt] {
        &self.elements
    }

    pub fn max(&self) -> HalfInt {
        HalfInt::from_doubled(self.r - 2)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: HalfInt) -> bool {
        x.doubled() <= self.r - 2
    }
}

fn check_color(x: HalfInt, r: u32) -> Result<()> {
    if r < 2 || x.doubled() > r - 2 {
        return Err(Error::ColorOutOfRange {
            color: x.to_string(),
            r,
        });
    }
    Ok(())
}

/// Triangle inequalities, integral sum and `i + j + k <= r - 2`.
pub fn is_admissible_triple(i: HalfInt, j: HalfInt, k: HalfInt, r: u32) -> Result<bool> {
    check_color(i, r)?;
    check_color(j, r)?;
    check_color(k, r)?;
    Ok(admissible_unchecked(i, j, k, r))
}

#[inline]
pub(crate) fn admissible_unchecked(i: HalfInt, j: HalfInt, k: HalfInt, r: u32) -> bool {
    let (i, j, k) = (i.doubled(), j.doubled(), k.doubled());
    let sum = i + j + k;
    i + j >= k && j + k >= i && k + i >= j && sum % 2 == 0 && sum <= 2 * (r - 2)
}

/// Closed form for triples `(i, i, k)`: `k` integral and `k/2 <= i <= (r-2-k)/2`.
pub fn is_admissible_iik(i: HalfInt, k: HalfInt, r: u32) -> bool {
    let (i, k) = (i.doubled() as i64, k.doubled() as i64);
    let bound = 2 * (r as i64 - 2);
    k % 2 == 0 && k <= 2 * i && 2 * i <= bound - k
}
