//! Multi-precision real and complex scalars on top of MPFR.
//!
//! Every quantity in the crate is carried as a [`BigReal`] (an MPFR float) or a
//! [`BigComplex`] built from two of them. A [`PrecisionContext`] fixes the
//! mantissa width used for everything created under it.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;

use crate::error::{Error, Result};

pub type BigReal = Float;

/// Default mantissa width in bits.
pub const DEFAULT_PRECISION: u32 = 256;

/// Binary precision shared by all scalars of one computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrecisionContext {
    bits: u32,
}

impl Default for PrecisionContext {
    fn default() -> Self {
        PrecisionContext {
            bits: DEFAULT_PRECISION,
        }
    }
}

impl PrecisionContext {
    pub fn new(bits: u32) -> Result<Self> {
        if bits < 64 {
            return Err(Error::PrecisionTooLow(bits));
        }
        Ok(PrecisionContext { bits })
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// A context with `extra` guard bits, used for intermediate steps.
    pub fn widened(&self, extra: u32) -> PrecisionContext {
        PrecisionContext {
            bits: self.bits + extra,
        }
    }

    pub fn real<T>(&self, value: T) -> BigReal
    where
        Float: rug::Assign<T>,
    {
        Float::with_val(self.bits, value)
    }

    pub fn zero(&self) -> BigReal {
        Float::new(self.bits)
    }

    pub fn one(&self) -> BigReal {
        Float::with_val(self.bits, 1)
    }

    pub fn pi(&self) -> BigReal {
        Float::with_val(self.bits, Constant::Pi)
    }

    pub fn complex<R, I>(&self, re: R, im: I) -> BigComplex
    where
        Float: rug::Assign<R> + rug::Assign<I>,
    {
        BigComplex {
            re: Float::with_val(self.bits, re),
            im: Float::with_val(self.bits, im),
        }
    }

    pub fn complex_zero(&self) -> BigComplex {
        self.complex(0, 0)
    }

    pub fn complex_one(&self) -> BigComplex {
        self.complex(1, 0)
    }

    /// `exp(i * theta)`.
    pub fn cis(&self, theta: &BigReal) -> BigComplex {
        let (sin, cos) = theta.clone().sin_cos(Float::new(self.bits));
        BigComplex {
            re: Float::with_val(self.bits, cos),
            im: Float::with_val(self.bits, sin),
        }
    }

    /// `2^(-k)`, the usual absolute threshold for "negligible" at this precision.
    pub fn epsilon_pow2(&self, k: u32) -> BigReal {
        Float::with_val(self.bits, Float::i_exp(1, -(k as i32)))
    }

    /// `10^(-(fraction * bits))`, the tolerance form used by the invariant checks.
    pub fn decimal_tolerance(&self, fraction: f64) -> BigReal {
        let exponent = -(fraction * self.bits as f64);
        let ten = Float::with_val(self.bits, 10);
        Float::with_val(self.bits, ten.pow(Float::with_val(self.bits, exponent)))
    }
}

/// Complex number with MPFR real and imaginary parts of equal precision.
#[derive(Clone, Debug, PartialEq)]
pub struct BigComplex {
    pub re: BigReal,
    pub im: BigReal,
}

impl BigComplex {
    pub fn from_real(re: BigReal) -> Self {
        let im = Float::new(re.prec());
        BigComplex { re, im }
    }

    pub fn from_imag(im: BigReal) -> Self {
        let re = Float::new(im.prec());
        BigComplex { re, im }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn with_prec(&self, bits: u32) -> BigComplex {
        BigComplex {
            re: Float::with_val(bits, &self.re),
            im: Float::with_val(bits, &self.im),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> BigComplex {
        BigComplex {
            re: self.re.clone(),
            im: Float::with_val(self.im.prec(), -&self.im),
        }
    }

    pub fn norm_sqr(&self) -> BigReal {
        let p = self.prec();
        Float::with_val(p, &self.re * &self.re + &self.im * &self.im)
    }

    pub fn abs(&self) -> BigReal {
        Float::with_val(self.prec(), self.re.hypot_ref(&self.im))
    }

    /// Principal argument in (-pi, pi].
    pub fn arg(&self) -> BigReal {
        Float::with_val(self.prec(), self.im.atan2_ref(&self.re))
    }

    /// Argument in [0, 2*pi).
    pub fn arg_nonnegative(&self) -> BigReal {
        let p = self.prec();
        let arg = self.arg();
        if arg.is_sign_negative() && !arg.is_zero() {
            let two_pi = Float::with_val(p, Constant::Pi) * 2u32;
            Float::with_val(p, arg + two_pi)
        } else {
            arg
        }
    }

    /// Principal logarithm, imaginary part in (-pi, pi].
    pub fn ln(&self) -> BigComplex {
        let p = self.prec();
        BigComplex {
            re: Float::with_val(p, self.abs().ln_ref()),
            im: self.arg(),
        }
    }

    /// Logarithm whose imaginary part lies in [0, 2*pi).
    pub fn ln_nonnegative_arg(&self) -> BigComplex {
        let p = self.prec();
        BigComplex {
            re: Float::with_val(p, self.abs().ln_ref()),
            im: self.arg_nonnegative(),
        }
    }

    pub fn exp(&self) -> BigComplex {
        let p = self.prec();
        let modulus = Float::with_val(p, self.re.exp_ref());
        let (sin, cos) = self.im.clone().sin_cos(Float::new(p));
        BigComplex {
            re: Float::with_val(p, &modulus * &cos),
            im: Float::with_val(p, &modulus * &sin),
        }
    }

    pub fn square(&self) -> BigComplex {
        self * self
    }

    pub fn recip(&self) -> BigComplex {
        let p = self.prec();
        let n = self.norm_sqr();
        BigComplex {
            re: Float::with_val(p, &self.re / &n),
            im: Float::with_val(p, -Float::with_val(p, &self.im / &n)),
        }
    }

    pub fn div(&self, rhs: &BigComplex) -> BigComplex {
        let p = self.prec();
        let n = rhs.norm_sqr();
        let re = Float::with_val(p, &self.re * &rhs.re + &self.im * &rhs.im);
        let im = Float::with_val(p, &self.im * &rhs.re - &self.re * &rhs.im);
        BigComplex {
            re: Float::with_val(p, re / &n),
            im: Float::with_val(p, im / &n),
        }
    }

    pub fn scale(&self, k: &BigReal) -> BigComplex {
        let p = self.prec();
        BigComplex {
            re: Float::with_val(p, &self.re * k),
            im: Float::with_val(p, &self.im * k),
        }
    }

    /// Multiply by `i^k`.
    pub fn mul_i_pow(&self, k: u32) -> BigComplex {
        match k % 4 {
            0 => self.clone(),
            1 => BigComplex {
                re: Float::with_val(self.im.prec(), -&self.im),
                im: self.re.clone(),
            },
            2 => -self,
            _ => BigComplex {
                re: self.im.clone(),
                im: Float::with_val(self.re.prec(), -&self.re),
            },
        }
    }

    /// Cheap magnitude bound: the larger binary exponent of the two parts.
    pub fn exponent_bound(&self) -> Option<i32> {
        match (self.re.get_exp(), self.im.get_exp()) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        }
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl fmt::Display for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_sign_negative() {
            write!(
                f,
                "{} - {}i",
                self.re,
                Float::with_val(self.im.prec(), -&self.im)
            )
        } else {
            write!(f, "{} + {}i", self.re, self.im)
        }
    }
}

impl<'a> Add<&'a BigComplex> for &'a BigComplex {
    type Output = BigComplex;
    fn add(self, rhs: &'a BigComplex) -> BigComplex {
        let p = self.prec();
        BigComplex {
            re: Float::with_val(p, &self.re + &rhs.re),
            im: Float::with_val(p, &self.im + &rhs.im),
        }
    }
}

impl<'a> Sub<&'a BigComplex> for &'a BigComplex {
    type Output = BigComplex;
    fn sub(self, rhs: &'a BigComplex) -> BigComplex {
        let p = self.prec();
        BigComplex {
            re: Float::with_val(p, &self.re - &rhs.re),
            im: Float::with_val(p, &self.im - &rhs.im),
        }
    }
}

impl<'a> Mul<&'a BigComplex> for &'a BigComplex {
    type Output = BigComplex;
    fn mul(self, rhs: &'a BigComplex) -> BigComplex {
        let p = self.prec();
        BigComplex {
            re: Float::with_val(p, &self.re * &rhs.re - &self.im * &rhs.im),
            im: Float::with_val(p, &self.re * &rhs.im + &self.im * &rhs.re),
        }
    }
}

impl Neg for &BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex {
            re: Float::with_val(self.re.prec(), -&self.re),
            im: Float::with_val(self.im.prec(), -&self.im),
        }
    }
}

impl Add for BigComplex {
    type Output = BigComplex;
    fn add(self, rhs: BigComplex) -> BigComplex {
        &self + &rhs
    }
}

impl Sub for BigComplex {
    type Output = BigComplex;
    fn sub(self, rhs: BigComplex) -> BigComplex {
        &self - &rhs
    }
}

impl Mul for BigComplex {
    type Output = BigComplex;
    fn mul(self, rhs: BigComplex) -> BigComplex {
        &self * &rhs
    }
}

impl Neg for BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        -&self
    }
}

/// Square root with the convention `sqrt(-x) = i*sqrt(x)` for `x >= 0`.
pub fn principal_sqrt(x: &BigReal) -> BigComplex {
    let p = x.prec();
    if x.is_sign_negative() && !x.is_zero() {
        let magnitude = Float::with_val(p, -x);
        BigComplex::from_imag(magnitude.sqrt())
    } else {
        BigComplex::from_real(Float::with_val(p, x.sqrt_ref()))
    }
}

/// Dilogarithm `Li2(z)` on the principal branch with cut `[1, +inf)`.
///
/// Arguments with `|z| > 1` are inverted, points with `Re z > 1/2` are
/// reflected through `z -> 1 - z`. What remains is summed either as the plain
/// power series (when `|z| <= 1/2`) or as the Bernoulli series in
/// `-ln(1 - z)`, which converges geometrically on the whole closed unit disc
/// with `Re z <= 1/2` (the power series alone stalls on the unit circle near
/// `exp(±i*pi/3)`, where neither map shrinks the modulus).
pub fn dilog(z: &BigComplex, ctx: &PrecisionContext) -> Result<BigComplex> {
    let work = ctx.widened(32);
    let wp = work.bits();
    let z = z.with_prec(wp);

    let cut_tol = ctx.epsilon_pow2(ctx.bits() / 2);
    let one_plus_tol = Float::with_val(wp, &cut_tol + 1u32);
    if z.im.cmp_abs(&cut_tol) != Some(Ordering::Greater) && z.re > one_plus_tol {
        return Err(Error::DilogBranchCut {
            re: z.re.to_f64(),
            im: z.im.to_f64(),
        });
    }

    let value = if z.is_zero() {
        work.complex_zero()
    } else if z.re == 1u32 && z.im.is_zero() {
        zeta2(&work)
    } else if z.norm_sqr() > 1u32 {
        // Li2(z) = -pi^2/6 - ln(-z)^2/2 - Li2(1/z)
        let log_neg = (-&z).ln();
        let half_sq = log_neg.square().scale(&Float::with_val(wp, 0.5));
        let inner = dilog_unit_disc(&z.recip(), &work);
        let mut out = -&(&half_sq + &inner);
        out.re -= zeta2(&work).re;
        out
    } else {
        dilog_unit_disc(&z, &work)
    };
    Ok(value.with_prec(ctx.bits()))
}

fn zeta2(ctx: &PrecisionContext) -> BigComplex {
    let pi = ctx.pi();
    BigComplex::from_real(Float::with_val(ctx.bits(), pi.square_ref()) / 6u32)
}

// |z| <= 1, z != 1 unless exactly 1.
fn dilog_unit_disc(z: &BigComplex, ctx: &PrecisionContext) -> BigComplex {
    let p = ctx.bits();
    let one = ctx.complex_one();
    let w = &one - z;
    if w.is_zero() {
        return zeta2(ctx);
    }
    if z.re > 0.5f64 {
        // Li2(z) = pi^2/6 - ln(z) ln(1-z) - Li2(1-z)
        let prod = &z.ln() * &w.ln();
        let inner = dilog_core(&w, ctx);
        let mut out = -&(&prod + &inner);
        out.re += zeta2(ctx).re;
        out.with_prec(p)
    } else {
        dilog_core(z, ctx)
    }
}

// |z| <= 1 and Re z <= 1/2.
fn dilog_core(z: &BigComplex, ctx: &PrecisionContext) -> BigComplex {
    if z.norm_sqr() <= 0.25f64 {
        dilog_power_series(z, ctx)
    } else {
        dilog_bernoulli_series(z, ctx)
    }
}

fn dilog_power_series(z: &BigComplex, ctx: &PrecisionContext) -> BigComplex {
    let p = ctx.bits();
    let threshold = -(p as i32) - 8;
    let mut sum = z.clone();
    let mut power = z.clone();
    let mut k: u64 = 2;
    loop {
        power = &power * z;
        let denom = Float::with_val(p, k * k);
        let term = BigComplex {
            re: Float::with_val(p, &power.re / &denom),
            im: Float::with_val(p, &power.im / &denom),
        };
        match term.exponent_bound() {
            None => break,
            Some(e) if e < threshold => break,
            _ => {}
        }
        sum = &sum + &term;
        k += 1;
    }
    sum
}

// Li2(z) = sum_{n>=0} B_n u^(n+1) / (n+1)!,  u = -ln(1 - z),
// with B_{2k}/(2k+1)! = (-1)^(k+1) 2 zeta(2k) / ((2k+1) (2 pi)^(2k)).
fn dilog_bernoulli_series(z: &BigComplex, ctx: &PrecisionContext) -> BigComplex {
    let p = ctx.bits();
    let threshold = -(p as i32) - 8;
    let one = ctx.complex_one();
    let u = -&(&one - z).ln();
    let u2 = u.square();

    let quarter = Float::with_val(p, 0.25);
    let mut sum = &u - &u2.scale(&quarter);

    let two_pi = Float::with_val(p, Constant::Pi) * 2u32;
    let inv_two_pi_sq = Float::with_val(p, two_pi.square_ref()).recip();
    let mut scale = inv_two_pi_sq.clone();
    let mut power = &u * &u2;
    let mut k: u32 = 1;
    loop {
        let zeta = Float::with_val(p, Float::zeta_u(2 * k));
        let mut coeff = Float::with_val(p, &zeta * &scale) * 2u32;
        coeff /= 2 * k + 1;
        if k.is_multiple_of(2) {
            coeff = -coeff;
        }
        let term = power.scale(&coeff);
        match term.exponent_bound() {
            None => break,
            Some(e) if e < threshold => break,
            _ => {}
        }
        sum = &sum + &term;
        power = &power * &u2;
        scale *= &inv_two_pi_sq;
        k += 1;
    }
    sum
}

/// Format a real with `digits` significant decimal digits.
pub fn format_real(x: &BigReal, digits: usize) -> String {
    x.to_string_radix(10, Some(digits.max(1)))
}
