//! Double-precision reference implementations, written from the defining
//! formulas without touching the library's multiprecision code paths.

#![allow(dead_code)]

use std::f64::consts::PI;

pub const CATALAN: f64 = 0.915_965_594_177_219;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct C64 {
    pub re: f64,
    pub im: f64,
}

impl C64 {
    pub fn new(re: f64, im: f64) -> Self {
        C64 { re, im }
    }
    pub fn add(self, o: C64) -> C64 {
        C64::new(self.re + o.re, self.im + o.im)
    }
    pub fn sub(self, o: C64) -> C64 {
        C64::new(self.re - o.re, self.im - o.im)
    }
    pub fn mul(self, o: C64) -> C64 {
        C64::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
    pub fn scale(self, k: f64) -> C64 {
        C64::new(self.re * k, self.im * k)
    }
    pub fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }
    pub fn ln(self) -> C64 {
        C64::new(self.abs().ln(), self.im.atan2(self.re))
    }
    pub fn div_real(self, k: f64) -> C64 {
        C64::new(self.re / k, self.im / k)
    }
}

/// `[n] = sin(n s π / r) / sin(s π / r)`.
pub fn qnum(r: u32, s: u32, n: u32) -> f64 {
    (n as f64 * s as f64 * PI / r as f64).sin() / (s as f64 * PI / r as f64).sin()
}

pub fn qfact(r: u32, s: u32, n: u32) -> f64 {
    (1..=n).map(|k| qnum(r, s, k)).product()
}

/// Square root with `sqrt(-x) = i sqrt(x)`.
fn sqrt_signed(x: f64) -> C64 {
    if x >= 0.0 {
        C64::new(x.sqrt(), 0.0)
    } else {
        C64::new(0.0, (-x).sqrt())
    }
}

/// Δ for doubled colors.
pub fn delta(r: u32, s: u32, i: u32, j: u32, k: u32) -> C64 {
    let f = |x: u32| qfact(r, s, x / 2);
    sqrt_signed(f(i + j - k) * f(i + k - j) * f(j + k - i) / f(i + j + k + 2))
}

/// The 6j symbol for doubled colors `[i, j, k, l, m, n]`, straight from its definition.
pub fn sixj(r: u32, s: u32, t: [u32; 6]) -> C64 {
    let [i, j, k, l, m, n] = t;
    let tri = [i + j + k, j + l + n, i + m + n, k + l + m].map(|x| x / 2);
    let quad = [i + j + l + m, i + k + l + n, j + k + m + n].map(|x| x / 2);
    let lo = *tri.iter().max().unwrap();
    let hi = *quad.iter().min().unwrap();
    let mut sum = 0.0;
    for z in lo..=hi {
        let mut den = 1.0;
        for tv in tri {
            den *= qfact(r, s, z - tv);
        }
        for qv in quad {
            den *= qfact(r, s, qv - z);
        }
        let sign = if z % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * qfact(r, s, z + 1) / den;
    }
    let pre = delta(r, s, i, j, k)
        .mul(delta(r, s, j, l, n))
        .mul(delta(r, s, i, m, n))
        .mul(delta(r, s, k, l, m));
    let i_pow = match (i + j + k + l + m + n) % 4 {
        0 => C64::new(1.0, 0.0),
        1 => C64::new(0.0, 1.0),
        2 => C64::new(-1.0, 0.0),
        _ => C64::new(0.0, -1.0),
    };
    pre.scale(sum).mul(i_pow)
}

pub fn edge_weight(r: u32, s: u32, doubled: u32) -> f64 {
    let sign = if doubled.is_multiple_of(2) { 1.0 } else { -1.0 };
    sign * qnum(r, s, doubled + 1)
}

/// Triangle, parity and level conditions on doubled colors.
pub fn admissible(r: u32, i: u32, j: u32, k: u32) -> bool {
    i + j >= k
        && j + k >= i
        && i + k >= j
        && (i + j + k).is_multiple_of(2)
        && i + j + k <= 2 * (r - 2)
}

/// Tanh-sinh quadrature of `f` over `[0, 1]`.
fn tanh_sinh<F: Fn(f64) -> C64>(f: F) -> C64 {
    let h = 1.0 / 128.0;
    let mut acc = C64::new(0.0, 0.0);
    let mut k = -(6.0 / h) as i64;
    while (k as f64) * h <= 6.0 {
        let u = k as f64 * h;
        let s = 0.5 * PI * u.sinh();
        let (th, ch) = (s.tanh(), s.cosh());
        let t = 0.5 * (1.0 + th);
        let w = 0.25 * PI * u.cosh() / (ch * ch);
        if t > 0.0 && t < 1.0 && w > 0.0 {
            acc = acc.add(f(t).scale(w));
        }
        k += 1;
    }
    acc.scale(h)
}

/// `Li₂(z) = −∫₀¹ ln(1 − z t)/t dt` by quadrature (`z` off `[1, ∞)`).
pub fn dilog_quadrature(z: C64) -> C64 {
    tanh_sinh(|t: f64| {
        C64::new(1.0 - z.re * t, -z.im * t)
            .ln()
            .div_real(t)
            .scale(-1.0)
    })
}

/// `Li₂(x) = −∫₀^x ln(1 − t)/t dt` for real `x ∈ (−1, 1)`.
pub fn dilog_real_quadrature(x: f64) -> f64 {
    dilog_quadrature(C64::new(x, 0.0)).re
}
