//! Volumes of generalized hyperbolic tetrahedra from their dihedral angles,
//! and the Frigerio manifolds `M_g` built from `2g + 2` copies of one tetrahedron.
//!
//! With `a..f = exp(i A..F)` and `G` the Gram matrix of the angles,
//! `Vol = ½ Im(U(z₋) − U(z₊))` where `U` is a signed sum of eight dilogarithms
//! and `z±` are the two stationary points.

use crate::error::{Error, Result};
use crate::numerics::{dilog, principal_sqrt, BigComplex, BigReal, PrecisionContext};

const GUARD_BITS: u32 = 32;

/// Dihedral angles `A, B, C, D, E, F`, where `A/D`, `B/E`, `C/F` sit on opposite edges.
#[derive(Clone, Debug, PartialEq)]
pub struct TetrahedronAngles {
    angles: [BigReal; 6],
}

impl TetrahedronAngles {
    pub fn new(angles: [BigReal; 6]) -> Result<Self> {
        let pi = BigReal::with_val(angles[0].prec(), rug::float::Constant::Pi);
        for x in &angles {
            if x.is_nan() || *x < 0 || *x > pi {
                return Err(Error::AngleOutOfRange(x.to_f64()));
            }
        }
        Ok(TetrahedronAngles { angles })
    }

    pub fn from_f64(angles: [f64; 6], ctx: &PrecisionContext) -> Result<Self> {
        Self::new(angles.map(|x| ctx.real(x)))
    }

    /// All six angles equal to `theta`.
    pub fn regular(theta: &BigReal) -> Result<Self> {
        Self::new(std::array::from_fn(|_| theta.clone()))
    }

    pub fn angles(&self) -> &[BigReal; 6] {
        &self.angles
    }

    fn at_precision(&self, bits: u32) -> [BigReal; 6] {
        self.angles.clone().map(|x| BigReal::with_val(bits, x))
    }
}

fn cos_entries(t: &TetrahedronAngles, bits: u32) -> [BigReal; 6] {
    t.at_precision(bits).map(|x| -x.cos())
}

/// The Gram matrix with rows
/// `[1, -cos A, -cos B, -cos F]`, `[-cos A, 1, -cos C, -cos E]`,
/// `[-cos B, -cos C, 1, -cos D]`, `[-cos F, -cos E, -cos D, 1]`.
pub fn gram_matrix(t: &TetrahedronAngles, ctx: &PrecisionContext) -> [[BigReal; 4]; 4] {
    let [a, b, c, d, e, f] = cos_entries(t, ctx.bits());
    let one = ctx.one();
    [
        [one.clone(), a.clone(), b.clone(), f.clone()],
        [a, one.clone(), c.clone(), e.clone()],
        [b, c, one.clone(), d.clone()],
        [f, e, d, one],
    ]
}

fn det3(m: &[[BigReal; 4]; 4], rows: [usize; 3], cols: [usize; 3], bits: u32) -> BigReal {
    let e = |i: usize, j: usize| &m[rows[i]][cols[j]];
    let minor = |i0: usize, i1: usize, j0: usize, j1: usize| {
        BigReal::with_val(bits, e(i0, j0) * e(i1, j1))
            - BigReal::with_val(bits, e(i0, j1) * e(i1, j0))
    };
    let mut acc = BigReal::with_val(bits, e(0, 0) * &minor(1, 2, 1, 2));
    acc -= BigReal::with_val(bits, e(0, 1) * &minor(1, 2, 0, 2));
    acc += BigReal::with_val(bits, e(0, 2) * &minor(1, 2, 0, 1));
    acc
}

/// `det G` by cofactor expansion along the first row.
pub fn gram_det(t: &TetrahedronAngles, ctx: &PrecisionContext) -> BigReal {
    let wide = ctx.widened(GUARD_BITS);
    let m = gram_matrix(t, &wide);
    let bits = wide.bits();
    let mut acc = wide.zero();
    for j in 0..4 {
        let cols: Vec<usize> = (0..4).filter(|&c| c != j).collect();
        let minor = det3(&m, [1, 2, 3], [cols[0], cols[1], cols[2]], bits);
        let term = BigReal::with_val(bits, &m[0][j] * &minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    BigReal::with_val(ctx.bits(), acc)
}

/// `exp(i θ)` for the six angles.
fn unit_points(t: &TetrahedronAngles, ctx: &PrecisionContext) -> [BigComplex; 6] {
    t.at_precision(ctx.bits()).map(|x| ctx.cis(&x))
}

fn product(factors: &[&BigComplex]) -> BigComplex {
    let mut it = factors.iter();
    let mut acc = (*it.next().unwrap()).clone();
    for f in it {
        acc = &acc * f;
    }
    acc
}

fn u_at(z: &BigComplex, e: &[BigComplex; 6], ctx: &PrecisionContext) -> Result<BigComplex> {
    let [a, b, c, d, ee, f] = e;
    let plus = [
        z.clone(),
        product(&[a, b, d, ee, z]),
        product(&[a, c, d, f, z]),
        product(&[b, c, ee, f, z]),
    ];
    let minus = [
        -product(&[a, b, c, z]),
        -product(&[a, ee, f, z]),
        -product(&[b, d, f, z]),
        -product(&[c, d, ee, z]),
    ];
    let mut acc = ctx.complex_zero();
    for w in &plus {
        acc = &acc + &dilog(w, ctx)?;
    }
    for w in &minus {
        acc = &acc - &dilog(w, ctx)?;
    }
    let half = ctx.real(0.5);
    Ok(acc.scale(&half))
}

/// `U(z, T) = ½(Li₂(z) + Li₂(abdez) + Li₂(acdfz) + Li₂(bcefz)
///            − Li₂(−abcz) − Li₂(−aefz) − Li₂(−bdfz) − Li₂(−cdez))`.
pub fn u_function(
    z: &BigComplex,
    t: &TetrahedronAngles,
    ctx: &PrecisionContext,
) -> Result<BigComplex> {
    let wide = ctx.widened(GUARD_BITS);
    let e = unit_points(t, &wide);
    let u = u_at(&z.with_prec(wide.bits()), &e, &wide)?;
    Ok(u.with_prec(ctx.bits()))
}

fn z_pair(t: &TetrahedronAngles, ctx: &PrecisionContext) -> Result<(BigComplex, BigComplex)> {
    let bits = ctx.bits();
    let [sa, sb, sc, sd, se, sf] = t.at_precision(bits).map(|x| x.sin());
    let mut sines = BigReal::with_val(bits, &sa * &sd);
    sines += BigReal::with_val(bits, &sb * &se);
    sines += BigReal::with_val(bits, &sc * &sf);
    let root = principal_sqrt(&gram_det(t, ctx));
    let e = unit_points(t, ctx);
    let [a, b, c, d, ee, f] = &e;
    let terms = [
        product(&[a, d]),
        product(&[b, ee]),
        product(&[c, f]),
        product(&[a, b, f]),
        product(&[a, c, ee]),
        product(&[b, c, d]),
        product(&[d, ee, f]),
        product(&[a, b, c, d, ee, f]),
    ];
    let mut den = ctx.complex_zero();
    for x in &terms {
        den = &den + x;
    }
    let scale = ctx.epsilon_pow2(bits / 2);
    if den.abs() <= scale {
        return Err(Error::DegenerateTetrahedron("z± denominator vanishes"));
    }
    let base = BigComplex::from_real(sines);
    let minus_two = ctx.real(-2);
    let z_plus = (&base + &root).scale(&minus_two).div(&den);
    let z_minus = (&base - &root).scale(&minus_two).div(&den);
    Ok((z_plus, z_minus))
}

/// `z± = −2(sin A sin D + sin B sin E + sin C sin F ± √det G) / (ad + be + cf + abf + ace + bcd + def + abcdef)`.
pub fn z_plus_minus(
    t: &TetrahedronAngles,
    ctx: &PrecisionContext,
) -> Result<(BigComplex, BigComplex)> {
    let wide = ctx.widened(GUARD_BITS);
    let (p, m) = z_pair(t, &wide)?;
    Ok((p.with_prec(ctx.bits()), m.with_prec(ctx.bits())))
}

/// `½ Im(U(z₋) − U(z₊))`.
pub fn tetrahedron_volume(t: &TetrahedronAngles, ctx: &PrecisionContext) -> Result<BigReal> {
    let wide = ctx.widened(GUARD_BITS);
    let (z_plus, z_minus) = z_pair(t, &wide)?;
    let e = unit_points(t, &wide);
    let diff = &u_at(&z_minus, &e, &wide)? - &u_at(&z_plus, &e, &wide)?;
    let vol = diff.im / 2u32;
    Ok(BigReal::with_val(ctx.bits(), vol))
}

/// The angle structure on `T_g`: `α = π/(2g+2)`, `β = 2α`,
/// `γ = arccos(1/(2 cos α))`, `δ = π − 2γ`.
#[derive(Clone, Debug, PartialEq)]
pub struct FrigerioAngles {
    pub g: u32,
    pub alpha: BigReal,
    pub beta: BigReal,
    pub gamma: BigReal,
    pub delta: BigReal,
}

impl FrigerioAngles {
    /// The tetrahedron `(γ, δ, γ, α, β, α)`.
    pub fn tetrahedron(&self) -> TetrahedronAngles {
        TetrahedronAngles {
            angles: [
                self.gamma.clone(),
                self.delta.clone(),
                self.gamma.clone(),
                self.alpha.clone(),
                self.beta.clone(),
                self.alpha.clone(),
            ],
        }
    }
}

pub fn frigerio_angles(g: u32, ctx: &PrecisionContext) -> Result<FrigerioAngles> {
    if g < 2 {
        return Err(Error::InvalidGenus(g));
    }
    let bits = ctx.bits();
    let pi = ctx.pi();
    let alpha = BigReal::with_val(bits, &pi / (2 * g + 2));
    let beta = BigReal::with_val(bits, &alpha * 2u32);
    let two_cos = BigReal::with_val(bits, alpha.cos_ref()) * 2u32;
    let gamma = two_cos.recip().acos();
    let delta = pi - BigReal::with_val(bits, &gamma * 2u32);
    Ok(FrigerioAngles {
        g,
        alpha,
        beta,
        gamma,
        delta,
    })
}

/// `(Vol(T_g), Vol(M_g))`.
pub fn volumes(g: u32, ctx: &PrecisionContext) -> Result<(BigReal, BigReal)> {
    let tet = tetrahedron_volume(&frigerio_angles(g, ctx)?.tetrahedron(), ctx)?;
    let manifold = BigReal::with_val(ctx.bits(), &tet * (2 * g + 2));
    Ok((tet, manifold))
}

pub fn manifold_volume(g: u32, ctx: &PrecisionContext) -> Result<BigReal> {
    volumes(g, ctx).map(|(_, m)| m)
}
