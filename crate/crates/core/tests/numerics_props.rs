mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tvqv::numerics::{dilog, principal_sqrt, BigComplex, PrecisionContext};

#[test]
fn inversion_identity_on_the_negative_axis() {
    let ctx = PrecisionContext::new(256).unwrap();
    let tol = ctx.decimal_tolerance(0.28);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let pi = ctx.pi();
    let rhs_const = -(pi.clone() * &pi) / 6u32;
    for _ in 0..100 {
        let x: f64 = -1.0 - rng.gen_range(1e-3..1e3);
        let z = ctx.complex(x, 0);
        let lhs = &dilog(&z, &ctx).unwrap() + &dilog(&z.recip(), &ctx).unwrap();
        let log = (-&z).ln();
        let rhs = &BigComplex::from_real(rhs_const.clone()) - &log.square().scale(&ctx.real(0.5));
        let err = (&lhs - &rhs).abs();
        assert!(err <= tol, "x = {x}: {}", err.to_f64());
    }
}

#[test]
fn matches_quadrature_inside_the_unit_interval() {
    let ctx = PrecisionContext::new(128).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..50 {
        let x: f64 = rng.gen_range(-0.99..0.99);
        let ours = dilog(&ctx.complex(x, 0), &ctx).unwrap();
        let oracle = common::dilog_real_quadrature(x);
        assert!((ours.re.to_f64() - oracle).abs() < 1e-12, "x = {x}");
        assert!(ours.im.is_zero());
    }
}

#[test]
fn matches_quadrature_in_the_complex_disk() {
    let ctx = PrecisionContext::new(128).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..50 {
        let (rad, th): (f64, f64) = (rng.gen_range(0.0..0.98), rng.gen_range(-3.1..3.1));
        let z = common::C64::new(rad * th.cos(), rad * th.sin());
        let ours = dilog(&ctx.complex(z.re, z.im), &ctx).unwrap().to_f64_pair();
        let oracle = common::dilog_quadrature(z);
        assert!(
            (ours.0 - oracle.re).abs() < 1e-11 && (ours.1 - oracle.im).abs() < 1e-11,
            "z = {z:?}"
        );
    }
}

#[test]
fn principal_sqrt_squares_back() {
    let ctx = PrecisionContext::new(256).unwrap();
    let tol = ctx.decimal_tolerance(0.28);
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..200 {
        let x: f64 = rng.gen_range(-1e6..1e6);
        let v = ctx.real(x);
        let root = principal_sqrt(&v);
        assert!(root.re.is_zero() || root.im.is_zero());
        if x < 0.0 {
            assert!(root.im > 0);
        }
        let back = root.square();
        let err = (&back - &BigComplex::from_real(v)).abs();
        assert!(err <= tol.clone() * (1.0 + x.abs()));
    }
}
