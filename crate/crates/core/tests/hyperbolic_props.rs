mod common;

use std::f64::consts::PI;

use tvqv::hyperbolic::{
    frigerio_angles, tetrahedron_volume, u_function, volumes, z_plus_minus, TetrahedronAngles,
};
use tvqv::numerics::PrecisionContext;

#[test]
fn u_at_right_angles_and_i() {
    // every argument is i or -1, so U = 2(Li₂(i) − Li₂(−1)) = π²/8 + 2iG
    let ctx = PrecisionContext::new(256).unwrap();
    let half_pi = ctx.pi() / 2u32;
    let t = TetrahedronAngles::regular(&half_pi).unwrap();
    let u = u_function(&ctx.complex(0, 1), &t, &ctx)
        .unwrap()
        .to_f64_pair();
    let li_i = common::dilog_quadrature(common::C64::new(0.0, 1.0));
    let oracle_re = 2.0 * (li_i.re + PI * PI / 12.0);
    let oracle_im = 2.0 * li_i.im;
    assert!((u.0 - oracle_re).abs() < 1e-12);
    assert!((u.1 - oracle_im).abs() < 1e-12);
    assert!((u.0 - PI * PI / 8.0).abs() < 1e-14);
    assert!((u.1 - 2.0 * common::CATALAN).abs() < 1e-14);
}

#[test]
fn roots_are_related_by_a_unimodular_factor() {
    let ctx = PrecisionContext::new(256).unwrap();
    for g in [2, 3, 7] {
        let t = frigerio_angles(g, &ctx).unwrap().tetrahedron();
        let (zp, zm) = z_plus_minus(&t, &ctx).unwrap();
        let (p, m) = (zp.to_f64_pair(), zm.to_f64_pair());
        assert!(p.1 != 0.0 && m.1 != 0.0);
        // z₋ / conj(z₊) lies on the unit circle
        let ratio = zm.div(&zp.conj()).abs().to_f64();
        assert!((ratio - 1.0).abs() < 1e-12, "g={g} |ratio|={ratio}");
    }
}

#[test]
fn tetrahedron_volume_increases_and_saturates() {
    let ctx = PrecisionContext::new(256).unwrap();
    let mut last = 0.0;
    for g in 2..=10 {
        let (tet, _) = volumes(g, &ctx).unwrap();
        let v = tet.to_f64();
        assert!(v > last, "g={g}");
        last = v;
    }
    for g in [20, 100, 500, 1000] {
        let (tet, _) = volumes(g, &ctx).unwrap();
        let v = tet.to_f64();
        assert!(v > 0.0 && v > last && v < 2.5374, "g={g} {v}");
        last = v;
    }
}

#[test]
fn volume_is_stable_under_precision_change() {
    let lo = PrecisionContext::new(128).unwrap();
    let hi = PrecisionContext::new(256).unwrap();
    for g in [2, 3, 10, 1000] {
        let a = tetrahedron_volume(&frigerio_angles(g, &lo).unwrap().tetrahedron(), &lo).unwrap();
        let b = tetrahedron_volume(&frigerio_angles(g, &hi).unwrap().tetrahedron(), &hi).unwrap();
        let rel = ((a - b.clone()) / b).abs().to_f64();
        assert!(rel < 1e-30, "g={g}: {rel:e}");
    }
}
