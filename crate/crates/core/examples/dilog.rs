//! The complex dilogarithm at arbitrary precision.

use tvqv::numerics::{dilog, format_real, BigComplex, PrecisionContext};

fn main() -> tvqv::Result<()> {
    let ctx = PrecisionContext::new(256)?;
    let pi2 = ctx.pi().square();
    let ln2 = ctx.real(2).ln();

    let checks = [
        ("Li2(1)", ctx.real(1), pi2.clone() / 6u32),
        ("Li2(-1)", ctx.real(-1), -(pi2.clone() / 12u32)),
        ("Li2(1/2)", ctx.real(0.5), pi2 / 12u32 - ln2.square() / 2u32),
    ];
    for (name, x, exact) in checks {
        let got = dilog(&BigComplex::from_real(x), &ctx)?;
        let err = (got.re.clone() - &exact).abs();
        println!(
            "{name:>9} = {}  (error {:.1e})",
            format_real(&got.re, 60),
            err.to_f64()
        );
    }

    // Im Li2(e^{iθ}) is the Clausen function; Cl2(π/2) is Catalan's constant.
    let half_pi = ctx.pi() / 2u32;
    let li = dilog(&ctx.cis(&half_pi), &ctx)?;
    println!("Im Li2(i)  = {}", format_real(&li.im, 40));

    for (re, im) in [(0.3, 0.4), (2.0, 1.0), (-5.0, 0.5), (0.5, -0.866)] {
        let v = dilog(&ctx.complex(re, im), &ctx)?;
        println!(
            "Li2({re} + {im}i) = {} + {} i",
            format_real(&v.re, 25),
            format_real(&v.im, 25)
        );
    }
    Ok(())
}
