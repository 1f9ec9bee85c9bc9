//! The coefficient `b` of the fixed-volume fits grows linearly in the genus.

use tvqv::asymptotics::{fit_affine, fit_fixed_volume};
use tvqv::fixtures;
use tvqv::hyperbolic::manifold_volume;
use tvqv::numerics::PrecisionContext;

fn main() -> tvqv::Result<()> {
    let table = fit_affine(&fixtures::fixed_b_pairs())?;
    println!(
        "from the table:    b(g) = {:.6} g + {:.6}   R² = {:.6}",
        table.slope(),
        table.intercept(),
        table.r_squared.unwrap_or(f64::NAN)
    );

    let ctx = PrecisionContext::new(256)?;
    let mut pairs = Vec::new();
    for g in fixtures::genera() {
        let vol = manifold_volume(g, &ctx)?.to_f64();
        let fit = fit_fixed_volume(&fixtures::qv_series(g, false)?, vol)?;
        pairs.push((g, fit.b));
    }
    let refit = fit_affine(&pairs)?;
    println!(
        "from fresh fits:   b(g) = {:.6} g + {:.6}   R² = {:.6}",
        refit.slope(),
        refit.intercept(),
        refit.r_squared.unwrap_or(f64::NAN)
    );
    for (g, b) in pairs {
        println!(
            "  g = {g}: b = {b:>11.6}, line = {:>11.6}",
            refit.predict(g as f64)
        );
    }
    Ok(())
}
