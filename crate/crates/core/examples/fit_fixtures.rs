//! Asymptotic fits `QV_r ≈ a + b·2π ln(r-2)/(r-2) + c/(r-2)` on the published QV
//! tables, free and with `a` pinned to the hyperbolic volume.
//!
//! ```text
//! cargo run --release --example fit_fixtures -- fits.gp
//! ```

use tvqv::asymptotics::{fit_fixed_volume, fit_free, gnuplot_script};
use tvqv::fixtures::{self, value};
use tvqv::hyperbolic::manifold_volume;
use tvqv::numerics::PrecisionContext;

fn main() -> tvqv::Result<()> {
    let ctx = PrecisionContext::new(256)?;
    let mut all_series = Vec::new();
    let mut all_fits = Vec::new();
    let mut vols = Vec::new();

    println!(
        "{:>2} {:>4} {:>12} {:>13} {:>13} {:>13} {:>13}",
        "g", "rmax", "Vol", "a free", "b free", "b fixed", "c fixed"
    );
    for g in fixtures::genera() {
        let series = fixtures::qv_series(g, false)?;
        let vol = manifold_volume(g, &ctx)?.to_f64();
        let free = fit_free(&series)?;
        let fixed = fit_fixed_volume(&series, vol)?;
        println!(
            "{g:>2} {:>4} {vol:>12.8} {:>13.8} {:>13.8} {:>13.8} {:>13.8}",
            series.r_max().unwrap_or(0),
            free.a,
            free.b,
            fixed.b,
            fixed.c.unwrap_or(f64::NAN),
        );
        if let Some(row) = fixtures::fixed_fit(g) {
            let drift = (fixed.b - value(row.b)).abs() / value(row.b).abs();
            if drift > 1e-4 {
                eprintln!("g = {g}: fixed-volume b differs from the table by {drift:.1e}");
            }
        }
        vols.push((g, vol));
        all_fits.push(free);
        all_series.push(series);
    }

    let anomalous = fixtures::qv_series(2, true)?;
    let with_bad = fit_free(&anomalous)?;
    println!(
        "\nM_2 including the suspect r >= 35 rows: a = {:.6} (far from the volume)",
        with_bad.a
    );

    if let Some(path) = std::env::args().nth(1) {
        std::fs::write(&path, gnuplot_script(&all_series, &all_fits, &vols))?;
        println!("gnuplot script written to {path}");
    }
    Ok(())
}
