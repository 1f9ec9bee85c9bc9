//! Acceptance report: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tvqv::asymptotics::{fit_affine, fit_fixed_volume, fit_free};
use tvqv::coloring::{enumerate_fast, enumerate_oracle, Coloring};
use tvqv::fixtures::{self, value};
use tvqv::halfint::{is_admissible_triple, HalfInt};
use tvqv::hyperbolic::volumes;
use tvqv::numerics::{dilog, BigReal, PrecisionContext};
use tvqv::sixj::{symmetry_images, CacheMode, Level};
use tvqv::turaev_viro::{tv_invariant_with, Arrangement, TvOptions};

const BITS: u32 = 256;

struct Report {
    failures: usize,
}

impl Report {
    fn record(&mut self, id: u32, ok: bool, detail: String) {
        if !ok {
            self.failures += 1;
        }
        println!(
            "{} criterion {id}: {detail}",
            if ok { "PASS" } else { "FAIL" }
        );
    }
}

fn ctx() -> PrecisionContext {
    PrecisionContext::new(BITS).unwrap()
}

fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn tv(g: u32, r: u32, opts: &TvOptions) -> tvqv::turaev_viro::TvResult {
    tv_invariant_with(g, r, 2, ctx(), opts).unwrap()
}

fn volumes_match(report: &mut Report) {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for row in fixtures::VOLUMES {
        let (tet, man) = volumes(row.g, &ctx()).unwrap();
        worst = worst
            .max(rel_err(tet.to_f64(), value(row.tetrahedron)))
            .max(rel_err(man.to_f64(), value(row.manifold)));
    }
    let secs = start.elapsed().as_secs_f64();
    report.record(
        1,
        worst <= 1e-12 && secs < 5.0,
        format!(
            "volumes for {} genera, max rel err {worst:.2e}, {secs:.2} s",
            fixtures::VOLUMES.len()
        ),
    );
}

fn reference_cases() -> Vec<(u32, u32)> {
    let mut cases: Vec<(u32, u32)> = (5..=15).step_by(2).map(|r| (2, r)).collect();
    cases.extend([5, 7, 9, 11].map(|r| (3, r)));
    cases.extend((4..=7).map(|g| (g, 5)));
    cases
}

fn qv_matches(report: &mut Report) {
    let start = Instant::now();
    let cases = reference_cases();
    let mut worst = 0.0f64;
    for &(g, r) in &cases {
        let res = tv(g, r, &TvOptions::default());
        let qv = res.qv.unwrap().re.to_f64();
        worst = worst.max((qv - value(fixtures::qv_value(g, r).unwrap().qv)).abs());
    }
    let secs = start.elapsed().as_secs_f64();
    report.record(
        2,
        worst <= 1e-10 && secs < 600.0,
        format!(
            "{} QV values, max abs err {worst:.2e}, {secs:.2} s serial at {BITS} bits",
            cases.len()
        ),
    );
}

fn enumerators_agree(report: &mut Report) {
    let start = Instant::now();
    let mut mismatches = Vec::new();
    let mut total = 0usize;
    for g in [2, 3] {
        for r in 3..=9 {
            let mut fast: Vec<Coloring> = enumerate_fast(g, r).unwrap().collect();
            let mut slow: Vec<Coloring> = enumerate_oracle(g, r).unwrap().collect();
            total += fast.len();
            fast.sort();
            slow.sort();
            if fast != slow {
                mismatches.push((g, r));
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    report.record(
        3,
        mismatches.is_empty() && secs < 120.0,
        format!("fast and brute-force colorings equal on 14 cases ({total} colorings), mismatches {mismatches:?}, {secs:.2} s"),
    );
}

fn imaginary_parts_vanish(report: &mut Report) {
    let mut worst = 0.0f64;
    for (g, r_max) in [(2u32, 15u32), (3, 11), (4, 7), (5, 7)] {
        for r in (5..=r_max).step_by(2) {
            worst = worst.max(tv(g, r, &TvOptions::default()).imaginary_ratio());
        }
    }
    report.record(
        4,
        worst <= 1e-40,
        format!("max |Im TV|/(1+|Re TV|) = {worst:.2e}"),
    );
}

fn fits_reproduce(report: &mut Report) {
    let start = Instant::now();
    let mut worst_full = 0.0f64;
    for row in fixtures::FREE_FITS_FULL {
        let fit = fit_free(&fixtures::qv_series(row.g, false).unwrap()).unwrap();
        for (got, want) in [(fit.a, row.a), (fit.b, row.b), (fit.c.unwrap(), row.c)] {
            worst_full = worst_full.max(rel_err(got, value(want)));
        }
    }
    let mut worst_free = 0.0f64;
    let mut worst_fixed = 0.0f64;
    for g in 4..=7 {
        let series = fixtures::qv_series(g, false).unwrap();
        let free = fit_free(&series).unwrap();
        let row = fixtures::free_fit(g).unwrap();
        for (got, want) in [(free.a, row.a), (free.b, row.b), (free.c.unwrap(), row.c)] {
            worst_free = worst_free.max(rel_err(got, value(want)));
        }
        let row = fixtures::fixed_fit(g).unwrap();
        let fixed =
            fit_fixed_volume(&series, value(fixtures::volume(g).unwrap().manifold)).unwrap();
        for (got, want) in [(fixed.b, row.b), (fixed.c.unwrap(), row.c)] {
            worst_fixed = worst_fixed.max(rel_err(got, value(want)));
        }
    }
    let secs = start.elapsed().as_secs_f64();
    report.record(
        5,
        worst_full <= 1e-6 && worst_free <= 1e-4 && worst_fixed <= 1e-4 && secs < 1.0,
        format!(
            "fit rel errs: g=2,3 full {worst_full:.2e}; g=4..7 free {worst_free:.2e}, fixed {worst_fixed:.2e}; {secs:.3} s"
        ),
    );
}

fn affine_law(report: &mut Report) {
    let fit = fit_affine(&fixtures::fixed_b_pairs()).unwrap();
    let r2 = fit.r_squared.unwrap();
    let ok = (fit.slope() + 1.068).abs() <= 0.005
        && (fit.intercept() - 0.9061).abs() <= 0.005
        && (r2 - 0.9967).abs() <= 0.0005;
    report.record(
        6,
        ok,
        format!(
            "b(g) slope {:.6}, intercept {:.6}, R² {r2:.6}",
            fit.slope(),
            fit.intercept()
        ),
    );
}

fn random_symbol(rng: &mut ChaCha8Rng, r: u32) -> [HalfInt; 6] {
    loop {
        let t: [HalfInt; 6] =
            std::array::from_fn(|_| HalfInt::from_doubled(rng.gen_range(0..=r - 2)));
        let [i, j, k, l, m, n] = t;
        let ok = [(i, j, k), (j, l, n), (i, m, n), (k, l, m)]
            .iter()
            .all(|&(x, y, z)| is_admissible_triple(x, y, z, r).unwrap_or(false));
        if ok {
            return t;
        }
    }
}

fn internal_consistency(report: &mut Report) {
    let c = ctx();
    let mut rng = ChaCha8Rng::seed_from_u64(0x6a);
    let tol_sym = 10f64.powf(-0.25 * BITS as f64);
    let mut worst_sym = 0.0f64;
    let mut tuples = 0;
    for r in 5..=11 {
        // s = 2 makes [r/2] vanish for even r
        let s = if r % 2 == 0 { 1 } else { 2 };
        let level = Level::new(r, s, c).unwrap();
        for _ in 0..150 {
            let t = random_symbol(&mut rng, r);
            let base = level.sixj_direct(&t).unwrap();
            let scale = base.abs() + 1u32;
            for img in symmetry_images(&t) {
                let d = (&level.sixj_direct(&img).unwrap() - &base).abs() / &scale;
                worst_sym = worst_sym.max(d.to_f64());
            }
            tuples += 1;
        }
    }

    let dilog_at = |x: BigReal| dilog(&tvqv::numerics::BigComplex::from_real(x), &c).unwrap();
    let pi2: BigReal = c.pi().square();
    let ln2: BigReal = c.real(2).ln();
    let exact = [
        (c.real(1), pi2.clone() / 6u32),
        (c.real(-1), -(pi2.clone() / 12u32)),
        (c.real(0.5), pi2 / 12u32 - ln2.square() / 2u32),
    ];
    let mut worst_dilog = 0.0f64;
    for (x, want) in exact {
        let got = dilog_at(x);
        worst_dilog = worst_dilog
            .max((got.re - want).abs().to_f64())
            .max(got.im.abs().to_f64());
    }

    let mut cache_identical = true;
    for (g, r) in [(2, 7), (3, 7), (2, 11)] {
        let on = tv(g, r, &TvOptions::default()).tv;
        let off = tv(
            g,
            r,
            &TvOptions {
                cache: CacheMode::Canonical,
                ..TvOptions::default()
            },
        )
        .tv;
        cache_identical &= on == off;
    }

    let tol_arr = c.decimal_tolerance(0.25);
    let mut arrangement_equal = true;
    for (g, r) in [(2, 5), (2, 7), (3, 5)] {
        let a = tv(
            g,
            r,
            &TvOptions {
                cache: CacheMode::Raw,
                ..TvOptions::default()
            },
        )
        .tv;
        let b = tv(
            g,
            r,
            &TvOptions {
                cache: CacheMode::Raw,
                arrangement: Arrangement::Tetrahedral,
                ..TvOptions::default()
            },
        )
        .tv;
        arrangement_equal &= (&a - &b).abs() <= tol_arr.clone() * (a.abs() + 1u32);
    }

    report.record(
        7,
        worst_sym <= tol_sym && worst_dilog <= 1e-60 && cache_identical && arrangement_equal,
        format!(
            "6j images over {tuples} tuples max dev {worst_sym:.2e} (tol {tol_sym:.1e}); \
             dilog max err {worst_dilog:.2e}; cache bit-identical {cache_identical}; \
             arrangements agree {arrangement_equal}"
        ),
    );
}

fn threads_agree(report: &mut Report) {
    let tol = 10f64.powf(-0.2 * BITS as f64);
    let mut worst = 0.0f64;
    for (g, r) in reference_cases() {
        let serial = tv(g, r, &TvOptions::default()).tv;
        for threads in [2, 4] {
            let par = tv(
                g,
                r,
                &TvOptions {
                    threads,
                    ..TvOptions::default()
                },
            )
            .tv;
            worst = worst.max(((&par - &serial).abs() / serial.abs()).to_f64());
        }
    }
    report.record(8, worst <= tol, format!("2 and 4 threads vs serial on the QV reference cases, max rel diff {worst:.2e} (tol {tol:.1e})"));
}

fn main() -> ExitCode {
    let mut report = Report { failures: 0 };
    volumes_match(&mut report);
    qv_matches(&mut report);
    enumerators_agree(&mut report);
    imaginary_parts_vanish(&mut report);
    fits_reproduce(&mut report);
    affine_law(&mut report);
    internal_consistency(&mut report);
    threads_agree(&mut report);
    if report.failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
