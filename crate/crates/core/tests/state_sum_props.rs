mod common;

use tvqv::coloring::{count_admissible, enumerate_fast, enumerate_oracle, Coloring};
use tvqv::halfint::HalfInt;
use tvqv::numerics::PrecisionContext;
use tvqv::sixj::{CacheMode, Level, SixJCache};
use tvqv::turaev_viro::{coloring_term, sum_terms, tv_invariant, Arrangement};

fn h(d: u32) -> HalfInt {
    HalfInt::from_doubled(d)
}

#[test]
fn single_term_against_double_precision() {
    // (a, b, c_0, c_1, c_2) = (0, 0, 1, 1, 1): w_1³ |0 0 0; 1 1 1|⁶
    let ctx = PrecisionContext::new(256).unwrap();
    let cache = SixJCache::new(Level::new(5, 2, ctx).unwrap(), CacheMode::Memoized);
    let col = Coloring {
        a: h(0),
        b: h(0),
        c: vec![h(2); 3],
    };
    let ours = coloring_term(&col, &cache, Arrangement::Reduced)
        .unwrap()
        .to_f64_pair();
    let w1 = common::edge_weight(5, 2, 2);
    let sym = common::sixj(5, 2, [0, 0, 0, 2, 2, 2]);
    let mut sixth = common::C64::new(1.0, 0.0);
    for _ in 0..6 {
        sixth = sixth.mul(sym);
    }
    assert!(sixth.im.abs() < 1e-12 * sixth.abs());
    let oracle = w1.powi(3) * sixth.re;
    assert!((ours.0 - oracle).abs() < 1e-12 * oracle.abs());
    assert_eq!(ours.1, 0.0);
}

#[test]
fn fast_and_oracle_sums_agree() {
    let ctx = PrecisionContext::new(256).unwrap();
    let tol = ctx.decimal_tolerance(0.25);
    for (g, r) in [(2, 5), (2, 9), (2, 13), (3, 7), (3, 11), (4, 7), (5, 7)] {
        let fast = tv_invariant(g, r, 2, ctx).unwrap();
        let cache = SixJCache::new(Level::new(r, 2, ctx).unwrap(), CacheMode::Memoized);
        let oracle = sum_terms(
            enumerate_oracle(g, r).unwrap(),
            &cache,
            Arrangement::Reduced,
        )
        .unwrap();
        assert_eq!(oracle.count, fast.term_count, "g={g} r={r}");
        let rel = (&oracle.sum - &fast.tv).abs() / fast.tv.abs();
        assert!(rel <= tol, "g={g} r={r}: {}", rel.to_f64());
    }
}

#[test]
fn precision_change_keeps_forty_digits() {
    let lo = PrecisionContext::new(192).unwrap();
    let hi = PrecisionContext::new(256).unwrap();
    for (g, r_max) in [(2u32, 15u32), (3, 11)] {
        for r in (5..=r_max).step_by(2) {
            let a = tv_invariant(g, r, 2, lo).unwrap().tv;
            let b = tv_invariant(g, r, 2, hi).unwrap().tv;
            let rel = ((&a.with_prec(256) - &b).abs() / b.abs()).to_f64();
            assert!(rel < 1e-40, "g={g} r={r}: {rel:e}");
        }
    }
}

#[test]
fn counts_grow_with_the_level() {
    for g in [2, 3, 4] {
        let mut last = 0;
        for r in 3..=15 {
            let n = count_admissible(g, r).unwrap();
            assert!(n >= last, "g={g} r={r}");
            last = n;
        }
    }
}

#[test]
fn streamed_colorings_are_admissible() {
    for col in enumerate_fast(4, 9).unwrap() {
        assert!(col.is_admissible(9), "{col}");
    }
}
