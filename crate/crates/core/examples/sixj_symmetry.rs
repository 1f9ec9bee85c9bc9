//! Quantum 6j symbols: a few values, tetrahedral symmetry, and the memo cache.

use tvqv::halfint::HalfInt;
use tvqv::numerics::{format_real, PrecisionContext};
use tvqv::sixj::{symmetry_images, CacheMode, Level, SixJCache, SixJKey};
use tvqv::turaev_viro::tv_invariant;

fn h(d: u32) -> HalfInt {
    HalfInt::from_doubled(d)
}

fn main() -> tvqv::Result<()> {
    let ctx = PrecisionContext::new(256)?;
    let level = Level::new(7, 2, ctx)?;

    let symbols = [
        [h(2), h(2), h(2), h(2), h(2), h(2)],
        [h(0), h(2), h(2), h(1), h(1), h(1)],
        [h(2), h(3), h(3), h(2), h(3), h(3)],
        [h(4), h(2), h(2), h(3), h(3), h(1)],
    ];
    for t in &symbols {
        let v = level.sixj_direct(t)?;
        let worst = symmetry_images(t)
            .iter()
            .map(|img| (&level.sixj_direct(img).unwrap() - &v).abs().to_f64())
            .fold(0.0, f64::max);
        let shown: Vec<String> = t.iter().map(|x| x.to_string()).collect();
        let key: Vec<String> = SixJKey::canonical(t)
            .as_array()
            .iter()
            .map(|x| x.to_string())
            .collect();
        println!(
            "|{}| = ({}, {})   canonical |{}|, 24 images within {worst:.1e}",
            shown.join(" "),
            format_real(&v.re, 18),
            format_real(&v.im, 18),
            key.join(" ")
        );
    }

    let res = tv_invariant(3, 9, 2, ctx)?;
    let stats = res.cache;
    println!(
        "\nTV(M_3) at r = 9: {} terms, cache hits {}, misses {}, stored {}, odd parity {}",
        res.term_count, stats.hits, stats.misses, stats.size, stats.odd_parity
    );

    let cache = SixJCache::new(Level::new(9, 2, ctx)?, CacheMode::Memoized);
    let t = [h(4), h(2), h(2), h(3), h(3), h(1)];
    let first = cache.symbol(&t)?;
    let again = cache.symbol(&symmetry_images(&t)[7])?;
    println!(
        "memoized lookup through a symmetry image is bit-identical: {}",
        first == again
    );
    Ok(())
}
