//! Turaev-Viro invariants and QV over a range of levels, compared with the
//! published table where one exists.
//!
//! ```text
//! cargo run --release --example qv_sweep -- 2 5 21 [threads]
//! ```

use tvqv::fixtures;
use tvqv::numerics::{format_real, PrecisionContext};
use tvqv::turaev_viro::{tv_invariant_with, TvOptions};

fn main() -> tvqv::Result<()> {
    let args: Vec<u32> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let g = args.first().copied().unwrap_or(2);
    let r_min = args.get(1).copied().unwrap_or(5);
    let r_max = args.get(2).copied().unwrap_or(15);
    let threads = args.get(3).copied().unwrap_or(1) as usize;

    let ctx = PrecisionContext::new(256)?;
    let opts = TvOptions {
        threads,
        ..TvOptions::default()
    };
    println!("M_{g}, s = 2, 256 bits, {threads} thread(s)");
    println!(
        "{:>3}  {:>10}  {:>26}  {:>20}  {:>10}  {:>8}",
        "r", "terms", "TV", "QV", "table", "seconds"
    );
    for r in (r_min..=r_max).filter(|r| r % 2 == 1) {
        let res = tv_invariant_with(g, r, 2, ctx, &opts)?;
        let qv = res
            .qv
            .as_ref()
            .map(|q| format_real(&q.re, 16))
            .unwrap_or_else(|| "-".into());
        let table = fixtures::qv_value(g, r).map(|row| row.qv).unwrap_or("-");
        println!(
            "{r:>3}  {:>10}  {:>26}  {qv:>20}  {table:>10}  {:>8.3}",
            res.term_count,
            format_real(&res.tv.re, 20),
            res.wall_time
        );
    }
    Ok(())
}
