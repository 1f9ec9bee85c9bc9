//! Hyperbolic volumes of the tetrahedron T_g and the manifold M_g.
//!
//! ```text
//! cargo run --release --example volume_table -- 2 3 4 100 1000
//! ```

use std::time::Instant;

use tvqv::hyperbolic::volumes;
use tvqv::numerics::{format_real, PrecisionContext};

fn main() -> tvqv::Result<()> {
    let mut genera: Vec<u32> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    if genera.is_empty() {
        genera = vec![2, 3, 4, 5, 6, 7, 8, 9, 10, 100, 1000];
    }
    let ctx = PrecisionContext::default();
    let start = Instant::now();
    println!("{:>5}  {:>24}  {:>26}", "g", "Vol(T_g)", "Vol(M_g)");
    for g in genera {
        let (tet, manifold) = volumes(g, &ctx)?;
        println!(
            "{g:>5}  {:>24}  {:>26}",
            format_real(&tet, 20),
            format_real(&manifold, 20)
        );
    }
    eprintln!("elapsed {:.3} s", start.elapsed().as_secs_f64());
    Ok(())
}
