//! Admissible colorings of M_g: the fast partitioned stream, its agreement with
//! brute force, and how the counts grow with r.
//!
//! ```text
//! cargo run --release --example colorings -- 3 7
//! ```

use tvqv::coloring::{count_admissible, enumerate_fast, enumerate_oracle, partitions};

fn main() -> tvqv::Result<()> {
    let args: Vec<u32> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let g = args.first().copied().unwrap_or(2);
    let r = args.get(1).copied().unwrap_or(5);

    println!("colorings (a, b, c_0, ..., c_{g}) of M_{g} at r = {r}:");
    for col in enumerate_fast(g, r)?.take(20) {
        let branch = if col.is_integer_branch() {
            "integer"
        } else {
            "half-odd"
        };
        println!("  {col}  [{branch}]");
    }
    let total = count_admissible(g, r)?;
    if total > 20 {
        println!("  ... {} more", total - 20);
    }
    println!(
        "{} (a, b) partitions, {total} colorings",
        partitions(r)?.len()
    );

    let mut fast: Vec<_> = enumerate_fast(g, r)?.collect();
    let mut brute: Vec<_> = enumerate_oracle(g, r)?.collect();
    fast.sort();
    brute.sort();
    println!("brute-force enumeration agrees: {}", fast == brute);

    println!("\ncounts for M_{g}:");
    for r in 3..=15 {
        println!("  r = {r:>2}: {}", count_admissible(g, r)?);
    }
    Ok(())
}
