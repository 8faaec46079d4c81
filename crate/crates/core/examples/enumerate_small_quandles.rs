//! Quandles of small order up to isomorphism.
//!
//! cargo run --release --example enumerate_small_quandles

use std::time::Instant;

use quandles::enumerate::enumerate_quandles;
use quandles::format::serialize_quandle;
use quandles::inner::orbits;

fn main() -> quandles::Result<()> {
    for n in 1..=6 {
        let start = Instant::now();
        let qs = enumerate_quandles(n)?;
        println!(
            "order {n}: {:>3} quandles ({:.1?})",
            qs.len(),
            start.elapsed()
        );
    }
    println!();
    for q in enumerate_quandles(3)? {
        let sizes: Vec<usize> = orbits(&q).iter().map(|o| o.len()).collect();
        print!("# orbit sizes {sizes:?}\n{}", serialize_quandle(&q));
    }
    Ok(())
}
