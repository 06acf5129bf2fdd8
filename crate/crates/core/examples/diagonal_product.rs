//! Generating function in one variable per diagonal, summed over fillings
//! and compared with its product formula.
//!
//! `cargo run --example diagonal_product -- 2,1 2`

use toda_rpp::identities::{pf_x_lhs, pf_x_rhs};
use toda_rpp::shapes::PartitionShape;

fn main() {
    let mut args = std::env::args().skip(1);
    let shape: PartitionShape = args
        .next()
        .as_deref()
        .unwrap_or("2,1")
        .parse()
        .expect("shape");
    let n: u32 = args.next().map_or(2, |s| s.parse().expect("bound"));
    let lhs = pf_x_lhs(&shape, n);
    let rhs = pf_x_rhs(&shape, n);
    println!("{rhs}");
    println!("matches the sum over fillings: {}", lhs == rhs);
}
