//! Lists the reverse plane partitions of a shape with their traces.
//!
//! `cargo run --example fillings -- 2,1 2`

use toda_rpp::shapes::{enumerate_rpp, PartitionShape};

fn main() {
    let mut args = std::env::args().skip(1);
    let shape: PartitionShape = args
        .next()
        .as_deref()
        .unwrap_or("2,1")
        .parse()
        .expect("shape");
    let n: u32 = args.next().map_or(2, |s| s.parse().expect("bound"));

    let mut count = 0;
    for pi in enumerate_rpp(&shape, n) {
        println!(
            "{:?}  size {}  traces {:?}",
            pi.rows(),
            pi.size(),
            pi.traces()
        );
        count += 1;
    }
    println!("{count} fillings of ({shape}) with entries at most {n}");
}
