//! Sum of filling weights against the product of `a` values, for a solution
//! built from a random sample.
//!
//! `cargo run --example main_identity -- 3,2 2`

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use toda_rpp::identities::{pf_lhs, pf_rhs, random_sample};
use toda_rpp::shapes::PartitionShape;
use toda_rpp::toda::{ab_from_f, sample_until};

fn main() {
    let mut args = std::env::args().skip(1);
    let shape: PartitionShape = args
        .next()
        .as_deref()
        .unwrap_or("3,2")
        .parse()
        .expect("shape");
    let n: u32 = args.next().map_or(2, |s| s.parse().expect("bound"));
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let (_, (lhs, rhs)) = sample_until(
        &mut rng,
        100,
        |g| random_sample(g, &shape, n),
        |f| {
            let sol = ab_from_f(f);
            Ok((pf_lhs(&shape, n, &sol)?, pf_rhs(&shape, n, &sol)?))
        },
    )
    .unwrap();
    println!("sum     = {lhs}");
    println!("product = {rhs}");
    println!("equal: {}", lhs == rhs);
}
