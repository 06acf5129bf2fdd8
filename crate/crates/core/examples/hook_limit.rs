//! Truncated sum over fillings with a large bound against the hook product.

use toda_rpp::identities::{
    gansner_bound, gansner_lhs_truncated, gansner_rhs_truncated, series_x_to_q,
};
use toda_rpp::shapes::PartitionShape;

fn main() {
    let shape: PartitionShape = "2,1".parse().unwrap();
    let d = 4;
    let n = gansner_bound(&shape, d);
    let lhs = gansner_lhs_truncated(&shape, n, d).unwrap();
    let rhs = gansner_rhs_truncated(&shape, d).unwrap();
    println!("bound n = {n}");
    println!("hook product: {rhs}");
    println!("equal: {}", lhs == rhs);
    println!("in q: {}", series_x_to_q(&rhs));
}
