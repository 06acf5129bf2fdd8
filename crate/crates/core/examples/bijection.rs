//! A filling and its family of non-intersecting paths, both directions.

use toda_rpp::identities::{lp_to_rpp, rpp_to_lp};
use toda_rpp::shapes::{PartitionShape, RppTable};

fn main() {
    let shape: PartitionShape = "5,4,4,2,1".parse().unwrap();
    let rows = vec![
        vec![0, 0, 1, 1, 2],
        vec![0, 2, 3, 4],
        vec![2, 4, 4, 4],
        vec![2, 4],
        vec![3],
    ];
    let pi = RppTable::new(shape.clone(), 4, rows).unwrap();
    let paths = rpp_to_lp(&pi, &shape, 4).unwrap();
    for (k, p) in paths.iter().enumerate() {
        println!("P{k}: from {} {}", p.start, p.word());
    }
    let back = lp_to_rpp(&paths, &shape, 4).unwrap();
    println!("roundtrip: {}", back == pi);
}
