//! Weighted path sums on a staircase. With free edge labels every path
//! contributes its own monomial. With labels from an actual solution,
//! deleting a convex corner leaves sums between points off its diagonal
//! unchanged.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use toda_rpp::lattice::{Point, RegularLattice};
use toda_rpp::suites::lattice_window;
use toda_rpp::toda::{ab_from_f, corner_deletion_check, sample_until, FreeLabels, SampleFunction};

fn main() {
    let l = RegularLattice::new(0, vec![3, 2, 1, 0], 4).unwrap();
    let (from, to) = (Point::new(3, 0), Point::new(0, 4));
    let paths = l.paths(from, to).unwrap();
    let free = l.g_sum(&FreeLabels, from, to).unwrap();
    println!("{} paths from {from} to {to}", paths.len());
    println!("free-label sum has {} terms", free.numer().len());

    let (rows, cols) = lattice_window(&l);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for corner in l.corners() {
        let d = corner.i - corner.j;
        if from.i - from.j == d || to.i - to.j == d {
            continue;
        }
        let (_, rep) = sample_until(
            &mut rng,
            100,
            |g| SampleFunction::random_integer(g, rows, cols, 1, 9),
            |f| corner_deletion_check(&ab_from_f(f), &l, corner, from, to),
        )
        .unwrap();
        println!("without corner {corner}: unchanged = {}", rep.is_empty());
    }
}
