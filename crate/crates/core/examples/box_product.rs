//! Fillings of an `r x c` box with entries at most `n`, counted by size.

use toda_rpp::identities::{macmahon_lhs, macmahon_rhs};

fn main() {
    for (r, c, n) in [(1, 1, 1), (2, 2, 2), (3, 3, 3)] {
        let lhs = macmahon_lhs(r, c, n);
        println!("{r}x{c}, n={n}: {lhs}");
        assert_eq!(lhs, macmahon_rhs(r, c, n));
    }
}
