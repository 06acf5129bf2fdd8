//! Exact rational functions in indexed variables, product brackets and
//! truncated series.

use toda_rpp::algebra::{bracket, series_truncate, BracketConvention, Scalar};

fn main() {
    let x = Scalar::x;
    let one = Scalar::one();
    let f = &(&one - &(&x(-1) * &x(0))) / &(&one - &x(0));
    println!("f = {f}");
    println!("f * (1 - x0) = {}", &f * &(&one - &x(0)));

    for (m, n) in [(0, 2), (3, 2), (4, 1)] {
        for conv in [BracketConvention::Verbatim, BracketConvention::Telescoping] {
            let b = bracket(x, m, n, conv).unwrap();
            println!("[x]_{m}^{n} ({conv:?}) = {b}");
        }
    }

    let g = &one / &(&(&one - &x(0)) * &(&one - &(&x(0) * &x(1))));
    println!("1/((1-x0)(1-x0 x1)) = {}", series_truncate(&g, 4).unwrap());
}
