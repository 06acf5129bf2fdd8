//! Builds a Toda molecule solution from a random integer array through its
//! minors and checks the evolution and bilinear equations on a window.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use toda_rpp::toda::{
    ab_from_f, sample_until, verify_bilinear, verify_evolution, SampleFunction, TodaSolution,
    Window,
};

fn main() {
    let w = Window::centered(2, 3);
    let (rows, cols) = w.sample_rows_cols();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let (f, evo) = sample_until(
        &mut rng,
        100,
        |g| SampleFunction::random_integer(g, rows, cols, 1, 9),
        |f| verify_evolution(&ab_from_f(f), &w),
    )
    .unwrap();
    let sol = ab_from_f(&f);
    println!("tau(0,0,2) = {}", f.tau(0, 0, 2).unwrap());
    println!("a(0,0,1) = {}", sol.a(0, 0, 1).unwrap());
    println!("b(0,0,1) = {}", sol.b(0, 0, 1).unwrap());
    println!(
        "evolution: {} sites, {} violations",
        evo.checked,
        evo.violations.len()
    );
    let bil = verify_bilinear(&f, &w).unwrap();
    println!(
        "bilinear: {} sites, {} violations",
        bil.checked,
        bil.violations.len()
    );
}
