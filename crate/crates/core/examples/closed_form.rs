//! The explicit solution in formal parameters. Only the telescoping reading
//! of reversed brackets solves the equations away from the first quadrant.

use toda_rpp::algebra::BracketConvention;
use toda_rpp::toda::{verify_evolution, ClosedForm, Window};

fn main() {
    let w = Window::centered(2, 2);
    for conv in [BracketConvention::Telescoping, BracketConvention::Verbatim] {
        let cf = ClosedForm::symbolic(conv);
        println!("{conv:?}: a(-1,0,0) = {}", cf.a_value(-1, 0, 0).unwrap());
        let rep = verify_evolution(&cf, &w).unwrap();
        println!(
            "  {} sites, {} violations",
            rep.checked,
            rep.violations.len()
        );
    }
}
