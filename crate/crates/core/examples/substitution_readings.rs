//! Tries each reading of the shape parameter in the explicit substitution
//! that turns the closed-form solution into diagonal-variable weights.

use toda_rpp::algebra::BracketConvention;
use toda_rpp::identities::{mu_check, MuReading};
use toda_rpp::shapes::PartitionShape;

fn main() {
    let shape: PartitionShape = "3,1".parse().unwrap();
    for conv in [BracketConvention::Telescoping, BracketConvention::Verbatim] {
        for reading in MuReading::ALL {
            let verdict = match mu_check(&shape, 2, reading, conv) {
                Ok(rep) if rep.is_empty() => format!("all {} fillings match", rep.checked),
                Ok(rep) => format!(
                    "{} of {} fillings differ",
                    rep.violations.len(),
                    rep.checked
                ),
                Err(e) => format!("undefined: {e}"),
            };
            println!("{conv:?} {:<18} {verdict}", reading.name());
        }
    }
}
