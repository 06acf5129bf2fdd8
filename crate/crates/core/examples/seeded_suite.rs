//! Runs one seeded suite and prints its JSON records.

use toda_rpp::suites::{run, Identity, SuiteConfig};

fn main() {
    let cfg = SuiteConfig {
        seed: 42,
        trials: 4,
        max_cells: 5,
        max_n: 3,
        ..SuiteConfig::default()
    };
    let records = run(Identity::MainIdentity, &cfg).unwrap();
    println!("{}", serde_json::to_string_pretty(&records).unwrap());
}
