//! Build a symmetric pair from a JSON pair file, validate it and classify a
//! few highest weights.
//!
//! `cargo run --example custom_pair -- path/to/pair.json`

use dirac_kernel::cli::PairFile;
use dirac_kernel::dirac::dirac_kernel;
use dirac_kernel::sympair::{admissible_mu, validate_pair, w1_enumerate};
use dirac_kernel::Weight;

const DEFAULT: &str = concat!(
    env!("CARGO_MANIFEST_DIR"),
    "/examples/data/so5_so2xso3.json"
);

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| DEFAULT.to_string());
    let file = PairFile::from_json(&std::fs::read_to_string(&path)?)?;
    let pair = file.to_pair()?;
    println!("{}", validate_pair(&pair));
    println!("|W1| = {}", w1_enumerate(&pair)?.len());
    let delta_p = &pair.deltas().delta_p;
    for l in [[0, 0], [1, 0], [0, 1], [-1, 0], [-2, 1], [-3, 2]] {
        let mu = &Weight::from_ints(&l) + delta_p;
        if !admissible_mu(&pair, &mu)? {
            println!("({mu}) is not admissible");
            continue;
        }
        let r = dirac_kernel(&pair, &mu)?;
        println!(
            "({mu}) -> {} {}",
            r.status,
            r.nu.map(|nu| format!("({nu})")).unwrap_or_default()
        );
    }
    Ok(())
}
