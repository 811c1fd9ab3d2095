//! Dirac kernel on the 2-sphere SO(3)/SO(2): every admissible `mu` lands in
//! exactly one of `ker D+` and `ker D-`.

use dirac_kernel::dirac::dirac_kernel;
use dirac_kernel::sympair::builtin;
use dirac_kernel::Weight;

fn main() -> dirac_kernel::Result<()> {
    let pair = builtin("so3_so2")?;
    println!(
        "{:>6}  {:>6}  {:<9}  {:>4}  {:>4}",
        "mu", "lambda", "kernel", "nu", "dim"
    );
    for twice in (-7..=9).step_by(2) {
        let mu: Weight = format!("{twice}/2").parse()?;
        let r = dirac_kernel(&pair, &mu)?;
        println!(
            "{:>6}  {:>6}  {:<9}  {:>4}  {:>4}",
            r.mu.to_string(),
            r.lambda.to_string(),
            r.status.to_string(),
            r.nu.as_ref().map(Weight::to_string).unwrap_or_default(),
            r.dimension.map(|d| d.to_string()).unwrap_or_default(),
        );
    }
    Ok(())
}
