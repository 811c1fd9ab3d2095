//! Kernel table for the odd spheres SO(2m+1)/SO(2m), m = 2, 3.
//!
//! Run with `cargo run --example odd_spheres -- 3` to pick a single `m`.

use dirac_kernel::dirac::{dirac_kernel, KernelStatus};
use dirac_kernel::sympair::{admissible_mu, builtin};
use dirac_kernel::Weight;

fn lambdas(m: usize) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (-2..=2).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

fn main() -> dirac_kernel::Result<()> {
    let only: Option<usize> = std::env::args().nth(1).and_then(|s| s.parse().ok());
    for m in [2usize, 3]
        .into_iter()
        .filter(|m| only.is_none_or(|o| o == *m))
    {
        let pair = builtin(["so5_so4", "so7_so6"][m - 2])?;
        let delta_p = &pair.deltas().delta_p;
        println!("{} (delta_p = ({delta_p}))", pair.name());
        let (mut plus, mut minus) = (0, 0);
        for l in lambdas(m) {
            let mu = &Weight::from_ints(&l) + delta_p;
            if !admissible_mu(&pair, &mu)? {
                continue;
            }
            let r = dirac_kernel(&pair, &mu)?;
            match r.status {
                KernelStatus::Plus => plus += 1,
                KernelStatus::Minus => minus += 1,
                KernelStatus::BothZero => {}
            }
            println!(
                "  lambda=({})  {:<5}  nu=({})  dim {}",
                r.lambda,
                r.status.to_string(),
                r.nu.as_ref().map(Weight::to_string).unwrap_or_default(),
                r.dimension.unwrap_or(0)
            );
        }
        println!("  {plus} in ker D+, {minus} in ker D-\n");
    }
    Ok(())
}
