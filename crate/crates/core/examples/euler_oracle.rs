//! Recompute the kernel classification from scratch: enumerate the Casimir
//! shell, compute both Frobenius multiplicities for every shell member and
//! compare the signed sum with the theorem.

use dirac_kernel::dirac::euler_verify;
use dirac_kernel::sympair::builtin;
use dirac_kernel::Weight;

fn main() -> dirac_kernel::Result<()> {
    let cases = [
        ("so3_so2", "5/2"),
        ("so5_so4", "5/2,3/2"),
        ("so5_so4", "3/2,-1/2"),
        ("so7_so6", "3/2,1/2,-3/2"),
        ("so5_so2xso3", "3/2,1"),
        ("so5_so2xso3", "5/2,1"),
    ];
    for (name, mu) in cases {
        let pair = builtin(name)?;
        let mu: Weight = mu.parse()?;
        println!("{}\n", euler_verify(&pair, &mu)?);
    }
    Ok(())
}
