//! Restriction from SO(2m+1) to SO(2m) two ways: peeling the character
//! against the `D_m` roots, and the interleaving rule.

use dirac_kernel::characters::{branch_equal_rank, branch_interleave_bd, weyl_dim};
use dirac_kernel::sympair::builtin;
use dirac_kernel::Weight;

fn main() -> dirac_kernel::Result<()> {
    let cases = [
        ("so5_so4", "2,1"),
        ("so5_so4", "3/2,1/2"),
        ("so7_so6", "2,1,1"),
        ("so7_so6", "3/2,3/2,1/2"),
    ];
    for (name, nu) in cases {
        let pair = builtin(name)?;
        let nu: Weight = nu.parse()?;
        let peeled = branch_equal_rank(&pair, &nu)?;
        let interleaved = branch_interleave_bd(pair.rank(), &nu)?;
        println!(
            "{name}: ({nu}) of dimension {}",
            weyl_dim(pair.root_system(), &nu)?
        );
        for (a, c) in &peeled {
            println!("  {c} x ({a})  dim {}", weyl_dim(pair.h_system(), a)?);
        }
        println!("  interleaving agrees: {}\n", peeled == interleaved);
    }
    let mixed = builtin("so5_so2xso3")?;
    let nu: Weight = "2,1".parse()?;
    println!("{}: ({nu}) restricted to SO(2) x SO(3)", mixed.name());
    for (a, c) in branch_equal_rank(&mixed, &nu)? {
        println!("  {c} x ({a})");
    }
    Ok(())
}
