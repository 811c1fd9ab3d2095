//! Tensor products of classical irreducibles via exact character
//! multiplication and peeling.

use dirac_kernel::characters::{tensor_product, weyl_dim};
use dirac_kernel::roots::{build_classical, parse_family_rank};
use dirac_kernel::Weight;

fn main() -> dirac_kernel::Result<()> {
    let cases = [
        ("B2", "1/2,1/2", "1/2,1/2"),
        ("B3", "1/2,1/2,1/2", "1,0,0"),
        ("C2", "1,0", "1,1"),
        ("A2", "1,0,0", "1,1,0"),
        ("D3", "1,0,0", "1/2,1/2,1/2"),
    ];
    for (group, a, b) in cases {
        let (family, rank) = parse_family_rank(group)?;
        let rs = build_classical(family, rank)?;
        let (a, b): (Weight, Weight) = (a.parse()?, b.parse()?);
        let parts: Vec<String> = tensor_product(&rs, &a, &b)?
            .iter()
            .map(|(w, c)| {
                let d = weyl_dim(&rs, w).unwrap_or(0);
                if *c == 1 {
                    format!("[{w}]:{d}")
                } else {
                    format!("{c}[{w}]:{d}")
                }
            })
            .collect();
        println!(
            "{group}: [{a}]:{} x [{b}]:{} = {}",
            weyl_dim(&rs, &a)?,
            weyl_dim(&rs, &b)?,
            parts.join(" + ")
        );
    }
    Ok(())
}
