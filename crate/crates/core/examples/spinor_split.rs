//! Spinor weights of each built-in pair and their split into
//! `H`-irreducibles indexed by the coset representatives `W1`.

use dirac_kernel::spin::{chi_decompose, chi_trace_difference, spinor_weights};
use dirac_kernel::sympair::{builtin, builtin_names, w1_enumerate};

fn main() -> dirac_kernel::Result<()> {
    for name in builtin_names() {
        let pair = builtin(name)?;
        let sw = spinor_weights(&pair)?;
        println!("{name}: m = {}, dim S = {}", pair.m(), sw.entries.len());
        for e in &sw.entries {
            println!(
                "  eps {:?}  weight ({})  {}",
                e.epsilon,
                e.weight,
                if e.parity > 0 { "E+" } else { "E-" }
            );
        }
        for s in w1_enumerate(&pair)?.iter() {
            println!(
                "  sigma = {:<12} sign {:+}  tau_sigma = ({})",
                s.element.to_string(),
                s.sign,
                s.delta_p_sigma
            );
        }
        println!("{}", chi_decompose(&pair)?);
        println!("chi+ - chi- = {}\n", chi_trace_difference(&pair)?);
    }
    Ok(())
}
