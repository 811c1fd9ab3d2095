//! Explicit gamma matrices for the complex Clifford algebra on `C^n` and the
//! joint eigenspaces of the commuting involutions `omega_k`.

use dirac_kernel::spin::{build_clifford, joint_eigenspaces};

fn main() -> dirac_kernel::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(4);
    let c = build_clifford(n)?;
    println!(
        "n = {n}, dim S = {}, relations hold: {}",
        c.spinor_dim(),
        c.relations_hold()
    );
    for (j, g) in c.generators().iter().enumerate() {
        println!("e_{}:", j + 1);
        for row in 0..g.size() {
            let cells: Vec<String> = (0..g.size())
                .map(|col| format!("{:>3}", gauss(g.get(row, col))))
                .collect();
            println!("  {}", cells.join(" "));
        }
    }
    let (plus, minus) = c.half_spin_dims();
    println!("volume element eigenspaces: +1 -> {plus}, -1 -> {minus}");
    for s in joint_eigenspaces(&c)? {
        println!(
            "  eps {:?}  weight ({})  dim {}  volume {:+}",
            s.epsilon, s.weight, s.dim, s.volume_eigenvalue
        );
    }
    Ok(())
}

fn gauss(z: num_complex::Complex<i64>) -> String {
    match (z.re, z.im) {
        (0, 0) => "0".into(),
        (re, 0) => re.to_string(),
        (0, 1) => "i".into(),
        (0, -1) => "-i".into(),
        (re, im) => format!("{re}{im:+}i"),
    }
}
