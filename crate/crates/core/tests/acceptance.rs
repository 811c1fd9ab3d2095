//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use dirac_kernel::characters::{
    branch_equal_rank, branch_interleave_bd, irreducible_character, weight_multiplicities, weyl_dim,
};
use dirac_kernel::dirac::{dirac_kernel, euler_verify, verify_chi, KernelStatus};
use dirac_kernel::lattice::{inner_product, int, rat, Rational};
use dirac_kernel::roots::{build_classical, half_sum, Family};
use dirac_kernel::spin::{build_clifford, joint_eigenspaces};
use dirac_kernel::sympair::{admissible_mu, builtin, builtin_names, w1_enumerate};
use dirac_kernel::{RootSystem, SymmetricPair, Weight};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pair(name: &str) -> SymmetricPair {
    builtin(name).unwrap_or_else(|e| panic!("built-in {name}: {e}"))
}

fn odd_sphere(m: usize) -> SymmetricPair {
    pair(["so3_so2", "so5_so4", "so7_so6", "so9_so8"][m - 1])
}

/// All integer vectors with coordinates in `lo..=hi`.
fn int_box(rank: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|v| {
                (lo..=hi).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// Closed-form kernel for `SO(2m+1)/SO(2m)` at `mu = lambda + delta_p`.
fn closed_form(m: usize, lambda: &[i64]) -> (KernelStatus, Weight) {
    let last = lambda[m - 1];
    let (even_side, nu) = if last >= 0 {
        (KernelStatus::Plus, lambda.to_vec())
    } else {
        let mut prime = lambda.to_vec();
        prime[m - 1] = -(last + 1);
        (KernelStatus::Minus, prime)
    };
    let status = match (m.is_multiple_of(2), even_side) {
        (true, s) => s,
        (false, KernelStatus::Plus) => KernelStatus::Minus,
        (false, _) => KernelStatus::Plus,
    };
    (status, Weight::from_ints(&nu))
}

fn check_closed_form(m: usize, lambda: &[i64]) -> Result<(), String> {
    let p = odd_sphere(m);
    let mu = &Weight::from_ints(lambda) + &p.deltas().delta_p;
    let r = dirac_kernel(&p, &mu).map_err(|e| format!("mu=({mu}): {e}"))?;
    let (status, nu) = closed_form(m, lambda);
    ensure(r.status == status && r.nu.as_ref() == Some(&nu), || {
        format!(
            "m={m} lambda={lambda:?}: got {} nu={:?}, expected {status} nu=({nu})",
            r.status,
            r.nu.as_ref().map(Weight::to_string)
        )
    })
}

/// Criterion 2 domain: admissible lambdas with coordinates in -2..=2.
fn sphere_cases(m: usize) -> Vec<Vec<i64>> {
    let p = odd_sphere(m);
    int_box(m, -2, 2)
        .into_iter()
        .filter(|l| {
            let mu = &Weight::from_ints(l) + &p.deltas().delta_p;
            admissible_mu(&p, &mu).expect("rank matches")
        })
        .collect()
}

fn criterion_1() -> Outcome {
    for l in -4..=4 {
        check_closed_form(1, &[l])?;
    }
    Ok("9 cases".into())
}

fn criterion_2() -> Outcome {
    let mut counts = Vec::new();
    let mut total = 0;
    for m in [2, 3, 4] {
        let cases = sphere_cases(m);
        for l in &cases {
            check_closed_form(m, l)?;
        }
        total += cases.len();
        counts.push(format!("m={m}: {}", cases.len()));
    }
    ensure(total >= 40, || format!("only {total} cases"))?;
    Ok(format!("{total} cases ({})", counts.join(", ")))
}

/// The oracle functions must not reach for the theorem's machinery.
fn oracle_source_is_independent() -> Result<(), String> {
    let src = include_str!("../src/dirac.rs");
    let start = src
        .find("pub fn casimir_shell(")
        .ok_or("oracle source not found")?;
    let end = src
        .find("pub struct ShellRow")
        .ok_or("oracle source not found")?;
    let oracle = &src[start..end];
    for forbidden in [
        "dominant_representative",
        "dirac_kernel",
        "w1_enumerate",
        "is_in_w1",
    ] {
        ensure(!oracle.contains(forbidden), || {
            format!("oracle code calls {forbidden}")
        })?;
    }
    Ok(())
}

fn criterion_3() -> Outcome {
    oracle_source_is_independent()?;
    let mut cases: Vec<(SymmetricPair, Weight)> = Vec::new();
    let p1 = odd_sphere(1);
    for l in -4..=4 {
        cases.push((p1.clone(), &Weight::from_ints(&[l]) + &p1.deltas().delta_p));
    }
    for m in [2, 3, 4] {
        let p = odd_sphere(m);
        for l in sphere_cases(m) {
            let mu = &Weight::from_ints(&l) + &p.deltas().delta_p;
            cases.push((p.clone(), mu));
        }
    }
    let both_zero = pair("so5_so2xso3");
    cases.push((both_zero, Weight::from_ratios(&[(3, 2), (1, 1)])));
    let mut zero_seen = false;
    for (p, mu) in &cases {
        let report = euler_verify(p, mu).map_err(|e| format!("{} mu=({mu}): {e}", p.name()))?;
        ensure(report.passed(), || {
            format!("{} mu=({mu}) failed:\n{report}", p.name())
        })?;
        zero_seen |= report.kernel.status == KernelStatus::BothZero;
    }
    ensure(zero_seen, || {
        "both-zero case did not classify as BOTH_ZERO".into()
    })?;
    Ok(format!("{} cases including one BOTH_ZERO", cases.len()))
}

fn criterion_4() -> Outcome {
    for name in builtin_names() {
        let r = verify_chi(&pair(name)).map_err(|e| format!("{name}: {e}"))?;
        ensure(r.decomposition.is_ok(), || {
            format!("{name}: {}", r.decomposition.as_ref().err().unwrap())
        })?;
        ensure(r.trace_identity_ok, || {
            format!("{name}: trace difference mismatch")
        })?;
    }
    Ok(format!("{} pairs", builtin_names().len()))
}

fn criterion_5() -> Outcome {
    for name in builtin_names() {
        let r = verify_chi(&pair(name)).map_err(|e| format!("{name}: {e}"))?;
        ensure(r.disjoint_ok, || {
            format!("{name}: E+ and E- share a weight")
        })?;
    }
    Ok(format!("{} pairs", builtin_names().len()))
}

fn criterion_6() -> Outcome {
    let expected = [
        ("so3_so2", 2, 1, 2),
        ("so5_so4", 8, 4, 2),
        ("so5_so2xso3", 8, 2, 4),
        ("so7_so6", 48, 24, 2),
        ("so9_so8", 384, 192, 2),
    ];
    let mut parts = Vec::new();
    for (name, w, wh, w1) in expected {
        let p = pair(name);
        let got = (
            p.weyl_group().map_err(|e| e.to_string())?.len(),
            p.weyl_group_h().map_err(|e| e.to_string())?.len(),
            w1_enumerate(&p).map_err(|e| e.to_string())?.len(),
        );
        ensure(got == (w, wh, w1) && got.0 == got.1 * got.2, || {
            format!("{name}: got {got:?}, expected {:?}", (w, wh, w1))
        })?;
        parts.push(format!("{w}={wh}*{w1}"));
    }
    Ok(parts.join(" "))
}

fn criterion_7() -> Outcome {
    let mut count = 0;
    for name in builtin_names() {
        let p = pair(name);
        let d = p.deltas();
        let target = inner_product(&d.delta, &d.delta).unwrap()
            - inner_product(&d.delta_h, &d.delta_h).unwrap();
        for s in w1_enumerate(&p).map_err(|e| e.to_string())?.iter() {
            let dp = &s.delta_p_sigma;
            let twice_h = d.delta_h.scale(&int(2));
            let value = inner_product(dp, &(dp + &twice_h)).unwrap();
            ensure(value == target, || {
                format!("{name} sigma={}: {value} != {target}", s.element)
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} coset representatives"))
}

fn criterion_8() -> Outcome {
    for n in (2..=8).step_by(2) {
        let c = build_clifford(n).map_err(|e| format!("n={n}: {e}"))?;
        let m = n / 2;
        ensure(c.relations_hold(), || {
            format!("n={n}: anticommutation fails")
        })?;
        ensure(c.spinor_dim() == 1 << m, || {
            format!("n={n}: dim S = {}", c.spinor_dim())
        })?;
        let half = 1 << (m - 1);
        ensure(c.half_spin_dims() == (half, half), || {
            format!("n={n}: half-spin dims {:?}", c.half_spin_dims())
        })?;
        let spaces = joint_eigenspaces(&c).map_err(|e| e.to_string())?;
        let mut weights = BTreeMap::new();
        for s in &spaces {
            *weights.entry(s.weight.clone()).or_insert(0) += s.dim;
        }
        let all_halves = weights.keys().all(|w| {
            w.coords()
                .iter()
                .all(|x| *x == rat(1, 2) || *x == rat(-1, 2))
        });
        ensure(
            weights.len() == 1 << m && weights.values().all(|&d| d == 1) && all_halves,
            || format!("n={n}: joint spectrum {weights:?}"),
        )?;
    }
    Ok("n = 2, 4, 6, 8".into())
}

/// Dominant weights for `B_m` with coordinates at most 2, in both classes.
fn b_dominant(m: usize) -> Vec<Weight> {
    let mut out = Vec::new();
    for v in int_box(m, 0, 2) {
        if v.windows(2).all(|w| w[0] >= w[1]) {
            out.push(Weight::from_ints(&v));
        }
    }
    for v in int_box(m, 0, 1) {
        if v.windows(2).all(|w| w[0] >= w[1]) {
            let coords: Vec<(i64, i64)> = v.iter().map(|&x| (2 * x + 1, 2)).collect();
            out.push(Weight::from_ratios(&coords));
        }
    }
    out
}

fn criterion_9() -> Outcome {
    let mut count = 0;
    for m in 1..=3 {
        let p = odd_sphere(m);
        for nu in b_dominant(m) {
            let direct = branch_equal_rank(&p, &nu).map_err(|e| format!("nu=({nu}): {e}"))?;
            let interleave = branch_interleave_bd(m, &nu).map_err(|e| format!("nu=({nu}): {e}"))?;
            ensure(direct == interleave, || {
                format!("m={m} nu=({nu}): {direct:?} vs {interleave:?}")
            })?;
            let g_dim = weyl_dim(p.root_system(), &nu).map_err(|e| e.to_string())?;
            let mut h_dim = 0;
            for (a, c) in &direct {
                h_dim += weyl_dim(p.h_system(), a).map_err(|e| e.to_string())? * *c as u64;
            }
            ensure(g_dim == h_dim, || {
                format!("m={m} nu=({nu}): {g_dim} != {h_dim}")
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} highest weights"))
}

fn small_systems() -> Vec<RootSystem> {
    [
        (Family::A, 1),
        (Family::A, 2),
        (Family::B, 1),
        (Family::B, 2),
        (Family::C, 2),
        (Family::D, 2),
    ]
    .into_iter()
    .map(|(f, r)| build_classical(f, r).expect("classical system"))
    .collect()
}

/// Weights of `pi_delta` from subset sums of the positive roots.
fn subset_sums(rs: &RootSystem) -> BTreeMap<Weight, i64> {
    let roots = rs.positive_roots();
    let delta = half_sum(rs);
    let mut out = BTreeMap::new();
    for mask in 0u32..(1 << roots.len()) {
        let mut w = delta.clone();
        for (i, r) in roots.iter().enumerate() {
            if mask >> i & 1 == 1 {
                w = &w - r;
            }
        }
        *out.entry(w).or_insert(0) += 1;
    }
    out
}

/// Small dominant integral weights of `rs`.
fn sample_dominant(rs: &RootSystem) -> Vec<Weight> {
    let dim = rs.simple_roots()[0].rank();
    let mut out = Vec::new();
    for v in int_box(dim, -2, 4) {
        let w = Weight::from_ratios(&v.iter().map(|&x| (x, 2)).collect::<Vec<_>>());
        if w.coords()
            .iter()
            .map(|x| x.clone() * x.clone())
            .sum::<Rational>()
            > int(4)
        {
            continue;
        }
        if rs.is_dominant(&w, false).unwrap() && irreducible_character(rs, &w).is_ok() {
            out.push(w);
        }
    }
    out
}

fn kostant_inequality(rs: &RootSystem, nu1: &Weight, nu2: &Weight) -> Result<(), String> {
    let weights = |nu: &Weight| -> Vec<Weight> {
        irreducible_character(rs, nu)
            .unwrap()
            .iter()
            .map(|(w, _)| w)
            .collect()
    };
    let top = (nu1 + nu2).norm_sq();
    let group = rs.weyl_group().unwrap();
    for xi1 in weights(nu1) {
        for xi2 in weights(nu2) {
            let value = (&xi1 + &xi2).norm_sq();
            ensure(value <= top, || {
                format!(
                    "{}: |{xi1}+{xi2}| exceeds |{nu1}+{nu2}|",
                    rs.name().unwrap()
                )
            })?;
            let aligned = group
                .iter()
                .any(|w| w.apply(&xi1) == *nu1 && w.apply(&xi2) == *nu2);
            ensure((value == top) == aligned, || {
                format!(
                    "{}: equality condition fails at ({xi1}), ({xi2})",
                    rs.name().unwrap()
                )
            })?;
        }
    }
    Ok(())
}

fn criterion_10() -> Outcome {
    let mut pairs = 0;
    for rs in small_systems() {
        let delta = half_sum(&rs);
        let from_subsets = subset_sums(&rs);
        let from_freudenthal = irreducible_character(&rs, &delta)
            .map_err(|e| e.to_string())?
            .to_map();
        ensure(from_subsets == from_freudenthal, || {
            format!(
                "{}: subset sums {from_subsets:?} vs {from_freudenthal:?}",
                rs.name().unwrap()
            )
        })?;
        let dim = weight_multiplicities(&rs, &delta)
            .unwrap()
            .dimension()
            .unwrap();
        ensure(dim == 1 << rs.positive_roots().len(), || {
            format!("dim pi_delta = {dim}")
        })?;
        let samples = sample_dominant(&rs);
        for a in &samples {
            for b in &samples {
                kostant_inequality(&rs, a, b)?;
                pairs += 1;
            }
        }
    }
    Ok(format!("6 root systems, {pairs} highest-weight pairs"))
}

fn criterion_11() -> Outcome {
    let mut count = 0;
    for name in builtin_names() {
        let p = pair(name);
        for v in int_box(p.rank(), -4, 4) {
            let nu = Weight::from_ratios(&v.iter().map(|&x| (x, 2)).collect::<Vec<_>>());
            if !p.in_fg(&nu).unwrap() {
                continue;
            }
            let mu = &nu + &p.deltas().delta_p;
            let r = dirac_kernel(&p, &mu).map_err(|e| format!("{name} nu=({nu}): {e}"))?;
            ensure(
                r.status != KernelStatus::BothZero && r.nu.as_ref() == Some(&nu),
                || {
                    format!(
                        "{name} nu=({nu}): got {} {:?}",
                        r.status,
                        r.nu.as_ref().map(Weight::to_string)
                    )
                },
            )?;
            count += 1;
        }
    }
    Ok(format!(
        "{count} highest weights over {} pairs",
        builtin_names().len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("SO(3)/SO(2) kernel", criterion_1),
        ("SO(2m+1)/SO(2m) closed form", criterion_2),
        ("Euler characteristic oracle", criterion_3),
        ("spinor decomposition", criterion_4),
        ("E+/E- weight disjointness", criterion_5),
        ("|W| = |W_H| |W1|", criterion_6),
        ("Casimir scalar on chi", criterion_7),
        ("Clifford model", criterion_8),
        ("branching cross-check", criterion_9),
        ("Kostant weights and inequality", criterion_10),
        ("completeness", criterion_11),
    ];
    let mut failed = 0;
    for (i, (label, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!(
                "criterion {:>2} PASS  {label}: {detail} [{secs:.2}s]",
                i + 1
            ),
            Err(detail) => {
                failed += 1;
                println!(
                    "criterion {:>2} FAIL  {label}: {detail} [{secs:.2}s]",
                    i + 1
                );
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
