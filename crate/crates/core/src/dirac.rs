//! Kernel of the Dirac operator on an equal-rank symmetric space, and an
//! independent character-theoretic oracle for it.
//!
//! [`dirac_kernel`] evaluates the closed-form classification: move
//! `lambda + delta` into the dominant chamber and read off the sign of the
//! Weyl element. [`euler_verify`] recomputes the same answer from scratch by
//! enumerating the Casimir shell and counting `H`-multiplicities in spinor
//! tensor products, never touching the dominant-chamber machinery.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::characters::{weight_multiplicities, weyl_dim};
use crate::error::{LieError, Result};
use crate::lattice::{int, Rational, Weight};
use crate::roots::WeylElement;
use crate::spin::{chi_decompose, chi_trace_difference, spinor_weights, ChiDecomposition};
use crate::sympair::{check_admissible, w1_enumerate, SymmetricPair};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KernelStatus {
    Plus,
    Minus,
    BothZero,
}

impl fmt::Display for KernelStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KernelStatus::Plus => "PLUS",
            KernelStatus::Minus => "MINUS",
            KernelStatus::BothZero => "BOTH_ZERO",
        })
    }
}

/// Which of `ker D+` and `ker D-` carries an irreducible `G`-representation.
#[derive(Clone, Debug, PartialEq)]
pub struct KernelResult {
    pub status: KernelStatus,
    pub mu: Weight,
    /// `mu - delta_p`
    pub lambda: Weight,
    pub nu: Option<Weight>,
    pub sigma: Option<WeylElement>,
    pub sigma_sign: Option<i32>,
    pub dimension: Option<u64>,
    /// `<lambda + 2 delta, lambda>`
    pub casimir: Rational,
}

impl fmt::Display for KernelResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "status: {}", self.status)?;
        writeln!(f, "mu: ({})", self.mu)?;
        writeln!(f, "lambda: ({})", self.lambda)?;
        if let (Some(nu), Some(sigma), Some(sign), Some(dim)) =
            (&self.nu, &self.sigma, self.sigma_sign, self.dimension)
        {
            writeln!(f, "nu: ({nu})")?;
            writeln!(f, "sigma: {sigma}")?;
            writeln!(f, "sign(sigma): {sign:+}")?;
            writeln!(f, "dimension: {dim}")?;
        }
        write!(f, "casimir: {}", self.casimir)
    }
}

/// `<nu + 2 delta, nu>`.
pub fn casimir_eigenvalue(p: &SymmetricPair, nu: &Weight) -> Result<Rational> {
    nu.check_rank(p.rank())?;
    let two_delta = p.deltas().delta.scale(&int(2));
    Ok((nu + &two_delta).dot(nu))
}

/// `<delta,delta> - <delta_h,delta_h>`, after checking that every
/// `delta_p^sigma` gives the same value of `<x, x + 2 delta_h>`.
pub fn chi_casimir_check(p: &SymmetricPair) -> Result<Rational> {
    let d = p.deltas();
    let c = d.delta.norm_sq() - d.delta_h.norm_sq();
    let two_h = d.delta_h.scale(&int(2));
    for s in w1_enumerate(p)?.iter() {
        let x = &s.delta_p_sigma;
        let v = x.dot(&(x + &two_h));
        if v != c {
            return Err(LieError::Consistency(format!(
                "component ({x}) has Casimir value {v}, expected {c}"
            )));
        }
    }
    Ok(c)
}

/// Evaluate the kernel classification for an admissible `mu`.
pub fn dirac_kernel(p: &SymmetricPair, mu: &Weight) -> Result<KernelResult> {
    check_admissible(p, mu)?;
    let d = p.deltas();
    let lambda = mu - &d.delta_p;
    let casimir = casimir_eigenvalue(p, &lambda)?;
    let rep = p
        .root_system()
        .dominant_representative(&(&lambda + &d.delta))?;
    if !rep.regular {
        return Ok(KernelResult {
            status: KernelStatus::BothZero,
            mu: mu.clone(),
            lambda,
            nu: None,
            sigma: None,
            sigma_sign: None,
            dimension: None,
            casimir,
        });
    }
    let sigma = rep.element.inverse();
    let nu = &rep.dominant - &d.delta;
    if !p.is_in_w1(&sigma) {
        return Err(LieError::Consistency(format!(
            "sigma = {sigma} does not keep the compact roots positive"
        )));
    }
    if !p.in_fg(&nu)? {
        return Err(LieError::Consistency(format!("nu = ({nu}) is not in F_G")));
    }
    if casimir_eigenvalue(p, &nu)? != casimir {
        return Err(LieError::Consistency(format!(
            "nu = ({nu}) is off the Casimir shell"
        )));
    }
    let sign = sigma.sign();
    let m_sign = if p.m().is_multiple_of(2) { 1 } else { -1 };
    let status = if sign * m_sign == 1 {
        KernelStatus::Plus
    } else {
        KernelStatus::Minus
    };
    let dimension = weyl_dim(p.root_system(), &nu)?;
    Ok(KernelResult {
        status,
        mu: mu.clone(),
        lambda,
        nu: Some(nu),
        sigma: Some(sigma),
        sigma_sign: Some(sign),
        dimension: Some(dimension),
        casimir,
    })
}

/// All `nu` in `F_G` with `<nu + 2 delta, nu> = <lambda + 2 delta, lambda>`,
/// in ascending lexicographic order.
pub fn casimir_shell(p: &SymmetricPair, lambda: &Weight) -> Result<Vec<Weight>> {
    casimir_shell_scaled(p, lambda, &int(1))
}

/// [`casimir_shell`] with the inner product multiplied by `scale > 0`.
pub fn casimir_shell_scaled(
    p: &SymmetricPair,
    lambda: &Weight,
    scale: &Rational,
) -> Result<Vec<Weight>> {
    lambda.check_rank(p.rank())?;
    if !scale.is_positive() {
        return Err(LieError::Consistency(format!(
            "form scale {scale} is not positive"
        )));
    }
    let delta = &p.deltas().delta;
    let shifted = lambda + delta;
    // |nu + delta|^2 = |lambda + delta|^2 under the scaled form
    let radius_sq = scale * shifted.norm_sq();
    let mut out = Vec::new();
    for s in p.lattice_f().shifts() {
        let offsets: Vec<Rational> = (s + delta).into_coords();
        let mut current = Vec::with_capacity(p.rank());
        shell_search(
            &offsets,
            scale,
            &radius_sq,
            &mut current,
            &mut |x: &[Rational]| {
                let nu = &Weight::new(x.to_vec()) - delta;
                if p.root_system().is_dominant(&nu, false)? {
                    out.push(nu);
                }
                Ok(())
            },
        )?;
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Enumerate `x` with `x_k` in `offset_k + Z` and `scale * |x|^2 = radius_sq`,
/// pruning on partial sums.
fn shell_search(
    offsets: &[Rational],
    scale: &Rational,
    remaining: &Rational,
    current: &mut Vec<Rational>,
    visit: &mut dyn FnMut(&[Rational]) -> Result<()>,
) -> Result<()> {
    let k = current.len();
    if k == offsets.len() {
        return if remaining.is_zero() {
            visit(current)
        } else {
            Ok(())
        };
    }
    // smallest integer bound with bound^2 >= remaining / scale
    let limit = remaining / scale;
    let mut bound: i64 = 0;
    while int(bound) * int(bound) < limit {
        bound = bound
            .checked_add(1)
            .ok_or(LieError::Overflow("shell enumeration"))?;
    }
    let base = offsets[k].floor();
    let frac = &offsets[k] - &base;
    for j in -bound - 1..=bound + 1 {
        let x = &frac + int(j);
        let cost = scale * &x * &x;
        if cost > *remaining {
            continue;
        }
        current.push(x);
        let rest = remaining - &cost;
        shell_search(offsets, scale, &rest, current, visit)?;
        current.pop();
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    pub fn sign(self) -> i32 {
        match self {
            Side::Plus => 1,
            Side::Minus => -1,
        }
    }
}

/// `dim Hom_H(S^± ⊗ V_nu, V_mu)`, the multiplicity of the `H`-irreducible
/// `mu` in the half-spin representation (dualized according to the parity
/// of `m`) tensored with `V_nu` restricted to `H`.
///
/// The multiplicity is read off as the coefficient of `e^{mu + delta_h}` in
/// the product with the `H` Weyl denominator, evaluated pointwise from the
/// dominant weight multiplicities of `V_nu`.
pub fn frobenius_multiplicity(
    p: &SymmetricPair,
    nu: &Weight,
    mu: &Weight,
    side: Side,
) -> Result<i64> {
    nu.check_rank(p.rank())?;
    mu.check_rank(p.rank())?;
    let parity = if p.m().is_multiple_of(2) {
        side.sign()
    } else {
        -side.sign()
    };
    let spin = spinor_weights(p)?.multiset(parity);
    let pi = weight_multiplicities(p.root_system(), nu)?;
    let delta_h = &p.deltas().delta_h;
    let top = mu + delta_h;
    let mut total = 0i64;
    for w in p.weyl_group_h()?.iter() {
        let x = &top - &w.apply(delta_h);
        let mut coeff = 0i64;
        for (eta, count) in &spin {
            coeff += count * pi.multiplicity(&(&x - eta))?;
        }
        total += w.sign() as i64 * coeff;
    }
    if total < 0 {
        return Err(LieError::Decomposition(format!(
            "negative multiplicity {total} for ({mu}) in the spinor product with ({nu})"
        )));
    }
    Ok(total)
}

/// One shell member and its multiplicities on each side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellRow {
    pub nu: Weight,
    pub plus: i64,
    pub minus: i64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EulerReport {
    pub pair: String,
    pub kernel: KernelResult,
    pub rows: Vec<ShellRow>,
    /// `sum (m+ - m-) [nu]`, nonzero entries only.
    pub signed_sum: BTreeMap<Weight, i64>,
    /// What the classification predicts for the signed sum.
    pub expected: BTreeMap<Weight, i64>,
    /// `m+ + m- <= 1` on every row.
    pub bound_ok: bool,
    pub sum_ok: bool,
}

impl EulerReport {
    pub fn passed(&self) -> bool {
        self.bound_ok && self.sum_ok
    }
}

fn format_sum(m: &BTreeMap<Weight, i64>) -> String {
    if m.is_empty() {
        return "0".into();
    }
    m.iter()
        .map(|(w, c)| match c {
            1 => format!("+[{w}]"),
            -1 => format!("-[{w}]"),
            c => format!("{c:+}[{w}]"),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Display for EulerReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "pair: {}", self.pair)?;
        writeln!(
            f,
            "mu: ({})  lambda: ({})",
            self.kernel.mu, self.kernel.lambda
        )?;
        writeln!(f, "shell ({} members):", self.rows.len())?;
        for r in &self.rows {
            writeln!(f, "  nu=({})  m+={}  m-={}", r.nu, r.plus, r.minus)?;
        }
        writeln!(f, "signed sum: {}", format_sum(&self.signed_sum))?;
        writeln!(
            f,
            "classification: {} -> {}",
            self.kernel.status,
            format_sum(&self.expected)
        )?;
        writeln!(
            f,
            "multiplicity bound: {}",
            if self.bound_ok { "ok" } else { "violated" }
        )?;
        write!(f, "result: {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

fn shell_row(p: &SymmetricPair, nu: &Weight, mu: &Weight) -> Result<ShellRow> {
    Ok(ShellRow {
        nu: nu.clone(),
        plus: frobenius_multiplicity(p, nu, mu, Side::Plus)?,
        minus: frobenius_multiplicity(p, nu, mu, Side::Minus)?,
    })
}

/// Recompute the kernel from the Casimir shell and Frobenius multiplicities
/// and compare with [`dirac_kernel`].
pub fn euler_verify(p: &SymmetricPair, mu: &Weight) -> Result<EulerReport> {
    let kernel = dirac_kernel(p, mu)?;
    let shell = casimir_shell(p, &kernel.lambda)?;

    #[cfg(feature = "parallel")]
    let rows: Vec<ShellRow> = shell
        .par_iter()
        .map(|nu| shell_row(p, nu, mu))
        .collect::<Result<_>>()?;
    #[cfg(not(feature = "parallel"))]
    let rows: Vec<ShellRow> = shell
        .iter()
        .map(|nu| shell_row(p, nu, mu))
        .collect::<Result<_>>()?;

    let bound_ok = rows.iter().all(|r| r.plus + r.minus <= 1);
    let signed_sum: BTreeMap<Weight, i64> = rows
        .iter()
        .filter(|r| r.plus != r.minus)
        .map(|r| (r.nu.clone(), r.plus - r.minus))
        .collect();
    let expected = match (&kernel.status, &kernel.nu) {
        (KernelStatus::Plus, Some(nu)) => BTreeMap::from([(nu.clone(), 1)]),
        (KernelStatus::Minus, Some(nu)) => BTreeMap::from([(nu.clone(), -1)]),
        _ => BTreeMap::new(),
    };
    let sum_ok = signed_sum == expected;
    Ok(EulerReport {
        pair: p.name().to_string(),
        kernel,
        rows,
        signed_sum,
        expected,
        bound_ok,
        sum_ok,
    })
}

/// Checks on the spinor representation of `H`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChiReport {
    pub pair: String,
    /// `Err` carries the consistency failure message.
    pub decomposition: std::result::Result<ChiDecomposition, String>,
    /// Expanded product of `e^{a/2} - e^{-a/2}` equals the signed spinor sum.
    pub trace_identity_ok: bool,
    /// No weight occurs in both half-spin representations.
    pub disjoint_ok: bool,
    /// Every component occurs once.
    pub multiplicity_one_ok: bool,
    pub casimir: std::result::Result<Rational, String>,
}

impl ChiReport {
    pub fn passed(&self) -> bool {
        self.decomposition.is_ok()
            && self.trace_identity_ok
            && self.disjoint_ok
            && self.multiplicity_one_ok
            && self.casimir.is_ok()
    }
}

impl fmt::Display for ChiReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ok = |b: bool| if b { "pass" } else { "FAIL" };
        writeln!(f, "pair: {}", self.pair)?;
        match &self.decomposition {
            Ok(d) => {
                writeln!(f, "{d}")?;
                writeln!(f, "pass  components reproduce the spinor weights")?;
            }
            Err(e) => writeln!(f, "FAIL  decomposition: {e}")?,
        }
        writeln!(
            f,
            "{}  trace difference equals the product formula",
            ok(self.trace_identity_ok)
        )?;
        writeln!(
            f,
            "{}  E+ and E- weights are disjoint",
            ok(self.disjoint_ok)
        )?;
        writeln!(
            f,
            "{}  each component has multiplicity one",
            ok(self.multiplicity_one_ok)
        )?;
        match &self.casimir {
            Ok(c) => writeln!(f, "pass  Casimir acts on every component by {c}")?,
            Err(e) => writeln!(f, "FAIL  Casimir: {e}")?,
        }
        write!(f, "result: {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

fn keep_consistency<T>(r: Result<T>) -> Result<std::result::Result<T, String>> {
    match r {
        Ok(v) => Ok(Ok(v)),
        Err(LieError::Consistency(msg)) => Ok(Err(msg)),
        Err(e) => Err(e),
    }
}

/// Run every spinor check for a pair.
pub fn verify_chi(p: &SymmetricPair) -> Result<ChiReport> {
    let decomposition = keep_consistency(chi_decompose(p))?;
    let spin = spinor_weights(p)?;
    let trace_identity_ok = chi_trace_difference(p)? == spin.signed_character()?;
    let plus = spin.multiset(1);
    let minus = spin.multiset(-1);
    let disjoint_ok = plus.keys().all(|w| !minus.contains_key(w));
    let multiplicity_one_ok = match &decomposition {
        Ok(d) => d.plus.values().chain(d.minus.values()).all(|&c| c == 1),
        Err(_) => false,
    };
    let casimir = keep_consistency(chi_casimir_check(p))?;
    Ok(ChiReport {
        pair: p.name().to_string(),
        decomposition,
        trace_identity_ok,
        disjoint_ok,
        multiplicity_one_ok,
        casimir,
    })
}
