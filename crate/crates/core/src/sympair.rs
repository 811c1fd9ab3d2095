//! Equal-rank symmetric pairs: a root system of `G` with the positive roots of
//! `H` singled out, plus the integrality lattices `F` and `F1`.

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_integer::Integer;
use num_traits::Zero;

use crate::error::{AdmissibilityClause, LieError, Result};
use crate::lattice::{half, is_member, LatticeSpec, Weight};
use crate::roots::{build_classical, half_sum, half_sum_of, Family, RootSystem, WeylElement};

/// Names of the built-in pairs, in listing order.
pub const BUILTIN_NAMES: [&str; 5] = ["so3_so2", "so5_so4", "so7_so6", "so9_so8", "so5_so2xso3"];

/// Half-sums of all, compact and noncompact positive roots.
#[derive(Clone, Debug, PartialEq)]
pub struct Deltas {
    pub delta: Weight,
    pub delta_h: Weight,
    pub delta_p: Weight,
}

/// A coset representative `sigma` with `Delta_h+ ⊆ sigma Delta+`.
#[derive(Clone, Debug, PartialEq)]
pub struct W1Element {
    pub element: WeylElement,
    pub sign: i32,
    /// `sigma(delta) - delta_h`
    pub delta_p_sigma: Weight,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
    /// `2 * |Delta_p+|`
    pub dim_p: usize,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.passed { "pass" } else { "FAIL" };
            write!(f, "{mark}  {}", c.name)?;
            if !c.detail.is_empty() {
                write!(f, ": {}", c.detail)?;
            }
            writeln!(f)?;
        }
        write!(f, "dim p = {}", self.dim_p)
    }
}

#[derive(Debug)]
pub struct SymmetricPair {
    name: String,
    g: RootSystem,
    h: RootSystem,
    h_indices: Vec<usize>,
    p_roots: Vec<Weight>,
    lattice_f: LatticeSpec,
    lattice_f1: LatticeSpec,
    deltas: Deltas,
    w1: OnceLock<Arc<Vec<W1Element>>>,
}

impl Clone for SymmetricPair {
    fn clone(&self) -> Self {
        let w1 = OnceLock::new();
        if let Some(v) = self.w1.get() {
            let _ = w1.set(Arc::clone(v));
        }
        SymmetricPair {
            name: self.name.clone(),
            g: self.g.clone(),
            h: self.h.clone(),
            h_indices: self.h_indices.clone(),
            p_roots: self.p_roots.clone(),
            lattice_f: self.lattice_f.clone(),
            lattice_f1: self.lattice_f1.clone(),
            deltas: self.deltas.clone(),
            w1,
        }
    }
}

impl SymmetricPair {
    /// Assemble a pair without running [`validate_pair`]. Only structural
    /// problems (ranks, indices) are rejected here.
    pub fn new(
        name: impl Into<String>,
        g: RootSystem,
        h_indices: Vec<usize>,
        lattice_f: LatticeSpec,
        lattice_f1: LatticeSpec,
    ) -> Result<Self> {
        let rank = g.rank();
        let n = g.positive_roots().len();
        for (k, &i) in h_indices.iter().enumerate() {
            if i >= n {
                return Err(LieError::InvalidPair(format!(
                    "h root index {i} out of range (there are {n} positive roots)"
                )));
            }
            if h_indices[..k].contains(&i) {
                return Err(LieError::InvalidPair(format!(
                    "h root index {i} is repeated"
                )));
            }
        }
        for l in [&lattice_f, &lattice_f1] {
            if l.rank() != rank {
                return Err(LieError::Dimension {
                    expected: rank,
                    found: l.rank(),
                });
            }
        }
        let mut sorted = h_indices;
        sorted.sort_unstable();
        let h_roots: Vec<Weight> = sorted
            .iter()
            .map(|&i| g.positive_roots()[i].clone())
            .collect();
        let p_roots: Vec<Weight> = g
            .positive_roots()
            .iter()
            .enumerate()
            .filter(|(i, _)| !sorted.contains(i))
            .map(|(_, r)| r.clone())
            .collect();
        let h = RootSystem::new(rank, h_roots, None).map_err(|e| {
            LieError::InvalidPair(format!("h roots do not form a root system: {e}"))
        })?;
        let deltas = Deltas {
            delta: half_sum(&g),
            delta_h: half_sum(&h),
            delta_p: half_sum_of(rank, &p_roots),
        };
        Ok(SymmetricPair {
            name: name.into(),
            g,
            h,
            h_indices: sorted,
            p_roots,
            lattice_f,
            lattice_f1,
            deltas,
            w1: OnceLock::new(),
        })
    }

    /// [`SymmetricPair::new`] followed by [`validate_pair`]; fails with the
    /// first failed check.
    pub fn validated(
        name: impl Into<String>,
        g: RootSystem,
        h_indices: Vec<usize>,
        lattice_f: LatticeSpec,
        lattice_f1: LatticeSpec,
    ) -> Result<Self> {
        let pair = SymmetricPair::new(name, g, h_indices, lattice_f, lattice_f1)?;
        let report = validate_pair(&pair);
        match report.first_failure() {
            None => Ok(pair),
            Some(c) => Err(LieError::InvalidPair(format!("{}: {}", c.name, c.detail))),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.g.rank()
    }

    /// Root system of `G`.
    pub fn root_system(&self) -> &RootSystem {
        &self.g
    }

    /// Root system of `H`, spanned by `Delta_h+`.
    pub fn h_system(&self) -> &RootSystem {
        &self.h
    }

    /// Indices of `Delta_h+` in the positive roots of `G`, ascending.
    pub fn h_indices(&self) -> &[usize] {
        &self.h_indices
    }

    pub fn h_positive(&self) -> &[Weight] {
        self.h.positive_roots()
    }

    /// `Delta_p+`, in the order of the positive roots of `G`.
    pub fn p_positive(&self) -> &[Weight] {
        &self.p_roots
    }

    /// `m = |Delta_p+|`, half the dimension of `p`.
    pub fn m(&self) -> usize {
        self.p_roots.len()
    }

    pub fn lattice_f(&self) -> &LatticeSpec {
        &self.lattice_f
    }

    pub fn lattice_f1(&self) -> &LatticeSpec {
        &self.lattice_f1
    }

    pub fn deltas(&self) -> &Deltas {
        &self.deltas
    }

    pub fn weyl_group(&self) -> Result<Arc<Vec<WeylElement>>> {
        self.g.weyl_group()
    }

    /// `W_H`, generated by the reflections in `Delta_h+`.
    pub fn weyl_group_h(&self) -> Result<Arc<Vec<WeylElement>>> {
        self.h.weyl_group()
    }

    /// `Delta_h+ ⊆ sigma Delta+`, i.e. `sigma^{-1}` keeps every compact
    /// positive root positive.
    pub fn is_in_w1(&self, sigma: &WeylElement) -> bool {
        let inv = sigma.inverse();
        self.h_positive()
            .iter()
            .all(|a| self.g.position(&inv.apply(a)).is_some())
    }

    /// `nu` lies in `F_G`: in `F` and dominant for `Delta+`.
    pub fn in_fg(&self, nu: &Weight) -> Result<bool> {
        Ok(is_member(nu, &self.lattice_f)? && self.g.is_dominant(nu, false)?)
    }
}

/// Run every structural check on a pair.
pub fn validate_pair(p: &SymmetricPair) -> ValidationReport {
    let mut checks = Vec::new();
    checks.push(Check {
        name: "p nonempty",
        passed: p.m() > 0,
        detail: if p.m() > 0 {
            String::new()
        } else {
            "every positive root is compact".into()
        },
    });
    checks.push(grading_check(p));
    checks.push(parity_check(p));
    let contained = p.lattice_f1.contains_lattice(&p.lattice_f).unwrap_or(false);
    checks.push(Check {
        name: "F contained in F1",
        passed: contained,
        detail: if contained {
            String::new()
        } else {
            "some coset of F is not in F1".into()
        },
    });
    let dim_p = 2 * p.m();
    ValidationReport { checks, dim_p }
}

fn grading_check(p: &SymmetricPair) -> Check {
    let roots = p.g.positive_roots();
    let in_h = |i: usize| p.h_indices.binary_search(&i).is_ok();
    let class = |h: bool| if h { "h" } else { "p" };
    for i in 0..roots.len() {
        for j in i..roots.len() {
            let sum = &roots[i] + &roots[j];
            let Some(k) = p.g.position(&sum) else {
                continue;
            };
            let want_h = in_h(i) == in_h(j);
            if in_h(k) != want_h {
                return Check {
                    name: "grading closure",
                    passed: false,
                    detail: format!(
                        "({}) + ({}) = ({}) should lie in {}",
                        roots[i],
                        roots[j],
                        sum,
                        class(want_h)
                    ),
                };
            }
        }
    }
    Check {
        name: "grading closure",
        passed: true,
        detail: String::new(),
    }
}

fn parity_check(p: &SymmetricPair) -> Check {
    let simple = p.g.simple_roots();
    let p_simple: Vec<bool> = simple.iter().map(|s| !p.h_positive().contains(s)).collect();
    for (i, root) in p.g.positive_roots().iter().enumerate() {
        let coords = p.g.simple_coordinates(i);
        let level = coords
            .iter()
            .zip(&p_simple)
            .filter(|(_, &is_p)| is_p)
            .fold(num_bigint::BigInt::zero(), |acc, (c, _)| acc + c);
        let compact = p.h_indices.binary_search(&i).is_ok();
        if level.is_even() != compact {
            return Check {
                name: "p-level parity",
                passed: false,
                detail: format!(
                    "root ({root}) has p-level {level} but is {}",
                    if compact { "compact" } else { "noncompact" }
                ),
            };
        }
    }
    Check {
        name: "p-level parity",
        passed: true,
        detail: String::new(),
    }
}

/// All `sigma` in `W` with `Delta_h+ ⊆ sigma Delta+`, in Weyl group order.
pub fn w1_enumerate(p: &SymmetricPair) -> Result<Arc<Vec<W1Element>>> {
    if let Some(v) = p.w1.get() {
        return Ok(Arc::clone(v));
    }
    let d = p.deltas();
    let list: Vec<W1Element> = p
        .weyl_group()?
        .iter()
        .filter(|s| p.is_in_w1(s))
        .map(|s| W1Element {
            element: s.clone(),
            sign: s.sign(),
            delta_p_sigma: &s.apply(&d.delta) - &d.delta_h,
        })
        .collect();
    Ok(Arc::clone(p.w1.get_or_init(|| Arc::new(list))))
}

pub fn deltas(p: &SymmetricPair) -> Deltas {
    p.deltas().clone()
}

/// Which admissibility clause `mu` fails, if any.
pub fn check_admissible(p: &SymmetricPair, mu: &Weight) -> Result<()> {
    mu.check_rank(p.rank())?;
    if !is_member(mu, p.lattice_f1())? {
        return Err(LieError::Inadmissible(AdmissibilityClause::NotInF1));
    }
    if !p.h_system().is_dominant(mu, false)? {
        return Err(LieError::Inadmissible(AdmissibilityClause::NotHDominant));
    }
    if !is_member(&(mu - &p.deltas().delta_p), p.lattice_f())? {
        return Err(LieError::Inadmissible(AdmissibilityClause::ShiftNotInF));
    }
    Ok(())
}

/// `mu` is in `F1`, dominant for `Delta_h+`, and `mu - delta_p` is in `F`.
pub fn admissible_mu(p: &SymmetricPair, mu: &Weight) -> Result<bool> {
    match check_admissible(p, mu) {
        Ok(()) => Ok(true),
        Err(LieError::Inadmissible(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

pub fn builtin_names() -> &'static [&'static str] {
    &BUILTIN_NAMES
}

/// Look up a built-in pair by name.
pub fn builtin(name: &str) -> Result<SymmetricPair> {
    let odd_sphere = |m: usize| -> Result<SymmetricPair> {
        let g = build_classical(Family::B, m)?;
        // the long roots e_i ± e_j form D_m
        let h: Vec<usize> = (0..g.positive_roots().len())
            .filter(|&i| g.positive_roots()[i].norm_sq() == crate::lattice::int(2))
            .collect();
        SymmetricPair::validated(
            name,
            g,
            h,
            LatticeSpec::integral(m),
            LatticeSpec::integral_or_half(m),
        )
    };
    match name {
        "so3_so2" => odd_sphere(1),
        "so5_so4" => odd_sphere(2),
        "so7_so6" => odd_sphere(3),
        "so9_so8" => odd_sphere(4),
        "so5_so2xso3" => {
            let g = build_classical(Family::B, 2)?;
            let e2 = g
                .position(&Weight::from_ints(&[0, 1]))
                .expect("e2 is a positive root of B2");
            let f1 = LatticeSpec::new(
                2,
                vec![Weight::zero(2), Weight::new(vec![half(), Zero::zero()])],
            )?;
            SymmetricPair::validated(name, g, vec![e2], LatticeSpec::integral(2), f1)
        }
        _ => Err(LieError::UnknownPair(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b2_with(h: &[[i64; 2]]) -> SymmetricPair {
        let g = build_classical(Family::B, 2).unwrap();
        let idx = h
            .iter()
            .map(|r| g.position(&Weight::from_ints(r)).unwrap())
            .collect();
        SymmetricPair::new(
            "test",
            g,
            idx,
            LatticeSpec::integral(2),
            LatticeSpec::integral_or_half(2),
        )
        .unwrap()
    }

    #[test]
    fn validation_examples() {
        assert!(validate_pair(&b2_with(&[[1, -1], [1, 1]])).passed());
        assert!(validate_pair(&b2_with(&[[0, 1]])).passed());
        let bad = validate_pair(&b2_with(&[[1, -1]]));
        let failure = bad.first_failure().unwrap();
        assert_eq!(failure.name, "grading closure");
        assert_eq!(bad.dim_p, 6);
    }

    #[test]
    fn all_compact_is_rejected() {
        let r = validate_pair(&b2_with(&[[1, -1], [1, 1], [1, 0], [0, 1]]));
        assert_eq!(r.first_failure().unwrap().name, "p nonempty");
    }

    #[test]
    fn w1_examples() {
        let so3 = builtin("so3_so2").unwrap();
        let w1 = w1_enumerate(&so3).unwrap();
        let signs: Vec<i32> = w1.iter().map(|s| s.sign).collect();
        assert_eq!(w1.len(), 2);
        assert!(signs.contains(&1) && signs.contains(&-1));

        let so5 = builtin("so5_so4").unwrap();
        let w1 = w1_enumerate(&so5).unwrap();
        let mut dps: Vec<Weight> = w1.iter().map(|s| s.delta_p_sigma.clone()).collect();
        dps.sort();
        assert_eq!(
            dps,
            vec![
                Weight::from_ratios(&[(1, 2), (-1, 2)]),
                Weight::from_ratios(&[(1, 2), (1, 2)])
            ]
        );
        let nontrivial = w1.iter().find(|s| !s.element.is_identity()).unwrap();
        assert_eq!(
            nontrivial.element,
            WeylElement::reflection(&Weight::from_ints(&[0, 1]))
        );

        assert_eq!(
            w1_enumerate(&builtin("so5_so2xso3").unwrap())
                .unwrap()
                .len(),
            4
        );
    }

    #[test]
    fn deltas_examples() {
        let d = deltas(&builtin("so3_so2").unwrap());
        assert_eq!(d.delta, Weight::from_ratios(&[(1, 2)]));
        assert_eq!(d.delta_h, Weight::zero(1));
        assert_eq!(d.delta_p, d.delta);

        let d = deltas(&builtin("so5_so4").unwrap());
        assert_eq!(d.delta, Weight::from_ratios(&[(3, 2), (1, 2)]));
        assert_eq!(d.delta_h, Weight::from_ints(&[1, 0]));
        assert_eq!(d.delta_p, Weight::from_ratios(&[(1, 2), (1, 2)]));

        let d = deltas(&builtin("so5_so2xso3").unwrap());
        assert_eq!(d.delta_p, Weight::from_ratios(&[(3, 2), (0, 1)]));
        assert_eq!(d.delta_h, Weight::from_ratios(&[(0, 1), (1, 2)]));
    }

    #[test]
    fn admissibility_examples() {
        let so5 = builtin("so5_so4").unwrap();
        assert!(admissible_mu(&so5, &Weight::from_ratios(&[(3, 2), (-1, 2)])).unwrap());
        assert_eq!(
            check_admissible(&so5, &Weight::from_ratios(&[(1, 2), (3, 2)])),
            Err(LieError::Inadmissible(AdmissibilityClause::NotHDominant))
        );
        let so3 = builtin("so3_so2").unwrap();
        assert!(admissible_mu(&so3, &Weight::from_ratios(&[(5, 2)])).unwrap());
        assert_eq!(
            check_admissible(&so3, &Weight::from_ints(&[2])),
            Err(LieError::Inadmissible(AdmissibilityClause::ShiftNotInF))
        );
        assert_eq!(
            check_admissible(&so5, &Weight::from_ratios(&[(3, 2), (1, 1)])),
            Err(LieError::Inadmissible(AdmissibilityClause::NotInF1))
        );
        assert!(admissible_mu(&so5, &Weight::from_ints(&[1])).is_err());
    }

    #[test]
    fn builtins_validate() {
        for name in builtin_names() {
            let p = builtin(name).unwrap();
            assert!(validate_pair(&p).passed(), "{name}");
        }
        assert_eq!(
            builtin("so11_so10").unwrap_err(),
            LieError::UnknownPair("so11_so10".into())
        );
    }

    #[test]
    fn bad_indices_are_rejected() {
        let g = build_classical(Family::B, 2).unwrap();
        let l = LatticeSpec::integral(2);
        assert!(SymmetricPair::new("x", g.clone(), vec![7], l.clone(), l.clone()).is_err());
        assert!(SymmetricPair::new("x", g, vec![1, 1], l.clone(), l).is_err());
    }
}
