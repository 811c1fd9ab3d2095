//! Spinors: an explicit Clifford algebra model over the Gaussian integers,
//! spinor weights of the isotropy representation, and the splitting of the
//! spinor character into irreducibles of `H`.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::characters::{irreducible_character, FormalCharacter};
use crate::error::{LieError, Result};
use crate::lattice::{half, Rational, Weight};
use crate::sympair::{w1_enumerate, SymmetricPair};

/// Gaussian integer.
pub type GaussInt = Complex<i64>;

type ExactComplex = Complex<Rational>;

/// Dense square matrix over the Gaussian integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussMatrix {
    size: usize,
    data: Vec<GaussInt>,
}

impl GaussMatrix {
    pub fn zero(size: usize) -> Self {
        GaussMatrix {
            size,
            data: vec![GaussInt::zero(); size * size],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = GaussMatrix::zero(size);
        for i in 0..size {
            m.data[i * size + i] = GaussInt::one();
        }
        m
    }

    fn from_rows(rows: [[GaussInt; 2]; 2]) -> Self {
        GaussMatrix {
            size: 2,
            data: rows.concat(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, row: usize, col: usize) -> GaussInt {
        self.data[row * self.size + col]
    }

    pub fn mul(&self, other: &GaussMatrix) -> GaussMatrix {
        let n = self.size;
        let mut out = GaussMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        out
    }

    pub fn add(&self, other: &GaussMatrix) -> GaussMatrix {
        GaussMatrix {
            size: self.size,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: GaussInt) -> GaussMatrix {
        GaussMatrix {
            size: self.size,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &GaussMatrix) -> GaussMatrix {
        let (n, p) = (self.size, other.size);
        let mut out = GaussMatrix::zero(n * p);
        for i in 0..n {
            for j in 0..n {
                let a = self.data[i * n + j];
                if a.is_zero() {
                    continue;
                }
                for k in 0..p {
                    for l in 0..p {
                        out.data[(i * p + k) * n * p + j * p + l] = a * other.data[k * p + l];
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Apply to a column vector over `Q(i)`.
    fn apply(&self, v: &[ExactComplex]) -> Vec<ExactComplex> {
        let n = self.size;
        (0..n)
            .map(|i| {
                let mut acc = ExactComplex::zero();
                for (&a, x) in self.data[i * n..(i + 1) * n].iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += to_exact(a) * x.clone();
                    }
                }
                acc
            })
            .collect()
    }

    fn exact_rows(&self) -> Vec<Vec<ExactComplex>> {
        (0..self.size)
            .map(|i| (0..self.size).map(|j| to_exact(self.get(i, j))).collect())
            .collect()
    }
}

fn to_exact(z: GaussInt) -> ExactComplex {
    Complex::new(
        Rational::from_integer(z.re.into()),
        Rational::from_integer(z.im.into()),
    )
}

/// Basis of the null space of the matrix with the given rows, by exact
/// Gauss-Jordan elimination over `Q(i)`.
fn nullspace(mut rows: Vec<Vec<ExactComplex>>, ncols: usize) -> Vec<Vec<ExactComplex>> {
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = ExactComplex::one() / rows[r][col].clone();
        for x in rows[r].iter_mut() {
            if !x.is_zero() {
                *x = x.clone() * inv.clone();
            }
        }
        let pivot = rows[r].clone();
        for (i, line) in rows.iter_mut().enumerate() {
            if i == r || line[col].is_zero() {
                continue;
            }
            let f = line[col].clone();
            for (x, p) in line.iter_mut().zip(&pivot) {
                if !p.is_zero() {
                    *x = x.clone() - f.clone() * p.clone();
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![ExactComplex::zero(); ncols];
            v[f] = ExactComplex::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[i][f].clone();
            }
            v
        })
        .collect()
}

/// Generators `e_1..e_n` of the complex Clifford algebra with
/// `e_j e_k + e_k e_j = -2 delta_jk`, acting on spinors `S = C^(2^m)`.
#[derive(Clone, Debug)]
pub struct CliffordModel {
    n: usize,
    generators: Vec<GaussMatrix>,
    volume: GaussMatrix,
    half_spin_dims: (usize, usize),
}

/// Largest `n` accepted by [`build_clifford`].
pub const MAX_CLIFFORD_DIM: usize = 12;

fn pauli() -> [GaussMatrix; 4] {
    let (o, l, i) = (GaussInt::zero(), GaussInt::one(), GaussInt::i());
    [
        GaussMatrix::identity(2),
        GaussMatrix::from_rows([[o, l], [l, o]]),
        GaussMatrix::from_rows([[o, -i], [i, o]]),
        GaussMatrix::from_rows([[l, o], [o, -l]]),
    ]
}

/// Build and verify the Clifford model for even `n` in `2..=12`, using a
/// Jordan-Wigner chain of Pauli matrices.
pub fn build_clifford(n: usize) -> Result<CliffordModel> {
    if !n.is_multiple_of(2) || !(2..=MAX_CLIFFORD_DIM).contains(&n) {
        return Err(LieError::Clifford(format!(
            "n must be even and between 2 and {MAX_CLIFFORD_DIM}, got {n}"
        )));
    }
    let m = n / 2;
    let [id, sx, sy, sz] = pauli();
    let string = |k: usize, middle: &GaussMatrix| -> GaussMatrix {
        let mut out = GaussMatrix::identity(1);
        for j in 0..m {
            let factor = match j.cmp(&k) {
                std::cmp::Ordering::Less => &sz,
                std::cmp::Ordering::Equal => middle,
                std::cmp::Ordering::Greater => &id,
            };
            out = out.kron(factor);
        }
        out
    };
    let generators: Vec<GaussMatrix> = (0..m)
        .flat_map(|k| [string(k, &sx), string(k, &sy)])
        .map(|g| g.scale(GaussInt::i()))
        .collect();
    let mut volume = GaussMatrix::identity(1 << m);
    for g in &generators {
        volume = volume.mul(g);
    }
    volume = volume.scale(GaussInt::i().powu(m as u32));

    let mut model = CliffordModel {
        n,
        generators,
        volume,
        half_spin_dims: (0, 0),
    };
    model.verify()?;
    Ok(model)
}

impl CliffordModel {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.n / 2
    }

    /// `dim S = 2^m`.
    pub fn spinor_dim(&self) -> usize {
        1 << self.m()
    }

    pub fn generators(&self) -> &[GaussMatrix] {
        &self.generators
    }

    /// `omega'_C = i^m e_1 ... e_n`.
    pub fn volume(&self) -> &GaussMatrix {
        &self.volume
    }

    /// `omega_k = -i e_{2k-1} e_{2k}` for zero-based `k`.
    pub fn omega(&self, k: usize) -> GaussMatrix {
        self.generators[2 * k]
            .mul(&self.generators[2 * k + 1])
            .scale(-GaussInt::i())
    }

    /// Dimensions of the `+1` and `-1` eigenspaces of the volume element.
    pub fn half_spin_dims(&self) -> (usize, usize) {
        self.half_spin_dims
    }

    /// Every anticommutator `e_j e_k + e_k e_j + 2 delta_jk`, which must vanish.
    pub fn relations_hold(&self) -> bool {
        let size = self.spinor_dim();
        let two = GaussMatrix::identity(size).scale(GaussInt::new(2, 0));
        for (j, a) in self.generators.iter().enumerate() {
            for (k, b) in self.generators.iter().enumerate().skip(j) {
                let mut anti = a.mul(b).add(&b.mul(a));
                if j == k {
                    anti = anti.add(&two);
                }
                if !anti.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    fn verify(&mut self) -> Result<()> {
        let size = self.spinor_dim();
        let id = GaussMatrix::identity(size);
        if !self.relations_hold() {
            return Err(LieError::Clifford("Clifford relations fail".into()));
        }
        if self.volume.mul(&self.volume) != id {
            return Err(LieError::Clifford(
                "volume element does not square to 1".into(),
            ));
        }
        for j in 0..self.n {
            for k in j + 1..self.n {
                let even = self.generators[j].mul(&self.generators[k]);
                if self.volume.mul(&even) != even.mul(&self.volume) {
                    return Err(LieError::Clifford(format!(
                        "volume element does not commute with e_{} e_{}",
                        j + 1,
                        k + 1
                    )));
                }
            }
        }
        let minus = id.scale(-GaussInt::one());
        let plus_dim = nullspace(self.volume.add(&minus).exact_rows(), size).len();
        let minus_dim = nullspace(self.volume.add(&id).exact_rows(), size).len();
        let expected = size / 2;
        if plus_dim != expected || minus_dim != expected {
            return Err(LieError::Clifford(format!(
                "half-spin eigenspaces have dimensions {plus_dim} and {minus_dim}, expected {expected}"
            )));
        }
        self.half_spin_dims = (plus_dim, minus_dim);
        Ok(())
    }
}

/// A joint eigenspace of the commuting involutions `omega_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JointEigenspace {
    pub epsilon: Vec<i32>,
    pub weight: Weight,
    pub dim: usize,
    /// Eigenvalue of the volume element on this space.
    pub volume_eigenvalue: i32,
}

/// Sign vector for a bitmask: bit `k` set means `eps_k = -1`.
pub fn epsilon_from_mask(mask: usize, m: usize) -> Vec<i32> {
    (0..m)
        .map(|k| if mask >> k & 1 == 1 { -1 } else { 1 })
        .collect()
}

/// Joint eigenspaces of `omega_1..omega_m`, one per sign vector, computed as
/// exact kernels of the stacked matrices `omega_k - eps_k`.
pub fn joint_eigenspaces(c: &CliffordModel) -> Result<Vec<JointEigenspace>> {
    let m = c.m();
    let size = c.spinor_dim();
    let omegas: Vec<GaussMatrix> = (0..m).map(|k| c.omega(k)).collect();
    let mut out = Vec::with_capacity(size);
    for mask in 0..size {
        let epsilon = epsilon_from_mask(mask, m);
        let mut rows = Vec::with_capacity(m * size);
        for (om, &e) in omegas.iter().zip(&epsilon) {
            let shifted = om.add(&GaussMatrix::identity(size).scale(GaussInt::new(-e as i64, 0)));
            rows.extend(shifted.exact_rows());
        }
        let basis = nullspace(rows, size);
        let mut volume_eigenvalue = 0;
        for v in &basis {
            let image = c.volume.apply(v);
            let ev = [1, -1].into_iter().find(|&s| {
                image
                    .iter()
                    .zip(v)
                    .all(|(a, b)| *a == b.clone() * to_exact(GaussInt::new(s, 0)))
            });
            match (ev, volume_eigenvalue) {
                (Some(s), 0) => volume_eigenvalue = s as i32,
                (Some(s), prev) if prev == s as i32 => {}
                _ => {
                    return Err(LieError::Clifford(
                        "joint eigenspace is not inside a single half-spin space".into(),
                    ))
                }
            }
        }
        let weight = Weight::new(
            epsilon
                .iter()
                .map(|&e| half() * Rational::from_integer(e.into()))
                .collect(),
        );
        out.push(JointEigenspace {
            epsilon,
            weight,
            dim: basis.len(),
            volume_eigenvalue,
        });
    }
    Ok(out)
}

/// Weights `eps / 2` of the joint eigenspaces, repeated by dimension, sorted.
pub fn simultaneous_spin_weights(c: &CliffordModel) -> Result<Vec<Weight>> {
    let mut out: Vec<Weight> = joint_eigenspaces(c)?
        .into_iter()
        .flat_map(|s| std::iter::repeat_n(s.weight, s.dim))
        .collect();
    out.sort();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinorEntry {
    pub epsilon: Vec<i32>,
    pub weight: Weight,
    /// `+1` for an even number of minus signs (E+), else `-1`.
    pub parity: i32,
}

/// The `2^m` spinor weights `1/2 sum eps_k alpha_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinorWeights {
    pub rank: usize,
    pub entries: Vec<SpinorEntry>,
}

impl SpinorWeights {
    /// Weights of the given parity with multiplicities.
    pub fn multiset(&self, parity: i32) -> BTreeMap<Weight, i64> {
        let mut out = BTreeMap::new();
        for e in self.entries.iter().filter(|e| e.parity == parity) {
            *out.entry(e.weight.clone()).or_insert(0) += 1;
        }
        out
    }

    pub fn character(&self, parity: i32) -> Result<FormalCharacter> {
        let set = self.multiset(parity);
        FormalCharacter::from_terms(self.rank, set.iter().map(|(w, &c)| (w, c)))
    }

    /// `sum_{E+} e^w - sum_{E-} e^w`.
    pub fn signed_character(&self) -> Result<FormalCharacter> {
        self.character(1)?.try_sub(&self.character(-1)?)
    }
}

/// Spinor weights for an arbitrary list of roots `alpha_1..alpha_m`.
/// Equal weights from different sign vectors stay separate entries.
pub fn spinor_weights_of(rank: usize, roots: &[Weight]) -> Result<SpinorWeights> {
    for r in roots {
        r.check_rank(rank)?;
    }
    let m = roots.len();
    if m >= usize::BITS as usize - 1 {
        return Err(LieError::Overflow("spinor weight enumeration"));
    }
    let entries = (0..1usize << m)
        .map(|mask| {
            let epsilon = epsilon_from_mask(mask, m);
            let sum = roots
                .iter()
                .zip(&epsilon)
                .fold(
                    Weight::zero(rank),
                    |acc, (a, &e)| {
                        if e > 0 {
                            &acc + a
                        } else {
                            &acc - a
                        }
                    },
                );
            let parity = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
            SpinorEntry {
                epsilon,
                weight: sum.scale(&half()),
                parity,
            }
        })
        .collect();
    Ok(SpinorWeights { rank, entries })
}

/// Spinor weights over `Delta_p+` in pair order.
pub fn spinor_weights(p: &SymmetricPair) -> Result<SpinorWeights> {
    spinor_weights_of(p.rank(), p.p_positive())
}

/// `prod_{alpha in Delta_p+} (e^{alpha/2} - e^{-alpha/2})`.
pub fn chi_trace_difference(p: &SymmetricPair) -> Result<FormalCharacter> {
    let mut out = FormalCharacter::monomial(&Weight::zero(p.rank()))?;
    for a in p.p_positive() {
        let h = a.scale(&half());
        let factor = FormalCharacter::monomial(&h)?.try_sub(&FormalCharacter::monomial(&-&h)?)?;
        out = out.try_mul(&factor)?;
    }
    Ok(out)
}

/// Highest weights of the `H`-irreducibles in the two half-spin
/// representations, with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiDecomposition {
    pub plus: BTreeMap<Weight, i64>,
    pub minus: BTreeMap<Weight, i64>,
}

impl fmt::Display for ChiDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |m: &BTreeMap<Weight, i64>| {
            m.iter()
                .map(|(w, c)| {
                    if *c == 1 {
                        format!("({w})")
                    } else {
                        format!("{c} x ({w})")
                    }
                })
                .collect::<Vec<_>>()
                .join(" + ")
        };
        writeln!(f, "chi+ = {}", side(&self.plus))?;
        write!(f, "chi- = {}", side(&self.minus))
    }
}

/// Group weights into plus/minus maps by sign, adding up repeated keys.
pub fn group_by_sign(items: impl IntoIterator<Item = (Weight, i32)>) -> ChiDecomposition {
    let mut plus = BTreeMap::new();
    let mut minus = BTreeMap::new();
    for (w, s) in items {
        let side = if s > 0 { &mut plus } else { &mut minus };
        *side.entry(w).or_insert(0) += 1;
    }
    ChiDecomposition { plus, minus }
}

/// Split the half-spin representations over `W_1^+` and `W_1^-`, keyed by
/// `delta_p^sigma`, and check each side against the spinor weights.
pub fn chi_decompose(p: &SymmetricPair) -> Result<ChiDecomposition> {
    let dec = group_by_sign(
        w1_enumerate(p)?
            .iter()
            .map(|s| (s.delta_p_sigma.clone(), s.sign)),
    );
    let spin = spinor_weights(p)?;
    for (parity, side) in [(1, &dec.plus), (-1, &dec.minus)] {
        let mut total = FormalCharacter::zero(p.rank());
        for (hw, &count) in side {
            let ch = irreducible_character(p.h_system(), hw)?.scale(count)?;
            total = total.try_add(&ch)?;
        }
        if total != spin.character(parity)? {
            let label = if parity > 0 { "+" } else { "-" };
            return Err(LieError::Consistency(format!(
                "chi{label} components do not reproduce the E{label} spinor weights"
            )));
        }
    }
    Ok(dec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sympair::builtin;

    fn wr(c: &[(i64, i64)]) -> Weight {
        Weight::from_ratios(c)
    }

    #[test]
    fn clifford_small_cases() {
        let c2 = build_clifford(2).unwrap();
        assert_eq!(c2.spinor_dim(), 2);
        assert_eq!(c2.half_spin_dims(), (1, 1));
        let e = c2.generators();
        assert!(e[0].mul(&e[1]).add(&e[1].mul(&e[0])).is_zero());
        assert_eq!(build_clifford(4).unwrap().spinor_dim(), 4);
        assert!(build_clifford(3).is_err());
        assert!(build_clifford(14).is_err());
        assert!(build_clifford(0).is_err());
    }

    #[test]
    fn generator_entries_are_units() {
        let c = build_clifford(6).unwrap();
        for g in c.generators() {
            for i in 0..g.size() {
                for j in 0..g.size() {
                    let z = g.get(i, j);
                    assert!(z.re.abs() + z.im.abs() <= 1);
                }
            }
        }
    }

    #[test]
    fn joint_spectrum() {
        let c2 = build_clifford(2).unwrap();
        assert_eq!(
            simultaneous_spin_weights(&c2).unwrap(),
            vec![wr(&[(-1, 2)]), wr(&[(1, 2)])]
        );
        let c4 = build_clifford(4).unwrap();
        let weights = simultaneous_spin_weights(&c4).unwrap();
        assert_eq!(weights.len(), 4);
        let mut dedup = weights.clone();
        dedup.dedup();
        assert_eq!(dedup, weights);
    }

    #[test]
    fn volume_eigenvalue_on_joint_eigenspaces() {
        for n in [2, 4, 6, 8] {
            let c = build_clifford(n).unwrap();
            let m = c.m() as u32;
            for s in joint_eigenspaces(&c).unwrap() {
                let prod: i32 = s.epsilon.iter().product();
                assert_eq!(s.volume_eigenvalue, (-1i32).pow(m) * prod, "n={n}");
            }
        }
    }

    #[test]
    fn spinor_weight_examples() {
        let so3 = spinor_weights(&builtin("so3_so2").unwrap()).unwrap();
        assert_eq!(so3.multiset(1), BTreeMap::from([(wr(&[(1, 2)]), 1)]));
        assert_eq!(so3.multiset(-1), BTreeMap::from([(wr(&[(-1, 2)]), 1)]));

        let so5 = spinor_weights(&builtin("so5_so4").unwrap()).unwrap();
        assert_eq!(
            so5.multiset(1),
            BTreeMap::from([(wr(&[(1, 2), (1, 2)]), 1), (wr(&[(-1, 2), (-1, 2)]), 1)])
        );
        assert_eq!(
            so5.multiset(-1),
            BTreeMap::from([(wr(&[(1, 2), (-1, 2)]), 1), (wr(&[(-1, 2), (1, 2)]), 1)])
        );

        let b2 = spinor_weights(&builtin("so5_so2xso3").unwrap()).unwrap();
        assert_eq!(b2.entries.len(), 8);
        assert_eq!(b2.entries[0].weight, wr(&[(3, 2), (0, 1)]));
    }

    #[test]
    fn trace_difference_examples() {
        let so3 = builtin("so3_so2").unwrap();
        let d = chi_trace_difference(&so3).unwrap();
        assert_eq!(
            d.to_map(),
            BTreeMap::from([(wr(&[(1, 2)]), 1), (wr(&[(-1, 2)]), -1)])
        );

        let so5 = builtin("so5_so4").unwrap();
        let d = chi_trace_difference(&so5).unwrap();
        assert_eq!(
            d.to_map(),
            BTreeMap::from([
                (wr(&[(1, 2), (1, 2)]), 1),
                (wr(&[(1, 2), (-1, 2)]), -1),
                (wr(&[(-1, 2), (1, 2)]), -1),
                (wr(&[(-1, 2), (-1, 2)]), 1),
            ])
        );
        assert_eq!(d, spinor_weights(&so5).unwrap().signed_character().unwrap());
    }

    #[test]
    fn chi_decompose_examples() {
        let so5 = chi_decompose(&builtin("so5_so4").unwrap()).unwrap();
        assert_eq!(so5.plus, BTreeMap::from([(wr(&[(1, 2), (1, 2)]), 1)]));
        assert_eq!(so5.minus, BTreeMap::from([(wr(&[(1, 2), (-1, 2)]), 1)]));
        let so3 = chi_decompose(&builtin("so3_so2").unwrap()).unwrap();
        assert_eq!(so3.plus, BTreeMap::from([(wr(&[(1, 2)]), 1)]));
        assert_eq!(so3.minus, BTreeMap::from([(wr(&[(-1, 2)]), 1)]));
    }

    #[test]
    fn repeated_weights_are_merged() {
        let e1 = Weight::from_ints(&[1]);
        let sw = spinor_weights_of(1, &[e1.clone(), e1.clone()]).unwrap();
        assert_eq!(sw.entries.len(), 4);
        assert_eq!(sw.multiset(-1), BTreeMap::from([(Weight::zero(1), 2)]));
        assert_eq!(sw.character(-1).unwrap().coefficient(&Weight::zero(1)), 2);

        let dec = group_by_sign([(e1.clone(), 1), (e1.clone(), 1), (Weight::zero(1), -1)]);
        assert_eq!(dec.plus, BTreeMap::from([(e1, 2)]));
        assert_eq!(dec.minus, BTreeMap::from([(Weight::zero(1), 1)]));
    }

    #[test]
    fn parity_split_is_order_independent() {
        let p = builtin("so5_so2xso3").unwrap();
        let mut roots = p.p_positive().to_vec();
        let a = spinor_weights_of(2, &roots).unwrap();
        roots.reverse();
        let b = spinor_weights_of(2, &roots).unwrap();
        assert_eq!(a.multiset(1), b.multiset(1));
        assert_eq!(a.multiset(-1), b.multiset(-1));
    }
}
