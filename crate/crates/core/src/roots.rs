//! Root systems given by explicit positive roots, and their Weyl groups as
//! exact orthogonal matrices.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{LieError, Result};
use crate::lattice::{inner_product, int, Rational, Weight};

/// Default cap on the number of Weyl group elements enumerated.
pub const DEFAULT_WEYL_LIMIT: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
        };
        f.write_str(c)
    }
}

impl FromStr for Family {
    type Err = LieError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            _ => Err(LieError::UnsupportedFamily(s.to_string())),
        }
    }
}

/// Parse labels such as `B2` or `d4`.
pub fn parse_family_rank(label: &str) -> Result<(Family, usize)> {
    let label = label.trim();
    let mut chars = label.chars();
    let head = chars
        .next()
        .ok_or_else(|| LieError::UnsupportedFamily(label.to_string()))?;
    let family: Family = head.to_string().parse()?;
    let rank: usize = chars
        .as_str()
        .parse()
        .map_err(|_| LieError::UnsupportedFamily(label.to_string()))?;
    Ok((family, rank))
}

/// An element of the Weyl group stored as an exact matrix acting on the
/// ambient coordinates, with its sign and, when known, a word in the simple
/// reflections (`s_{word[0]} s_{word[1]} ...`).
#[derive(Clone, Debug)]
pub struct WeylElement {
    dim: usize,
    // row-major; column k is the image of e_k
    matrix: Vec<Rational>,
    word: Option<Vec<usize>>,
    sign: i32,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for WeylElement {}

impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

impl WeylElement {
    pub fn identity(dim: usize) -> Self {
        let mut matrix = vec![Rational::zero(); dim * dim];
        for i in 0..dim {
            matrix[i * dim + i] = Rational::one();
        }
        WeylElement {
            dim,
            matrix,
            word: Some(Vec::new()),
            sign: 1,
        }
    }

    /// The reflection `v -> v - 2<v,a>/<a,a> a`, with no word attached.
    pub fn reflection(alpha: &Weight) -> Self {
        let dim = alpha.rank();
        let norm = alpha.norm_sq();
        let a = alpha.coords();
        let mut matrix = vec![Rational::zero(); dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                let delta = if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                };
                matrix[i * dim + j] = delta - int(2) * &a[i] * &a[j] / &norm;
            }
        }
        WeylElement {
            dim,
            matrix,
            word: None,
            sign: -1,
        }
    }

    fn simple_reflection(alpha: &Weight, index: usize) -> Self {
        let mut s = WeylElement::reflection(alpha);
        s.word = Some(vec![index]);
        s
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> &Rational {
        &self.matrix[row * self.dim + col]
    }

    pub fn matrix(&self) -> &[Rational] {
        &self.matrix
    }

    /// Word in simple-reflection indices. Reduced for elements produced by
    /// [`RootSystem::weyl_group`] and [`RootSystem::dominant_representative`].
    pub fn word(&self) -> Option<&[usize]> {
        self.word.as_deref()
    }

    /// The determinant, `+1` or `-1`.
    pub fn sign(&self) -> i32 {
        self.sign
    }

    pub fn is_identity(&self) -> bool {
        *self == WeylElement::identity(self.dim)
    }

    pub fn apply(&self, w: &Weight) -> Weight {
        assert_eq!(
            w.rank(),
            self.dim,
            "Weyl element applied to weight of wrong rank"
        );
        let c = w.coords();
        let out = (0..self.dim)
            .map(|i| {
                (0..self.dim).fold(Rational::zero(), |acc, j| {
                    acc + &self.matrix[i * self.dim + j] * &c[j]
                })
            })
            .collect();
        Weight::new(out)
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        assert_eq!(
            self.dim, other.dim,
            "composing Weyl elements of different rank"
        );
        let n = self.dim;
        let mut matrix = vec![Rational::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.matrix[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    matrix[i * n + j] += a * &other.matrix[k * n + j];
                }
            }
        }
        let word = match (&self.word, &other.word) {
            (Some(a), Some(b)) => Some([a.as_slice(), b.as_slice()].concat()),
            _ => None,
        };
        WeylElement {
            dim: n,
            matrix,
            word,
            sign: self.sign * other.sign,
        }
    }

    /// Transpose, which is the inverse of an orthogonal matrix.
    pub fn inverse(&self) -> WeylElement {
        let n = self.dim;
        let mut matrix = vec![Rational::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                matrix[j * n + i] = self.matrix[i * n + j].clone();
            }
        }
        let word = self
            .word
            .as_ref()
            .map(|w| w.iter().rev().copied().collect());
        WeylElement {
            dim: n,
            matrix,
            word,
            sign: self.sign,
        }
    }

    /// Exact determinant by fraction-preserving elimination.
    pub fn determinant(&self) -> Rational {
        let n = self.dim;
        let mut m = self.matrix.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !m[r * n + col].is_zero()) else {
                return Rational::zero();
            };
            if pivot != col {
                for j in 0..n {
                    m.swap(col * n + j, pivot * n + j);
                }
                det = -det;
            }
            let p = m[col * n + col].clone();
            det *= &p;
            for r in col + 1..n {
                let factor = &m[r * n + col] / &p;
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let sub = &factor * &m[col * n + j];
                    m[r * n + j] -= sub;
                }
            }
        }
        det
    }

    /// `M^T M = I` exactly.
    pub fn is_orthogonal(&self) -> bool {
        self.compose(&self.inverse()).is_identity()
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.word {
            Some(w) if w.is_empty() => f.write_str("1"),
            Some(w) => {
                let parts: Vec<String> = w.iter().map(|i| format!("s{}", i + 1)).collect();
                f.write_str(&parts.join(" "))
            }
            None => {
                let rows: Vec<String> = (0..self.dim)
                    .map(|i| {
                        let r: Vec<String> = (0..self.dim)
                            .map(|j| self.entry(i, j).to_string())
                            .collect();
                        r.join(" ")
                    })
                    .collect();
                write!(f, "[{}]", rows.join("; "))
            }
        }
    }
}

/// A reduced root system: an ordered list of positive roots together with
/// the derived simple roots.
#[derive(Debug)]
pub struct RootSystem {
    rank: usize,
    positive_roots: Vec<Weight>,
    simple_roots: Vec<Weight>,
    // simple-root coordinates of each positive root
    levels: Vec<Vec<BigInt>>,
    name: Option<String>,
    weyl: OnceLock<Arc<Vec<WeylElement>>>,
}

impl Clone for RootSystem {
    fn clone(&self) -> Self {
        let weyl = OnceLock::new();
        if let Some(w) = self.weyl.get() {
            let _ = weyl.set(Arc::clone(w));
        }
        RootSystem {
            rank: self.rank,
            positive_roots: self.positive_roots.clone(),
            simple_roots: self.simple_roots.clone(),
            levels: self.levels.clone(),
            name: self.name.clone(),
            weyl,
        }
    }
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.positive_roots == other.positive_roots
    }
}

impl RootSystem {
    /// Build from explicit positive roots in ambient dimension `rank`.
    pub fn new(rank: usize, positive_roots: Vec<Weight>, name: Option<String>) -> Result<Self> {
        if rank == 0 {
            return Err(LieError::InvalidRootSystem("rank must be positive".into()));
        }
        for (i, r) in positive_roots.iter().enumerate() {
            r.check_rank(rank)?;
            if r.is_zero() {
                return Err(LieError::InvalidRootSystem(format!("root #{i} is zero")));
            }
            if positive_roots[..i].contains(r) {
                return Err(LieError::InvalidRootSystem(format!("root {r} is repeated")));
            }
            if positive_roots.contains(&-r) {
                return Err(LieError::InvalidRootSystem(format!(
                    "both {r} and its negative are listed as positive"
                )));
            }
        }
        let set: HashSet<&Weight> = positive_roots.iter().collect();
        let simple_roots: Vec<Weight> = positive_roots
            .iter()
            .filter(|r| !positive_roots.iter().any(|a| set.contains(&(*r - a))))
            .cloned()
            .collect();
        let levels = positive_roots
            .iter()
            .map(|r| {
                let coords = solve_in_span(&simple_roots, r).ok_or_else(|| {
                    LieError::InvalidRootSystem(format!(
                        "root {r} is not in the span of the simple roots"
                    ))
                })?;
                coords
                    .into_iter()
                    .map(|c| {
                        if c.is_integer() && !c.is_negative() {
                            Ok(c.to_integer())
                        } else {
                            Err(LieError::InvalidRootSystem(format!(
                                "root {r} is not a nonnegative integer combination of simple roots"
                            )))
                        }
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RootSystem {
            rank,
            positive_roots,
            simple_roots,
            levels,
            name,
            weyl: OnceLock::new(),
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Coordinates of the `i`-th positive root in the simple-root basis.
    pub fn simple_coordinates(&self, i: usize) -> &[BigInt] {
        &self.levels[i]
    }

    /// Index of `root` among the positive roots.
    pub fn position(&self, root: &Weight) -> Option<usize> {
        self.positive_roots.iter().position(|r| r == root)
    }

    pub fn is_root(&self, w: &Weight) -> bool {
        self.positive_roots.iter().any(|r| r == w || *r == -w)
    }

    /// `w` is dominant (or strictly dominant) for every positive root.
    pub fn is_dominant(&self, w: &Weight, strict: bool) -> Result<bool> {
        crate::lattice::is_dominant(w, &self.positive_roots, strict)
    }

    /// The Weyl group, enumerated once and cached.
    pub fn weyl_group(&self) -> Result<Arc<Vec<WeylElement>>> {
        if let Some(w) = self.weyl.get() {
            return Ok(Arc::clone(w));
        }
        let group = Arc::new(self.weyl_group_with_limit(DEFAULT_WEYL_LIMIT)?);
        Ok(Arc::clone(self.weyl.get_or_init(|| group)))
    }

    /// Enumerate the group generated by the simple reflections, failing once
    /// more than `limit` elements are found.
    pub fn weyl_group_with_limit(&self, limit: usize) -> Result<Vec<WeylElement>> {
        let gens: Vec<WeylElement> = self
            .simple_roots
            .iter()
            .enumerate()
            .map(|(i, a)| WeylElement::simple_reflection(a, i))
            .collect();
        for (g, a) in gens.iter().zip(&self.simple_roots) {
            for r in &self.positive_roots {
                if !self.is_root(&g.apply(r)) {
                    return Err(LieError::InvalidRootSystem(format!(
                        "reflection in {a} does not preserve the roots"
                    )));
                }
            }
        }
        let id = WeylElement::identity(self.rank);
        let mut seen: HashSet<Vec<Rational>> = HashSet::new();
        seen.insert(id.matrix.clone());
        let mut elements = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(g) = queue.pop_front() {
            for s in &gens {
                let h = s.compose(&g);
                if seen.insert(h.matrix.clone()) {
                    if elements.len() >= limit {
                        return Err(LieError::GroupTooLarge { limit });
                    }
                    elements.push(h.clone());
                    queue.push_back(h);
                }
            }
        }
        elements.sort_by(|a, b| a.matrix.cmp(&b.matrix));
        Ok(elements)
    }

    /// Move `w` into the closed dominant chamber by simple reflections.
    pub fn dominant_representative(&self, w: &Weight) -> Result<DominantRep> {
        w.check_rank(self.rank)?;
        let mut element = WeylElement::identity(self.rank);
        let mut current = w.clone();
        loop {
            let next = self
                .simple_roots
                .iter()
                .enumerate()
                .find(|(_, a)| current.dot(a).is_negative());
            let Some((i, a)) = next else { break };
            let s = WeylElement::simple_reflection(a, i);
            current = s.apply(&current);
            element = s.compose(&element);
        }
        let regular = self.is_dominant(&current, true)?;
        Ok(DominantRep {
            element,
            dominant: current,
            regular,
        })
    }

    /// `2<w,a>/<a,a>` for a root `a`.
    pub fn coroot_pairing(w: &Weight, alpha: &Weight) -> Result<Rational> {
        Ok(int(2) * inner_product(w, alpha)? / alpha.norm_sq())
    }
}

/// Result of [`RootSystem::dominant_representative`]: `element * w == dominant`.
#[derive(Clone, Debug, PartialEq)]
pub struct DominantRep {
    pub element: WeylElement,
    pub dominant: Weight,
    pub regular: bool,
}

/// Exact half-sum of a list of roots.
pub fn half_sum_of(rank: usize, roots: &[Weight]) -> Weight {
    let sum = roots.iter().fold(Weight::zero(rank), |acc, r| &acc + r);
    sum.scale(&crate::lattice::half())
}

pub fn half_sum(rs: &RootSystem) -> Weight {
    half_sum_of(rs.rank(), rs.positive_roots())
}

/// The standard positive roots of a classical family in the e-basis. Type A
/// of rank n lives in ambient dimension n + 1.
pub fn build_classical(family: Family, rank: usize) -> Result<RootSystem> {
    let unsupported = || LieError::UnsupportedFamily(format!("{family}{rank}"));
    if rank == 0 || (family == Family::D && rank < 2) {
        return Err(unsupported());
    }
    let dim = if family == Family::A { rank + 1 } else { rank };
    let e = |k: usize| Weight::unit(dim, k);
    let mut roots = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            roots.push(&e(i) - &e(j));
            if family != Family::A {
                roots.push(&e(i) + &e(j));
            }
        }
    }
    match family {
        Family::B => roots.extend((0..dim).map(e)),
        Family::C => roots.extend((0..dim).map(|k| e(k).scale(&int(2)))),
        Family::A | Family::D => {}
    }
    RootSystem::new(dim, roots, Some(format!("{family}{rank}")))
}

/// Coefficients expressing `target` in the (independent) `basis`, if any.
fn solve_in_span(basis: &[Weight], target: &Weight) -> Option<Vec<Rational>> {
    let k = basis.len();
    let n = target.rank();
    // augmented n x (k+1)
    let mut m: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rational> = basis.iter().map(|b| b.coords()[i].clone()).collect();
            row.push(target.coords()[i].clone());
            row
        })
        .collect();
    let mut row = 0;
    for col in 0..k {
        let p = (row..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(row, p);
        let inv = m[row][col].clone();
        for x in m[row].iter_mut() {
            *x /= &inv;
        }
        let pivot = m[row].clone();
        for (r, line) in m.iter_mut().enumerate() {
            if r != row && !line[col].is_zero() {
                let f = line[col].clone();
                for (x, p) in line.iter_mut().zip(&pivot) {
                    *x -= &f * p;
                }
            }
        }
        row += 1;
    }
    if m[row..].iter().any(|r| !r[k].is_zero()) {
        return None;
    }
    Some((0..k).map(|i| m[i][k].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::rat;

    fn w(c: &[i64]) -> Weight {
        Weight::from_ints(c)
    }

    #[test]
    fn classical_positive_roots() {
        let b1 = build_classical(Family::B, 1).unwrap();
        assert_eq!(b1.positive_roots(), &[w(&[1])]);
        let b2 = build_classical(Family::B, 2).unwrap();
        assert_eq!(
            b2.positive_roots(),
            &[w(&[1, -1]), w(&[1, 1]), w(&[1, 0]), w(&[0, 1])]
        );
        assert_eq!(b2.simple_roots(), &[w(&[1, -1]), w(&[0, 1])]);
        let d2 = build_classical(Family::D, 2).unwrap();
        assert_eq!(d2.positive_roots(), &[w(&[1, -1]), w(&[1, 1])]);
        assert_eq!(d2.simple_roots().len(), 2);
        assert!(build_classical(Family::D, 1).is_err());
        assert_eq!(build_classical(Family::A, 2).unwrap().rank(), 3);
        assert_eq!(
            build_classical(Family::C, 3)
                .unwrap()
                .positive_roots()
                .len(),
            9
        );
    }

    #[test]
    fn half_sums() {
        assert_eq!(
            half_sum(&build_classical(Family::B, 1).unwrap()),
            Weight::from_ratios(&[(1, 2)])
        );
        assert_eq!(
            half_sum(&build_classical(Family::B, 2).unwrap()),
            Weight::from_ratios(&[(3, 2), (1, 2)])
        );
        assert_eq!(
            half_sum(&build_classical(Family::D, 2).unwrap()),
            w(&[1, 0])
        );
    }

    #[test]
    fn weyl_group_orders() {
        for (fam, r, order) in [
            (Family::B, 1, 2),
            (Family::B, 2, 8),
            (Family::D, 2, 4),
            (Family::A, 2, 6),
            (Family::C, 2, 8),
            (Family::B, 3, 48),
            (Family::D, 3, 24),
        ] {
            let rs = build_classical(fam, r).unwrap();
            assert_eq!(rs.weyl_group().unwrap().len(), order, "{fam}{r}");
        }
    }

    #[test]
    fn weyl_group_limit() {
        let rs = build_classical(Family::B, 3).unwrap();
        assert_eq!(
            rs.weyl_group_with_limit(10),
            Err(LieError::GroupTooLarge { limit: 10 })
        );
    }

    #[test]
    fn sign_matches_determinant() {
        let rs = build_classical(Family::B, 2).unwrap();
        for g in rs.weyl_group().unwrap().iter() {
            assert_eq!(g.determinant(), int(g.sign() as i64));
            assert_eq!(g.word().unwrap().len() % 2 == 0, g.sign() == 1);
            assert!(g.is_orthogonal());
        }
    }

    #[test]
    fn dominant_representatives() {
        let b1 = build_classical(Family::B, 1).unwrap();
        let r = b1
            .dominant_representative(&Weight::from_ratios(&[(-5, 2)]))
            .unwrap();
        assert_eq!(r.dominant, Weight::from_ratios(&[(5, 2)]));
        assert_eq!(r.element.sign(), -1);
        assert!(r.regular);

        let b2 = build_classical(Family::B, 2).unwrap();
        let r = b2
            .dominant_representative(&Weight::from_ratios(&[(3, 2), (3, 2)]))
            .unwrap();
        assert!(r.element.is_identity());
        assert!(!r.regular);

        let v = Weight::from_ratios(&[(-1, 2), (5, 2)]);
        let r = b2.dominant_representative(&v).unwrap();
        assert_eq!(r.dominant, Weight::from_ratios(&[(5, 2), (1, 2)]));
        // one transposition and one sign flip
        assert_eq!(r.element.sign(), 1);
        assert_eq!(r.element.word().map(<[usize]>::len), Some(2));
        assert!(r.regular);
        assert_eq!(r.element.apply(&v), r.dominant);
    }

    #[test]
    fn reflection_is_involution() {
        let s = WeylElement::reflection(&Weight::new(vec![rat(1, 2), rat(-1, 2)]));
        assert!(s.compose(&s).is_identity());
        assert_eq!(s.determinant(), int(-1));
    }

    #[test]
    fn rejects_bad_root_data() {
        assert!(RootSystem::new(2, vec![w(&[1, 0]), w(&[1, 0])], None).is_err());
        assert!(RootSystem::new(2, vec![w(&[1, 0]), w(&[-1, 0])], None).is_err());
        assert!(RootSystem::new(2, vec![w(&[0, 0])], None).is_err());
        // not closed under its own reflections
        let rs = RootSystem::new(2, vec![w(&[1, 0]), w(&[1, 1])], None).unwrap();
        assert!(rs.weyl_group().is_err());
    }

    #[test]
    fn family_labels() {
        assert_eq!(parse_family_rank("B3").unwrap(), (Family::B, 3));
        assert_eq!(parse_family_rank("d4").unwrap(), (Family::D, 4));
        assert!(parse_family_rank("E6").is_err());
        assert!(parse_family_rank("B").is_err());
    }
}
