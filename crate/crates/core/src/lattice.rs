//! Exact rational weights in the orthonormal basis `e_1, ..., e_m` of the
//! Cartan dual, and coset-shift lattices used for analytic integrality.
//!
//! The inner product is the Euclidean dot product in this basis. Every
//! quantity the rest of the crate compares (shell equations, dominance) is
//! invariant under a positive rescaling of the form, so no normalization of
//! the Killing form is carried around.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{LieError, Result};

/// Arbitrary-precision rational, always kept in lowest terms.
pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn half() -> Rational {
    rat(1, 2)
}

/// Parse `"p/q"` or `"p"`.
pub fn parse_rational(token: &str) -> Result<Rational> {
    let t = token.trim();
    let err = |reason: &str| LieError::Parse {
        input: token.to_string(),
        reason: reason.to_string(),
    };
    if t.is_empty() {
        return Err(err("empty rational"));
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err("bad numerator"))?;
    let den: BigInt = den.parse().map_err(|_| err("bad denominator"))?;
    if den.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// A weight: a fixed-length vector of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Weight(Vec<Rational>);

impl Weight {
    pub fn new(coords: Vec<Rational>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![Rational::zero(); rank])
    }

    /// The basis vector `e_k` (zero-based `k`).
    pub fn unit(rank: usize, k: usize) -> Self {
        let mut w = Weight::zero(rank);
        w.0[k] = Rational::one();
        w
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&c| int(c)).collect())
    }

    /// Build from `(numerator, denominator)` pairs.
    pub fn from_ratios(coords: &[(i64, i64)]) -> Self {
        Weight(coords.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn check_rank(&self, rank: usize) -> Result<()> {
        if self.rank() == rank {
            Ok(())
        } else {
            Err(LieError::Dimension {
                expected: rank,
                found: self.rank(),
            })
        }
    }

    pub fn scale(&self, c: &Rational) -> Weight {
        Weight(self.0.iter().map(|x| x * c).collect())
    }

    /// Dot product without a length check; callers guarantee equal ranks.
    pub(crate) fn dot(&self, other: &Weight) -> Rational {
        debug_assert_eq!(self.rank(), other.rank());
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn norm_sq(&self) -> Rational {
        self.dot(self)
    }

    /// True when every coordinate is an integer.
    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    /// Least common multiple of the coordinate denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        use num_integer::Integer;
        self.0
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Coordinates as `f64`, for display only.
    pub fn to_f64(&self) -> Vec<f64> {
        self.0
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    /// Componentwise absolute values.
    pub fn abs(&self) -> Weight {
        Weight(self.0.iter().map(|c| c.abs()).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for Weight {
    type Err = LieError;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        if trimmed.trim().is_empty() {
            return Err(LieError::Parse {
                input: s.to_string(),
                reason: "empty weight".into(),
            });
        }
        trimmed
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

fn assert_same_rank(a: &Weight, b: &Weight) {
    assert_eq!(a.rank(), b.rank(), "weight arithmetic on mismatched ranks");
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_same_rank(self, rhs);
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_same_rank(self, rhs);
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        -&self
    }
}

/// Exact inner product `sum_k a_k b_k`.
pub fn inner_product(a: &Weight, b: &Weight) -> Result<Rational> {
    b.check_rank(a.rank())?;
    Ok(a.dot(b))
}

/// True iff `<w, alpha> >= 0` (or `> 0` when `strict`) for every simple root.
pub fn is_dominant(w: &Weight, simple_roots: &[Weight], strict: bool) -> Result<bool> {
    for alpha in simple_roots {
        let p = inner_product(w, alpha)?;
        let ok = if strict {
            p.is_positive()
        } else {
            !p.is_negative()
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A union of cosets `s + Z^m`, one per shift `s`, each shift having
/// coordinates in `{0, 1/2}`. The zero shift is always present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeSpec {
    rank: usize,
    shifts: Vec<Weight>,
}

impl LatticeSpec {
    pub fn new(rank: usize, shifts: Vec<Weight>) -> Result<Self> {
        if rank == 0 {
            return Err(LieError::InvalidLattice("rank must be positive".into()));
        }
        let mut canon: Vec<Weight> = Vec::with_capacity(shifts.len());
        for s in shifts {
            s.check_rank(rank)?;
            let s = reduce_shift(&s).ok_or_else(|| {
                LieError::InvalidLattice(format!(
                    "shift {s} has a coordinate outside {{0, 1/2}} mod 1"
                ))
            })?;
            if !canon.contains(&s) {
                canon.push(s);
            }
        }
        if !canon.iter().any(Weight::is_zero) {
            return Err(LieError::InvalidLattice("the zero shift is missing".into()));
        }
        canon.sort();
        Ok(LatticeSpec {
            rank,
            shifts: canon,
        })
    }

    /// `Z^m`.
    pub fn integral(rank: usize) -> Self {
        LatticeSpec {
            rank,
            shifts: vec![Weight::zero(rank)],
        }
    }

    /// `Z^m` together with `(Z + 1/2)^m`.
    pub fn integral_or_half(rank: usize) -> Self {
        let all_half = Weight::new(vec![half(); rank]);
        LatticeSpec::new(rank, vec![Weight::zero(rank), all_half])
            .expect("built-in lattice is well formed")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn shifts(&self) -> &[Weight] {
        &self.shifts
    }

    /// Every point of `other` lies in `self`.
    pub fn contains_lattice(&self, other: &LatticeSpec) -> Result<bool> {
        for s in other.shifts() {
            if !is_member(s, self)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Reduce a shift mod `Z^m`; `None` if some coordinate is not in `{0, 1/2}`
/// modulo 1.
fn reduce_shift(s: &Weight) -> Option<Weight> {
    let coords = s
        .coords()
        .iter()
        .map(|c| {
            let frac = c - c.floor();
            if frac.is_zero() || frac == half() {
                Some(frac)
            } else {
                None
            }
        })
        .collect::<Option<Vec<_>>>()?;
    Some(Weight::new(coords))
}

/// `w` belongs to `lattice` iff `w - s` is integral for some shift `s`.
pub fn is_member(w: &Weight, lattice: &LatticeSpec) -> Result<bool> {
    w.check_rank(lattice.rank())?;
    Ok(lattice.shifts.iter().any(|s| (w - s).is_integral()))
}
