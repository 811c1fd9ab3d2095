//! Formal characters: finitely supported integer combinations of
//! exponentials `e^w` over a weight lattice.
//!
//! Weights are stored internally as integer vectors over a common
//! denominator, so ring operations never touch big rationals.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{LieError, Result};
use crate::lattice::{int, is_member, LatticeSpec, Rational, Weight};
use crate::roots::{half_sum, RootSystem, WeylElement};
use crate::sympair::SymmetricPair;

fn overflow() -> LieError {
    LieError::Overflow("character arithmetic")
}

fn ck(v: Option<i64>) -> Result<i64> {
    v.ok_or_else(overflow)
}

/// `d * w` as integers, or `None` if that is not integral or does not fit.
fn scale_weight(w: &Weight, d: i64) -> Option<Vec<i64>> {
    let d = BigInt::from(d);
    w.coords()
        .iter()
        .map(|c| {
            let num = c.numer() * &d;
            if (&num % c.denom()).is_zero() {
                (num / c.denom()).to_i64()
            } else {
                None
            }
        })
        .collect()
}

fn unscale(key: &[i64], d: i64) -> Weight {
    Weight::new(
        key.iter()
            .map(|&k| Rational::new(k.into(), d.into()))
            .collect(),
    )
}

fn denominator_of(w: &Weight) -> Result<i64> {
    w.denominator_lcm().to_i64().ok_or_else(overflow)
}

fn dot(a: &[i64], b: &[i64]) -> Result<i64> {
    a.iter().zip(b).try_fold(0i64, |acc, (x, y)| {
        ck(x.checked_mul(*y).and_then(|p| acc.checked_add(p)))
    })
}

fn add_vec(a: &[i64], b: &[i64]) -> Result<Vec<i64>> {
    a.iter()
        .zip(b)
        .map(|(x, y)| ck(x.checked_add(*y)))
        .collect()
}

fn axpy(a: &[i64], c: i64, b: &[i64]) -> Result<Vec<i64>> {
    a.iter()
        .zip(b)
        .map(|(x, y)| ck(y.checked_mul(c).and_then(|p| x.checked_add(p))))
        .collect()
}

/// A finitely supported function from weights to integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalCharacter {
    rank: usize,
    denom: i64,
    terms: BTreeMap<Vec<i64>, i64>,
}

impl FormalCharacter {
    pub fn zero(rank: usize) -> Self {
        FormalCharacter {
            rank,
            denom: 1,
            terms: BTreeMap::new(),
        }
    }

    /// `e^w`.
    pub fn monomial(w: &Weight) -> Result<Self> {
        let mut ch = FormalCharacter::zero(w.rank());
        ch.add_term(w, 1)?;
        Ok(ch)
    }

    pub fn from_terms<'a>(
        rank: usize,
        terms: impl IntoIterator<Item = (&'a Weight, i64)>,
    ) -> Result<Self> {
        let mut ch = FormalCharacter::zero(rank);
        for (w, c) in terms {
            ch.add_term(w, c)?;
        }
        Ok(ch)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of weights with nonzero coefficient.
    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    /// Add `c * e^w` in place.
    pub fn add_term(&mut self, w: &Weight, c: i64) -> Result<()> {
        w.check_rank(self.rank)?;
        if c == 0 {
            return Ok(());
        }
        let d = denominator_of(w)?;
        let common = ck(Some(self.denom.lcm(&d)))?;
        if common != self.denom {
            *self = self.rescaled(common)?;
        }
        let key = scale_weight(w, common).ok_or_else(overflow)?;
        let entry = self.terms.entry(key).or_insert(0);
        *entry = ck(entry.checked_add(c))?;
        if *entry == 0 {
            let key = scale_weight(w, common).ok_or_else(overflow)?;
            self.terms.remove(&key);
        }
        self.normalize();
        Ok(())
    }

    pub fn coefficient(&self, w: &Weight) -> i64 {
        if w.rank() != self.rank {
            return 0;
        }
        scale_weight(w, self.denom)
            .and_then(|k| self.terms.get(&k).copied())
            .unwrap_or(0)
    }

    /// Terms in ascending lexicographic weight order.
    pub fn iter(&self) -> impl Iterator<Item = (Weight, i64)> + '_ {
        self.terms.iter().map(|(k, &c)| (unscale(k, self.denom), c))
    }

    /// As a map from weights to coefficients.
    pub fn to_map(&self) -> BTreeMap<Weight, i64> {
        self.iter().collect()
    }

    /// Sum of coefficients, i.e. the value at the identity.
    pub fn dimension(&self) -> i64 {
        self.terms.values().sum()
    }

    fn rescaled(&self, d: i64) -> Result<Self> {
        let f = d / self.denom;
        let terms = self
            .terms
            .iter()
            .map(|(k, &c)| {
                let key = k
                    .iter()
                    .map(|x| ck(x.checked_mul(f)))
                    .collect::<Result<Vec<_>>>()?;
                Ok((key, c))
            })
            .collect::<Result<_>>()?;
        Ok(FormalCharacter {
            rank: self.rank,
            denom: d,
            terms,
        })
    }

    fn normalize(&mut self) {
        let mut g = self.denom;
        for k in self.terms.keys() {
            for x in k {
                g = g.gcd(x);
            }
            if g == 1 {
                return;
            }
        }
        if g > 1 {
            self.denom /= g;
            self.terms = std::mem::take(&mut self.terms)
                .into_iter()
                .map(|(k, c)| (k.into_iter().map(|x| x / g).collect(), c))
                .collect();
        }
    }

    fn check_rank(&self, other: &FormalCharacter) -> Result<()> {
        if self.rank == other.rank {
            Ok(())
        } else {
            Err(LieError::Dimension {
                expected: self.rank,
                found: other.rank,
            })
        }
    }

    fn common(&self, other: &FormalCharacter) -> Result<(Self, Self)> {
        self.check_rank(other)?;
        let d = ck(Some(self.denom.lcm(&other.denom)))?;
        Ok((self.rescaled(d)?, other.rescaled(d)?))
    }

    fn combine(&self, other: &FormalCharacter, sign: i64) -> Result<Self> {
        let (mut a, b) = self.common(other)?;
        for (k, c) in b.terms {
            let entry = a.terms.entry(k.clone()).or_insert(0);
            *entry = ck(c.checked_mul(sign).and_then(|s| entry.checked_add(s)))?;
            if *entry == 0 {
                a.terms.remove(&k);
            }
        }
        a.normalize();
        Ok(a)
    }

    pub fn try_add(&self, other: &FormalCharacter) -> Result<Self> {
        self.combine(other, 1)
    }

    pub fn try_sub(&self, other: &FormalCharacter) -> Result<Self> {
        self.combine(other, -1)
    }

    /// Product in the group ring: exponents add.
    pub fn try_mul(&self, other: &FormalCharacter) -> Result<Self> {
        let (a, b) = self.common(other)?;
        let mut terms: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
        for (ka, ca) in &a.terms {
            for (kb, cb) in &b.terms {
                let key = add_vec(ka, kb)?;
                let prod = ck(ca.checked_mul(*cb))?;
                let entry = terms.entry(key).or_insert(0);
                *entry = ck(entry.checked_add(prod))?;
            }
        }
        terms.retain(|_, c| *c != 0);
        let mut out = FormalCharacter {
            rank: a.rank,
            denom: a.denom,
            terms,
        };
        out.normalize();
        Ok(out)
    }

    pub fn scale(&self, c: i64) -> Result<Self> {
        if c == 0 {
            return Ok(FormalCharacter::zero(self.rank));
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = ck(v.checked_mul(c))?;
        }
        Ok(out)
    }

    /// `sum c_w e^{g w}`.
    pub fn apply(&self, g: &WeylElement) -> Result<Self> {
        if g.dim() != self.rank {
            return Err(LieError::Dimension {
                expected: self.rank,
                found: g.dim(),
            });
        }
        let mut out = FormalCharacter::zero(self.rank);
        for (w, c) in self.iter() {
            out.add_term(&g.apply(&w), c)?;
        }
        Ok(out)
    }

    /// Invariant under every simple reflection of `rs`.
    pub fn is_invariant(&self, rs: &RootSystem) -> Result<bool> {
        for a in rs.simple_roots() {
            if self.apply(&WeylElement::reflection(a))? != *self {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for FormalCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self
            .iter()
            .collect::<Vec<_>>()
            .into_iter()
            .rev()
            .enumerate()
        {
            let sign = if c < 0 { "-" } else { "+" };
            if i == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if c.abs() != 1 {
                write!(f, "{}*", c.abs())?;
            }
            write!(f, "e^({w})")?;
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr for &FormalCharacter {
            type Output = FormalCharacter;
            fn $method(self, rhs: &FormalCharacter) -> FormalCharacter {
                self.$inner(rhs).expect("formal character operation failed")
            }
        }
        impl $tr for FormalCharacter {
            type Output = FormalCharacter;
            fn $method(self, rhs: FormalCharacter) -> FormalCharacter {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &FormalCharacter {
    type Output = FormalCharacter;
    fn neg(self) -> FormalCharacter {
        self.scale(-1)
            .expect("formal character negation overflowed")
    }
}

impl Neg for FormalCharacter {
    type Output = FormalCharacter;
    fn neg(self) -> FormalCharacter {
        -&self
    }
}

/// Root data scaled to integers over a common denominator.
#[derive(Debug)]
struct ScaledRoots {
    denom: i64,
    positive: Vec<Vec<i64>>,
    simple: Vec<Vec<i64>>,
    simple_norm: Vec<i64>,
    delta: Vec<i64>,
}

impl ScaledRoots {
    fn new(rs: &RootSystem, extra: &Weight) -> Result<Self> {
        let delta = half_sum(rs);
        let mut d = BigInt::one();
        for w in rs.positive_roots().iter().chain([&delta, extra]) {
            d = d.lcm(&w.denominator_lcm());
        }
        let denom = d.to_i64().ok_or_else(overflow)?;
        let sc = |w: &Weight| scale_weight(w, denom).ok_or_else(overflow);
        let positive = rs
            .positive_roots()
            .iter()
            .map(sc)
            .collect::<Result<Vec<_>>>()?;
        let simple = rs
            .simple_roots()
            .iter()
            .map(sc)
            .collect::<Result<Vec<_>>>()?;
        let simple_norm = simple
            .iter()
            .map(|s| dot(s, s))
            .collect::<Result<Vec<_>>>()?;
        Ok(ScaledRoots {
            denom,
            positive,
            simple,
            simple_norm,
            delta: sc(&delta)?,
        })
    }

    fn is_dominant(&self, x: &[i64]) -> Result<bool> {
        for s in &self.simple {
            if dot(x, s)? < 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `2<x,s_i>/<s_i,s_i>` when integral.
    fn cartan(&self, x: &[i64], i: usize) -> Result<Option<i64>> {
        let num = ck(dot(x, &self.simple[i])?.checked_mul(2))?;
        let n = self.simple_norm[i];
        Ok(if num % n == 0 { Some(num / n) } else { None })
    }

    fn reflect(&self, x: &[i64], i: usize, c: i64) -> Result<Vec<i64>> {
        axpy(x, -c, &self.simple[i])
    }

    /// The dominant Weyl conjugate of `x`, or `None` if `x` fails an
    /// integrality test along the way.
    fn dominant_of(&self, x: &[i64]) -> Result<Option<Vec<i64>>> {
        let mut cur = x.to_vec();
        'outer: loop {
            for i in 0..self.simple.len() {
                let Some(c) = self.cartan(&cur, i)? else {
                    return Ok(None);
                };
                if c < 0 {
                    cur = self.reflect(&cur, i, c)?;
                    continue 'outer;
                }
            }
            return Ok(Some(cur));
        }
    }

    fn orbit(&self, x: &[i64]) -> Result<Vec<Vec<i64>>> {
        let mut seen: HashSet<Vec<i64>> = HashSet::from([x.to_vec()]);
        let mut queue = VecDeque::from([x.to_vec()]);
        while let Some(y) = queue.pop_front() {
            for i in 0..self.simple.len() {
                let c = self
                    .cartan(&y, i)?
                    .ok_or_else(|| LieError::Consistency("non-integral weight in orbit".into()))?;
                if c != 0 {
                    let z = self.reflect(&y, i, c)?;
                    if seen.insert(z.clone()) {
                        queue.push_back(z);
                    }
                }
            }
        }
        Ok(seen.into_iter().collect())
    }
}

/// Weight multiplicities of an irreducible representation, stored on the
/// dominant chamber only.
#[derive(Debug)]
pub struct WeightMultiplicities {
    highest: Weight,
    roots: ScaledRoots,
    dominant: BTreeMap<Vec<i64>, i64>,
}

impl WeightMultiplicities {
    pub fn highest_weight(&self) -> &Weight {
        &self.highest
    }

    /// Multiplicity of an arbitrary weight (zero if it is not a weight).
    pub fn multiplicity(&self, w: &Weight) -> Result<i64> {
        w.check_rank(self.highest.rank())?;
        let Some(x) = scale_weight(w, self.roots.denom) else {
            return Ok(0);
        };
        Ok(match self.roots.dominant_of(&x)? {
            Some(dom) => self.dominant.get(&dom).copied().unwrap_or(0),
            None => 0,
        })
    }

    /// Dominant weights with their multiplicities, ascending.
    pub fn dominant_weights(&self) -> impl Iterator<Item = (Weight, i64)> + '_ {
        self.dominant
            .iter()
            .map(|(k, &c)| (unscale(k, self.roots.denom), c))
    }

    /// Expand to the full character by Weyl orbits.
    pub fn character(&self) -> Result<FormalCharacter> {
        let d = self.roots.denom;
        let mut terms = BTreeMap::new();
        for (k, &m) in &self.dominant {
            for y in self.roots.orbit(k)? {
                terms.insert(y, m);
            }
        }
        let mut ch = FormalCharacter {
            rank: self.highest.rank(),
            denom: d,
            terms,
        };
        ch.normalize();
        Ok(ch)
    }

    /// Sum of all multiplicities.
    pub fn dimension(&self) -> Result<i64> {
        self.dominant.iter().try_fold(0i64, |acc, (k, &m)| {
            let size = self.roots.orbit(k)?.len() as i64;
            ck(size.checked_mul(m).and_then(|p| acc.checked_add(p)))
        })
    }
}

/// Reject non-dominant or non-integral highest weights.
fn check_highest_weight(rs: &RootSystem, nu: &Weight) -> Result<()> {
    nu.check_rank(rs.rank())?;
    if !rs.is_dominant(nu, false)? {
        return Err(LieError::NotDominant { weight: nu.clone() });
    }
    for beta in rs.positive_roots() {
        if !RootSystem::coroot_pairing(nu, beta)?.is_integer() {
            return Err(LieError::NonIntegral { weight: nu.clone() });
        }
    }
    Ok(())
}

type CacheKey = (Vec<Weight>, Weight);

fn cache() -> &'static Mutex<HashMap<CacheKey, Arc<WeightMultiplicities>>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, Arc<WeightMultiplicities>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Dominant weight multiplicities of the irreducible with highest weight
/// `nu`, by Freudenthal's formula. Results are memoized.
pub fn weight_multiplicities(rs: &RootSystem, nu: &Weight) -> Result<Arc<WeightMultiplicities>> {
    check_highest_weight(rs, nu)?;
    let key = (rs.positive_roots().to_vec(), nu.clone());
    if let Some(hit) = cache().lock().expect("character cache poisoned").get(&key) {
        return Ok(Arc::clone(hit));
    }
    let computed = Arc::new(freudenthal(rs, nu)?);
    let mut guard = cache().lock().expect("character cache poisoned");
    Ok(Arc::clone(guard.entry(key).or_insert(computed)))
}

fn freudenthal(rs: &RootSystem, nu: &Weight) -> Result<WeightMultiplicities> {
    let roots = ScaledRoots::new(rs, nu)?;
    let top = scale_weight(nu, roots.denom).ok_or_else(overflow)?;

    // all dominant weights below nu
    let mut seen: HashSet<Vec<i64>> = HashSet::from([top.clone()]);
    let mut queue = VecDeque::from([top.clone()]);
    while let Some(x) = queue.pop_front() {
        for a in &roots.positive {
            let y = axpy(&x, -1, a)?;
            if roots.is_dominant(&y)? && seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    let mut order: Vec<(i64, Vec<i64>)> = seen
        .into_iter()
        .map(|x| Ok((dot(&x, &roots.delta)?, x)))
        .collect::<Result<_>>()?;
    order.sort_by(|a, b| b.cmp(a));

    let shifted = add_vec(&top, &roots.delta)?;
    let target = dot(&shifted, &shifted)?;
    let mut mult: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for (_, mu) in order {
        if mu == top {
            mult.insert(mu, 1);
            continue;
        }
        let md = add_vec(&mu, &roots.delta)?;
        let denom = ck(target.checked_sub(dot(&md, &md)?))?;
        if denom <= 0 {
            return Err(LieError::Consistency(format!(
                "Freudenthal denominator {denom} for a dominant weight below the highest"
            )));
        }
        let mut num = 0i64;
        for a in &roots.positive {
            let mut x = add_vec(&mu, a)?;
            loop {
                let m = match roots.dominant_of(&x)? {
                    Some(dom) => mult.get(&dom).copied().unwrap_or(0),
                    None => 0,
                };
                if m == 0 {
                    break;
                }
                let term = ck(dot(&x, a)?.checked_mul(2).and_then(|t| t.checked_mul(m)))?;
                num = ck(num.checked_add(term))?;
                x = add_vec(&x, a)?;
            }
        }
        if num % denom != 0 {
            return Err(LieError::Consistency(format!(
                "Freudenthal quotient {num}/{denom} is not an integer"
            )));
        }
        let m = num / denom;
        if m > 0 {
            mult.insert(mu, m);
        }
    }
    Ok(WeightMultiplicities {
        highest: nu.clone(),
        roots,
        dominant: mult,
    })
}

/// Character of the irreducible representation with highest weight `nu`.
pub fn irreducible_character(rs: &RootSystem, nu: &Weight) -> Result<FormalCharacter> {
    weight_multiplicities(rs, nu)?.character()
}

/// `prod <nu+delta, a> / <delta, a>` over positive roots.
pub fn weyl_dim(rs: &RootSystem, nu: &Weight) -> Result<u64> {
    check_highest_weight(rs, nu)?;
    let delta = half_sum(rs);
    let shifted = nu + &delta;
    let mut prod = Rational::one();
    for a in rs.positive_roots() {
        prod *= shifted.dot(a) / delta.dot(a);
    }
    if !prod.is_integer() || !prod.is_positive() {
        return Err(LieError::Consistency(format!(
            "Weyl dimension came out as {prod}"
        )));
    }
    prod.to_integer()
        .to_u64()
        .ok_or(LieError::Overflow("Weyl dimension"))
}

/// Multiplicities of irreducibles in a `W`-invariant character, by
/// repeatedly removing the irreducible of a highest support weight.
pub fn decompose(ch: &FormalCharacter, rs: &RootSystem) -> Result<BTreeMap<Weight, i64>> {
    if ch.rank() != rs.rank() {
        return Err(LieError::Dimension {
            expected: rs.rank(),
            found: ch.rank(),
        });
    }
    if !ch.is_invariant(rs)? {
        return Err(LieError::Symmetry(
            "input is not invariant under the simple reflections".into(),
        ));
    }
    let delta = half_sum(rs);
    // An invariant character is determined by its dominant part.
    let mut rest: BTreeMap<Weight, i64> = BTreeMap::new();
    for (w, c) in ch.iter() {
        if rs.is_dominant(&w, false)? {
            rest.insert(w, c);
        }
    }
    let mut out = BTreeMap::new();
    while !rest.is_empty() {
        let top = rest
            .keys()
            .max_by(|a, b| a.dot(&delta).cmp(&b.dot(&delta)).then_with(|| a.cmp(b)))
            .cloned()
            .expect("nonempty");
        let c = rest[&top];
        if c < 0 {
            return Err(LieError::Decomposition(format!(
                "highest remaining weight {top} has coefficient {c}"
            )));
        }
        let irr = weight_multiplicities(rs, &top)?;
        for (w, m) in irr.dominant_weights() {
            let entry = rest.entry(w.clone()).or_insert(0);
            *entry = ck(m.checked_mul(c).and_then(|p| entry.checked_sub(p)))?;
            if *entry == 0 {
                rest.remove(&w);
            }
        }
        out.insert(top, c);
    }
    Ok(out)
}

/// Decomposition of the tensor product of two irreducibles.
pub fn tensor_product(
    rs: &RootSystem,
    nu1: &Weight,
    nu2: &Weight,
) -> Result<BTreeMap<Weight, i64>> {
    let a = irreducible_character(rs, nu1)?;
    let b = irreducible_character(rs, nu2)?;
    decompose(&a.try_mul(&b)?, rs)
}

/// Restriction of the `G`-irreducible `nu` to `H`, decomposed into
/// `H`-irreducibles. Both share the maximal torus, so restriction is a
/// reinterpretation of the same character.
pub fn branch_equal_rank(p: &SymmetricPair, nu: &Weight) -> Result<BTreeMap<Weight, i64>> {
    if !is_member(nu, p.lattice_f1())? {
        return Err(LieError::NotInLattice { weight: nu.clone() });
    }
    let ch = irreducible_character(p.root_system(), nu)?;
    decompose(&ch, p.h_system())
}

/// `SO(2m+1) -> SO(2m)` branching by interleaving: the constituents are the
/// `a` with `nu_1 >= a_1 >= nu_2 >= ... >= nu_m >= |a_m|`, each once, in the
/// integrality class of `nu`.
pub fn branch_interleave_bd(m: usize, nu: &Weight) -> Result<BTreeMap<Weight, i64>> {
    nu.check_rank(m)?;
    let c = nu.coords();
    let dominant = c.windows(2).all(|w| w[0] >= w[1]) && c.last().is_some_and(|x| !x.is_negative());
    if !dominant {
        return Err(LieError::NotDominant { weight: nu.clone() });
    }
    if !is_member(nu, &LatticeSpec::integral_or_half(m))? {
        return Err(LieError::NotInLattice { weight: nu.clone() });
    }
    let ranges: Vec<(Rational, Rational)> = (0..m)
        .map(|i| {
            if i + 1 < m {
                (c[i + 1].clone(), c[i].clone())
            } else {
                (-c[i].clone(), c[i].clone())
            }
        })
        .collect();
    let mut out = BTreeMap::new();
    let mut current: Vec<Rational> = Vec::with_capacity(m);
    fn recurse(
        ranges: &[(Rational, Rational)],
        current: &mut Vec<Rational>,
        out: &mut BTreeMap<Weight, i64>,
    ) {
        let i = current.len();
        if i == ranges.len() {
            out.insert(Weight::new(current.clone()), 1);
            return;
        }
        let (lo, hi) = &ranges[i];
        let mut a = lo.clone();
        while a <= *hi {
            current.push(a.clone());
            recurse(ranges, current, out);
            current.pop();
            a += int(1);
        }
    }
    recurse(&ranges, &mut current, &mut out);
    Ok(out)
}
