//! Continued fractions over arbitrary-precision integers.
//!
//! For a pair `0 < b < a` the Euclidean division chain
//!
//! ```text
//! r[i-2] = r[i-1] * q[i] + r[i]      r[-2] = a,  r[-1] = b,  r[n] = 0
//! ```
//!
//! produces the coefficients `[q0; q1, ..., qn]` of `a/b`, with
//! `r[n-1] = gcd(a, b)`.  Convergent denominators `u[i]` and numerators
//! `v[i]` follow
//!
//! ```text
//! u[i] = u[i-1] * q[i] + u[i-2]      u[-1] = 0,  u[-2] = 1
//! v[i] = v[i-1] * q[i] + v[i-2]      v[-2] = 0,  v[-1] = 1
//! ```
//!
//! and tie back to the residues through `r[i] = (-1)^i * (a*u[i] - b*v[i])`.
//! [`ConvergentTable`] stores two prefix slots so chain indices `-2` and
//! `-1` are addressable directly.
//!
//! The quantity `|a*u - b*v|` is what the rest of the crate cares about:
//! a fraction `v/u` minimizes it strictly among all denominators up to `u`
//! exactly when `(u, v)` is a convergent pair, with a single tie-related
//! exception when `a/b` is a half-integer.  [`best_approx_bruteforce`]
//! recovers that set by exhaustive search and serves as the independent
//! oracle for the convergent machinery.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContfracError {
    #[error("invalid pair: need 0 < b < a, got a = {a}, b = {b}")]
    InvalidPair { a: BigInt, b: BigInt },
    #[error("empty coefficient list")]
    EmptyCoefficients,
    #[error("coefficient {value} at index {index} must be at least 1")]
    NonPositiveCoefficient { index: usize, value: BigInt },
    #[error("last coefficient of a multi-term expansion must be at least 2, got {0}")]
    NonCanonical(BigInt),
    #[error("coefficients are not the expansion of the given pair")]
    MismatchedPair,
    #[error("brute-force oracle refuses a = {a}: exceeds ceiling {ceiling}")]
    OracleCeiling { a: u64, ceiling: u64 },
}

/// An ordered pair `0 < b < a`.  Producers that promise coprimality
/// (`cf_value`, the encoder) uphold it themselves; the constructor only
/// checks the ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoprimePair {
    a: BigInt,
    b: BigInt,
}

impl CoprimePair {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Result<Self, ContfracError> {
        let (a, b) = (a.into(), b.into());
        if b <= BigInt::zero() || a <= b {
            return Err(ContfracError::InvalidPair { a, b });
        }
        Ok(CoprimePair { a, b })
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn is_coprime(&self) -> bool {
        self.a.gcd(&self.b).is_one()
    }
}

impl std::fmt::Display for CoprimePair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.a, self.b)
    }
}

/// Coefficients `[q0; q1, ..., qn]` in canonical form: every coefficient
/// is at least 1 and the last is at least 2 whenever there is more than
/// one.  The Euclidean chain yields exactly this shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuedFraction {
    coeffs: Vec<BigInt>,
}

impl ContinuedFraction {
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self, ContfracError> {
        if coeffs.is_empty() {
            return Err(ContfracError::EmptyCoefficients);
        }
        for (index, value) in coeffs.iter().enumerate() {
            if *value < BigInt::one() {
                return Err(ContfracError::NonPositiveCoefficient {
                    index,
                    value: value.clone(),
                });
            }
        }
        if coeffs.len() > 1 {
            let last = coeffs.last().unwrap();
            if *last < BigInt::from(2) {
                return Err(ContfracError::NonCanonical(last.clone()));
            }
        }
        Ok(ContinuedFraction { coeffs })
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        false // the constructor rejects empty lists
    }

    /// Highest chain index `n` (the coefficient list is `q0 ..= qn`).
    pub fn n(&self) -> usize {
        self.coeffs.len() - 1
    }
}

/// Convergent denominators, numerators and chain residues, stored with two
/// prefix slots: position `0` holds chain index `-2` and position `1` holds
/// chain index `-1`.  Use [`ConvergentTable::u`], [`v`](ConvergentTable::v)
/// and [`r`](ConvergentTable::r) with chain indices starting at `-2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergentTable {
    u: Vec<BigInt>,
    v: Vec<BigInt>,
    r: Vec<BigInt>,
}

impl ConvergentTable {
    /// Highest chain index `n`.
    pub fn n(&self) -> isize {
        self.u.len() as isize - 3
    }

    pub fn u(&self, i: isize) -> &BigInt {
        &self.u[(i + 2) as usize]
    }

    pub fn v(&self, i: isize) -> &BigInt {
        &self.v[(i + 2) as usize]
    }

    pub fn r(&self, i: isize) -> &BigInt {
        &self.r[(i + 2) as usize]
    }

    /// `(u[i], v[i])` for `0 <= i <= n`, in index order.
    pub fn pairs(&self) -> impl Iterator<Item = (&BigInt, &BigInt)> {
        self.u.iter().zip(self.v.iter()).skip(2)
    }

    /// Numerators `v[0] ..= v[n]` without the prefix slots.
    pub fn numerators(&self) -> &[BigInt] {
        &self.v[2..]
    }

    pub fn denominators(&self) -> &[BigInt] {
        &self.u[2..]
    }

    pub fn residues(&self) -> &[BigInt] {
        &self.r[2..]
    }
}

/// Euclidean expansion of `a/b`.  Non-coprime pairs are fine; the result
/// is the expansion of the reduced fraction and `r[n-1]` is the gcd.
pub fn cf_expand(pair: &CoprimePair) -> ContinuedFraction {
    let mut hi = pair.a().clone();
    let mut lo = pair.b().clone();
    let mut coeffs = Vec::new();
    while !lo.is_zero() {
        let (q, rem) = hi.div_rem(&lo);
        coeffs.push(q);
        hi = lo;
        lo = rem;
    }
    ContinuedFraction { coeffs }
}

/// Runs the convergent recurrences for `cf` and fills in the residue column.
///
/// When `pair` is given it must be a pair whose expansion is `cf` (up to the
/// gcd factor) and the residues are computed against that actual pair, so
/// the column reproduces the Euclidean chain of the unreduced input.  When
/// `pair` is omitted, `a` and `b` are read off the last convergent.
pub fn convergents(
    cf: &ContinuedFraction,
    pair: Option<&CoprimePair>,
) -> Result<ConvergentTable, ContfracError> {
    let n = cf.len();
    let mut u: Vec<BigInt> = Vec::with_capacity(n + 2);
    let mut v: Vec<BigInt> = Vec::with_capacity(n + 2);
    u.push(BigInt::one()); // u[-2]
    u.push(BigInt::zero()); // u[-1]
    v.push(BigInt::zero()); // v[-2]
    v.push(BigInt::one()); // v[-1]
    for q in cf.coeffs() {
        let nu = &u[u.len() - 1] * q + &u[u.len() - 2];
        let nv = &v[v.len() - 1] * q + &v[v.len() - 2];
        u.push(nu);
        v.push(nv);
    }

    let (a, b) = match pair {
        Some(p) => {
            let g = p.a().gcd(p.b());
            if v.last().unwrap() * &g != *p.a() || u.last().unwrap() * &g != *p.b() {
                return Err(ContfracError::MismatchedPair);
            }
            (p.a().clone(), p.b().clone())
        }
        None => (v.last().unwrap().clone(), u.last().unwrap().clone()),
    };

    let mut r: Vec<BigInt> = Vec::with_capacity(n + 2);
    for i in 0..u.len() {
        let signed = &a * &u[i] - &b * &v[i];
        // position i holds chain index i - 2
        r.push(if i % 2 == 0 { signed } else { -signed });
    }
    debug_assert!(r.last().unwrap().is_zero());

    Ok(ConvergentTable { u, v, r })
}

/// Value of a canonical coefficient list, in lowest terms.  Fails on the
/// degenerate list `[1]`, whose value is not a valid `a > b` pair.
pub fn cf_value(cf: &ContinuedFraction) -> Result<CoprimePair, ContfracError> {
    let table = convergents(cf, None)?;
    let n = table.n();
    CoprimePair::new(table.v(n).clone(), table.u(n).clone())
}

/// Default refusal threshold for the exhaustive oracle.
pub const DEFAULT_ORACLE_CEILING: u64 = 10_000;

fn abs_comb(a: u64, b: u64, u: u64, v: u64) -> i128 {
    (a as i128 * u as i128 - b as i128 * v as i128).abs()
}

/// Does `v/u` minimize `|a*u' - b*v'|` strictly among all fractions
/// `v'/u'` (as fractions, not pairs) with `0 < u' <= u`?
///
/// For each denominator only numerators near `u' * a / b` can compete, so a
/// small window around the rounded ratio decides the question.
pub fn is_best_2nd_kind(a: u64, b: u64, u: u64, v: u64) -> bool {
    debug_assert!(b > 0 && a > b && u > 0);
    let d = abs_comb(a, b, u, v);
    for up in 1..=u {
        let center = (a as u128 * up as u128 / b as u128) as u64;
        let lo = center.saturating_sub(2);
        for vp in lo..=center + 2 {
            // skip fractions equal to v/u
            if vp as u128 * u as u128 == v as u128 * up as u128 {
                continue;
            }
            if abs_comb(a, b, up, vp) <= d {
                return false;
            }
        }
    }
    true
}

/// Condition `0*`: `|a*u - b*v|` is strictly smaller than `|a*u' - b*v'|`
/// for every pair `(v', u') != (v, u)` with `0 < u' <= min(u, b)` and
/// `0 <= v' <= a`.  Literal double loop; oracle-grade only.
pub fn condition_0star(a: u64, b: u64, u: u64, v: u64) -> bool {
    let d = abs_comb(a, b, u, v);
    for up in 1..=u.min(b) {
        for vp in 0..=a {
            if (up, vp) == (u, v) {
                continue;
            }
            if abs_comb(a, b, up, vp) <= d {
                return false;
            }
        }
    }
    true
}

/// Condition `1*`: like `0*` but with `u' <= u` only and `v'` unbounded.
/// `|a*u' - b*v'|` grows monotonically in `v'` past the ratio, so scanning
/// a little beyond `a*u'/b` is exhaustive.
pub fn condition_1star(a: u64, b: u64, u: u64, v: u64) -> bool {
    let d = abs_comb(a, b, u, v);
    for up in 1..=u {
        let cap = (a as u128 * up as u128 / b as u128) as u64 + 2;
        for vp in 0..=cap {
            if (up, vp) == (u, v) {
                continue;
            }
            if abs_comb(a, b, up, vp) <= d {
                return false;
            }
        }
    }
    true
}

/// Condition `2*`: `(u, v)` appears in the convergent table of `a/b`.
pub fn condition_2star(table: &ConvergentTable, u: u64, v: u64) -> bool {
    let (u, v) = (BigInt::from(u), BigInt::from(v));
    table.pairs().any(|(tu, tv)| *tu == u && *tv == v)
}

/// Is `a/b` of the exceptional half-integer form `q + 1/2`?
pub fn is_half_exception(a: u64, b: u64) -> bool {
    2 * (a % b) == b
}

/// The convergent pairs of `a/b` that satisfy condition `0*`: all of
/// them, except that the zeroth drops out when `2·(a mod b) ≥ b`.  With
/// fractional part above one half the chain stalls (`u[0] = u[1]`, the
/// second coefficient being 1) and `(u[1], v[1])` strictly beats
/// `(u[0], v[0])` at the same denominator; at exactly one half the
/// non-convergent `(1, q[0] + 1)` ties it.  Below one half nothing in
/// row `u = 1` competes and the whole chain qualifies.
///
/// Agrees with [`best_approx_bruteforce`] for every `0 < b < a` — a
/// tested equivalence, exercised across the full sweep range of the
/// acceptance suite.
pub fn minimizer_pairs(a: u64, b: u64) -> Result<BTreeSet<(u64, u64)>, ContfracError> {
    let pair = CoprimePair::new(a, b)?;
    let table = convergents(&cf_expand(&pair), Some(&pair))?;
    let as_u64 = |x: &BigInt| u64::try_from(x).expect("convergents of a u64 pair fit in u64");
    let mut out: BTreeSet<(u64, u64)> =
        table.pairs().map(|(u, v)| (as_u64(u), as_u64(v))).collect();
    if 2 * (a % b) >= b {
        out.remove(&(as_u64(table.u(0)), as_u64(table.v(0))));
    }
    Ok(out)
}

/// All pairs `(u, v)` with `0 < u <= b`, `0 <= v <= a` satisfying
/// condition `0*`, by exhaustive search.
///
/// A pair qualifies exactly when it is the unique strict minimizer of
/// `|a*u' - b*v'|` over the region `u' <= u`, so the scan keeps running
/// minimum statistics per region instead of re-walking it per candidate.
/// Every pair is still examined; no convergent machinery is consulted.
pub fn best_approx_bruteforce(a: u64, b: u64) -> Result<BTreeSet<(u64, u64)>, ContfracError> {
    best_approx_bruteforce_with_ceiling(a, b, DEFAULT_ORACLE_CEILING)
}

pub fn best_approx_bruteforce_with_ceiling(
    a: u64,
    b: u64,
    ceiling: u64,
) -> Result<BTreeSet<(u64, u64)>, ContfracError> {
    assert!(b > 0 && a > b, "oracle needs 0 < b < a");
    if a > ceiling {
        return Err(ContfracError::OracleCeiling { a, ceiling });
    }
    let mut out = BTreeSet::new();
    let mut min: Option<i128> = None;
    let mut min_count = 0u32; // saturates at 2; only uniqueness matters
    let mut min_arg = (0u64, 0u64);
    for u in 1..=b {
        for v in 0..=a {
            let d = abs_comb(a, b, u, v);
            match min {
                Some(m) if d > m => {}
                Some(m) if d == m => min_count = min_count.saturating_add(1),
                _ => {
                    min = Some(d);
                    min_count = 1;
                    min_arg = (u, v);
                }
            }
        }
        // candidates in row u see exactly the region u' <= u scanned so far
        if min_count == 1 && min_arg.0 == u {
            out.insert(min_arg);
        }
    }
    Ok(out)
}

/// Checks every table invariant against the pair it was built from and
/// returns human-readable violations (empty means the table is sound).
pub fn table_violations(
    pair: &CoprimePair,
    cf: &ContinuedFraction,
    table: &ConvergentTable,
) -> Vec<String> {
    let mut bad = Vec::new();
    let n = table.n();
    let (a, b) = (pair.a(), pair.b());

    if table.u(-2) != &BigInt::one()
        || !table.u(-1).is_zero()
        || !table.v(-2).is_zero()
        || table.v(-1) != &BigInt::one()
    {
        bad.push("prefix slots are not (u,v)[-2] = (1,0), (u,v)[-1] = (0,1)".into());
    }
    if table.r(-2) != a || table.r(-1) != b {
        bad.push(format!(
            "r[-2], r[-1] = {}, {} instead of a, b",
            table.r(-2),
            table.r(-1)
        ));
    }

    for i in 0..=n {
        let q = &cf.coeffs()[i as usize];
        if table.u(i) != &(table.u(i - 1) * q + table.u(i - 2)) {
            bad.push(format!("u recurrence fails at i = {i}"));
        }
        if table.v(i) != &(table.v(i - 1) * q + table.v(i - 2)) {
            bad.push(format!("v recurrence fails at i = {i}"));
        }
        if table.r(i - 2) != &(table.r(i - 1) * q + table.r(i)) {
            bad.push(format!("division chain fails at i = {i}"));
        }
    }

    for i in -2..=n {
        let signed = a * table.u(i) - b * table.v(i);
        let expect = if i.rem_euclid(2) == 0 {
            signed
        } else {
            -signed
        };
        if table.r(i) != &expect {
            bad.push(format!("r[{i}] != (-1)^{i} (a u[{i}] - b v[{i}])"));
        }
    }

    // u is nondecreasing at the first step (equality iff q1 = 1) and
    // strictly increasing afterwards; v is strictly increasing throughout.
    if n >= 1 && table.u(0) > table.u(1) {
        bad.push("u[0] > u[1]".into());
    }
    for i in 2..=n {
        if table.u(i - 1) >= table.u(i) {
            bad.push(format!("u not strictly increasing at i = {i}"));
        }
    }
    for i in 1..=n {
        if table.v(i - 1) >= table.v(i) {
            bad.push(format!("v not strictly increasing at i = {i}"));
        }
    }
    if table.u(0) <= &BigInt::zero() || table.v(0) <= &BigInt::zero() {
        bad.push("first convergent not positive".into());
    }

    // r decreases strictly from r[-1] = b on and bottoms out at exactly 0,
    // with r[n-1] = gcd(a, b); the last convergent is the reduced pair.
    for i in 0..=n {
        if table.r(i) >= table.r(i - 1) {
            bad.push(format!("r not strictly decreasing at i = {i}"));
        }
    }
    if !table.r(n).is_zero() {
        bad.push("r[n] != 0".into());
    }
    let g = a.gcd(b);
    if table.r(n - 1) != &g {
        bad.push(format!(
            "r[n-1] = {} is not gcd(a, b) = {g}",
            table.r(n - 1)
        ));
    }
    if &(table.v(n) * &g) != a || &(table.u(n) * &g) != b {
        bad.push("last convergent is not the reduced pair".into());
    }

    for i in 0..=n {
        if !table.u(i).gcd(table.v(i)).is_one() {
            bad.push(format!("u[{i}], v[{i}] not coprime"));
        }
    }

    // sign alternation of a*u[i] - b*v[i]: positive at even i, negative at
    // odd i, zero exactly at i = n
    for i in 0..=n {
        let signed = a * table.u(i) - b * table.v(i);
        let ok = if i == n {
            signed.is_zero()
        } else if i % 2 == 0 {
            signed.is_positive()
        } else {
            signed.is_negative()
        };
        if !ok {
            bad.push(format!("sign of a u[{i}] - b v[{i}] breaks alternation"));
        }
    }

    bad
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(a: u64, b: u64) -> CoprimePair {
        CoprimePair::new(a, b).unwrap()
    }

    fn coeffs(list: &[u64]) -> ContinuedFraction {
        ContinuedFraction::new(list.iter().map(|&x| BigInt::from(x)).collect()).unwrap()
    }

    #[test]
    fn expand_34_29() {
        assert_eq!(cf_expand(&pair(34, 29)), coeffs(&[1, 5, 1, 4]));
    }

    #[test]
    fn expand_7_5() {
        assert_eq!(cf_expand(&pair(7, 5)), coeffs(&[1, 2, 2]));
    }

    #[test]
    fn expand_integer_ratio() {
        assert_eq!(cf_expand(&pair(5, 1)), coeffs(&[5]));
    }

    #[test]
    fn expand_non_coprime_reduces() {
        // 10/4 expands like 5/2; the chain still ends at gcd = 2
        assert_eq!(cf_expand(&pair(10, 4)), coeffs(&[2, 2]));
    }

    #[test]
    fn pair_rejects_bad_order() {
        assert!(CoprimePair::new(5, 5).is_err());
        assert!(CoprimePair::new(3, 7).is_err());
        assert!(CoprimePair::new(3, 0).is_err());
    }

    #[test]
    fn convergents_34_29() {
        let t = convergents(&cf_expand(&pair(34, 29)), Some(&pair(34, 29))).unwrap();
        let u: Vec<BigInt> = t.denominators().to_vec();
        let v: Vec<BigInt> = t.numerators().to_vec();
        assert_eq!(u, vec![1.into(), 5.into(), 6.into(), 29.into()]);
        assert_eq!(v, vec![1.into(), 6.into(), 7.into(), 34.into()]);
    }

    #[test]
    fn residues_7_5() {
        let t = convergents(&cf_expand(&pair(7, 5)), Some(&pair(7, 5))).unwrap();
        let r: Vec<BigInt> = t.residues().to_vec();
        assert_eq!(r, vec![2.into(), 1.into(), 0.into()]);
        assert_eq!(t.r(-2), &BigInt::from(7));
        assert_eq!(t.r(-1), &BigInt::from(5));
    }

    #[test]
    fn convergents_single_coefficient() {
        let t = convergents(&coeffs(&[5]), None).unwrap();
        assert_eq!(t.denominators(), &[BigInt::one()]);
        assert_eq!(t.numerators(), &[BigInt::from(5)]);
    }

    #[test]
    fn convergents_rejects_foreign_pair() {
        let cf = cf_expand(&pair(34, 29));
        assert_eq!(
            convergents(&cf, Some(&pair(35, 29))),
            Err(ContfracError::MismatchedPair)
        );
    }

    #[test]
    fn value_round_trips() {
        for (a, b) in [(34u64, 29u64), (7, 5), (5, 1), (89, 55), (200, 121)] {
            let cf = cf_expand(&pair(a, b));
            assert_eq!(cf_value(&cf).unwrap(), pair(a, b));
        }
    }

    #[test]
    fn value_of_single_term() {
        assert_eq!(cf_value(&coeffs(&[7])).unwrap(), pair(7, 1));
    }

    #[test]
    fn value_rejects_degenerate_one() {
        // [1] would be 1/1, not a valid pair
        assert!(matches!(
            cf_value(&coeffs(&[1])),
            Err(ContfracError::InvalidPair { .. })
        ));
    }

    #[test]
    fn coefficient_list_validation() {
        assert!(matches!(
            ContinuedFraction::new(vec![]),
            Err(ContfracError::EmptyCoefficients)
        ));
        assert!(matches!(
            ContinuedFraction::new(vec![1.into(), 0.into()]),
            Err(ContfracError::NonPositiveCoefficient { index: 1, .. })
        ));
        assert!(matches!(
            ContinuedFraction::new(vec![3.into(), 1.into()]),
            Err(ContfracError::NonCanonical(..))
        ));
    }

    #[test]
    fn best_2nd_kind_convergent_yes() {
        assert!(is_best_2nd_kind(34, 29, 5, 6));
        assert!(is_best_2nd_kind(34, 29, 29, 34));
        assert!(is_best_2nd_kind(34, 29, 1, 1));
    }

    #[test]
    fn best_2nd_kind_non_convergent_no() {
        // |34*5 - 29*7| = 33 loses to (u', v') = (1, 1) at 5
        assert!(!is_best_2nd_kind(34, 29, 5, 7));
    }

    #[test]
    fn best_2nd_kind_half_exception_tie() {
        // 3/2 = 1 + 1/2: (1, 1) ties with (1, 2), so strictness fails
        assert!(!is_best_2nd_kind(3, 2, 1, 1));
        assert!(is_best_2nd_kind(3, 2, 2, 3));
    }

    #[test]
    fn oracle_34_29() {
        let set = best_approx_bruteforce(34, 29).unwrap();
        let expect: BTreeSet<(u64, u64)> = [(1, 1), (5, 6), (6, 7), (29, 34)].into_iter().collect();
        assert_eq!(set, expect);
    }

    #[test]
    fn oracle_7_5() {
        let set = best_approx_bruteforce(7, 5).unwrap();
        let expect: BTreeSet<(u64, u64)> = [(1, 1), (2, 3), (5, 7)].into_iter().collect();
        assert_eq!(set, expect);
    }

    #[test]
    fn oracle_half_exception_drops_tied_pair() {
        // 3/2: the tie between (1,1) and (1,2) removes the first convergent
        let set = best_approx_bruteforce(3, 2).unwrap();
        let expect: BTreeSet<(u64, u64)> = [(2, 3)].into_iter().collect();
        assert_eq!(set, expect);
        assert!(is_half_exception(3, 2));
        assert!(!is_half_exception(34, 29));
    }

    #[test]
    fn oracle_ceiling() {
        assert!(matches!(
            best_approx_bruteforce(20_001, 7),
            Err(ContfracError::OracleCeiling { .. })
        ));
        assert!(best_approx_bruteforce_with_ceiling(20_001, 7, 30_000).is_ok());
    }

    #[test]
    fn oracle_matches_literal_condition_up_to_25() {
        // cross-check the incremental scan against the unoptimized
        // definition of condition 0*
        for a in 2..=25u64 {
            for b in 1..a {
                let set = best_approx_bruteforce(a, b).unwrap();
                for u in 1..=b {
                    for v in 0..=a {
                        assert_eq!(
                            set.contains(&(u, v)),
                            condition_0star(a, b, u, v),
                            "mismatch at a={a} b={b} u={u} v={v}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn minimizer_pairs_traces() {
        let set = |pairs: &[(u64, u64)]| pairs.iter().copied().collect::<BTreeSet<_>>();
        // stall-free: the whole chain
        assert_eq!(
            minimizer_pairs(34, 29).unwrap(),
            set(&[(1, 1), (5, 6), (6, 7), (29, 34)])
        );
        // fractional part above one half: the zeroth is strictly beaten
        assert_eq!(minimizer_pairs(5, 3).unwrap(), set(&[(1, 2), (3, 5)]));
        // exactly one half: the zeroth ties with a non-convergent
        assert_eq!(minimizer_pairs(3, 2).unwrap(), set(&[(2, 3)]));
        // non-coprime input follows its reduced chain
        assert_eq!(minimizer_pairs(6, 4).unwrap(), set(&[(2, 3)]));
    }

    #[test]
    fn minimizer_pairs_match_the_exhaustive_oracle() {
        for a in 2..=40u64 {
            for b in 1..a {
                assert_eq!(
                    minimizer_pairs(a, b).unwrap(),
                    best_approx_bruteforce(a, b).unwrap(),
                    "a={a} b={b}"
                );
            }
        }
    }

    #[test]
    fn table_invariants_small_sweep() {
        for a in 2..=60u64 {
            for b in 1..a {
                let p = pair(a, b);
                let cf = cf_expand(&p);
                let t = convergents(&cf, Some(&p)).unwrap();
                let bad = table_violations(&p, &cf, &t);
                assert!(bad.is_empty(), "a={a} b={b}: {bad:?}");
            }
        }
    }

    #[test]
    fn equal_denominator_step_when_q1_is_1() {
        // 5/3 = [1; 1, 2]: u = (1, 1, 3) — the first step may stall
        let t = convergents(&cf_expand(&pair(5, 3)), Some(&pair(5, 3))).unwrap();
        assert_eq!(t.u(0), t.u(1));
        assert!(table_violations(&pair(5, 3), &cf_expand(&pair(5, 3)), &t).is_empty());
    }
}
