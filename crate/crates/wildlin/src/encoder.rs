//! Steering convergent numerators onto prescribed residues.
//!
//! Given a target sequence `z[0], ..., z[m-1]` and a prime `c` with
//! `0 < z[i] < c`, pick the coefficients of a continued fraction one at a
//! time so that each convergent numerator satisfies `v[i] ≡ z[i] (mod c)`.
//! The recurrence `v[i] = v[i-1] * q + v[i-2]` is linear in the coefficient
//! `q`, and `v[i-1]` is invertible mod `c` (it is congruent to `z[i-1]`,
//! which is nonzero), so
//!
//! ```text
//! q ≡ (z[i] - v[i-2]) * v[i-1]^-1   (mod c)
//! ```
//!
//! has a solution in every window of `c` consecutive integers.  Taking the
//! least solution `>= 1` (`>= 2` for the final coefficient, keeping the
//! expansion canonical) produces a fraction `a/b` whose numerator column
//! carries the whole sequence: `z[i]` is recoverable as `v[i] mod c`.
//!
//! [`build_squaring_model`] instantiates this with the interleaved sequence
//! `1, 1, 2, 4, ..., 2L, (2L)^2` — arguments and squares side by side — and
//! a prime exceeding every entry, which is all the raw material the formula
//! families in [`model`](crate::model) need.  [`encode_function`] does the
//! same for an arbitrary `u64` table, shifting everything up by one so that
//! zero values stay inside the `0 < z[i]` window.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::contfrac::{
    cf_value, convergents, ContfracError, ContinuedFraction, ConvergentTable, CoprimePair,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EncoderError {
    #[error("target sequence is empty")]
    EmptySequence,
    #[error("modulus {0} is not prime")]
    ModulusNotPrime(BigInt),
    #[error("modulus does not fit in 64 bits")]
    ModulusTooLarge,
    #[error("entry {value} at index {index} is outside 0 < z < {modulus}")]
    ResidueOutOfRange {
        index: usize,
        value: BigInt,
        modulus: BigInt,
    },
    #[error(
        "encoded fraction {a}/{b} is a half-integer, whose approximation \
         minimum is not unique; re-encode with a different modulus"
    )]
    ExceptionRatio { a: BigInt, b: BigInt },
    #[error("sequence length must be at least 1")]
    ZeroLength,
    #[error(transparent)]
    Contfrac(#[from] ContfracError),
}

/// Deterministic trial division; plenty for the modulus sizes in play.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Smallest prime strictly greater than `n`.
pub fn smallest_prime_above(n: u64) -> u64 {
    let mut k = n + 1;
    while !is_prime_u64(k) {
        k += 1;
    }
    k
}

/// Residues to place in the numerator column, together with the modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TargetSequence {
    z: Vec<BigInt>,
    c: BigInt,
}

impl TargetSequence {
    pub fn new(z: Vec<BigInt>, c: BigInt) -> Result<Self, EncoderError> {
        if z.is_empty() {
            return Err(EncoderError::EmptySequence);
        }
        let c_small = c.to_u64().ok_or(EncoderError::ModulusTooLarge)?;
        if !is_prime_u64(c_small) {
            return Err(EncoderError::ModulusNotPrime(c));
        }
        for (index, value) in z.iter().enumerate() {
            if *value <= BigInt::zero() || *value >= c {
                return Err(EncoderError::ResidueOutOfRange {
                    index,
                    value: value.clone(),
                    modulus: c,
                });
            }
        }
        Ok(TargetSequence { z, c })
    }

    pub fn z(&self) -> &[BigInt] {
        &self.z
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn len(&self) -> usize {
        self.z.len()
    }

    pub fn is_empty(&self) -> bool {
        false // the constructor rejects empty sequences
    }
}

/// Least coefficient `q >= min_val` with
/// `v_prev * q + v_prev2 ≡ z (mod c)`.
///
/// `min_val` is 1 for interior coefficients and 2 for the final one.
/// Panics if `v_prev` is not invertible mod `c`, which cannot happen when
/// the previous numerator hit a nonzero residue.
pub fn solve_coefficient(
    v_prev: &BigInt,
    v_prev2: &BigInt,
    z: &BigInt,
    c: &BigInt,
    min_val: u32,
) -> BigInt {
    assert!(min_val == 1 || min_val == 2, "min_val must be 1 or 2");
    let eg = v_prev.extended_gcd(c);
    assert!(
        eg.gcd.is_one(),
        "numerator {v_prev} is not invertible mod {c}"
    );
    let inv = eg.x.mod_floor(c);
    let t = ((z - v_prev2) * inv).mod_floor(c);
    if t < BigInt::from(min_val) {
        t + c
    } else {
        t
    }
}

/// A continued fraction realizing a target sequence, with its convergent
/// table and value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Encoding {
    pub cf: ContinuedFraction,
    pub table: ConvergentTable,
    pub pair: CoprimePair,
}

/// Runs the coefficient-solving loop over a whole sequence.
///
/// The result is rejected if its denominator is 2: such fractions are
/// half-integers, the single case where the best-approximation minimum
/// admits a tie and the formula families stop being faithful.
pub fn encode_sequence(seq: &TargetSequence) -> Result<Encoding, EncoderError> {
    let m = seq.len();
    let mut v_prev2 = BigInt::zero();
    let mut v_prev = BigInt::one();
    let mut coeffs = Vec::with_capacity(m);
    for (i, z) in seq.z().iter().enumerate() {
        let min_val = if i + 1 == m { 2 } else { 1 };
        let q = solve_coefficient(&v_prev, &v_prev2, z, seq.c(), min_val);
        let v = &v_prev * &q + &v_prev2;
        coeffs.push(q);
        v_prev2 = std::mem::replace(&mut v_prev, v);
    }
    let cf = ContinuedFraction::new(coeffs)?;
    let pair = cf_value(&cf)?;
    if *pair.b() == BigInt::from(2) {
        return Err(EncoderError::ExceptionRatio {
            a: pair.a().clone(),
            b: pair.b().clone(),
        });
    }
    let table = convergents(&cf, Some(&pair))?;
    for (i, z) in seq.z().iter().enumerate() {
        debug_assert_eq!(&table.v(i as isize).mod_floor(seq.c()), z);
    }
    Ok(Encoding { cf, table, pair })
}

/// An encoded sequence together with the two derived scalars
/// `alpha = a * c` and `delta = a * b * c^2 + c` that the two-scalar
/// formula family works from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodedModel {
    seq: TargetSequence,
    enc: Encoding,
    alpha: BigInt,
    delta: BigInt,
}

impl EncodedModel {
    pub fn new(seq: TargetSequence) -> Result<Self, EncoderError> {
        let enc = encode_sequence(&seq)?;
        let (a, b, c) = (enc.pair.a(), enc.pair.b(), seq.c());
        let alpha = a * c;
        let delta = a * b * c * c + c;
        Ok(EncodedModel {
            seq,
            enc,
            alpha,
            delta,
        })
    }

    pub fn a(&self) -> &BigInt {
        self.enc.pair.a()
    }

    pub fn b(&self) -> &BigInt {
        self.enc.pair.b()
    }

    pub fn c(&self) -> &BigInt {
        self.seq.c()
    }

    pub fn alpha(&self) -> &BigInt {
        &self.alpha
    }

    pub fn delta(&self) -> &BigInt {
        &self.delta
    }

    pub fn seq(&self) -> &TargetSequence {
        &self.seq
    }

    pub fn cf(&self) -> &ContinuedFraction {
        &self.enc.cf
    }

    pub fn table(&self) -> &ConvergentTable {
        &self.enc.table
    }

    pub fn pair(&self) -> &CoprimePair {
        &self.enc.pair
    }
}

/// An encoded model whose sequence interleaves `1..=2L` with the squares:
/// `z = (1, 1, 2, 4, ..., 2L, (2L)^2)`, length `4L`, with the smallest
/// prime above `(2L)^2` as modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WildModel {
    l: u64,
    core: EncodedModel,
}

impl WildModel {
    pub fn l(&self) -> u64 {
        self.l
    }

    pub fn core(&self) -> &EncodedModel {
        &self.core
    }
}

/// Builds the squaring model for bound `L >= 1`.
pub fn build_squaring_model(l: u64) -> Result<WildModel, EncoderError> {
    if l == 0 {
        return Err(EncoderError::ZeroLength);
    }
    let top = 2 * l;
    let c = smallest_prime_above(top * top);
    let mut z = Vec::with_capacity(4 * l as usize);
    for i in 1..=top {
        z.push(BigInt::from(i));
        z.push(BigInt::from(i * i));
    }
    let seq = TargetSequence::new(z, BigInt::from(c))?;
    let core = EncodedModel::new(seq)?;
    Ok(WildModel { l, core })
}

/// An arbitrary finite `u64` table pushed through the encoder.
///
/// Entries are stored shifted up by one (`z[i] = values[i] + 1`) so zeros
/// land inside the window `0 < z < c`; decoding undoes the shift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodedFunction {
    values: Vec<u64>,
    shifted: bool,
    model: EncodedModel,
}

impl EncodedFunction {
    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// Whether stored residues are the values plus one (always true for
    /// functions built by [`encode_function`]).
    pub fn shifted(&self) -> bool {
        self.shifted
    }

    pub fn model(&self) -> &EncodedModel {
        &self.model
    }

    /// Reads entry `i` back out of the numerator column.
    pub fn decode(&self, i: usize) -> u64 {
        let c = self.model.c();
        let v = self.model.table().v(i as isize).mod_floor(c);
        let v = v.to_u64().expect("residue fits by construction");
        if self.shifted {
            v - 1
        } else {
            v
        }
    }

    pub fn decode_all(&self) -> Vec<u64> {
        (0..self.values.len()).map(|i| self.decode(i)).collect()
    }
}

/// Encodes a `u64` table, choosing the smallest workable prime modulus.
pub fn encode_function(values: &[u64]) -> Result<EncodedFunction, EncoderError> {
    if values.is_empty() {
        return Err(EncoderError::EmptySequence);
    }
    let max = *values.iter().max().unwrap();
    let c = smallest_prime_above(max + 1);
    let z = values.iter().map(|&v| BigInt::from(v + 1)).collect();
    let seq = TargetSequence::new(z, BigInt::from(c))?;
    let model = EncodedModel::new(seq)?;
    Ok(EncodedFunction {
        values: values.to_vec(),
        shifted: true,
        model,
    })
}
