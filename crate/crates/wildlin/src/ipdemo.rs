//! Divisibility patterns over a single encoded model.
//!
//! The formula `phi(x, y) := (∃z ≤ y) z·x = y` — multiplication read
//! through the two-scalar semantics — expresses "`x` divides `y`" for
//! arguments inside the encoded range.  Taking the first `n` primes
//! `p_1, …, p_n` and one model of size `L = p_1⋯p_n`, the products
//! `b_J = ∏_{i∈J} p_i` over all `2^n` index sets `J` realize every
//! possible membership pattern at once: `phi(p_i, b_J)` holds exactly
//! when `i ∈ J`.  [`build_ip_instance`] materializes that matrix and
//! [`check_ip_pattern`] verifies it against the subset structure.
//!
//! Model size is the product of the primes, so `n` is capped at 3
//! (`L = 30`) by default; `n = 4` (`L = 210`) is allowed behind an
//! explicit opt-in and anything larger is refused outright.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::encoder::{build_squaring_model, EncoderError, WildModel};
use crate::model::{ModelError, TwoScalarSemantics};

const PRIMES: [u64; 4] = [2, 3, 5, 7];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IpError {
    #[error("n must be between 1 and 3 (got {0}); the n = 4 instance needs the force flag")]
    UnsupportedSize(usize),
    #[error("n = {0} is not supported even when forced (the model size is the product of the first n primes)")]
    TooLarge(usize),
    #[error("arguments must lie in [0, {l}]: got ({x}, {y})")]
    OutOfRange { l: u64, x: BigInt, y: BigInt },
    #[error(transparent)]
    Encoder(#[from] EncoderError),
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// A full divisibility-pattern instance: the model, the primes, and the
/// computed matrix (rows: index sets in binary-counter order, so the
/// empty set with `b = 1` comes first; columns: the primes).
#[derive(Debug, Clone)]
pub struct IpInstance {
    n: usize,
    primes: Vec<u64>,
    model: WildModel,
    semantics: TwoScalarSemantics,
    divisors: Vec<BigInt>,
    matrix: Vec<Vec<bool>>,
}

/// `x` divides `y`, as `(∃z ≤ y) z·x = y` with the product evaluated
/// through the view-reconstructed semantics.  Arguments must lie in
/// `[0, l]`.  Note the edges this gives (checked by test, not assumed):
/// `phi(0, 0)` and `phi(x, 0)` hold, `phi(0, y)` fails for `y > 0`.
pub fn phi_eval(
    semantics: &TwoScalarSemantics,
    l: u64,
    x: &BigInt,
    y: &BigInt,
) -> Result<bool, IpError> {
    let limit = BigInt::from(l);
    if x < &BigInt::zero() || y < &BigInt::zero() || x > &limit || y > &limit {
        return Err(IpError::OutOfRange {
            l,
            x: x.clone(),
            y: y.clone(),
        });
    }
    let mut z = BigInt::zero();
    while &z <= y {
        if semantics.mu2_eval(&z, x, y) {
            return Ok(true);
        }
        z += 1;
    }
    Ok(false)
}

/// Builds the `n`-prime instance.  `n ≤ 3` normally; `force` admits
/// `n = 4` (model size 210 — noticeably slower, still exact).
pub fn build_ip_instance(n: usize, force: bool) -> Result<IpInstance, IpError> {
    if n == 0 || n > PRIMES.len() {
        return Err(IpError::TooLarge(n));
    }
    if n > 3 && !force {
        return Err(IpError::UnsupportedSize(n));
    }
    let primes: Vec<u64> = PRIMES[..n].to_vec();
    let l: u64 = primes.iter().product();
    let model = build_squaring_model(l)?;
    let semantics = TwoScalarSemantics::new(&model.core().view())?;

    let mut divisors = Vec::with_capacity(1 << n);
    let mut matrix = Vec::with_capacity(1 << n);
    for mask in 0..(1u32 << n) {
        let b: u64 = primes
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, p)| p)
            .product();
        let b = BigInt::from(b);
        let mut row = Vec::with_capacity(n);
        for p in &primes {
            row.push(phi_eval(&semantics, l, &BigInt::from(*p), &b)?);
        }
        divisors.push(b);
        matrix.push(row);
    }
    Ok(IpInstance {
        n,
        primes,
        model,
        semantics,
        divisors,
        matrix,
    })
}

impl IpInstance {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn model(&self) -> &WildModel {
        &self.model
    }

    pub fn semantics(&self) -> &TwoScalarSemantics {
        &self.semantics
    }

    /// Row per index set (binary-counter order), column per prime.
    pub fn matrix(&self) -> &[Vec<bool>] {
        &self.matrix
    }

    pub fn divisors(&self) -> &[BigInt] {
        &self.divisors
    }

    /// The subset labeled by `mask`, as its member primes.
    fn subset_label(&self, mask: usize) -> String {
        let members: Vec<String> = self
            .primes
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, p)| p.to_string())
            .collect();
        format!("{{{}}}", members.join(","))
    }
}

impl fmt::Display for IpInstance {
    /// The matrix as 0/1 rows under a prime header.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label_width = self
            .divisors
            .len()
            .checked_sub(1)
            .map(|last| self.subset_label(last).len())
            .unwrap_or(2)
            .max(2);
        let b_width = self
            .divisors
            .iter()
            .map(|b| b.to_string().len())
            .max()
            .unwrap_or(1);
        write!(
            f,
            "{:label_width$}  {:>b_width$} ",
            "J",
            "b",
            label_width = label_width,
            b_width = b_width
        )?;
        for p in &self.primes {
            write!(f, " {p}")?;
        }
        writeln!(f)?;
        for (mask, row) in self.matrix.iter().enumerate() {
            write!(
                f,
                "{:label_width$}  {:>b_width$} ",
                self.subset_label(mask),
                self.divisors[mask],
                label_width = label_width,
                b_width = b_width
            )?;
            for (i, hit) in row.iter().enumerate() {
                let pad = self.primes[i].to_string().len();
                write!(f, " {:>pad$}", u8::from(*hit), pad = pad)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Does the computed matrix equal the subset-membership pattern?
pub fn check_ip_pattern(instance: &IpInstance) -> bool {
    instance.matrix.iter().enumerate().all(|(mask, row)| {
        row.iter()
            .enumerate()
            .all(|(i, &hit)| hit == (mask >> i & 1 == 1))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_primes_realize_all_four_patterns() {
        let inst = build_ip_instance(2, false).unwrap();
        assert_eq!(inst.primes(), &[2, 3]);
        assert_eq!(inst.model().l(), 6);
        // the modulus the construction picks for L = 6
        assert_eq!(inst.model().core().c(), &BigInt::from(149));
        assert_eq!(
            inst.divisors(),
            &[
                BigInt::from(1),
                BigInt::from(2),
                BigInt::from(3),
                BigInt::from(6)
            ]
        );
        assert_eq!(
            inst.matrix(),
            &[
                vec![false, false],
                vec![true, false],
                vec![false, true],
                vec![true, true],
            ]
        );
        assert!(check_ip_pattern(&inst));
    }

    #[test]
    fn single_prime_instance() {
        let inst = build_ip_instance(1, false).unwrap();
        assert_eq!(inst.model().l(), 2);
        assert_eq!(inst.matrix(), &[vec![false], vec![true]]);
        assert!(check_ip_pattern(&inst));
    }

    #[test]
    fn three_primes_recover_the_lattice_of_divisors() {
        let inst = build_ip_instance(3, false).unwrap();
        assert_eq!(inst.model().l(), 30);
        assert_eq!(inst.model().core().c(), &BigInt::from(3_607));
        assert!(check_ip_pattern(&inst));
        // every row distinct: 8 genuinely different patterns
        let mut rows = inst.matrix().to_vec();
        rows.sort();
        rows.dedup();
        assert_eq!(rows.len(), 8);
    }

    #[test]
    fn size_limits() {
        assert_eq!(
            build_ip_instance(0, false).unwrap_err(),
            IpError::TooLarge(0)
        );
        assert_eq!(
            build_ip_instance(5, true).unwrap_err(),
            IpError::TooLarge(5)
        );
        assert_eq!(
            build_ip_instance(4, false).unwrap_err(),
            IpError::UnsupportedSize(4)
        );
    }

    #[test]
    fn forced_fourth_prime_still_checks_out() {
        let inst = build_ip_instance(4, true).unwrap();
        assert_eq!(inst.model().l(), 210);
        assert!(check_ip_pattern(&inst));
    }

    #[test]
    fn divisibility_edges_at_zero() {
        let inst = build_ip_instance(1, false).unwrap();
        let sem = inst.semantics();
        let l = inst.model().l();
        let big = BigInt::from;
        // 0·0 = 0, so zero divides zero here
        assert!(phi_eval(sem, l, &big(0), &big(0)).unwrap());
        // no z has z·0 = 2
        assert!(!phi_eval(sem, l, &big(0), &big(2)).unwrap());
        // z = 0 gives 0·x = 0: everything divides zero
        assert!(phi_eval(sem, l, &big(2), &big(0)).unwrap());
    }

    #[test]
    fn out_of_range_arguments_are_refused() {
        let inst = build_ip_instance(1, false).unwrap();
        let err = phi_eval(inst.semantics(), 2, &BigInt::from(3), &BigInt::from(1)).unwrap_err();
        assert!(matches!(err, IpError::OutOfRange { l: 2, .. }));
    }

    #[test]
    fn rendering_shows_header_and_bit_rows() {
        let inst = build_ip_instance(2, false).unwrap();
        let text = inst.to_string();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 5);
        assert!(lines[0].contains('J') && lines[0].contains("2 3"), "{text}");
        assert!(lines[1].ends_with("0 0"), "{text}");
        assert!(
            lines[4].contains("{2,3}") && lines[4].ends_with("1 1"),
            "{text}"
        );
    }
}
