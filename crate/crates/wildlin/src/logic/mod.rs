//! Bounded linear-arithmetic formulas over `{0, 1, +, ≤}` plus scalar
//! symbols.
//!
//! Terms are built from variables, nonnegative constants (`n` meaning a sum
//! of `n` ones), sums, and applications of *scalars* — unary symbols
//! interpreted as multiplication by a fixed integer, addressed by index
//! into a scalar list.  Formulas are the usual connectives plus bounded
//! quantifiers; every quantifier carries an explicit bound term, a lower
//! end (0 or 1) and an inclusivity flag, so both the `0 < u' ≤ u` and
//! `x < b·1` styles are representable directly.
//!
//! A few derived atoms appear as *sugar* nodes so formulas stay readable:
//! absolute-difference comparisons, `x = w mod ct`, `w = u div ct`, and
//! pair disequality.  [`expand_sugar`] removes them, rewriting into the
//! pure core:
//!
//! * `z = w mod ct` becomes `0 ≤ z < ct ∧ (∃m, 0 ≤ m ≤ w) w = z + ct·m`;
//! * `w = u div ct` becomes `ct·w ≤ u ∧ u + 1 ≤ ct·(w+1)`;
//! * `|t₁−t₂| < |t₃−t₄|` splits into the four sign cases, each a single
//!   `≤`-atom with all terms moved to the nonnegative side;
//! * `(s,t) ≠ (s′,t′)` becomes a disjunction of negated equalities.
//!
//! The evaluator ([`eval_literal`]) computes sugar atoms directly by
//! arithmetic; agreement with the expanded forms is a tested property, not
//! an assumption.
//!
//! Submodules: [`parser`] for the s-expression grammar, [`eval`] for
//! budgeted literal evaluation, [`builders`] for the formula families the
//! rest of the crate is about.

pub mod builders;
pub mod eval;
pub mod parser;

pub use builders::{build_mu2, build_mu_family, MuFamily, PiForm};
pub use eval::{eval_literal, EvalOptions, EvalOrder, Evaluator, Valuation};
pub use parser::parse;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LogicError {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unbound variable {0}")]
    UnboundVariable(String),
    #[error("scalar index {0} out of range")]
    ScalarIndex(usize),
    #[error("step budget {limit} exceeded while iterating {var}")]
    BudgetExceeded { var: String, limit: u64 },
    #[error("cannot expand modulus/divisor term {0}: need a constant or a scalar applied to 1")]
    UnsupportedModulus(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    Var(String),
    Const(BigInt),
    Sum(Box<Term>, Box<Term>),
    /// Scalar symbol application: `Scalar(k, t)` is the k-th scalar times `t`.
    Scalar(usize, Box<Term>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuantKind {
    Exists,
    Forall,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quantifier {
    pub kind: QuantKind,
    pub var: String,
    /// Lower end of the range: 0 or 1 (the recurring `0 < u'` pattern).
    pub lower: u8,
    pub bound: Term,
    /// `true` for `≤ bound`, `false` for `< bound`.
    pub inclusive: bool,
    pub body: Box<Formula>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Formula {
    Le(Term, Term),
    Eq(Term, Term),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Not(Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Quant(Quantifier),
    /// `|t₀ − t₁| < |t₂ − t₃|`
    AbsDiffLt([Term; 4]),
    /// `|t₀ − t₁| ≤ |t₂ − t₃|`
    AbsDiffLe([Term; 4]),
    /// `rem = value mod modulus`
    EqMod {
        rem: Term,
        value: Term,
        modulus: Term,
    },
    /// `quot = value div divisor`
    EqDiv {
        quot: Term,
        value: Term,
        divisor: Term,
    },
    /// `(t₀, t₁) ≠ (t₂, t₃)`
    NeqPair([Term; 4]),
}

// ---- convenience constructors (used heavily by builders and tests) ----

pub fn var(name: &str) -> Term {
    Term::Var(name.to_string())
}

pub fn cst(n: impl Into<BigInt>) -> Term {
    Term::Const(n.into())
}

pub fn sum(a: Term, b: Term) -> Term {
    Term::Sum(Box::new(a), Box::new(b))
}

pub fn scal(k: usize, t: Term) -> Term {
    Term::Scalar(k, Box::new(t))
}

pub fn le(a: Term, b: Term) -> Formula {
    Formula::Le(a, b)
}

pub fn eq(a: Term, b: Term) -> Formula {
    Formula::Eq(a, b)
}

pub fn and(a: Formula, b: Formula) -> Formula {
    Formula::And(Box::new(a), Box::new(b))
}

pub fn or(a: Formula, b: Formula) -> Formula {
    Formula::Or(Box::new(a), Box::new(b))
}

pub fn not(f: Formula) -> Formula {
    Formula::Not(Box::new(f))
}

pub fn imp(a: Formula, b: Formula) -> Formula {
    Formula::Implies(Box::new(a), Box::new(b))
}

pub fn exists(v: &str, lower: u8, bound: Term, inclusive: bool, body: Formula) -> Formula {
    Formula::Quant(Quantifier {
        kind: QuantKind::Exists,
        var: v.to_string(),
        lower,
        bound,
        inclusive,
        body: Box::new(body),
    })
}

pub fn forall(v: &str, lower: u8, bound: Term, inclusive: bool, body: Formula) -> Formula {
    Formula::Quant(Quantifier {
        kind: QuantKind::Forall,
        var: v.to_string(),
        lower,
        bound,
        inclusive,
        body: Box::new(body),
    })
}

/// Right-nested conjunction of all formulas (panics on empty input).
pub fn and_all(fs: Vec<Formula>) -> Formula {
    fs.into_iter()
        .rev()
        .reduce(|acc, f| and(f, acc))
        .expect("and_all needs at least one conjunct")
}

// ---- printing ----

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(name) => write!(f, "{name}"),
            Term::Const(n) => write!(f, "(c {n})"),
            Term::Sum(a, b) => write!(f, "(+ {a} {b})"),
            Term::Scalar(k, t) => write!(f, "(s {k} {t})"),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Le(a, b) => write!(f, "(le {a} {b})"),
            Formula::Eq(a, b) => write!(f, "(eq {a} {b})"),
            Formula::And(a, b) => write!(f, "(and {a} {b})"),
            Formula::Or(a, b) => write!(f, "(or {a} {b})"),
            Formula::Not(a) => write!(f, "(not {a})"),
            Formula::Implies(a, b) => write!(f, "(imp {a} {b})"),
            Formula::Quant(q) => {
                let kind = match q.kind {
                    QuantKind::Exists => "exists",
                    QuantKind::Forall => "forall",
                };
                let incl = if q.inclusive { "le" } else { "lt" };
                write!(
                    f,
                    "({kind} {} {} {} {incl} {})",
                    q.var, q.lower, q.bound, q.body
                )
            }
            Formula::AbsDiffLt(ts) => {
                write!(f, "(absdlt {} {} {} {})", ts[0], ts[1], ts[2], ts[3])
            }
            Formula::AbsDiffLe(ts) => {
                write!(f, "(absdle {} {} {} {})", ts[0], ts[1], ts[2], ts[3])
            }
            Formula::EqMod {
                rem,
                value,
                modulus,
            } => write!(f, "(eqmod {rem} {value} {modulus})"),
            Formula::EqDiv {
                quot,
                value,
                divisor,
            } => write!(f, "(eqdiv {quot} {value} {divisor})"),
            Formula::NeqPair(ts) => {
                write!(f, "(neqp {} {} {} {})", ts[0], ts[1], ts[2], ts[3])
            }
        }
    }
}

/// Canonical text of a formula; [`parse`] inverts it exactly.
pub fn print(f: &Formula) -> String {
    f.to_string()
}

// ---- structural walkers ----

fn term_vars(t: &Term, out: &mut BTreeSet<String>) {
    match t {
        Term::Var(name) => {
            out.insert(name.clone());
        }
        Term::Const(_) => {}
        Term::Sum(a, b) => {
            term_vars(a, out);
            term_vars(b, out);
        }
        Term::Scalar(_, t) => term_vars(t, out),
    }
}

/// Variables occurring free in the formula.
pub fn free_vars(f: &Formula) -> BTreeSet<String> {
    fn walk(f: &Formula, out: &mut BTreeSet<String>) {
        match f {
            Formula::Le(a, b) | Formula::Eq(a, b) => {
                term_vars(a, out);
                term_vars(b, out);
            }
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                walk(a, out);
                walk(b, out);
            }
            Formula::Not(a) => walk(a, out),
            Formula::Quant(q) => {
                term_vars(&q.bound, out);
                let mut inner = BTreeSet::new();
                walk(&q.body, &mut inner);
                inner.remove(&q.var);
                out.extend(inner);
            }
            Formula::AbsDiffLt(ts) | Formula::AbsDiffLe(ts) | Formula::NeqPair(ts) => {
                for t in ts {
                    term_vars(t, out);
                }
            }
            Formula::EqMod {
                rem,
                value,
                modulus,
            } => {
                term_vars(rem, out);
                term_vars(value, out);
                term_vars(modulus, out);
            }
            Formula::EqDiv {
                quot,
                value,
                divisor,
            } => {
                term_vars(quot, out);
                term_vars(value, out);
                term_vars(divisor, out);
            }
        }
    }
    let mut out = BTreeSet::new();
    walk(f, &mut out);
    out
}

/// Every variable name appearing anywhere, free or bound.
pub fn all_vars(f: &Formula) -> BTreeSet<String> {
    fn walk(f: &Formula, out: &mut BTreeSet<String>) {
        match f {
            Formula::Le(a, b) | Formula::Eq(a, b) => {
                term_vars(a, out);
                term_vars(b, out);
            }
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                walk(a, out);
                walk(b, out);
            }
            Formula::Not(a) => walk(a, out),
            Formula::Quant(q) => {
                out.insert(q.var.clone());
                term_vars(&q.bound, out);
                walk(&q.body, out);
            }
            Formula::AbsDiffLt(ts) | Formula::AbsDiffLe(ts) | Formula::NeqPair(ts) => {
                for t in ts {
                    term_vars(t, out);
                }
            }
            Formula::EqMod {
                rem,
                value,
                modulus,
            } => {
                term_vars(rem, out);
                term_vars(value, out);
                term_vars(modulus, out);
            }
            Formula::EqDiv {
                quot,
                value,
                divisor,
            } => {
                term_vars(quot, out);
                term_vars(value, out);
                term_vars(divisor, out);
            }
        }
    }
    let mut out = BTreeSet::new();
    walk(f, &mut out);
    out
}

/// Scalar indices mentioned anywhere in the formula — the formula's
/// effective signature.
pub fn scalar_indices(f: &Formula) -> BTreeSet<usize> {
    fn term_walk(t: &Term, out: &mut BTreeSet<usize>) {
        match t {
            Term::Var(_) | Term::Const(_) => {}
            Term::Sum(a, b) => {
                term_walk(a, out);
                term_walk(b, out);
            }
            Term::Scalar(k, t) => {
                out.insert(*k);
                term_walk(t, out);
            }
        }
    }
    fn walk(f: &Formula, out: &mut BTreeSet<usize>) {
        match f {
            Formula::Le(a, b) | Formula::Eq(a, b) => {
                term_walk(a, out);
                term_walk(b, out);
            }
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                walk(a, out);
                walk(b, out);
            }
            Formula::Not(a) => walk(a, out),
            Formula::Quant(q) => {
                term_walk(&q.bound, out);
                walk(&q.body, out);
            }
            Formula::AbsDiffLt(ts) | Formula::AbsDiffLe(ts) | Formula::NeqPair(ts) => {
                for t in ts {
                    term_walk(t, out);
                }
            }
            Formula::EqMod {
                rem,
                value,
                modulus,
            } => {
                term_walk(rem, out);
                term_walk(value, out);
                term_walk(modulus, out);
            }
            Formula::EqDiv {
                quot,
                value,
                divisor,
            } => {
                term_walk(quot, out);
                term_walk(value, out);
                term_walk(divisor, out);
            }
        }
    }
    let mut out = BTreeSet::new();
    walk(f, &mut out);
    out
}

// ---- quantifier bound inspection ----

#[derive(Debug, Clone)]
pub struct BoundEntry {
    pub var: String,
    pub bound: Term,
    /// Bound term mentions no variables (constants and scalars only).
    pub is_constant: bool,
    /// Value of a constant bound under the given scalars.
    pub value: Option<BigInt>,
}

#[derive(Debug, Clone)]
pub struct BoundReport {
    pub all_constant: bool,
    pub entries: Vec<BoundEntry>,
}

fn const_term_value(t: &Term, scalars: &[BigInt]) -> Option<BigInt> {
    match t {
        Term::Var(_) => None,
        Term::Const(n) => Some(n.clone()),
        Term::Sum(a, b) => Some(const_term_value(a, scalars)? + const_term_value(b, scalars)?),
        Term::Scalar(k, t) => Some(scalars.get(*k)? * const_term_value(t, scalars)?),
    }
}

/// Reports every quantifier's bound term, whether it is constant (no
/// variables), and its value under `scalars` when it is.
pub fn check_bounded(f: &Formula, scalars: &[BigInt]) -> BoundReport {
    fn walk(f: &Formula, scalars: &[BigInt], entries: &mut Vec<BoundEntry>) {
        match f {
            Formula::Quant(q) => {
                let mut vars = BTreeSet::new();
                term_vars(&q.bound, &mut vars);
                let is_constant = vars.is_empty();
                entries.push(BoundEntry {
                    var: q.var.clone(),
                    bound: q.bound.clone(),
                    is_constant,
                    value: if is_constant {
                        const_term_value(&q.bound, scalars)
                    } else {
                        None
                    },
                });
                walk(&q.body, scalars, entries);
            }
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                walk(a, scalars, entries);
                walk(b, scalars, entries);
            }
            Formula::Not(a) => walk(a, scalars, entries),
            _ => {}
        }
    }
    let mut entries = Vec::new();
    walk(f, scalars, &mut entries);
    BoundReport {
        all_constant: entries.iter().all(|e| e.is_constant),
        entries,
    }
}

// ---- sugar expansion ----

struct Expander {
    used: BTreeSet<String>,
    counter: usize,
}

impl Expander {
    fn fresh(&mut self) -> String {
        loop {
            let name = format!("_m{}", self.counter);
            self.counter += 1;
            if self.used.insert(name.clone()) {
                return name;
            }
        }
    }

    /// `ct · t` for a modulus/divisor term `ct` that is either a constant
    /// or a scalar applied to 1 — the only shapes the term language can
    /// multiply by a variable.
    fn mult(&self, ct: &Term, t: Term) -> Result<Term, LogicError> {
        match ct {
            Term::Scalar(k, inner) if **inner == Term::Const(BigInt::from(1)) => Ok(scal(*k, t)),
            Term::Const(n) => {
                if n.is_zero() {
                    return Ok(cst(0));
                }
                let mut acc = t.clone();
                let mut i = BigInt::from(1);
                while &i < n {
                    acc = sum(acc, t.clone());
                    i += 1;
                }
                Ok(acc)
            }
            other => Err(LogicError::UnsupportedModulus(other.to_string())),
        }
    }

    fn expand(&mut self, f: &Formula) -> Result<Formula, LogicError> {
        Ok(match f {
            Formula::Le(a, b) => le(a.clone(), b.clone()),
            Formula::Eq(a, b) => eq(a.clone(), b.clone()),
            Formula::And(a, b) => and(self.expand(a)?, self.expand(b)?),
            Formula::Or(a, b) => or(self.expand(a)?, self.expand(b)?),
            Formula::Not(a) => not(self.expand(a)?),
            Formula::Implies(a, b) => imp(self.expand(a)?, self.expand(b)?),
            Formula::Quant(q) => Formula::Quant(Quantifier {
                kind: q.kind,
                var: q.var.clone(),
                lower: q.lower,
                bound: q.bound.clone(),
                inclusive: q.inclusive,
                body: Box::new(self.expand(&q.body)?),
            }),
            Formula::AbsDiffLt(ts) => abs_cases(ts, true),
            Formula::AbsDiffLe(ts) => abs_cases(ts, false),
            Formula::EqMod {
                rem,
                value,
                modulus,
            } => {
                // 0 ≤ z < ct ∧ (∃m, 0 ≤ m ≤ w) w = z + ct·m
                let m = self.fresh();
                let ctm = self.mult(modulus, var(&m))?;
                and(
                    and(
                        le(cst(0), rem.clone()),
                        le(sum(rem.clone(), cst(1)), modulus.clone()),
                    ),
                    exists(
                        &m,
                        0,
                        value.clone(),
                        true,
                        eq(value.clone(), sum(rem.clone(), ctm)),
                    ),
                )
            }
            Formula::EqDiv {
                quot,
                value,
                divisor,
            } => {
                // ct·w ≤ u ∧ u + 1 ≤ ct·(w+1)
                let lo = self.mult(divisor, quot.clone())?;
                let hi = self.mult(divisor, sum(quot.clone(), cst(1)))?;
                and(le(lo, value.clone()), le(sum(value.clone(), cst(1)), hi))
            }
            Formula::NeqPair(ts) => or(
                not(eq(ts[0].clone(), ts[2].clone())),
                not(eq(ts[1].clone(), ts[3].clone())),
            ),
        })
    }
}

/// The four sign cases of `|a−b| {<,≤} |c−d|`, each rearranged so both
/// sides of the `≤` are plain sums (no subtraction in the core language).
fn abs_cases(ts: &[Term; 4], strict: bool) -> Formula {
    let [a, b, c, d] = ts.clone();
    let pad = |t: Term| if strict { sum(t, cst(1)) } else { t };
    let case = |a_ge_b: bool, c_ge_d: bool| -> Formula {
        let lhs_cond = if a_ge_b {
            le(b.clone(), a.clone())
        } else {
            le(sum(a.clone(), cst(1)), b.clone())
        };
        let rhs_cond = if c_ge_d {
            le(d.clone(), c.clone())
        } else {
            le(sum(c.clone(), cst(1)), d.clone())
        };
        // |a−b| = a−b or b−a; move subtracted terms across the ≤
        let (pos, neg) = if a_ge_b {
            (a.clone(), b.clone())
        } else {
            (b.clone(), a.clone())
        };
        let (rpos, rneg) = if c_ge_d {
            (c.clone(), d.clone())
        } else {
            (d.clone(), c.clone())
        };
        // pos − neg < rpos − rneg  ⇔  pos + rneg + 1 ≤ rpos + neg
        let cmp = le(pad(sum(pos, rneg)), sum(rpos, neg));
        and(lhs_cond, and(rhs_cond, cmp))
    };
    or(
        or(case(true, true), case(true, false)),
        or(case(false, true), case(false, false)),
    )
}

/// Rewrites every sugar node into the core language.  Fails only on
/// `eqmod`/`eqdiv` whose modulus is neither a constant nor a scalar
/// applied to 1 (no other shape can be multiplied by a bound variable
/// within the term grammar).
pub fn expand_sugar(f: &Formula) -> Result<Formula, LogicError> {
    let mut expander = Expander {
        used: all_vars(f),
        counter: 0,
    };
    expander.expand(f)
}

/// Does the formula contain any sugar node?
pub fn has_sugar(f: &Formula) -> bool {
    match f {
        Formula::Le(..) | Formula::Eq(..) => false,
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
            has_sugar(a) || has_sugar(b)
        }
        Formula::Not(a) => has_sugar(a),
        Formula::Quant(q) => has_sugar(&q.body),
        Formula::AbsDiffLt(..)
        | Formula::AbsDiffLe(..)
        | Formula::EqMod { .. }
        | Formula::EqDiv { .. }
        | Formula::NeqPair(..) => true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        let f = le(sum(var("x"), cst(1)), scal(0, var("y")));
        assert_eq!(print(&f), "(le (+ x (c 1)) (s 0 y))");
        let q = exists("x", 0, scal(1, cst(1)), false, eq(var("x"), var("x")));
        assert_eq!(print(&q), "(exists x 0 (s 1 (c 1)) lt (eq x x))");
    }

    #[test]
    fn expansion_removes_all_sugar() {
        let fs = vec![
            Formula::AbsDiffLt([var("a"), var("b"), cst(3), var("d")]),
            Formula::AbsDiffLe([var("a"), var("b"), cst(3), var("d")]),
            Formula::EqMod {
                rem: var("z"),
                value: var("w"),
                modulus: scal(2, cst(1)),
            },
            Formula::EqDiv {
                quot: var("w"),
                value: var("u"),
                divisor: scal(0, cst(1)),
            },
            Formula::NeqPair([var("a"), var("b"), var("c"), var("d")]),
        ];
        for f in fs {
            let g = expand_sugar(&f).unwrap();
            assert!(!has_sugar(&g), "sugar survives in {g}");
        }
    }

    #[test]
    fn expansion_with_constant_modulus() {
        let f = Formula::EqMod {
            rem: var("z"),
            value: var("w"),
            modulus: cst(3),
        };
        let g = expand_sugar(&f).unwrap();
        assert!(!has_sugar(&g));
        // 3·m appears as m+m+m
        assert!(print(&g).contains("(+ (+ _m0 _m0) _m0)"));
    }

    #[test]
    fn expansion_rejects_compound_modulus() {
        let f = Formula::EqMod {
            rem: var("z"),
            value: var("w"),
            modulus: sum(var("u"), cst(1)),
        };
        assert!(matches!(
            expand_sugar(&f),
            Err(LogicError::UnsupportedModulus(..))
        ));
    }

    #[test]
    fn fresh_names_avoid_existing_ones() {
        let f = and(
            eq(var("_m0"), cst(0)),
            Formula::EqMod {
                rem: var("z"),
                value: var("w"),
                modulus: scal(0, cst(1)),
            },
        );
        let g = expand_sugar(&f).unwrap();
        // the quantifier must not reuse the already-taken _m0
        let text = print(&g);
        assert!(text.contains("(exists _m1"), "got {text}");
    }

    #[test]
    fn free_and_bound_vars() {
        let f = exists("u", 1, var("v"), true, eq(var("u"), var("w")));
        assert_eq!(
            free_vars(&f).into_iter().collect::<Vec<_>>(),
            vec!["v".to_string(), "w".to_string()]
        );
        let names = all_vars(&f);
        assert!(names.contains("u") && names.contains("v") && names.contains("w"));
    }

    #[test]
    fn shadowed_variable_is_not_free() {
        // outer v is free in the bound, inner v is bound by the quantifier
        let f = exists("v", 0, var("v"), true, eq(var("v"), cst(0)));
        let fv = free_vars(&f);
        assert!(fv.contains("v")); // from the bound term only
        let g = exists("v", 0, cst(5), true, eq(var("v"), cst(0)));
        assert!(free_vars(&g).is_empty());
    }

    #[test]
    fn scalar_signature() {
        let f = and(
            le(scal(0, var("x")), scal(1, var("y"))),
            eq(scal(0, scal(2, cst(1))), var("z")),
        );
        let idx: Vec<usize> = scalar_indices(&f).into_iter().collect();
        assert_eq!(idx, vec![0, 1, 2]);
    }

    #[test]
    fn bound_report_constant_and_variable() {
        let scalars = [BigInt::from(170), BigInt::from(24_655)];
        let f = exists(
            "x",
            0,
            scal(1, cst(1)),
            true,
            exists("y", 1, var("x"), true, eq(var("y"), cst(0))),
        );
        let report = check_bounded(&f, &scalars);
        assert!(!report.all_constant);
        assert_eq!(report.entries.len(), 2);
        assert!(report.entries[0].is_constant);
        assert_eq!(report.entries[0].value, Some(BigInt::from(24_655)));
        assert!(!report.entries[1].is_constant);
        assert_eq!(report.entries[1].value, None);
    }

    #[test]
    fn quantifier_free_formula_is_all_constant() {
        let report = check_bounded(&le(var("x"), var("y")), &[]);
        assert!(report.all_constant);
        assert!(report.entries.is_empty());
    }
}
