//! Literal (Tarskian) evaluation with a step budget.
//!
//! Quantifiers iterate their bounded range with early exit.  Two
//! engineering devices keep the formula families of [`builders`] inside a
//! practical budget without changing any truth value:
//!
//! * **Range narrowing.**  Before iterating `∃x` the evaluator
//!   over-approximates the set of `x` where the body could possibly hold,
//!   reading obvious constraints off conjunction chains: `x + k ≤ t` caps
//!   the range, `t ≤ x + k` floors it, equalities and the `eqmod`/`eqdiv`
//!   sugar pin it to a point.  For `∀x` with an implication body the guard
//!   is narrowed the same way (values failing the guard satisfy the
//!   implication vacuously).  Everything not recognized stays
//!   unconstrained, and the body is still evaluated in full at every kept
//!   value, so narrowing is an optimization, never a semantics (a tested
//!   property: narrowing on and off agree).
//!
//! * **Memoization.**  Quantified subformulas are cached per evaluator by
//!   node identity and the values of their free variables, so sweeping a
//!   grid of arguments re-derives shared inner predicates once.
//!
//! Budgeted steps count actual body evaluations; a blown budget is a loud
//! [`LogicError::BudgetExceeded`] naming the quantifier, never a silent
//! wrong answer.

use std::collections::{BTreeMap, HashMap};
use std::marker::PhantomData;
use std::rc::Rc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use super::{free_vars, Formula, LogicError, QuantKind, Quantifier, Term};

/// Default step budget per [`Evaluator::eval`] call.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Largest quantifier range the shuffled order will materialize; larger
/// ranges fall back to ascending.
const SHUFFLE_CAP: u64 = 65_536;

/// Most intervals a narrowing constraint may hold before giving up.
const MAX_INTERVALS: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalOrder {
    Ascending,
    /// Deterministically shuffled iteration (seeded); results must agree
    /// with ascending order — a tested property.
    Shuffled(u64),
}

#[derive(Debug, Clone)]
pub struct EvalOptions {
    pub budget: u64,
    pub order: EvalOrder,
    /// Disable to force full-range iteration (the reference behavior the
    /// property tests compare against).
    pub narrow: bool,
    pub memo: bool,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            budget: DEFAULT_BUDGET,
            order: EvalOrder::Ascending,
            narrow: true,
            memo: true,
        }
    }
}

impl EvalOptions {
    pub fn with_budget(budget: u64) -> Self {
        EvalOptions {
            budget,
            ..Default::default()
        }
    }

    /// No narrowing, no memo: plain nested loops.
    pub fn unoptimized(budget: u64) -> Self {
        EvalOptions {
            budget,
            order: EvalOrder::Ascending,
            narrow: false,
            memo: false,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Valuation {
    pub vars: BTreeMap<String, BigInt>,
    pub scalars: Vec<BigInt>,
}

impl Valuation {
    pub fn new(scalars: Vec<BigInt>) -> Self {
        Valuation {
            vars: BTreeMap::new(),
            scalars,
        }
    }

    pub fn set(mut self, name: &str, value: impl Into<BigInt>) -> Self {
        self.vars.insert(name.to_string(), value.into());
        self
    }
}

/// One-shot evaluation.  For sweeps over many argument tuples, construct
/// an [`Evaluator`] once and reuse it — the memo carries over.
pub fn eval_literal(
    f: &Formula,
    valuation: &Valuation,
    opts: &EvalOptions,
) -> Result<bool, LogicError> {
    Evaluator::new(valuation.scalars.clone(), opts.clone()).eval(f, &valuation.vars)
}

// ---- narrowing constraints ----

/// Over-approximation of the set of values a quantified variable can take
/// while its body might still be satisfiable.  Interval ends of `None`
/// mean unbounded on that side.
#[derive(Debug, Clone)]
enum Constraint {
    Unconstrained,
    Intervals(Vec<(Option<BigInt>, Option<BigInt>)>),
}

impl Constraint {
    fn empty() -> Self {
        Constraint::Intervals(Vec::new())
    }

    fn point(v: BigInt) -> Self {
        Constraint::Intervals(vec![(Some(v.clone()), Some(v))])
    }

    fn at_most(v: BigInt) -> Self {
        Constraint::Intervals(vec![(None, Some(v))])
    }

    fn at_least(v: BigInt) -> Self {
        Constraint::Intervals(vec![(Some(v), None)])
    }

    fn intersect(self, other: Constraint) -> Constraint {
        match (self, other) {
            (Constraint::Unconstrained, c) | (c, Constraint::Unconstrained) => c,
            (Constraint::Intervals(a), Constraint::Intervals(b)) => {
                if a.len() * b.len() > MAX_INTERVALS * MAX_INTERVALS {
                    // give up on precision, keep soundness
                    return Constraint::Intervals(a);
                }
                let mut out = Vec::new();
                for (al, ah) in &a {
                    for (bl, bh) in &b {
                        let lo = match (al, bl) {
                            (None, x) | (x, None) => x.clone(),
                            (Some(x), Some(y)) => Some(x.max(y).clone()),
                        };
                        let hi = match (ah, bh) {
                            (None, x) | (x, None) => x.clone(),
                            (Some(x), Some(y)) => Some(x.min(y).clone()),
                        };
                        if let (Some(l), Some(h)) = (&lo, &hi) {
                            if l > h {
                                continue;
                            }
                        }
                        out.push((lo, hi));
                    }
                }
                Constraint::Intervals(out)
            }
        }
    }

    fn union(self, other: Constraint) -> Constraint {
        match (self, other) {
            (Constraint::Unconstrained, _) | (_, Constraint::Unconstrained) => {
                Constraint::Unconstrained
            }
            (Constraint::Intervals(mut a), Constraint::Intervals(b)) => {
                a.extend(b);
                if a.len() > MAX_INTERVALS {
                    Constraint::Unconstrained
                } else {
                    Constraint::Intervals(a)
                }
            }
        }
    }

    /// Concrete sorted disjoint intervals within `[lo, hi]`.
    fn clamp(self, lo: &BigInt, hi: &BigInt) -> Vec<(BigInt, BigInt)> {
        let raw = match self {
            Constraint::Unconstrained => return vec![(lo.clone(), hi.clone())],
            Constraint::Intervals(v) => v,
        };
        let mut out: Vec<(BigInt, BigInt)> = Vec::with_capacity(raw.len());
        for (l, h) in raw {
            let l = match l {
                Some(x) => x.max(lo.clone()),
                None => lo.clone(),
            };
            let h = match h {
                Some(x) => x.min(hi.clone()),
                None => hi.clone(),
            };
            if l <= h {
                out.push((l, h));
            }
        }
        out.sort();
        let mut merged: Vec<(BigInt, BigInt)> = Vec::with_capacity(out.len());
        for (l, h) in out {
            match merged.last_mut() {
                Some((_, ph)) if l <= &*ph + 1 => {
                    if h > *ph {
                        *ph = h;
                    }
                }
                _ => merged.push((l, h)),
            }
        }
        merged
    }
}

// ---- the evaluator ----

pub struct Evaluator<'f> {
    scalars: Vec<BigInt>,
    opts: EvalOptions,
    memo: HashMap<(usize, Vec<BigInt>), bool>,
    fv_cache: HashMap<usize, Rc<Vec<String>>>,
    env: HashMap<String, BigInt>,
    steps: u64,
    _formulas: PhantomData<&'f Formula>,
}

impl<'f> Evaluator<'f> {
    pub fn new(scalars: Vec<BigInt>, opts: EvalOptions) -> Self {
        Evaluator {
            scalars,
            opts,
            memo: HashMap::new(),
            fv_cache: HashMap::new(),
            env: HashMap::new(),
            steps: 0,
            _formulas: PhantomData,
        }
    }

    /// Evaluates `f` under the given variable bindings.  The step counter
    /// resets per call; the memo persists across calls.
    pub fn eval(
        &mut self,
        f: &'f Formula,
        vars: &BTreeMap<String, BigInt>,
    ) -> Result<bool, LogicError> {
        self.steps = 0;
        self.env = vars.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
        self.formula(f)
    }

    /// Quantifier iterations consumed by the most recent [`eval`] call.
    pub fn last_steps(&self) -> u64 {
        self.steps
    }

    fn term(&self, t: &Term) -> Result<BigInt, LogicError> {
        match t {
            Term::Var(name) => self
                .env
                .get(name)
                .cloned()
                .ok_or_else(|| LogicError::UnboundVariable(name.clone())),
            Term::Const(n) => Ok(n.clone()),
            Term::Sum(a, b) => Ok(self.term(a)? + self.term(b)?),
            Term::Scalar(k, t) => {
                let s = self.scalars.get(*k).ok_or(LogicError::ScalarIndex(*k))?;
                Ok(s * self.term(t)?)
            }
        }
    }

    fn formula(&mut self, f: &'f Formula) -> Result<bool, LogicError> {
        match f {
            Formula::Le(a, b) => Ok(self.term(a)? <= self.term(b)?),
            Formula::Eq(a, b) => Ok(self.term(a)? == self.term(b)?),
            Formula::And(a, b) => Ok(self.formula(a)? && self.formula(b)?),
            Formula::Or(a, b) => Ok(self.formula(a)? || self.formula(b)?),
            Formula::Not(a) => Ok(!self.formula(a)?),
            Formula::Implies(a, b) => Ok(!self.formula(a)? || self.formula(b)?),
            Formula::AbsDiffLt(ts) => {
                let l = (self.term(&ts[0])? - self.term(&ts[1])?).abs();
                let r = (self.term(&ts[2])? - self.term(&ts[3])?).abs();
                Ok(l < r)
            }
            Formula::AbsDiffLe(ts) => {
                let l = (self.term(&ts[0])? - self.term(&ts[1])?).abs();
                let r = (self.term(&ts[2])? - self.term(&ts[3])?).abs();
                Ok(l <= r)
            }
            Formula::EqMod {
                rem,
                value,
                modulus,
            } => {
                let m = self.term(modulus)?;
                if m <= BigInt::zero() {
                    return Ok(false);
                }
                Ok(self.term(rem)? == self.term(value)?.mod_floor(&m))
            }
            Formula::EqDiv {
                quot,
                value,
                divisor,
            } => {
                let d = self.term(divisor)?;
                if d <= BigInt::zero() {
                    return Ok(false);
                }
                Ok(self.term(quot)? == self.term(value)?.div_floor(&d))
            }
            Formula::NeqPair(ts) => Ok(self.term(&ts[0])? != self.term(&ts[2])?
                || self.term(&ts[1])? != self.term(&ts[3])?),
            Formula::Quant(q) => self.quantifier(f, q),
        }
    }

    fn free_vars_of(&mut self, node: &'f Formula) -> Rc<Vec<String>> {
        let key = node as *const Formula as usize;
        if let Some(v) = self.fv_cache.get(&key) {
            return Rc::clone(v);
        }
        let v = Rc::new(free_vars(node).into_iter().collect::<Vec<_>>());
        self.fv_cache.insert(key, Rc::clone(&v));
        v
    }

    fn quantifier(&mut self, node: &'f Formula, q: &'f Quantifier) -> Result<bool, LogicError> {
        let memo_key = if self.opts.memo {
            let names = self.free_vars_of(node);
            let mut vals = Vec::with_capacity(names.len());
            for name in names.iter() {
                match self.env.get(name) {
                    Some(v) => vals.push(v.clone()),
                    None => return Err(LogicError::UnboundVariable(name.clone())),
                }
            }
            let key = (node as *const Formula as usize, vals);
            if let Some(&hit) = self.memo.get(&key) {
                return Ok(hit);
            }
            Some(key)
        } else {
            None
        };

        let lo = BigInt::from(q.lower);
        let mut hi = self.term(&q.bound)?;
        if !q.inclusive {
            hi -= 1;
        }

        // empty range: ∀ vacuously true, ∃ false
        let default = q.kind == QuantKind::Forall;
        let mut outcome: Result<bool, LogicError> = Ok(default);

        if lo <= hi {
            let intervals = if self.opts.narrow {
                let constraint = match q.kind {
                    QuantKind::Exists => self.sat_region(&q.var, &q.body),
                    QuantKind::Forall => self.need_check_region(&q.var, &q.body),
                };
                constraint.clamp(&lo, &hi)
            } else {
                vec![(lo, hi)]
            };

            let saved = self.env.remove(&q.var);
            outcome = self.run_range(q, intervals, default);
            match saved {
                Some(v) => {
                    self.env.insert(q.var.clone(), v);
                }
                None => {
                    self.env.remove(&q.var);
                }
            }
        }

        let result = outcome?;
        if let Some(key) = memo_key {
            self.memo.insert(key, result);
        }
        Ok(result)
    }

    fn run_range(
        &mut self,
        q: &'f Quantifier,
        intervals: Vec<(BigInt, BigInt)>,
        default: bool,
    ) -> Result<bool, LogicError> {
        let shuffled = match self.opts.order {
            EvalOrder::Ascending => None,
            EvalOrder::Shuffled(seed) => {
                let total: BigInt = intervals.iter().map(|(l, h)| h - l + 1).sum();
                total.to_u64().filter(|&n| n <= SHUFFLE_CAP).map(|_| {
                    let mut values: Vec<BigInt> = Vec::new();
                    for (l, h) in &intervals {
                        let mut v = l.clone();
                        while &v <= h {
                            values.push(v.clone());
                            v += 1;
                        }
                    }
                    values.shuffle(&mut StdRng::seed_from_u64(seed));
                    values
                })
            }
        };

        match shuffled {
            Some(values) => {
                for v in values {
                    match self.try_value(q, v, default)? {
                        Some(result) => return Ok(result),
                        None => continue,
                    }
                }
                Ok(default)
            }
            None => {
                for (l, h) in intervals {
                    let mut v = l;
                    while v <= h {
                        let next = &v + 1;
                        match self.try_value(q, v, default)? {
                            Some(result) => return Ok(result),
                            None => v = next,
                        }
                    }
                }
                Ok(default)
            }
        }
    }

    /// Evaluates the body at one value; `Some(r)` short-circuits the loop.
    fn try_value(
        &mut self,
        q: &'f Quantifier,
        value: BigInt,
        default: bool,
    ) -> Result<Option<bool>, LogicError> {
        self.steps += 1;
        if self.steps > self.opts.budget {
            return Err(LogicError::BudgetExceeded {
                var: q.var.clone(),
                limit: self.opts.budget,
            });
        }
        self.env.insert(q.var.clone(), value);
        let b = self.formula(&q.body)?;
        Ok(if b != default { Some(!default) } else { None })
    }

    // ---- narrowing analysis ----

    /// `t = var + offset` for the shapes the builders produce: the
    /// variable alone, or a sum of the variable and a var-free term.
    fn linear_offset(&self, t: &Term, var: &str) -> Option<BigInt> {
        match t {
            Term::Var(name) if name == var => Some(BigInt::zero()),
            Term::Sum(a, b) => {
                if **a == Term::Var(var.to_string()) && !mentions(b, var) {
                    self.term(b).ok()
                } else if **b == Term::Var(var.to_string()) && !mentions(a, var) {
                    self.term(a).ok()
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    fn eval_var_free(&self, t: &Term, var: &str) -> Option<BigInt> {
        if mentions(t, var) {
            None
        } else {
            self.term(t).ok()
        }
    }

    /// Where might `f` be true, as a function of `var`?  Always an
    /// over-approximation; `Unconstrained` is the safe answer everywhere.
    fn sat_region(&self, var: &str, f: &'f Formula) -> Constraint {
        match f {
            Formula::And(a, b) => self.sat_region(var, a).intersect(self.sat_region(var, b)),
            Formula::Or(a, b) => self.sat_region(var, a).union(self.sat_region(var, b)),
            Formula::Le(lhs, rhs) => {
                if let (Some(k), Some(r)) =
                    (self.linear_offset(lhs, var), self.eval_var_free(rhs, var))
                {
                    return Constraint::at_most(r - k);
                }
                if let (Some(l), Some(k)) =
                    (self.eval_var_free(lhs, var), self.linear_offset(rhs, var))
                {
                    return Constraint::at_least(l - k);
                }
                Constraint::Unconstrained
            }
            Formula::Eq(lhs, rhs) => {
                if let (Some(k), Some(r)) =
                    (self.linear_offset(lhs, var), self.eval_var_free(rhs, var))
                {
                    return Constraint::point(r - k);
                }
                if let (Some(l), Some(k)) =
                    (self.eval_var_free(lhs, var), self.linear_offset(rhs, var))
                {
                    return Constraint::point(l - k);
                }
                Constraint::Unconstrained
            }
            Formula::EqMod {
                rem,
                value,
                modulus,
            } => {
                if let Some(k) = self.linear_offset(rem, var) {
                    if let (Some(v), Some(m)) = (
                        self.eval_var_free(value, var),
                        self.eval_var_free(modulus, var),
                    ) {
                        if m <= BigInt::zero() {
                            return Constraint::empty();
                        }
                        return Constraint::point(v.mod_floor(&m) - k);
                    }
                }
                Constraint::Unconstrained
            }
            Formula::EqDiv {
                quot,
                value,
                divisor,
            } => {
                if let Some(k) = self.linear_offset(quot, var) {
                    if let (Some(v), Some(d)) = (
                        self.eval_var_free(value, var),
                        self.eval_var_free(divisor, var),
                    ) {
                        if d <= BigInt::zero() {
                            return Constraint::empty();
                        }
                        return Constraint::point(v.div_floor(&d) - k);
                    }
                }
                Constraint::Unconstrained
            }
            _ => Constraint::Unconstrained,
        }
    }

    /// Where might `f` be *false*, for ∀-narrowing.  Implication guards
    /// restrict it: outside the guard's satisfiable region the implication
    /// holds vacuously.
    fn need_check_region(&self, var: &str, f: &'f Formula) -> Constraint {
        match f {
            Formula::Implies(g, rest) => self
                .sat_region(var, g)
                .intersect(self.need_check_region(var, rest)),
            _ => Constraint::Unconstrained,
        }
    }
}

fn mentions(t: &Term, var: &str) -> bool {
    match t {
        Term::Var(name) => name == var,
        Term::Const(_) => false,
        Term::Sum(a, b) => mentions(a, var) || mentions(b, var),
        Term::Scalar(_, t) => mentions(t, var),
    }
}
