//! Semantic counterparts of the formula families, computed by plain
//! arithmetic on an encoded model.
//!
//! Everything the formulas of [`crate::logic::builders`] define by
//! quantification has a direct reading here: the predicate sets come
//! straight off the convergent table, squaring and multiplication are
//! residue lookups, and the two-scalar stairstep functions are a `mod`
//! and a `div`.  The point of the module is *independence*: these
//! functions share no code path with the literal evaluator, so agreement
//! between the two (see [`equivalence_check`]) is evidence, not
//! tautology.
//!
//! Two levels of access:
//!
//! * [`EncodedModel`] carries the full encoding — ratio, convergents,
//!   modulus.  [`predicate_sets`], [`sigma_eval`] and [`mu_eval`] read it
//!   directly.
//! * [`TwoScalarView`] carries *only* `α` and `δ`, the two constants a
//!   bare two-scalar structure would know.  [`recover_constants`] gets
//!   `a`, `b`, `c` back out of them, and [`TwoScalarSemantics`] rebuilds
//!   the whole convergent table from the recovered ratio, giving an
//!   evaluation path ([`TwoScalarSemantics::mu2_eval`]) that never touches
//!   the original encoder output.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::contfrac::{cf_expand, convergents, ContfracError, ConvergentTable, CoprimePair};
use crate::encoder::{EncodedModel, WildModel};
use crate::logic::{build_mu2, build_mu_family, EvalOptions, Evaluator, LogicError, PiForm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("search budget {budget} exhausted before finding the least annihilator")]
    SearchBudgetExceeded { budget: u64 },
    #[error("view does not describe a ratio encoding: {0}")]
    MalformedView(String),
    #[error(transparent)]
    Contfrac(#[from] ContfracError),
}

// ---- the two-scalar view ----

/// The two constants a two-scalar structure knows: `α = a·c` and
/// `δ = a·b·c² + c`.  Everything else about the model must be recovered
/// from their arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoScalarView {
    pub alpha: BigInt,
    pub delta: BigInt,
}

impl TwoScalarView {
    pub fn new(alpha: impl Into<BigInt>, delta: impl Into<BigInt>) -> Self {
        TwoScalarView {
            alpha: alpha.into(),
            delta: delta.into(),
        }
    }

    /// Scalar list for evaluating two-scalar formulas: `[α, δ]`.
    pub fn scalars(&self) -> Vec<BigInt> {
        vec![self.alpha.clone(), self.delta.clone()]
    }

    /// `x ↦ (δ·x) mod α`, which works out to `c·(x mod a)`.
    pub fn gamma_circ(&self, x: &BigInt) -> BigInt {
        (&self.delta * x).mod_floor(&self.alpha)
    }

    /// `x ↦ (δ·x) div α`, which works out to `b·c·x + (x div a)`.
    pub fn beta_circ(&self, x: &BigInt) -> BigInt {
        (&self.delta * x).div_floor(&self.alpha)
    }
}

impl EncodedModel {
    /// The model as a bare two-scalar structure would see it.
    pub fn view(&self) -> TwoScalarView {
        TwoScalarView {
            alpha: self.alpha().clone(),
            delta: self.delta().clone(),
        }
    }

    /// Scalar list for evaluating three-scalar formulas: `[a, b, c]`.
    pub fn three_scalars(&self) -> Vec<BigInt> {
        vec![self.a().clone(), self.b().clone(), self.c().clone()]
    }
}

// ---- constant recovery ----

/// The ratio constants recovered from a [`TwoScalarView`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecoveredConstants {
    pub a1: BigInt,
    pub b1: BigInt,
    pub c1: BigInt,
}

/// Closed-form recovery: `c = δ mod α`, `a = α / gcd(α, c)`,
/// `b = ((δ·a div α) div α)`.  Agrees with [`recover_constants_search`]
/// wherever the search is feasible — a tested property, since the search
/// mirrors what the two-scalar *formula* does while this does not.
pub fn recover_constants(view: &TwoScalarView) -> Result<RecoveredConstants, ModelError> {
    if view.alpha <= BigInt::one() {
        return Err(ModelError::MalformedView(format!(
            "alpha = {} is too small",
            view.alpha
        )));
    }
    let c1 = view.delta.mod_floor(&view.alpha);
    if c1.is_zero() {
        return Err(ModelError::MalformedView(
            "delta is a multiple of alpha".to_string(),
        ));
    }
    let a1 = &view.alpha / view.alpha.gcd(&c1);
    let b1 = view.beta_circ(&a1).div_floor(&view.alpha);
    Ok(RecoveredConstants { a1, b1, c1 })
}

/// Recovery the hard way, mirroring the formula: scan for the least
/// `x > 0` with `(δ·x) mod α = 0` (that is `a`), read `c` as `γ°(1)` and
/// `b` as `(β°(a)) div α`.  Feasible only when `a` is small; the scan
/// stops with an error after `budget` candidates.
pub fn recover_constants_search(
    view: &TwoScalarView,
    budget: u64,
) -> Result<RecoveredConstants, ModelError> {
    let mut x = BigInt::one();
    let mut tried = 0u64;
    while !view.gamma_circ(&x).is_zero() {
        tried += 1;
        if tried >= budget {
            return Err(ModelError::SearchBudgetExceeded { budget });
        }
        x += 1;
    }
    let c1 = view.gamma_circ(&BigInt::one());
    if c1.is_zero() {
        return Err(ModelError::MalformedView(
            "delta is a multiple of alpha".to_string(),
        ));
    }
    let b1 = view.beta_circ(&x).div_floor(&view.alpha);
    Ok(RecoveredConstants { a1: x, b1, c1 })
}

// ---- predicate sets off the convergent table ----

/// The denominator predicates of a model, extensionally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredicateSets {
    /// All convergent denominators.
    pub v: BTreeSet<BigInt>,
    /// Those on the positive side (`a·u − b·v > 0`).
    pub v0: BTreeSet<BigInt>,
    /// Those on the nonpositive side.
    pub v1: BTreeSet<BigInt>,
    /// Consecutive (positive, nonpositive) denominator pairs — the chain
    /// has strictly alternating signs, so these are just the convergents
    /// taken two at a time.
    pub pairs: Vec<(BigInt, BigInt)>,
}

fn sets_from_table(table: &ConvergentTable) -> PredicateSets {
    let n = table.n();
    let mut v = BTreeSet::new();
    let mut v0 = BTreeSet::new();
    let mut v1 = BTreeSet::new();
    for i in 0..=n {
        let vi = table.v(i).clone();
        v.insert(vi.clone());
        // a·u_i − b·v_i = (−1)^i r_i; zero counts as nonpositive
        if i % 2 == 0 && !table.r(i).is_zero() {
            v0.insert(vi);
        } else {
            v1.insert(vi);
        }
    }
    let mut pairs = Vec::new();
    let mut i = 0;
    while i < n {
        pairs.push((table.v(i).clone(), table.v(i + 1).clone()));
        i += 2;
    }
    PredicateSets { v, v0, v1, pairs }
}

/// Reads the predicate sets straight off the encoded convergent table.
pub fn predicate_sets(model: &EncodedModel) -> PredicateSets {
    sets_from_table(model.table())
}

// ---- squaring and multiplication, semantically ----

/// Residue pairs `(v mod c, vp mod c)` — the square table `k ↦ k² mod c`
/// once the encoding has done its job.
fn residue_pairs(pairs: &[(BigInt, BigInt)], c: &BigInt) -> Vec<(BigInt, BigInt)> {
    pairs
        .iter()
        .map(|(v, vp)| (v.mod_floor(c), vp.mod_floor(c)))
        .collect()
}

/// `x ↦ x² mod c` by pair lookup; `None` where no pair speaks (then the
/// corresponding formula is false everywhere).
fn square_residue(residues: &[(BigInt, BigInt)], x: &BigInt) -> Option<BigInt> {
    if x.is_zero() {
        return Some(BigInt::zero());
    }
    residues
        .iter()
        .find(|(v, _)| v == x)
        .map(|(_, vp)| vp.clone())
}

fn sigma_from_residues(residues: &[(BigInt, BigInt)], x: &BigInt, y: &BigInt) -> bool {
    match square_residue(residues, x) {
        Some(sq) => sq == *y,
        None => false,
    }
}

fn mu_from_residues(residues: &[(BigInt, BigInt)], x: &BigInt, y: &BigInt, z: &BigInt) -> bool {
    let (p, q, r) = match (
        square_residue(residues, x),
        square_residue(residues, y),
        square_residue(residues, &(x + y)),
    ) {
        (Some(p), Some(q), Some(r)) => (p, q, r),
        _ => return false,
    };
    // (x+y)² = x² + y² + 2xy, in residues below c
    z + z + p + q == r
}

/// `y = x²` semantically: both zero, or some denominator pair carries the
/// residues `(x, y)`.
pub fn sigma_eval(model: &EncodedModel, x: &BigInt, y: &BigInt) -> bool {
    let residues = residue_pairs(&predicate_sets(model).pairs, model.c());
    sigma_from_residues(&residues, x, y)
}

/// `z = x·y` semantically, through the square residues.  Meaningful for
/// `x + y` within the encoded range; false outside it.
pub fn mu_eval(model: &EncodedModel, x: &BigInt, y: &BigInt, z: &BigInt) -> bool {
    let residues = residue_pairs(&predicate_sets(model).pairs, model.c());
    mu_from_residues(&residues, x, y, z)
}

// ---- semantics reconstructed from the view alone ----

/// Everything needed to evaluate multiplication, rebuilt from `(α, δ)`
/// with no access to the encoder's output: constants recovered by
/// arithmetic, the ratio re-expanded, the square table re-derived.
#[derive(Debug, Clone)]
pub struct TwoScalarSemantics {
    constants: RecoveredConstants,
    sets: PredicateSets,
    residues: Vec<(BigInt, BigInt)>,
}

impl TwoScalarSemantics {
    pub fn new(view: &TwoScalarView) -> Result<Self, ModelError> {
        let constants = recover_constants(view)?;
        let pair = CoprimePair::new(constants.a1.clone(), constants.b1.clone())?;
        let cf = cf_expand(&pair);
        let table = convergents(&cf, Some(&pair))?;
        let sets = sets_from_table(&table);
        let residues = residue_pairs(&sets.pairs, &constants.c1);
        Ok(TwoScalarSemantics {
            constants,
            sets,
            residues,
        })
    }

    pub fn constants(&self) -> &RecoveredConstants {
        &self.constants
    }

    pub fn sets(&self) -> &PredicateSets {
        &self.sets
    }

    /// `γ*`: `c·x` up to and including the recovered `a`, zero above.
    pub fn gamma_star(&self, view: &TwoScalarView, x: &BigInt) -> BigInt {
        match x.cmp(&self.constants.a1) {
            std::cmp::Ordering::Less => view.gamma_circ(x),
            std::cmp::Ordering::Equal => view.alpha.clone(),
            std::cmp::Ordering::Greater => BigInt::zero(),
        }
    }

    /// `β*`: `b·c·x` up to and including the recovered `a`, zero above.
    pub fn beta_star(&self, view: &TwoScalarView, x: &BigInt) -> BigInt {
        match x.cmp(&self.constants.a1) {
            std::cmp::Ordering::Less => view.beta_circ(x),
            std::cmp::Ordering::Equal => view.beta_circ(x) - 1,
            std::cmp::Ordering::Greater => BigInt::zero(),
        }
    }

    pub fn sigma2_eval(&self, x: &BigInt, y: &BigInt) -> bool {
        sigma_from_residues(&self.residues, x, y)
    }

    pub fn mu2_eval(&self, x: &BigInt, y: &BigInt, z: &BigInt) -> bool {
        mu_from_residues(&self.residues, x, y, z)
    }
}

/// One-shot `z = x·y` from a view.  For repeated queries build a
/// [`TwoScalarSemantics`] once.
pub fn mu2_eval(
    view: &TwoScalarView,
    x: &BigInt,
    y: &BigInt,
    z: &BigInt,
) -> Result<bool, ModelError> {
    Ok(TwoScalarSemantics::new(view)?.mu2_eval(x, y, z))
}

// ---- cross-checking the three evaluation paths ----

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    /// The literal evaluator ran out of budget — distinct from a wrong
    /// answer.
    Budget,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckStatus::Pass => write!(f, "PASS"),
            CheckStatus::Fail => write!(f, "FAIL"),
            CheckStatus::Budget => write!(f, "BUDGET"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckRecord {
    pub name: &'static str,
    pub triple: [BigInt; 3],
    pub expected: bool,
    /// `None` when the literal run hit its budget.
    pub got: Option<bool>,
    pub status: CheckStatus,
    /// Failure detail (e.g. the offending `z` of a product sweep).
    pub note: Option<String>,
}

impl fmt::Display for CheckRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let got = match self.got {
            Some(b) => b.to_string(),
            None => "?".to_string(),
        };
        write!(
            f,
            "CHECK {} ({},{},{}) {} {} {}",
            self.name,
            self.triple[0],
            self.triple[1],
            self.triple[2],
            self.expected,
            got,
            self.status
        )?;
        if let Some(note) = &self.note {
            write!(f, " ({note})")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct EquivalenceReport {
    pub records: Vec<CheckRecord>,
}

impl EquivalenceReport {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.status == CheckStatus::Pass)
    }

    pub fn budget_exceeded(&self) -> bool {
        self.records.iter().any(|r| r.status == CheckStatus::Budget)
    }
}

impl fmt::Display for EquivalenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.records {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

/// What [`equivalence_check`] should sweep.
#[derive(Debug, Clone)]
pub struct EquivalenceDomain {
    /// `x` and `y` range over `[0, max_xy]`.
    pub max_xy: u64,
    /// Also run the three-scalar formula at each probe.
    pub literal_mu: bool,
    /// Also run the two-scalar formula at each probe.
    pub literal_mu2: bool,
    pub opts: EvalOptions,
}

impl EquivalenceDomain {
    /// Arithmetic-only: semantic multiplication against integer products.
    pub fn semantic_only(max_xy: u64) -> Self {
        EquivalenceDomain {
            max_xy,
            literal_mu: false,
            literal_mu2: false,
            opts: EvalOptions::default(),
        }
    }

    /// Everything, including both literal formula runs.
    pub fn full(max_xy: u64) -> Self {
        EquivalenceDomain {
            max_xy,
            literal_mu: true,
            literal_mu2: true,
            opts: EvalOptions::default(),
        }
    }
}

fn literal_status(
    expected: bool,
    outcome: Result<bool, LogicError>,
) -> (Option<bool>, CheckStatus, Option<String>) {
    match outcome {
        Ok(got) => (
            Some(got),
            if got == expected {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            None,
        ),
        Err(LogicError::BudgetExceeded { var, limit }) => (
            None,
            CheckStatus::Budget,
            Some(format!("budget {limit} exceeded at quantifier {var}")),
        ),
        Err(other) => (None, CheckStatus::Fail, Some(other.to_string())),
    }
}

/// Sweeps a grid of probes through all three evaluation paths and
/// reports, one line per probe:
///
/// * `mu-semantic-vs-product` — semantic multiplication agrees with the
///   integer product everywhere on `[0, max_xy]²` (exhaustive over `z`);
/// * `mu-literal-vs-semantic` — the three-scalar formula agrees with
///   semantic multiplication at `z = x·y` and `z = x·y + 1`;
/// * `mu2-literal-vs-semantic` — the two-scalar formula agrees with the
///   view-reconstructed semantics at the same probes.
///
/// Records are sorted by probe triple, then name.  Literal probes fan
/// out across threads, one evaluator each.
pub fn equivalence_check(
    model: &WildModel,
    domain: &EquivalenceDomain,
) -> Result<EquivalenceReport, ModelError> {
    let core = model.core();
    let residues = residue_pairs(&predicate_sets(core).pairs, core.c());
    let max = domain.max_xy;

    // semantic multiplication vs the integer product, exhaustive in z
    let grid: Vec<(u64, u64)> = (0..=max)
        .flat_map(|x| (0..=max).map(move |y| (x, y)))
        .collect();
    let mut records: Vec<CheckRecord> = grid
        .par_iter()
        .map(|&(x, y)| {
            let (bx, by) = (BigInt::from(x), BigInt::from(y));
            let product = &bx * &by;
            let mut witness = None;
            for z in 0..=max * max {
                let bz = BigInt::from(z);
                let held = mu_from_residues(&residues, &bx, &by, &bz);
                if held != (bz == product) {
                    witness = Some(format!("disagrees at z = {z}"));
                    break;
                }
            }
            let ok = witness.is_none();
            CheckRecord {
                name: "mu-semantic-vs-product",
                triple: [bx, by, product],
                expected: true,
                got: Some(ok),
                status: if ok {
                    CheckStatus::Pass
                } else {
                    CheckStatus::Fail
                },
                note: witness,
            }
        })
        .collect();

    // probe triples for the literal runs: the product and one wrong value
    let probes: Vec<[BigInt; 3]> = grid
        .iter()
        .flat_map(|&(x, y)| {
            let product = BigInt::from(x) * BigInt::from(y);
            [
                [BigInt::from(x), BigInt::from(y), product.clone()],
                [BigInt::from(x), BigInt::from(y), product + 1],
            ]
        })
        .collect();

    if domain.literal_mu {
        let family = build_mu_family(PiForm::Corrected);
        let scalars = core.three_scalars();
        records.par_extend(probes.par_iter().map_init(
            || Evaluator::new(scalars.clone(), domain.opts.clone()),
            |ev, triple| {
                let expected = mu_from_residues(&residues, &triple[0], &triple[1], &triple[2]);
                let mut vars = std::collections::BTreeMap::new();
                vars.insert("x".to_string(), triple[0].clone());
                vars.insert("y".to_string(), triple[1].clone());
                vars.insert("z".to_string(), triple[2].clone());
                let (got, status, note) = literal_status(expected, ev.eval(&family.mu, &vars));
                CheckRecord {
                    name: "mu-literal-vs-semantic",
                    triple: triple.clone(),
                    expected,
                    got,
                    status,
                    note,
                }
            },
        ));
    }

    if domain.literal_mu2 {
        let mu2 = build_mu2();
        let view = core.view();
        let semantics = TwoScalarSemantics::new(&view)?;
        let scalars = view.scalars();
        records.par_extend(probes.par_iter().map_init(
            || Evaluator::new(scalars.clone(), domain.opts.clone()),
            |ev, triple| {
                let expected = semantics.mu2_eval(&triple[0], &triple[1], &triple[2]);
                let mut vars = std::collections::BTreeMap::new();
                vars.insert("x".to_string(), triple[0].clone());
                vars.insert("y".to_string(), triple[1].clone());
                vars.insert("z".to_string(), triple[2].clone());
                let (got, status, note) = literal_status(expected, ev.eval(&mu2, &vars));
                CheckRecord {
                    name: "mu2-literal-vs-semantic",
                    triple: triple.clone(),
                    expected,
                    got,
                    status,
                    note,
                }
            },
        ));
    }

    records.sort_by(|a, b| a.triple.cmp(&b.triple).then(a.name.cmp(b.name)));
    Ok(EquivalenceReport { records })
}
