//! The formula families that define bounded multiplication.
//!
//! Everything here is built over an encoded ratio `a/b` with modulus `c`
//! (see [`crate::encoder`]): the denominators of the ratio's best
//! approximations carry an interleaved sequence `k, k²` in their residues
//! mod `c`, and that is enough to pin down squaring — hence multiplication
//! — of small numbers by quantifier-bounded formulas.
//!
//! Two families:
//!
//! * [`build_mu_family`] works over **three** scalar symbols, indices
//!   `0, 1, 2` interpreted as `a, b, c`.  Its members, in dependency
//!   order: `gamma(u, v)` says `(u, v)` is the strict unique minimizer of
//!   `|a·u′ − b·v′|` over `0 < u′ ≤ u`, `0 ≤ v′ ≤ a` — i.e. `v/u` is a
//!   best approximation of `a/b` from the convergent chain.  `v(v)`
//!   projects out the witness `u ≤ b·1`; `v0`/`v1` split by the sign of
//!   `a·u − b·v`.  `pi(v, vp)` recognizes *adjacent* convergent
//!   denominators (a positive-side `v` immediately followed by a
//!   negative-side `vp`); `sigma(x, y)` pulls the pair back through the
//!   residues, defining `y = x²` for `x` up to the encoded range; and
//!   `mu(x, y, z)` defines `z = x·y` via `(x+y)² = x² + y² + 2·x·y`, with
//!   the square residues `p, q, r` quantified below `c·1`.
//!
//! * [`build_mu2`] re-expresses the same multiplication over **two**
//!   scalars, indices `0, 1` interpreted as `α = a·c`, `δ = a·b·c² + c`.
//!   `a`, `b`, `c` are not available as symbols, so the formula first
//!   *recovers* them: `s` (= `a`) is the least positive solution of
//!   `δ·s ≡ 0 (mod α)`, `t` (= `c`) is `δ·1 mod α`, and `g` (= `b`) is
//!   `((δ·s div α) div α)`; the graphs of the two stairstep functions
//!   `x ↦ (δ·x) mod α` (which is `c·x` for `x ≤ a`, cut off above) and
//!   `x ↦ (δ·x) div α` (similarly `b·c·x`) then stand in for the scalar
//!   multiplications the three-scalar family used.  The recovered
//!   constants appear only in *guards*; every quantifier's range bound is
//!   the constant term `δ·1`, and [`super::check_bounded`] reports the
//!   result all-constant — the property that makes the two-scalar form
//!   interesting.  The recovery witnesses are bound once, up front, and
//!   shared by the whole body.
//!
//! Free-variable conventions: `gamma(u, v)`, `v/v0/v1(v)`, `pi(v, vp)`,
//! `sigma(x, y)`, `mu(x, y, z)`.  Bound variables use distinct names
//! (`uq, vq, ev, ew, m, gm, …`), so no builder shadows another's
//! argument.
//!
//! [`PiForm`] selects between the corrected adjacency predicate (which
//! requires `v < vp`) and the uncorrected one that omits the comparison.
//! The uncorrected form admits swapped pairs such as `(7, 6)` on the
//! smallest model and thereby certifies false squares — kept so tests can
//! demonstrate exactly that; everything downstream defaults to
//! `Corrected`.

use super::{and, cst, eq, exists, forall, imp, le, not, or, scal, sum, var, Formula, Term};

/// Three-scalar slots.
const A: usize = 0;
const B: usize = 1;
const C: usize = 2;

/// Two-scalar slots.
const ALPHA: usize = 0;
const DELTA: usize = 1;

/// `k-th scalar · 1`, the constant terms used as quantifier bounds.
fn unit(k: usize) -> Term {
    scal(k, cst(1))
}

/// Whether the adjacency predicate `pi` carries the `v < vp` conjunct.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PiForm {
    Corrected,
    /// Omits `v < vp`; admits swapped pairs and hence false squares.
    Unordered,
}

/// The three-scalar family, from the minimizer predicate up to
/// multiplication.  All members share scalar slots `0, 1, 2 = a, b, c`.
#[derive(Debug, Clone)]
pub struct MuFamily {
    /// `gamma(u, v)`
    pub gamma: Formula,
    /// `v(v)` — some `u ≤ b·1` makes `gamma(u, v)` hold
    pub v: Formula,
    /// `v0(v)` — positive side, `a·u − b·v > 0`
    pub v0: Formula,
    /// `v1(v)` — nonpositive side, `a·u ≤ b·v`
    pub v1: Formula,
    /// `pi(v, vp)` — adjacent denominators
    pub pi: Formula,
    /// `sigma(x, y)` — `y = x²` in residues
    pub sigma: Formula,
    /// `mu(x, y, z)` — `z = x·y`
    pub mu: Formula,
}

/// `(u, v)` strictly minimizes `|a·u′ − b·v′|` over `0 < u′ ≤ u`,
/// `0 ≤ v′ ≤ a·1`, among pairs other than itself.
fn gamma_term(ut: &Term, vt: &Term) -> Formula {
    forall(
        "uq",
        1,
        ut.clone(),
        true,
        forall(
            "vq",
            0,
            unit(A),
            true,
            imp(
                Formula::NeqPair([ut.clone(), vt.clone(), var("uq"), var("vq")]),
                Formula::AbsDiffLt([
                    scal(A, ut.clone()),
                    scal(B, vt.clone()),
                    scal(A, var("uq")),
                    scal(B, var("vq")),
                ]),
            ),
        ),
    )
}

fn v_term(vt: &Term) -> Formula {
    exists("u", 1, unit(B), true, gamma_term(&var("u"), vt))
}

/// `a·u − b·v > 0`, written additively as `b·v + 1 ≤ a·u`.
fn v0_term(vt: &Term) -> Formula {
    exists(
        "u",
        1,
        unit(B),
        true,
        and(
            gamma_term(&var("u"), vt),
            le(sum(scal(B, vt.clone()), cst(1)), scal(A, var("u"))),
        ),
    )
}

fn v1_term(vt: &Term) -> Formula {
    exists(
        "u",
        1,
        unit(B),
        true,
        and(
            gamma_term(&var("u"), vt),
            le(scal(A, var("u")), scal(B, vt.clone())),
        ),
    )
}

/// `v` and `vp` are adjacent: `v` positive-side, `vp` negative-side, no
/// denominator strictly between them.
fn pi_term(vt: &Term, vpt: &Term, form: PiForm) -> Formula {
    let nothing_between = not(exists(
        "w",
        0,
        vpt.clone(),
        false,
        and(le(sum(vt.clone(), cst(1)), var("w")), v_term(&var("w"))),
    ));
    let base = and(v0_term(vt), and(v1_term(vpt), nothing_between));
    match form {
        PiForm::Corrected => and(le(sum(vt.clone(), cst(1)), vpt.clone()), base),
        PiForm::Unordered => base,
    }
}

/// `y = x²` for `x` in the encoded range: either both zero, or some
/// adjacent pair `(v, vp)` has `x ≡ v` and `y ≡ vp (mod c·1)`.  The
/// residue checks come before the adjacency test so evaluation prunes
/// cheaply; conjunction order does not affect meaning.
fn sigma_term(xt: &Term, yt: &Term, form: PiForm) -> Formula {
    or(
        and(eq(xt.clone(), cst(0)), eq(yt.clone(), cst(0))),
        exists(
            "v",
            0,
            unit(A),
            true,
            and(
                Formula::EqMod {
                    rem: xt.clone(),
                    value: var("v"),
                    modulus: unit(C),
                },
                exists(
                    "vp",
                    0,
                    unit(A),
                    true,
                    and(
                        Formula::EqMod {
                            rem: yt.clone(),
                            value: var("vp"),
                            modulus: unit(C),
                        },
                        pi_term(&var("v"), &var("vp"), form),
                    ),
                ),
            ),
        ),
    )
}

/// `z = x·y` through squares: `2z + x² + y² = (x+y)²` in residues below
/// `c·1`.
fn mu_term(form: PiForm) -> Formula {
    let two_z_p_q = sum(sum(sum(var("z"), var("z")), var("p")), var("q"));
    exists(
        "p",
        0,
        unit(C),
        false,
        and(
            sigma_term(&var("x"), &var("p"), form),
            exists(
                "q",
                0,
                unit(C),
                false,
                and(
                    sigma_term(&var("y"), &var("q"), form),
                    exists(
                        "r",
                        0,
                        unit(C),
                        false,
                        and(
                            eq(two_z_p_q, var("r")),
                            sigma_term(&sum(var("x"), var("y")), &var("r"), form),
                        ),
                    ),
                ),
            ),
        ),
    )
}

/// Builds the whole three-scalar family.  Scalar slots `0, 1, 2` must be
/// valued `a, b, c` at evaluation time.
pub fn build_mu_family(form: PiForm) -> MuFamily {
    MuFamily {
        gamma: gamma_term(&var("u"), &var("v")),
        v: v_term(&var("v")),
        v0: v0_term(&var("v")),
        v1: v1_term(&var("v")),
        pi: pi_term(&var("v"), &var("vp"), form),
        sigma: sigma_term(&var("x"), &var("y"), form),
        mu: mu_term(form),
    }
}

// ---- the two-scalar form ----

/// Graph of `x ↦ (δ·x) mod α` cut off above `s`: below `s` the remainder
/// itself, `α·1` at `s`, zero above.  (With `s = a` this is `c·x` on
/// `[0, a]`, the scalar multiplication `sigma` needed.)
fn gamma_star_graph(xt: &Term, yt: &Term) -> Formula {
    or(
        or(
            and(
                le(sum(xt.clone(), cst(1)), var("s")),
                Formula::EqMod {
                    rem: yt.clone(),
                    value: scal(DELTA, xt.clone()),
                    modulus: unit(ALPHA),
                },
            ),
            and(eq(xt.clone(), var("s")), eq(yt.clone(), unit(ALPHA))),
        ),
        and(
            le(sum(var("s"), cst(1)), xt.clone()),
            eq(yt.clone(), cst(0)),
        ),
    )
}

/// Graph of `x ↦ (δ·x) div α` cut off above `s` (which is `b·c·x` on
/// `[0, a]`); at `s` the quotient overshoots by one, hence the `y + 1`.
fn beta_star_graph(xt: &Term, yt: &Term) -> Formula {
    or(
        or(
            and(
                le(sum(xt.clone(), cst(1)), var("s")),
                Formula::EqDiv {
                    quot: yt.clone(),
                    value: scal(DELTA, xt.clone()),
                    divisor: unit(ALPHA),
                },
            ),
            and(
                eq(xt.clone(), var("s")),
                Formula::EqDiv {
                    quot: sum(yt.clone(), cst(1)),
                    value: scal(DELTA, xt.clone()),
                    divisor: unit(ALPHA),
                },
            ),
        ),
        and(
            le(sum(var("s"), cst(1)), xt.clone()),
            eq(yt.clone(), cst(0)),
        ),
    )
}

/// `zt = wt mod t` without a modulus scalar: `zt < t` and some `m ≤ wt`
/// has `wt = zt + (c·m)`, the product supplied by the stairstep graph.
fn mod2_term(zt: &Term, wt: &Term) -> Formula {
    and(
        le(cst(0), zt.clone()),
        and(
            le(sum(zt.clone(), cst(1)), var("t")),
            exists(
                "m",
                0,
                unit(DELTA),
                true,
                and(
                    le(var("m"), wt.clone()),
                    exists(
                        "gm",
                        0,
                        unit(DELTA),
                        true,
                        and(
                            gamma_star_graph(&var("m"), &var("gm")),
                            eq(wt.clone(), sum(zt.clone(), var("gm"))),
                        ),
                    ),
                ),
            ),
        ),
    )
}

/// Two-scalar counterpart of `gamma`: `(u, v)` strictly minimizes
/// `|α·u′ − (δ·v′ div α)·…|` — concretely `|α·u′ − βv′|` with `βv′` read
/// off [`beta_star_graph`].  The value `β(v)` is fixed once as `ev` and
/// reused; the graph is functional, so this changes nothing.
fn gamma2_term(ut: &Term, vt: &Term) -> Formula {
    exists(
        "ev",
        0,
        unit(DELTA),
        true,
        and(
            beta_star_graph(vt, &var("ev")),
            forall(
                "uq",
                1,
                unit(DELTA),
                true,
                imp(
                    le(var("uq"), ut.clone()),
                    forall(
                        "vq",
                        0,
                        unit(DELTA),
                        true,
                        imp(
                            le(var("vq"), var("s")),
                            imp(
                                Formula::NeqPair([ut.clone(), vt.clone(), var("uq"), var("vq")]),
                                exists(
                                    "ew",
                                    0,
                                    unit(DELTA),
                                    true,
                                    and(
                                        beta_star_graph(&var("vq"), &var("ew")),
                                        Formula::AbsDiffLt([
                                            scal(ALPHA, ut.clone()),
                                            var("ev"),
                                            scal(ALPHA, var("uq")),
                                            var("ew"),
                                        ]),
                                    ),
                                ),
                            ),
                        ),
                    ),
                ),
            ),
        ),
    )
}

fn v2_term(vt: &Term) -> Formula {
    exists(
        "u",
        1,
        unit(DELTA),
        true,
        and(le(var("u"), var("g")), gamma2_term(&var("u"), vt)),
    )
}

/// Positive side: `β(v) < α·u`.
fn v02_term(vt: &Term) -> Formula {
    let sign = exists(
        "e",
        0,
        unit(DELTA),
        true,
        and(
            beta_star_graph(vt, &var("e")),
            le(sum(var("e"), cst(1)), scal(ALPHA, var("u"))),
        ),
    );
    exists(
        "u",
        1,
        unit(DELTA),
        true,
        and(
            le(var("u"), var("g")),
            and(gamma2_term(&var("u"), vt), sign),
        ),
    )
}

/// Nonpositive side: `α·u ≤ β(v)`.
fn v12_term(vt: &Term) -> Formula {
    let sign = exists(
        "e",
        0,
        unit(DELTA),
        true,
        and(
            beta_star_graph(vt, &var("e")),
            le(scal(ALPHA, var("u")), var("e")),
        ),
    );
    exists(
        "u",
        1,
        unit(DELTA),
        true,
        and(
            le(var("u"), var("g")),
            and(gamma2_term(&var("u"), vt), sign),
        ),
    )
}

fn pi2_term(vt: &Term, vpt: &Term) -> Formula {
    let nothing_between = not(exists(
        "w",
        0,
        unit(DELTA),
        true,
        and(
            le(sum(vt.clone(), cst(1)), var("w")),
            and(le(sum(var("w"), cst(1)), vpt.clone()), v2_term(&var("w"))),
        ),
    ));
    and(
        le(sum(vt.clone(), cst(1)), vpt.clone()),
        and(v02_term(vt), and(v12_term(vpt), nothing_between)),
    )
}

fn sigma2_term(xt: &Term, yt: &Term) -> Formula {
    or(
        and(eq(xt.clone(), cst(0)), eq(yt.clone(), cst(0))),
        exists(
            "v",
            0,
            unit(DELTA),
            true,
            and(
                le(var("v"), var("s")),
                and(
                    mod2_term(xt, &var("v")),
                    exists(
                        "vp",
                        0,
                        unit(DELTA),
                        true,
                        and(
                            le(var("vp"), var("s")),
                            and(mod2_term(yt, &var("vp")), pi2_term(&var("v"), &var("vp"))),
                        ),
                    ),
                ),
            ),
        ),
    )
}

/// `δ·s ≡ 0 (mod α·1)` and no smaller positive solution: pins `s` to the
/// ratio's numerator.
fn least_annihilator(st: &Term) -> Formula {
    and(
        Formula::EqMod {
            rem: cst(0),
            value: scal(DELTA, st.clone()),
            modulus: unit(ALPHA),
        },
        forall(
            "xv",
            1,
            unit(DELTA),
            true,
            imp(
                le(sum(var("xv"), cst(1)), st.clone()),
                not(Formula::EqMod {
                    rem: cst(0),
                    value: scal(DELTA, var("xv")),
                    modulus: unit(ALPHA),
                }),
            ),
        ),
    )
}

/// The two-scalar multiplication formula `mu2(x, y, z)`, scalar slots
/// `0, 1 = α, δ`.  Every quantifier bound is the constant term `δ·1`;
/// the recovered constants `s, t, g` only guard, never bound.
pub fn build_mu2() -> Formula {
    let core = exists(
        "p",
        0,
        unit(DELTA),
        true,
        and(
            le(sum(var("p"), cst(1)), var("t")),
            and(
                sigma2_term(&var("x"), &var("p")),
                exists(
                    "q",
                    0,
                    unit(DELTA),
                    true,
                    and(
                        le(sum(var("q"), cst(1)), var("t")),
                        and(
                            sigma2_term(&var("y"), &var("q")),
                            exists(
                                "r",
                                0,
                                unit(DELTA),
                                true,
                                and(
                                    le(sum(var("r"), cst(1)), var("t")),
                                    and(
                                        eq(
                                            sum(sum(sum(var("z"), var("z")), var("p")), var("q")),
                                            var("r"),
                                        ),
                                        sigma2_term(&sum(var("x"), var("y")), &var("r")),
                                    ),
                                ),
                            ),
                        ),
                    ),
                ),
            ),
        ),
    );

    exists(
        "s",
        1,
        unit(DELTA),
        true,
        and(
            least_annihilator(&var("s")),
            exists(
                "t",
                0,
                unit(DELTA),
                true,
                and(
                    Formula::EqMod {
                        rem: var("t"),
                        value: scal(DELTA, cst(1)),
                        modulus: unit(ALPHA),
                    },
                    exists(
                        "bb",
                        0,
                        unit(DELTA),
                        true,
                        and(
                            Formula::EqDiv {
                                quot: var("bb"),
                                value: scal(DELTA, var("s")),
                                divisor: unit(ALPHA),
                            },
                            exists(
                                "g",
                                0,
                                unit(DELTA),
                                true,
                                and(
                                    Formula::EqDiv {
                                        quot: var("g"),
                                        value: var("bb"),
                                        divisor: unit(ALPHA),
                                    },
                                    core,
                                ),
                            ),
                        ),
                    ),
                ),
            ),
        ),
    )
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use num_bigint::BigInt;

    use super::super::{
        check_bounded, eval_literal, parse, print, scalar_indices, EvalOptions, Evaluator,
        LogicError, Valuation,
    };
    use super::*;

    // the smallest squaring model: a/b = 34/29, c = 5, α = 170, δ = 24655
    fn three() -> Vec<BigInt> {
        vec![BigInt::from(34), BigInt::from(29), BigInt::from(5)]
    }

    fn two() -> Vec<BigInt> {
        vec![BigInt::from(170), BigInt::from(24_655)]
    }

    fn check(f: &Formula, scalars: &[BigInt], binds: &[(&str, i64)]) -> bool {
        let mut val = Valuation::new(scalars.to_vec());
        for (name, value) in binds {
            val = val.set(name, *value);
        }
        eval_literal(f, &val, &EvalOptions::default()).unwrap()
    }

    #[test]
    fn every_builder_output_parses_back() {
        let fam = build_mu_family(PiForm::Corrected);
        for f in [
            &fam.gamma, &fam.v, &fam.v0, &fam.v1, &fam.pi, &fam.sigma, &fam.mu,
        ] {
            assert_eq!(&parse(&print(f)).unwrap(), f);
        }
        let m2 = build_mu2();
        assert_eq!(parse(&print(&m2)).unwrap(), m2);
    }

    #[test]
    fn scalar_signatures() {
        let fam = build_mu_family(PiForm::Corrected);
        assert_eq!(
            scalar_indices(&fam.mu).into_iter().collect::<Vec<_>>(),
            vec![0, 1, 2]
        );
        assert_eq!(
            scalar_indices(&build_mu2()).into_iter().collect::<Vec<_>>(),
            vec![0, 1]
        );
    }

    #[test]
    fn mu2_bounds_are_all_the_constant_delta() {
        let report = check_bounded(&build_mu2(), &two());
        assert!(report.all_constant);
        assert!(!report.entries.is_empty());
        for entry in &report.entries {
            assert_eq!(entry.value, Some(BigInt::from(24_655)), "{}", entry.var);
        }
    }

    #[test]
    fn gamma_alone_has_a_variable_bound() {
        let fam = build_mu_family(PiForm::Corrected);
        let report = check_bounded(&fam.gamma, &three());
        assert!(!report.all_constant);
        // the inner range bound is the free argument u itself
        assert!(report.entries.iter().any(|e| !e.is_constant));
    }

    #[test]
    fn minimizer_predicate_on_the_smallest_model() {
        let fam = build_mu_family(PiForm::Corrected);
        // the final full-quality pair
        assert!(check(&fam.gamma, &three(), &[("u", 29), ("v", 34)]));
        // an intermediate one and two non-pairs
        assert!(check(&fam.gamma, &three(), &[("u", 5), ("v", 6)]));
        assert!(!check(&fam.gamma, &three(), &[("u", 5), ("v", 7)]));
        assert!(!check(&fam.gamma, &three(), &[("u", 2), ("v", 2)]));
    }

    #[test]
    fn denominator_predicates_on_the_smallest_model() {
        let fam = build_mu_family(PiForm::Corrected);
        for (v, expect) in [(1, true), (2, false), (6, true), (7, true), (34, true)] {
            assert_eq!(check(&fam.v, &three(), &[("v", v)]), expect, "v({v})");
        }
        for (v, expect) in [(1, true), (6, false), (7, true), (34, false)] {
            assert_eq!(check(&fam.v0, &three(), &[("v", v)]), expect, "v0({v})");
        }
        for (v, expect) in [(1, false), (6, true), (7, false), (34, true)] {
            assert_eq!(check(&fam.v1, &three(), &[("v", v)]), expect, "v1({v})");
        }
    }

    #[test]
    fn adjacency_and_squares() {
        let fam = build_mu_family(PiForm::Corrected);
        assert!(check(&fam.pi, &three(), &[("v", 1), ("vp", 6)]));
        assert!(check(&fam.pi, &three(), &[("v", 7), ("vp", 34)]));
        assert!(!check(&fam.pi, &three(), &[("v", 6), ("vp", 7)]));
        assert!(!check(&fam.pi, &three(), &[("v", 7), ("vp", 6)]));

        // σ: 1² = 1, 2² ≡ 4 — and nothing else at those points
        assert!(check(&fam.sigma, &three(), &[("x", 0), ("y", 0)]));
        assert!(check(&fam.sigma, &three(), &[("x", 1), ("y", 1)]));
        assert!(check(&fam.sigma, &three(), &[("x", 2), ("y", 4)]));
        assert!(!check(&fam.sigma, &three(), &[("x", 2), ("y", 1)]));
        assert!(!check(&fam.sigma, &three(), &[("x", 0), ("y", 1)]));
    }

    #[test]
    fn uncorrected_adjacency_accepts_a_swapped_pair() {
        let fam = build_mu_family(PiForm::Unordered);
        // (7, 6) slips through without the v < vp conjunct…
        assert!(check(&fam.pi, &three(), &[("v", 7), ("vp", 6)]));
        // …and certifies the false square 2² = 1
        assert!(check(&fam.sigma, &three(), &[("x", 2), ("y", 1)]));
    }

    #[test]
    fn multiplication_on_the_smallest_model() {
        let fam = build_mu_family(PiForm::Corrected);
        let mut e = Evaluator::new(three(), EvalOptions::default());
        let mut at = |x: i64, y: i64, z: i64| {
            let mut vars = BTreeMap::new();
            vars.insert("x".to_string(), BigInt::from(x));
            vars.insert("y".to_string(), BigInt::from(y));
            vars.insert("z".to_string(), BigInt::from(z));
            e.eval(&fam.mu, &vars).unwrap()
        };
        assert!(at(1, 1, 1));
        assert!(!at(1, 1, 2));
        assert!(at(0, 0, 0));
        assert!(at(1, 0, 0));
        assert!(!at(0, 1, 1));
    }

    #[test]
    fn two_scalar_multiplication_on_the_smallest_model() {
        let m2 = build_mu2();
        let mut e = Evaluator::new(two(), EvalOptions::default());
        let mut at = |x: i64, y: i64, z: i64| {
            let mut vars = BTreeMap::new();
            vars.insert("x".to_string(), BigInt::from(x));
            vars.insert("y".to_string(), BigInt::from(y));
            vars.insert("z".to_string(), BigInt::from(z));
            e.eval(&m2, &vars).unwrap()
        };
        assert!(at(1, 1, 1));
        assert!(!at(1, 1, 2));
    }

    #[test]
    fn starved_budget_reports_the_quantifier() {
        let m2 = build_mu2();
        let val = Valuation::new(two()).set("x", 1).set("y", 1).set("z", 1);
        let err = eval_literal(&m2, &val, &EvalOptions::with_budget(50)).unwrap_err();
        assert!(matches!(err, LogicError::BudgetExceeded { limit: 50, .. }));
    }
}
