//! Randomized cross-checks: every optimization path, serialization pass
//! and table construction must agree with its naive counterpart on
//! arbitrary inputs, not just on the handful of frozen examples.

use num_bigint::BigInt;
use num_integer::Integer;
use proptest::collection::vec;
use proptest::prelude::*;

use wildlin::contfrac::{
    cf_expand, cf_value, convergents, table_violations, ContinuedFraction, CoprimePair,
};
use wildlin::encoder::{EncodedModel, EncoderError, TargetSequence};
use wildlin::logic::{
    and, build_mu_family, cst, eq, eval_literal, exists, expand_sugar, forall, imp, le, not, or,
    scal, sum, var, EvalOptions, EvalOrder, Formula, PiForm, Term, Valuation,
};

// ---- a deterministic formula generator driven by a shrinkable tape ----
//
// proptest supplies a vector of u32 "decisions"; running out of tape
// falls back to 0, so shorter (shrunken) tapes mean simpler formulas.

struct Tape<'a> {
    data: &'a [u32],
    pos: usize,
}

impl<'a> Tape<'a> {
    fn new(data: &'a [u32]) -> Self {
        Tape { data, pos: 0 }
    }

    fn next(&mut self) -> u32 {
        let x = self.data.get(self.pos).copied().unwrap_or(0);
        self.pos += 1;
        x
    }
}

fn leaf_term(t: &mut Tape, vars: &[String]) -> Term {
    match t.next() % 4 {
        0 | 1 => cst(t.next() % 9),
        2 => var(&vars[t.next() as usize % vars.len()]),
        _ => scal(t.next() as usize % 3, cst(t.next() % 3 + 1)),
    }
}

fn tape_term(t: &mut Tape, vars: &[String]) -> Term {
    if t.next().is_multiple_of(3) {
        sum(leaf_term(t, vars), leaf_term(t, vars))
    } else {
        leaf_term(t, vars)
    }
}

/// Modulus/divisor slots only admit constants or scalar units.
fn tape_modulus(t: &mut Tape) -> Term {
    if t.next().is_multiple_of(2) {
        cst(t.next() % 11 + 1)
    } else {
        scal(t.next() as usize % 3, cst(1))
    }
}

fn tape_atom(t: &mut Tape, vars: &[String]) -> Formula {
    match t.next() % 8 {
        0 | 1 => le(tape_term(t, vars), tape_term(t, vars)),
        2 => eq(tape_term(t, vars), tape_term(t, vars)),
        3 => Formula::EqMod {
            rem: tape_term(t, vars),
            value: tape_term(t, vars),
            modulus: tape_modulus(t),
        },
        4 => Formula::EqDiv {
            quot: tape_term(t, vars),
            value: tape_term(t, vars),
            divisor: tape_modulus(t),
        },
        5 => Formula::AbsDiffLt([
            tape_term(t, vars),
            tape_term(t, vars),
            tape_term(t, vars),
            tape_term(t, vars),
        ]),
        6 => Formula::AbsDiffLe([
            tape_term(t, vars),
            tape_term(t, vars),
            tape_term(t, vars),
            tape_term(t, vars),
        ]),
        _ => Formula::NeqPair([
            tape_term(t, vars),
            tape_term(t, vars),
            tape_term(t, vars),
            tape_term(t, vars),
        ]),
    }
}

fn tape_formula(t: &mut Tape, vars: &mut Vec<String>, depth: u32) -> Formula {
    if depth == 0 {
        return tape_atom(t, vars);
    }
    match t.next() % 8 {
        0 => and(
            tape_formula(t, vars, depth - 1),
            tape_formula(t, vars, depth - 1),
        ),
        1 => or(
            tape_formula(t, vars, depth - 1),
            tape_formula(t, vars, depth - 1),
        ),
        2 => not(tape_formula(t, vars, depth - 1)),
        3 => imp(
            tape_formula(t, vars, depth - 1),
            tape_formula(t, vars, depth - 1),
        ),
        _ => {
            let name = format!("w{}", vars.len());
            let lower = (t.next() % 2) as u8;
            let bound = if t.next().is_multiple_of(4) {
                scal(t.next() as usize % 3, cst(1))
            } else {
                cst(t.next() % 9 + 1)
            };
            let inclusive = t.next().is_multiple_of(2);
            let universal = t.next().is_multiple_of(2);
            vars.push(name.clone());
            let body = tape_formula(t, vars, depth - 1);
            vars.pop();
            if universal {
                forall(&name, lower, bound, inclusive, body)
            } else {
                exists(&name, lower, bound, inclusive, body)
            }
        }
    }
}

proptest! {
    #[test]
    fn tables_from_random_pairs_are_sound(a in 2u64..=400, bsel in 0u64..=398) {
        let b = 1 + bsel % (a - 1);
        let pair = CoprimePair::new(a, b).unwrap();
        let cf = cf_expand(&pair);
        let table = convergents(&cf, Some(&pair)).unwrap();
        let bad = table_violations(&pair, &cf, &table);
        prop_assert!(bad.is_empty(), "table violations for {}/{}: {:?}", a, b, bad);
    }

    #[test]
    fn expansion_inverts_evaluation(
        raw in vec(1u64..=6, 1..=8),
        bump in 2u64..=6,
    ) {
        let mut coeffs: Vec<BigInt> = raw.iter().map(|&x| BigInt::from(x)).collect();
        // canonical form needs the final coefficient (and a lone one) >= 2
        if *coeffs.last().unwrap() < BigInt::from(2) {
            *coeffs.last_mut().unwrap() = BigInt::from(bump);
        }
        let cf = ContinuedFraction::new(coeffs).unwrap();
        let pair = cf_value(&cf).unwrap();
        let again = cf_expand(&pair);
        prop_assert_eq!(again.coeffs(), cf.coeffs());
    }

    #[test]
    fn evaluation_inverts_expansion(a in 2u64..=500, bsel in 0u64..=498) {
        let b = 1 + bsel % (a - 1);
        let g = a.gcd(&b);
        let pair = CoprimePair::new(a, b).unwrap();
        let value = cf_value(&cf_expand(&pair)).unwrap();
        prop_assert_eq!(value, CoprimePair::new(a / g, b / g).unwrap());
    }

    #[test]
    fn sugar_atoms_agree_with_their_expansions(
        tape in vec(any::<u32>(), 4..=40),
        x in 0u32..=30,
        y in 0u32..=30,
        s in vec(1u32..=12, 3),
    ) {
        let mut t = Tape::new(&tape);
        let vars = vec!["x".to_string(), "y".to_string()];
        let atom = tape_atom(&mut t, &vars);
        let expanded = expand_sugar(&atom).unwrap();
        let valuation = Valuation::new(s.iter().map(|&k| BigInt::from(k)).collect())
            .set("x", x)
            .set("y", y);
        let opts = EvalOptions::with_budget(10_000_000);
        let direct = eval_literal(&atom, &valuation, &opts).unwrap();
        let desugared = eval_literal(&expanded, &valuation, &opts).unwrap();
        prop_assert_eq!(direct, desugared, "on {}", wildlin::logic::print(&atom));
    }

    #[test]
    fn order_and_optimizations_never_change_truth(
        tape in vec(any::<u32>(), 8..=64),
        x in 0u32..=10,
        y in 0u32..=10,
        seed in any::<u64>(),
    ) {
        let mut t = Tape::new(&tape);
        let mut vars = vec!["x".to_string(), "y".to_string()];
        let f = tape_formula(&mut t, &mut vars, 3);
        let valuation = Valuation::new(vec![BigInt::from(3), BigInt::from(5), BigInt::from(2)])
            .set("x", x)
            .set("y", y);
        let budget = 50_000_000;
        let tuned = eval_literal(&f, &valuation, &EvalOptions::with_budget(budget)).unwrap();
        let shuffled_opts = EvalOptions {
            order: EvalOrder::Shuffled(seed),
            ..EvalOptions::with_budget(budget)
        };
        let shuffled = eval_literal(&f, &valuation, &shuffled_opts).unwrap();
        let plain = eval_literal(&f, &valuation, &EvalOptions::unoptimized(budget)).unwrap();
        prop_assert_eq!(tuned, shuffled, "on {}", wildlin::logic::print(&f));
        prop_assert_eq!(tuned, plain, "on {}", wildlin::logic::print(&f));
    }

    #[test]
    fn random_sequences_encode_faithfully(
        len in 1usize..=8,
        csel in 0usize..=13,
        raws in vec(1u64..=1_000_000, 8),
    ) {
        let primes = [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];
        let c = primes[csel];
        let z: Vec<BigInt> = raws[..len].iter().map(|&r| BigInt::from(1 + r % (c - 1))).collect();
        let seq = TargetSequence::new(z.clone(), BigInt::from(c)).unwrap();
        match EncodedModel::new(seq) {
            // the half-integer ratio is a documented refusal, not a bug
            Err(EncoderError::ExceptionRatio { .. }) => {}
            Err(other) => prop_assert!(false, "unexpected encoding failure: {}", other),
            Ok(model) => {
                let table = model.table();
                prop_assert_eq!(table.n(), len as isize - 1);
                for (i, zi) in z.iter().enumerate() {
                    let vi = table.v(i as isize);
                    prop_assert_eq!(&vi.mod_floor(model.c()), zi, "residue at {}", i);
                }
                let value = cf_value(model.cf()).unwrap();
                prop_assert_eq!((value.a(), value.b()), (model.a(), model.b()));
                let pair = CoprimePair::new(model.a().clone(), model.b().clone()).unwrap();
                let bad = table_violations(&pair, model.cf(), table);
                prop_assert!(bad.is_empty(), "table violations: {:?}", bad);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn minimizer_formula_is_stable_under_options(
        u in 0u32..=40,
        v in 0u32..=40,
        seed in any::<u64>(),
    ) {
        let gamma = build_mu_family(PiForm::Corrected).gamma;
        let valuation = Valuation::new(vec![
            BigInt::from(34),
            BigInt::from(29),
            BigInt::from(5),
        ])
        .set("u", u)
        .set("v", v);
        let budget = 50_000_000;
        let tuned = eval_literal(&gamma, &valuation, &EvalOptions::with_budget(budget)).unwrap();
        let plain = eval_literal(&gamma, &valuation, &EvalOptions::unoptimized(budget)).unwrap();
        let shuffled_opts = EvalOptions {
            order: EvalOrder::Shuffled(seed),
            ..EvalOptions::with_budget(budget)
        };
        let shuffled = eval_literal(&gamma, &valuation, &shuffled_opts).unwrap();
        prop_assert_eq!(tuned, plain);
        prop_assert_eq!(tuned, shuffled);
    }
}
