//! Linear arithmetic with scalar coefficients is too weak to define
//! multiplication — unless the scalars are chosen adversarially.  This crate
//! builds such adversarial scalar pairs: it encodes the graph of squaring on
//! `{1, ..., 2L}` into the continued-fraction expansion of a single rational
//! `a/b`, then realizes bounded multiplication as a first-order formula over
//! `+`, `<` and the scalars.
//!
//! The pieces:
//!
//! * [`contfrac`] — expansion, convergents, and the best-approximation
//!   characterization the whole construction rests on;
//! * [`encoder`] — solving for coefficients so the convergent numerators hit
//!   prescribed residues mod a prime `c`;
//! * [`logic`] — terms and formulas of the scalar language, a parser and
//!   printer, and a bounded-quantifier evaluator;
//! * [`model`] — the formula families themselves plus fast semantic
//!   evaluation and constant recovery;
//! * [`ipdemo`] — the divisibility instance showing the defined product
//!   encodes arbitrary finite set patterns;
//! * [`serialize`] — a JSON document format for built models.

pub mod contfrac;
pub mod encoder;
pub mod ipdemo;
pub mod logic;
pub mod model;
pub mod serialize;

pub use contfrac::{
    best_approx_bruteforce, cf_expand, cf_value, convergents, is_best_2nd_kind, minimizer_pairs,
    ContfracError, ContinuedFraction, ConvergentTable, CoprimePair,
};
pub use encoder::{
    build_squaring_model, encode_function, encode_sequence, smallest_prime_above, EncodedFunction,
    EncodedModel, EncoderError, TargetSequence, WildModel,
};
pub use ipdemo::{build_ip_instance, check_ip_pattern, phi_eval, IpError, IpInstance};
pub use logic::{
    build_mu2, build_mu_family, check_bounded, eval_literal, expand_sugar, parse, print,
    EvalOptions, EvalOrder, Evaluator, Formula, LogicError, MuFamily, PiForm, Term, Valuation,
};
pub use model::{
    equivalence_check, mu2_eval, mu_eval, predicate_sets, recover_constants,
    recover_constants_search, sigma_eval, CheckRecord, CheckStatus, EquivalenceDomain,
    EquivalenceReport, ModelError, PredicateSets, RecoveredConstants, TwoScalarSemantics,
    TwoScalarView,
};
pub use serialize::{LoadedModel, ModelDocument, SerializeError, DOCUMENT_VERSION};
