//! On-disk model documents.
//!
//! A [`ModelDocument`] is the JSON form of an encoded model: the target
//! sequence and modulus, plus the derived data (coefficients, ratio,
//! scalars) stored redundantly so a reader can cross-check them.  All
//! integers are decimal strings — the values outgrow every fixed-width
//! type almost immediately, and strings keep the files readable and the
//! byte layout stable.
//!
//! Loading re-derives everything from `(z, c)` and demands agreement
//! with the stored copies, so any corrupted field produces an error
//! naming the field and both values rather than a model that quietly
//! misbehaves.  Documents carry a version number; unknown versions are
//! rejected up front.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::encoder::{build_squaring_model, EncodedModel, EncoderError, TargetSequence, WildModel};

pub const DOCUMENT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SerializeError {
    #[error("malformed model document: {0}")]
    Json(String),
    #[error("unsupported document version {0} (this build reads version {DOCUMENT_VERSION})")]
    Version(u32),
    #[error("field {field} is not a decimal integer: {text:?}")]
    InvalidNumber { field: String, text: String },
    #[error("stored {field} disagrees with the value recomputed from (z, c): stored {stored}, recomputed {computed}")]
    Mismatch {
        field: String,
        stored: String,
        computed: String,
    },
    #[error("document claims a squaring model with l = {l}, but {detail}")]
    NotSquaring { l: u64, detail: String },
    #[error(transparent)]
    Encoder(#[from] EncoderError),
}

/// The serialized form of a model.  `l > 0` marks the squaring model of
/// that size; `l = 0` marks a generic target sequence.  Everything after
/// `z` is derivable and is checked on load.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelDocument {
    pub version: u32,
    pub l: u64,
    pub c: String,
    pub z: Vec<String>,
    pub coeffs: Vec<String>,
    pub a: String,
    pub b: String,
    pub alpha: String,
    pub delta: String,
}

/// A validated load: either the squaring model it claimed to be, or a
/// generic encoded sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LoadedModel {
    Squaring(WildModel),
    Sequence(EncodedModel),
}

impl LoadedModel {
    pub fn core(&self) -> &EncodedModel {
        match self {
            LoadedModel::Squaring(m) => m.core(),
            LoadedModel::Sequence(m) => m,
        }
    }

    /// Squaring size, `0` for a generic sequence.
    pub fn l(&self) -> u64 {
        match self {
            LoadedModel::Squaring(m) => m.l(),
            LoadedModel::Sequence(_) => 0,
        }
    }
}

fn strings(values: &[BigInt]) -> Vec<String> {
    values.iter().map(BigInt::to_string).collect()
}

fn parse_field(field: &str, text: &str) -> Result<BigInt, SerializeError> {
    text.parse().map_err(|_| SerializeError::InvalidNumber {
        field: field.to_string(),
        text: text.to_string(),
    })
}

impl ModelDocument {
    fn from_core(core: &EncodedModel, l: u64) -> Self {
        ModelDocument {
            version: DOCUMENT_VERSION,
            l,
            c: core.c().to_string(),
            z: strings(core.seq().z()),
            coeffs: strings(core.cf().coeffs()),
            a: core.a().to_string(),
            b: core.b().to_string(),
            alpha: core.alpha().to_string(),
            delta: core.delta().to_string(),
        }
    }

    pub fn from_wild(model: &WildModel) -> Self {
        Self::from_core(model.core(), model.l())
    }

    pub fn from_encoded(core: &EncodedModel) -> Self {
        Self::from_core(core, 0)
    }

    /// Pretty JSON with a trailing newline.  Serialization is
    /// deterministic, so write → read → write reproduces the bytes.
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("document serializes");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> Result<Self, SerializeError> {
        let doc: ModelDocument =
            serde_json::from_str(text).map_err(|e| SerializeError::Json(e.to_string()))?;
        if doc.version != DOCUMENT_VERSION {
            return Err(SerializeError::Version(doc.version));
        }
        Ok(doc)
    }

    /// Rebuilds the model from `(z, c)` and checks every stored derived
    /// field against the recomputation; for `l > 0`, additionally checks
    /// that the sequence really is the squaring sequence of that size.
    pub fn into_model(self) -> Result<LoadedModel, SerializeError> {
        let c = parse_field("c", &self.c)?;
        let mut z = Vec::with_capacity(self.z.len());
        for (i, text) in self.z.iter().enumerate() {
            z.push(parse_field(&format!("z[{i}]"), text)?);
        }
        let seq = TargetSequence::new(z, c)?;
        let rebuilt = EncodedModel::new(seq)?;

        let computed = strings(rebuilt.cf().coeffs());
        if self.coeffs != computed {
            return Err(SerializeError::Mismatch {
                field: "coeffs".to_string(),
                stored: format!("[{}]", self.coeffs.join(", ")),
                computed: format!("[{}]", computed.join(", ")),
            });
        }
        for (field, stored, computed) in [
            ("a", &self.a, rebuilt.a()),
            ("b", &self.b, rebuilt.b()),
            ("alpha", &self.alpha, rebuilt.alpha()),
            ("delta", &self.delta, rebuilt.delta()),
        ] {
            if parse_field(field, stored)? != *computed {
                return Err(SerializeError::Mismatch {
                    field: field.to_string(),
                    stored: stored.clone(),
                    computed: computed.to_string(),
                });
            }
        }

        if self.l == 0 {
            return Ok(LoadedModel::Sequence(rebuilt));
        }
        let expected_len = usize::try_from(self.l).ok().and_then(|l| l.checked_mul(4));
        if expected_len != Some(rebuilt.seq().len()) {
            return Err(SerializeError::NotSquaring {
                l: self.l,
                detail: format!(
                    "the sequence has {} entries where 4·l are required",
                    rebuilt.seq().len()
                ),
            });
        }
        let wild = build_squaring_model(self.l)?;
        if wild.core() != &rebuilt {
            return Err(SerializeError::NotSquaring {
                l: self.l,
                detail: "the sequence is not the squaring sequence of that size".to_string(),
            });
        }
        Ok(LoadedModel::Squaring(wild))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn squaring_doc(l: u64) -> ModelDocument {
        ModelDocument::from_wild(&build_squaring_model(l).unwrap())
    }

    #[test]
    fn round_trip_is_byte_exact() {
        let doc = squaring_doc(2);
        let json = doc.to_json();
        assert!(json.ends_with('\n'));
        let back = ModelDocument::from_json(&json).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_json(), json);
    }

    #[test]
    fn smallest_model_document_content() {
        let doc = squaring_doc(1);
        assert_eq!(doc.version, 1);
        assert_eq!(doc.l, 1);
        assert_eq!(doc.c, "5");
        assert_eq!(doc.z, ["1", "1", "2", "4"]);
        assert_eq!(doc.coeffs, ["1", "5", "1", "4"]);
        assert_eq!((doc.a.as_str(), doc.b.as_str()), ("34", "29"));
        assert_eq!(doc.alpha, "170");
        assert_eq!(doc.delta, "24655");
        let json = doc.to_json();
        assert!(
            json.starts_with("{\n  \"version\": 1,\n  \"l\": 1,"),
            "{json}"
        );
    }

    #[test]
    fn loading_restores_the_squaring_model() {
        let model = build_squaring_model(2).unwrap();
        let loaded = ModelDocument::from_wild(&model).into_model().unwrap();
        assert_eq!(loaded, LoadedModel::Squaring(model));
        assert_eq!(loaded.l(), 2);
    }

    #[test]
    fn generic_sequences_load_as_sequences() {
        let seq = TargetSequence::new(
            vec![BigInt::from(3), BigInt::from(1), BigInt::from(4)],
            BigInt::from(7),
        )
        .unwrap();
        let core = EncodedModel::new(seq).unwrap();
        let doc = ModelDocument::from_encoded(&core);
        assert_eq!(doc.l, 0);
        let loaded = doc.into_model().unwrap();
        assert_eq!(loaded.l(), 0);
        assert_eq!(loaded.core(), &core);
    }

    #[test]
    fn corrupted_ratio_is_named_in_the_error() {
        let mut doc = squaring_doc(1);
        doc.a = "35".to_string();
        let err = doc.into_model().unwrap_err();
        assert_eq!(
            err,
            SerializeError::Mismatch {
                field: "a".to_string(),
                stored: "35".to_string(),
                computed: "34".to_string(),
            }
        );
    }

    #[test]
    fn corrupted_sequence_entry_changes_the_recomputation() {
        let model = build_squaring_model(1).unwrap();
        let mut doc = ModelDocument::from_encoded(model.core()); // l = 0: no shape check
        doc.z[2] = "3".to_string();
        let err = doc.into_model().unwrap_err();
        match err {
            SerializeError::Mismatch { field, .. } => assert_eq!(field, "coeffs"),
            other => panic!("expected a coefficient mismatch, got {other}"),
        }
    }

    #[test]
    fn wrong_size_claim_is_rejected() {
        let mut doc = squaring_doc(1);
        doc.l = 2;
        let err = doc.into_model().unwrap_err();
        assert!(
            matches!(err, SerializeError::NotSquaring { l: 2, .. }),
            "{err}"
        );
    }

    #[test]
    fn non_squaring_sequence_cannot_claim_a_size() {
        let seq = TargetSequence::new(
            vec![
                BigInt::from(1),
                BigInt::from(1),
                BigInt::from(2),
                BigInt::from(3), // should be 4
            ],
            BigInt::from(5),
        )
        .unwrap();
        let mut doc = ModelDocument::from_encoded(&EncodedModel::new(seq).unwrap());
        doc.l = 1;
        let err = doc.into_model().unwrap_err();
        match err {
            SerializeError::NotSquaring { l: 1, detail } => {
                assert!(detail.contains("squaring sequence"), "{detail}")
            }
            other => panic!("expected a shape complaint, got {other}"),
        }
    }

    #[test]
    fn unknown_versions_are_rejected() {
        let json = squaring_doc(1)
            .to_json()
            .replace("\"version\": 1", "\"version\": 9");
        assert_eq!(
            ModelDocument::from_json(&json),
            Err(SerializeError::Version(9))
        );
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let json = squaring_doc(1)
            .to_json()
            .replace("\"l\": 1,", "\"l\": 1,\n  \"extra\": true,");
        let err = ModelDocument::from_json(&json).unwrap_err();
        assert!(matches!(err, SerializeError::Json(_)), "{err}");
    }

    #[test]
    fn garbage_numbers_are_named() {
        let mut doc = squaring_doc(1);
        doc.z[1] = "one".to_string();
        assert_eq!(
            doc.into_model().unwrap_err(),
            SerializeError::InvalidNumber {
                field: "z[1]".to_string(),
                text: "one".to_string(),
            }
        );
    }

    #[test]
    fn non_prime_modulus_is_caught_by_revalidation() {
        let mut doc = squaring_doc(1);
        doc.c = "6".to_string();
        let err = doc.into_model().unwrap_err();
        assert_eq!(
            err,
            SerializeError::Encoder(EncoderError::ModulusNotPrime(BigInt::from(6)))
        );
    }
}
