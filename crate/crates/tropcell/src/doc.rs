//! The arrangement document: a JSON input format with exact rational
//! coordinates, plus the named builtin arrangements.
//!
//! Every coordinate is a `[numerator, denominator]` integer pair, so
//! documents round-trip bit-exactly and no reading of decimal floats ever
//! happens. Unknown fields are ignored, which keeps older readers working
//! when metadata grows.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::mixed::{cyclic_arrangement, hypersimplex_vertices};
use crate::rat::Rat;
use crate::tropical::Arrangement;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generic: Option<bool>,
}

/// Serialized form of an arrangement: coefficient rows as exact fractions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrangementDocument {
    pub points: Vec<Vec<[i64; 2]>>,
    #[serde(default)]
    pub metadata: Metadata,
}

impl ArrangementDocument {
    pub fn from_integer_rows(rows: &[Vec<i64>], metadata: Metadata) -> Self {
        ArrangementDocument {
            points: rows
                .iter()
                .map(|r| r.iter().map(|&v| [v, 1]).collect())
                .collect(),
            metadata,
        }
    }

    pub fn to_arrangement(&self) -> Result<Arrangement> {
        let mut rows = Vec::with_capacity(self.points.len());
        for row in &self.points {
            let mut out = Vec::with_capacity(row.len());
            for &[num, den] in row {
                if den == 0 {
                    return Err(Error::InvalidDocument(
                        "zero denominator in points".to_string(),
                    ));
                }
                out.push(Rat::new(num.into(), den.into()));
            }
            rows.push(out);
        }
        Arrangement::from_coeff_rows(rows)
    }

    pub fn from_arrangement(arr: &Arrangement, metadata: Metadata) -> Result<Self> {
        let mut points = Vec::with_capacity(arr.n());
        for row in arr.coeff_rows() {
            let mut out = Vec::with_capacity(row.len());
            for v in row {
                let num = i64::try_from(v.numer().clone()).map_err(|_| {
                    Error::InvalidDocument("coordinate numerator exceeds 64 bits".to_string())
                })?;
                let den = i64::try_from(v.denom().clone()).map_err(|_| {
                    Error::InvalidDocument("coordinate denominator exceeds 64 bits".to_string())
                })?;
                out.push([num, den]);
            }
            points.push(out);
        }
        Ok(ArrangementDocument { points, metadata })
    }
}

pub fn parse_document(text: &str) -> Result<ArrangementDocument> {
    serde_json::from_str(text)
        .map_err(|e| Error::InvalidDocument(format!("document does not parse: {e}")))
}

/// Deterministic pretty-printed form; fields keep declaration order.
pub fn render_document(doc: &ArrangementDocument) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("document serializes");
    text.push('\n');
    text
}

fn named(name: &str, rows: &[Vec<i64>], generic: bool) -> ArrangementDocument {
    ArrangementDocument::from_integer_rows(
        rows,
        Metadata {
            name: Some(name.to_string()),
            seed: None,
            generic: Some(generic),
        },
    )
}

fn parse_size(word: &str, what: &str) -> Result<usize> {
    let value: usize = word
        .parse()
        .map_err(|_| Error::InvalidDocument(format!("{what} must be a positive integer")))?;
    if value == 0 {
        return Err(Error::InvalidDocument(format!("{what} must be positive")));
    }
    Ok(value)
}

/// Resolves a builtin name, or returns None when the words name no builtin
/// (the caller then treats them as a file path).
///
/// Builtins: `running-example`, `nongeneric-example` (alias
/// `small-example`), `cyclic N D`, `hypersimplex K M`.
pub fn builtin_document(words: &[String]) -> Result<Option<ArrangementDocument>> {
    let doc = match words {
        [one] => match one.as_str() {
            "running-example" => named(
                "running-example",
                &[vec![0, 3, 6], vec![0, 5, 2], vec![0, 0, 1], vec![1, 5, 0]],
                true,
            ),
            "nongeneric-example" | "small-example" => named(
                "nongeneric-example",
                &[vec![0, 1, 1], vec![0, 0, 1], vec![0, 1, 0]],
                false,
            ),
            _ => return Ok(None),
        },
        [kind, a, b] if kind == "cyclic" => {
            let (n, d) = (parse_size(a, "n")?, parse_size(b, "d")?);
            let arr = cyclic_arrangement(n, d)?;
            let mut doc = ArrangementDocument::from_arrangement(&arr, Metadata::default())?;
            doc.metadata.name = Some(format!("cyclic-{n}-{d}"));
            doc.metadata.generic = Some(true);
            doc
        }
        [kind, a, b] if kind == "hypersimplex" => {
            let (k, m) = (parse_size(a, "k")?, parse_size(b, "m")?);
            let rows = hypersimplex_vertices(k, m)?;
            let mut doc = ArrangementDocument::from_integer_rows(&rows, Metadata::default());
            doc.metadata.name = Some(format!("hypersimplex-{k}-{m}"));
            doc
        }
        _ => return Ok(None),
    };
    Ok(Some(doc))
}

/// A builtin name, or a single path to a JSON document.
pub fn load_document(words: &[String]) -> Result<ArrangementDocument> {
    if let Some(doc) = builtin_document(words)? {
        return Ok(doc);
    }
    match words {
        [path] => parse_document(&fs::read_to_string(Path::new(path))?),
        _ => Err(Error::InvalidDocument(format!(
            "expected a builtin name or one document path, got: {}",
            words.join(" ")
        ))),
    }
}
