//! JSON interchange for semigroups, corpora and Q-fuzzy subsets.
//!
//! Semigroups:
//! `{"elements": ["a","b"], "table": [["a","a"],["b","b"]]}`, with table
//! entries given as element labels. Fuzzy subsets:
//! `{"q": ["p"], "grades": {"a": {"p": "4/5"}, "b": {"p": "7/10"}}}`.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::qfuzzy::{Grade, QFuzzySubset, QSet};
use crate::semigroup::Semigroup;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemigroupJson {
    pub elements: Vec<String>,
    pub table: Vec<Vec<String>>,
}

impl From<&Semigroup> for SemigroupJson {
    fn from(s: &Semigroup) -> Self {
        SemigroupJson {
            elements: s.names().to_vec(),
            table: s
                .rows()
                .into_iter()
                .map(|r| r.into_iter().map(|i| s.label(i).to_string()).collect())
                .collect(),
        }
    }
}

impl TryFrom<SemigroupJson> for Semigroup {
    type Error = Error;

    fn try_from(j: SemigroupJson) -> Result<Self> {
        let index = |label: &str| {
            j.elements
                .iter()
                .position(|e| e == label)
                .ok_or_else(|| Error::UnknownLabel(label.to_string()))
        };
        let table = j
            .table
            .iter()
            .map(|row| row.iter().map(|l| index(l)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Semigroup::new(j.elements, table)
    }
}

fn json_err(e: serde_json::Error) -> Error {
    Error::Json(e.to_string())
}

pub fn parse_semigroup(text: &str) -> Result<Semigroup> {
    let j: SemigroupJson = serde_json::from_str(text).map_err(json_err)?;
    j.try_into()
}

pub fn semigroup_to_string(s: &Semigroup) -> String {
    serde_json::to_string_pretty(&SemigroupJson::from(s)).expect("serializable")
}

/// A corpus file is a JSON array of semigroup objects.
pub fn parse_corpus(text: &str) -> Result<Vec<Semigroup>> {
    let items: Vec<SemigroupJson> = serde_json::from_str(text).map_err(json_err)?;
    items
        .into_iter()
        .enumerate()
        .map(|(i, j)| Semigroup::try_from(j).map_err(|e| Error::Json(format!("corpus item {i}: {e}"))))
        .collect()
}

pub fn corpus_to_string(items: &[Semigroup]) -> String {
    let js: Vec<SemigroupJson> = items.iter().map(SemigroupJson::from).collect();
    serde_json::to_string_pretty(&js).expect("serializable")
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct FuzzyJsonIn {
    q: Vec<String>,
    grades: BTreeMap<String, BTreeMap<String, Grade>>,
}

/// Serializes in element and `Q` order.
struct FuzzyJsonOut<'a>(&'a QFuzzySubset);

struct Row<'a>(&'a QFuzzySubset, usize);

impl Serialize for Row<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let labels = self.0.qset().labels();
        let mut map = serializer.serialize_map(Some(labels.len()))?;
        for (q, label) in labels.iter().enumerate() {
            map.serialize_entry(label, &self.0.grade(self.1, q))?;
        }
        map.end()
    }
}

struct Grades<'a>(&'a QFuzzySubset);

impl Serialize for Grades<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let s = self.0.owner();
        let mut map = serializer.serialize_map(Some(s.order()))?;
        for x in s.elements() {
            map.serialize_entry(s.label(x), &Row(self.0, x))?;
        }
        map.end()
    }
}

impl Serialize for FuzzyJsonOut<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("q", self.0.qset().labels())?;
        map.serialize_entry("grades", &Grades(self.0))?;
        map.end()
    }
}

/// Parses a fuzzy subset of `owner`. Every element must list a grade for
/// every label in `q`.
pub fn parse_fuzzy(text: &str, owner: Arc<Semigroup>) -> Result<QFuzzySubset> {
    let j: FuzzyJsonIn = serde_json::from_str(text).map_err(json_err)?;
    let qset = Arc::new(QSet::new(j.q)?);
    for label in j.grades.keys() {
        owner.index_of(label)?;
    }
    let mismatch = |got_rows: usize, got_cols: usize| Error::DimensionMismatch {
        rows: owner.order(),
        cols: qset.len(),
        got_rows,
        got_cols,
    };
    let mut rows = Vec::with_capacity(owner.order());
    for x in owner.elements() {
        let row = j
            .grades
            .get(owner.label(x))
            .ok_or_else(|| mismatch(j.grades.len(), qset.len()))?;
        for label in row.keys() {
            qset.index_of(label)?;
        }
        let grades = qset
            .labels()
            .iter()
            .map(|l| row.get(l).copied().ok_or_else(|| mismatch(j.grades.len(), row.len())))
            .collect::<Result<Vec<_>>>()?;
        rows.push(grades);
    }
    QFuzzySubset::new(owner, qset, rows)
}

pub fn fuzzy_to_value(mu: &QFuzzySubset) -> serde_json::Value {
    serde_json::to_value(FuzzyJsonOut(mu)).expect("serializable")
}

pub fn fuzzy_to_string(mu: &QFuzzySubset) -> String {
    serde_json::to_string_pretty(&FuzzyJsonOut(mu)).expect("serializable")
}
