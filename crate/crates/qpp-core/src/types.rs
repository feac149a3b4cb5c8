//! Shared data model: queries, runs, qrels, feature tables, and eval tables.
//!
//! All structures are immutable after construction and safe for unrestricted
//! concurrent read access. Query-keyed maps are `BTreeMap`s so every
//! iteration order is the ascending lexicographic query order, which keeps
//! downstream aggregation deterministic.

use alloc::borrow::ToOwned;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

#[cfg(feature = "serde")]
use serde::{Deserialize, Serialize};

/// Opaque query identifier as it appears in the input files.
///
/// Non-empty and free of internal whitespace; both are guaranteed at
/// construction time.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct QueryId(String);

impl QueryId {
    pub fn new(id: &str) -> Result<Self, InvalidQueryId> {
        if id.is_empty() {
            return Err(InvalidQueryId::Empty);
        }
        if id.chars().any(char::is_whitespace) {
            return Err(InvalidQueryId::Whitespace(id.to_owned()));
        }
        Ok(Self(id.to_owned()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for QueryId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl core::borrow::Borrow<str> for QueryId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvalidQueryId {
    Empty,
    Whitespace(String),
}

impl fmt::Display for InvalidQueryId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvalidQueryId::Empty => write!(f, "query id must be non-empty"),
            InvalidQueryId::Whitespace(id) => {
                write!(f, "query id {id:?} contains internal whitespace")
            }
        }
    }
}

impl core::error::Error for InvalidQueryId {}

/// A single retrieved document in a ranked list.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct RunEntry {
    pub doc_id: String,
    /// 1-based rank after re-sorting; contiguous within a query.
    pub rank: u32,
    pub score: f64,
}

/// Per-query ranked document lists with retrieval scores.
///
/// Within a query, doc ids are unique and entries are sorted by descending
/// score with ties broken by ascending doc id; ranks are rewritten to
/// 1..n after sorting, regardless of the order in the source file.
#[derive(Debug, Clone, PartialEq)]
pub struct RunSet {
    run_tag: String,
    entries: BTreeMap<QueryId, Vec<RunEntry>>,
}

impl RunSet {
    /// Builds a run set from raw (doc id, score) pairs, establishing the
    /// sort and rank invariants. Doc-id uniqueness is the caller's job
    /// (the parser reports duplicates with line numbers).
    pub fn from_raw(run_tag: &str, raw: BTreeMap<QueryId, Vec<(String, f64)>>) -> Self {
        let entries = raw
            .into_iter()
            .map(|(qid, mut docs)| {
                docs.sort_by(|a, b| b.1.total_cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
                let ranked = docs
                    .into_iter()
                    .enumerate()
                    .map(|(i, (doc_id, score))| RunEntry {
                        doc_id,
                        rank: (i + 1) as u32,
                        score,
                    })
                    .collect();
                (qid, ranked)
            })
            .collect();
        Self {
            run_tag: run_tag.to_owned(),
            entries,
        }
    }

    pub fn run_tag(&self) -> &str {
        &self.run_tag
    }

    pub fn queries(&self) -> impl Iterator<Item = &QueryId> {
        self.entries.keys()
    }

    pub fn query_id_set(&self) -> BTreeSet<QueryId> {
        self.entries.keys().cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn ranking(&self, qid: &QueryId) -> Option<&[RunEntry]> {
        self.entries.get(qid).map(Vec::as_slice)
    }

    /// Descending retrieval scores for one query.
    pub fn scores(&self, qid: &QueryId) -> Option<Vec<f64>> {
        self.entries
            .get(qid)
            .map(|es| es.iter().map(|e| e.score).collect())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&QueryId, &[RunEntry])> {
        self.entries.iter().map(|(q, es)| (q, es.as_slice()))
    }

    /// A copy containing only the given queries.
    pub fn restricted_to(&self, keep: &BTreeSet<QueryId>) -> Self {
        Self {
            run_tag: self.run_tag.clone(),
            entries: self
                .entries
                .iter()
                .filter(|(q, _)| keep.contains(*q))
                .map(|(q, es)| (q.clone(), es.clone()))
                .collect(),
        }
    }
}

/// Graded relevance judgments keyed by (query, document).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QrelsSet {
    judgments: BTreeMap<QueryId, BTreeMap<String, u32>>,
}

impl QrelsSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts a judgment; returns false if the pair was already present.
    pub fn insert(&mut self, qid: QueryId, doc_id: String, grade: u32) -> bool {
        self.judgments
            .entry(qid)
            .or_default()
            .insert(doc_id, grade)
            .is_none()
    }

    pub fn grade(&self, qid: &QueryId, doc_id: &str) -> Option<u32> {
        self.judgments.get(qid).and_then(|m| m.get(doc_id)).copied()
    }

    /// All judged documents for one query.
    pub fn judged(&self, qid: &QueryId) -> Option<&BTreeMap<String, u32>> {
        self.judgments.get(qid)
    }

    pub fn queries(&self) -> impl Iterator<Item = &QueryId> {
        self.judgments.keys()
    }

    pub fn query_id_set(&self) -> BTreeSet<QueryId> {
        self.judgments.keys().cloned().collect()
    }

    pub fn is_empty(&self) -> bool {
        self.judgments.is_empty()
    }
}

/// Whether a feature column was computed by this toolkit or ingested from
/// an external table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub enum Provenance {
    Computed,
    Ingested,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Computed => f.write_str("computed"),
            Provenance::Ingested => f.write_str("ingested"),
        }
    }
}

/// Query-indexed matrix of named predictor values.
///
/// Every row holds exactly one value per column; column names are unique.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureTable {
    columns: Vec<String>,
    provenance: Vec<Provenance>,
    rows: BTreeMap<QueryId, Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableError {
    DuplicateColumn(String),
    RowWidthMismatch { query: String, expected: usize, got: usize },
    NoColumn(String),
    EmptyIntersection,
}

impl fmt::Display for TableError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableError::DuplicateColumn(c) => write!(f, "duplicate column name {c:?}"),
            TableError::RowWidthMismatch { query, expected, got } => write!(
                f,
                "row for query {query} has {got} values, expected {expected}"
            ),
            TableError::NoColumn(c) => write!(f, "no column named {c:?}"),
            TableError::EmptyIntersection => {
                write!(f, "merged tables share no queries")
            }
        }
    }
}

impl core::error::Error for TableError {}

impl FeatureTable {
    pub fn new(columns: Vec<String>, provenance: Provenance) -> Result<Self, TableError> {
        let mut seen = BTreeSet::new();
        for c in &columns {
            if !seen.insert(c.clone()) {
                return Err(TableError::DuplicateColumn(c.clone()));
            }
        }
        let n = columns.len();
        Ok(Self {
            columns,
            provenance: alloc::vec![provenance; n],
            rows: BTreeMap::new(),
        })
    }

    /// Inserts a row; returns false if the query was already present.
    pub fn insert_row(&mut self, qid: QueryId, values: Vec<f64>) -> Result<bool, TableError> {
        if values.len() != self.columns.len() {
            return Err(TableError::RowWidthMismatch {
                query: qid.to_string(),
                expected: self.columns.len(),
                got: values.len(),
            });
        }
        Ok(self.rows.insert(qid, values).is_none())
    }

    pub fn columns(&self) -> &[String] {
        &self.columns
    }

    pub fn provenance(&self) -> &[Provenance] {
        &self.provenance
    }

    pub fn queries(&self) -> impl Iterator<Item = &QueryId> {
        self.rows.keys()
    }

    pub fn query_id_set(&self) -> BTreeSet<QueryId> {
        self.rows.keys().cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn row(&self, qid: &QueryId) -> Option<&[f64]> {
        self.rows.get(qid).map(Vec::as_slice)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&QueryId, &[f64])> {
        self.rows.iter().map(|(q, v)| (q, v.as_slice()))
    }

    /// One column as a query-keyed map.
    pub fn column(&self, name: &str) -> Result<BTreeMap<QueryId, f64>, TableError> {
        let idx = self
            .columns
            .iter()
            .position(|c| c == name)
            .ok_or_else(|| TableError::NoColumn(name.to_owned()))?;
        Ok(self
            .rows
            .iter()
            .map(|(q, v)| (q.clone(), v[idx]))
            .collect())
    }

    /// Merges another table into this one on the intersection of query sets.
    ///
    /// Columns keep their declared order (self first); a column name present
    /// in both tables is a conflict. One warning is emitted per dropped
    /// query naming the side it is missing from.
    pub fn merge(
        &self,
        other: &FeatureTable,
        self_label: &str,
        other_label: &str,
        warnings: &mut Warnings,
    ) -> Result<FeatureTable, TableError> {
        for c in &other.columns {
            if self.columns.contains(c) {
                return Err(TableError::DuplicateColumn(c.clone()));
            }
        }
        let mut columns = self.columns.clone();
        columns.extend(other.columns.iter().cloned());
        let mut provenance = self.provenance.clone();
        provenance.extend(other.provenance.iter().copied());

        let keep: BTreeSet<&QueryId> = self
            .rows
            .keys()
            .filter(|q| other.rows.contains_key(*q))
            .collect();
        for q in self.rows.keys() {
            if !other.rows.contains_key(q) {
                warnings.push(alloc::format!(
                    "query {q} dropped during merge: missing from {other_label}"
                ));
            }
        }
        for q in other.rows.keys() {
            if !self.rows.contains_key(q) {
                warnings.push(alloc::format!(
                    "query {q} dropped during merge: missing from {self_label}"
                ));
            }
        }
        if keep.is_empty() {
            return Err(TableError::EmptyIntersection);
        }

        let rows = keep
            .into_iter()
            .map(|q| {
                let mut v = self.rows[q].clone();
                v.extend(other.rows[q].iter().copied());
                (q.clone(), v)
            })
            .collect();
        Ok(FeatureTable {
            columns,
            provenance,
            rows,
        })
    }
}

/// Per-query (term, corpus frequency) statistics used for query-length
/// normalization.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QueryTermStats {
    terms: BTreeMap<QueryId, Vec<(String, u64)>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TermStatsError {
    MissingQuery(String),
    /// Every listed term has zero corpus frequency, so the query-length
    /// normalizer is undefined.
    DegenerateQuery(String),
}

impl fmt::Display for TermStatsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermStatsError::MissingQuery(q) => {
                write!(f, "query {q} has no term statistics")
            }
            TermStatsError::DegenerateQuery(q) => write!(
                f,
                "query {q} has no effective terms (all corpus frequencies are zero)"
            ),
        }
    }
}

impl core::error::Error for TermStatsError {}

impl QueryTermStats {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds one (term, tcf) entry; returns false if the term was already
    /// listed for the query.
    pub fn insert(&mut self, qid: QueryId, term: String, tcf: u64) -> bool {
        let entry = self.terms.entry(qid).or_default();
        if entry.iter().any(|(t, _)| *t == term) {
            return false;
        }
        entry.push((term, tcf));
        true
    }

    pub fn terms(&self, qid: &QueryId) -> Option<&[(String, u64)]> {
        self.terms.get(qid).map(Vec::as_slice)
    }

    pub fn queries(&self) -> impl Iterator<Item = &QueryId> {
        self.terms.keys()
    }

    pub fn query_id_set(&self) -> BTreeSet<QueryId> {
        self.terms.keys().cloned().collect()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of query terms with nonzero corpus frequency.
    ///
    /// Errors if the query is absent or if no term has tcf > 0 (the
    /// normalizer would be a division by zero).
    pub fn effective_term_count(&self, qid: &QueryId) -> Result<usize, TermStatsError> {
        let terms = self
            .terms
            .get(qid)
            .ok_or_else(|| TermStatsError::MissingQuery(qid.to_string()))?;
        let n = terms.iter().filter(|(_, tcf)| *tcf > 0).count();
        if n == 0 {
            return Err(TermStatsError::DegenerateQuery(qid.to_string()));
        }
        Ok(n)
    }
}

/// Query-vs-whole-corpus retrieval scores, ingested via sidecar file.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct CorpusScoreTable {
    scores: BTreeMap<QueryId, f64>,
}

impl CorpusScoreTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns false if the query already had a score.
    pub fn insert(&mut self, qid: QueryId, score: f64) -> bool {
        self.scores.insert(qid, score).is_none()
    }

    pub fn score(&self, qid: &QueryId) -> Option<f64> {
        self.scores.get(qid).copied()
    }

    pub fn query_id_set(&self) -> BTreeSet<QueryId> {
        self.scores.keys().cloned().collect()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }
}

/// Query-indexed effectiveness measure values, all in [0, 1].
#[derive(Debug, Clone, PartialEq)]
pub struct EvalTable {
    measures: Vec<String>,
    rows: BTreeMap<QueryId, Vec<f64>>,
}

impl EvalTable {
    pub fn new(measures: Vec<String>) -> Result<Self, TableError> {
        let mut seen = BTreeSet::new();
        for m in &measures {
            if !seen.insert(m.clone()) {
                return Err(TableError::DuplicateColumn(m.clone()));
            }
        }
        Ok(Self {
            measures,
            rows: BTreeMap::new(),
        })
    }

    pub fn insert_row(&mut self, qid: QueryId, values: Vec<f64>) -> Result<bool, TableError> {
        if values.len() != self.measures.len() {
            return Err(TableError::RowWidthMismatch {
                query: qid.to_string(),
                expected: self.measures.len(),
                got: values.len(),
            });
        }
        debug_assert!(values.iter().all(|v| (0.0..=1.0).contains(v)));
        Ok(self.rows.insert(qid, values).is_none())
    }

    pub fn measures(&self) -> &[String] {
        &self.measures
    }

    pub fn queries(&self) -> impl Iterator<Item = &QueryId> {
        self.rows.keys()
    }

    pub fn query_id_set(&self) -> BTreeSet<QueryId> {
        self.rows.keys().cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn row(&self, qid: &QueryId) -> Option<&[f64]> {
        self.rows.get(qid).map(Vec::as_slice)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&QueryId, &[f64])> {
        self.rows.iter().map(|(q, v)| (q, v.as_slice()))
    }

    pub fn column(&self, measure: &str) -> Result<BTreeMap<QueryId, f64>, TableError> {
        let idx = self
            .measures
            .iter()
            .position(|m| m == measure)
            .ok_or_else(|| TableError::NoColumn(measure.to_owned()))?;
        Ok(self
            .rows
            .iter()
            .map(|(q, v)| (q.clone(), v[idx]))
            .collect())
    }

    /// Mean of each measure column, accumulated in sorted query order.
    pub fn means(&self) -> Vec<f64> {
        let n = self.rows.len();
        if n == 0 {
            return alloc::vec![0.0; self.measures.len()];
        }
        let mut sums = alloc::vec![0.0f64; self.measures.len()];
        for values in self.rows.values() {
            for (s, v) in sums.iter_mut().zip(values) {
                *s += v;
            }
        }
        sums.iter().map(|s| s / n as f64).collect()
    }
}

/// Accumulates non-fatal diagnostics raised while parsing or computing.
///
/// The core crate never writes to a log; callers decide where warnings go.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Warnings(Vec<String>);

impl Warnings {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, message: String) {
        self.0.push(message);
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(String::as_str)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn qid(s: &str) -> QueryId {
        QueryId::new(s).unwrap()
    }

    #[test]
    fn query_id_rejects_empty_and_whitespace() {
        assert_eq!(QueryId::new(""), Err(InvalidQueryId::Empty));
        assert!(matches!(
            QueryId::new("a b"),
            Err(InvalidQueryId::Whitespace(_))
        ));
        assert_eq!(qid("q1").as_str(), "q1");
    }

    #[test]
    fn run_set_sorts_by_score_then_doc_id() {
        let mut raw = BTreeMap::new();
        raw.insert(
            qid("q1"),
            vec![
                ("dB".to_string(), 2.0),
                ("dC".to_string(), 3.5),
                ("dA".to_string(), 3.5),
            ],
        );
        let run = RunSet::from_raw("sys", raw);
        let ranking = run.ranking(&qid("q1")).unwrap();
        let ids: Vec<&str> = ranking.iter().map(|e| e.doc_id.as_str()).collect();
        assert_eq!(ids, ["dA", "dC", "dB"]);
        let ranks: Vec<u32> = ranking.iter().map(|e| e.rank).collect();
        assert_eq!(ranks, [1, 2, 3]);
    }

    #[test]
    fn feature_table_rejects_duplicate_columns() {
        let err = FeatureTable::new(
            vec!["A".to_string(), "A".to_string()],
            Provenance::Ingested,
        )
        .unwrap_err();
        assert_eq!(err, TableError::DuplicateColumn("A".to_string()));
    }

    #[test]
    fn feature_table_merge_intersects_and_warns() {
        let mut a = FeatureTable::new(vec!["X".to_string()], Provenance::Computed).unwrap();
        a.insert_row(qid("q1"), vec![1.0]).unwrap();
        a.insert_row(qid("q2"), vec![2.0]).unwrap();
        let mut b = FeatureTable::new(vec!["Y".to_string()], Provenance::Ingested).unwrap();
        b.insert_row(qid("q1"), vec![9.0]).unwrap();

        let mut warnings = Warnings::new();
        let merged = a.merge(&b, "a", "b", &mut warnings).unwrap();
        assert_eq!(merged.columns(), ["X", "Y"]);
        assert_eq!(merged.row(&qid("q1")).unwrap(), [1.0, 9.0]);
        assert_eq!(merged.len(), 1);
        assert_eq!(warnings.len(), 1);
        assert!(warnings.iter().next().unwrap().contains("q2"));
    }

    #[test]
    fn feature_table_merge_conflict() {
        let a = FeatureTable::new(vec!["X".to_string()], Provenance::Computed).unwrap();
        let b = FeatureTable::new(vec!["X".to_string()], Provenance::Ingested).unwrap();
        let mut warnings = Warnings::new();
        assert_eq!(
            a.merge(&b, "a", "b", &mut warnings).unwrap_err(),
            TableError::DuplicateColumn("X".to_string())
        );
    }

    #[test]
    fn effective_term_count_follows_tcf() {
        let mut stats = QueryTermStats::new();
        stats.insert(qid("q1"), "foo".to_string(), 10);
        stats.insert(qid("q1"), "zzz".to_string(), 0);
        assert_eq!(stats.effective_term_count(&qid("q1")).unwrap(), 1);

        let mut all = QueryTermStats::new();
        all.insert(qid("q"), "a".to_string(), 3);
        all.insert(qid("q"), "b".to_string(), 7);
        all.insert(qid("q"), "c".to_string(), 1);
        assert_eq!(all.effective_term_count(&qid("q")).unwrap(), 3);

        let mut degenerate = QueryTermStats::new();
        degenerate.insert(qid("q"), "a".to_string(), 0);
        assert!(matches!(
            degenerate.effective_term_count(&qid("q")),
            Err(TermStatsError::DegenerateQuery(_))
        ));
        assert!(matches!(
            degenerate.effective_term_count(&qid("other")),
            Err(TermStatsError::MissingQuery(_))
        ));
    }

    #[test]
    fn eval_table_means_per_measure() {
        let mut t = EvalTable::new(vec!["NDCG".to_string(), "MAP".to_string()]).unwrap();
        t.insert_row(qid("q1"), vec![1.0, 0.5]).unwrap();
        t.insert_row(qid("q2"), vec![0.0, 0.5]).unwrap();
        assert_eq!(t.means(), vec![0.5, 0.5]);
    }
}
