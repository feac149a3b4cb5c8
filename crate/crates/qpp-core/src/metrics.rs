//! Per-query retrieval effectiveness measures: NDCG, MAP, P@k, MRR@k.
//!
//! Conventions: NDCG uses gain = raw relevance grade and discount
//! 1/log2(rank+1), normalized by the ideal DCG over all judged relevant
//! documents at the same cutoff. MAP, P@k and MRR@k use binary relevance
//! (grade > 0). A query with no relevant document in the qrels scores 0 on
//! every measure, with a warning, so eval rows stay aligned with feature
//! rows.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::parse::{align_queries, AlignError};
use crate::types::{EvalTable, QrelsSet, QueryId, RunEntry, RunSet, Warnings};

/// An effectiveness measure with its cutoff, parsed from names like
/// `ndcg`, `ndcg@20`, `map`, `p@10`, `mrr@10`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Measure {
    /// Full-depth by default; `Some(k)` evaluates NDCG@k.
    Ndcg(Option<usize>),
    Map,
    PrecisionAt(usize),
    MrrAt(usize),
}

impl Measure {
    /// The conventional set reported in the summary tables.
    pub fn default_set() -> Vec<Measure> {
        alloc::vec![
            Measure::Ndcg(None),
            Measure::Map,
            Measure::PrecisionAt(10),
            Measure::MrrAt(10),
        ]
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Measure::Ndcg(None) => write!(f, "NDCG"),
            Measure::Ndcg(Some(k)) => write!(f, "NDCG@{k}"),
            Measure::Map => write!(f, "MAP"),
            Measure::PrecisionAt(k) => write!(f, "P@{k}"),
            Measure::MrrAt(k) => write!(f, "MRR@{k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownMeasure(pub String);

impl fmt::Display for UnknownMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown measure {:?} (expected ndcg[@k], map, p@k, or mrr@k)",
            self.0
        )
    }
}

impl core::error::Error for UnknownMeasure {}

impl FromStr for Measure {
    type Err = UnknownMeasure;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_lowercase();
        let (name, cutoff) = match lower.split_once('@') {
            Some((n, k)) => {
                let k: usize = k.parse().map_err(|_| UnknownMeasure(s.to_string()))?;
                if k == 0 {
                    return Err(UnknownMeasure(s.to_string()));
                }
                (n, Some(k))
            }
            None => (lower.as_str(), None),
        };
        match (name, cutoff) {
            ("ndcg", c) => Ok(Measure::Ndcg(c)),
            ("map", None) => Ok(Measure::Map),
            ("p", Some(k)) => Ok(Measure::PrecisionAt(k)),
            ("mrr", Some(k)) => Ok(Measure::MrrAt(k)),
            _ => Err(UnknownMeasure(s.to_string())),
        }
    }
}

fn grade_of(judgments: &BTreeMap<String, u32>, doc_id: &str) -> u32 {
    judgments.get(doc_id).copied().unwrap_or(0)
}

fn log2(x: f64) -> f64 {
    libm::log2(x)
}

/// Discounted cumulative gain of a grade sequence in ranked order.
fn dcg(grades: impl Iterator<Item = u32>) -> f64 {
    grades
        .enumerate()
        .map(|(i, g)| g as f64 / log2(i as f64 + 2.0))
        .sum()
}

/// Normalized DCG at an optional cutoff. Returns 0 with a warning when the
/// query has no relevant document.
pub fn ndcg(
    ranking: &[RunEntry],
    judgments: &BTreeMap<String, u32>,
    cutoff: Option<usize>,
    qid: &QueryId,
    warnings: &mut Warnings,
) -> f64 {
    let mut ideal: Vec<u32> = judgments.values().copied().filter(|g| *g > 0).collect();
    if ideal.is_empty() {
        warnings.push(format!("query {qid}: no relevant documents, NDCG = 0"));
        return 0.0;
    }
    ideal.sort_unstable_by(|a, b| b.cmp(a));
    let depth = cutoff.unwrap_or(usize::MAX);
    let actual = dcg(
        ranking
            .iter()
            .take(depth)
            .map(|e| grade_of(judgments, &e.doc_id)),
    );
    let best = dcg(ideal.into_iter().take(depth));
    actual / best
}

/// Mean over all relevant documents of the precision at each relevant
/// retrieved rank; unretrieved relevant documents contribute 0.
pub fn average_precision(
    ranking: &[RunEntry],
    judgments: &BTreeMap<String, u32>,
    qid: &QueryId,
    warnings: &mut Warnings,
) -> f64 {
    let total_relevant = judgments.values().filter(|g| **g > 0).count();
    if total_relevant == 0 {
        warnings.push(format!("query {qid}: no relevant documents, MAP = 0"));
        return 0.0;
    }
    let mut hits = 0usize;
    let mut sum = 0.0;
    for (i, entry) in ranking.iter().enumerate() {
        if grade_of(judgments, &entry.doc_id) > 0 {
            hits += 1;
            sum += hits as f64 / (i + 1) as f64;
        }
    }
    sum / total_relevant as f64
}

/// |relevant in top k| / k; a ranking shorter than k counts the missing
/// slots as non-relevant.
pub fn precision_at(ranking: &[RunEntry], judgments: &BTreeMap<String, u32>, k: usize) -> f64 {
    debug_assert!(k > 0);
    let hits = ranking
        .iter()
        .take(k)
        .filter(|e| grade_of(judgments, &e.doc_id) > 0)
        .count();
    hits as f64 / k as f64
}

/// Reciprocal rank of the first relevant document within the top k, or 0.
pub fn mrr_at(ranking: &[RunEntry], judgments: &BTreeMap<String, u32>, k: usize) -> f64 {
    debug_assert!(k > 0);
    ranking
        .iter()
        .take(k)
        .position(|e| grade_of(judgments, &e.doc_id) > 0)
        .map_or(0.0, |i| 1.0 / (i + 1) as f64)
}

/// All requested measures for one query's ranking.
pub fn evaluate_query(
    ranking: &[RunEntry],
    judgments: &BTreeMap<String, u32>,
    measures: &[Measure],
    qid: &QueryId,
    warnings: &mut Warnings,
) -> Vec<f64> {
    measures
        .iter()
        .map(|m| match m {
            Measure::Ndcg(cutoff) => ndcg(ranking, judgments, *cutoff, qid, warnings),
            Measure::Map => average_precision(ranking, judgments, qid, warnings),
            Measure::PrecisionAt(k) => precision_at(ranking, judgments, *k),
            Measure::MrrAt(k) => mrr_at(ranking, judgments, *k),
        })
        .collect()
}

static EMPTY_JUDGMENTS: BTreeMap<String, u32> = BTreeMap::new();

/// Evaluates a run against qrels over the aligned query set.
pub fn evaluate_run(
    run: &RunSet,
    qrels: &QrelsSet,
    measures: &[Measure],
    warnings: &mut Warnings,
) -> Result<EvalTable, AlignError> {
    let aligned = align_queries(run, qrels, &[], warnings)?;
    let names: Vec<String> = measures.iter().map(|m| m.to_string()).collect();
    let mut table = EvalTable::new(names).expect("measure names are distinct");
    for qid in &aligned {
        let ranking = run.ranking(qid).expect("aligned query present in run");
        let judgments = qrels.judged(qid).unwrap_or(&EMPTY_JUDGMENTS);
        let row = evaluate_query(ranking, judgments, measures, qid, warnings);
        table
            .insert_row(qid.clone(), row)
            .expect("aligned queries are unique");
    }
    Ok(table)
}
