//! Parsers for the external text formats and query-set alignment.
//!
//! Formats (one record per line, LF or CRLF, ASCII/UTF-8):
//!
//! - run:           `<qid> <ignored> <docid> <rank> <score> <tag>`, any run
//!   of spaces/tabs as separator
//! - qrels:         `<qid> <ignored> <docid> <grade>`
//! - feature table: tab-separated, first line is a header whose first
//!   column names the query-id column
//! - term stats:    `<qid>\t<term>\t<tcf>`
//! - corpus scores: `<qid>\t<score>`
//! - LETOR sidecar: `<qid>\t<docid>\t<feature>\t<value>`
//!
//! Lines that are empty or start with `#` are skipped everywhere, so files
//! produced by the toolkit (which carry a `#` provenance header) re-parse
//! cleanly. Reported line numbers are 1-based positions in the raw stream.

use alloc::borrow::ToOwned;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::types::{
    CorpusScoreTable, EvalTable, FeatureTable, Provenance, QrelsSet, QueryId, QueryTermStats,
    RunSet, Warnings,
};

#[derive(Debug, Clone, PartialEq)]
pub enum ParseError {
    /// Wrong field count or an unparsable field.
    Malformed {
        line: usize,
        reason: String,
    },
    DuplicateDocument {
        line: usize,
        query: String,
        doc_id: String,
    },
    DuplicatePair {
        line: usize,
        query: String,
        key: String,
    },
    DuplicateColumn {
        line: usize,
        column: String,
    },
    DuplicateQuery {
        line: usize,
        query: String,
    },
    RaggedRow {
        line: usize,
        expected: usize,
        got: usize,
    },
    Empty,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Malformed { line, reason } => write!(f, "line {line}: {reason}"),
            ParseError::DuplicateDocument { line, query, doc_id } => write!(
                f,
                "line {line}: document {doc_id} listed twice for query {query}"
            ),
            ParseError::DuplicatePair { line, query, key } => {
                write!(f, "line {line}: duplicate entry ({query}, {key})")
            }
            ParseError::DuplicateColumn { line, column } => {
                write!(f, "line {line}: duplicate column name {column:?}")
            }
            ParseError::DuplicateQuery { line, query } => {
                write!(f, "line {line}: duplicate row for query {query}")
            }
            ParseError::RaggedRow { line, expected, got } => write!(
                f,
                "line {line}: row has {got} value(s), header declares {expected}"
            ),
            ParseError::Empty => write!(f, "stream contains no records"),
        }
    }
}

impl core::error::Error for ParseError {}

/// Numbered data lines: skips empty lines and `#` comments.
fn data_lines(stream: &str) -> impl Iterator<Item = (usize, &str)> {
    stream
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
}

fn parse_qid(token: &str, line: usize) -> Result<QueryId, ParseError> {
    QueryId::new(token).map_err(|e| ParseError::Malformed {
        line,
        reason: e.to_string(),
    })
}

fn parse_f64(token: &str, what: &str, line: usize) -> Result<f64, ParseError> {
    token.parse::<f64>().map_err(|_| ParseError::Malformed {
        line,
        reason: format!("{what} {token:?} is not a number"),
    })
}

/// Parses a TREC-format run. The file's rank field is validated as an
/// integer and then discarded: entries are re-sorted by descending score
/// (ties by ascending doc id) and re-ranked 1..n. The run tag is taken
/// from the first data line.
pub fn parse_run(stream: &str) -> Result<RunSet, ParseError> {
    let mut raw: BTreeMap<QueryId, Vec<(String, f64)>> = BTreeMap::new();
    let mut seen: BTreeSet<(QueryId, String)> = BTreeSet::new();
    let mut run_tag: Option<String> = None;

    for (line, text) in data_lines(stream) {
        let fields: Vec<&str> = text.split_whitespace().collect();
        if fields.len() != 6 {
            return Err(ParseError::Malformed {
                line,
                reason: format!("expected 6 fields, found {}", fields.len()),
            });
        }
        let qid = parse_qid(fields[0], line)?;
        let doc_id = fields[2].to_owned();
        fields[3].parse::<i64>().map_err(|_| ParseError::Malformed {
            line,
            reason: format!("rank {:?} is not an integer", fields[3]),
        })?;
        let score = parse_f64(fields[4], "score", line)?;
        if !seen.insert((qid.clone(), doc_id.clone())) {
            return Err(ParseError::DuplicateDocument {
                line,
                query: qid.to_string(),
                doc_id,
            });
        }
        if run_tag.is_none() {
            run_tag = Some(fields[5].to_owned());
        }
        raw.entry(qid).or_default().push((doc_id, score));
    }

    match run_tag {
        Some(tag) => Ok(RunSet::from_raw(&tag, raw)),
        None => Err(ParseError::Empty),
    }
}

/// Renders a run set back to the TREC format (full-precision scores, so a
/// parse → render → parse round trip is the identity).
pub fn render_run(run: &RunSet) -> String {
    let mut out = String::new();
    for (qid, ranking) in run.iter() {
        for entry in ranking {
            out.push_str(&format!(
                "{qid} Q0 {} {} {} {}\n",
                entry.doc_id,
                entry.rank,
                entry.score,
                run.run_tag()
            ));
        }
    }
    out
}

/// Parses TREC qrels. Negative grades are clamped to 0 with a warning
/// (some qrels use -1 for judged non-relevant).
pub fn parse_qrels(stream: &str, warnings: &mut Warnings) -> Result<QrelsSet, ParseError> {
    let mut qrels = QrelsSet::new();
    for (line, text) in data_lines(stream) {
        let fields: Vec<&str> = text.split_whitespace().collect();
        if fields.len() != 4 {
            return Err(ParseError::Malformed {
                line,
                reason: format!("expected 4 fields, found {}", fields.len()),
            });
        }
        let qid = parse_qid(fields[0], line)?;
        let doc_id = fields[2].to_owned();
        let raw_grade = fields[3].parse::<i64>().map_err(|_| ParseError::Malformed {
            line,
            reason: format!("grade {:?} is not an integer", fields[3]),
        })?;
        let grade = if raw_grade < 0 {
            warnings.push(format!(
                "line {line}: negative grade {raw_grade} for ({qid}, {doc_id}) clamped to 0"
            ));
            0
        } else {
            raw_grade as u32
        };
        if !qrels.insert(qid.clone(), doc_id.clone(), grade) {
            return Err(ParseError::DuplicatePair {
                line,
                query: qid.to_string(),
                key: doc_id,
            });
        }
    }
    Ok(qrels)
}

/// Parses a tab-separated feature table with a header line. Ingested
/// provenance is recorded for every column.
pub fn parse_feature_table(stream: &str) -> Result<FeatureTable, ParseError> {
    let mut lines = data_lines(stream);
    let (header_line, header) = lines.next().ok_or(ParseError::Empty)?;
    let mut cols = header.split('\t');
    let _qid_col = cols.next().ok_or(ParseError::Malformed {
        line: header_line,
        reason: "empty header".to_string(),
    })?;
    let columns: Vec<String> = cols.map(str::to_owned).collect();
    if columns.is_empty() {
        return Err(ParseError::Malformed {
            line: header_line,
            reason: "header declares no feature columns".to_string(),
        });
    }
    let mut seen = BTreeSet::new();
    for c in &columns {
        if !seen.insert(c.clone()) {
            return Err(ParseError::DuplicateColumn {
                line: header_line,
                column: c.clone(),
            });
        }
    }

    let mut table = FeatureTable::new(columns.clone(), Provenance::Ingested)
        .expect("column uniqueness already checked");
    for (line, text) in lines {
        let fields: Vec<&str> = text.split('\t').collect();
        if fields.len() != columns.len() + 1 {
            return Err(ParseError::RaggedRow {
                line,
                expected: columns.len() + 1,
                got: fields.len(),
            });
        }
        let qid = parse_qid(fields[0], line)?;
        let values = fields[1..]
            .iter()
            .map(|t| parse_f64(t, "cell", line))
            .collect::<Result<Vec<f64>, _>>()?;
        if !table.insert_row(qid.clone(), values).expect("width checked") {
            return Err(ParseError::DuplicateQuery {
                line,
                query: qid.to_string(),
            });
        }
    }
    Ok(table)
}

/// Renders a feature table to its TSV form (full precision).
pub fn render_feature_table(table: &FeatureTable) -> String {
    let mut out = String::from("qid");
    for c in table.columns() {
        out.push('\t');
        out.push_str(c);
    }
    out.push('\n');
    for (qid, values) in table.iter() {
        out.push_str(qid.as_str());
        for v in values {
            out.push_str(&format!("\t{v}"));
        }
        out.push('\n');
    }
    out
}

/// Parses an eval table: same shape as a feature table, but values must lie
/// in [0, 1] and a trailing `MEAN` summary row is recognized and skipped.
pub fn parse_eval_table(stream: &str) -> Result<EvalTable, ParseError> {
    let mut lines = data_lines(stream);
    let (header_line, header) = lines.next().ok_or(ParseError::Empty)?;
    let columns: Vec<String> = header.split('\t').skip(1).map(str::to_owned).collect();
    if columns.is_empty() {
        return Err(ParseError::Malformed {
            line: header_line,
            reason: "header declares no measure columns".to_string(),
        });
    }
    let mut table = EvalTable::new(columns.clone()).map_err(|_| ParseError::DuplicateColumn {
        line: header_line,
        column: "?".to_string(),
    })?;
    for (line, text) in lines {
        let fields: Vec<&str> = text.split('\t').collect();
        if fields.len() != columns.len() + 1 {
            return Err(ParseError::RaggedRow {
                line,
                expected: columns.len() + 1,
                got: fields.len(),
            });
        }
        if fields[0] == "MEAN" {
            continue;
        }
        let qid = parse_qid(fields[0], line)?;
        let values = fields[1..]
            .iter()
            .map(|t| parse_f64(t, "cell", line))
            .collect::<Result<Vec<f64>, _>>()?;
        if let Some(bad) = values.iter().find(|v| !(0.0..=1.0).contains(*v)) {
            return Err(ParseError::Malformed {
                line,
                reason: format!("measure value {bad} outside [0, 1]"),
            });
        }
        if !table.insert_row(qid.clone(), values).expect("width checked") {
            return Err(ParseError::DuplicateQuery {
                line,
                query: qid.to_string(),
            });
        }
    }
    Ok(table)
}

/// Renders an eval table with a trailing MEAN row.
pub fn render_eval_table(table: &EvalTable) -> String {
    let mut out = String::from("qid");
    for m in table.measures() {
        out.push('\t');
        out.push_str(m);
    }
    out.push('\n');
    for (qid, values) in table.iter() {
        out.push_str(qid.as_str());
        for v in values {
            out.push_str(&format!("\t{v}"));
        }
        out.push('\n');
    }
    out.push_str("MEAN");
    for m in table.means() {
        out.push_str(&format!("\t{m}"));
    }
    out.push('\n');
    out
}

/// Parses per-query term statistics: `<qid>\t<term>\t<tcf>` lines, no
/// header. An empty stream is a valid, empty statistics set.
pub fn parse_query_term_stats(stream: &str) -> Result<QueryTermStats, ParseError> {
    let mut stats = QueryTermStats::new();
    for (line, text) in data_lines(stream) {
        let fields: Vec<&str> = text.split('\t').collect();
        if fields.len() != 3 {
            return Err(ParseError::Malformed {
                line,
                reason: format!("expected 3 tab-separated fields, found {}", fields.len()),
            });
        }
        let qid = parse_qid(fields[0], line)?;
        let term = fields[1].to_owned();
        let tcf = fields[2].parse::<i64>().map_err(|_| ParseError::Malformed {
            line,
            reason: format!("tcf {:?} is not an integer", fields[2]),
        })?;
        if tcf < 0 {
            return Err(ParseError::Malformed {
                line,
                reason: format!("tcf {tcf} is negative"),
            });
        }
        if !stats.insert(qid.clone(), term.clone(), tcf as u64) {
            return Err(ParseError::DuplicatePair {
                line,
                query: qid.to_string(),
                key: term,
            });
        }
    }
    Ok(stats)
}

/// Parses corpus scores: `<qid>\t<score>` lines, no header. Scores must be
/// finite.
pub fn parse_corpus_scores(stream: &str) -> Result<CorpusScoreTable, ParseError> {
    let mut table = CorpusScoreTable::new();
    for (line, text) in data_lines(stream) {
        let fields: Vec<&str> = text.split('\t').collect();
        if fields.len() != 2 {
            return Err(ParseError::Malformed {
                line,
                reason: format!("expected 2 tab-separated fields, found {}", fields.len()),
            });
        }
        let qid = parse_qid(fields[0], line)?;
        let score = parse_f64(fields[1], "corpus score", line)?;
        if !score.is_finite() {
            return Err(ParseError::Malformed {
                line,
                reason: format!("corpus score {score} is not finite"),
            });
        }
        if !table.insert(qid.clone(), score) {
            return Err(ParseError::DuplicateQuery {
                line,
                query: qid.to_string(),
            });
        }
    }
    Ok(table)
}

/// Raw per-document matching scores from a LETOR sidecar, keyed by
/// feature name, then query, then document.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct LetorSidecar {
    values: BTreeMap<String, BTreeMap<QueryId, BTreeMap<String, f64>>>,
}

impl LetorSidecar {
    pub fn feature_names(&self) -> impl Iterator<Item = &str> {
        self.values.keys().map(String::as_str)
    }

    pub fn value(&self, feature: &str, qid: &QueryId, doc_id: &str) -> Option<f64> {
        self.values
            .get(feature)
            .and_then(|per_q| per_q.get(qid))
            .and_then(|per_d| per_d.get(doc_id))
            .copied()
    }

    pub fn has_query(&self, feature: &str, qid: &QueryId) -> bool {
        self.values
            .get(feature)
            .is_some_and(|per_q| per_q.contains_key(qid))
    }
}

/// Parses a LETOR sidecar: `<qid>\t<docid>\t<feature>\t<value>` lines.
pub fn parse_letor_sidecar(stream: &str) -> Result<LetorSidecar, ParseError> {
    let mut sidecar = LetorSidecar::default();
    for (line, text) in data_lines(stream) {
        let fields: Vec<&str> = text.split('\t').collect();
        if fields.len() != 4 {
            return Err(ParseError::Malformed {
                line,
                reason: format!("expected 4 tab-separated fields, found {}", fields.len()),
            });
        }
        let qid = parse_qid(fields[0], line)?;
        let doc_id = fields[1].to_owned();
        let feature = fields[2].to_owned();
        let value = parse_f64(fields[3], "value", line)?;
        let slot = sidecar
            .values
            .entry(feature.clone())
            .or_default()
            .entry(qid.clone())
            .or_default();
        if slot.insert(doc_id.clone(), value).is_some() {
            return Err(ParseError::DuplicatePair {
                line,
                query: qid.to_string(),
                key: format!("{doc_id}/{feature}"),
            });
        }
    }
    Ok(sidecar)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlignError {
    /// No query appears in every input.
    EmptyIntersection,
}

impl fmt::Display for AlignError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlignError::EmptyIntersection => {
                write!(f, "no query is present in every input")
            }
        }
    }
}

impl core::error::Error for AlignError {}

/// Intersects the query sets of all inputs, sorted ascending. Emits one
/// warning per dropped query naming every input it is missing from.
pub fn align_queries(
    run: &RunSet,
    qrels: &QrelsSet,
    extras: &[(&str, BTreeSet<QueryId>)],
    warnings: &mut Warnings,
) -> Result<Vec<QueryId>, AlignError> {
    let mut sources: Vec<(&str, BTreeSet<QueryId>)> = Vec::with_capacity(extras.len() + 2);
    sources.push(("run", run.query_id_set()));
    sources.push(("qrels", qrels.query_id_set()));
    for (label, set) in extras {
        sources.push((label, set.clone()));
    }
    align_query_sets(&sources, warnings)
}

/// Intersection of arbitrary labeled query-id sets, with drop warnings.
pub fn align_query_sets(
    sources: &[(&str, BTreeSet<QueryId>)],
    warnings: &mut Warnings,
) -> Result<Vec<QueryId>, AlignError> {
    let mut union: BTreeSet<QueryId> = BTreeSet::new();
    for (_, set) in sources {
        union.extend(set.iter().cloned());
    }
    let mut aligned = Vec::new();
    for q in union {
        let missing: Vec<&str> = sources
            .iter()
            .filter(|(_, set)| !set.contains(&q))
            .map(|(label, _)| *label)
            .collect();
        if missing.is_empty() {
            aligned.push(q);
        } else {
            warnings.push(format!("query {q} dropped: missing from {}", missing.join(", ")));
        }
    }
    if aligned.is_empty() {
        return Err(AlignError::EmptyIntersection);
    }
    Ok(aligned)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn qid(s: &str) -> QueryId {
        QueryId::new(s).unwrap()
    }

    #[test]
    fn run_basic_and_resort() {
        let run = parse_run("q1 Q0 dA 1 3.5 sys\nq1 Q0 dB 2 2.0 sys\n").unwrap();
        let ranking = run.ranking(&qid("q1")).unwrap();
        assert_eq!(ranking[0].doc_id, "dA");
        assert_eq!(ranking[0].score, 3.5);
        assert_eq!(ranking[1].doc_id, "dB");
        assert_eq!(run.run_tag(), "sys");

        // permuted lines load to the same structure
        let permuted = parse_run("q1 Q0 dB 1 2.0 sys\nq1 Q0 dA 2 3.5 sys\n").unwrap();
        assert_eq!(run, permuted);
    }

    #[test]
    fn run_rejects_bad_rank_and_duplicates() {
        let err = parse_run("q1 Q0 dA one 3.5 sys\n").unwrap_err();
        assert!(matches!(err, ParseError::Malformed { line: 1, .. }));

        let err = parse_run("q1 Q0 dA 1 3.5 sys\nq1 Q0 dA 2 2.0 sys\n").unwrap_err();
        assert!(matches!(err, ParseError::DuplicateDocument { line: 2, .. }));

        let err = parse_run("q1 Q0 dA 1 sys\n").unwrap_err();
        assert!(matches!(err, ParseError::Malformed { .. }));
    }

    #[test]
    fn run_round_trip() {
        let run = parse_run("q2 Q0 dX 1 -1.25 tagA\nq1 Q0 dA 1 3.5 tagA\nq1 Q0 dB 2 2 tagA\n")
            .unwrap();
        let rendered = render_run(&run);
        let reparsed = parse_run(&rendered).unwrap();
        assert_eq!(run, reparsed);
    }

    #[test]
    fn run_skips_comments_and_blank_lines() {
        let run = parse_run("# header\n\nq1 Q0 dA 1 3.5 sys\n").unwrap();
        assert_eq!(run.len(), 1);
    }

    #[test]
    fn qrels_basic_and_clamp() {
        let mut w = Warnings::new();
        let q = parse_qrels("q1 0 dA 1\nq1 0 dB 0\n", &mut w).unwrap();
        assert_eq!(q.grade(&qid("q1"), "dA"), Some(1));
        assert_eq!(q.grade(&qid("q1"), "dB"), Some(0));
        assert!(w.is_empty());

        let q = parse_qrels("q1 0 dA -1\n", &mut w).unwrap();
        assert_eq!(q.grade(&qid("q1"), "dA"), Some(0));
        assert_eq!(w.len(), 1);
    }

    #[test]
    fn qrels_errors() {
        let mut w = Warnings::new();
        assert!(matches!(
            parse_qrels("q1 0 dA\n", &mut w),
            Err(ParseError::Malformed { line: 1, .. })
        ));
        assert!(matches!(
            parse_qrels("q1 0 dA 1\nq1 0 dA 0\n", &mut w),
            Err(ParseError::DuplicatePair { line: 2, .. })
        ));
    }

    #[test]
    fn feature_table_basic() {
        let t = parse_feature_table("qid\tBbi\nq1\t0.5\n").unwrap();
        assert_eq!(t.columns(), ["Bbi"]);
        assert_eq!(t.row(&qid("q1")).unwrap(), [0.5]);
        assert_eq!(t.provenance()[0], Provenance::Ingested);
    }

    #[test]
    fn feature_table_errors() {
        assert!(matches!(
            parse_feature_table("qid\tA\tA\nq1\t1\t2\n"),
            Err(ParseError::DuplicateColumn { line: 1, .. })
        ));
        assert!(matches!(
            parse_feature_table("qid\tA\nq1\t0.5\t0.6\n"),
            Err(ParseError::RaggedRow { line: 2, expected: 2, got: 3 })
        ));
        assert!(matches!(
            parse_feature_table("qid\tA\nq1\tx\n"),
            Err(ParseError::Malformed { line: 2, .. })
        ));
        assert!(matches!(
            parse_feature_table("qid\tA\nq1\t1\nq1\t2\n"),
            Err(ParseError::DuplicateQuery { line: 3, .. })
        ));
    }

    #[test]
    fn feature_table_round_trip() {
        let t = parse_feature_table("qid\tA\tB\nq1\t0.5\t-1.25\nq2\t0.125\t3\n").unwrap();
        let reparsed = parse_feature_table(&render_feature_table(&t)).unwrap();
        assert_eq!(t, reparsed);
    }

    #[test]
    fn eval_table_mean_row_is_skipped_and_range_checked() {
        let t = parse_eval_table("qid\tNDCG\nq1\t0.5\nMEAN\t0.5\n").unwrap();
        assert_eq!(t.len(), 1);
        assert!(matches!(
            parse_eval_table("qid\tNDCG\nq1\t1.5\n"),
            Err(ParseError::Malformed { line: 2, .. })
        ));
    }

    #[test]
    fn term_stats_basic() {
        let s = parse_query_term_stats("q1\tfoo\t10\nq1\tzzz\t0\n").unwrap();
        assert_eq!(
            s.terms(&qid("q1")).unwrap(),
            [("foo".to_string(), 10), ("zzz".to_string(), 0)]
        );
        assert!(parse_query_term_stats("").unwrap().is_empty());
        assert!(matches!(
            parse_query_term_stats("q1\tfoo\t-1\n"),
            Err(ParseError::Malformed { line: 1, .. })
        ));
        assert!(matches!(
            parse_query_term_stats("q1\tfoo\t1\nq1\tfoo\t2\n"),
            Err(ParseError::DuplicatePair { line: 2, .. })
        ));
    }

    #[test]
    fn corpus_scores_basic() {
        let t = parse_corpus_scores("q1\t2.5\nq2\t-0.5\n").unwrap();
        assert_eq!(t.score(&qid("q1")), Some(2.5));
        assert!(matches!(
            parse_corpus_scores("q1\tinf\n"),
            Err(ParseError::Malformed { .. })
        ));
        assert!(matches!(
            parse_corpus_scores("q1\t1\nq1\t2\n"),
            Err(ParseError::DuplicateQuery { .. })
        ));
    }

    #[test]
    fn letor_sidecar_basic() {
        let s = parse_letor_sidecar("q1\tdA\tL.BM25\t2.5\nq1\tdB\tL.BM25\t1.5\n").unwrap();
        assert_eq!(s.value("L.BM25", &qid("q1"), "dA"), Some(2.5));
        assert_eq!(s.value("L.BM25", &qid("q1"), "dZ"), None);
        assert!(matches!(
            parse_letor_sidecar("q1\tdA\tL.BM25\t2.5\nq1\tdA\tL.BM25\t1.0\n"),
            Err(ParseError::DuplicatePair { line: 2, .. })
        ));
    }

    #[test]
    fn align_intersection_and_warnings() {
        let run = parse_run("q1 Q0 dA 1 1.0 s\nq2 Q0 dA 1 1.0 s\n").unwrap();
        let mut w = Warnings::new();
        let qrels = parse_qrels("q1 0 dA 1\n", &mut w).unwrap();

        let mut w = Warnings::new();
        let aligned = align_queries(&run, &qrels, &[], &mut w).unwrap();
        assert_eq!(aligned, vec![qid("q1")]);
        assert_eq!(w.len(), 1);
        assert!(w.iter().next().unwrap().contains("q2"));
        assert!(w.iter().next().unwrap().contains("qrels"));

        let mut w = Warnings::new();
        let qrels2 = parse_qrels("q9 0 dA 1\n", &mut w).unwrap();
        let mut w = Warnings::new();
        assert_eq!(
            align_queries(&run, &qrels2, &[], &mut w),
            Err(AlignError::EmptyIntersection)
        );
    }
}
