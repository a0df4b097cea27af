//! Corpus parsing and author-credit scoring.
//!
//! A corpus is a UTF-8 CSV file with the exact header `paper_id,authors`.
//! Each data row names one paper and its authors in rank order, separated
//! by `|` inside a single CSV field:
//!
//! ```text
//! paper_id,authors
//! p1,alice|bob|carol
//! p2,"bob|dana"
//! ```
//!
//! Parsing is fail-fast: the first malformed row aborts with its 1-based
//! row number (the header is row 1). Scoring assigns each paper one unit of
//! credit, split by the selected scheme, and aggregates per author, so the
//! total credit in a report always equals the number of papers scored.

use std::cmp::Ordering;
use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::io::Read;

use serde_json::{json, Value};

use crate::error::{CorpusError, RecordError};
use crate::rational::Rational;
use crate::scheme::{Param, SchemeKind, SchemeSpec};
use crate::value::Scalar;
use crate::weights::weights_for_kind;

/// One paper: an identifier plus its authors in rank order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PublicationRecord {
    paper_id: String,
    authors: Vec<String>,
}

impl PublicationRecord {
    /// Validates that the id is non-empty and the author list is non-empty
    /// with no blank or repeated identifiers.
    pub fn new(paper_id: impl Into<String>, authors: Vec<String>) -> Result<Self, RecordError> {
        let paper_id = paper_id.into();
        if paper_id.is_empty() {
            return Err(RecordError::EmptyPaperId);
        }
        if authors.is_empty() {
            return Err(RecordError::NoAuthors);
        }
        let mut seen = HashSet::new();
        for author in &authors {
            if author.is_empty() {
                return Err(RecordError::EmptyAuthor);
            }
            if !seen.insert(author.as_str()) {
                return Err(RecordError::DuplicateAuthor(author.clone()));
            }
        }
        Ok(Self { paper_id, authors })
    }

    pub fn paper_id(&self) -> &str {
        &self.paper_id
    }

    pub fn authors(&self) -> &[String] {
        &self.authors
    }

    pub fn author_count(&self) -> usize {
        self.authors.len()
    }
}

/// Reads a corpus, stopping at the first malformed row or duplicate id.
pub fn parse_corpus<R: Read>(reader: R) -> Result<Vec<PublicationRecord>, CorpusError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .from_reader(reader);

    let header = reader.headers()?;
    if header.len() != 2 || &header[0] != "paper_id" || &header[1] != "authors" {
        return Err(CorpusError::MalformedRow {
            row: 1,
            cause: "expected header `paper_id,authors`".to_string(),
        });
    }

    let mut seen_ids: HashSet<String> = HashSet::new();
    let mut records = Vec::new();
    for (index, row) in reader.records().enumerate() {
        let row = row?;
        let row_number = row.position().map_or(index as u64 + 2, |p| p.line());
        if row.len() != 2 {
            return Err(CorpusError::MalformedRow {
                row: row_number,
                cause: format!("expected 2 columns, got {}", row.len()),
            });
        }
        let authors = row[1].split('|').map(str::to_string).collect();
        let record = PublicationRecord::new(&row[0], authors).map_err(|e| {
            CorpusError::MalformedRow {
                row: row_number,
                cause: e.to_string(),
            }
        })?;
        if !seen_ids.insert(record.paper_id.clone()) {
            return Err(CorpusError::DuplicatePaperId {
                id: record.paper_id,
                row: row_number,
            });
        }
        records.push(record);
    }
    Ok(records)
}

/// One author's aggregate standing in a corpus.
#[derive(Clone, Debug, PartialEq)]
pub struct CreditEntry<T> {
    pub author_id: String,
    pub total_credit: T,
    pub paper_count: usize,
}

/// Per-author credit totals under one scheme, ordered by credit descending
/// and author id ascending within ties.
#[derive(Clone, Debug, PartialEq)]
pub struct AuthorCreditReport<T> {
    scheme: SchemeSpec,
    papers: usize,
    entries: Vec<CreditEntry<T>>,
}

impl<T> AuthorCreditReport<T> {
    pub fn scheme(&self) -> &SchemeSpec {
        &self.scheme
    }

    /// The number of papers scored.
    pub fn papers(&self) -> usize {
        self.papers
    }

    pub fn entries(&self) -> &[CreditEntry<T>] {
        &self.entries
    }
}

impl<T: Scalar> AuthorCreditReport<T> {
    /// The sum of all authors' credit; equals the paper count when credit
    /// is conserved.
    pub fn total_credit(&self) -> T {
        self.entries
            .iter()
            .fold(T::zero(), |acc, e| acc + e.total_credit.clone())
    }

    /// Tab-separated table with a `author_id\ttotal_credit\tpaper_count`
    /// header row.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("author_id\ttotal_credit\tpaper_count\n");
        for entry in &self.entries {
            out.push_str(&format!(
                "{}\t{}\t{}\n",
                entry.author_id,
                entry.total_credit.render(),
                entry.paper_count
            ));
        }
        out
    }

    /// JSON object carrying the scheme provenance and all entries.
    pub fn to_json_value(&self) -> Value {
        json!({
            "scheme": self.scheme.to_json_value(),
            "papers": self.papers,
            "entries": self.entries.iter().map(|e| json!({
                "author_id": e.author_id,
                "total_credit": e.total_credit.to_json(),
                "paper_count": e.paper_count,
            })).collect::<Vec<_>>(),
        })
    }
}

/// A credit report in either arithmetic mode.
#[derive(Clone, Debug, PartialEq)]
pub enum CreditReport {
    Exact(AuthorCreditReport<Rational>),
    Real(AuthorCreditReport<f64>),
}

impl CreditReport {
    pub fn scheme(&self) -> &SchemeSpec {
        match self {
            CreditReport::Exact(r) => r.scheme(),
            CreditReport::Real(r) => r.scheme(),
        }
    }

    pub fn papers(&self) -> usize {
        match self {
            CreditReport::Exact(r) => r.papers(),
            CreditReport::Real(r) => r.papers(),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, CreditReport::Exact(_))
    }

    pub fn as_exact(&self) -> Option<&AuthorCreditReport<Rational>> {
        match self {
            CreditReport::Exact(r) => Some(r),
            CreditReport::Real(_) => None,
        }
    }

    pub fn as_real(&self) -> Option<&AuthorCreditReport<f64>> {
        match self {
            CreditReport::Real(r) => Some(r),
            CreditReport::Exact(_) => None,
        }
    }

    pub fn to_tsv(&self) -> String {
        match self {
            CreditReport::Exact(r) => r.to_tsv(),
            CreditReport::Real(r) => r.to_tsv(),
        }
    }

    pub fn to_json_value(&self) -> Value {
        match self {
            CreditReport::Exact(r) => r.to_json_value(),
            CreditReport::Real(r) => r.to_json_value(),
        }
    }
}

/// Scores a corpus under one scheme.
///
/// Papers are processed in ascending `paper_id` order regardless of input
/// order, which fixes the floating-point summation order; with unique ids
/// the report is therefore byte-reproducible across runs and input
/// shufflings. Records are assumed well-formed (see
/// [`PublicationRecord::new`] and [`parse_corpus`]).
pub fn score_corpus(
    records: &[PublicationRecord],
    spec: &SchemeSpec,
) -> Result<CreditReport, CorpusError> {
    match spec.x() {
        Some(Param::Real(v)) => Ok(CreditReport::Real(score_with(
            records,
            spec.kind(),
            Some(*v),
            spec.clone(),
        )?)),
        Some(Param::Exact(r)) => Ok(CreditReport::Exact(score_with(
            records,
            spec.kind(),
            Some(r.clone()),
            spec.clone(),
        )?)),
        None => Ok(CreditReport::Exact(score_with(
            records,
            spec.kind(),
            None,
            spec.clone(),
        )?)),
    }
}

fn score_with<T: Scalar>(
    records: &[PublicationRecord],
    kind: SchemeKind,
    x: Option<T>,
    scheme: SchemeSpec,
) -> Result<AuthorCreditReport<T>, CorpusError> {
    let mut ordered: Vec<&PublicationRecord> = records.iter().collect();
    ordered.sort_by(|a, b| a.paper_id.cmp(&b.paper_id));

    let mut weights_by_count: HashMap<usize, Vec<T>> = HashMap::new();
    let mut tally: BTreeMap<String, (T, usize)> = BTreeMap::new();
    for record in ordered {
        let k = record.author_count();
        let weights = match weights_by_count.entry(k) {
            Entry::Occupied(cached) => cached.into_mut(),
            Entry::Vacant(slot) => {
                let vector = weights_for_kind(kind, x.clone(), k)?;
                slot.insert(vector.into_weights())
            }
        };
        for (position, author) in record.authors.iter().enumerate() {
            let slot = tally
                .entry(author.clone())
                .or_insert_with(|| (T::zero(), 0));
            slot.0 = slot.0.clone() + weights[position].clone();
            slot.1 += 1;
        }
    }

    let mut entries: Vec<CreditEntry<T>> = tally
        .into_iter()
        .map(|(author_id, (total_credit, paper_count))| CreditEntry {
            author_id,
            total_credit,
            paper_count,
        })
        .collect();
    entries.sort_by(|a, b| {
        b.total_credit
            .partial_cmp(&a.total_credit)
            .unwrap_or(Ordering::Equal)
            .then_with(|| a.author_id.cmp(&b.author_id))
    });

    Ok(AuthorCreditReport {
        scheme,
        papers: records.len(),
        entries,
    })
}
