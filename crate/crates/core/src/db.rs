//! Append-only store of quaternary code records, classification of Lee
//! records against an ingestible best-known-binary-codes table, and
//! in-process re-verification of claimed distances.
//!
//! Improvements never overwrite: each record is one immutable line in
//! the store file, and verification outcomes are appended as separate
//! events, so every previously written byte stays put.

use std::collections::BTreeMap;
use std::fmt;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Read, Seek, SeekFrom, Write};
use std::os::unix::io::AsRawFd;
use std::path::{Path, PathBuf};

use chrono::{DateTime, Utc};
use serde::{Deserialize, Serialize};

use crate::codes::{inverse_gray, Metric, QuaternaryCodeSet, Z4LinearCode, Z4Vector};
use crate::construct::{CyclicCodeSpec, QcSpec};
use crate::error::{Error, Result};

pub const STORE_SCHEMA: &str = "z4db";
pub const STORE_VERSION: u32 = 1;

/// How a stored code was built; carries the full generator data needed
/// to rebuild it and recompute its distance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Construction {
    Cyclic {
        n: usize,
        f: crate::algebra::Z4Poly,
        g: crate::algebra::Z4Poly,
        h: crate::algebra::Z4Poly,
    },
    Qc {
        m: usize,
        p: crate::algebra::Z4Poly,
        multipliers: Vec<crate::algebra::Z4Poly>,
    },
    GcsMatrix {
        rows: Vec<Z4Vector>,
    },
    InverseGray {
        length: usize,
        words: Vec<String>,
    },
    RawMatrix {
        rows: Vec<Z4Vector>,
    },
}

/// A rebuilt construction: either a linear code or a plain word set.
pub enum RebuiltCode {
    Linear(Z4LinearCode),
    Set(QuaternaryCodeSet),
}

impl Construction {
    /// Rebuilds the code object. Fails with a reason when the
    /// descriptor carries no reconstructible data.
    pub fn rebuild(&self) -> Result<RebuiltCode> {
        match self {
            Construction::Cyclic { n, f, g, h } => {
                let spec = CyclicCodeSpec::new(*n, f.clone(), g.clone(), h.clone())?;
                Ok(RebuiltCode::Linear(spec.code()))
            }
            Construction::Qc { m, p, multipliers } => {
                let spec = QcSpec::new(*m, p.clone(), multipliers.clone())?;
                Ok(RebuiltCode::Linear(spec.build()))
            }
            Construction::GcsMatrix { rows } | Construction::RawMatrix { rows } => {
                if rows.is_empty() {
                    return Err(Error::BadDescriptor("no generator rows stored".into()));
                }
                Ok(RebuiltCode::Linear(Z4LinearCode::from_rows(rows.clone())?))
            }
            Construction::InverseGray { length, words } => {
                if words.is_empty() {
                    return Err(Error::BadDescriptor("no codewords stored".into()));
                }
                let parsed = words
                    .iter()
                    .map(|w| parse_bits(w))
                    .collect::<Result<std::collections::BTreeSet<_>>>()?;
                Ok(RebuiltCode::Set(inverse_gray(*length, &parsed)?))
            }
        }
    }

    /// Derives (n, k1, k2) when the descriptor carries enough data.
    pub fn derive_params(&self) -> Option<(usize, usize, usize)> {
        match self {
            Construction::Cyclic { .. } | Construction::Qc { .. } => match self.rebuild() {
                Ok(RebuiltCode::Linear(c)) => Some((c.length(), c.k1(), c.k2())),
                _ => None,
            },
            Construction::GcsMatrix { rows } | Construction::RawMatrix { rows } => {
                if rows.is_empty() {
                    None
                } else {
                    let c = Z4LinearCode::from_rows(rows.clone()).ok()?;
                    Some((c.length(), c.k1(), c.k2()))
                }
            }
            Construction::InverseGray { length, words } => {
                if words.is_empty() {
                    return None;
                }
                // size 4^k1 * 2^k2 read off the word count
                let size = words.len();
                if !size.is_power_of_two() {
                    return None;
                }
                let bits = size.trailing_zeros() as usize;
                Some((length / 2, bits / 2, bits % 2))
            }
        }
    }
}

fn parse_bits(s: &str) -> Result<Vec<u8>> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            _ => Err(Error::VectorParse {
                input: s.to_string(),
                reason: format!("invalid bit {c:?}"),
            }),
        })
        .collect()
}

/// One immutable database entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeRecord {
    pub id: String,
    pub n: usize,
    pub k1: usize,
    pub k2: usize,
    pub metric: Metric,
    pub d: u32,
    pub construction: Construction,
    pub linear: bool,
    pub source: String,
    pub created_at: DateTime<Utc>,
}

/// The latest verification state of a record, merged from appended
/// verification events.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum VerificationStatus {
    Unverified,
    Verified {
        at: DateTime<Utc>,
        recomputed_d: u32,
    },
    /// The recomputed distance disagrees with the claim. The record is
    /// kept, never deleted.
    Disputed {
        at: DateTime<Utc>,
        recomputed_d: u32,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct VerificationEvent {
    id: String,
    outcome: VerifyOutcome,
    recomputed_d: Option<u32>,
    reason: Option<String>,
    at: DateTime<Utc>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerifyOutcome {
    Verified,
    Disputed,
    Unverifiable,
}

/// A record together with its merged verification state.
#[derive(Clone, Debug, Serialize)]
pub struct StoredRecord {
    #[serde(flatten)]
    pub record: CodeRecord,
    pub verification: VerificationStatus,
}

impl StoredRecord {
    pub fn is_verified(&self) -> bool {
        matches!(self.verification, VerificationStatus::Verified { .. })
    }

    pub fn is_disputed(&self) -> bool {
        matches!(self.verification, VerificationStatus::Disputed { .. })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
enum LogLine {
    Record(CodeRecord),
    Verification(VerificationEvent),
}

#[derive(Serialize, Deserialize)]
struct Header {
    schema: String,
    version: u32,
}

/// Classification of a Lee-metric record against the best known binary
/// linear code of length 2n and dimension 2*k1 + k2: good beats it,
/// decent matches it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "kebab-case")]
pub enum Classification {
    Good,
    Decent,
    Other,
    Unclassified { reason: String },
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Good => write!(f, "good"),
            Classification::Decent => write!(f, "decent"),
            Classification::Other => write!(f, "other"),
            Classification::Unclassified { reason } => write!(f, "unclassified ({reason})"),
        }
    }
}

/// Classifies code parameters under the Lee metric. Non-Lee metrics
/// are stored and verified but never classified good/decent.
pub fn classify_params(
    n: usize,
    k1: usize,
    k2: usize,
    metric: Metric,
    d: u32,
    table: &BinaryRecordTable,
) -> Classification {
    if metric != Metric::Lee {
        return Classification::Unclassified {
            reason: format!("classification is defined for the lee metric, record is {metric}"),
        };
    }
    let (len, dim) = (2 * n as u32, (2 * k1 + k2) as u32);
    match table.get(len, dim) {
        None => Classification::Unclassified {
            reason: format!("no binary record for length {len}, dimension {dim}"),
        },
        Some(entry) => match d.cmp(&entry.distance) {
            std::cmp::Ordering::Greater => Classification::Good,
            std::cmp::Ordering::Equal => Classification::Decent,
            std::cmp::Ordering::Less => Classification::Other,
        },
    }
}

pub fn classify(rec: &CodeRecord, table: &BinaryRecordTable) -> Classification {
    classify_params(rec.n, rec.k1, rec.k2, rec.metric, rec.d, table)
}

/// One entry of the best-known binary linear code table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableEntry {
    pub distance: u32,
    pub provenance: String,
}

/// Map (length, dimension) -> best known binary linear minimum
/// distance, with per-entry provenance. File format: one
/// `length dimension distance provenance` line per entry, whitespace
/// separated, `#` starts a comment.
#[derive(Clone, Debug, Default)]
pub struct BinaryRecordTable {
    entries: BTreeMap<(u32, u32), TableEntry>,
    warnings: Vec<String>,
}

impl BinaryRecordTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// The table bundled with the crate: entries with published-record
    /// or brute-force-derived provenance only.
    pub fn bundled() -> Self {
        Self::parse(include_str!("../data/binary_records.txt"))
            .expect("bundled table parses")
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut fields = line.split_whitespace();
            let mut num = |name: &str| -> Result<u32> {
                fields
                    .next()
                    .ok_or_else(|| Error::TableParse {
                        line: idx + 1,
                        reason: format!("missing {name}"),
                    })?
                    .parse()
                    .map_err(|_| Error::TableParse {
                        line: idx + 1,
                        reason: format!("{name} is not a number"),
                    })
            };
            let length = num("length")?;
            let dimension = num("dimension")?;
            let distance = num("distance")?;
            let provenance = fields.collect::<Vec<_>>().join(" ");
            if provenance.is_empty() {
                return Err(Error::TableParse {
                    line: idx + 1,
                    reason: "missing provenance".into(),
                });
            }
            if dimension == 0 || length < dimension || distance == 0 {
                return Err(Error::TableParse {
                    line: idx + 1,
                    reason: format!(
                        "need length >= dimension >= 1 and distance >= 1, got {length} {dimension} {distance}"
                    ),
                });
            }
            entries.insert(
                (length, dimension),
                TableEntry {
                    distance,
                    provenance,
                },
            );
        }
        let warnings = monotonicity_warnings(&entries);
        Ok(BinaryRecordTable { entries, warnings })
    }

    pub fn get(&self, length: u32, dimension: u32) -> Option<&TableEntry> {
        self.entries.get(&(length, dimension))
    }

    pub fn insert(&mut self, length: u32, dimension: u32, distance: u32, provenance: &str) {
        self.entries.insert(
            (length, dimension),
            TableEntry {
                distance,
                provenance: provenance.to_string(),
            },
        );
        self.warnings = monotonicity_warnings(&self.entries);
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(u32, u32), &TableEntry)> {
        self.entries.iter()
    }

    /// Serializes in the file format; `parse` of the output is
    /// idempotent.
    pub fn to_file_string(&self) -> String {
        let mut out = String::from("# length dimension distance provenance\n");
        for ((len, dim), e) in &self.entries {
            out.push_str(&format!("{len} {dim} {} {}\n", e.distance, e.provenance));
        }
        out
    }
}

fn monotonicity_warnings(entries: &BTreeMap<(u32, u32), TableEntry>) -> Vec<String> {
    let mut warnings = Vec::new();
    for (&(len, dim), e) in entries {
        if let Some(next_dim) = entries.get(&(len, dim + 1)) {
            if next_dim.distance > e.distance {
                warnings.push(format!(
                    "d({len},{}) = {} exceeds d({len},{dim}) = {}",
                    dim + 1,
                    next_dim.distance,
                    e.distance
                ));
            }
        }
        if let Some(next_len) = entries.get(&(len + 1, dim)) {
            if next_len.distance < e.distance {
                warnings.push(format!(
                    "d({},{dim}) = {} is below d({len},{dim}) = {}",
                    len + 1,
                    next_len.distance,
                    e.distance
                ));
            }
        }
    }
    warnings
}

/// Loads a binary record table from a file path.
pub fn ingest_binary_table(path: &Path) -> Result<BinaryRecordTable> {
    BinaryRecordTable::from_path(path)
}

/// Filter for [`RecordStore::query`].
#[derive(Clone, Debug, Default)]
pub struct QueryFilter {
    pub n: Option<usize>,
    pub k1: Option<usize>,
    pub k2: Option<usize>,
    pub metric: Option<Metric>,
    /// Keep only the single best record (max d, earliest created).
    pub best_only: bool,
}

impl QueryFilter {
    fn matches(&self, rec: &CodeRecord) -> bool {
        self.n.is_none_or(|n| rec.n == n)
            && self.k1.is_none_or(|k| rec.k1 == k)
            && self.k2.is_none_or(|k| rec.k2 == k)
            && self.metric.is_none_or(|m| rec.metric == m)
    }
}

/// Options for record verification.
#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub jobs: usize,
    /// Codes above this many codewords are reported unverifiable
    /// rather than enumerated.
    pub max_size: u128,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            jobs: 1,
            max_size: 1 << 32,
        }
    }
}

/// Outcome of a verification run, also appended to the store.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub id: String,
    pub outcome: VerifyOutcome,
    pub claimed_d: u32,
    pub recomputed_d: Option<u32>,
    pub reason: Option<String>,
}

/// The append-only, file-backed record store. One JSON object per
/// line; the first line is a schema header. Writers append under an
/// exclusive advisory lock; existing lines are never rewritten.
pub struct RecordStore {
    path: PathBuf,
}

impl RecordStore {
    /// Opens a store, creating the file with a header if needed.
    pub fn open(path: &Path) -> Result<Self> {
        let mut file = OpenOptions::new()
            .read(true)
            .write(true)
            .create(true)
            .truncate(false)
            .open(path)?;
        let _lock = FlockGuard::exclusive(&file)?;
        let mut first = String::new();
        BufReader::new(&file).read_line(&mut first)?;
        if first.trim().is_empty() {
            file.seek(SeekFrom::End(0))?;
            let header = Header {
                schema: STORE_SCHEMA.into(),
                version: STORE_VERSION,
            };
            writeln!(file, "{}", serde_json::to_string(&header)?)?;
            file.sync_all()?;
        } else {
            let header: Header = serde_json::from_str(&first)
                .map_err(|e| Error::Store(format!("bad header line: {e}")))?;
            if header.schema != STORE_SCHEMA || header.version != STORE_VERSION {
                return Err(Error::Store(format!(
                    "unsupported store {}@{}",
                    header.schema, header.version
                )));
            }
        }
        Ok(RecordStore {
            path: path.to_path_buf(),
        })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    fn load(&self) -> Result<(Vec<CodeRecord>, Vec<VerificationEvent>)> {
        let file = File::open(&self.path)?;
        let _lock = FlockGuard::shared(&file)?;
        let mut text = String::new();
        BufReader::new(&file).read_to_string(&mut text)?;
        let mut records = Vec::new();
        let mut events = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            if idx == 0 || line.trim().is_empty() {
                continue;
            }
            let parsed: LogLine = serde_json::from_str(line)
                .map_err(|e| Error::Store(format!("line {}: {e}", idx + 1)))?;
            match parsed {
                LogLine::Record(r) => records.push(r),
                LogLine::Verification(v) => events.push(v),
            }
        }
        Ok((records, events))
    }

    fn append(&self, line: &LogLine) -> Result<()> {
        let mut file = OpenOptions::new().append(true).open(&self.path)?;
        let _lock = FlockGuard::exclusive(&file)?;
        writeln!(file, "{}", serde_json::to_string(line)?)?;
        file.sync_all()?;
        Ok(())
    }

    /// Appends a record. A missing id is assigned from a counter;
    /// duplicate ids and descriptors that contradict the stated
    /// parameters are rejected. Returns the id.
    pub fn add_record(&self, mut rec: CodeRecord) -> Result<String> {
        if let Some((n, k1, k2)) = rec.construction.derive_params() {
            if (rec.n, rec.k1, rec.k2) != (n, k1, k2) {
                return Err(Error::BadDescriptor(format!(
                    "declared parameters n={} k1={} k2={} but the construction gives n={n} k1={k1} k2={k2}",
                    rec.n, rec.k1, rec.k2
                )));
            }
        }
        let (records, _) = self.load()?;
        if rec.id.is_empty() {
            let mut seq = records.len() + 1;
            loop {
                let candidate = format!("z4-{seq:06}");
                if records.iter().all(|r| r.id != candidate) {
                    rec.id = candidate;
                    break;
                }
                seq += 1;
            }
        } else if records.iter().any(|r| r.id == rec.id) {
            return Err(Error::DuplicateId(rec.id));
        }
        let id = rec.id.clone();
        self.append(&LogLine::Record(rec))?;
        Ok(id)
    }

    fn merged(&self) -> Result<Vec<StoredRecord>> {
        let (records, events) = self.load()?;
        Ok(records
            .into_iter()
            .map(|record| {
                let verification = events
                    .iter()
                    .filter(|e| e.id == record.id)
                    .filter_map(|e| match e.outcome {
                        VerifyOutcome::Verified => Some(VerificationStatus::Verified {
                            at: e.at,
                            recomputed_d: e.recomputed_d.unwrap_or(record.d),
                        }),
                        VerifyOutcome::Disputed => Some(VerificationStatus::Disputed {
                            at: e.at,
                            recomputed_d: e.recomputed_d.unwrap_or(record.d),
                        }),
                        // unverifiable events leave the status unchanged
                        VerifyOutcome::Unverifiable => None,
                    })
                    .last()
                    .unwrap_or(VerificationStatus::Unverified);
                StoredRecord {
                    record,
                    verification,
                }
            })
            .collect())
    }

    pub fn get(&self, id: &str) -> Result<StoredRecord> {
        self.merged()?
            .into_iter()
            .find(|r| r.record.id == id)
            .ok_or_else(|| Error::UnknownId(id.to_string()))
    }

    /// Records matching the filter, sorted by (d descending,
    /// created-at ascending). Older superseded records stay visible
    /// unless `best_only` is set.
    pub fn query(&self, filter: &QueryFilter) -> Result<Vec<StoredRecord>> {
        let mut out: Vec<StoredRecord> = self
            .merged()?
            .into_iter()
            .filter(|r| filter.matches(&r.record))
            .collect();
        out.sort_by(|a, b| {
            b.record
                .d
                .cmp(&a.record.d)
                .then(a.record.created_at.cmp(&b.record.created_at))
        });
        if filter.best_only {
            out.truncate(1);
        }
        Ok(out)
    }

    /// The full chain of records for one parameter set, oldest first,
    /// including superseded entries.
    pub fn history(
        &self,
        n: usize,
        k1: usize,
        k2: usize,
        metric: Metric,
    ) -> Result<Vec<StoredRecord>> {
        let mut out: Vec<StoredRecord> = self
            .merged()?
            .into_iter()
            .filter(|r| {
                r.record.n == n && r.record.k1 == k1 && r.record.k2 == k2 && r.record.metric == metric
            })
            .collect();
        out.sort_by_key(|r| r.record.created_at);
        Ok(out)
    }

    /// Rebuilds the record's code from its construction descriptor,
    /// recomputes the minimum distance under the record's metric, and
    /// appends the outcome: verified on agreement, disputed on
    /// mismatch, unverifiable when the descriptor cannot be rebuilt
    /// (status unchanged in that case).
    pub fn verify_record(&self, id: &str, opts: &VerifyOptions) -> Result<VerifyReport> {
        let stored = self.get(id)?;
        let rec = &stored.record;
        let recomputed = rebuild_and_measure(rec, opts);
        let report = match recomputed {
            Ok(d) => VerifyReport {
                id: id.to_string(),
                outcome: if d == rec.d {
                    VerifyOutcome::Verified
                } else {
                    VerifyOutcome::Disputed
                },
                claimed_d: rec.d,
                recomputed_d: Some(d),
                reason: None,
            },
            Err(reason) => VerifyReport {
                id: id.to_string(),
                outcome: VerifyOutcome::Unverifiable,
                claimed_d: rec.d,
                recomputed_d: None,
                reason: Some(reason),
            },
        };
        self.append(&LogLine::Verification(VerificationEvent {
            id: id.to_string(),
            outcome: report.outcome,
            recomputed_d: report.recomputed_d,
            reason: report.reason.clone(),
            at: Utc::now(),
        }))?;
        Ok(report)
    }
}

fn rebuild_and_measure(rec: &CodeRecord, opts: &VerifyOptions) -> std::result::Result<u32, String> {
    let rebuilt = rec.construction.rebuild().map_err(|e| e.to_string())?;
    match rebuilt {
        RebuiltCode::Linear(code) => {
            if code.size() > opts.max_size {
                return Err(format!(
                    "code has {} codewords, above the verification limit {}",
                    code.size(),
                    opts.max_size
                ));
            }
            code.min_distance(rec.metric, opts.jobs)
                .map_err(|e| e.to_string())
        }
        RebuiltCode::Set(set) => set
            .min_distance(rec.metric)
            .ok_or_else(|| "set has fewer than two words".to_string()),
    }
}

/// Advisory flock held for the guard's lifetime. Holds the raw fd; the
/// caller keeps the `File` alive for at least as long as the guard.
struct FlockGuard {
    fd: i32,
}

impl FlockGuard {
    fn exclusive(file: &File) -> Result<Self> {
        Self::lock(file, libc::LOCK_EX)
    }

    fn shared(file: &File) -> Result<Self> {
        Self::lock(file, libc::LOCK_SH)
    }

    fn lock(file: &File, op: i32) -> Result<Self> {
        let fd = file.as_raw_fd();
        let rc = unsafe { libc::flock(fd, op) };
        if rc != 0 {
            return Err(Error::Io(std::io::Error::last_os_error()));
        }
        Ok(FlockGuard { fd })
    }
}

impl Drop for FlockGuard {
    fn drop(&mut self) {
        unsafe {
            libc::flock(self.fd, libc::LOCK_UN);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_record(id: &str, d: u32) -> CodeRecord {
        CodeRecord {
            id: id.to_string(),
            n: 3,
            k1: 1,
            k2: 0,
            metric: Metric::Lee,
            d,
            construction: Construction::RawMatrix {
                rows: vec!["112".parse().unwrap()],
            },
            linear: true,
            source: "test".into(),
            created_at: Utc::now(),
        }
    }

    #[test]
    fn add_query_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let store = RecordStore::open(&dir.path().join("records.z4db")).unwrap();
        let id = store.add_record(sample_record("", 4)).unwrap();
        assert_eq!(id, "z4-000001");
        let got = store.query(&QueryFilter::default()).unwrap();
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].record.id, id);
        assert_eq!(got[0].verification, VerificationStatus::Unverified);
    }

    #[test]
    fn duplicate_id_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let store = RecordStore::open(&dir.path().join("records.z4db")).unwrap();
        store.add_record(sample_record("dup", 4)).unwrap();
        assert!(matches!(
            store.add_record(sample_record("dup", 4)),
            Err(Error::DuplicateId(_))
        ));
    }

    #[test]
    fn parameter_mismatch_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let store = RecordStore::open(&dir.path().join("records.z4db")).unwrap();
        let mut rec = sample_record("", 4);
        rec.k1 = 2;
        assert!(matches!(
            store.add_record(rec),
            Err(Error::BadDescriptor(_))
        ));
    }

    #[test]
    fn history_keeps_everything() {
        let dir = tempfile::tempdir().unwrap();
        let store = RecordStore::open(&dir.path().join("records.z4db")).unwrap();
        store.add_record(sample_record("old", 3)).unwrap();
        store.add_record(sample_record("new", 4)).unwrap();
        let h = store.history(3, 1, 0, Metric::Lee).unwrap();
        assert_eq!(h.len(), 2);
        let q = store
            .query(&QueryFilter {
                best_only: true,
                ..Default::default()
            })
            .unwrap();
        assert_eq!(q.len(), 1);
        assert_eq!(q[0].record.id, "new");
    }

    #[test]
    fn verify_true_false_and_unverifiable() {
        let dir = tempfile::tempdir().unwrap();
        let store = RecordStore::open(&dir.path().join("records.z4db")).unwrap();
        // (1,1,2) really has minimum Lee distance 4
        store.add_record(sample_record("good", 4)).unwrap();
        let report = store.verify_record("good", &VerifyOptions::default()).unwrap();
        assert_eq!(report.outcome, VerifyOutcome::Verified);
        assert!(store.get("good").unwrap().is_verified());

        store.add_record(sample_record("liar", 5)).unwrap();
        let report = store.verify_record("liar", &VerifyOptions::default()).unwrap();
        assert_eq!(report.outcome, VerifyOutcome::Disputed);
        assert_eq!(report.recomputed_d, Some(4));
        assert!(store.get("liar").unwrap().is_disputed());

        let mut bare = sample_record("bare", 4);
        bare.construction = Construction::RawMatrix { rows: vec![] };
        store.add_record(bare).unwrap();
        let report = store.verify_record("bare", &VerifyOptions::default()).unwrap();
        assert_eq!(report.outcome, VerifyOutcome::Unverifiable);
        assert_eq!(
            store.get("bare").unwrap().verification,
            VerificationStatus::Unverified,
            "unverifiable leaves status unchanged"
        );
    }

    #[test]
    fn classify_boundaries() {
        let mut table = BinaryRecordTable::new();
        table.insert(6, 2, 4, "test");
        assert_eq!(
            classify_params(3, 1, 0, Metric::Lee, 5, &table),
            Classification::Good
        );
        assert_eq!(
            classify_params(3, 1, 0, Metric::Lee, 4, &table),
            Classification::Decent
        );
        assert_eq!(
            classify_params(3, 1, 0, Metric::Lee, 3, &table),
            Classification::Other
        );
        assert!(matches!(
            classify_params(4, 1, 0, Metric::Lee, 3, &table),
            Classification::Unclassified { .. }
        ));
        assert!(matches!(
            classify_params(3, 1, 0, Metric::Euclidean, 9, &table),
            Classification::Unclassified { .. }
        ));
    }

    #[test]
    fn table_parse_and_round_trip() {
        let table = BinaryRecordTable::parse(
            "# comment\n172 30 54 codetables\n6 2 4 derived # trailing\n\n",
        )
        .unwrap();
        assert_eq!(table.get(172, 30).unwrap().distance, 54);
        assert_eq!(table.get(6, 2).unwrap().provenance, "derived");
        let round = BinaryRecordTable::parse(&table.to_file_string()).unwrap();
        assert_eq!(round.to_file_string(), table.to_file_string());
        assert!(BinaryRecordTable::parse("").unwrap().is_empty());
        assert!(matches!(
            BinaryRecordTable::parse("172 30"),
            Err(Error::TableParse { line: 1, .. })
        ));
        assert!(matches!(
            BinaryRecordTable::parse("10 2 3"),
            Err(Error::TableParse { .. })
        ));
    }

    #[test]
    fn monotonicity_warns_not_rejects() {
        let table =
            BinaryRecordTable::parse("10 2 4 a\n10 3 9 b\n11 2 3 c\n").unwrap();
        assert_eq!(table.warnings().len(), 2);
    }

    #[test]
    fn inverse_gray_params_derived() {
        let c = Construction::InverseGray {
            length: 4,
            words: vec!["0000".into(), "1100".into(), "0011".into(), "1111".into()],
        };
        assert_eq!(c.derive_params(), Some((2, 1, 0)));
    }
}
