//! Linear codes over Z4 with exhaustive distance and weight-census
//! computation.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::engine::Enumerator;
use super::matrix::{StandardForm, Z4Matrix};
use super::vector::{Metric, Z4Vector};
use crate::error::{Error, Result};

/// A linear code over Z4 of type (k1, k2): permutation-equivalent to a
/// standard generator matrix with k1 unit-pivot rows and k2 rows of the
/// form 2*(binary vector); 4^k1 * 2^k2 codewords, free iff k2 = 0.
#[derive(Clone, Debug)]
pub struct Z4LinearCode {
    n: usize,
    standard: StandardForm,
    basis: Vec<Z4Vector>,
}

impl Z4LinearCode {
    /// Builds a code from any generator matrix (redundant or zero rows
    /// are fine; the type is derived via standard form).
    pub fn from_generator(g: &Z4Matrix) -> Self {
        let standard = g.standard_form();
        let basis = standard.basis_in_original_columns();
        Z4LinearCode {
            n: g.cols(),
            standard,
            basis,
        }
    }

    pub fn from_rows(rows: Vec<Z4Vector>) -> Result<Self> {
        Ok(Z4LinearCode::from_generator(&Z4Matrix::from_rows(rows)?))
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn k1(&self) -> usize {
        self.standard.k1
    }

    pub fn k2(&self) -> usize {
        self.standard.k2
    }

    /// Number of codewords, 4^k1 * 2^k2.
    pub fn size(&self) -> u128 {
        self.standard.code_size()
    }

    pub fn is_free(&self) -> bool {
        self.standard.k2 == 0
    }

    pub fn is_zero(&self) -> bool {
        self.standard.k1 == 0 && self.standard.k2 == 0
    }

    pub fn standard_form(&self) -> &StandardForm {
        &self.standard
    }

    /// A minimal generating set in the original column order: k1
    /// unit-pivot rows followed by k2 doubled rows.
    pub fn basis(&self) -> &[Z4Vector] {
        &self.basis
    }

    fn enumerator(&self) -> Enumerator {
        Enumerator::new(self.n, &self.basis, self.standard.k1)
    }

    /// Exact minimum weight over all nonzero codewords, by exhaustive
    /// bit-sliced enumeration. Fails on the zero code.
    pub fn min_distance(&self, metric: Metric, jobs: usize) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::ZeroCode);
        }
        let hist = self.enumerator().histogram(metric, jobs);
        Ok(min_positive(&hist).expect("nonzero code has a nonzero codeword"))
    }

    pub fn min_lee_distance(&self, jobs: usize) -> Result<u32> {
        self.min_distance(Metric::Lee, jobs)
    }

    /// The full weight census under `metric`.
    pub fn weight_enumerator(&self, metric: Metric, jobs: usize) -> WeightEnumerator {
        WeightEnumerator::from_histogram(&self.enumerator().histogram(metric, jobs))
    }

    pub fn lee_weight_enumerator(&self, jobs: usize) -> WeightEnumerator {
        self.weight_enumerator(Metric::Lee, jobs)
    }

    /// Calls `f` for every codeword. Guarded by an enumeration limit;
    /// intended for small codes.
    pub fn for_each_codeword(&self, f: impl FnMut(Z4Vector)) {
        self.enumerator().for_each_codeword(f);
    }

    /// All codewords of a small code, sorted.
    pub fn codewords(&self) -> Result<Vec<Z4Vector>> {
        const LIMIT: u128 = 1 << 24;
        if self.size() > LIMIT {
            return Err(Error::EnumerationTooLarge {
                size: self.size(),
                limit: LIMIT,
            });
        }
        let mut out = Vec::with_capacity(self.size() as usize);
        self.for_each_codeword(|cw| out.push(cw));
        out.sort();
        Ok(out)
    }

    /// Chunked access to the Lee histogram computation, for callers
    /// that need progress reporting or resumable checkpoints. The
    /// message space is split by fixing leading message symbols into
    /// at least `min_chunks` chunks.
    pub fn chunked_histogram(&self, metric: Metric, min_chunks: u64) -> ChunkedHistogram {
        let enumerator = self.enumerator();
        let fixed = enumerator.fixed_digits_for(min_chunks);
        let chunk_count = enumerator.chunk_count(fixed);
        ChunkedHistogram {
            enumerator,
            metric,
            fixed,
            chunk_count,
            hist_len: metric.max_weight(self.n) as usize + 1,
        }
    }
}

/// A deterministic decomposition of a weight-census computation into
/// independently runnable chunks whose histograms merge by addition.
pub struct ChunkedHistogram {
    enumerator: Enumerator,
    metric: Metric,
    fixed: usize,
    chunk_count: u64,
    hist_len: usize,
}

impl ChunkedHistogram {
    pub fn chunk_count(&self) -> u64 {
        self.chunk_count
    }

    pub fn empty_histogram(&self) -> Vec<u64> {
        vec![0; self.hist_len]
    }

    pub fn run_chunk(&self, chunk: u64) -> Vec<u64> {
        assert!(chunk < self.chunk_count);
        self.enumerator.chunk_histogram(self.metric, self.fixed, chunk)
    }

    pub fn merge_into(&self, acc: &mut Vec<u64>, part: &[u64]) {
        for (a, &b) in acc.iter_mut().zip(part) {
            *a += b;
        }
    }
}

fn min_positive(hist: &[u64]) -> Option<u32> {
    hist.iter()
        .enumerate()
        .skip(1)
        .find(|(_, &c)| c > 0)
        .map(|(w, _)| w as u32)
}

/// A weight census: weight -> number of codewords of that weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightEnumerator {
    counts: BTreeMap<u32, u64>,
}

impl WeightEnumerator {
    pub fn from_histogram(hist: &[u64]) -> Self {
        let counts = hist
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(w, &c)| (w as u32, c))
            .collect();
        WeightEnumerator { counts }
    }

    pub fn from_pairs(pairs: &[(u32, u64)]) -> Self {
        WeightEnumerator {
            counts: pairs.iter().copied().collect(),
        }
    }

    pub fn counts(&self) -> &BTreeMap<u32, u64> {
        &self.counts
    }

    pub fn count(&self, w: u32) -> u64 {
        self.counts.get(&w).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u128 {
        self.counts.values().map(|&c| c as u128).sum()
    }

    pub fn min_positive_weight(&self) -> Option<u32> {
        self.counts.keys().copied().find(|&w| w > 0)
    }

    pub fn max_weight(&self) -> Option<u32> {
        self.counts.keys().last().copied()
    }

    /// Weights at which two enumerators disagree, with both counts.
    pub fn diff(&self, other: &WeightEnumerator) -> Vec<(u32, u64, u64)> {
        let mut weights: Vec<u32> = self.counts.keys().chain(other.counts.keys()).copied().collect();
        weights.sort_unstable();
        weights.dedup();
        weights
            .into_iter()
            .filter_map(|w| {
                let (a, b) = (self.count(w), other.count(w));
                (a != b).then_some((w, a, b))
            })
            .collect()
    }
}

/// Prints in base^exponent form: `0^1 4^6 8^9`.
impl fmt::Display for WeightEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (w, c) in &self.counts {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{w}^{c}")?;
        }
        Ok(())
    }
}
