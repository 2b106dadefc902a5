//! The Gray map Z4 -> Z2^2 (0 -> 00, 1 -> 10, 2 -> 11, 3 -> 01), its
//! coordinate-wise extension, and the inverse direction producing
//! quaternary (generally non-linear) codes from binary ones.
//!
//! Symbol i of the input occupies output bit positions 2i and 2i+1.
//! The map is an isometry from Lee to Hamming distance.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::code::Z4LinearCode;
use super::matrix::Z4Matrix;
use super::vector::{Metric, Z4Vector};
use crate::error::{Error, Result};

/// Outcome of a linearity check. `SampledLinear` means the set was too
/// large for a full closure check and no violation was found among
/// sampled pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Linearity {
    Linear,
    Nonlinear,
    SampledLinear,
}

impl Linearity {
    pub fn is_definitely_linear(self) -> bool {
        self == Linearity::Linear
    }
}

/// Full closure checks are run up to this set size; larger sets are
/// sampled.
pub const LINEARITY_CHECK_BOUND: usize = 1 << 16;
const LINEARITY_SAMPLES: usize = 100_000;

pub fn gray_symbol(s: u8) -> (u8, u8) {
    debug_assert!(s < 4);
    ((s == 1 || s == 2) as u8, (s >= 2) as u8)
}

pub fn inverse_gray_pair(b0: u8, b1: u8) -> u8 {
    match (b0, b1) {
        (0, 0) => 0,
        (1, 0) => 1,
        (1, 1) => 2,
        (0, 1) => 3,
        _ => panic!("bits must be 0 or 1"),
    }
}

/// The Gray image of one vector: a bit vector of length 2n.
pub fn gray_map(v: &Z4Vector) -> Vec<u8> {
    let mut bits = Vec::with_capacity(2 * v.len());
    for &s in v.symbols() {
        let (b0, b1) = gray_symbol(s);
        bits.push(b0);
        bits.push(b1);
    }
    bits
}

/// A set of binary words of a fixed length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryCodeSet {
    length: usize,
    words: BTreeSet<Vec<u8>>,
    linearity: Linearity,
}

impl BinaryCodeSet {
    pub fn new(length: usize, words: BTreeSet<Vec<u8>>) -> Result<Self> {
        for w in &words {
            if w.len() != length {
                return Err(Error::RaggedMatrix {
                    expected: length,
                    row: 0,
                    got: w.len(),
                });
            }
            if let Some(&bad) = w.iter().find(|&&b| b > 1) {
                return Err(Error::SymbolOutOfRange(bad));
            }
        }
        let linearity = binary_linearity(&words, length);
        Ok(BinaryCodeSet {
            length,
            words,
            linearity,
        })
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn words(&self) -> &BTreeSet<Vec<u8>> {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn linearity(&self) -> Linearity {
        self.linearity
    }

    /// Minimum Hamming distance between distinct words (pairwise scan;
    /// for linear sets this equals the minimum nonzero weight).
    pub fn min_hamming_distance(&self) -> Option<u32> {
        if self.linearity == Linearity::Linear {
            return self
                .words
                .iter()
                .filter(|w| w.iter().any(|&b| b != 0))
                .map(|w| w.iter().map(|&b| b as u32).sum())
                .min();
        }
        let words: Vec<&Vec<u8>> = self.words.iter().collect();
        let mut best: Option<u32> = None;
        for i in 0..words.len() {
            for j in i + 1..words.len() {
                let d = words[i]
                    .iter()
                    .zip(words[j])
                    .map(|(&a, &b)| (a ^ b) as u32)
                    .sum();
                best = Some(best.map_or(d, |m| m.min(d)));
            }
        }
        best
    }
}

/// A set of quaternary words of fixed length, as produced by the
/// inverse Gray map (generally not linear).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuaternaryCodeSet {
    length: usize,
    words: BTreeSet<Z4Vector>,
    linearity: Linearity,
}

impl QuaternaryCodeSet {
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn words(&self) -> &BTreeSet<Z4Vector> {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn linearity(&self) -> Linearity {
        self.linearity
    }

    /// Minimum distance between distinct words under `metric`.
    pub fn min_distance(&self, metric: Metric) -> Option<u32> {
        let words: Vec<&Z4Vector> = self.words.iter().collect();
        let mut best: Option<u32> = None;
        for i in 0..words.len() {
            for j in i + 1..words.len() {
                let d = words[i].distance(words[j], metric);
                best = Some(best.map_or(d, |m| m.min(d)));
            }
        }
        best
    }
}

/// The Gray image of a whole linear code: every codeword is mapped, and
/// the linear flag is set by a closure check (full up to
/// [`LINEARITY_CHECK_BOUND`] codewords, sampled above).
pub fn gray_image(code: &Z4LinearCode) -> Result<BinaryCodeSet> {
    let size = code.size();
    if size > (1 << 24) {
        return Err(Error::EnumerationTooLarge {
            size,
            limit: 1 << 24,
        });
    }
    let mut words = BTreeSet::new();
    code.for_each_codeword(|cw| {
        words.insert(gray_map(&cw));
    });
    BinaryCodeSet::new(2 * code.length(), words)
}

/// Maps a binary code back through the inverse Gray map. The input
/// length must be even; word count is preserved.
pub fn inverse_gray(length: usize, words: &BTreeSet<Vec<u8>>) -> Result<QuaternaryCodeSet> {
    if length % 2 != 0 {
        return Err(Error::OddBinaryLength(length));
    }
    let mut out = BTreeSet::new();
    for w in words {
        if w.len() != length {
            return Err(Error::RaggedMatrix {
                expected: length,
                row: 0,
                got: w.len(),
            });
        }
        if let Some(&bad) = w.iter().find(|&&b| b > 1) {
            return Err(Error::SymbolOutOfRange(bad));
        }
        let symbols: Vec<u8> = w
            .chunks_exact(2)
            .map(|pair| inverse_gray_pair(pair[0], pair[1]))
            .collect();
        out.insert(Z4Vector::new(symbols)?);
    }
    let linearity = quaternary_linearity(&out, length / 2);
    Ok(QuaternaryCodeSet {
        length: length / 2,
        words: out,
        linearity,
    })
}

/// Closure check for a set of binary words. Linear means: contains 0,
/// and the set equals its own GF(2) span (checked via rank, not
/// pairwise sums).
fn binary_linearity(words: &BTreeSet<Vec<u8>>, length: usize) -> Linearity {
    if words.is_empty() {
        return Linearity::Nonlinear;
    }
    if words.len() > LINEARITY_CHECK_BOUND {
        return sampled_linearity(words, |a, b| {
            a.iter().zip(b).map(|(&x, &y)| x ^ y).collect::<Vec<u8>>()
        });
    }
    if !words.contains(&vec![0u8; length]) {
        return Linearity::Nonlinear;
    }
    // Gaussian elimination over GF(2) to find the span's rank.
    let mut basis: Vec<Vec<u8>> = Vec::new();
    for w in words {
        let mut v = w.clone();
        for b in &basis {
            let lead = b.iter().position(|&x| x == 1).unwrap();
            if v[lead] == 1 {
                for (x, y) in v.iter_mut().zip(b) {
                    *x ^= y;
                }
            }
        }
        if v.iter().any(|&x| x == 1) {
            basis.push(v);
            basis.sort_by_key(|b| b.iter().position(|&x| x == 1));
        }
    }
    if 1usize.checked_shl(basis.len() as u32) == Some(words.len()) {
        Linearity::Linear
    } else {
        Linearity::Nonlinear
    }
}

/// Closure check for a set of quaternary words: the set is linear iff
/// it contains 0 and equals the span of its own words.
fn quaternary_linearity(words: &BTreeSet<Z4Vector>, length: usize) -> Linearity {
    if words.is_empty() {
        return Linearity::Nonlinear;
    }
    if words.len() > LINEARITY_CHECK_BOUND {
        return sampled_linearity(words, |a, b| a.add(b));
    }
    if !words.contains(&Z4Vector::zeros(length)) {
        return Linearity::Nonlinear;
    }
    let rows: Vec<Z4Vector> = words.iter().cloned().collect();
    let sf = Z4Matrix::new(length, rows).map(|m| m.standard_form());
    match sf {
        Ok(sf) => {
            if sf.code_size() == words.len() as u128 {
                Linearity::Linear
            } else {
                Linearity::Nonlinear
            }
        }
        Err(_) => Linearity::Nonlinear,
    }
}

fn sampled_linearity<T: Ord + Clone>(
    words: &BTreeSet<T>,
    add: impl Fn(&T, &T) -> T,
) -> Linearity {
    let list: Vec<&T> = words.iter().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5ee_d);
    for _ in 0..LINEARITY_SAMPLES {
        let a = list[rng.gen_range(0..list.len())];
        let b = list[rng.gen_range(0..list.len())];
        if !words.contains(&add(a, b)) {
            return Linearity::Nonlinear;
        }
    }
    Linearity::SampledLinear
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> Z4Vector {
        s.parse().unwrap()
    }

    #[test]
    fn symbol_table() {
        assert_eq!(gray_map(&v("2")), vec![1, 1]);
        assert_eq!(gray_map(&v("13")), vec![1, 0, 0, 1]);
        assert_eq!(gray_map(&v("0000")), vec![0; 8]);
        for s in 0..4 {
            let (b0, b1) = gray_symbol(s);
            assert_eq!(inverse_gray_pair(b0, b1), s);
        }
    }

    #[test]
    fn isometry_random() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for n in [1usize, 5, 17, 64] {
            for _ in 0..200 {
                let a = Z4Vector::new((0..n).map(|_| rng.gen_range(0..4)).collect()).unwrap();
                let b = Z4Vector::new((0..n).map(|_| rng.gen_range(0..4)).collect()).unwrap();
                let lee = a.distance(&b, Metric::Lee);
                let hamming: u32 = gray_map(&a)
                    .iter()
                    .zip(gray_map(&b))
                    .map(|(&x, y)| (x ^ y) as u32)
                    .sum();
                assert_eq!(lee, hamming);
            }
        }
    }

    #[test]
    fn inverse_gray_two_words() {
        let words: BTreeSet<Vec<u8>> = [vec![0, 0], vec![1, 1]].into_iter().collect();
        let q = inverse_gray(2, &words).unwrap();
        let expect: BTreeSet<Z4Vector> = [v("0"), v("2")].into_iter().collect();
        assert_eq!(q.words(), &expect);
        assert_eq!(q.linearity(), Linearity::Linear);
    }

    #[test]
    fn odd_length_rejected() {
        let words: BTreeSet<Vec<u8>> = [vec![0, 0, 0]].into_iter().collect();
        assert!(inverse_gray(3, &words).is_err());
    }

    #[test]
    fn binary_linearity_detects() {
        let linear: BTreeSet<Vec<u8>> =
            [vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]].into_iter().collect();
        assert_eq!(binary_linearity(&linear, 2), Linearity::Linear);
        let nonlinear: BTreeSet<Vec<u8>> = [vec![0, 0], vec![1, 0], vec![0, 1]].into_iter().collect();
        assert_eq!(binary_linearity(&nonlinear, 2), Linearity::Nonlinear);
        let no_zero: BTreeSet<Vec<u8>> = [vec![1, 0]].into_iter().collect();
        assert_eq!(binary_linearity(&no_zero, 2), Linearity::Nonlinear);
    }
}
