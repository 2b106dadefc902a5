//! Exhaustive codeword enumeration over the message space of a
//! standard-form basis.
//!
//! Messages are walked in a reflected mixed-radix Gray order (radix 4
//! per unit-pivot row, radix 2 per doubled row), so each successive
//! codeword is the previous one plus a single precomputed scaled row.
//! The message space can be partitioned into chunks by fixing the
//! leading message symbols; chunk histograms merge associatively, so
//! results are identical for any worker count or chunk schedule.

use rayon::prelude::*;

use super::packed::{words_for, Packed};
use super::vector::{Metric, Z4Vector};

/// Scaled copies of one generator row, indexed by the Gray step it
/// implements.
enum DigitRows {
    /// Unit-pivot row: message digit in 0..4. `plus` applies +1 to the
    /// digit, `minus` (the row scaled by 3) applies -1.
    Quad { plus: Packed, minus: Packed },
    /// Doubled row: digit in 0..2; the row is its own inverse.
    Bin(Packed),
}

impl DigitRows {
    fn radix(&self) -> u8 {
        match self {
            DigitRows::Quad { .. } => 4,
            DigitRows::Bin(_) => 2,
        }
    }

    fn delta(&self, dir: i8) -> &Packed {
        match self {
            DigitRows::Quad { plus, minus } => {
                if dir > 0 {
                    plus
                } else {
                    minus
                }
            }
            DigitRows::Bin(row) => row,
        }
    }

    fn scaled(&self, digit: u8) -> Option<Packed> {
        match self {
            DigitRows::Quad { plus, minus } => match digit {
                0 => None,
                1 => Some(plus.clone()),
                2 => {
                    let mut two = plus.clone();
                    two.add_assign(plus);
                    Some(two)
                }
                3 => Some(minus.clone()),
                _ => unreachable!(),
            },
            DigitRows::Bin(row) => (digit == 1).then(|| row.clone()),
        }
    }
}

/// A prepared enumeration over 4^k1 * 2^k2 messages.
pub(crate) struct Enumerator {
    words: usize,
    n: usize,
    digits: Vec<DigitRows>,
}

impl Enumerator {
    /// `basis` must be the standard-form basis: `k1` unit-pivot rows
    /// followed by rows of the form 2*(binary vector).
    pub fn new(n: usize, basis: &[Z4Vector], k1: usize) -> Self {
        let words = words_for(n).max(1);
        let digits = basis
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let plus = Packed::from_vector(row, words);
                if i < k1 {
                    let minus = Packed::from_vector(&row.scale(3), words);
                    DigitRows::Quad { plus, minus }
                } else {
                    DigitRows::Bin(plus)
                }
            })
            .collect();
        Enumerator { words, n, digits }
    }

    pub fn message_count(&self) -> u128 {
        self.digits
            .iter()
            .fold(1u128, |acc, d| acc * d.radix() as u128)
    }

    /// Splits the message space by fixing the trailing `fixed` digits.
    /// Returns the chunk count.
    pub fn chunk_count(&self, fixed: usize) -> u64 {
        self.digits[self.digits.len() - fixed..]
            .iter()
            .fold(1u64, |acc, d| acc * d.radix() as u64)
    }

    /// Picks a fixed-digit count giving at least `want` chunks (or all
    /// digits if the space is small).
    pub fn fixed_digits_for(&self, want: u64) -> usize {
        let mut fixed = 0;
        let mut chunks = 1u64;
        while chunks < want && fixed < self.digits.len() {
            fixed += 1;
            chunks *= self.digits[self.digits.len() - fixed].radix() as u64;
        }
        fixed
    }

    /// Walks one chunk in Gray order, calling `visit` for every
    /// codeword in it (including the chunk base).
    pub fn walk_chunk(&self, fixed: usize, chunk: u64, mut visit: impl FnMut(&Packed)) {
        let free = self.digits.len() - fixed;

        // Base codeword from the fixed trailing digits.
        let mut cur = Packed::zeros(self.words);
        let mut c = chunk;
        for d in &self.digits[free..] {
            let digit = (c % d.radix() as u64) as u8;
            c /= d.radix() as u64;
            if let Some(scaled) = d.scaled(digit) {
                cur.add_assign(&scaled);
            }
        }

        // Loopless reflected mixed-radix Gray walk over the free digits.
        let mut a = vec![0u8; free];
        let mut o = vec![1i8; free];
        let mut focus: Vec<usize> = (0..=free).collect();
        visit(&cur);
        loop {
            let j = focus[0];
            focus[0] = 0;
            if j == free {
                break;
            }
            let dir = o[j];
            a[j] = (a[j] as i8 + dir) as u8;
            cur.add_assign(self.digits[j].delta(dir));
            if a[j] == 0 || a[j] == self.digits[j].radix() - 1 {
                o[j] = -o[j];
                focus[j] = focus[j + 1];
                focus[j + 1] = j + 1;
            }
            visit(&cur);
        }
    }

    /// Weight histogram of one chunk.
    pub fn chunk_histogram(&self, metric: Metric, fixed: usize, chunk: u64) -> Vec<u64> {
        let mut hist = vec![0u64; metric.max_weight(self.n) as usize + 1];
        self.walk_chunk(fixed, chunk, |cw| {
            hist[cw.weight(metric) as usize] += 1;
        });
        hist
    }

    /// Full weight histogram, parallelized over chunks when `jobs > 1`.
    pub fn histogram(&self, metric: Metric, jobs: usize) -> Vec<u64> {
        let jobs = jobs.max(1);
        let fixed = if jobs == 1 || self.message_count() < (1 << 16) {
            0
        } else {
            self.fixed_digits_for(16 * jobs as u64)
        };
        if fixed == 0 {
            return self.chunk_histogram(metric, 0, 0);
        }
        let chunks = self.chunk_count(fixed);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        pool.install(|| {
            (0..chunks)
                .into_par_iter()
                .map(|c| self.chunk_histogram(metric, fixed, c))
                .reduce(
                    || vec![0u64; metric.max_weight(self.n) as usize + 1],
                    merge_histograms,
                )
        })
    }

    /// Enumerates codewords as vectors; intended for small codes.
    pub fn for_each_codeword(&self, mut f: impl FnMut(Z4Vector)) {
        self.walk_chunk(0, 0, |cw| f(cw.unpack(self.n)));
    }
}

pub(crate) fn merge_histograms(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}
