//! Bit-sliced Z4 vectors: two bit planes per vector, 64 symbols per
//! word pair. Addition mod 4 and the three weights become a handful of
//! word operations plus popcounts, which is what makes exhaustive
//! codeword enumeration at 10^9 scale practical.

use super::vector::{Metric, Z4Vector};

/// A Z4 vector packed as bit planes: symbol s = 2*hi + lo.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Packed {
    pub lo: Vec<u64>,
    pub hi: Vec<u64>,
}

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

impl Packed {
    pub fn zeros(words: usize) -> Self {
        Packed {
            lo: vec![0; words],
            hi: vec![0; words],
        }
    }

    pub fn from_vector(v: &Z4Vector, words: usize) -> Self {
        let mut p = Packed::zeros(words);
        for (i, &s) in v.symbols().iter().enumerate() {
            let (w, b) = (i / 64, i % 64);
            p.lo[w] |= ((s & 1) as u64) << b;
            p.hi[w] |= ((s >> 1) as u64) << b;
        }
        p
    }

    pub fn unpack(&self, n: usize) -> Z4Vector {
        let symbols = (0..n)
            .map(|i| {
                let (w, b) = (i / 64, i % 64);
                ((self.lo[w] >> b & 1) + 2 * (self.hi[w] >> b & 1)) as u8
            })
            .collect();
        Z4Vector::new(symbols).unwrap()
    }

    /// Entrywise addition mod 4: lo' = lo ^ b.lo with carry lo & b.lo
    /// into the high plane.
    #[inline]
    pub fn add_assign(&mut self, rhs: &Packed) {
        for w in 0..self.lo.len() {
            let a = self.lo[w];
            let b = rhs.lo[w];
            let carry = a & b;
            self.lo[w] = a ^ b;
            self.hi[w] ^= rhs.hi[w] ^ carry;
        }
    }

    #[inline]
    pub fn weight(&self, metric: Metric) -> u32 {
        let mut ones = 0u32; // symbols with weight contribution 1 (1 and 3)
        let mut twos = 0u32; // symbol 2 count
        for w in 0..self.lo.len() {
            ones += self.lo[w].count_ones();
            twos += (self.hi[w] & !self.lo[w]).count_ones();
        }
        match metric {
            Metric::Lee => ones + 2 * twos,
            Metric::Hamming => ones + twos,
            Metric::Euclidean => ones + 4 * twos,
        }
    }

}
