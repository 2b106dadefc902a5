//! Cyclotomic cosets mod n under doubling.

use crate::error::{Error, Result};

/// The partition of {0, ..., n-1} into orbits of s -> 2s mod n, for odd
/// n. Each coset is stored in orbit order starting from its smallest
/// element; cosets are sorted by that smallest element.
///
/// The number of cosets equals the number of irreducible factors of
/// x^n - 1 over Z2, and each coset size is the degree of the matching
/// factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicCosets {
    n: usize,
    cosets: Vec<Vec<usize>>,
}

impl CyclotomicCosets {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cosets(&self) -> &[Vec<usize>] {
        &self.cosets
    }

    /// The coset count r.
    pub fn count(&self) -> usize {
        self.cosets.len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.cosets.iter().map(Vec::len).collect()
    }
}

pub fn cyclotomic_cosets(n: usize) -> Result<CyclotomicCosets> {
    if n == 0 || n % 2 == 0 {
        return Err(Error::OddLengthRequired(n));
    }
    let mut seen = vec![false; n];
    let mut cosets = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut t = start;
        loop {
            seen[t] = true;
            orbit.push(t);
            t = (2 * t) % n;
            if t == start {
                break;
            }
        }
        cosets.push(orbit);
    }
    Ok(CyclotomicCosets { n, cosets })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n_1_is_single_coset() {
        let c = cyclotomic_cosets(1).unwrap();
        assert_eq!(c.cosets(), &[vec![0]]);
    }

    #[test]
    fn n_7_orbits() {
        let c = cyclotomic_cosets(7).unwrap();
        assert_eq!(c.cosets(), &[vec![0], vec![1, 2, 4], vec![3, 6, 5]]);
        assert_eq!(c.count(), 3);
    }

    #[test]
    fn n_15_orbits() {
        let c = cyclotomic_cosets(15).unwrap();
        assert_eq!(
            c.cosets(),
            &[
                vec![0],
                vec![1, 2, 4, 8],
                vec![3, 6, 12, 9],
                vec![5, 10],
                vec![7, 14, 13, 11]
            ]
        );
        assert_eq!(c.count(), 5);
    }

    #[test]
    fn even_or_zero_rejected() {
        assert!(cyclotomic_cosets(0).is_err());
        assert!(cyclotomic_cosets(6).is_err());
    }

    #[test]
    fn partition_invariants_up_to_63() {
        for n in (1..=63).step_by(2) {
            let c = cyclotomic_cosets(n).unwrap();
            let mut all: Vec<usize> = c.cosets().iter().flatten().copied().collect();
            all.sort_unstable();
            assert_eq!(all, (0..n).collect::<Vec<_>>(), "n={n}");
            for orbit in c.cosets() {
                for &s in orbit {
                    assert!(orbit.contains(&(2 * s % n)), "n={n} coset not closed");
                }
            }
        }
    }
}
