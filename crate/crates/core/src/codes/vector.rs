//! Vectors over Z4 and the three weight functions.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{CoeffRing, Z4Poly};
use crate::error::{Error, Result};

/// The metric a distance or weight is taken in. Per-symbol weights for
/// symbols 0,1,2,3 are 0,1,1,1 (Hamming), 0,1,2,1 (Lee) and 0,1,4,1
/// (Euclidean).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    Lee,
    Hamming,
    Euclidean,
}

impl Metric {
    pub fn symbol_weight(self, s: u8) -> u32 {
        match self {
            Metric::Hamming => [0, 1, 1, 1][s as usize],
            Metric::Lee => [0, 1, 2, 1][s as usize],
            Metric::Euclidean => [0, 1, 4, 1][s as usize],
        }
    }

    /// The largest weight a vector of length n can attain.
    pub fn max_weight(self, n: usize) -> u32 {
        match self {
            Metric::Hamming => n as u32,
            Metric::Lee => 2 * n as u32,
            Metric::Euclidean => 4 * n as u32,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Metric::Lee => "lee",
            Metric::Hamming => "hamming",
            Metric::Euclidean => "euclidean",
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Metric {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lee" => Ok(Metric::Lee),
            "hamming" => Ok(Metric::Hamming),
            "euclidean" => Ok(Metric::Euclidean),
            other => Err(Error::Store(format!("unknown metric {other:?}"))),
        }
    }
}

/// A vector over Z4, serialized as a digit string like "10321".
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Z4Vector(Vec<u8>);

impl Z4Vector {
    pub fn new(symbols: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = symbols.iter().find(|&&s| s > 3) {
            return Err(Error::SymbolOutOfRange(bad));
        }
        Ok(Z4Vector(symbols))
    }

    pub fn zeros(n: usize) -> Self {
        Z4Vector(vec![0; n])
    }

    /// The coefficient vector of a polynomial, padded with zeros up to
    /// length n. The polynomial is reduced mod x^n - 1 first, so any
    /// representative of a residue class works.
    pub fn from_poly(p: &Z4Poly, n: usize) -> Self {
        let reduced = p.reduce_mod_xn_minus_1(n);
        let mut symbols = vec![0u8; n];
        for (i, c) in reduced.coeffs().iter().enumerate() {
            symbols[i] = c.residue();
        }
        Z4Vector(symbols)
    }

    pub fn to_poly(&self) -> Z4Poly {
        Z4Poly::from_residues(&self.0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[u8] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&s| s == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "length mismatch in vector add");
        Z4Vector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| (a + b) & 3)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "length mismatch in vector sub");
        Z4Vector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| (a + 4 - b) & 3)
                .collect(),
        )
    }

    pub fn scale(&self, c: u8) -> Self {
        Z4Vector(self.0.iter().map(|&a| (a * c) & 3).collect())
    }

    /// Cyclic right shift by one position.
    pub fn cyclic_shift(&self) -> Self {
        if self.0.is_empty() {
            return self.clone();
        }
        let mut v = Vec::with_capacity(self.0.len());
        v.push(self.0[self.0.len() - 1]);
        v.extend_from_slice(&self.0[..self.0.len() - 1]);
        Z4Vector(v)
    }

    pub fn weight(&self, metric: Metric) -> u32 {
        self.0.iter().map(|&s| metric.symbol_weight(s)).sum()
    }

    pub fn lee_weight(&self) -> u32 {
        self.weight(Metric::Lee)
    }

    pub fn hamming_weight(&self) -> u32 {
        self.weight(Metric::Hamming)
    }

    pub fn euclidean_weight(&self) -> u32 {
        self.weight(Metric::Euclidean)
    }

    pub fn distance(&self, other: &Self, metric: Metric) -> u32 {
        self.sub(other).weight(metric)
    }
}

impl fmt::Display for Z4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.0 {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Z4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Z4Vector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let symbols = s
            .chars()
            .map(|c| match c {
                '0'..='3' => Ok(c as u8 - b'0'),
                _ => Err(Error::VectorParse {
                    input: s.to_string(),
                    reason: format!("invalid symbol {c:?}"),
                }),
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(Z4Vector(symbols))
    }
}

impl Serialize for Z4Vector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Z4Vector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> Z4Vector {
        s.parse().unwrap()
    }

    #[test]
    fn weights_from_definitions() {
        assert_eq!(v("0123").lee_weight(), 4);
        assert_eq!(v("020").hamming_weight(), 1);
        assert_eq!(v("22").euclidean_weight(), 8);
        assert_eq!(v("0123").hamming_weight(), 3);
        assert_eq!(v("0123").euclidean_weight(), 6);
    }

    #[test]
    fn weight_bounds() {
        let w = v("3333");
        assert_eq!(w.hamming_weight(), 4);
        assert_eq!(w.lee_weight(), 4);
        let t = v("2222");
        assert_eq!(t.lee_weight(), 8);
        assert_eq!(t.euclidean_weight(), 16);
    }

    #[test]
    fn distance_is_weight_of_difference() {
        let a = v("123");
        let b = v("321");
        assert_eq!(a.distance(&b, Metric::Lee), a.sub(&b).lee_weight());
        assert_eq!(a.distance(&a, Metric::Lee), 0);
    }

    #[test]
    fn arithmetic() {
        assert_eq!(v("13").add(&v("31")), v("00"));
        assert_eq!(v("12").scale(2), v("20"));
        assert_eq!(v("12").scale(3), v("32"));
        assert_eq!(v("0123").cyclic_shift(), v("3012"));
    }

    #[test]
    fn parse_rejects_bad_symbols() {
        assert!("0474".parse::<Z4Vector>().is_err());
        assert!(Z4Vector::new(vec![0, 4]).is_err());
    }

    #[test]
    fn poly_round_trip() {
        let p: Z4Poly = "x^2+3x+2".parse().unwrap();
        let vec = Z4Vector::from_poly(&p, 5);
        assert_eq!(vec, v("23100"));
        assert_eq!(vec.to_poly(), p);
        // reduction mod x^n-1 wraps high powers
        let q: Z4Poly = "x^5+1".parse().unwrap();
        assert_eq!(Z4Vector::from_poly(&q, 5), v("20000"));
    }
}
