//! Dense univariate polynomials over a residue coefficient ring.
//!
//! `Poly<R>` stores coefficients lowest degree first with no trailing
//! zeros, so the zero polynomial is the empty vector and `degree()` of a
//! nonzero polynomial is `coeffs.len() - 1`. Concrete aliases [`F2Poly`]
//! and [`Z4Poly`] are re-exported at the crate root.

use std::fmt;
use std::str::FromStr;

 
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ring::{CoeffRing, Z2, Z4};
use crate::error::{Error, Result};

/// Polynomial degree with a distinguished marker for the zero
/// polynomial. `NegInf` compares below every finite degree.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Degree {
    NegInf,
    Of(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInf => None,
            Degree::Of(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInf => write!(f, "-inf"),
            Degree::Of(d) => write!(f, "{d}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<R: CoeffRing> {
    coeffs: Vec<R>,
}

pub type F2Poly = Poly<Z2>;
pub type Z4Poly = Poly<Z4>;

impl<R: CoeffRing> Poly<R> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { coeffs: vec![c] }
        }
    }

    pub fn x() -> Self {
        Poly::x_pow(1)
    }

    /// The monomial x^k.
    pub fn x_pow(k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k + 1];
        coeffs[k] = R::one();
        Poly { coeffs }
    }

    /// x^n - 1.
    pub fn xn_minus_1(n: usize) -> Self {
        assert!(n >= 1, "xn_minus_1 requires n >= 1");
        let mut coeffs = vec![R::zero(); n + 1];
        coeffs[0] = -R::one();
        coeffs[n] = R::one();
        Poly { coeffs }
    }

    /// Builds from coefficients lowest degree first, trimming trailing
    /// zeros.
    pub fn from_coeffs(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Builds from integer residues lowest degree first, reducing each
    /// mod `R::MODULUS`.
    pub fn from_residues(vals: &[u8]) -> Self {
        Poly::from_coeffs(vals.iter().map(|&v| R::from_residue(v)).collect())
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).copied().unwrap_or_else(R::zero)
    }

    pub fn degree(&self) -> Degree {
        if self.coeffs.is_empty() {
            Degree::NegInf
        } else {
            Degree::Of(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading(&self) -> Option<R> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// Multiplies every coefficient by `c`.
    pub fn scaled(&self, c: R) -> Self {
        Poly::from_coeffs(self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Multiplies by x^k.
    pub fn shifted(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { coeffs }
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| c * R::from_residue((i % R::MODULUS as usize) as u8))
            .collect();
        Poly::from_coeffs(coeffs)
    }

    /// Euclidean division with remainder. The divisor's leading
    /// coefficient must be a unit: over Z4 that means 1 or 3 (a divisor
    /// with leading coefficient 2 is rejected, since Z4 is not a field
    /// and such a division is not well defined).
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let lead = divisor.leading().ok_or(Error::DivisionByZero)?;
        let inv = lead.inverse().ok_or(Error::NonUnitDivisor {
            ring: R::NAME,
            leading: lead.residue(),
        })?;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![R::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let factor = rem[i] * inv;
            if factor.is_zero() {
                continue;
            }
            quot[i - dd] = factor;
            for (j, &dc) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] = rem[i - dd + j] - factor * dc;
            }
        }
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Whether `self` divides `other`. Requires a unit leading
    /// coefficient on `self`.
    pub fn divides(&self, other: &Self) -> Result<bool> {
        if other.is_zero() {
            return Ok(true);
        }
        Ok(other.rem(self)?.is_zero())
    }

    /// Reduces in-place modulo x^n - 1 by wrapping coefficients.
    pub fn reduce_mod_xn_minus_1(&self, n: usize) -> Self {
        assert!(n >= 1);
        let mut coeffs = vec![R::zero(); n.min(self.coeffs.len())];
        coeffs.resize(n, R::zero());
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i % n] = coeffs[i % n] + c;
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Poly<Z4> {
    /// Coefficient-wise reduction mod 2.
    pub fn mod2(&self) -> Poly<Z2> {
        Poly::from_coeffs(self.coeffs.iter().map(|c| c.mod2()).collect())
    }
}

impl Poly<Z2> {
    /// Coefficient-wise embedding into Z4 (0 -> 0, 1 -> 1).
    pub fn lift_z4(&self) -> Poly<Z4> {
        Poly::from_coeffs(self.coeffs.iter().map(|&c| Z4::from(c)).collect())
    }

    /// Greatest common divisor over Z2 by the Euclidean algorithm.
    /// `gcd(a, 0) = a`; the result is monic when nonzero.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("Z2 division by nonzero always works");
            a = b;
            b = r;
        }
        a
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl<R: CoeffRing> std::ops::$trait<&Poly<R>> for &Poly<R> {
            type Output = Poly<R>;
            fn $method(self, rhs: &Poly<R>) -> Poly<R> {
                binop_impl::$method(self, rhs)
            }
        }
        impl<R: CoeffRing> std::ops::$trait for Poly<R> {
            type Output = Poly<R>;
            fn $method(self, rhs: Poly<R>) -> Poly<R> {
                binop_impl::$method(&self, &rhs)
            }
        }
    };
}

mod binop_impl {
    use super::*;

    pub fn add<R: CoeffRing>(a: &Poly<R>, b: &Poly<R>) -> Poly<R> {
        let n = a.coeffs.len().max(b.coeffs.len());
        let coeffs = (0..n).map(|i| a.coeff(i) + b.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }

    pub fn sub<R: CoeffRing>(a: &Poly<R>, b: &Poly<R>) -> Poly<R> {
        let n = a.coeffs.len().max(b.coeffs.len());
        let coeffs = (0..n).map(|i| a.coeff(i) - b.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }

    pub fn mul<R: CoeffRing>(a: &Poly<R>, b: &Poly<R>) -> Poly<R> {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![R::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, &ca) in a.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, &cb) in b.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j] + ca * cb;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl<R: CoeffRing> std::ops::Neg for &Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly::from_coeffs(self.coeffs.iter().map(|&c| -c).collect())
    }
}

impl<R: CoeffRing> std::ops::Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        -&self
    }
}

/// Descending-power text format: `x^15+3x^14+2x^2+x+3`. A coefficient
/// of 1 is omitted except on the constant term; zero terms are skipped;
/// the zero polynomial prints as `0`.
impl<R: CoeffRing> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = self.coeffs[i].residue();
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                _ => {
                    if c != 1 {
                        write!(f, "{c}")?;
                    }
                    write!(f, "x")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<R: CoeffRing> fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

const MAX_PARSED_EXPONENT: usize = 1 << 20;

/// Parses the descending-power format. Accepts `+c`, `cx^k`, an omitted
/// coefficient 1, `-` signs (negated into the ring), and arbitrary
/// whitespace; coefficients are reduced mod the ring modulus.
impl<R: CoeffRing> FromStr for Poly<R> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::PolyParse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty input"));
        }
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        let mut seen_any = false;
        for ch in compact.chars() {
            match ch {
                '+' | '-' => {
                    if seen_any {
                        if cur.is_empty() {
                            return Err(err("two consecutive signs"));
                        }
                        terms.push((neg, std::mem::take(&mut cur)));
                    }
                    neg = ch == '-';
                    seen_any = true;
                }
                _ => {
                    seen_any = true;
                    cur.push(ch);
                }
            }
        }
        if cur.is_empty() {
            return Err(err("trailing sign"));
        }
        terms.push((neg, cur));

        let mut acc: Vec<R> = Vec::new();
        for (negated, term) in terms {
            let (coeff_str, exp) = match term.find('x') {
                None => (term.as_str(), 0usize),
                Some(pos) => {
                    let tail = &term[pos + 1..];
                    let exp = if tail.is_empty() {
                        1
                    } else {
                        let digits = tail
                            .strip_prefix('^')
                            .ok_or_else(|| err("expected '^' after x"))?;
                        digits
                            .parse::<usize>()
                            .map_err(|_| err("bad exponent"))?
                    };
                    (&term[..pos], exp)
                }
            };
            if exp > MAX_PARSED_EXPONENT {
                return Err(err("exponent too large"));
            }
            let coeff: u64 = if coeff_str.is_empty() {
                1
            } else {
                coeff_str.parse().map_err(|_| err("bad coefficient"))?
            };
            let mut c = R::from_residue((coeff % R::MODULUS as u64) as u8);
            if negated {
                c = -c;
            }
            if acc.len() <= exp {
                acc.resize(exp + 1, R::zero());
            }
            acc[exp] = acc[exp] + c;
        }
        Ok(Poly::from_coeffs(acc))
    }
}

impl<R: CoeffRing> Serialize for Poly<R> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de, R: CoeffRing> Deserialize<'de> for Poly<R> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z4(s: &str) -> Z4Poly {
        s.parse().unwrap()
    }

    fn f2(s: &str) -> F2Poly {
        s.parse().unwrap()
    }

    #[test]
    fn product_reduces_mod_4() {
        // (x+3)(x^2+x+1) = x^3 + 4x^2 + 4x + 3 = x^3 + 3
        assert_eq!(z4("x+3") * z4("x^2+x+1"), z4("x^3+3"));
    }

    #[test]
    fn multiplicative_identity() {
        let a = z4("3x^5+2x^2+1");
        assert_eq!(&a * &Z4Poly::one(), a);
    }

    #[test]
    fn z2_remainder() {
        // (x^2+x+1) mod (x+1) over Z2: synthetic division gives 1.
        let (q, r) = f2("x^2+x+1").div_rem(&f2("x+1")).unwrap();
        assert_eq!(r, F2Poly::one());
        assert_eq!(&q * &f2("x+1") + r, f2("x^2+x+1"));
    }

    #[test]
    fn division_by_non_unit_leading_rejected() {
        let a = z4("x^3+1");
        let d = z4("2x+1");
        assert!(matches!(
            a.div_rem(&d),
            Err(Error::NonUnitDivisor { leading: 2, .. })
        ));
        assert!(matches!(a.div_rem(&Z4Poly::zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn unit_leading_division_works() {
        // 3f divides x^n-1 whenever f does; exercised via n=3, f=x+3.
        let p = z4("x+3").scaled(Z4::new(3));
        assert!(p.divides(&Z4Poly::xn_minus_1(3)).unwrap());
    }

    #[test]
    fn degree_sentinel() {
        assert_eq!(Z4Poly::zero().degree(), Degree::NegInf);
        assert_eq!(z4("3").degree(), Degree::Of(0));
        assert_eq!(z4("x^7+x").degree(), Degree::Of(7));
        assert!(Degree::NegInf < Degree::Of(0));
    }

    #[test]
    fn parse_display_fixed_points() {
        for s in ["0", "1", "3", "x", "x^15+3x^14+2x^13+x+3", "2x^2+3"] {
            assert_eq!(z4(s).to_string(), s);
        }
        assert_eq!(z4("x^3-1"), z4("x^3+3"));
        assert_eq!(z4("5x+4"), z4("x"));
        assert_eq!(f2("x^3 + x + 1"), f2("x^3+x+1"));
        assert!("".parse::<Z4Poly>().is_err());
        assert!("x^".parse::<Z4Poly>().is_err());
        assert!("y+1".parse::<Z4Poly>().is_err());
        assert!("x+{3}".parse::<Z4Poly>().is_err());
    }

    #[test]
    fn xn_minus_1_form() {
        assert_eq!(Z4Poly::xn_minus_1(3), z4("x^3+3"));
        assert_eq!(F2Poly::xn_minus_1(3), f2("x^3+1"));
    }

    #[test]
    fn reduce_mod_xn_minus_1_wraps() {
        // x^4 + x mod x^3-1 = x + x = 2x over Z4.
        assert_eq!(z4("x^4+x").reduce_mod_xn_minus_1(3), z4("2x"));
        assert_eq!(z4("x^3").reduce_mod_xn_minus_1(3), Z4Poly::one());
    }

    #[test]
    fn gcd_examples() {
        let a = f2("x^3+1"); // (x+1)(x^2+x+1)
        let b = f2("x^2+1"); // (x+1)^2
        assert_eq!(a.gcd(&b), f2("x+1"));
        assert_eq!(a.gcd(&F2Poly::zero()), a);
    }

    fn arb_z4poly(max_deg: usize) -> impl Strategy<Value = Z4Poly> {
        proptest::collection::vec(0u8..4, 0..=max_deg + 1).prop_map(|v| Z4Poly::from_residues(&v))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_z4poly(8), b in arb_z4poly(8), c in arb_z4poly(8)) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, Z4Poly::zero());
        }

        #[test]
        fn div_rem_reconstructs(a in arb_z4poly(12), d in arb_z4poly(6)) {
            prop_assume!(d.leading().is_some_and(|c| c.is_unit()));
            let (q, r) = a.div_rem(&d).unwrap();
            prop_assert!(r.degree() < d.degree());
            prop_assert!((&a * &d).rem(&d).unwrap().is_zero());
            prop_assert_eq!(&(&q * &d) + &r, a);
        }

        #[test]
        fn display_parse_roundtrip(a in arb_z4poly(16)) {
            let s = a.to_string();
            prop_assert_eq!(s.parse::<Z4Poly>().unwrap(), a);
        }
    }
}
