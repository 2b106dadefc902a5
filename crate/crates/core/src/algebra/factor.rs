//! Factorization of x^n - 1 over Z2 for odd n, and Hensel lifting of
//! the factors to Z4 by Graeffe's method.
//!
//! The Z2 factors are built directly from cyclotomic cosets: construct
//! GF(2^m) with m the multiplicative order of 2 mod n, locate an element
//! alpha of order n, and take each factor as the minimal polynomial
//! prod_{t in coset} (x - alpha^t). Degrees are forced by coset sizes,
//! so the construction is self-checking.

use std::cmp::Ordering;

use num_traits::Zero;

use super::cosets::cyclotomic_cosets;
use super::gf2m::Gf2m;
use super::poly::{F2Poly, Z4Poly};
use super::ring::{CoeffRing, Z2};
use crate::error::{Error, Result};

/// Multiplicative order of 2 mod n, for odd n >= 3.
pub fn multiplicative_order_of_2(n: usize) -> Result<u32> {
    if n == 0 || n % 2 == 0 {
        return Err(Error::OddLengthRequired(n));
    }
    if n == 1 {
        return Ok(1);
    }
    let mut pow: u64 = 2 % n as u64;
    let mut m = 1;
    while pow != 1 {
        pow = pow * 2 % n as u64;
        m += 1;
    }
    Ok(m)
}

/// Canonical factor order: ascending degree, then ascending
/// lexicographic order of the coefficient sequence read from the
/// highest degree down. This puts x^3+x+1 before x^3+x^2+1.
fn canonical_cmp(a: &F2Poly, b: &F2Poly) -> Ordering {
    let (da, db) = (a.coeffs().len(), b.coeffs().len());
    da.cmp(&db).then_with(|| {
        for i in (0..da).rev() {
            let ord = a.coeff(i).residue().cmp(&b.coeff(i).residue());
            if ord != Ordering::Equal {
                return ord;
            }
        }
        Ordering::Equal
    })
}

/// The irreducible factors of x^n - 1 over Z2 (n odd), in canonical
/// order. Their product is x^n - 1 and their count equals the number of
/// cyclotomic cosets mod n.
pub fn factor_xn_minus_1_mod2(n: usize) -> Result<Vec<F2Poly>> {
    if n == 0 || n % 2 == 0 {
        return Err(Error::OddLengthRequired(n));
    }
    if n == 1 {
        return Ok(vec!["x+1".parse()?]);
    }
    let cosets = cyclotomic_cosets(n)?;
    let m = multiplicative_order_of_2(n)?;
    let field = Gf2m::new(m);
    let alpha = field.element_of_order(n as u64);
    let mut alpha_pow = vec![1u64; n];
    for t in 1..n {
        alpha_pow[t] = field.mul(alpha_pow[t - 1], alpha);
    }

    let mut factors = Vec::with_capacity(cosets.count());
    for coset in cosets.cosets() {
        // prod (x + alpha^t) with coefficients in GF(2^m); the result
        // is fixed by Frobenius, hence lands in the prime field.
        let mut coeffs: Vec<u64> = vec![1];
        for &t in coset {
            let root = alpha_pow[t];
            let mut next = vec![0u64; coeffs.len() + 1];
            for (i, &c) in coeffs.iter().enumerate() {
                next[i + 1] ^= c;
                next[i] ^= field.mul(c, root);
            }
            coeffs = next;
        }
        debug_assert!(coeffs.iter().all(|&c| c <= 1));
        let poly = F2Poly::from_coeffs(coeffs.iter().map(|&c| Z2::new(c as u8)).collect());
        debug_assert_eq!(poly.coeffs().len(), coset.len() + 1);
        factors.push(poly);
    }
    factors.sort_by(canonical_cmp);

    let product = factors
        .iter()
        .fold(F2Poly::one(), |acc, f| &acc * f);
    debug_assert_eq!(product, F2Poly::xn_minus_1(n));
    Ok(factors)
}

/// The Hensel lift of a squarefree divisor f2 of x^n - 1 (n odd): the
/// unique monic polynomial over Z4 that divides x^n - 1 and reduces to
/// f2 mod 2. Computed with Graeffe's method: split
/// f2(x) = g0(x^2) + x*g1(x^2) and evaluate +-(g0(y)^2 - y*g1(y)^2)
/// over Z4, choosing the sign that makes the result monic.
pub fn hensel_lift(f2: &F2Poly) -> Result<Z4Poly> {
    if f2.is_zero() || f2.coeff(0).is_zero() {
        return Err(Error::NotLiftable(f2.to_string()));
    }
    // Squarefree over Z2 <=> gcd(f, f') = 1; together with a nonzero
    // constant term this characterizes the divisors of x^n - 1, n odd.
    if !f2.gcd(&f2.derivative()).is_one() {
        return Err(Error::NotLiftable(f2.to_string()));
    }

    let coeffs = f2.coeffs();
    let even: Vec<Z2> = coeffs.iter().step_by(2).copied().collect();
    let odd: Vec<Z2> = coeffs.iter().skip(1).step_by(2).copied().collect();
    let g0 = F2Poly::from_coeffs(even).lift_z4();
    let g1 = F2Poly::from_coeffs(odd).lift_z4();

    let candidate = &(&g0 * &g0) - &(&g1 * &g1).shifted(1);
    let lift = if candidate.is_monic() {
        candidate
    } else {
        -candidate
    };
    debug_assert!(lift.is_monic());
    debug_assert_eq!(&lift.mod2(), f2);
    debug_assert_eq!(lift.degree(), f2.degree());
    Ok(lift)
}

/// The basic irreducible factors of x^n - 1 over Z4 (n odd): the Hensel
/// lifts of the Z2 factors, in the same canonical order. Their product
/// is x^n - 1 over Z4.
pub fn factor_xn_minus_1_z4(n: usize) -> Result<Vec<Z4Poly>> {
    let lifts = factor_xn_minus_1_mod2(n)?
        .iter()
        .map(hensel_lift)
        .collect::<Result<Vec<_>>>()?;
    debug_assert_eq!(
        lifts.iter().fold(Z4Poly::one(), |acc, f| &acc * f),
        Z4Poly::xn_minus_1(n)
    );
    Ok(lifts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::Poly;
    use crate::algebra::ring::CoeffRing;

    fn parse<R: CoeffRing>(s: &str) -> Poly<R> {
        s.parse().unwrap()
    }

    fn strs<R: CoeffRing>(v: &[Poly<R>]) -> Vec<String> {
        v.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn mod2_factorizations() {
        assert_eq!(strs(&factor_xn_minus_1_mod2(1).unwrap()), ["x+1"]);
        assert_eq!(strs(&factor_xn_minus_1_mod2(3).unwrap()), ["x+1", "x^2+x+1"]);
        assert_eq!(
            strs(&factor_xn_minus_1_mod2(7).unwrap()),
            ["x+1", "x^3+x+1", "x^3+x^2+1"]
        );
    }

    #[test]
    fn even_n_rejected() {
        assert!(factor_xn_minus_1_mod2(6).is_err());
        assert!(factor_xn_minus_1_z4(0).is_err());
    }

    #[test]
    fn lift_examples() {
        assert_eq!(hensel_lift(&parse("x+1")).unwrap(), parse::<_>("x+3"));
        assert_eq!(hensel_lift(&parse("x^2+x+1")).unwrap(), parse::<_>("x^2+x+1"));
        assert_eq!(
            hensel_lift(&parse("x^3+x+1")).unwrap(),
            parse::<_>("x^3+2x^2+x+3")
        );
    }

    #[test]
    fn lift_rejects_non_divisors() {
        // x^2+1 = (x+1)^2 has a repeated root; x has zero constant term.
        assert!(hensel_lift(&parse("x^2+1")).is_err());
        assert!(hensel_lift(&parse("x")).is_err());
        assert!(hensel_lift(&F2Poly::zero()).is_err());
    }

    #[test]
    fn z4_factorizations() {
        assert_eq!(strs(&factor_xn_minus_1_z4(1).unwrap()), ["x+3"]);
        assert_eq!(strs(&factor_xn_minus_1_z4(3).unwrap()), ["x+3", "x^2+x+1"]);
        assert_eq!(
            strs(&factor_xn_minus_1_z4(7).unwrap()),
            ["x+3", "x^3+2x^2+x+3", "x^3+3x^2+2x+3"]
        );
    }

    #[test]
    fn products_and_degrees_small_n() {
        for n in (1..=31).step_by(2) {
            let f2 = factor_xn_minus_1_mod2(n).unwrap();
            let product = f2.iter().fold(F2Poly::one(), |acc, f| &acc * f);
            assert_eq!(product, F2Poly::xn_minus_1(n), "n={n}");

            let z4 = factor_xn_minus_1_z4(n).unwrap();
            let product = z4.iter().fold(Z4Poly::one(), |acc, f| &acc * f);
            assert_eq!(product, Z4Poly::xn_minus_1(n), "n={n}");

            let cosets = cyclotomic_cosets(n).unwrap();
            assert_eq!(f2.len(), cosets.count(), "n={n}");
            for (f, lift) in f2.iter().zip(&z4) {
                assert_eq!(&lift.mod2(), f, "n={n}");
                assert_eq!(lift.degree(), f.degree(), "n={n}");
            }
        }
    }
}
