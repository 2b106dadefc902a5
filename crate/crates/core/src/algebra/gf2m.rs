//! Arithmetic in GF(2^m) with a polynomial-basis representation, plus
//! the GF(2)[x] bit-packed helpers it is built on. Elements are u64
//! bit masks (bit i = coefficient of x^i), which covers every field
//! needed for factoring x^n - 1 with odd n <= 63 (m <= 60 there).

/// Carryless multiplication in GF(2)[x].
fn clmul(a: u64, b: u64) -> u128 {
    let mut acc: u128 = 0;
    let mut b = b;
    let mut shift = 0;
    while b != 0 {
        let tz = b.trailing_zeros();
        shift += tz;
        acc ^= (a as u128) << shift;
        b >>= tz;
        b >>= 1;
        shift += 1;
    }
    acc
}

fn poly_degree(x: u128) -> Option<u32> {
    if x == 0 {
        None
    } else {
        Some(127 - x.leading_zeros())
    }
}

/// Remainder of a mod b in GF(2)[x].
fn poly_rem(mut a: u128, b: u128) -> u128 {
    let db = poly_degree(b).expect("division by zero polynomial");
    while let Some(da) = poly_degree(a) {
        if da < db {
            break;
        }
        a ^= b << (da - db);
    }
    a
}

fn poly_gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let r = poly_rem(a, b);
        a = b;
        b = r;
    }
    a
}

/// x^(2^k) mod f by repeated squaring.
fn x_pow_pow2_mod(f: u128, k: u32) -> u128 {
    let mut t: u128 = 0b10; // x
    for _ in 0..k {
        t = poly_rem(clmul(t as u64, t as u64), f);
    }
    t
}

pub(crate) fn prime_factors(mut x: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= x {
        if x % p == 0 {
            out.push(p);
            while x % p == 0 {
                x /= p;
            }
        }
        p += 1;
    }
    if x > 1 {
        out.push(x);
    }
    out
}

/// Rabin's irreducibility test for f of degree m over GF(2).
fn is_irreducible(f: u128, m: u32) -> bool {
    // x^(2^m) == x mod f, and gcd(x^(2^(m/q)) - x, f) = 1 for primes q | m.
    if x_pow_pow2_mod(f, m) != 0b10 {
        return false;
    }
    for q in prime_factors(m as u64) {
        let t = x_pow_pow2_mod(f, m / q as u32);
        if poly_gcd(t ^ 0b10, f) != 1 {
            return false;
        }
    }
    true
}

/// Finds the lexicographically smallest irreducible polynomial of
/// degree m over GF(2) by exhaustive sieve over candidates with
/// constant term 1.
fn find_irreducible(m: u32) -> u128 {
    assert!((1..=63).contains(&m));
    if m == 1 {
        return 0b11; // x + 1
    }
    let top = 1u128 << m;
    let mut low: u128 = 1;
    while low < top {
        let cand = top | low;
        if is_irreducible(cand, m) {
            return cand;
        }
        low += 2;
    }
    unreachable!("an irreducible polynomial of degree {m} exists");
}

/// GF(2^m) as GF(2)[x] modulo a fixed irreducible polynomial.
pub(crate) struct Gf2m {
    pub m: u32,
    modulus: u128,
}

impl Gf2m {
    pub fn new(m: u32) -> Self {
        Gf2m {
            m,
            modulus: find_irreducible(m),
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        poly_rem(clmul(a, b), self.modulus) as u64
    }

    pub fn pow(&self, mut base: u64, mut e: u128) -> u64 {
        let mut acc: u64 = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// The multiplicative group order 2^m - 1.
    pub fn group_order(&self) -> u128 {
        (1u128 << self.m) - 1
    }

    /// A field element of multiplicative order exactly n (n must divide
    /// 2^m - 1). Deterministic: scans base elements x, x+1, ... and
    /// raises each to the cofactor until the order checks out.
    pub fn element_of_order(&self, n: u64) -> u64 {
        assert!(n >= 1);
        if n == 1 {
            return 1;
        }
        let group = self.group_order();
        assert_eq!(group % n as u128, 0, "n must divide 2^m - 1");
        let cofactor = group / n as u128;
        let primes = prime_factors(n);
        let mut raw: u64 = 2;
        loop {
            let alpha = self.pow(raw, cofactor);
            if alpha != 1
                && primes
                    .iter()
                    .all(|&q| self.pow(alpha, (n / q) as u128) != 1)
            {
                return alpha;
            }
            raw += 1;
        }
    }
}
