//! Exact polynomial arithmetic over Z2 and Z4, cyclotomic cosets, and
//! the factorization of x^n - 1 (odd n) over both rings.

pub mod cosets;
pub mod factor;
mod gf2m;
pub mod poly;
pub mod ring;

pub use cosets::{cyclotomic_cosets, CyclotomicCosets};
pub use factor::{factor_xn_minus_1_mod2, factor_xn_minus_1_z4, hensel_lift};
pub use poly::{Degree, F2Poly, Poly, Z4Poly};
pub use ring::{CoeffRing, Z2, Z4};
