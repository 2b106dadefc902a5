//! The bundled reference record: a good quasi-cyclic [86, 4^15*2^0, 55]
//! code over Z4, reconstructible end to end from the generator
//! polynomials below. Its Gray image is a binary (172, 2^30, 55) code,
//! beating the best known binary linear [172, 30] distance of 54.
//!
//! The cyclic base code has length 43 and splitting f*g*h = x^43 - 1
//! with h = 1, so the principal generator is p = 3f and the base code
//! is the free cyclic [43, 4^15*2^0, 16] code. The QC code is spanned
//! by the block row (p, p*f1).

use crate::codes::WeightEnumerator;
use crate::construct::{CyclicCodeSpec, QcSpec};
use crate::error::Result;

pub const QC86_G: &str =
    "x^15+3x^14+2x^13+3x^12+2x^9+2x^8+2x^7+2x^6+x^3+2x^2+x+3";

pub const QC86_F: &str = "x^28+x^27+3x^26+2x^25+x^24+2x^22+3x^21+x^20+3x^19+2x^18+x^17+x^16+2x^15+3x^14+2x^13+x^12+x^11+2x^10+3x^9+x^8+3x^7+2x^6+x^4+2x^3+3x^2+x+1";

pub const QC86_F1: &str =
    "2x^13+x^12+x^10+2x^9+3x^8+x^7+3x^6+3x^5+3x^4+2x^2+x";

pub const QC86_M: usize = 43;
pub const QC86_L: usize = 2;

/// Claimed minimum Lee distance of the cyclic [43, 4^15] base code.
pub const QC86_CYCLIC_DISTANCE: u32 = 16;

/// Claimed minimum Lee distance of the QC [86, 4^15] code.
pub const QC86_DISTANCE: u32 = 55;

/// Best known binary linear [172, 30] minimum distance the record is
/// classified against.
pub const QC86_BINARY_RECORD: u32 = 54;

/// The claimed Lee weight enumerator, as published (weight, count)
/// pairs. The count at weight 104 is suspect: the listed total falls
/// short of 4^15 by exactly 1_000_000, consistent with a dropped
/// leading digit there. Verification reports any disagreement
/// explicitly rather than assuming either reading.
pub const QC86_CLAIMED_LEE_ENUMERATOR: &[(u32, u64)] = &[
    (0, 1),
    (55, 774),
    (56, 1591),
    (57, 3698),
    (58, 5289),
    (59, 13244),
    (60, 24639),
    (61, 43602),
    (62, 74691),
    (63, 132870),
    (64, 233877),
    (65, 374100),
    (66, 614169),
    (67, 970854),
    (68, 1502291),
    (69, 2252598),
    (70, 3320202),
    (71, 4791318),
    (72, 6689811),
    (73, 9186262),
    (74, 12274866),
    (75, 15998236),
    (76, 20463442),
    (77, 25598416),
    (78, 31106974),
    (79, 36948696),
    (80, 43080625),
    (81, 48872424),
    (82, 54121520),
    (83, 58775152),
    (84, 62257851),
    (85, 64430426),
    (86, 65299285),
    (87, 64550138),
    (88, 62322437),
    (89, 58728454),
    (90, 54154888),
    (91, 48850752),
    (92, 42923718),
    (93, 37050520),
    (94, 31176720),
    (95, 25516630),
    (96, 20478707),
    (97, 16029368),
    (98, 12290346),
    (99, 9187466),
    (100, 6707312),
    (101, 4753392),
    (102, 3279137),
    (103, 2255178),
    (104, 498636),
    (105, 982292),
    (106, 634379),
    (107, 382872),
    (108, 227341),
    (109, 134590),
    (110, 76067),
    (111, 41452),
    (112, 21930),
    (113, 10578),
    (114, 6665),
    (115, 3440),
    (116, 1118),
    (117, 1032),
    (118, 172),
    (120, 129),
    (121, 86),
    (122, 86),
    (129, 2),
];

pub fn claimed_enumerator() -> WeightEnumerator {
    WeightEnumerator::from_pairs(QC86_CLAIMED_LEE_ENUMERATOR)
}

/// The cyclic [43, 4^15] base spec (f, g, h=1 parsed from the bundled
/// strings).
pub fn cyclic43_spec() -> Result<CyclicCodeSpec> {
    CyclicCodeSpec::new(
        QC86_M,
        QC86_F.parse()?,
        QC86_G.parse()?,
        "1".parse()?,
    )
}

/// The QC spec (p, p*f1) with p = 3f.
pub fn qc86_spec() -> Result<QcSpec> {
    let spec = cyclic43_spec()?;
    QcSpec::new(
        QC86_M,
        spec.principal_generator().clone(),
        vec![QC86_F1.parse()?],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Z4Poly;

    #[test]
    fn splitting_multiplies_back() {
        let spec = cyclic43_spec().unwrap();
        assert_eq!(
            &(spec.f() * spec.g()) * spec.h(),
            Z4Poly::xn_minus_1(43)
        );
        assert_eq!((spec.k1(), spec.k2()), (15, 0));
        assert!(spec.is_free());
    }

    #[test]
    fn qc_shape() {
        let qc = qc86_spec().unwrap();
        assert_eq!(qc.length(), 86);
        assert_eq!(qc.l(), 2);
    }

    #[test]
    fn claimed_enumerator_total_short_by_a_million() {
        let total = claimed_enumerator().total();
        assert_eq!(4u128.pow(15) - total, 1_000_000);
    }
}
