//! Linear codes over Z4: exact algebra for cyclic-code enumeration via
//! Hensel lifting, quasi-cyclic constructions from circulant blocks,
//! the Gray map and Lee metric, an exhaustive bit-sliced distance
//! engine, a mutation-driven code search, and an append-only store of
//! code records classified against best-known binary codes.

pub mod algebra;
pub mod codes;
pub mod construct;
pub mod db;
pub mod error;
pub mod reference;
pub mod search;

pub use algebra::{cyclotomic_cosets, factor_xn_minus_1_mod2, factor_xn_minus_1_z4, hensel_lift};
pub use algebra::{CoeffRing, Degree, F2Poly, Poly, Z2, Z4, Z4Poly};
pub use codes::{
    gray_image, gray_map, inverse_gray, BinaryCodeSet, Linearity, Metric, QuaternaryCodeSet,
    WeightEnumerator, Z4LinearCode, Z4Matrix, Z4Vector,
};
pub use construct::{circulant, enumerate_cyclic, qc_bound_check, CyclicCodeSpec, QcSpec};
pub use db::{BinaryRecordTable, Classification, CodeRecord, RecordStore};
pub use error::{Error, Result};
pub use search::{gcs, qc_search, GcsConfig, SearchReport};
