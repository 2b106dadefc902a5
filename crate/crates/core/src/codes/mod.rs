//! Code objects over Z4: vectors and matrices, standard form, the
//! three weight functions, exhaustive minimum-distance and
//! weight-enumerator computation, and the Gray map in both directions.

pub mod code;
mod engine;
pub mod gray;
pub mod matrix;
mod packed;
pub mod vector;

pub use code::{ChunkedHistogram, WeightEnumerator, Z4LinearCode};
pub use gray::{
    gray_image, gray_map, gray_symbol, inverse_gray, inverse_gray_pair, BinaryCodeSet, Linearity,
    QuaternaryCodeSet, LINEARITY_CHECK_BOUND,
};
pub use matrix::{StandardForm, Z4Matrix};
pub use vector::{Metric, Z4Vector};
