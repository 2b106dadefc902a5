//! Generator matrices over Z4 and reduction to the standard block form
//!
//! ```text
//!     [ I_k1   A1      B  ]
//!     [ 0      2*I_k2  2C ]
//! ```
//!
//! reached by row operations plus a column permutation. k1 counts rows
//! with a unit pivot, k2 the remaining nonzero rows (pivot 2); the code
//! has 4^k1 * 2^k2 codewords and is free iff k2 = 0.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::vector::Z4Vector;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Z4Matrix {
    cols: usize,
    rows: Vec<Z4Vector>,
}

impl Z4Matrix {
    /// A matrix with explicit column count; rows may be empty.
    pub fn new(cols: usize, rows: Vec<Z4Vector>) -> Result<Self> {
        if cols == 0 {
            return Err(Error::EmptyMatrix);
        }
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::RaggedMatrix {
                    expected: cols,
                    row: i,
                    got: r.len(),
                });
            }
        }
        Ok(Z4Matrix { cols, rows })
    }

    /// Builds from at least one row, inferring the column count.
    pub fn from_rows(rows: Vec<Z4Vector>) -> Result<Self> {
        let cols = rows.first().map(Z4Vector::len).ok_or(Error::EmptyMatrix)?;
        Z4Matrix::new(cols, rows)
    }

    pub fn from_digit_rows(rows: &[&str]) -> Result<Self> {
        Z4Matrix::from_rows(rows.iter().map(|r| r.parse()).collect::<Result<_>>()?)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Z4Matrix {
            cols,
            rows: vec![Z4Vector::zeros(cols); rows],
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Z4Vector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &Z4Vector {
        &self.rows[i]
    }

    pub fn entry(&self, i: usize, j: usize) -> u8 {
        self.rows[i].symbols()[j]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, v: u8) {
        assert!(v < 4);
        let mut symbols = self.rows[i].symbols().to_vec();
        symbols[j] = v;
        self.rows[i] = Z4Vector::new(symbols).unwrap();
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Z4Vector::is_zero)
    }

    /// Entrywise sum mod 4.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        assert_eq!(self.rows.len(), other.rows.len());
        Z4Matrix {
            cols: self.cols,
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    /// Horizontal concatenation [self | other].
    pub fn hcat(&self, other: &Self) -> Self {
        assert_eq!(self.rows.len(), other.rows.len());
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| {
                let mut s = a.symbols().to_vec();
                s.extend_from_slice(b.symbols());
                Z4Vector::new(s).unwrap()
            })
            .collect();
        Z4Matrix {
            cols: self.cols + other.cols,
            rows,
        }
    }

    pub fn standard_form(&self) -> StandardForm {
        standard_form(self)
    }
}

impl fmt::Display for Z4Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Z4Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Z4Matrix {}x{} [", self.rows.len(), self.cols)?;
        for r in &self.rows {
            writeln!(f, "  {r}")?;
        }
        write!(f, "]")
    }
}

/// Result of standard-form reduction. `matrix` is in the block shape
/// above; `col_perm[j]` is the original column shown at position j, so
/// un-permuting `matrix` recovers a basis of the original row space.
#[derive(Clone, Debug)]
pub struct StandardForm {
    pub matrix: Z4Matrix,
    pub k1: usize,
    pub k2: usize,
    pub col_perm: Vec<usize>,
}

impl StandardForm {
    /// The reduced basis mapped back to the original column order. Its
    /// span equals the span of the input matrix exactly.
    pub fn basis_in_original_columns(&self) -> Vec<Z4Vector> {
        let n = self.matrix.cols();
        self.matrix
            .rows()
            .iter()
            .map(|row| {
                let mut symbols = vec![0u8; n];
                for (j, &s) in row.symbols().iter().enumerate() {
                    symbols[self.col_perm[j]] = s;
                }
                Z4Vector::new(symbols).unwrap()
            })
            .collect()
    }

    /// Number of codewords, 4^k1 * 2^k2.
    pub fn code_size(&self) -> u128 {
        1u128 << (2 * self.k1 + self.k2)
    }
}

fn standard_form(g: &Z4Matrix) -> StandardForm {
    let n = g.cols();
    let mut rows: Vec<Vec<u8>> = g.rows().iter().map(|r| r.symbols().to_vec()).collect();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut pivot = 0usize;

    let swap_cols = |rows: &mut Vec<Vec<u8>>, perm: &mut Vec<usize>, a: usize, b: usize| {
        if a != b {
            for r in rows.iter_mut() {
                r.swap(a, b);
            }
            perm.swap(a, b);
        }
    };

    // Phase 1: unit pivots.
    let mut k1 = 0;
    'outer: loop {
        for c in pivot..n {
            for r in pivot..rows.len() {
                if rows[r][c] == 1 || rows[r][c] == 3 {
                    rows.swap(pivot, r);
                    swap_cols(&mut rows, &mut perm, pivot, c);
                    if rows[pivot][pivot] == 3 {
                        for x in rows[pivot].iter_mut() {
                            *x = (*x * 3) & 3;
                        }
                    }
                    for other in 0..rows.len() {
                        if other != pivot && rows[other][pivot] != 0 {
                            let factor = rows[other][pivot];
                            for j in 0..n {
                                let sub = (factor * rows[pivot][j]) & 3;
                                rows[other][j] = (rows[other][j] + 4 - sub) & 3;
                            }
                        }
                    }
                    k1 += 1;
                    pivot += 1;
                    continue 'outer;
                }
            }
        }
        break;
    }

    // Phase 2: pivots of 2. Rows below k1 now have entries in {0, 2}.
    let mut k2 = 0;
    'outer2: loop {
        for c in pivot..n {
            for r in pivot..rows.len() {
                if rows[r][c] == 2 {
                    rows.swap(pivot, r);
                    swap_cols(&mut rows, &mut perm, pivot, c);
                    for other in 0..rows.len() {
                        if other != pivot {
                            // entries >= 2 in this column are cleared mod 2,
                            // leaving the top block with entries 0 or 1 here
                            if rows[other][pivot] >= 2 {
                                for j in 0..n {
                                    rows[other][j] = (rows[other][j] + 4 - rows[pivot][j]) & 3;
                                }
                            }
                        }
                    }
                    k2 += 1;
                    pivot += 1;
                    continue 'outer2;
                }
            }
        }
        break;
    }

    rows.truncate(k1 + k2);
    let matrix = Z4Matrix {
        cols: n,
        rows: rows
            .into_iter()
            .map(|r| Z4Vector::new(r).unwrap())
            .collect(),
    };
    StandardForm {
        matrix,
        k1,
        k2,
        col_perm: perm,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&str]) -> Z4Matrix {
        Z4Matrix::from_digit_rows(rows).unwrap()
    }

    fn span(rows: &[Z4Vector], n: usize) -> std::collections::BTreeSet<Z4Vector> {
        let mut set = std::collections::BTreeSet::new();
        set.insert(Z4Vector::zeros(n));
        for row in rows {
            let cur: Vec<Z4Vector> = set.iter().cloned().collect();
            for c in 1..4u8 {
                let scaled = row.scale(c);
                for w in &cur {
                    set.insert(w.add(&scaled));
                }
            }
            // re-close: adding one generator at a time needs a fixpoint
            loop {
                let mut added = false;
                let snapshot: Vec<Z4Vector> = set.iter().cloned().collect();
                for w in &snapshot {
                    let s = w.add(row);
                    if set.insert(s) {
                        added = true;
                    }
                }
                if !added {
                    break;
                }
            }
        }
        set
    }

    #[test]
    fn single_two_entry() {
        let sf = m(&["2"]).standard_form();
        assert_eq!((sf.k1, sf.k2), (0, 1));
        assert_eq!(sf.code_size(), 2);
    }

    #[test]
    fn already_standard() {
        let sf = m(&["113", "022"]).standard_form();
        assert_eq!((sf.k1, sf.k2), (1, 1));
        assert_eq!(sf.code_size(), 8);
    }

    #[test]
    fn column_permutation_needed() {
        let g = m(&["21"]);
        let sf = g.standard_form();
        assert_eq!((sf.k1, sf.k2), (1, 0));
        // span preserved: exhaustive comparison over 4 codewords
        assert_eq!(
            span(&sf.basis_in_original_columns(), 2),
            span(g.rows(), 2)
        );
    }

    #[test]
    fn zero_matrix_is_empty_form() {
        let sf = Z4Matrix::zeros(2, 3).standard_form();
        assert_eq!((sf.k1, sf.k2), (0, 0));
        assert_eq!(sf.matrix.row_count(), 0);
        assert_eq!(sf.code_size(), 1);
    }

    #[test]
    fn block_shape_of_result() {
        let g = m(&["2301", "1123", "2222"]);
        let sf = g.standard_form();
        let sm = &sf.matrix;
        for i in 0..sf.k1 {
            for j in 0..sf.k1 {
                assert_eq!(sm.entry(i, j), u8::from(i == j), "identity block");
            }
            for j in sf.k1..sf.k1 + sf.k2 {
                assert!(sm.entry(i, j) <= 1, "A1 block entries are 0/1");
            }
        }
        for i in sf.k1..sf.k1 + sf.k2 {
            for j in 0..sf.k1 {
                assert_eq!(sm.entry(i, j), 0, "zero block");
            }
            for j in sf.k1..sm.cols() {
                assert!(sm.entry(i, j) % 2 == 0, "bottom rows are 2*(binary)");
                let expect = if j < sf.k1 + sf.k2 {
                    u8::from(i == j) * 2
                } else {
                    sm.entry(i, j)
                };
                assert_eq!(sm.entry(i, j), expect);
            }
        }
    }

    #[test]
    fn span_preserved_random_small() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let rows = rng.gen_range(1..4);
            let cols = rng.gen_range(1..5);
            let g = Z4Matrix::from_rows(
                (0..rows)
                    .map(|_| {
                        Z4Vector::new((0..cols).map(|_| rng.gen_range(0..4)).collect()).unwrap()
                    })
                    .collect(),
            )
            .unwrap();
            let sf = g.standard_form();
            assert_eq!(
                span(&sf.basis_in_original_columns(), cols),
                span(g.rows(), cols)
            );
            assert_eq!(
                span(g.rows(), cols).len() as u128,
                sf.code_size(),
                "size formula vs exhaustive span for {g:?}"
            );
        }
    }
}
