//! Smith normal form over the integers.
//!
//! The invariant factors of a presentation matrix completely determine the
//! finitely generated abelian group it presents, so this is the workhorse
//! behind every Jacobian computation in the crate.

use crate::matrix::IntegerMatrix;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Result of reducing an integer matrix to Smith normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    invariant_factors: Vec<BigInt>,
    free_rank: usize,
}

impl SmithDecomposition {
    /// The nonzero diagonal entries `d₁ | d₂ | … | d_r` as positive integers,
    /// unit factors included (so the length equals the rank).
    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    /// Rank of the matrix over the rationals.
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Number of columns beyond the rank (the rational nullity). For a square
    /// presentation matrix this is the free rank of its cokernel.
    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    /// The invariant factors greater than 1, i.e. the cyclic orders of the
    /// torsion part of the cokernel.
    pub fn torsion_factors(&self) -> Vec<BigInt> {
        self.invariant_factors
            .iter()
            .filter(|f| !f.is_one())
            .cloned()
            .collect()
    }
}

/// Computes the Smith normal form of `m`.
///
/// Gcd-driven elimination: each round moves the nonzero entry of least
/// absolute value in the remaining block to the pivot position (which curbs
/// entry explosion), clears its row and column by Euclidean steps, and then
/// enforces that the pivot divides every remaining entry before moving on.
/// Row and column operations are unimodular throughout, so the diagonal that
/// emerges is exactly the invariant-factor chain.
#[allow(clippy::needless_range_loop)] // the elimination loops touch two rows at once
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithDecomposition {
    let rows = m.rows();
    let cols = m.cols();
    let mut a = m.to_row_vecs();
    let mut invariant_factors = Vec::new();

    for k in 0..rows.min(cols) {
        if !move_least_entry_to_pivot(&mut a, k) {
            break; // remaining block is zero
        }
        'reduce: loop {
            // Clear column k by row operations. A nonzero remainder is
            // strictly smaller than the pivot; swapping it up makes progress
            // in a Euclidean descent.
            for i in k + 1..rows {
                if a[i][k].is_zero() {
                    continue;
                }
                let q = &a[i][k] / &a[k][k];
                if !q.is_zero() {
                    for j in k..cols {
                        let t = &q * &a[k][j];
                        a[i][j] -= t;
                    }
                }
                if !a[i][k].is_zero() {
                    a.swap(i, k);
                    continue 'reduce;
                }
            }
            // Clear row k by column operations. Entries below row k are
            // untouched because column k is already zero there.
            for j in k + 1..cols {
                if a[k][j].is_zero() {
                    continue;
                }
                let q = &a[k][j] / &a[k][k];
                if !q.is_zero() {
                    for i in k..rows {
                        let t = &q * &a[i][k];
                        a[i][j] -= t;
                    }
                }
                if !a[k][j].is_zero() {
                    swap_columns(&mut a, j, k);
                    continue 'reduce;
                }
            }
            // Pivot row and column are clear. Enforce divisibility: if some
            // remaining entry is not a multiple of the pivot, fold its row
            // into row k and re-eliminate (the next pass strictly shrinks
            // the pivot, so this terminates).
            for i in k + 1..rows {
                for j in k + 1..cols {
                    if !(&a[i][j] % &a[k][k]).is_zero() {
                        for col in k..cols {
                            let t = a[i][col].clone();
                            a[k][col] += t;
                        }
                        continue 'reduce;
                    }
                }
            }
            break;
        }
        invariant_factors.push(a[k][k].abs());
    }

    debug_assert!(invariant_factors
        .windows(2)
        .all(|w| (&w[1] % &w[0]).is_zero()));
    SmithDecomposition {
        free_rank: cols - invariant_factors.len(),
        invariant_factors,
    }
}

/// Swaps the nonzero entry of least absolute value in the block at `(k.., k..)`
/// into position `(k, k)`. Returns false if the block is entirely zero.
fn move_least_entry_to_pivot(a: &mut [Vec<BigInt>], k: usize) -> bool {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(k) {
        for (j, entry) in row.iter().enumerate().skip(k) {
            if entry.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if a[bi][bj].abs() <= entry.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    let Some((i, j)) = best else { return false };
    a.swap(i, k);
    swap_columns(a, j, k);
    true
}

fn swap_columns(a: &mut [Vec<BigInt>], j1: usize, j2: usize) {
    if j1 != j2 {
        for row in a.iter_mut() {
            row.swap(j1, j2);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn factors_i64(m: &IntegerMatrix) -> Vec<i64> {
        smith_normal_form(m)
            .invariant_factors()
            .iter()
            .map(|f| f.to_i64().unwrap())
            .collect()
    }

    #[test]
    fn diagonal_matrix_with_chain_passes_through() {
        let m = IntegerMatrix::from_i64_rows(&[&[2, 0, 0], &[0, 6, 0], &[0, 0, 0]]);
        let snf = smith_normal_form(&m);
        assert_eq!(factors_i64(&m), vec![2, 6]);
        assert_eq!(snf.free_rank(), 1);
        assert_eq!(snf.rank(), 2);
    }

    #[test]
    fn rank_one_matrix() {
        let m = IntegerMatrix::from_i64_rows(&[&[2, 4], &[4, 8]]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.invariant_factors(), &[BigInt::from(2)]);
        assert_eq!(snf.free_rank(), 1);
    }

    #[test]
    fn diagonal_entries_out_of_order_are_rechained() {
        let m = IntegerMatrix::from_i64_rows(&[&[6, 0], &[0, 4]]);
        assert_eq!(factors_i64(&m), vec![2, 12]);
    }

    #[test]
    fn off_diagonal_divisibility_fix() {
        // gcd of entries is 1 even though the least entry is 2.
        let m = IntegerMatrix::from_i64_rows(&[&[2, 0], &[0, 3]]);
        assert_eq!(factors_i64(&m), vec![1, 6]);
    }

    #[test]
    fn zero_matrix_is_all_free() {
        let snf = smith_normal_form(&IntegerMatrix::zeros(2, 3));
        assert!(snf.invariant_factors().is_empty());
        assert_eq!(snf.free_rank(), 3);
    }

    #[test]
    fn empty_matrix() {
        let snf = smith_normal_form(&IntegerMatrix::zeros(0, 0));
        assert!(snf.invariant_factors().is_empty());
        assert_eq!(snf.free_rank(), 0);
    }

    #[test]
    fn negative_entries_yield_positive_factors() {
        let m = IntegerMatrix::from_i64_rows(&[&[-4, 0], &[0, -6]]);
        assert_eq!(factors_i64(&m), vec![2, 12]);
    }

    #[test]
    fn rectangular_matrices() {
        let wide = IntegerMatrix::from_i64_rows(&[&[2, 0, 0]]);
        let snf = smith_normal_form(&wide);
        assert_eq!(snf.invariant_factors(), &[BigInt::from(2)]);
        assert_eq!(snf.free_rank(), 2);

        let tall = IntegerMatrix::from_i64_rows(&[&[3], &[6]]);
        let snf = smith_normal_form(&tall);
        assert_eq!(snf.invariant_factors(), &[BigInt::from(3)]);
        assert_eq!(snf.free_rank(), 0);
    }

    #[test]
    fn product_of_factors_matches_determinant() {
        let m = IntegerMatrix::from_i64_rows(&[&[7, -3, 2], &[4, 4, -1], &[0, 5, 9]]);
        let det = m.determinant();
        let product: BigInt = smith_normal_form(&m).invariant_factors().iter().product();
        assert_eq!(product, det.abs());
    }

    #[test]
    fn torsion_factors_drop_units() {
        let m = IntegerMatrix::from_i64_rows(&[&[1, 0], &[0, 6]]);
        assert_eq!(
            smith_normal_form(&m).torsion_factors(),
            vec![BigInt::from(6)]
        );
    }

    #[test]
    fn invariant_under_transpose() {
        let m = IntegerMatrix::from_i64_rows(&[&[2, 5, 1], &[0, -3, 4]]);
        assert_eq!(
            smith_normal_form(&m).invariant_factors(),
            smith_normal_form(&m.transpose()).invariant_factors()
        );
    }
}
