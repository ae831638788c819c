//! Dense matrices over arbitrary-precision signed integers.
//!
//! Everything in this crate is exact: entries are [`BigInt`] and no floating
//! point is used anywhere. The matrices stay small (a few hundred rows at
//! most), so a dense row-major layout with schoolbook multiplication is the
//! right trade-off; what matters is that determinants, powers, and minors are
//! computed without overflow or rounding.

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    /// All-zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    /// Identity matrix of size `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from nested rows. Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        for (i, row) in rows.iter().enumerate() {
            assert!(
                row.len() == ncols,
                "ragged rows: row 0 has {} entries, row {} has {}",
                ncols,
                i,
                row.len()
            );
        }
        IntegerMatrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Convenience constructor from machine-integer rows (tests, companions).
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    /// Builds a matrix entry by entry from a closure.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntegerMatrix { rows, cols, data }
    }

    /// Assembles a block matrix from a grid of blocks. Block heights must be
    /// constant along each block row and widths constant along each block
    /// column.
    pub fn from_blocks(blocks: &[Vec<&IntegerMatrix>]) -> Self {
        assert!(!blocks.is_empty() && !blocks[0].is_empty(), "empty block grid");
        let grid_cols = blocks[0].len();
        for row in blocks {
            assert!(row.len() == grid_cols, "ragged block grid");
        }
        let heights: Vec<usize> = blocks.iter().map(|row| row[0].rows).collect();
        let widths: Vec<usize> = blocks[0].iter().map(|b| b.cols).collect();
        for (bi, row) in blocks.iter().enumerate() {
            for (bj, b) in row.iter().enumerate() {
                assert!(
                    b.rows == heights[bi] && b.cols == widths[bj],
                    "block ({bi},{bj}) is {}x{}, expected {}x{}",
                    b.rows,
                    b.cols,
                    heights[bi],
                    widths[bj]
                );
            }
        }
        let mut m = Self::zeros(heights.iter().sum(), widths.iter().sum());
        let mut row_off = 0;
        for (bi, row) in blocks.iter().enumerate() {
            let mut col_off = 0;
            for (bj, b) in row.iter().enumerate() {
                for i in 0..b.rows {
                    for j in 0..b.cols {
                        m[(row_off + i, col_off + j)] = b[(i, j)].clone();
                    }
                }
                col_off += widths[bj];
            }
            row_off += heights[bi];
        }
        m
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Whether the matrix is square.
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Transposed copy.
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// The submatrix selecting the given rows and columns, in order.
    pub fn submatrix(&self, row_sel: &[usize], col_sel: &[usize]) -> Self {
        for &r in row_sel {
            assert!(r < self.rows, "row index {r} out of range");
        }
        for &c in col_sel {
            assert!(c < self.cols, "column index {c} out of range");
        }
        Self::from_fn(row_sel.len(), col_sel.len(), |i, j| {
            self[(row_sel[i], col_sel[j])].clone()
        })
    }

    /// Copy with one row and one column deleted.
    pub fn without_row_col(&self, row: usize, col: usize) -> Self {
        assert!(row < self.rows && col < self.cols, "index out of range");
        let rs: Vec<usize> = (0..self.rows).filter(|&r| r != row).collect();
        let cs: Vec<usize> = (0..self.cols).filter(|&c| c != col).collect();
        self.submatrix(&rs, &cs)
    }

    /// `self` raised to the power `e` by repeated squaring. Requires square.
    pub fn pow(&self, mut e: u64) -> Self {
        assert!(self.is_square(), "pow requires a square matrix");
        let mut result = Self::identity(self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `selfⁿ − I`, the presentation matrix obtained from an order-`n` power
    /// of a recurrence companion. Requires a square matrix and `n ≥ 1`.
    pub fn power_minus_identity(&self, n: u64) -> Self {
        assert!(self.is_square(), "power_minus_identity requires a square matrix");
        assert!(n >= 1, "power_minus_identity requires n >= 1");
        &self.pow(n) - &Self::identity(self.rows)
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    ///
    /// Intermediate divisions are exact by the Sylvester determinant identity,
    /// so entry growth stays polynomial instead of exponential.
    pub fn determinant(&self) -> BigInt {
        assert!(
            self.is_square(),
            "determinant requires a square matrix ({}x{})",
            self.rows,
            self.cols
        );
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.to_row_vecs();
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        negate = !negate;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = t / &prev;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        let det = std::mem::take(&mut m[n - 1][n - 1]);
        if negate {
            -det
        } else {
            det
        }
    }

    /// Greatest common divisor of all `k×k` minor determinants, as a
    /// nonnegative integer (0 if every minor vanishes).
    ///
    /// Direct enumeration: the production call sites are 2×2 and 4×4
    /// matrices, where the full enumeration is a handful of determinants.
    /// Short-circuits as soon as the running gcd reaches 1.
    pub fn minors_gcd(&self, k: usize) -> BigInt {
        assert!(
            k >= 1 && k <= self.rows.min(self.cols),
            "minor order {k} out of range for a {}x{} matrix",
            self.rows,
            self.cols
        );
        let mut g = BigInt::zero();
        for rs in (0..self.rows).combinations(k) {
            for cs in (0..self.cols).combinations(k) {
                let d = self.submatrix(&rs, &cs).determinant();
                g = g.gcd(&d);
                if g.is_one() {
                    return g;
                }
            }
        }
        g
    }

    /// Serializes to the plain-text fixture format: a `rows cols` header line
    /// followed by one whitespace-separated line per row.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.rows, self.cols);
        for i in 0..self.rows {
            let line = (0..self.cols).map(|j| self[(i, j)].to_string()).join(" ");
            out.push_str(&line);
            out.push('\n');
        }
        out
    }

    /// Parses the plain-text fixture format produced by [`to_text`].
    /// Tokens may be split across lines arbitrarily; only their order counts.
    ///
    /// [`to_text`]: IntegerMatrix::to_text
    pub fn parse_text(input: &str) -> Result<Self, MatrixTextError> {
        let mut tokens = input.split_whitespace();
        let mut dim = |what: &'static str| -> Result<usize, MatrixTextError> {
            let tok = tokens.next().ok_or(MatrixTextError::MissingDimension(what))?;
            tok.parse()
                .map_err(|_| MatrixTextError::BadDimension(what, tok.to_string()))
        };
        let rows = dim("rows")?;
        let cols = dim("cols")?;
        let expected = rows * cols;
        let mut data = Vec::with_capacity(expected);
        for (index, tok) in tokens.by_ref().take(expected).enumerate() {
            let entry = tok.parse::<BigInt>().map_err(|_| MatrixTextError::BadEntry {
                index,
                token: tok.to_string(),
            })?;
            data.push(entry);
        }
        if data.len() < expected {
            return Err(MatrixTextError::MissingEntries {
                expected,
                found: data.len(),
            });
        }
        if tokens.next().is_some() {
            return Err(MatrixTextError::TrailingContent);
        }
        Ok(IntegerMatrix { rows, cols, data })
    }

    pub(crate) fn to_row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)].clone()).collect())
            .collect()
    }
}

impl Index<(usize, usize)> for IntegerMatrix {
    type Output = BigInt;

    fn index(&self, (r, c): (usize, usize)) -> &BigInt {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for IntegerMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut BigInt {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        &mut self.data[r * self.cols + c]
    }
}

impl Add for &IntegerMatrix {
    type Output = IntegerMatrix;

    fn add(self, rhs: Self) -> IntegerMatrix {
        assert!(
            self.rows == rhs.rows && self.cols == rhs.cols,
            "shape mismatch in addition"
        );
        IntegerMatrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] + &rhs[(i, j)])
    }
}

impl Sub for &IntegerMatrix {
    type Output = IntegerMatrix;

    fn sub(self, rhs: Self) -> IntegerMatrix {
        assert!(
            self.rows == rhs.rows && self.cols == rhs.cols,
            "shape mismatch in subtraction"
        );
        IntegerMatrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] - &rhs[(i, j)])
    }
}

impl Neg for &IntegerMatrix {
    type Output = IntegerMatrix;

    fn neg(self) -> IntegerMatrix {
        IntegerMatrix::from_fn(self.rows, self.cols, |i, j| -&self[(i, j)])
    }
}

impl Mul for &IntegerMatrix {
    type Output = IntegerMatrix;

    fn mul(self, rhs: Self) -> IntegerMatrix {
        assert!(
            self.cols == rhs.rows,
            "shape mismatch in multiplication: {}x{} times {}x{}",
            self.rows,
            self.cols,
            rhs.rows,
            rhs.cols
        );
        IntegerMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = BigInt::zero();
            for t in 0..self.cols {
                acc += &self[(i, t)] * &rhs[(t, j)];
            }
            acc
        })
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .data
            .iter()
            .map(|e| e.to_string().len())
            .max()
            .unwrap_or(1);
        for i in 0..self.rows {
            let line = (0..self.cols)
                .map(|j| format!("{:>width$}", self[(i, j)].to_string()))
                .join(" ");
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntegerMatrix {}x{}", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}

/// Errors from [`IntegerMatrix::parse_text`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatrixTextError {
    /// The `rows cols` header is incomplete.
    MissingDimension(&'static str),
    /// A header token is not a valid dimension.
    BadDimension(&'static str, String),
    /// An entry token is not a valid integer.
    BadEntry {
        /// Zero-based position of the offending entry in row-major order.
        index: usize,
        /// The token as found in the input.
        token: String,
    },
    /// The input ended before `rows × cols` entries were read.
    MissingEntries {
        /// Number of entries the header promised.
        expected: usize,
        /// Number of entries actually present.
        found: usize,
    },
    /// Extra tokens remain after the last entry.
    TrailingContent,
}

impl fmt::Display for MatrixTextError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixTextError::MissingDimension(what) => {
                write!(f, "missing {what} in matrix header")
            }
            MatrixTextError::BadDimension(what, tok) => {
                write!(f, "invalid {what} {tok:?} in matrix header")
            }
            MatrixTextError::BadEntry { index, token } => {
                write!(f, "entry {index} is not an integer: {token:?}")
            }
            MatrixTextError::MissingEntries { expected, found } => {
                write!(f, "expected {expected} entries, found only {found}")
            }
            MatrixTextError::TrailingContent => {
                write!(f, "trailing content after the final matrix entry")
            }
        }
    }
}

impl std::error::Error for MatrixTextError {}

/// The circulant matrix whose first row is `first_row`: row `i` is the cyclic
/// right-shift of row 0 by `i` positions, i.e. entry `(i, j)` equals
/// `first_row[(j − i) mod n]`.
///
/// Panics if `first_row.len() != n`.
pub fn circulant<C>(first_row: &[C], n: usize) -> IntegerMatrix
where
    C: Clone + Into<BigInt>,
{
    assert!(
        first_row.len() == n,
        "circulant first row has {} entries, expected {n}",
        first_row.len()
    );
    let row: Vec<BigInt> = first_row.iter().map(|c| c.clone().into()).collect();
    IntegerMatrix::from_fn(n, n, |i, j| row[(n + j - i) % n].clone())
}

/// Evaluates a Laurent polynomial at the `n×n` left-shift matrix `T`
/// (`T = circulant(0,1,0,…,0)`, so `T[i][j] = 1` iff `j ≡ i+1 mod n`).
///
/// `terms` maps exponents to coefficients; exponents are taken modulo `n`
/// (so `T⁻¹ = Tⁿ⁻¹`) and coefficients landing on the same residue
/// accumulate. The result is the circulant with first row equal to the
/// folded coefficient vector.
pub fn laurent_in_shift<C>(n: usize, terms: &[(i64, C)]) -> IntegerMatrix
where
    C: Clone + Into<BigInt>,
{
    assert!(n >= 1, "laurent_in_shift requires n >= 1");
    let mut row = vec![BigInt::zero(); n];
    for (exp, coeff) in terms {
        let idx = exp.rem_euclid(n as i64) as usize;
        row[idx] += coeff.clone().into();
    }
    circulant(&row, n)
}
