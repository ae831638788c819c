//! Small presentation matrices for Jacobian groups.
//!
//! The full 3n×3n Laplacian is never needed to read off the Jacobian:
//!
//! * for any Δ-graph there is a 2n×2n block matrix whose cokernel has the
//!   same torsion ([`block_reduction_matrix`]);
//! * for unit jumps the cokernel splits into two n×n circulant blocks
//!   ([`unit_jump_split`]);
//! * each circulant block `p(T)` reduces further to a fixed-size presentation
//!   `𝐶ⁿ − I`, where `𝐶` is the companion matrix of the polynomial `p`
//!   ([`quadratic_power_reduction`], [`quartic_power_reduction`]) — constant
//!   size regardless of n.
//!
//! The d-value formulas ([`d_values`]) express the minors-gcds of the quartic
//! reduction in closed form; they are the bridge from matrix reductions to
//! the purely arithmetic Jacobian formula in [`closed_form`].
//!
//! [`closed_form`]: crate::closed_form

use crate::cheb::{cheb_b, ChebPair};
use crate::graph::{layer_circulant, DeltaGraphSpec};
use crate::group::{canonicalize, AbelianGroup};
use crate::matrix::{laurent_in_shift, IntegerMatrix};
use crate::snf::smith_normal_form;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Companion matrix of a monic integer polynomial: 1s on the superdiagonal,
/// negated low-order coefficients in the last row. Both companions used here
/// come from reciprocal polynomials with constant term 1, so they are
/// unimodular — checked at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompanionMatrix {
    matrix: IntegerMatrix,
}

impl CompanionMatrix {
    /// Companion of `z² − 5z + 1`, the characteristic polynomial of the
    /// recurrence `t_{j+1} = 5t_j − t_{j−1}` shared by all sequences in
    /// [`cheb`](crate::cheb). Powers of it walk the recurrence, which turns
    /// the n×n block `5I − T − T⁻¹` into a 2×2 presentation.
    pub fn quadratic() -> Self {
        Self::from_last_row(&[-1, 5])
    }

    /// Companion of `z⁴ − 7z³ + 12z² − 7z + 1`, the characteristic
    /// polynomial of the degree-4 block `12I − 7T − 7T⁻¹ + T² + T⁻²`.
    pub fn quartic() -> Self {
        Self::from_last_row(&[-1, 7, -12, 7])
    }

    fn from_last_row(last_row: &[i64]) -> Self {
        let size = last_row.len();
        let mut m = IntegerMatrix::zeros(size, size);
        for i in 0..size - 1 {
            m[(i, i + 1)] = BigInt::one();
        }
        for (j, &c) in last_row.iter().enumerate() {
            m[(size - 1, j)] = BigInt::from(c);
        }
        assert!(
            m.determinant().is_one(),
            "companion matrix must be unimodular"
        );
        CompanionMatrix { matrix: m }
    }

    /// Side length (2 or 4 here).
    pub fn size(&self) -> usize {
        self.matrix.rows()
    }

    /// The underlying matrix.
    pub fn matrix(&self) -> &IntegerMatrix {
        &self.matrix
    }

    /// The presentation matrix `selfⁿ − I` for `n ≥ 1`.
    pub fn power_minus_identity(&self, n: u64) -> IntegerMatrix {
        self.matrix.power_minus_identity(n)
    }
}

/// The 2n×2n presentation `M = [[−I−A, I+B], [−I+C·A, −I−C]]`, where A, B, C
/// are the three layer blocks of the Laplacian of `spec`. Its cokernel has
/// the same torsion as the Laplacian cokernel, with two of the three layer
/// blocks eliminated.
pub fn block_reduction_matrix(spec: &DeltaGraphSpec) -> IntegerMatrix {
    let n = spec.n();
    let a = layer_circulant(n, spec.k());
    let b = layer_circulant(n, spec.l());
    let c = layer_circulant(n, spec.m());
    let identity = IntegerMatrix::identity(n);
    let top_left = -&(&identity + &a);
    let top_right = &identity + &b;
    let bottom_left = &(&c * &a) - &identity;
    let bottom_right = -&(&identity + &c);
    IntegerMatrix::from_blocks(&[
        vec![&top_left, &top_right],
        vec![&bottom_left, &bottom_right],
    ])
}

/// Jacobian group of `spec` via the 2n×2n block reduction: the torsion part
/// of the cokernel of [`block_reduction_matrix`].
pub fn jacobian_via_block_reduction(spec: &DeltaGraphSpec) -> AbelianGroup {
    AbelianGroup::cokernel_of(&block_reduction_matrix(spec)).torsion()
}

/// The two n×n circulant blocks whose cokernels together carry the Jacobian
/// of a unit-jump spec: with `A = 4I − T − T⁻¹` the Laplacian cokernel is
/// `coker(I+A) ⊕ coker((−2I+A)(I+A))`, and this returns
/// `(I+A, (−2I+A)(I+A)) = (5I−T−T⁻¹, 12I−7T−7T⁻¹+T²+T⁻²)`.
///
/// Only valid for specs with k = l = m = 1 (all three layer blocks must
/// coincide); callers gate on [`DeltaGraphSpec::has_unit_jumps`].
pub fn unit_jump_split(n: usize) -> (IntegerMatrix, IntegerMatrix) {
    assert!(n >= 3, "unit_jump_split requires n >= 3");
    let first = laurent_in_shift(n, &[(-1, -1), (0, 5), (1, -1)]);
    let second = laurent_in_shift(n, &[(-2, 1), (-1, -7), (0, 12), (1, -7), (2, 1)]);
    (first, second)
}

/// Jacobian group of Δ(n;1,1,1) via the cokernel splitting: the canonicalized
/// direct sum of the torsion of the two [`unit_jump_split`] blocks.
pub fn jacobian_via_split(n: usize) -> AbelianGroup {
    let (first, second) = unit_jump_split(n);
    let mut orders = smith_normal_form(&first).torsion_factors();
    orders.extend(smith_normal_form(&second).torsion_factors());
    canonicalize(&orders)
}

/// `𝒫ⁿ − I₂` for the quadratic companion `𝒫`: a 2×2 presentation of the
/// cokernel of the n×n block `5I − T − T⁻¹`.
pub fn quadratic_power_reduction(n: u64) -> IntegerMatrix {
    CompanionMatrix::quadratic().power_minus_identity(n)
}

/// The entries of [`quadratic_power_reduction`] written directly through the
/// second-kind Chebyshev values: `[[−1−b(n−1), b(n)], [−b(n), −1+b(n+1)]]`.
/// Used to cross-check the matrix power.
pub fn quadratic_power_closed_form(n: u64) -> IntegerMatrix {
    assert!(n >= 1, "closed form requires n >= 1");
    IntegerMatrix::from_rows(vec![
        vec![-cheb_b(n - 1) - 1, cheb_b(n)],
        vec![-cheb_b(n), cheb_b(n + 1) - 1],
    ])
}

/// `𝒬ⁿ − I₄` for the quartic companion `𝒬`: a 4×4 presentation of the
/// cokernel of the n×n block `12I − 7T − 7T⁻¹ + T² + T⁻²`.
pub fn quartic_power_reduction(n: u64) -> IntegerMatrix {
    CompanionMatrix::quartic().power_minus_identity(n)
}

/// The entries of [`quartic_power_reduction`] written directly in `n` and the
/// Chebyshev pair `(u, v)`; every entry below is an exact multiple of 6.
/// Used to cross-check the matrix power.
pub fn quartic_power_closed_form(n: u64) -> IntegerMatrix {
    let ChebPair { u, v, .. } = ChebPair::new(n);
    let n = BigInt::from(n);
    let e = |cn: i64, cu: i64, cv: i64| {
        exact_div(
            BigInt::from(cn) * &n + BigInt::from(cu) * &u + BigInt::from(cv) * &v,
            &BigInt::from(6),
        )
    };
    IntegerMatrix::from_rows(vec![
        vec![e(2, 5, -23), e(-12, -11, 51), e(12, 7, -33), e(-2, -1, 5)],
        vec![e(2, 1, -5), e(-12, -2, 12), e(12, 1, -9), e(-2, 0, 2)],
        vec![e(2, 0, -2), e(-12, 1, 9), e(12, -2, -12), e(-2, 1, 5)],
        vec![e(2, -1, -5), e(-12, 7, 33), e(12, -11, -51), e(-2, 5, 23)],
    ])
}

/// The gcds of the k×k minors of the quartic power reduction, k = 1, 2, 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DValues {
    /// The index n ≥ 3.
    pub n: u64,
    /// gcd of the entries.
    pub d1: BigInt,
    /// gcd of the 2×2 minors.
    pub d2: BigInt,
    /// gcd of the 3×3 minors.
    pub d3: BigInt,
}

/// Evaluates the closed forms for the minors-gcds of `𝒬ⁿ − I₄`:
///
/// * `d₁ = gcd(n, u, v) / gcd(n, 3)`
/// * `d₂ = gcd(u, n·v) / gcd(n, 3)`, additionally halved when `3 | n`
/// * `d₃ = n·u / 3`
///
/// All divisions are checked to be exact and the chain `d₁ | d₂ | d₃` is
/// asserted; the agreement with literal minors enumeration is covered by
/// tests.
pub fn d_values(n: u64) -> DValues {
    assert!(n >= 3, "d_values requires n >= 3");
    let ChebPair { u, v, .. } = ChebPair::new(n);
    let n_big = BigInt::from(n);
    let g3 = BigInt::from(n.gcd(&3));
    let d1 = exact_div(n_big.gcd(&u).gcd(&v), &g3);
    let mut d2 = exact_div(u.gcd(&(&n_big * &v)), &g3);
    if n.is_multiple_of(3) {
        d2 = exact_div(d2, &BigInt::from(2));
    }
    let d3 = exact_div(&n_big * &u, &BigInt::from(3));
    assert!(
        (&d2 % &d1).is_zero() && (&d3 % &d2).is_zero(),
        "d-value chain broken at n = {n}: {d1}, {d2}, {d3}"
    );
    DValues { n, d1, d2, d3 }
}

/// Division that panics unless exact — these quotients are integers by
/// construction, and a nonzero remainder means a formula was transcribed
/// wrong.
pub(crate) fn exact_div(x: BigInt, y: &BigInt) -> BigInt {
    let (q, r) = x.div_rem(y);
    assert!(r.is_zero(), "inexact division: {} by {y}", &q * y + r);
    q
}
