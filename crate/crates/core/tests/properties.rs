//! Property-based tests: algebraic laws that must hold for arbitrary inputs,
//! not just the worked examples.

use deltajac::graph::layer_circulant;
use deltajac::matrix::{circulant, laurent_in_shift};
use deltajac::reduction::{
    quadratic_power_closed_form, quadratic_power_reduction, quartic_power_closed_form,
    quartic_power_reduction,
};
use deltajac::{
    canonicalize, jacobian_via_block_reduction, jacobian_via_laplacian, smith_normal_form,
    DeltaGraphSpec, IntegerMatrix,
};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn matrix_strategy(
    max_dim: usize,
    max_abs: i64,
) -> impl Strategy<Value = IntegerMatrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(-max_abs..=max_abs, r * c)
            .prop_map(move |data| IntegerMatrix::from_fn(r, c, |i, j| BigInt::from(data[i * c + j])))
    })
}

fn square_matrix_strategy(
    max_dim: usize,
    max_abs: i64,
) -> impl Strategy<Value = IntegerMatrix> {
    (1..=max_dim).prop_flat_map(move |n| {
        proptest::collection::vec(-max_abs..=max_abs, n * n)
            .prop_map(move |data| IntegerMatrix::from_fn(n, n, |i, j| BigInt::from(data[i * n + j])))
    })
}

/// An elementary row or column operation, the moves under which the cokernel
/// (and hence the Smith normal form) is invariant.
#[derive(Debug, Clone)]
enum ElementaryOp {
    SwapRows(usize, usize),
    SwapCols(usize, usize),
    NegateRow(usize),
    AddRowMultiple { src: usize, dst: usize, factor: i64 },
    AddColMultiple { src: usize, dst: usize, factor: i64 },
}

fn apply_op(m: &mut IntegerMatrix, op: &ElementaryOp) {
    let (rows, cols) = (m.rows(), m.cols());
    match *op {
        ElementaryOp::SwapRows(a, b) => {
            let (a, b) = (a % rows, b % rows);
            for j in 0..cols {
                let t = m[(a, j)].clone();
                m[(a, j)] = m[(b, j)].clone();
                m[(b, j)] = t;
            }
        }
        ElementaryOp::SwapCols(a, b) => {
            let (a, b) = (a % cols, b % cols);
            for i in 0..rows {
                let t = m[(i, a)].clone();
                m[(i, a)] = m[(i, b)].clone();
                m[(i, b)] = t;
            }
        }
        ElementaryOp::NegateRow(a) => {
            let a = a % rows;
            for j in 0..cols {
                let t = -m[(a, j)].clone();
                m[(a, j)] = t;
            }
        }
        ElementaryOp::AddRowMultiple { src, dst, factor } => {
            let (src, dst) = (src % rows, dst % rows);
            if src == dst {
                return;
            }
            for j in 0..cols {
                let t = &m[(dst, j)] + BigInt::from(factor) * &m[(src, j)];
                m[(dst, j)] = t;
            }
        }
        ElementaryOp::AddColMultiple { src, dst, factor } => {
            let (src, dst) = (src % cols, dst % cols);
            if src == dst {
                return;
            }
            for i in 0..rows {
                let t = &m[(i, dst)] + BigInt::from(factor) * &m[(i, src)];
                m[(i, dst)] = t;
            }
        }
    }
}

fn op_strategy() -> impl Strategy<Value = ElementaryOp> {
    prop_oneof![
        (0..8usize, 0..8usize).prop_map(|(a, b)| ElementaryOp::SwapRows(a, b)),
        (0..8usize, 0..8usize).prop_map(|(a, b)| ElementaryOp::SwapCols(a, b)),
        (0..8usize).prop_map(ElementaryOp::NegateRow),
        (0..8usize, 0..8usize, -3..=3i64)
            .prop_map(|(src, dst, factor)| ElementaryOp::AddRowMultiple { src, dst, factor }),
        (0..8usize, 0..8usize, -3..=3i64)
            .prop_map(|(src, dst, factor)| ElementaryOp::AddColMultiple { src, dst, factor }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn snf_factors_form_a_divisibility_chain(m in matrix_strategy(6, 50)) {
        let factors = smith_normal_form(&m).invariant_factors().to_vec();
        for pair in factors.windows(2) {
            prop_assert!((&pair[1] % &pair[0]).is_zero(), "chain broken: {factors:?}");
        }
        for f in &factors {
            prop_assert!(f.is_positive());
        }
    }

    #[test]
    fn snf_factor_product_is_the_determinant(m in square_matrix_strategy(5, 30)) {
        let det = m.determinant();
        prop_assume!(!det.is_zero());
        let product: BigInt = smith_normal_form(&m).invariant_factors().iter().product();
        prop_assert_eq!(product, det.abs());
    }

    #[test]
    fn snf_is_invariant_under_elementary_ops(
        m in matrix_strategy(5, 20),
        ops in proptest::collection::vec(op_strategy(), 0..10),
    ) {
        let mut transformed = m.clone();
        for op in &ops {
            apply_op(&mut transformed, op);
        }
        prop_assert_eq!(smith_normal_form(&m), smith_normal_form(&transformed));
    }

    #[test]
    fn snf_partial_products_match_minors_gcds(m in square_matrix_strategy(4, 12)) {
        // d_k = gcd of k×k minors equals s_1·s_2⋯s_k; an independent
        // characterization of the invariant factors.
        let factors = smith_normal_form(&m).invariant_factors().to_vec();
        let mut partial = BigInt::one();
        for (k, factor) in factors.iter().enumerate() {
            partial *= factor;
            prop_assert_eq!(&partial, &m.minors_gcd(k + 1), "k = {}", k + 1);
        }
    }

    #[test]
    fn snf_is_invariant_under_transposition(m in matrix_strategy(6, 40)) {
        let straight = smith_normal_form(&m);
        let transposed = smith_normal_form(&m.transpose());
        prop_assert_eq!(straight.invariant_factors(), transposed.invariant_factors());
    }

    #[test]
    fn circulant_product_is_the_convolution(
        n in 1..=8usize,
        a in proptest::collection::vec(-20..=20i64, 8),
        b in proptest::collection::vec(-20..=20i64, 8),
    ) {
        let a = &a[..n];
        let b = &b[..n];
        let mut conv = vec![0i64; n];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                conv[(i + j) % n] += x * y;
            }
        }
        let product = &circulant(a, n) * &circulant(b, n);
        prop_assert_eq!(product, circulant(&conv, n));
    }

    #[test]
    fn laurent_in_shift_is_the_sum_of_shift_powers(
        n in 1..=7usize,
        terms in proptest::collection::vec((-12..=12i64, -9..=9i64), 0..5),
    ) {
        let shift = circulant(
            &(0..n).map(|i| i64::from(i == 1 % n)).collect::<Vec<_>>(),
            n,
        );
        let mut expected = IntegerMatrix::zeros(n, n);
        for &(exp, coeff) in &terms {
            let power = shift.pow(exp.rem_euclid(n as i64) as u64);
            let scaled = IntegerMatrix::from_fn(n, n, |i, j| BigInt::from(coeff) * &power[(i, j)]);
            expected = &expected + &scaled;
        }
        prop_assert_eq!(laurent_in_shift(n, &terms), expected);
    }

    #[test]
    fn canonicalize_yields_a_chain_with_the_same_product(
        orders in proptest::collection::vec(0..=60u32, 0..8),
    ) {
        let input: Vec<BigInt> = orders.iter().map(|&d| BigInt::from(d)).collect();
        let group = canonicalize(&input);
        let factors = group.torsion_factors();
        for pair in factors.windows(2) {
            prop_assert!((&pair[1] % &pair[0]).is_zero());
        }
        for f in factors {
            prop_assert!(f > &BigInt::one());
        }
        prop_assert_eq!(group.free_rank(), input.iter().filter(|d| d.is_zero()).count());
        let nonzero_product: BigInt = input.iter().filter(|d| !d.is_zero()).product();
        prop_assert_eq!(group.order(), nonzero_product);
        // Idempotent: canonicalizing the output changes nothing.
        prop_assert_eq!(&canonicalize(factors), &group.torsion());
    }

    #[test]
    fn text_format_round_trips(m in matrix_strategy(6, 1_000_000)) {
        prop_assert_eq!(IntegerMatrix::parse_text(&m.to_text()).unwrap(), m);
    }

    #[test]
    fn companion_powers_match_their_closed_forms(n in 1..=200u64) {
        prop_assert_eq!(quadratic_power_reduction(n), quadratic_power_closed_form(n));
        prop_assert_eq!(quartic_power_reduction(n), quartic_power_closed_form(n));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn block_reduction_torsion_matches_laplacian_torsion(
        n in 3..=7usize,
        k in 1..=6i64,
        l in 1..=6i64,
        m in 1..=6i64,
    ) {
        prop_assume!(k % n as i64 != 0 && l % n as i64 != 0 && m % n as i64 != 0);
        let s = DeltaGraphSpec::new(n, k, l, m).unwrap();
        prop_assert_eq!(jacobian_via_block_reduction(&s), jacobian_via_laplacian(&s));
    }

    #[test]
    fn mirrored_jumps_have_identical_laplacians(n in 3..=9usize, k in 1..=8i64) {
        prop_assume!(k % n as i64 != 0);
        let a = layer_circulant(n, DeltaGraphSpec::new(n, k, 1, 1).unwrap().k());
        let b = layer_circulant(n, DeltaGraphSpec::new(n, -k, 1, 1).unwrap().k());
        prop_assert_eq!(a, b);
    }
}
