//! Exact Jacobian (critical) groups of triangular circulant graphs.
//!
//! The graph Δ(n; k, l, m) has 3n vertices (x, y) with x ∈ {0, 1, 2},
//! y ∈ Z/n: layer x = 0 carries the circulant cycle y ~ y + k, layer 1 the
//! cycle y ~ y + l, layer 2 the cycle y ~ y + m, and each column y is closed
//! into a triangle (0,y)–(1,y)–(2,y). Every vertex has degree 4; the graph
//! is connected iff gcd(k, l, m, n) = 1.
//!
//! The Jacobian group (also: critical group, sandpile group) is the torsion
//! part of the cokernel of the graph Laplacian, a finite abelian group whose
//! order is the number of spanning trees. This crate computes it by several
//! independent routes, all in exact arbitrary-precision arithmetic:
//!
//! * Smith normal form of the full 3n×3n Laplacian ([`snf`], [`report`]);
//! * Smith normal form of a 2n×2n block reduction valid for every spec
//!   ([`reduction`]);
//! * for unit jumps Δ(n;1,1,1), a splitting into two circulant cokernels
//!   ([`reduction`]), their collapse to 2×2 and 4×4 companion-power
//!   presentations, and a pure-arithmetic closed form built on a Chebyshev-
//!   like integer recurrence ([`cheb`], [`closed_form`]).
//!
//! The routes are cross-checked against each other and against Matrix-Tree
//! spanning-tree counts by [`report::verify_spec`].

pub mod cheb;
pub mod closed_form;
pub mod graph;
pub mod group;
pub mod matrix;
pub mod reduction;
pub mod report;
pub mod snf;

pub use closed_form::{
    closed_form_as_stated, closed_form_orders, jacobian_via_closed_form, spanning_tree_count,
    unit_jump_tree_count,
};
pub use graph::{DeltaGraphSpec, LabeledGraph, SpecError};
pub use group::{canonicalize, AbelianGroup};
pub use matrix::IntegerMatrix;
pub use reduction::{jacobian_via_block_reduction, jacobian_via_split};
pub use report::{
    compute_jacobian, jacobian_via_laplacian, verify_spec, Method, MethodMismatch,
    VerificationReport,
};
pub use snf::{smith_normal_form, SmithDecomposition};
