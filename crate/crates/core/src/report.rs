//! Method dispatch and cross-verification.
//!
//! Four independent routes to the same group, cross-checked on demand:
//!
//! | token      | route                                             | applies to  |
//! |------------|---------------------------------------------------|-------------|
//! | `snf`      | Smith normal form of the full 3n×3n Laplacian     | any spec    |
//! | `theorem1` | Smith normal form of the 2n×2n block reduction    | any spec    |
//! | `split`    | direct sum of the two circulant cokernels         | unit jumps  |
//! | `closed`   | arithmetic closed form                            | unit jumps  |
//!
//! [`verify_spec`] runs every applicable method on one spec and also checks
//! the group order against the spanning-tree count (Matrix-Tree) and the
//! Laplacian's free rank against the component count.

use crate::closed_form::{jacobian_via_closed_form, spanning_tree_count};
use crate::graph::DeltaGraphSpec;
use crate::group::AbelianGroup;
use crate::reduction::{jacobian_via_block_reduction, jacobian_via_split};
use num_bigint::BigInt;
use std::error::Error;
use std::fmt;

/// A way to compute the Jacobian group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Arithmetic closed form for Δ(n;1,1,1) — token `closed`.
    ClosedForm,
    /// Smith normal form of the full Laplacian — token `snf`.
    FullLaplacian,
    /// Smith normal form of the 2n×2n block reduction — token `theorem1`.
    BlockReduction,
    /// Direct sum of the two circulant cokernels — token `split`.
    Split,
}

impl Method {
    /// All methods, in stable reporting order.
    pub const ALL: [Method; 4] = [
        Method::ClosedForm,
        Method::FullLaplacian,
        Method::BlockReduction,
        Method::Split,
    ];

    /// The token naming this method on the command line and in serialized
    /// records. The tokens are a compatibility contract: they never change,
    /// even where the Rust name differs.
    pub fn token(self) -> &'static str {
        match self {
            Method::ClosedForm => "closed",
            Method::FullLaplacian => "snf",
            Method::BlockReduction => "theorem1",
            Method::Split => "split",
        }
    }

    /// Parses a method token; `None` for anything unrecognized.
    pub fn parse(token: &str) -> Option<Method> {
        Method::ALL.into_iter().find(|m| m.token() == token)
    }

    /// Whether this method can handle the spec: the closed form and the
    /// cokernel splitting exist only for unit jumps, the two Smith normal
    /// form routes work everywhere.
    pub fn is_applicable_to(self, spec: &DeltaGraphSpec) -> bool {
        match self {
            Method::ClosedForm | Method::Split => spec.has_unit_jumps(),
            Method::FullLaplacian | Method::BlockReduction => true,
        }
    }

    /// The preferred method for a spec: the closed form when it applies,
    /// otherwise the block reduction (smaller than the full Laplacian).
    pub fn default_for(spec: &DeltaGraphSpec) -> Method {
        if spec.has_unit_jumps() {
            Method::ClosedForm
        } else {
            Method::BlockReduction
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// Error raised when a method is asked about a spec it does not apply to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MethodMismatch {
    pub method: Method,
    pub spec: DeltaGraphSpec,
}

impl fmt::Display for MethodMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [k, l, m] = self.spec.jumps();
        write!(
            f,
            "method `{}` requires unit jumps (k = l = m = 1), but {} has jumps ({k}, {l}, {m})",
            self.method, self.spec
        )
    }
}

impl Error for MethodMismatch {}

/// The full cokernel of the Laplacian: torsion factors plus free rank (the
/// free rank equals the number of connected components).
pub fn laplacian_cokernel(spec: &DeltaGraphSpec) -> AbelianGroup {
    AbelianGroup::cokernel_of(&spec.laplacian())
}

/// Jacobian group of the spec — the torsion part of the Laplacian cokernel —
/// by the full-Laplacian route.
pub fn jacobian_via_laplacian(spec: &DeltaGraphSpec) -> AbelianGroup {
    laplacian_cokernel(spec).torsion()
}

/// Jacobian group of the spec by the requested method. Fails with
/// [`MethodMismatch`] when the method does not apply (unit-jump-only methods
/// on general jumps).
pub fn compute_jacobian(
    spec: &DeltaGraphSpec,
    method: Method,
) -> Result<AbelianGroup, MethodMismatch> {
    if !method.is_applicable_to(spec) {
        return Err(MethodMismatch {
            method,
            spec: *spec,
        });
    }
    Ok(match method {
        Method::ClosedForm => jacobian_via_closed_form(spec.n() as u64),
        Method::FullLaplacian => jacobian_via_laplacian(spec),
        Method::BlockReduction => jacobian_via_block_reduction(spec),
        Method::Split => jacobian_via_split(spec.n()),
    })
}

/// Every applicable method run on one spec, with the cross-checks that tie
/// them together.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    spec: DeltaGraphSpec,
    groups: Vec<(Method, AbelianGroup)>,
    laplacian_free_rank: usize,
    tree_count: BigInt,
}

impl VerificationReport {
    pub fn spec(&self) -> &DeltaGraphSpec {
        &self.spec
    }

    /// The computed Jacobian per method, in [`Method::ALL`] order, applicable
    /// methods only.
    pub fn groups(&self) -> &[(Method, AbelianGroup)] {
        &self.groups
    }

    /// Free rank of the Laplacian cokernel as actually computed by Smith
    /// normal form (not derived from the component count).
    pub fn laplacian_free_rank(&self) -> usize {
        self.laplacian_free_rank
    }

    /// Spanning trees by Matrix-Tree; 0 for a disconnected spec.
    pub fn tree_count(&self) -> &BigInt {
        &self.tree_count
    }

    /// Agreement for each method pair.
    pub fn pairwise_agreement(&self) -> Vec<(Method, Method, bool)> {
        let mut out = Vec::new();
        for (i, (m1, g1)) in self.groups.iter().enumerate() {
            for (m2, g2) in &self.groups[i + 1..] {
                out.push((*m1, *m2, g1 == g2));
            }
        }
        out
    }

    /// The first failed cross-check, rendered for a diagnostic; `None` when
    /// everything agrees. Checks, in order: pairwise method agreement, free
    /// rank = component count, and (connected specs only) group order =
    /// spanning-tree count.
    pub fn first_failure(&self) -> Option<String> {
        for (m1, m2, ok) in self.pairwise_agreement() {
            if !ok {
                let g1 = &self.groups.iter().find(|(m, _)| *m == m1).unwrap().1;
                let g2 = &self.groups.iter().find(|(m, _)| *m == m2).unwrap().1;
                return Some(format!(
                    "{}: methods {m1} and {m2} disagree: {g1} vs {g2}",
                    self.spec
                ));
            }
        }
        if self.laplacian_free_rank != self.spec.component_count() {
            return Some(format!(
                "{}: Laplacian free rank {} does not match component count {}",
                self.spec,
                self.laplacian_free_rank,
                self.spec.component_count()
            ));
        }
        if self.spec.is_connected() {
            let order = self.groups[0].1.order();
            if order != self.tree_count {
                return Some(format!(
                    "{}: group order {order} does not match tree count {}",
                    self.spec, self.tree_count
                ));
            }
        }
        None
    }

    /// Whether every cross-check passed.
    pub fn is_consistent(&self) -> bool {
        self.first_failure().is_none()
    }
}

/// Runs every applicable method on the spec and collects the cross-checks.
pub fn verify_spec(spec: &DeltaGraphSpec) -> VerificationReport {
    let cokernel = laplacian_cokernel(spec);
    let laplacian_free_rank = cokernel.free_rank();
    let mut groups = Vec::new();
    for method in Method::ALL {
        if !method.is_applicable_to(spec) {
            continue;
        }
        let group = if method == Method::FullLaplacian {
            cokernel.torsion()
        } else {
            compute_jacobian(spec, method).expect("applicability was checked")
        };
        groups.push((method, group));
    }
    VerificationReport {
        spec: *spec,
        groups,
        laplacian_free_rank,
        tree_count: spanning_tree_count(spec),
    }
}
