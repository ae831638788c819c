//! Δ-graphs and their Laplacians.
//!
//! The graph Δ(n;k,l,m) has 3n vertices v_{x,y} with x ∈ {1,2,3} and y ∈ Z_n:
//! three "layers", each an n-cycle with its own jump length (layer x joins
//! v_{x,y} to v_{x,y+j(x)} where j(1)=k, j(2)=l, j(3)=m), plus a triangle
//! through each column {v_{1,y}, v_{2,y}, v_{3,y}}. Multiple edges arise when
//! 2j ≡ 0 (mod n); loops are excluded, so jumps ≡ 0 (mod n) are rejected.
//! For unit jumps the graph is the discrete torus C₃ × Cₙ.

use crate::matrix::{laurent_in_shift, IntegerMatrix};
use num_bigint::BigInt;
use std::fmt;

/// Validated parameters (n; k, l, m) of a Δ-graph.
///
/// Jumps are normalized on construction to their representatives in
/// `{1, …, n−1}`; inputs may be negative or exceed n. A jump congruent to 0
/// is rejected because it would create loops.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DeltaGraphSpec {
    n: usize,
    jumps: [usize; 3],
}

impl DeltaGraphSpec {
    /// Validates and normalizes the four parameters.
    pub fn new(n: usize, k: i64, l: i64, m: i64) -> Result<Self, SpecError> {
        if n < 3 {
            return Err(SpecError::CycleTooShort { n });
        }
        let normalize = |name: &'static str, jump: i64| -> Result<usize, SpecError> {
            let r = jump.rem_euclid(n as i64) as usize;
            if r == 0 {
                Err(SpecError::LoopJump { name, jump, n })
            } else {
                Ok(r)
            }
        };
        Ok(DeltaGraphSpec {
            n,
            jumps: [
                normalize("k", k)?,
                normalize("l", l)?,
                normalize("m", m)?,
            ],
        })
    }

    /// Cycle length n.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Normalized jump of layer 1.
    pub fn k(&self) -> usize {
        self.jumps[0]
    }

    /// Normalized jump of layer 2.
    pub fn l(&self) -> usize {
        self.jumps[1]
    }

    /// Normalized jump of layer 3.
    pub fn m(&self) -> usize {
        self.jumps[2]
    }

    /// The three normalized jumps `[k, l, m]`.
    pub fn jumps(&self) -> [usize; 3] {
        self.jumps
    }

    /// Number of vertices, `3n`.
    pub fn vertex_count(&self) -> usize {
        3 * self.n
    }

    /// Whether the graph is connected: gcd(k, l, m, n) = 1.
    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Number of connected components, which is gcd(k, l, m, n): the columns
    /// reachable from column 0 are exactly the multiples of that gcd, and each
    /// component is a smaller Δ-graph on n/gcd columns. This also equals the
    /// free rank of the Laplacian cokernel.
    pub fn component_count(&self) -> usize {
        self.jumps
            .iter()
            .fold(self.n, |acc, &j| num_integer::gcd(acc, j))
    }

    /// Whether all three normalized jumps equal 1. The closed-form and
    /// cokernel-splitting methods apply exactly to these specs.
    pub fn has_unit_jumps(&self) -> bool {
        self.jumps == [1, 1, 1]
    }

    /// Builds the graph itself: layer cycles first, then the column
    /// triangles. Vertex (x, y) gets index `x·n + y` for x ∈ {0,1,2}
    /// (layer-major, matching the block structure of the Laplacian).
    pub fn build_graph(&self) -> LabeledGraph {
        let n = self.n;
        let mut g = LabeledGraph::with_vertices(3 * n);
        for (layer, &jump) in self.jumps.iter().enumerate() {
            for y in 0..n {
                g.add_edge(layer * n + y, layer * n + (y + jump) % n);
            }
        }
        for y in 0..n {
            g.add_edge(y, n + y);
            g.add_edge(n + y, 2 * n + y);
            g.add_edge(2 * n + y, y);
        }
        g
    }

    /// The Laplacian, computed from the built graph (degrees minus
    /// adjacency).
    pub fn laplacian(&self) -> IntegerMatrix {
        self.build_graph().laplacian()
    }

    /// The Laplacian assembled directly in block form:
    /// `[[A, −I, −I], [−I, B, −I], [−I, −I, C]]` with `A = 4I − Tᵏ − T⁻ᵏ`
    /// and likewise B, C for jumps l, m (T the n×n left-shift circulant).
    ///
    /// Structurally independent of [`build_graph`]; the two must agree
    /// entrywise, which the tests exercise.
    ///
    /// [`build_graph`]: DeltaGraphSpec::build_graph
    pub fn laplacian_blocks(&self) -> IntegerMatrix {
        let n = self.n;
        let blocks: Vec<IntegerMatrix> = self
            .jumps
            .iter()
            .map(|&j| layer_circulant(n, j))
            .collect();
        let neg_i = -&IntegerMatrix::identity(n);
        IntegerMatrix::from_blocks(&[
            vec![&blocks[0], &neg_i, &neg_i],
            vec![&neg_i, &blocks[1], &neg_i],
            vec![&neg_i, &neg_i, &blocks[2]],
        ])
    }
}

impl fmt::Display for DeltaGraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Δ({};{},{},{})",
            self.n, self.jumps[0], self.jumps[1], self.jumps[2]
        )
    }
}

/// The diagonal block `4I − Tʲ − T⁻ʲ` of a Δ-graph Laplacian: the Laplacian
/// contribution of one cycle layer (cycle of jump `j`) plus the two triangle
/// edges at each vertex.
pub fn layer_circulant(n: usize, jump: usize) -> IntegerMatrix {
    let j = jump as i64;
    laurent_in_shift(n, &[(0, 4), (j, -1), (-j, -1)])
}

/// Errors from [`DeltaGraphSpec::new`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecError {
    /// `n` must be at least 3.
    CycleTooShort {
        /// The offending cycle length.
        n: usize,
    },
    /// A jump congruent to 0 (mod n) would create loop edges.
    LoopJump {
        /// Which jump: "k", "l", or "m".
        name: &'static str,
        /// The jump value as given.
        jump: i64,
        /// The cycle length.
        n: usize,
    },
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecError::CycleTooShort { n } => {
                write!(f, "cycle length must be at least 3, got n = {n}")
            }
            SpecError::LoopJump { name, jump, n } => write!(
                f,
                "jump {name} = {jump} is congruent to 0 mod n = {n} and would create loops"
            ),
        }
    }
}

impl std::error::Error for SpecError {}

/// An undirected multigraph on labeled vertices, stored as a dense symmetric
/// multiplicity matrix with zero diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    vertex_count: usize,
    adjacency: Vec<u32>,
}

impl LabeledGraph {
    /// An edgeless graph on `vertex_count` vertices.
    pub fn with_vertices(vertex_count: usize) -> Self {
        LabeledGraph {
            vertex_count,
            adjacency: vec![0; vertex_count * vertex_count],
        }
    }

    /// Adds one edge between distinct vertices `u` and `v` (increments the
    /// multiplicity). Panics on loops or out-of-range indices.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(
            u < self.vertex_count && v < self.vertex_count,
            "edge ({u},{v}) out of range"
        );
        assert!(u != v, "loop edge at vertex {u}");
        self.adjacency[u * self.vertex_count + v] += 1;
        self.adjacency[v * self.vertex_count + u] += 1;
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Multiplicity of the edge between `u` and `v`.
    pub fn edge_multiplicity(&self, u: usize, v: usize) -> u32 {
        assert!(
            u < self.vertex_count && v < self.vertex_count,
            "pair ({u},{v}) out of range"
        );
        self.adjacency[u * self.vertex_count + v]
    }

    /// Degree of `v`, counting edge multiplicities.
    pub fn degree(&self, v: usize) -> u32 {
        assert!(v < self.vertex_count, "vertex {v} out of range");
        (0..self.vertex_count)
            .map(|u| self.adjacency[v * self.vertex_count + u])
            .sum()
    }

    /// Total number of edges, counting multiplicities.
    pub fn edge_count(&self) -> u32 {
        let endpoint_sum: u32 = self.adjacency.iter().sum();
        endpoint_sum / 2
    }

    /// The Laplacian `D − A`: degrees on the diagonal, negated edge
    /// multiplicities off it.
    pub fn laplacian(&self) -> IntegerMatrix {
        IntegerMatrix::from_fn(self.vertex_count, self.vertex_count, |i, j| {
            if i == j {
                BigInt::from(self.degree(i))
            } else {
                -BigInt::from(self.adjacency[i * self.vertex_count + j])
            }
        })
    }
}
