//! Finitely generated abelian groups in invariant-factor form.
//!
//! A group is stored as its canonical decomposition: a divisibility chain of
//! torsion factors (each ≥ 2) plus a free rank. Two groups are isomorphic
//! exactly when these data agree, so group comparison is plain equality.

use crate::matrix::IntegerMatrix;
use crate::snf::{smith_normal_form, SmithDecomposition};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A finitely generated abelian group `Z/d₁ ⊕ … ⊕ Z/d_t ⊕ Zʳ` with
/// `2 ≤ d₁ | d₂ | … | d_t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    torsion_factors: Vec<BigInt>,
    free_rank: usize,
}

impl AbelianGroup {
    /// The trivial group.
    pub fn trivial() -> Self {
        AbelianGroup {
            torsion_factors: Vec::new(),
            free_rank: 0,
        }
    }

    /// The cokernel of an integer matrix, viewed as a map into `Z^rows`
    /// whose image is spanned by the columns.
    ///
    /// Torsion comes from the invariant factors greater than 1; the free rank
    /// is `rows − rank` (which for the square presentation matrices used
    /// throughout this crate agrees with [`SmithDecomposition::free_rank`]).
    pub fn cokernel_of(m: &IntegerMatrix) -> Self {
        let snf = smith_normal_form(m);
        AbelianGroup {
            torsion_factors: snf.torsion_factors(),
            free_rank: m.rows() - snf.rank(),
        }
    }

    /// The torsion part (free rank dropped).
    pub fn torsion(&self) -> Self {
        AbelianGroup {
            torsion_factors: self.torsion_factors.clone(),
            free_rank: 0,
        }
    }

    /// The torsion factors in divisibility order, each ≥ 2.
    pub fn torsion_factors(&self) -> &[BigInt] {
        &self.torsion_factors
    }

    /// Rank of the free part.
    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    /// Whether this is the trivial group.
    pub fn is_trivial(&self) -> bool {
        self.torsion_factors.is_empty() && self.free_rank == 0
    }

    /// Whether the group is finite.
    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Order of the torsion part (the group order when the group is finite;
    /// callers needing finiteness check [`free_rank`] first).
    ///
    /// [`free_rank`]: AbelianGroup::free_rank
    pub fn order(&self) -> BigInt {
        self.torsion_factors.iter().product()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = self
            .torsion_factors
            .iter()
            .map(|d| format!("Z/{d}"))
            .collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

impl From<&SmithDecomposition> for AbelianGroup {
    /// Reads a cokernel off a Smith decomposition, taking the free rank from
    /// the decomposition's column count (appropriate for square
    /// presentations).
    fn from(snf: &SmithDecomposition) -> Self {
        AbelianGroup {
            torsion_factors: snf.torsion_factors(),
            free_rank: snf.free_rank(),
        }
    }
}

/// Canonicalizes a list of cyclic orders into an [`AbelianGroup`].
///
/// Zeros encode free `Z` summands. Positive orders are merged by the identity
/// `Z/a ⊕ Z/b ≅ Z/gcd(a,b) ⊕ Z/lcm(a,b)`, applied pairwise until the list is
/// a divisibility chain; unit factors are dropped at the end. The multiset of
/// prime-power components is preserved, so the result presents the same group.
pub fn canonicalize(cyclic_orders: &[BigInt]) -> AbelianGroup {
    let mut free_rank = 0;
    let mut factors: Vec<BigInt> = Vec::new();
    for order in cyclic_orders {
        assert!(!order.is_negative(), "cyclic order must be nonnegative");
        if order.is_zero() {
            free_rank += 1;
        } else {
            factors.push(order.clone());
        }
    }
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..factors.len() {
            for j in i + 1..factors.len() {
                if (&factors[j] % &factors[i]).is_zero() {
                    continue;
                }
                let g = factors[i].gcd(&factors[j]);
                let l = &factors[i] / &g * &factors[j];
                factors[i] = g;
                factors[j] = l;
                changed = true;
            }
        }
    }
    factors.sort();
    factors.retain(|f| !f.is_one());
    AbelianGroup {
        torsion_factors: factors,
        free_rank,
    }
}
