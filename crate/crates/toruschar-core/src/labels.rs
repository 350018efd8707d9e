//! Eigenvalue labels τ and κ for irreducible components.

use alloc::vec::Vec;

use crate::rootexp::RootExp;
use crate::{Error, Result};

/// Canonical eigenvalue label of an irreducible stratum.
///
/// The eigenvalues ε_i of A and ϵ_j of B are roots of unity stored as
/// exponents at a single ambient order (r·m·n for the rank-r strata), so
/// equality of labels is integer comparison. Both exponent lists are kept
/// sorted ascending; τ labels have all entries distinct on both sides, κ
/// labels have exactly one repeated entry on one side.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EigenLabel {
    order: u64,
    a_exps: Vec<u64>,
    b_exps: Vec<u64>,
}

impl EigenLabel {
    /// Builds a label, reducing exponents mod `order` and sorting.
    pub fn new(order: u64, a_exps: Vec<u64>, b_exps: Vec<u64>) -> Self {
        assert!(order >= 1);
        let mut a: Vec<u64> = a_exps.into_iter().map(|e| e % order).collect();
        let mut b: Vec<u64> = b_exps.into_iter().map(|e| e % order).collect();
        a.sort_unstable();
        b.sort_unstable();
        EigenLabel { order, a_exps: a, b_exps: b }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn a_exps(&self) -> &[u64] {
        &self.a_exps
    }

    pub fn b_exps(&self) -> &[u64] {
        &self.b_exps
    }

    pub fn rank(&self) -> usize {
        self.a_exps.len()
    }

    pub fn a_roots(&self) -> Vec<RootExp> {
        self.a_exps
            .iter()
            .map(|&e| RootExp::new(e as i64, self.order))
            .collect()
    }

    pub fn b_roots(&self) -> Vec<RootExp> {
        self.b_exps
            .iter()
            .map(|&e| RootExp::new(e as i64, self.order))
            .collect()
    }

    /// The common scalar ϖ with ε_i^n = ϵ_j^m = ϖ; valid labels only.
    pub fn varpi(&self, n: u64) -> RootExp {
        let k = self.a_exps[0] as u128 * n as u128 % self.order as u128;
        RootExp::new(k as i64, self.order)
    }

    /// Checks the structural invariants of a rank-r SL label for the
    /// torus knot (m, n): side lengths r, both products 1, all ε_i^n equal
    /// a common ϖ, all ϵ_j^m equal the same ϖ, and ε_i^{rn} = ϵ_j^{rm} = 1.
    pub fn validate(&self, r: usize, m: u64, n: u64) -> Result<()> {
        if self.a_exps.len() != r || self.b_exps.len() != r {
            return Err(Error::InvalidLabel("side length differs from rank"));
        }
        let ord = self.order as u128;
        let sum_a: u128 = self.a_exps.iter().map(|&e| e as u128).sum();
        let sum_b: u128 = self.b_exps.iter().map(|&e| e as u128).sum();
        if sum_a % ord != 0 || sum_b % ord != 0 {
            return Err(Error::InvalidLabel("product of a side is not 1"));
        }
        let varpi = self.a_exps[0] as u128 * n as u128 % ord;
        for &e in &self.a_exps {
            if e as u128 * n as u128 % ord != varpi {
                return Err(Error::InvalidLabel("a eigenvalues disagree on varpi"));
            }
            if e as u128 * n as u128 * r as u128 % ord != 0 {
                return Err(Error::InvalidLabel("a eigenvalue order too large"));
            }
        }
        for &e in &self.b_exps {
            if e as u128 * m as u128 % ord != varpi {
                return Err(Error::InvalidLabel("b eigenvalues disagree on varpi"));
            }
            if e as u128 * m as u128 * r as u128 % ord != 0 {
                return Err(Error::InvalidLabel("b eigenvalue order too large"));
            }
        }
        Ok(())
    }

    /// Whether all entries are distinct on both sides (a τ label).
    pub fn is_tau(&self) -> bool {
        let distinct = |v: &[u64]| v.windows(2).all(|w| w[0] != w[1]);
        distinct(&self.a_exps) && distinct(&self.b_exps)
    }

    /// The label of the swapped knot (n, m): sides exchanged.
    pub fn swap_sides(&self) -> EigenLabel {
        EigenLabel::new(self.order, self.b_exps.clone(), self.a_exps.clone())
    }

    /// Applies t ∈ μ_r (exponent `t_exp`) as (A, B) ↦ (t^m A, t^n B) and
    /// re-canonicalizes. This is the residual μ_r action on labels: it
    /// shifts every ε_i by t^m and every ϵ_j by t^n, preserving both
    /// product-1 constraints and moving ϖ to t^{mn}ϖ.
    pub fn mu_shifted(&self, t_exp: u64, r: u64, m: u64, n: u64) -> EigenLabel {
        assert!(self.order % r == 0, "ambient order not divisible by r");
        let unit = self.order / r;
        let shift_a = (t_exp as u128 * m as u128 * unit as u128 % self.order as u128) as u64;
        let shift_b = (t_exp as u128 * n as u128 * unit as u128 % self.order as u128) as u64;
        let a = self.a_exps.iter().map(|&e| (e + shift_a) % self.order).collect();
        let b = self.b_exps.iter().map(|&e| (e + shift_b) % self.order).collect();
        EigenLabel::new(self.order, a, b)
    }
}
