//! Brute-force ground truth over roots of unity.
//!
//! Everything here enumerates eigenvalue labels directly from their defining
//! constraints, with no reference to the closed-form counts; the censuses
//! and K-classes are validated against these enumerations.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::labels::EigenLabel;
use crate::params::KnotParams;
use crate::{Error, Result};

/// Default work-budget guard for enumerations (pool-product bound).
pub const DEFAULT_BUDGET: u128 = 1_000_000;

/// A deduplicated, sorted set of canonical labels for one (r, m, n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelSet {
    pub r: usize,
    pub m: u64,
    pub n: u64,
    pub labels: Vec<EigenLabel>,
}

impl LabelSet {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

fn binomial_u128(n: u64, r: u64) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

fn factorial_u128(n: u64) -> u128 {
    (1..=n as u128).product()
}

fn check_budget(needed: u128, budget: u128) -> Result<()> {
    if needed > budget {
        Err(Error::BudgetExceeded { needed, budget })
    } else {
        Ok(())
    }
}

/// Calls `f` on every `r`-subset of `pool` (as a slice of chosen items).
fn for_each_subset<T: Copy>(pool: &[T], r: usize, f: &mut impl FnMut(&[T])) {
    fn rec<T: Copy>(pool: &[T], r: usize, start: usize, cur: &mut Vec<T>, f: &mut impl FnMut(&[T])) {
        if cur.len() == r {
            f(cur);
            return;
        }
        let remaining = r - cur.len();
        for i in start..=pool.len().saturating_sub(remaining) {
            cur.push(pool[i]);
            rec(pool, r, i + 1, cur, f);
            cur.pop();
        }
    }
    if r > pool.len() {
        return;
    }
    let mut cur = Vec::with_capacity(r);
    rec(pool, r, 0, &mut cur, f);
}

/// The candidate exponents at order r·n for eigenvalues ε with ε^n = ϖ,
/// where ϖ = e^{2πiw/r}: exactly the e ∈ [0, rn) with e ≡ w (mod r).
fn candidates(r: u64, n: u64, w: u64) -> Vec<u64> {
    (0..n).map(|j| w + j * r).collect()
}

/// Role-explicit enumeration of τ labels for relation x^{mb} = y^{ma}:
/// A-eigenvalues are r·mb-th roots with ε^{mb} = ϖ, B-eigenvalues are
/// r·ma-th roots with ϵ^{ma} = ϖ; both sides land in the ambient order
/// r·ma·mb (A scaled by ma, B by mb).
fn enumerate_f_roles(r: usize, ma: u64, mb: u64, budget: u128) -> Result<Vec<EigenLabel>> {
    let ru = r as u64;
    let needed = binomial_u128(mb, ru)
        .saturating_mul(binomial_u128(ma, ru))
        .saturating_mul(ru as u128);
    check_budget(needed.max(1), budget)?;
    let order = ru * ma * mb;
    let mut out = BTreeSet::new();
    for w in 0..ru {
        // A side: ε ∈ μ_{r·mb} with ε^{mb} = ϖ and ∏ε = 1.
        let a_pool = candidates(ru, mb, w);
        let mut a_subs: Vec<Vec<u64>> = Vec::new();
        for_each_subset(&a_pool, r, &mut |sub| {
            let s: u64 = sub.iter().sum();
            if s % (ru * mb) == 0 {
                a_subs.push(sub.to_vec());
            }
        });
        if a_subs.is_empty() {
            continue;
        }
        let b_pool = candidates(ru, ma, w);
        let mut b_subs: Vec<Vec<u64>> = Vec::new();
        for_each_subset(&b_pool, r, &mut |sub| {
            let s: u64 = sub.iter().sum();
            if s % (ru * ma) == 0 {
                b_subs.push(sub.to_vec());
            }
        });
        for a in &a_subs {
            for b in &b_subs {
                // Rescale both sides to the common ambient order.
                let a_exps: Vec<u64> = a.iter().map(|&e| e * ma).collect();
                let b_exps: Vec<u64> = b.iter().map(|&e| e * mb).collect();
                out.insert(EigenLabel::new(order, a_exps, b_exps));
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Enumerates the τ labels of the maximal-dimension components: r-element
/// subsets on both sides, all entries distinct, products 1, common ϖ ∈ μ_r.
pub fn enumerate_f(r: usize, p: &KnotParams, budget: u128) -> Result<LabelSet> {
    let labels = enumerate_f_roles(r, p.m(), p.n(), budget)?;
    Ok(LabelSet { r, m: p.m(), n: p.n(), labels })
}

/// Enumerates the κ labels of the dimension-2 components of the rank-3
/// variety: one side has a repeated eigenvalue (ε₁ = ε₂ ≠ ε₃, forcing
/// ε₃ = ε₁⁻² and ε₁³ ≠ 1), the other side has three distinct eigenvalues;
/// products 1 and common ϖ as always.
pub fn enumerate_g(p: &KnotParams, budget: u128) -> Result<LabelSet> {
    let (m, n) = (p.m(), p.n());
    let order = 3 * m * n;
    let needed = (3 * n as u128 + 3 * m as u128)
        .saturating_mul(binomial_u128(m.max(n), 3).max(1))
        .saturating_mul(3);
    check_budget(needed, budget)?;
    let mut out = BTreeSet::new();

    // One closure per orientation: `rep` side carries the repeated
    // eigenvalue, `dis` side the distinct triple. `rep_exp` is that side's
    // relation exponent (n for the A side), used only through the candidate
    // sets, which are symmetric in the roles.
    let mut run = |rep_base: u64, dis_base: u64, rep_is_a: bool| {
        for w in 0..3u64 {
            let rep_pool = candidates(3, rep_base, w);
            let rep_mod = 3 * rep_base;
            let mut rep_sides: Vec<Vec<u64>> = Vec::new();
            for &e in &rep_pool {
                // ε³ = 1 exactly when 3e ≡ 0 (mod 3·base), i.e. base | e.
                if e % rep_base == 0 {
                    continue;
                }
                let third = (2 * rep_mod - 2 * e % rep_mod) % rep_mod;
                rep_sides.push(alloc::vec![e, e, third]);
            }
            if rep_sides.is_empty() {
                continue;
            }
            let dis_pool = candidates(3, dis_base, w);
            let dis_mod = 3 * dis_base;
            let mut dis_sides: Vec<Vec<u64>> = Vec::new();
            for_each_subset(&dis_pool, 3, &mut |sub| {
                let s: u64 = sub.iter().sum();
                if s % dis_mod == 0 {
                    dis_sides.push(sub.to_vec());
                }
            });
            for rep in &rep_sides {
                for dis in &dis_sides {
                    // Scale each side by the complementary parameter to
                    // reach the ambient order 3mn.
                    let rep_scaled: Vec<u64> = rep.iter().map(|&e| e * (order / rep_mod)).collect();
                    let dis_scaled: Vec<u64> = dis.iter().map(|&e| e * (order / dis_mod)).collect();
                    let label = if rep_is_a {
                        EigenLabel::new(order, rep_scaled, dis_scaled)
                    } else {
                        EigenLabel::new(order, dis_scaled, rep_scaled)
                    };
                    out.insert(label);
                }
            }
        }
    };
    // Repeated eigenvalue on the A side (ε^n = ϖ, candidates at order 3n).
    run(n, m, true);
    // Repeated eigenvalue on the B side.
    run(m, n, false);

    Ok(LabelSet { r: 3, m, n, labels: out.into_iter().collect() })
}

/// One factor of N(k₁,k₂): the number of ordered distinct r-tuples
/// (ε₁,…,ε_r) with ε_i^n = e^{2πik₁/r} and ε₁⋯ε_r = 1.
pub fn n_table_side(r: usize, n: u64, k1: i64, budget: u128) -> Result<u128> {
    let ru = r as u64;
    check_budget(binomial_u128(n, ru).max(1), budget)?;
    if ru > n {
        return Ok(0);
    }
    let w = k1.rem_euclid(ru as i64) as u64;
    let pool = candidates(ru, n, w);
    let modulus = ru * n;
    // Product condition: the product of the chosen roots must be 1. The k₁-th
    // power data enters through both the residue class w and the sum target:
    // choosing ε_i = e^{2πie_i/(rn)} with e_i ≡ k₁ (mod r), the product is 1
    // iff Σe_i ≡ 0 (mod rn). Representing k₁ only through w is correct
    // because shifting k₁ by multiples of r re-labels the same root ϖ.
    let mut count: u128 = 0;
    for_each_subset(&pool, r, &mut |sub| {
        let s: u64 = sub.iter().sum();
        if s % modulus == 0 {
            count += 1;
        }
    });
    Ok(count * factorial_u128(ru))
}

/// N(k₁,k₂) = N_n(k₁)·N_m(k₂) from the maximal-component count.
pub fn n_table(r: usize, p: &KnotParams, k1: i64, k2: i64, budget: u128) -> Result<u128> {
    let a = n_table_side(r, p.n(), k1, budget)?;
    let b = n_table_side(r, p.m(), k2, budget)?;
    Ok(a * b)
}

/// One μ_r orbit on a label set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    pub representative: EigenLabel,
    pub size: usize,
    pub stabilizer: usize,
}

/// Orbit decomposition of a label set under the residual μ_r action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitReport {
    pub r: usize,
    pub orbits: Vec<Orbit>,
}

impl OrbitReport {
    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }

    /// Labels fixed by the whole group (orbit size 1).
    pub fn fixed_count(&self) -> usize {
        self.orbits.iter().filter(|o| o.size == 1).count()
    }

    pub fn free_orbit_count(&self) -> usize {
        self.orbits.iter().filter(|o| o.stabilizer == 1).count()
    }

    pub fn total_labels(&self) -> usize {
        self.orbits.iter().map(|o| o.size).sum()
    }

    pub fn stabilizer_sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(|o| o.stabilizer).collect()
    }
}

/// Decomposes `ls` into orbits of the μ_r action t·(ε, ϵ) = (t^m ε, t^n ϵ).
pub fn mu_action_on_labels(ls: &LabelSet) -> OrbitReport {
    let r = ls.r as u64;
    let mut seen: BTreeSet<EigenLabel> = BTreeSet::new();
    let mut orbits = Vec::new();
    for label in &ls.labels {
        if seen.contains(label) {
            continue;
        }
        let mut orbit: BTreeSet<EigenLabel> = BTreeSet::new();
        let mut stabilizer = 0usize;
        for t in 0..r {
            let shifted = label.mu_shifted(t, r, ls.m, ls.n);
            if &shifted == label {
                stabilizer += 1;
            }
            orbit.insert(shifted);
        }
        let size = orbit.len();
        debug_assert_eq!(size * stabilizer, r as usize);
        for member in &orbit {
            debug_assert!(ls.labels.binary_search(member).is_ok(), "orbit left the label set");
        }
        seen.extend(orbit);
        orbits.push(Orbit { representative: label.clone(), size, stabilizer });
    }
    OrbitReport { r: ls.r, orbits }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(m: u64, n: u64) -> KnotParams {
        KnotParams::new(m, n).unwrap()
    }

    #[test]
    fn f_small_counts() {
        assert_eq!(enumerate_f(3, &p(3, 4), DEFAULT_BUDGET).unwrap().len(), 1);
        assert_eq!(enumerate_f(2, &p(2, 3), DEFAULT_BUDGET).unwrap().len(), 1);
        assert_eq!(enumerate_f(3, &p(2, 3), DEFAULT_BUDGET).unwrap().len(), 0);
    }

    #[test]
    fn f_labels_validate() {
        let ls = enumerate_f(3, &p(4, 5), DEFAULT_BUDGET).unwrap();
        assert_eq!(ls.len(), 6); // (1/3)·C(4,2)·C(3,2) = 6·3/3
        for label in &ls.labels {
            label.validate(3, ls.m, ls.n).unwrap();
            assert!(label.is_tau());
        }
    }

    #[test]
    fn g_small_counts() {
        assert_eq!(enumerate_g(&p(2, 3), DEFAULT_BUDGET).unwrap().len(), 1);
        assert_eq!(enumerate_g(&p(3, 4), DEFAULT_BUDGET).unwrap().len(), 9);
        assert_eq!(enumerate_g(&p(3, 5), DEFAULT_BUDGET).unwrap().len(), 16);
    }

    #[test]
    fn g_labels_validate() {
        let ls = enumerate_g(&p(3, 4), DEFAULT_BUDGET).unwrap();
        for label in &ls.labels {
            label.validate(3, ls.m, ls.n).unwrap();
            assert!(!label.is_tau());
        }
    }

    #[test]
    fn n_table_sum_identity() {
        // Σ_{k₁=0}^{n−1} N_n(k₁) = n!/(n−r)!.
        for (r, n) in [(2usize, 5u64), (3, 5), (3, 7), (3, 6)] {
            let total: u128 = (0..n as i64)
                .map(|k| n_table_side(r, n, k, DEFAULT_BUDGET).unwrap())
                .sum();
            let expect: u128 =
                ((n as u128 - r as u128 + 1)..=n as u128).product();
            assert_eq!(total, expect, "r={r} n={n}");
        }
    }

    #[test]
    fn n_table_shift_identity() {
        let pp = p(4, 5);
        for k in 0..6i64 {
            assert_eq!(
                n_table(3, &pp, k, k + 3, DEFAULT_BUDGET).unwrap(),
                n_table(3, &pp, k + 9, k + 3 * 7, DEFAULT_BUDGET).unwrap()
            );
        }
    }

    #[test]
    fn mu_orbits_on_f_5_7() {
        let ls = enumerate_f(3, &p(5, 7), DEFAULT_BUDGET).unwrap();
        let report = mu_action_on_labels(&ls);
        assert_eq!(report.fixed_count(), 0);
        assert_eq!(report.orbit_count() * 3, ls.len());
    }

    #[test]
    fn mu_orbits_on_g_2_3() {
        let ls = enumerate_g(&p(2, 3), DEFAULT_BUDGET).unwrap();
        let report = mu_action_on_labels(&ls);
        assert_eq!(report.fixed_count(), 1);
    }

    #[test]
    fn mu_orbits_on_f_2_3_rank2() {
        // Prop on rank-2 PGL: (m−1)/2 fixed components at (3, 4) → 1.
        let ls = enumerate_f(2, &p(3, 4), DEFAULT_BUDGET).unwrap();
        let report = mu_action_on_labels(&ls);
        assert_eq!(report.fixed_count(), 1);
    }

    #[test]
    fn swap_closure() {
        let pp = p(4, 5);
        let ls = enumerate_f(3, &pp, DEFAULT_BUDGET).unwrap();
        let mut swapped: Vec<_> = ls.labels.iter().map(|l| l.swap_sides()).collect();
        swapped.sort();
        let roles_reversed = enumerate_f_roles(3, pp.n(), pp.m(), DEFAULT_BUDGET).unwrap();
        assert_eq!(swapped, roles_reversed);
    }

    #[test]
    fn budget_guard() {
        let err = enumerate_f(3, &p(9, 1000), 10).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
    }
}
