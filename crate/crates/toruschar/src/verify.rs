//! Grid verification: every identity the library promises, checked over
//! all coprime pairs up to a bound, with a machine-readable report.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use toruschar_core::census::{self, Group, StratumTag, Variant};
use toruschar_core::kclass;
use toruschar_core::knotpoly;
use toruschar_core::oracle;
use toruschar_core::{KClass, KnotParams};

use crate::config::Config;

#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub m: u64,
    pub n: u64,
    pub ok: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub grid: u64,
    pub ranks: Vec<u32>,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.ok).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "grid": self.grid,
            "ranks": self.ranks,
            "ok": self.ok(),
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name,
                "m": c.m,
                "n": c.n,
                "ok": c.ok,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
        })
    }

    pub fn summary(&self) -> String {
        let failed = self.failures().len();
        format!("{} checks, {} failed", self.checks.len(), failed)
    }
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

fn falling_factorial(n: u64, r: u64) -> u128 {
    (0..r).map(|i| (n - i) as u128).product()
}

/// Coprime pairs 2 ≤ m < n ≤ grid, sorted.
pub fn coprime_pairs(grid: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for m in 2..=grid {
        for n in (m + 1)..=grid {
            if num_integer::gcd(m, n) == 1 {
                out.push((m, n));
            }
        }
    }
    out
}

pub fn run_grid(grid: u64, ranks: &[u32], cfg: &Config) -> anyhow::Result<VerifyReport> {
    let mut checks = Vec::new();
    for &(m, n) in &coprime_pairs(grid) {
        let p = KnotParams::new(m, n)?;
        for &r in ranks {
            checks.push(check_f_count(r, &p, cfg)?);
            for group in [Group::Sl, Group::Pgl, Group::Gl] {
                checks.push(check_stratum_sum(r, group, &p, cfg)?);
            }
            checks.push(check_gl_relation(r, &p)?);
        }
        if ranks.contains(&3) {
            checks.push(check_g_count(&p, cfg)?);
            checks.push(check_recover(&p)?);
            checks.extend(check_mu_orbits(&p, cfg)?);
            checks.push(check_line_count(&p, cfg)?);
        }
        checks.push(check_alexander(&p));
        if m <= 8 && n <= 8 {
            for &r in ranks {
                checks.push(check_n_identities(r, &p, cfg)?);
            }
        }
        if n <= 6 {
            checks.push(check_curves(&p, 200, cfg));
        }
    }
    Ok(VerifyReport { grid, ranks: ranks.to_vec(), checks })
}

pub fn check_f_count(r: u32, p: &KnotParams, cfg: &Config) -> anyhow::Result<Check> {
    let (m, n) = (p.m(), p.n());
    let f = oracle::enumerate_f(r as usize, p, cfg.budget)?;
    let expect = binomial(n - 1, r as u64 - 1) * binomial(m - 1, r as u64 - 1) / r as u128;
    let got = f.labels.len() as u128;
    Ok(Check {
        name: "f_count",
        m,
        n,
        ok: got == expect,
        detail: format!("r={r}: |F|={got}, formula={expect}"),
    })
}

pub fn check_g_count(p: &KnotParams, cfg: &Config) -> anyhow::Result<Check> {
    let (m, n) = (p.m(), p.n());
    let g = oracle::enumerate_g(p, cfg.budget)?;
    let expect = ((n - 1) * (m - 1) * (n + m - 4) / 2) as usize;
    Ok(Check {
        name: "g_count",
        m,
        n,
        ok: g.labels.len() == expect,
        detail: format!("|G|={}, formula={expect}", g.labels.len()),
    })
}

pub fn check_stratum_sum(
    r: u32,
    group: Group,
    p: &KnotParams,
    cfg: &Config,
) -> anyhow::Result<Check> {
    let (strata, closed): (Vec<_>, KClass) = match group {
        Group::Sl => (census::census_sl(r, p, cfg.budget)?, kclass::kclass_sl(r, p)?),
        Group::Pgl => (census::census_pgl(r, p, cfg.budget)?, kclass::kclass_pgl(r, p)?),
        Group::Gl => (census::census_gl(r, p, cfg.budget)?, kclass::kclass_gl(r, p)?),
    };
    let sum = census::census_class_sum(&strata);
    Ok(Check {
        name: "stratum_sum",
        m: p.m(),
        n: p.n(),
        ok: sum == closed,
        detail: format!("r={r} {}: sum={sum}, closed={closed}", crate::json::group_name(group)),
    })
}

pub fn check_gl_relation(r: u32, p: &KnotParams) -> anyhow::Result<Check> {
    let gl = kclass::kclass_gl(r, p)?;
    let pgl = kclass::kclass_pgl(r, p)?;
    let lhs = &KClass::from_coeffs([-1i64, 1]) * &pgl;
    Ok(Check {
        name: "gl_relation",
        m: p.m(),
        n: p.n(),
        ok: gl == lhs,
        detail: format!("r={r}: gl={gl}, (L-1)*pgl={lhs}"),
    })
}

pub fn check_recover(p: &KnotParams) -> anyhow::Result<Check> {
    let c = kclass::kclass_sl(3, p)?;
    let got = kclass::recover_mn(&c)?;
    let expect = p.sorted_pair();
    Ok(Check {
        name: "recover_roundtrip",
        m: p.m(),
        n: p.n(),
        ok: got == expect,
        detail: format!("recovered {got:?}, expected {expect:?}"),
    })
}

/// μ₃ orbit statistics against both the PGL census and the closed-form
/// fixed-component counts.
pub fn check_mu_orbits(p: &KnotParams, cfg: &Config) -> anyhow::Result<Vec<Check>> {
    let (m, n) = (p.m(), p.n());
    let strata = census::census_pgl(3, p, cfg.budget)?;
    let count_of = |tag: StratumTag, variant: Option<Variant>| {
        strata
            .iter()
            .filter(|d| d.kind.tag == tag && variant.map_or(true, |v| d.kind.variant == v))
            .count()
    };

    let f = oracle::enumerate_f(3, p, cfg.budget)?;
    let forb = oracle::mu_action_on_labels(&f);
    let g = oracle::enumerate_g(p, cfg.budget)?;
    let gorb = oracle::mu_action_on_labels(&g);

    // Fixed labels exist only when 3 divides one of the parameters.
    let (fixed4, fixed2): (usize, usize) = if n % 3 == 0 {
        ((((m - 1) * (m - 2)) / 6) as usize, (m - 1) as usize)
    } else if m % 3 == 0 {
        ((((n - 1) * (n - 2)) / 6) as usize, (n - 1) as usize)
    } else {
        (0, 0)
    };

    let dim4_census = count_of(StratumTag::IrreducibleDim4, None);
    let dim4_fixed_census = count_of(StratumTag::IrreducibleDim4, Some(Variant::Mu3FixedMaxDim));
    let dim2_census = count_of(StratumTag::IrreducibleDim2, None);
    let dim2_fixed_census = count_of(StratumTag::IrreducibleDim2, Some(Variant::Mu3FixedSurface));

    Ok(vec![
        Check {
            name: "mu3_orbits_dim4",
            m,
            n,
            ok: forb.orbit_count() == dim4_census
                && forb.fixed_count() == dim4_fixed_census
                && forb.fixed_count() == fixed4,
            detail: format!(
                "orbits={} census={dim4_census}; fixed={} census={dim4_fixed_census} formula={fixed4}",
                forb.orbit_count(),
                forb.fixed_count()
            ),
        },
        Check {
            name: "mu3_orbits_dim2",
            m,
            n,
            ok: gorb.orbit_count() == dim2_census
                && gorb.fixed_count() == dim2_fixed_census
                && gorb.fixed_count() == fixed2,
            detail: format!(
                "orbits={} census={dim2_census}; fixed={} census={dim2_fixed_census} formula={fixed2}",
                gorb.orbit_count(),
                gorb.fixed_count()
            ),
        },
    ])
}

pub fn check_alexander(p: &KnotParams) -> Check {
    let (m, n) = (p.m(), p.n());
    let delta = knotpoly::alexander(p);
    let degree_ok = delta.degree() == Some(((m - 1) * (n - 1)) as usize);
    let at_one = delta.eval(&num_bigint::BigInt::from(1)) == num_bigint::BigInt::from(1);
    let pal = delta.is_palindromic();
    Check {
        name: "alexander",
        m,
        n,
        ok: degree_ok && at_one && pal,
        detail: format!("deg ok={degree_ok}, Δ(1)=1: {at_one}, palindromic={pal}"),
    }
}

pub fn check_line_count(p: &KnotParams, cfg: &Config) -> anyhow::Result<Check> {
    let id = knotpoly::line_count_identity(p, cfg.budget)?;
    Ok(Check {
        name: "line_count",
        m: p.m(),
        n: p.n(),
        ok: id.holds(),
        detail: format!(
            "strata={}, formula={}, roots={}",
            id.strata_side, id.formula_side, id.roots_side
        ),
    })
}

/// Samples random (δ, t) on every boundary curve of the pair and checks
/// the parametrized point against the quartic.
pub fn check_curves(p: &KnotParams, samples_per_curve: u32, cfg: &Config) -> Check {
    let (m, n) = (p.m(), p.n());
    let mn = m * n;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut worst: f64 = 0.0;
    let mut tested = 0u64;
    for k in 1..mn as i64 {
        let Ok(curve) = knotpoly::boundary_curve(p, k) else {
            continue; // k on a reducible line
        };
        let delta = Complex64::from_polar(1.0, std::f64::consts::PI * k as f64 / mn as f64);
        for _ in 0..samples_per_curve {
            let t = Complex64::from_polar(
                rng.gen_range(0.5f64..2.0),
                rng.gen_range(0.0..std::f64::consts::TAU),
            );
            let Ok((x, y)) = knotpoly::parametrize_curve(delta, t) else {
                continue;
            };
            let c = Complex64::new(curve.c, 0.0);
            let rel = knotpoly::curve_residual(c, x, y).norm() / knotpoly::curve_scale(c, x, y);
            worst = worst.max(rel);
            tested += 1;
        }
    }
    Check {
        name: "curves",
        m,
        n,
        ok: tested > 0 && worst < cfg.residual_tol,
        detail: format!("{tested} samples, worst relative residual {worst:.3e}"),
    }
}

/// The two counting identities behind the main enumeration theorem.
pub fn check_n_identities(r: u32, p: &KnotParams, cfg: &Config) -> anyhow::Result<Check> {
    let (m, n) = (p.m(), p.n());
    let r64 = r as u64;
    let mut side_sum: u128 = 0;
    for k1 in 0..n as i64 {
        side_sum += oracle::n_table_side(r as usize, n, k1, cfg.budget)?;
    }
    let side_expect = falling_factorial(n, r64);
    let mut diag_sum: u128 = 0;
    for k in 0..(m * n) as i64 {
        diag_sum += oracle::n_table(r as usize, p, k, k, cfg.budget)?;
    }
    let diag_expect = falling_factorial(n, r64) * falling_factorial(m, r64);
    Ok(Check {
        name: "n_identities",
        m,
        n,
        ok: side_sum == side_expect && diag_sum == diag_expect,
        detail: format!(
            "r={r}: Σ N_n={side_sum} (expect {side_expect}), Σ N(k,k)={diag_sum} (expect {diag_expect})"
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_grid_is_clean() {
        let cfg = Config::default();
        let report = run_grid(5, &[2, 3], &cfg).unwrap();
        assert!(report.ok(), "failures: {:?}", report.failures());
        assert!(report.to_json()["ok"].as_bool().unwrap());
    }

    #[test]
    fn pair_list_is_coprime_and_sorted() {
        let pairs = coprime_pairs(6);
        assert_eq!(pairs, vec![(2, 3), (2, 5), (3, 4), (3, 5), (4, 5), (5, 6)]);
    }
}
