//! Command-line front door.

use std::path::PathBuf;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use toruschar_core::census::{self, Group};
use toruschar_core::kclass;
use toruschar_core::knotpoly;
use toruschar_core::latquot;
use toruschar_core::oracle;
use toruschar_core::KnotParams;

use crate::config::Config;
use crate::json as js;
use crate::repnum;
use crate::table;
use crate::verify;

#[derive(Parser)]
#[command(name = "toruschar", about = "Exact invariants of torus-knot character varieties")]
struct Cli {
    /// Optional key=value config file (tolerances, budget, seed).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the strata of a character variety.
    Census {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        rank: u32,
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Print the K-theory class of a character variety.
    Kclass {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        rank: u32,
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Recover (m, n) from a rank-3 SL class stored as JSON.
    Recover {
        #[arg(long)]
        kclass_file: PathBuf,
    },
    /// Run the full identity suite over all coprime pairs up to a bound.
    Verify {
        #[arg(long)]
        grid: u64,
        /// Comma-separated ranks, e.g. 2,3.
        #[arg(long, default_value = "2,3")]
        rank: String,
        #[arg(long)]
        budget: Option<u128>,
        /// Write the JSON report here (atomically).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the Alexander polynomial.
    Alexander {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Print the boundary curves (all, or one chosen by --k).
    Curves {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: Option<i64>,
    },
    /// Basis of the quotient lattice for a weighted μ_r torus action.
    QuotientBasis {
        /// Comma-separated weights, e.g. 1,2,2.
        #[arg(long)]
        weights: String,
        #[arg(long)]
        r: u64,
    },
    /// Numeric representation checks for every label of a pair.
    RepCheck {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        samples: Option<u32>,
    },
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return 2;
        }
    };
    let cfg = match Config::load(cli.config.as_deref()) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("{}", json!({ "error": format!("{e:#}") }));
            return 2;
        }
    };
    match execute(cli.cmd, cfg) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("{}", json!({ "error": format!("{e:#}") }));
            1
        }
    }
}

fn parse_ranks(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<u32>()
                .with_context(|| format!("bad rank {part:?}"))
        })
        .collect()
}

fn execute(cmd: Cmd, mut cfg: Config) -> Result<i32> {
    match cmd {
        Cmd::Census { m, n, rank, group, format } => {
            let p = KnotParams::new(m, n)?;
            let group = js::parse_group(&group)?;
            let strata = match group {
                Group::Sl => census::census_sl(rank, &p, cfg.budget)?,
                Group::Pgl => census::census_pgl(rank, &p, cfg.budget)?,
                Group::Gl => census::census_gl(rank, &p, cfg.budget)?,
            };
            match format {
                Format::Json => {
                    let items: Vec<_> = strata.iter().map(js::descriptor_to_json).collect();
                    println!("{}", serde_json::to_string_pretty(&json!(items))?);
                }
                Format::Table => {
                    let rows: Vec<Vec<String>> = strata
                        .iter()
                        .map(|d| {
                            vec![
                                js::tag_name(d.kind.tag).to_string(),
                                js::variant_name(d.kind.variant).to_string(),
                                d.dimension.to_string(),
                                d.kclass.pretty(),
                                d.eigen_label
                                    .as_ref()
                                    .map(|l| format!("{:?}/{:?}@{}", l.a_exps(), l.b_exps(), l.order()))
                                    .unwrap_or_default(),
                            ]
                        })
                        .collect();
                    print!("{}", table::render(&["tag", "variant", "dim", "kclass", "label"], &rows));
                }
            }
            Ok(0)
        }
        Cmd::Kclass { m, n, rank, group, format } => {
            let p = KnotParams::new(m, n)?;
            let g = js::parse_group(&group)?;
            let c = match g {
                Group::Sl => kclass::kclass_sl(rank, &p)?,
                Group::Pgl => kclass::kclass_pgl(rank, &p)?,
                Group::Gl => kclass::kclass_gl(rank, &p)?,
            };
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "group": js::group_name(g),
                        "rank": rank,
                        "m": m,
                        "n": n,
                        "kclass": js::kclass_to_json(&c),
                        "kclass_pretty": c.pretty(),
                    }))?
                ),
                Format::Table => println!("{}", c.pretty()),
            }
            Ok(0)
        }
        Cmd::Recover { kclass_file } => {
            let text = std::fs::read_to_string(&kclass_file)
                .with_context(|| format!("cannot read {}", kclass_file.display()))?;
            let value: serde_json::Value = serde_json::from_str(&text)?;
            let c = js::kclass_from_json(&value)?;
            let (m, n) = kclass::recover_mn(&c)?;
            println!("{}", json!({ "m": m, "n": n }));
            Ok(0)
        }
        Cmd::Verify { grid, rank, budget, out } => {
            if let Some(b) = budget {
                cfg.budget = b;
            }
            let ranks = parse_ranks(&rank)?;
            let report = verify::run_grid(grid, &ranks, &cfg)?;
            if let Some(path) = out {
                js::write_atomic(&path, &report.to_json())?;
            }
            for check in &report.checks {
                println!(
                    "{} ({},{}) {}: {}",
                    if check.ok { "ok  " } else { "FAIL" },
                    check.m,
                    check.n,
                    check.name,
                    check.detail
                );
            }
            println!("{}", report.summary());
            Ok(if report.ok() { 0 } else { 1 })
        }
        Cmd::Alexander { m, n, format } => {
            let p = KnotParams::new(m, n)?;
            let delta = knotpoly::alexander(&p);
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "m": m,
                        "n": n,
                        "degree": delta.degree(),
                        "coeffs": delta.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                        "pretty": delta.pretty(),
                    }))?
                ),
                Format::Table => println!("{}", delta.pretty()),
            }
            Ok(0)
        }
        Cmd::Curves { m, n, k } => {
            let p = KnotParams::new(m, n)?;
            let curves: Vec<_> = match k {
                Some(k) => vec![knotpoly::boundary_curve(&p, k)?],
                None => {
                    // One representative per component: keep k when it is
                    // its own component key.
                    (1..(p.m() * p.n()) as i64)
                        .filter_map(|k| knotpoly::boundary_curve(&p, k).ok())
                        .filter(|c| c.component_key == c.k as u64)
                        .collect()
                }
            };
            let items: Vec<_> = curves.iter().map(js::curve_to_json).collect();
            println!("{}", serde_json::to_string_pretty(&json!(items))?);
            Ok(0)
        }
        Cmd::QuotientBasis { weights, r } => {
            let weights: Vec<i64> = weights
                .split(',')
                .map(|w| w.trim().parse::<i64>().map_err(|e| anyhow!("bad weight {w:?}: {e}")))
                .collect::<Result<_>>()?;
            let q = latquot::quotient_basis(&weights, r)?;
            let verified = latquot::verify_quotient_basis(&q.matrix, &weights, r);
            println!("{}", serde_json::to_string_pretty(&js::quotient_to_json(&q, &weights, r, verified))?);
            for j in 0..q.matrix.rows() {
                let monomial: Vec<String> = (0..q.matrix.cols())
                    .map(|i| format!("t_{}^{}", i + 1, q.matrix.get(j, i)))
                    .collect();
                println!("u_{} = {}", j + 1, monomial.join(" * "));
            }
            Ok(if verified { 0 } else { 1 })
        }
        Cmd::RepCheck { m, n, seed, samples } => {
            if let Some(s) = seed {
                cfg.seed = s;
            }
            if let Some(s) = samples {
                cfg.samples = s;
            }
            let p = KnotParams::new(m, n)?;
            let ncfg = cfg.numeric();
            let mut reports = Vec::new();
            let mut all_ok = true;
            let f = oracle::enumerate_f(3, &p, cfg.budget)?;
            let g = oracle::enumerate_g(&p, cfg.budget)?;
            for (label, expect_dim) in f
                .labels
                .iter()
                .map(|l| (l, 4u32))
                .chain(g.labels.iter().map(|l| (l, 2u32)))
            {
                use rand::SeedableRng;
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(cfg.seed);
                let m_mat = repnum::random_annulus_matrix(&mut rng, label.rank());
                let rep = repnum::build_representation(label, &p, m_mat)?;
                let irr = repnum::is_irreducible(&rep.m_mat, cfg.zero_tol);
                let dim = repnum::component_dimension_estimate(label, &p, &ncfg)?;
                let ok = rep.relation_residual < cfg.residual_tol && dim == expect_dim;
                all_ok &= ok;
                reports.push(json!({
                    "label": js::label_to_json(label),
                    "residuals": {
                        "relation": rep.relation_residual,
                        "varpi": rep.varpi_residual,
                    },
                    "irreducible": irr,
                    "dim_estimate": dim,
                    "expected_dim": expect_dim,
                    "samples": ncfg.samples,
                    "ok": ok,
                }));
            }
            println!("{}", serde_json::to_string_pretty(&json!(reports))?);
            Ok(if all_ok { 0 } else { 1 })
        }
    }
}
