//! Stratification of the character varieties for SL, GL and PGL in ranks
//! 2 and 3, plus the general-rank maximal-component count and the K_{3,3}
//! boundary incidence pattern.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::kclass;
use crate::kring::KClass;
use crate::labels::EigenLabel;
use crate::oracle::{self, OrbitReport};
use crate::params::KnotParams;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Group {
    Sl,
    Gl,
    Pgl,
}

/// The stratum family. Rank-2 irreducible components are filed under
/// `IrreducibleDim4` (the maximal-dimension family; their dimension field
/// says 1), so the tag set is the same for both ranks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StratumTag {
    TotallyReducible,
    PartialType1,
    PartialType2,
    IrreducibleDim4,
    IrreducibleDim2,
}

/// Quotient-variant subtag; `Plain` everywhere except the PGL/GL strata
/// that are genuine μ₂- or μ₃-quotients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Plain,
    Mu3FixedSurface,
    Mu3FixedMaxDim,
    Mu2Fixed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StratumKind {
    pub tag: StratumTag,
    pub variant: Variant,
}

impl StratumKind {
    pub fn plain(tag: StratumTag) -> Self {
        StratumKind { tag, variant: Variant::Plain }
    }
}

/// One stratum of a character variety.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentDescriptor {
    pub kind: StratumKind,
    pub group: Group,
    pub rank: u32,
    pub eigen_label: Option<EigenLabel>,
    pub dimension: u32,
    pub kclass: KClass,
    /// Free-text defining-inequation data; documentation, never parsed.
    pub chart: String,
}

fn chart(s: &str) -> String {
    String::from(s)
}

/// (1/r)·C(n−1, r−1)·C(m−1, r−1), the number of maximal-dimension
/// components of the rank-r variety; 0 when n < r or m < r.
pub fn max_dim_component_count(r: u64, p: &KnotParams) -> BigInt {
    assert!(r >= 2);
    let num = binomial(p.n() - 1, r - 1) * binomial(p.m() - 1, r - 1);
    let (q, rem) = num_integer::Integer::div_rem(&num, &BigInt::from(r));
    assert!(rem.is_zero(), "maximal component count is not integral");
    q
}

fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::from(1);
    for i in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// ⌊(n−1)/2⌋·⌊(m−1)/2⌋ partially reducible type-1 strata.
pub fn count_pr1(p: &KnotParams) -> u64 {
    ((p.n() - 1) / 2) * ((p.m() - 1) / 2)
}

/// (n−1)/2 type-2 strata when the even parameter is present (normalized to
/// m even), else 0.
pub fn count_pr2(p: &KnotParams) -> u64 {
    if p.m() % 2 == 0 {
        (p.n() - 1) / 2
    } else {
        0
    }
}

/// (n−1)(m−1)(n+m−4)/2 dimension-2 strata of the rank-3 SL variety.
pub fn count_dim2_sl3(p: &KnotParams) -> u64 {
    let (m, n) = (p.m(), p.n());
    (n - 1) * (m - 1) * (n + m - 4) / 2
}

/// (n−1)(n−2)(m−1)(m−2)/12 dimension-4 strata of the rank-3 SL variety.
pub fn count_dim4_sl3(p: &KnotParams) -> u64 {
    let (m, n) = (p.m() as u128, p.n() as u128);
    let num = (n - 1) * (n - 2) * (m - 1) * (m - 2);
    assert!(num % 12 == 0);
    (num / 12) as u64
}

fn descriptor(
    group: Group,
    rank: u32,
    kind: StratumKind,
    label: Option<EigenLabel>,
    dimension: u32,
    kclass: KClass,
    chart_str: &str,
) -> ComponentDescriptor {
    ComponentDescriptor {
        kind,
        group,
        rank,
        eigen_label: label,
        dimension,
        kclass,
        chart: chart(chart_str),
    }
}

/// Strata of the SL(r,ℂ)-character variety, labels attached from the
/// brute-force enumerations.
pub fn census_sl(r: u32, p: &KnotParams, budget: u128) -> Result<Vec<ComponentDescriptor>> {
    match r {
        2 => census_sl2(p, budget),
        3 => census_sl3(p, budget),
        _ => Err(Error::UnsupportedRank(r)),
    }
}

fn census_sl2(p: &KnotParams, budget: u128) -> Result<Vec<ComponentDescriptor>> {
    let mut out = Vec::new();
    out.push(descriptor(
        Group::Sl,
        2,
        StratumKind::plain(StratumTag::TotallyReducible),
        None,
        1,
        KClass::lefschetz(),
        "C (coordinate s_1 = t + 1/t)",
    ));
    let f = oracle::enumerate_f(2, p, budget)?;
    for label in f.labels {
        out.push(descriptor(
            Group::Sl,
            2,
            StratumKind::plain(StratumTag::IrreducibleDim4),
            Some(label),
            1,
            KClass::from_coeffs([-2, 1]),
            "C - {0,1}",
        ));
    }
    Ok(out)
}

fn census_sl3(p: &KnotParams, budget: u128) -> Result<Vec<ComponentDescriptor>> {
    let mut out = Vec::new();
    out.push(descriptor(
        Group::Sl,
        3,
        StratumKind::plain(StratumTag::TotallyReducible),
        None,
        2,
        kclass::p0(),
        "C^2 (coordinates the elementary symmetric functions s_1, s_2)",
    ));
    for _ in 0..count_pr1(p) {
        out.push(descriptor(
            Group::Sl,
            3,
            StratumKind::plain(StratumTag::PartialType1),
            None,
            2,
            kclass::p5(),
            "(C - {0,1}) x C*",
        ));
    }
    for _ in 0..count_pr2(p) {
        out.push(descriptor(
            Group::Sl,
            3,
            StratumKind::plain(StratumTag::PartialType2),
            None,
            2,
            kclass::p6(),
            "{(u,v): v != 0, v != u^2}",
        ));
    }
    let f = oracle::enumerate_f(3, p, budget)?;
    for label in f.labels {
        out.push(descriptor(
            Group::Sl,
            3,
            StratumKind::plain(StratumTag::IrreducibleDim4),
            Some(label),
            4,
            kclass::p1(),
            "M/(T x_D T), M the stable locus of GL(3)",
        ));
    }
    let g = oracle::enumerate_g(p, budget)?;
    for label in g.labels {
        out.push(descriptor(
            Group::Sl,
            3,
            StratumKind::plain(StratumTag::IrreducibleDim2),
            Some(label),
            2,
            kclass::p3(),
            "(C*)^2 - {x+y=1}",
        ));
    }
    Ok(out)
}

/// Strata of the PGL(r,ℂ)-character variety: the reducible strata follow
/// the closed-form counts, the irreducible ones are μ_r-orbit
/// representatives of the SL label sets, with fixed orbits becoming the
/// quotient variants.
pub fn census_pgl(r: u32, p: &KnotParams, budget: u128) -> Result<Vec<ComponentDescriptor>> {
    match r {
        2 => census_pgl2(p, budget),
        3 => census_pgl3(p, budget),
        _ => Err(Error::UnsupportedRank(r)),
    }
}

fn orbit_reports(r: u32, p: &KnotParams, budget: u128) -> Result<(OrbitReport, Option<OrbitReport>)> {
    let f = oracle::enumerate_f(r as usize, p, budget)?;
    let f_orbits = oracle::mu_action_on_labels(&f);
    let g_orbits = if r == 3 {
        let g = oracle::enumerate_g(p, budget)?;
        Some(oracle::mu_action_on_labels(&g))
    } else {
        None
    };
    Ok((f_orbits, g_orbits))
}

fn census_pgl2(p: &KnotParams, budget: u128) -> Result<Vec<ComponentDescriptor>> {
    let mut out = Vec::new();
    out.push(descriptor(
        Group::Pgl,
        2,
        StratumKind::plain(StratumTag::TotallyReducible),
        None,
        1,
        KClass::lefschetz(),
        "C",
    ));
    let (f_orbits, _) = orbit_reports(2, p, budget)?;
    for orbit in &f_orbits.orbits {
        if orbit.stabilizer == 1 {
            out.push(descriptor(
                Group::Pgl,
                2,
                StratumKind::plain(StratumTag::IrreducibleDim4),
                Some(orbit.representative.clone()),
                1,
                KClass::from_coeffs([-2, 1]),
                "C - {0,1}",
            ));
        } else {
            out.push(descriptor(
                Group::Pgl,
                2,
                StratumKind {
                    tag: StratumTag::IrreducibleDim4,
                    variant: Variant::Mu2Fixed,
                },
                Some(orbit.representative.clone()),
                1,
                KClass::from_coeffs([-1, 1]),
                "(C - {0,1})/mu_2 ~ C*",
            ));
        }
    }
    Ok(out)
}

fn census_pgl3(p: &KnotParams, budget: u128) -> Result<Vec<ComponentDescriptor>> {
    let mut out = Vec::new();
    out.push(descriptor(
        Group::Pgl,
        3,
        StratumKind::plain(StratumTag::TotallyReducible),
        None,
        2,
        kclass::p0(),
        "C^2/mu_3 ~ {(x,y,z): x y = z^3}",
    ));
    for _ in 0..count_pr1(p) {
        out.push(descriptor(
            Group::Pgl,
            3,
            StratumKind::plain(StratumTag::PartialType1),
            None,
            2,
            kclass::p5(),
            "(C - {0,1}) x C*",
        ));
    }
    for _ in 0..count_pr2(p) {
        out.push(descriptor(
            Group::Pgl,
            3,
            StratumKind::plain(StratumTag::PartialType2),
            None,
            2,
            kclass::p6(),
            "{(u,v): v != 0, v != u^2}",
        ));
    }
    let (f_orbits, g_orbits) = orbit_reports(3, p, budget)?;
    for orbit in &f_orbits.orbits {
        if orbit.stabilizer == 1 {
            out.push(descriptor(
                Group::Pgl,
                3,
                StratumKind::plain(StratumTag::IrreducibleDim4),
                Some(orbit.representative.clone()),
                4,
                kclass::p1(),
                "M/(T x_D T)",
            ));
        } else {
            out.push(descriptor(
                Group::Pgl,
                3,
                StratumKind {
                    tag: StratumTag::IrreducibleDim4,
                    variant: Variant::Mu3FixedMaxDim,
                },
                Some(orbit.representative.clone()),
                4,
                kclass::p2(),
                "M/(T x_D T x| mu_3)",
            ));
        }
    }
    for orbit in &g_orbits.expect("rank 3 has G orbits").orbits {
        if orbit.stabilizer == 1 {
            out.push(descriptor(
                Group::Pgl,
                3,
                StratumKind::plain(StratumTag::IrreducibleDim2),
                Some(orbit.representative.clone()),
                2,
                kclass::p3(),
                "(C*)^2 - {x+y=1}",
            ));
        } else {
            out.push(descriptor(
                Group::Pgl,
                3,
                StratumKind {
                    tag: StratumTag::IrreducibleDim2,
                    variant: Variant::Mu3FixedSurface,
                },
                Some(orbit.representative.clone()),
                2,
                kclass::p4(),
                "{(x,y,z): x y = z^3, x + y + 3z != 1}",
            ));
        }
    }
    Ok(out)
}

/// Strata of the GL(r,ℂ)-character variety. Each stratum is the matching
/// PGL stratum with class multiplied by (L−1) and dimension raised by one;
/// the chart strings carry the GL shapes.
pub fn census_gl(r: u32, p: &KnotParams, budget: u128) -> Result<Vec<ComponentDescriptor>> {
    if r != 2 && r != 3 {
        return Err(Error::UnsupportedRank(r));
    }
    let lm1 = KClass::from_coeffs([-1, 1]);
    let out = census_pgl(r, p, budget)?
        .into_iter()
        .map(|d| {
            let chart_str = gl_chart(r, &d.kind);
            ComponentDescriptor {
                kind: d.kind,
                group: Group::Gl,
                rank: d.rank,
                eigen_label: d.eigen_label,
                dimension: d.dimension + 1,
                kclass: &lm1 * &d.kclass,
                chart: chart_str,
            }
        })
        .collect();
    Ok(out)
}

fn gl_chart(r: u32, kind: &StratumKind) -> String {
    let s = match (r, kind.tag, kind.variant) {
        (2, StratumTag::TotallyReducible, _) => "C x C*",
        (2, _, Variant::Plain) => "(C - {0,1}) x C*",
        (2, _, Variant::Mu2Fixed) => "{(u,v): v != 0, v != u^2}",
        (3, StratumTag::TotallyReducible, _) => "C^2 x C*",
        (3, StratumTag::PartialType1, _) => "(C - {0,1}) x (C*)^2",
        (3, StratumTag::PartialType2, _) => "{(x,y,z): y,z != 0, y != z^2}",
        (3, StratumTag::IrreducibleDim2, Variant::Plain) => "((C*)^2 - {x+y=1}) x C*",
        (3, StratumTag::IrreducibleDim2, Variant::Mu3FixedSurface) => {
            "{(u,v,w): u^3 + v^3 + 3uv - w != 0, w != 0}"
        }
        (3, StratumTag::IrreducibleDim4, Variant::Plain) => "M/(T x_D T) x C*",
        (3, StratumTag::IrreducibleDim4, Variant::Mu3FixedMaxDim) => {
            "(M/(T x_D T) x C*)/mu_3"
        }
        _ => "",
    };
    chart(s)
}

/// Sum of the K-classes of a census — the stratum-sum side of the
/// stratum-sum identities.
pub fn census_class_sum(descriptors: &[ComponentDescriptor]) -> KClass {
    descriptors
        .iter()
        .fold(KClass::zero(), |acc, d| &acc + &d.kclass)
}

/// The incidence pattern of the 6 totally-reducible boundary points and 9
/// partially-reducible boundary lines in the closure of a maximal
/// component: points are the supports of the 3×3 permutation matrices,
/// lines are the matrix entries, incidence is containment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceGraph {
    /// Each point as a permutation: `perm[i]` = column of the entry in row i.
    pub points: Vec<[usize; 3]>,
    /// Each line as a matrix entry (row, col).
    pub lines: Vec<(usize, usize)>,
    /// (point index, line index) pairs.
    pub incidences: Vec<(usize, usize)>,
}

impl IncidenceGraph {
    /// Point indices on a given line.
    pub fn points_on_line(&self, line: usize) -> Vec<usize> {
        self.incidences
            .iter()
            .filter(|&&(_, l)| l == line)
            .map(|&(p, _)| p)
            .collect()
    }

    /// Line indices through a given point.
    pub fn lines_through_point(&self, point: usize) -> Vec<usize> {
        self.incidences
            .iter()
            .filter(|&&(p, _)| p == point)
            .map(|&(_, l)| l)
            .collect()
    }

    /// Parity of the permutation behind a point (the K_{3,3} bipartition).
    pub fn point_parity(&self, point: usize) -> bool {
        let p = self.points[point];
        let mut inversions = 0;
        for i in 0..3 {
            for j in (i + 1)..3 {
                if p[i] > p[j] {
                    inversions += 1;
                }
            }
        }
        inversions % 2 == 0
    }
}

pub fn boundary_incidence_type1() -> IncidenceGraph {
    let points: Vec<[usize; 3]> = alloc::vec![
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let lines: Vec<(usize, usize)> = (0..3)
        .flat_map(|i| (0..3).map(move |j| (i, j)))
        .collect();
    let mut incidences = Vec::new();
    for (pi, perm) in points.iter().enumerate() {
        for (li, &(row, col)) in lines.iter().enumerate() {
            if perm[row] == col {
                incidences.push((pi, li));
            }
        }
    }
    let graph = IncidenceGraph { points, lines, incidences };
    // Structural sanity: 2 points per line, 3 lines per point, bipartite
    // across parity with all 9 edges.
    for l in 0..9 {
        let on = graph.points_on_line(l);
        assert_eq!(on.len(), 2);
        assert_ne!(graph.point_parity(on[0]), graph.point_parity(on[1]));
    }
    for p in 0..6 {
        assert_eq!(graph.lines_through_point(p).len(), 3);
    }
    assert_eq!(graph.incidences.len(), 18);
    graph
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::DEFAULT_BUDGET;

    fn p(m: u64, n: u64) -> KnotParams {
        KnotParams::new(m, n).unwrap()
    }

    fn count_kind(ds: &[ComponentDescriptor], tag: StratumTag) -> usize {
        ds.iter().filter(|d| d.kind.tag == tag).count()
    }

    #[test]
    fn max_dim_counts() {
        assert_eq!(max_dim_component_count(3, &p(2, 3)), BigInt::from(0));
        assert_eq!(max_dim_component_count(3, &p(3, 4)), BigInt::from(1));
        assert_eq!(max_dim_component_count(2, &p(2, 3)), BigInt::from(1));
        assert_eq!(max_dim_component_count(4, &p(5, 4)), BigInt::from(1));
    }

    #[test]
    fn sl3_census_2_3() {
        let ds = census_sl(3, &p(2, 3), DEFAULT_BUDGET).unwrap();
        assert_eq!(count_kind(&ds, StratumTag::TotallyReducible), 1);
        assert_eq!(count_kind(&ds, StratumTag::PartialType1), 0);
        assert_eq!(count_kind(&ds, StratumTag::PartialType2), 1);
        assert_eq!(count_kind(&ds, StratumTag::IrreducibleDim4), 0);
        assert_eq!(count_kind(&ds, StratumTag::IrreducibleDim2), 1);
    }

    #[test]
    fn sl3_census_3_5() {
        let ds = census_sl(3, &p(3, 5), DEFAULT_BUDGET).unwrap();
        assert_eq!(count_kind(&ds, StratumTag::TotallyReducible), 1);
        assert_eq!(count_kind(&ds, StratumTag::PartialType1), 2);
        assert_eq!(count_kind(&ds, StratumTag::PartialType2), 0);
        assert_eq!(count_kind(&ds, StratumTag::IrreducibleDim4), 2);
        assert_eq!(count_kind(&ds, StratumTag::IrreducibleDim2), 16);
    }

    #[test]
    fn sl2_census_2_3() {
        let ds = census_sl(2, &p(2, 3), DEFAULT_BUDGET).unwrap();
        assert_eq!(ds.len(), 2);
        assert_eq!(count_kind(&ds, StratumTag::IrreducibleDim4), 1);
    }

    #[test]
    fn pgl3_census_2_3() {
        let ds = census_pgl(3, &p(2, 3), DEFAULT_BUDGET).unwrap();
        assert_eq!(count_kind(&ds, StratumTag::TotallyReducible), 1);
        assert_eq!(count_kind(&ds, StratumTag::PartialType2), 1);
        let fixed_surfaces = ds
            .iter()
            .filter(|d| d.kind.variant == Variant::Mu3FixedSurface)
            .count();
        assert_eq!(fixed_surfaces, 1);
        assert_eq!(count_kind(&ds, StratumTag::IrreducibleDim4), 0);
    }

    #[test]
    fn pgl2_census_3_4() {
        let ds = census_pgl(2, &p(3, 4), DEFAULT_BUDGET).unwrap();
        assert_eq!(ds.len(), 3);
        let mu2 = ds
            .iter()
            .filter(|d| d.kind.variant == Variant::Mu2Fixed)
            .count();
        assert_eq!(mu2, 1);
    }

    #[test]
    fn gl2_census_3_5() {
        let ds = census_gl(2, &p(3, 5), DEFAULT_BUDGET).unwrap();
        assert_eq!(ds.len(), 3);
        assert_eq!(ds[0].chart, "C x C*");
        assert_eq!(
            census_class_sum(&ds),
            crate::kclass::kclass_gl(2, &p(3, 5)).unwrap()
        );
    }

    #[test]
    fn stratum_sums_match_closed_forms() {
        for (m, n) in [(2, 3), (3, 4), (3, 5), (4, 5), (5, 6), (5, 7), (2, 9), (3, 10)] {
            let pp = p(m, n);
            for r in [2u32, 3] {
                let sl = census_sl(r, &pp, DEFAULT_BUDGET).unwrap();
                assert_eq!(
                    census_class_sum(&sl),
                    crate::kclass::kclass_sl(r, &pp).unwrap(),
                    "sl r={r} ({m},{n})"
                );
                let pgl = census_pgl(r, &pp, DEFAULT_BUDGET).unwrap();
                assert_eq!(
                    census_class_sum(&pgl),
                    crate::kclass::kclass_pgl(r, &pp).unwrap(),
                    "pgl r={r} ({m},{n})"
                );
                let gl = census_gl(r, &pp, DEFAULT_BUDGET).unwrap();
                assert_eq!(
                    census_class_sum(&gl),
                    crate::kclass::kclass_gl(r, &pp).unwrap(),
                    "gl r={r} ({m},{n})"
                );
            }
        }
    }

    #[test]
    fn dim4_counts_match_formula() {
        for (m, n) in [(3, 4), (4, 5), (5, 7), (5, 9)] {
            let pp = p(m, n);
            let ds = census_sl(3, &pp, DEFAULT_BUDGET).unwrap();
            let dim4 = ds.iter().filter(|d| d.dimension == 4).count();
            assert_eq!(BigInt::from(dim4), max_dim_component_count(3, &pp));
            assert_eq!(dim4 as u64, count_dim4_sl3(&pp));
        }
    }

    #[test]
    fn labels_revalidate() {
        let pp = p(4, 5);
        for d in census_sl(3, &pp, DEFAULT_BUDGET).unwrap() {
            if let Some(label) = &d.eigen_label {
                label.validate(3, pp.m(), pp.n()).unwrap();
            }
        }
    }

    #[test]
    fn incidence_graph_is_k33() {
        let g = boundary_incidence_type1();
        assert_eq!(g.points.len(), 6);
        assert_eq!(g.lines.len(), 9);
        assert_eq!(g.incidences.len(), 18);
        // Entry (0,0): identity and the (1 2)-transposition in rows 1..2.
        let line0 = g.lines.iter().position(|&e| e == (0, 0)).unwrap();
        let pts = g.points_on_line(line0);
        let supports: Vec<[usize; 3]> = pts.iter().map(|&i| g.points[i]).collect();
        assert!(supports.contains(&[0, 1, 2]));
        assert!(supports.contains(&[0, 2, 1]));
    }
}
