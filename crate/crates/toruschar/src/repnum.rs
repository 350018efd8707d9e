//! Numerical representation checks: explicit (A, B) pairs built from
//! eigenvalue labels, the zero-minor irreducibility test, and dimension
//! estimates for strata via the rank of the character-map Jacobian.
//!
//! Everything here is float arithmetic at rank ≤ 3; the linear algebra
//! (determinants, adjugate inverses, a Jacobi eigensolver for the Gram
//! matrix) is hand-rolled to keep the crate dependency-light.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use toruschar_core::labels::EigenLabel;
use toruschar_core::rootexp::RootExp;
use toruschar_core::KnotParams;

/// Default RNG seed for sampled matrices.
pub const DEFAULT_SEED: u64 = 0x5EED;

#[derive(Debug, thiserror::Error)]
pub enum RepError {
    #[error("matrix M is numerically singular")]
    SingularM,
    #[error("all samples hit the non-generic locus")]
    DegenerateSample,
    #[error(transparent)]
    Core(#[from] toruschar_core::Error),
}

/// Dense complex square matrix, row-major. Sized for r ≤ 3 but generic in
/// the dimension except for `det`/`inverse`.
#[derive(Debug, Clone, PartialEq)]
pub struct CMat {
    n: usize,
    a: Vec<Complex64>,
}

impl CMat {
    pub fn zeros(n: usize) -> Self {
        CMat { n, a: vec![Complex64::new(0.0, 0.0); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CMat::zeros(n);
        for i in 0..n {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        m
    }

    pub fn diag(d: &[Complex64]) -> Self {
        let mut m = CMat::zeros(d.len());
        for (i, &v) in d.iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        CMat { n, a: rows.iter().flatten().copied().collect() }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.a[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.a[i * self.n + j] = v;
    }

    pub fn mul(&self, other: &CMat) -> CMat {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = CMat::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let s = self.get(i, k);
                for j in 0..n {
                    let v = out.get(i, j) + s * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &CMat) -> CMat {
        assert_eq!(self.n, other.n);
        let a = self.a.iter().zip(&other.a).map(|(x, y)| x - y).collect();
        CMat { n: self.n, a }
    }

    pub fn scale(&self, c: Complex64) -> CMat {
        CMat { n: self.n, a: self.a.iter().map(|x| x * c).collect() }
    }

    pub fn pow(&self, e: u64) -> CMat {
        let mut result = CMat::identity(self.n);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// Frobenius norm.
    pub fn fro(&self) -> f64 {
        self.a.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn det(&self) -> Complex64 {
        match self.n {
            1 => self.get(0, 0),
            2 => self.get(0, 0) * self.get(1, 1) - self.get(0, 1) * self.get(1, 0),
            3 => {
                let m = |i: usize, j: usize| self.get(i, j);
                m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
                    - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
                    + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
            }
            n => panic!("det unsupported at size {n}"),
        }
    }

    /// Adjugate inverse; `None` when the determinant is numerically zero
    /// relative to the matrix scale.
    pub fn inverse(&self) -> Option<CMat> {
        let d = self.det();
        let scale = self.fro().max(1e-300);
        if d.norm() <= 1e-14 * scale.powi(self.n as i32) {
            return None;
        }
        let n = self.n;
        let mut out = CMat::zeros(n);
        match n {
            1 => out.set(0, 0, Complex64::new(1.0, 0.0) / d),
            2 => {
                out.set(0, 0, self.get(1, 1) / d);
                out.set(0, 1, -self.get(0, 1) / d);
                out.set(1, 0, -self.get(1, 0) / d);
                out.set(1, 1, self.get(0, 0) / d);
            }
            3 => {
                for i in 0..3 {
                    for j in 0..3 {
                        let (r0, r1) = ((i + 1) % 3, (i + 2) % 3);
                        let (c0, c1) = ((j + 1) % 3, (j + 2) % 3);
                        // Cofactor expansion with cyclic index choices keeps
                        // the signs implicit.
                        let cof = self.get(r0, c0) * self.get(r1, c1)
                            - self.get(r0, c1) * self.get(r1, c0);
                        out.set(j, i, cof / d);
                    }
                }
            }
            _ => panic!("inverse unsupported at size {n}"),
        }
        Some(out)
    }
}

fn root_c(e: &RootExp) -> Complex64 {
    Complex64::from_polar(1.0, e.angle())
}

/// A representation ρ(x) = A, ρ(y) = B of Γ = ⟨x, y | x^n = y^m⟩ built
/// from an eigenvalue label: A diagonal, B = M·diag(ϵ_j)·M⁻¹.
#[derive(Debug, Clone)]
pub struct RepPair {
    pub a: CMat,
    pub b: CMat,
    pub label: EigenLabel,
    /// Columns are the eigenvectors of B in the eigenbasis of A.
    pub m_mat: CMat,
    pub m: u64,
    pub n: u64,
    /// ‖A^n − B^m‖ / (‖A‖^n + ‖B‖^m).
    pub relation_residual: f64,
    /// ‖A^n − ϖ·Id‖ at the same scale.
    pub varpi_residual: f64,
}

pub fn build_representation(
    label: &EigenLabel,
    p: &KnotParams,
    m_mat: CMat,
) -> Result<RepPair, RepError> {
    let r = label.rank();
    label.validate(r, p.m(), p.n())?;
    assert_eq!(m_mat.size(), r, "M size must match label rank");
    let det = m_mat.det();
    if det.norm() <= 1e-8 * (m_mat.fro() / (r as f64).sqrt()).powi(r as i32) {
        return Err(RepError::SingularM);
    }
    let a_vals: Vec<Complex64> = label.a_roots().iter().map(root_c).collect();
    let b_vals: Vec<Complex64> = label.b_roots().iter().map(root_c).collect();
    let a = CMat::diag(&a_vals);
    let minv = m_mat.inverse().ok_or(RepError::SingularM)?;
    let b = m_mat.mul(&CMat::diag(&b_vals)).mul(&minv);

    let (m, n) = (p.m(), p.n());
    let an = a.pow(n);
    let bm = b.pow(m);
    let scale = a.fro().powi(n as i32) + b.fro().powi(m as i32);
    let relation_residual = an.sub(&bm).fro() / scale;
    let varpi = root_c(&label.varpi(n));
    let varpi_residual = an.sub(&CMat::identity(r).scale(varpi)).fro() / scale;

    Ok(RepPair {
        a,
        b,
        label: label.clone(),
        m_mat,
        m,
        n,
        relation_residual,
        varpi_residual,
    })
}

/// Near-equalizes row and column magnitudes by repeatedly dividing each
/// row and column by its largest absolute entry. The result is (up to
/// tolerance) a fixed point of the T×_D T rescaling action, which makes
/// the zero-block test below insensitive to it.
fn balance(m: &CMat) -> CMat {
    let mut x = m.clone();
    let r = x.size();
    for _ in 0..50 {
        for i in 0..r {
            let d = (0..r).map(|j| x.get(i, j).norm()).fold(0.0, f64::max);
            if d > 0.0 {
                for j in 0..r {
                    let v = x.get(i, j) / d;
                    x.set(i, j, v);
                }
            }
        }
        for j in 0..r {
            let d = (0..r).map(|i| x.get(i, j).norm()).fold(0.0, f64::max);
            if d > 0.0 {
                for i in 0..r {
                    let v = x.get(i, j) / d;
                    x.set(i, j, v);
                }
            }
        }
    }
    x
}

/// Zero-minor criterion: the representation built on M is reducible iff
/// some p×p index sets {a₁..a_p}×({1..r}−{b₁..b_p}) cut a block of M
/// that vanishes identically. For r = 3 this scans all 18 sub-blocks.
pub fn is_irreducible(m: &CMat, tol: f64) -> bool {
    let r = m.size();
    assert!(r <= 16);
    let bal = balance(m);
    let full = (1u32 << r) - 1;
    for rows_mask in 1..full {
        let p = rows_mask.count_ones();
        for cols_mask in 1..full {
            if cols_mask.count_ones() != p {
                continue;
            }
            let comp = !cols_mask & full;
            let mut all_small = true;
            'scan: for i in 0..r {
                if rows_mask & (1 << i) == 0 {
                    continue;
                }
                for j in 0..r {
                    if comp & (1 << j) == 0 {
                        continue;
                    }
                    if bal.get(i, j).norm() > tol {
                        all_small = false;
                        break 'scan;
                    }
                }
            }
            if all_small {
                return false;
            }
        }
    }
    true
}

/// Fixed word list for the character map: enough length-≤4 words that the
/// trace coordinates comfortably exceed the largest stratum dimension.
/// Lowercase = generator, uppercase = inverse.
pub const CHAR_WORDS: [&str; 12] = [
    "x", "y", "xy", "xY", "xxy", "xyy", "xxY", "xxyy", "xyxy", "xYxy", "xyxY", "xYxY",
];

/// Traces of ρ(w) for each word w; conjugation-invariant up to float error.
pub fn character_vector(rep: &RepPair, words: &[&str]) -> Vec<Complex64> {
    let r = rep.a.size();
    let ai = rep.a.inverse().expect("A is diagonal unitary");
    let bi = rep.b.inverse().expect("B is conjugate to diagonal unitary");
    words
        .iter()
        .map(|w| {
            let mut acc = CMat::identity(r);
            for ch in w.chars() {
                let f = match ch {
                    'x' => &rep.a,
                    'X' => &ai,
                    'y' => &rep.b,
                    'Y' => &bi,
                    _ => panic!("word alphabet is x, X, y, Y"),
                };
                acc = acc.mul(f);
            }
            acc.trace()
        })
        .collect()
}

/// Tunables for the sampled numerics; all config-overridable.
#[derive(Debug, Clone)]
pub struct NumericConfig {
    pub samples: u32,
    pub seed: u64,
    /// Central-difference step, applied to real and imaginary parts
    /// separately.
    pub fd_step: f64,
    /// Singular values below this fraction of the largest are rank noise.
    pub rank_rel_tol: f64,
}

impl Default for NumericConfig {
    fn default() -> Self {
        NumericConfig { samples: 5, seed: DEFAULT_SEED, fd_step: 1e-5, rank_rel_tol: 1e-6 }
    }
}

/// Entries uniform on the annulus 0.5 ≤ |z| ≤ 2 (area-uniform radius).
pub fn random_annulus_matrix(rng: &mut ChaCha8Rng, r: usize) -> CMat {
    let mut m = CMat::zeros(r);
    for i in 0..r {
        for j in 0..r {
            let radius = rng.gen_range(0.25f64..4.0).sqrt();
            let angle = rng.gen_range(0.0..std::f64::consts::TAU);
            m.set(i, j, Complex64::from_polar(radius, angle));
        }
    }
    m
}

/// Estimates the complex dimension of the stratum labelled by `label` as
/// half the real rank of the Jacobian of the character map with respect
/// to the entries of M, medianed over random samples. The T×_D T scaling
/// directions (and every other trace-preserving motion) fall into the
/// kernel automatically, so no explicit quotient is taken.
pub fn component_dimension_estimate(
    label: &EigenLabel,
    p: &KnotParams,
    cfg: &NumericConfig,
) -> Result<u32, RepError> {
    let r = label.rank();
    let mut ranks = Vec::new();
    for s in 0..cfg.samples.max(1) {
        // Deterministic per-sample seed; samples are independent.
        let mut rng = ChaCha8Rng::seed_from_u64(
            cfg.seed.wrapping_add((s as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)),
        );
        for _attempt in 0..10 {
            let m_mat = random_annulus_matrix(&mut rng, r);
            match jacobian_rank(label, p, &m_mat, cfg) {
                Ok(rank) => {
                    ranks.push(rank);
                    break;
                }
                Err(_) => continue, // non-generic sample; redraw
            }
        }
    }
    if ranks.is_empty() {
        return Err(RepError::DegenerateSample);
    }
    ranks.sort_unstable();
    let median = ranks[ranks.len() / 2];
    Ok((median / 2) as u32)
}

fn jacobian_rank(
    label: &EigenLabel,
    p: &KnotParams,
    m0: &CMat,
    cfg: &NumericConfig,
) -> Result<usize, RepError> {
    build_representation(label, p, m0.clone())?;
    let r = label.rank();
    let h = cfg.fd_step;
    let nparams = 2 * r * r;
    let chi = |mm: &CMat| -> Result<Vec<Complex64>, RepError> {
        let rep = build_representation(label, p, mm.clone())?;
        Ok(character_vector(&rep, &CHAR_WORDS))
    };
    let mut cols: Vec<Vec<f64>> = Vec::with_capacity(nparams);
    for idx in 0..nparams {
        let entry = idx / 2;
        let (i, j) = (entry / r, entry % r);
        let delta = if idx % 2 == 0 {
            Complex64::new(h, 0.0)
        } else {
            Complex64::new(0.0, h)
        };
        let mut mp = m0.clone();
        mp.set(i, j, m0.get(i, j) + delta);
        let mut mm = m0.clone();
        mm.set(i, j, m0.get(i, j) - delta);
        let cp = chi(&mp)?;
        let cm = chi(&mm)?;
        let mut col = Vec::with_capacity(2 * cp.len());
        for (a, b) in cp.iter().zip(&cm) {
            let d = (a - b) / (2.0 * h);
            col.push(d.re);
            col.push(d.im);
        }
        cols.push(col);
    }
    // Rank via the Gram matrix JᵀJ: σ > tol·σ_max ⇔ λ > tol²·λ_max.
    let k = nparams;
    let mut gram = vec![vec![0.0f64; k]; k];
    for a in 0..k {
        for b in a..k {
            let dot: f64 = cols[a].iter().zip(&cols[b]).map(|(x, y)| x * y).sum();
            gram[a][b] = dot;
            gram[b][a] = dot;
        }
    }
    let eigs = jacobi_eigenvalues(gram);
    let lmax = eigs.iter().fold(0.0f64, |acc, &l| acc.max(l));
    if lmax <= 0.0 {
        return Ok(0);
    }
    let cut = cfg.rank_rel_tol * cfg.rank_rel_tol * lmax;
    Ok(eigs.iter().filter(|&&l| l > cut).count())
}

/// Cyclic Jacobi sweeps on a symmetric matrix; returns the eigenvalues.
fn jacobi_eigenvalues(mut a: Vec<Vec<f64>>) -> Vec<f64> {
    let n = a.len();
    for _sweep in 0..100 {
        let mut off = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off += a[p][q] * a[p][q];
            }
        }
        if off < 1e-28 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    (0..n).map(|i| a[i][i]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use toruschar_core::oracle;

    fn p(m: u64, n: u64) -> KnotParams {
        KnotParams::new(m, n).unwrap()
    }

    fn unique_tau_34() -> EigenLabel {
        let f = oracle::enumerate_f(3, &p(3, 4), oracle::DEFAULT_BUDGET).unwrap();
        assert_eq!(f.labels.len(), 1);
        f.labels[0].clone()
    }

    fn random_unit_matrix(seed: u64, r: usize) -> CMat {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut m = CMat::zeros(r);
        for i in 0..r {
            for j in 0..r {
                let angle = rng.gen_range(0.0..std::f64::consts::TAU);
                m.set(i, j, Complex64::from_polar(1.0, angle));
            }
        }
        m
    }

    #[test]
    fn relation_holds_for_tau_rep() {
        let label = unique_tau_34();
        let rep =
            build_representation(&label, &p(3, 4), random_unit_matrix(DEFAULT_SEED, 3)).unwrap();
        assert!(rep.relation_residual < 1e-9, "residual {}", rep.relation_residual);
        assert!(rep.varpi_residual < 1e-9, "varpi residual {}", rep.varpi_residual);
    }

    #[test]
    fn identity_m_is_reducible_and_generic_m_is_not() {
        assert!(!is_irreducible(&CMat::identity(3), 1e-6));
        for seed in 0..8u64 {
            assert!(is_irreducible(&random_unit_matrix(1000 + seed, 3), 1e-6));
        }
    }

    #[test]
    fn zero_block_detected() {
        let mut m = random_unit_matrix(7, 3);
        // Two zeroes in a row: the 1×2 block {0}×{1,2} vanishes.
        m.set(0, 1, Complex64::new(0.0, 0.0));
        m.set(0, 2, Complex64::new(0.0, 0.0));
        assert!(!is_irreducible(&m, 1e-6));
    }

    #[test]
    fn irreducibility_is_rescaling_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let base = random_unit_matrix(3, 3);
        for _ in 0..20 {
            let mut m = base.clone();
            for i in 0..3 {
                let row = 10f64.powf(rng.gen_range(-2.0..2.0));
                let col = 10f64.powf(rng.gen_range(-2.0..2.0));
                for j in 0..3 {
                    let v = m.get(i, j) * row;
                    m.set(i, j, v);
                    let w = m.get(j, i) * col;
                    m.set(j, i, w);
                }
            }
            assert!(is_irreducible(&m, 1e-6));
        }
    }

    #[test]
    fn characters_are_conjugation_invariant() {
        let label = unique_tau_34();
        let rep =
            build_representation(&label, &p(3, 4), random_unit_matrix(11, 3)).unwrap();
        let chi = character_vector(&rep, &CHAR_WORDS);
        // Conjugate both matrices by a random P and re-trace by hand.
        let pm = random_annulus_matrix(&mut ChaCha8Rng::seed_from_u64(12), 3);
        let pinv = pm.inverse().unwrap();
        let conj = RepPair {
            a: pm.mul(&rep.a).mul(&pinv),
            b: pm.mul(&rep.b).mul(&pinv),
            ..rep.clone()
        };
        let chi2 = character_vector(&conj, &CHAR_WORDS);
        for (u, v) in chi.iter().zip(&chi2) {
            assert!((u - v).norm() < 1e-8, "{u} vs {v}");
        }
    }

    #[test]
    fn trace_of_x_is_eigenvalue_sum() {
        let label = unique_tau_34();
        let rep =
            build_representation(&label, &p(3, 4), random_unit_matrix(21, 3)).unwrap();
        let expect: Complex64 = label.a_roots().iter().map(root_c).sum();
        let chi = character_vector(&rep, &["x"]);
        assert!((chi[0] - expect).norm() < 1e-12);
    }

    #[test]
    fn dimension_estimates_match_census() {
        let cfg = NumericConfig { samples: 3, ..NumericConfig::default() };

        let tau = unique_tau_34();
        assert_eq!(component_dimension_estimate(&tau, &p(3, 4), &cfg).unwrap(), 4);

        let g = oracle::enumerate_g(&p(2, 3), oracle::DEFAULT_BUDGET).unwrap();
        assert_eq!(g.labels.len(), 1);
        assert_eq!(component_dimension_estimate(&g.labels[0], &p(2, 3), &cfg).unwrap(), 2);

        let f2 = oracle::enumerate_f(2, &p(2, 3), oracle::DEFAULT_BUDGET).unwrap();
        assert_eq!(f2.labels.len(), 1);
        assert_eq!(component_dimension_estimate(&f2.labels[0], &p(2, 3), &cfg).unwrap(), 1);
    }

    #[test]
    fn singular_m_rejected() {
        let label = unique_tau_34();
        let ones = CMat::from_rows(&vec![vec![Complex64::new(1.0, 0.0); 3]; 3]);
        assert!(matches!(
            build_representation(&label, &p(3, 4), ones),
            Err(RepError::SingularM)
        ));
    }
}
