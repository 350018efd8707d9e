//! Integer matrices, Smith normal form, and the constructive change of
//! coordinates exhibiting (ℂ*)^k/μ_r as (ℂ*)^k for a weighted μ_r action.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Dense integer matrix with exact `BigInt` entries.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0);
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(k: usize) -> Self {
        let mut m = IntMatrix::zeros(k, k);
        for i in 0..k {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        assert!(!rows.is_empty() && !rows[0].is_empty());
        let cols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == cols));
        let data = rows
            .iter()
            .flat_map(|r| r.iter().cloned().map(Into::into))
            .collect();
        IntMatrix { rows: rows.len(), cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * other.get(k, j);
                    let cur = out.get(i, j) + add;
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += q · row[src].
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let add = self.get(src, j) * q;
            let cur = self.get(dst, j) + add;
            self.set(dst, j, cur);
        }
    }

    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let add = self.get(i, src) * q;
            let cur = self.get(i, dst) + add;
            self.set(i, dst, cur);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j).clone();
            self.set(i, j, v);
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = -self.get(i, j).clone();
            self.set(i, j, v);
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination; square only.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                    let (q, r) = num.div_rem(&prev);
                    debug_assert!(r.is_zero());
                    a[i][j] = q;
                }
            }
            for i in k + 1..n {
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        sign * a[n - 1][n - 1].clone()
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.det().abs().is_one()
    }

    /// Exact inverse of a matrix with det = ±1, via the adjugate.
    pub fn inverse_unimodular(&self) -> Option<IntMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let d = self.det();
        if !d.abs().is_one() {
            return None;
        }
        let mut inv = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                // Cofactor C_{ji} (transposed for the adjugate).
                let minor = self.minor(j, i);
                let mut c = minor.det();
                if (i + j) % 2 == 1 {
                    c = -c;
                }
                if d.is_negative() {
                    c = -c;
                }
                inv.set(i, j, c);
            }
        }
        Some(inv)
    }

    fn minor(&self, drop_row: usize, drop_col: usize) -> IntMatrix {
        let n = self.rows;
        if n == 1 {
            // Empty minor: determinant 1 by convention.
            return IntMatrix::identity(1);
        }
        let mut out = IntMatrix::zeros(n - 1, n - 1);
        let mut r = 0;
        for i in 0..n {
            if i == drop_row {
                continue;
            }
            let mut c = 0;
            for j in 0..n {
                if j == drop_col {
                    continue;
                }
                out.set(r, c, self.get(i, j).clone());
                c += 1;
            }
            r += 1;
        }
        out
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// U·M·V = D with D diagonal, nonnegative, divisibility chain, U and V
/// unimodular.
#[derive(Debug, Clone)]
pub struct Snf {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let mut d = m.clone();
    let mut u = IntMatrix::identity(m.rows());
    let mut v = IntMatrix::identity(m.cols());
    let steps = d.rows().min(d.cols());
    for t in 0..steps {
        loop {
            // Pivot: smallest nonzero |entry| in the trailing submatrix.
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..d.rows() {
                for j in t..d.cols() {
                    if d.get(i, j).is_zero() {
                        continue;
                    }
                    match pivot {
                        Some((pi, pj)) if d.get(pi, pj).abs() <= d.get(i, j).abs() => {}
                        _ => pivot = Some((i, j)),
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                break; // trailing submatrix is zero
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..d.rows() {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let q = -d.get(i, t).div_floor(d.get(t, t));
                d.add_row(i, t, &q);
                u.add_row(i, t, &q);
                if !d.get(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..d.cols() {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let q = -d.get(t, j).div_floor(d.get(t, t));
                d.add_col(j, t, &q);
                v.add_col(j, t, &q);
                if !d.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // Pivot must divide the rest of the submatrix; if not, fold the
            // offending row in and re-reduce.
            let offender = (t + 1..d.rows()).find(|&i| {
                (t + 1..d.cols()).any(|j| !d.get(i, j).mod_floor(d.get(t, t)).is_zero())
            });
            if let Some(i) = offender {
                let one = BigInt::one();
                d.add_row(t, i, &one);
                u.add_row(t, i, &one);
                continue;
            }
            break;
        }
    }
    // Nonnegative diagonal.
    for t in 0..steps {
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    Snf { u, d, v }
}

/// Output of `quotient_basis`: a unimodular change of coordinates plus the
/// effective action it was computed for.
#[derive(Debug, Clone)]
pub struct QuotientBasis {
    pub matrix: IntMatrix,
    /// Order of the effective action μ_{r'}, r' = r/gcd(r, weights).
    pub effective_r: u64,
    /// Weights reduced by the same gcd, taken mod r'.
    pub effective_weights: Vec<i64>,
    /// True when the raw action was not effective (gcd > 1).
    pub reduced: bool,
    /// True when the effective action is trivial (r' = 1): `matrix` is the
    /// identity and the mod-1 conditions hold vacuously.
    pub trivial: bool,
    /// k = 1 only: the verification row demands b·a ≡ 1 (mod r'), which
    /// forces re-choosing the generator ξ ↦ ξ^a of μ_{r'}; recorded here.
    pub generator_renormalized: bool,
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// The constructive content of the quotient proposition: for μ_r acting on
/// (ℂ*)^k with weights a, produce M (det = +1) whose first k−1 rows pair
/// to 0 with a mod r and whose last row pairs to 1, so the monomial change
/// of coordinates u_j = Π t_i^{M_{ji}} turns the action into
/// (u₁,…,u_{k−1}, ξ·u_k).
pub fn quotient_basis(weights: &[i64], r: u64) -> Result<QuotientBasis> {
    assert!(!weights.is_empty());
    assert!(r >= 1);
    let k = weights.len();
    // Effectivity reduction: μ_r acts through μ_{r'} with scaled weights.
    let g = weights
        .iter()
        .fold(r, |acc, &w| gcd_u64(acc, w.unsigned_abs() % r.max(1)));
    let (rp, reduced) = if g > 1 { (r / g, true) } else { (r, false) };
    // Divide the weight *residues* by g (raw weights need not be divisible).
    let wp: Vec<i64> = weights
        .iter()
        .map(|&w| {
            let res = w.rem_euclid(r as i64) as u64;
            debug_assert!(res % g == 0);
            ((res / g) % rp) as i64
        })
        .collect();
    if rp == 1 {
        return Ok(QuotientBasis {
            matrix: IntMatrix::identity(k),
            effective_r: 1,
            effective_weights: vec![0; k],
            reduced,
            trivial: true,
            generator_renormalized: false,
        });
    }

    if k == 1 {
        // gcd(a₁, r') = 1; take the generator ξ^{a₁} so the single weight
        // reads as 1. M = [1] then satisfies both conditions.
        return Ok(QuotientBasis {
            matrix: IntMatrix::identity(1),
            effective_r: rp,
            effective_weights: vec![1],
            reduced,
            trivial: false,
            generator_renormalized: wp[0] != 1,
        });
    }

    // Lift wp to a primitive integer vector v ≡ wp (mod r').
    let mut v: Vec<i64> = wp.clone();
    let content = |v: &[i64]| v.iter().fold(0u64, |acc, &x| gcd_u64(acc, x.unsigned_abs()));
    if content(&v) != 1 {
        if v[1..].iter().all(|&x| x == 0) {
            // gcd(v₀, r') = 1 already; make the vector primitive via a
            // second coordinate.
            v[1] += rp as i64;
        }
        let mut j = 0i64;
        while content(&v) != 1 {
            j += 1;
            v[0] = wp[0] + j * rp as i64;
            if j > 1_000_000 {
                return Err(Error::Internal("primitive lift search did not terminate"));
            }
        }
    }

    // Build unimodular U with U·v = e₁ by 2×2 gcd transforms.
    let mut u = IntMatrix::identity(k);
    let mut vv: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
    for i in 1..k {
        if vv[i].is_zero() {
            continue;
        }
        let e = vv[0].extended_gcd(&vv[i]);
        // x·v0 + y·vi = g; rows (0, i) get the det-1 transform
        // [x y; -vi/g, v0/g].
        let (x, y, gg) = (e.x, e.y, e.gcd);
        let v0g = &vv[0] / &gg;
        let vig = &vv[i] / &gg;
        let mut new_u = u.clone();
        for j in 0..k {
            let top = &x * u.get(0, j) + &y * u.get(i, j);
            let bot = -&vig * u.get(0, j) + &v0g * u.get(i, j);
            new_u.set(0, j, top);
            new_u.set(i, j, bot);
        }
        u = new_u;
        vv[0] = gg;
        vv[i] = BigInt::zero();
    }
    if vv[0].is_negative() {
        // gcd convention should keep it positive, but normalize anyway by
        // flipping row 0 and some other row to keep det = 1.
        u.negate_row(0);
        u.negate_row(1);
        vv[0] = -vv[0].clone();
    }
    debug_assert!(vv[0].is_one());

    // V₀ = U⁻¹ has v as first column; rotate it to the last column and fix
    // the determinant sign.
    let v0 = u
        .inverse_unimodular()
        .ok_or(Error::Internal("U not unimodular"))?;
    let mut vmat = IntMatrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            // Cyclic shift: old column 0 → new column k−1, old j → j−1.
            let src = (j + 1) % k;
            vmat.set(i, j, v0.get(i, src).clone());
        }
    }
    if vmat.det() == BigInt::from(-1) {
        // Negate a non-last column (safe: kernel conditions are mod-r'
        // invariant under sign flip of a kernel row of M... the flip
        // happens on V, i.e. on a column of V = a row of M being negated,
        // which preserves the 0 mod r' conditions of rows 1..k−1).
        vmat.negate_col(0);
    }
    let m = vmat
        .inverse_unimodular()
        .ok_or(Error::Internal("V not unimodular"))?;

    if !verify_quotient_basis(&m, &wp, rp) {
        return Err(Error::Internal("constructed quotient basis failed verification"));
    }
    Ok(QuotientBasis {
        matrix: m,
        effective_r: rp,
        effective_weights: wp,
        reduced,
        trivial: false,
        generator_renormalized: false,
    })
}

/// det(M) = 1, rows 1..k−1 pair to 0 mod r against the weights, last row
/// pairs to 1 mod r.
pub fn verify_quotient_basis(m: &IntMatrix, weights: &[i64], r: u64) -> bool {
    let k = weights.len();
    if m.rows() != k || m.cols() != k {
        return false;
    }
    if m.det() != BigInt::one() {
        return false;
    }
    let rb = BigInt::from(r);
    for i in 0..k {
        let dot: BigInt = (0..k)
            .map(|j| m.get(i, j) * BigInt::from(weights[j]))
            .sum();
        let want = if i + 1 == k { BigInt::one() } else { BigInt::zero() };
        if (dot - want).mod_floor(&rb) != BigInt::zero() {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_snf(m: &IntMatrix) {
        let snf = smith_normal_form(m);
        assert!(snf.u.is_unimodular());
        assert!(snf.v.is_unimodular());
        assert_eq!(snf.u.mul(m).mul(&snf.v), snf.d);
        let steps = m.rows().min(m.cols());
        for i in 0..steps {
            for j in 0..steps {
                if i != j {
                    assert!(snf.d.get(i, j).is_zero());
                }
            }
            assert!(!snf.d.get(i, i).is_negative());
        }
        for i in 1..steps {
            let prev = snf.d.get(i - 1, i - 1);
            let cur = snf.d.get(i, i);
            if prev.is_zero() {
                assert!(cur.is_zero());
            } else {
                assert!(cur.mod_floor(prev).is_zero());
            }
        }
    }

    #[test]
    fn snf_identity_and_zero() {
        check_snf(&IntMatrix::identity(3));
        let z = IntMatrix::from_rows(&[vec![0]]);
        let snf = smith_normal_form(&z);
        assert!(snf.d.get(0, 0).is_zero());
    }

    #[test]
    fn snf_diag_2_3() {
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.d.get(0, 0), &BigInt::from(1));
        assert_eq!(snf.d.get(1, 1), &BigInt::from(6));
        check_snf(&m);
    }

    #[test]
    fn snf_rectangular() {
        let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12]]);
        check_snf(&m);
    }

    #[test]
    fn det_and_inverse() {
        let m = IntMatrix::from_rows(&[vec![2, 1], vec![7, 4]]);
        assert_eq!(m.det(), BigInt::from(1));
        let inv = m.inverse_unimodular().unwrap();
        assert_eq!(m.mul(&inv), IntMatrix::identity(2));
    }

    #[test]
    fn quotient_basis_examples() {
        let qb = quotient_basis(&[1], 3).unwrap();
        assert_eq!(qb.matrix, IntMatrix::identity(1));
        assert!(!qb.trivial);

        let qb = quotient_basis(&[1, 1], 2).unwrap();
        assert!(verify_quotient_basis(&qb.matrix, &[1, 1], 2));

        let qb = quotient_basis(&[1, 2, 2], 3).unwrap();
        assert!(verify_quotient_basis(&qb.matrix, &[1, 2, 2], 3));
    }

    #[test]
    fn quotient_basis_tr_weights() {
        // Weights (1, 2, …, r−1) for r ∈ {2, 3}: the TR-quotient setup.
        for r in [2u64, 3] {
            let weights: Vec<i64> = (1..r as i64).collect();
            let qb = quotient_basis(&weights, r).unwrap();
            if weights.len() > 1 {
                assert!(verify_quotient_basis(&qb.matrix, &qb.effective_weights, r));
            }
        }
    }

    #[test]
    fn quotient_basis_non_effective() {
        let qb = quotient_basis(&[2, 4], 6).unwrap();
        assert!(qb.reduced);
        assert_eq!(qb.effective_r, 3);
        assert!(verify_quotient_basis(&qb.matrix, &qb.effective_weights, 3));

        let qb = quotient_basis(&[3, 6], 3).unwrap();
        assert!(qb.trivial);
        assert_eq!(qb.effective_r, 1);
    }

    #[test]
    fn verify_negative_cases() {
        assert!(!verify_quotient_basis(&IntMatrix::identity(2), &[1, 1], 2));
        let qb = quotient_basis(&[1, 1], 2).unwrap();
        let mut bad = qb.matrix.clone();
        bad.negate_row(0);
        assert!(!verify_quotient_basis(&bad, &[1, 1], 2));
    }
}
