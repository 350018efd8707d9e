//! Closed-form K-theory classes of the character varieties, the named
//! constants P0…P6, and recovery of (m, n) from the rank-3 SL class.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::kring::KClass;
use crate::params::KnotParams;
use crate::{Error, Result};

/// P0 = L².
pub fn p0() -> KClass {
    KClass::from_coeffs([0, 0, 1])
}

/// P1 = L⁴+4L³−3L²−15L+12, the class of M/(T×_D T).
pub fn p1() -> KClass {
    KClass::from_coeffs([12, -15, -3, 4, 1])
}

/// P2 = L⁴+2L³−3L²−L+4, the class of M/(T×_D T ⋊ μ₃).
pub fn p2() -> KClass {
    KClass::from_coeffs([4, -1, -3, 2, 1])
}

/// P3 = L²−3L+3, the class of (ℂ*)²−{x+y=1}.
pub fn p3() -> KClass {
    KClass::from_coeffs([3, -3, 1])
}

/// P4 = L²−L+1, the class of ((ℂ*)²−{x+y=1})/μ₃.
pub fn p4() -> KClass {
    KClass::from_coeffs([1, -1, 1])
}

/// P5 = L²−3L+2 = (L−1)(L−2), the class of (ℂ−{0,1})×ℂ*.
pub fn p5() -> KClass {
    KClass::from_coeffs([2, -3, 1])
}

/// P6 = L²−2L+1 = (L−1)², the class of {(u,v): v ≠ 0, v ≠ u²}.
pub fn p6() -> KClass {
    KClass::from_coeffs([1, -2, 1])
}

/// The class of the maximal-dimension quotient M/(T×_D T).
pub fn class_m_quotient() -> KClass {
    p1()
}

/// The class of its μ₃ quotient M/(T×_D T ⋊ μ₃).
pub fn class_m_quotient_mu3() -> KClass {
    p2()
}

/// Exact division of a nonnegative count; a remainder is a transcription
/// bug in a formula, never a data error, so it panics.
fn exact_div(num: i128, den: i128) -> i128 {
    debug_assert!(den > 0);
    assert!(num % den == 0, "non-exact coefficient division {num}/{den}");
    num / den
}

/// `count/den · class`, with the division checked exact.
fn term(count: i128, den: i128, class: KClass) -> KClass {
    let c = exact_div(count, den);
    class.scale(&BigInt::from(c))
}

/// Closed-form class of the SL(r,ℂ)-character variety, r ∈ {2, 3}.
pub fn kclass_sl(r: u32, p: &KnotParams) -> Result<KClass> {
    let (m, n) = (p.m() as i128, p.n() as i128);
    match r {
        2 => {
            // [X₂] = L + ½(n−1)(m−1)(L−2).
            let l = KClass::lefschetz();
            Ok(&l + &term((n - 1) * (m - 1), 2, KClass::from_coeffs([-2, 1])))
        }
        3 => {
            // Two parity cases; after normalization n is odd, so the "n even"
            // case of the statement appears here as m even with roles fixed.
            let dim4 = term((n - 1) * (n - 2) * (m - 1) * (m - 2), 12, p1());
            let dim2 = term((n - 1) * (m - 1) * (n + m - 4), 2, p3());
            let base = &(&dim4 + &p0()) + &dim2;
            if m % 2 == 1 {
                Ok(&base + &term((n - 1) * (m - 1), 4, p5()))
            } else {
                let pr1 = term((n - 1) * (m - 2), 4, p5());
                let pr2 = term(n - 1, 2, p6());
                Ok(&(&base + &pr1) + &pr2)
            }
        }
        _ => Err(Error::UnsupportedRank(r)),
    }
}

/// Closed-form class of the PGL(r,ℂ)-character variety, r ∈ {2, 3}.
///
/// For r = 3 this is the five-case mod-6 table; exactly one case applies to
/// any coprime pair, dispatched on the residues of the normalized pair with
/// the roles oriented as in the table (its "n" is the even entry in the
/// even cases, the multiple of 3 in the 3ℤ cases).
pub fn kclass_pgl(r: u32, p: &KnotParams) -> Result<KClass> {
    let (m, n) = (p.m() as i128, p.n() as i128);
    match r {
        2 => {
            let l = KClass::lefschetz();
            let lm2 = KClass::from_coeffs([-2, 1]);
            let lm1 = KClass::from_coeffs([-1, 1]);
            if m % 2 == 1 {
                // [X̄₂] = L + ¼(n−1)(m−1)(L−2).
                Ok(&l + &term((n - 1) * (m - 1), 4, lm2))
            } else {
                // Even case (normalized to even m): ¼(n−1)(m−2)(L−2) + ½(n−1)(L−1).
                Ok(&(&l + &term((n - 1) * (m - 2), 4, lm2)) + &term(n - 1, 2, lm1))
            }
        }
        3 => kclass_pgl3(m, n),
        _ => Err(Error::UnsupportedRank(r)),
    }
}

/// The five mod-6 cases, written with the table's own role convention:
/// `(nc, mc)` are the corollary's (n, m).
fn kclass_pgl3(m: i128, n: i128) -> Result<KClass> {
    // Case bodies. The dim-2 coefficient of the 3ℤ cases is
    // (mc−1)(mc·nc+nc²−5nc−mc+2)/6; the source table prints the trailing
    // constant as −2, which is not even integral (try (m,n) = (5,3)), while
    // the component count behind it has +2, so +2 it is.
    let case_odd_odd = |nc: i128, mc: i128| {
        &(&(&p0() + &term((mc - 1) * (mc - 2) * (nc - 1) * (nc - 2), 36, p1()))
            + &term((nc - 1) * (mc - 1) * (nc + mc - 4), 6, p3()))
            + &term((nc - 1) * (mc - 1), 4, p5())
    };
    let case_even = |nc: i128, mc: i128| {
        &(&(&(&p0() + &term((mc - 1) * (mc - 2) * (nc - 1) * (nc - 2), 36, p1()))
            + &term((nc - 1) * (mc - 1) * (nc + mc - 4), 6, p3()))
            + &term((nc - 2) * (mc - 1), 4, p5()))
            + &term(mc - 1, 2, p6())
    };
    let case_three = |nc: i128, mc: i128| {
        &(&(&(&(&p0() + &term((mc - 1) * (mc - 2) * nc * (nc - 3), 36, p1()))
            + &term((mc - 1) * (mc - 2), 6, p2()))
            + &term((mc - 1) * (mc * nc + nc * nc - 5 * nc - mc + 2), 6, p3()))
            + &p4().scale(&BigInt::from(mc - 1)))
            + &term((nc - 1) * (mc - 1), 4, p5())
    };
    let case_zero = |nc: i128, mc: i128| {
        &(&(&(&(&(&p0() + &term((mc - 1) * (mc - 2) * nc * (nc - 3), 36, p1()))
            + &term((mc - 1) * (mc - 2), 6, p2()))
            + &term((mc - 1) * (mc * nc + nc * nc - 5 * nc - mc + 2), 6, p3()))
            + &p4().scale(&BigInt::from(mc - 1)))
            + &term((nc - 2) * (mc - 1), 4, p5()))
            + &term(mc - 1, 2, p6())
    };
    let case_even_three = |nc: i128, mc: i128| {
        &(&(&(&(&(&p0() + &term(mc * (mc - 3) * (nc - 1) * (nc - 2), 36, p1()))
            + &term((nc - 1) * (nc - 2), 6, p2()))
            + &term((nc - 1) * (mc * nc + mc * mc - 5 * mc - nc + 2), 6, p3()))
            + &p4().scale(&BigInt::from(nc - 1)))
            + &term((nc - 2) * (mc - 1), 4, p5()))
            + &term(mc - 1, 2, p6())
    };

    // Dispatch on the normalized pair (n odd). Coprimality rules out the
    // remaining residue combinations.
    let (n6, m6) = (n % 6, m % 6);
    match (n6, m6) {
        (1 | 5, 1 | 5) => Ok(case_odd_odd(n, m)),
        (1 | 5, 2 | 4) => Ok(case_even(m, n)),
        (1 | 5, 3) => Ok(case_three(m, n)),
        (1 | 5, 0) => Ok(case_zero(m, n)),
        (3, 1 | 5) => Ok(case_three(n, m)),
        (3, 2 | 4) => Ok(case_even_three(m, n)),
        _ => Err(Error::Internal("mod-6 case dispatch fell through for a coprime pair")),
    }
}

/// [X̃_r] = (L−1)·[X̄_r].
pub fn kclass_gl(r: u32, p: &KnotParams) -> Result<KClass> {
    let lm1 = KClass::from_coeffs([-1, 1]);
    Ok(&lm1 * &kclass_pgl(r, p)?)
}

/// Recovers the normalized (m, n) (sorted ascending) from a rank-3 SL
/// class, following the recovery argument: the L⁴ coefficient gives
/// (n−1)(n−2)(m−1)(m−2)/12; after subtracting that multiple of P1, the
/// values at L = 0 and L = 1 give p and q with 2p − 6q + 6 = (n−1)(m−1),
/// and p pins down n + m. The reconstructed pair is re-verified by
/// recomputing the class, so corrupted input cannot slip through.
pub fn recover_mn(c: &KClass) -> Result<(u64, u64)> {
    let a4 = c.coeff(4);
    if a4.is_negative() {
        return Err(Error::NoValidFactorization);
    }
    let rem = c - &p1().scale(&a4);
    let p_val = rem.eval(&BigInt::zero()); // ½(n−1)(m−1)(3n+3m−11)
    let q_val = rem.eval(&BigInt::from(1)); // 1 + ½(n−1)(m−1)(n+m−4)
    let e1: BigInt = BigInt::from(2) * &p_val - BigInt::from(6) * &q_val + 6; // (n−1)(m−1)
    if !e1.is_positive() {
        return Err(Error::NoValidFactorization);
    }
    // p = ½ e1 (3(n+m) − 11) → n+m = (2p/e1 + 11)/3.
    let (quot, rem2) = (BigInt::from(2) * &p_val).div_rem(&e1);
    if !rem2.is_zero() {
        return Err(Error::NonIntegralSolution("2p/(n-1)(m-1)"));
    }
    let (s, rem3) = (quot + BigInt::from(11)).div_rem(&BigInt::from(3));
    if !rem3.is_zero() {
        return Err(Error::NonIntegralSolution("n+m"));
    }
    // mn = (n−1)(m−1) + (n+m) − 1.
    let prod = &e1 + &s - 1;
    // m, n are the roots of x² − s·x + prod.
    let disc: BigInt = &s * &s - BigInt::from(4) * &prod;
    if disc.is_negative() {
        return Err(Error::NoValidFactorization);
    }
    let root = disc.sqrt();
    if &root * &root != disc {
        return Err(Error::NoValidFactorization);
    }
    let two = BigInt::from(2);
    let (lo, r_lo) = (&s - &root).div_rem(&two);
    if !r_lo.is_zero() {
        return Err(Error::NoValidFactorization);
    }
    let hi = (&s + &root) / &two;
    let (m_rec, n_rec) = match (lo.to_u64(), hi.to_u64()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::NoValidFactorization),
    };
    let params = KnotParams::new(m_rec, n_rec).map_err(|_| Error::NoValidFactorization)?;
    let back = kclass_sl(3, &params)?;
    if &back != c {
        return Err(Error::NoValidFactorization);
    }
    Ok(params.sorted_pair())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(m: u64, n: u64) -> KnotParams {
        KnotParams::new(m, n).unwrap()
    }

    #[test]
    fn constants_match_list() {
        assert_eq!(alloc::format!("{}", p1()), "L^4+4L^3-3L^2-15L+12");
        assert_eq!(alloc::format!("{}", p2()), "L^4+2L^3-3L^2-L+4");
        assert_eq!(alloc::format!("{}", p3()), "L^2-3L+3");
        assert_eq!(alloc::format!("{}", p4()), "L^2-L+1");
        assert_eq!(alloc::format!("{}", p5()), "L^2-3L+2");
        assert_eq!(alloc::format!("{}", p6()), "L^2-2L+1");
        // Regression constant: value of the P1 class at L = 1.
        assert_eq!(class_m_quotient().eval_i64(1), BigInt::from(-1));
    }

    #[test]
    fn sl2_trefoil() {
        assert_eq!(
            kclass_sl(2, &p(2, 3)).unwrap(),
            KClass::from_coeffs([-2, 2])
        );
    }

    #[test]
    fn sl3_trefoil() {
        // (m,n) = (3,2) and (2,3) agree and give 3L²−5L+4.
        let c = kclass_sl(3, &p(3, 2)).unwrap();
        assert_eq!(c, KClass::from_coeffs([4, -5, 3]));
        assert_eq!(c, kclass_sl(3, &p(2, 3)).unwrap());
    }

    #[test]
    fn pgl2_values() {
        assert_eq!(kclass_pgl(2, &p(3, 5)).unwrap(), KClass::from_coeffs([-4, 3]));
        assert_eq!(kclass_pgl(2, &p(2, 3)).unwrap(), KClass::from_coeffs([-1, 2]));
    }

    #[test]
    fn gl2_trefoil() {
        // (L−1)(2L−1) = 2L²−3L+1.
        assert_eq!(kclass_gl(2, &p(2, 3)).unwrap(), KClass::from_coeffs([1, -3, 2]));
    }

    #[test]
    fn pgl3_case1_5_7() {
        let c = kclass_pgl(3, &p(5, 7)).unwrap();
        let expect = &(&(&p0() + &p1().scale_i64(10)) + &p3().scale_i64(32)) + &p5().scale_i64(6);
        assert_eq!(c, expect);
    }

    #[test]
    fn pgl3_all_cases_integral() {
        // Every coprime pair in the grid hits exactly one case and all
        // divisions are exact (no panic).
        for m in 2..=13u64 {
            for n in (m + 1)..=13u64 {
                if num_integer::gcd(m, n) != 1 {
                    continue;
                }
                kclass_pgl(3, &p(m, n)).unwrap();
            }
        }
    }

    #[test]
    fn gl_is_lminus1_times_pgl() {
        for (m, n) in [(2, 3), (3, 4), (4, 5), (5, 6), (3, 10), (5, 9)] {
            let pp = p(m, n);
            for r in [2, 3] {
                let gl = kclass_gl(r, &pp).unwrap();
                let pgl = kclass_pgl(r, &pp).unwrap();
                assert_eq!(gl, &KClass::from_coeffs([-1, 1]) * &pgl);
            }
        }
    }

    #[test]
    fn recover_roundtrip() {
        for (m, n) in [(2, 3), (3, 4), (2, 5), (4, 5), (5, 7), (2, 11), (9, 10)] {
            let c = kclass_sl(3, &p(m, n)).unwrap();
            assert_eq!(recover_mn(&c).unwrap(), (m, n));
        }
    }

    #[test]
    fn recover_rejects_foreign_input() {
        assert_eq!(recover_mn(&p0()).unwrap_err(), Error::NoValidFactorization);
        let near = &kclass_sl(3, &p(3, 4)).unwrap() + &KClass::one();
        assert!(recover_mn(&near).is_err());
    }

    #[test]
    fn swap_symmetry() {
        for r in [2, 3] {
            assert_eq!(
                kclass_sl(r, &p(4, 9)).unwrap(),
                kclass_sl(r, &p(9, 4)).unwrap()
            );
            assert_eq!(
                kclass_pgl(r, &p(4, 9)).unwrap(),
                kclass_pgl(r, &p(9, 4)).unwrap()
            );
        }
    }
}
