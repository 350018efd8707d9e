//! Raw dense-polynomial helpers over `BigInt` coefficient vectors.
//!
//! Shared by `kring::KClass` (polynomials in L) and `knotpoly::IntPoly`
//! (polynomials in t). Vectors are little-endian (index = power) and must be
//! kept trimmed: no trailing zero coefficients.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::Zero;

pub fn trim(coeffs: &mut Vec<BigInt>) {
    while coeffs.last().map_or(false, |c| c.is_zero()) {
        coeffs.pop();
    }
}

pub fn add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(&mut out);
    out
}

pub fn sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(&mut out);
    out
}

pub fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    trim(&mut out);
    out
}

pub fn scale(a: &[BigInt], c: &BigInt) -> Vec<BigInt> {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

pub fn eval(a: &[BigInt], x: &BigInt) -> BigInt {
    // Horner, highest power first.
    let mut acc = BigInt::zero();
    for c in a.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Exact division; returns `None` when the remainder is nonzero or the
/// divisor is zero. Requires the leading coefficient of `b` to divide
/// exactly at every step (true for the monic-up-to-sign divisors used here,
/// and checked in general).
pub fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    if b.is_empty() {
        return None;
    }
    let mut rem: Vec<BigInt> = a.to_vec();
    trim(&mut rem);
    if rem.is_empty() {
        return Some(Vec::new());
    }
    if rem.len() < b.len() {
        return None;
    }
    let lead = &b[b.len() - 1];
    let mut quot = vec![BigInt::zero(); rem.len() - b.len() + 1];
    for k in (0..quot.len()).rev() {
        let top = rem[k + b.len() - 1].clone();
        if top.is_zero() {
            continue;
        }
        let (q, r) = num_integer::Integer::div_rem(&top, lead);
        if !r.is_zero() {
            return None;
        }
        for (j, cb) in b.iter().enumerate() {
            let delta = cb * &q;
            rem[k + j] -= delta;
        }
        quot[k] = q;
    }
    trim(&mut rem);
    if rem.is_empty() {
        trim(&mut quot);
        Some(quot)
    } else {
        None
    }
}

/// Pretty-prints with the given variable symbol, descending powers,
/// e.g. `L^4+4L^3-3L^2-15L+12`; the zero polynomial prints as `0`.
pub fn pretty(coeffs: &[BigInt], var: &str) -> alloc::string::String {
    use core::fmt::Write;
    let mut s = alloc::string::String::new();
    if coeffs.is_empty() {
        s.push('0');
        return s;
    }
    let one = BigInt::from(1);
    let minus_one = BigInt::from(-1);
    let mut first = true;
    for i in (0..coeffs.len()).rev() {
        let c = &coeffs[i];
        if c.is_zero() {
            continue;
        }
        let neg = c < &BigInt::zero();
        if first {
            if neg {
                s.push('-');
            }
        } else {
            s.push(if neg { '-' } else { '+' });
        }
        first = false;
        let abs = if neg { -c } else { c.clone() };
        let unit = abs == one || abs == minus_one;
        if i == 0 {
            let _ = write!(s, "{abs}");
        } else {
            if !unit {
                let _ = write!(s, "{abs}");
            }
            s.push_str(var);
            if i > 1 {
                let _ = write!(s, "^{i}");
            }
        }
    }
    s
}
