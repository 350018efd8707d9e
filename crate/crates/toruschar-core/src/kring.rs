//! Exact arithmetic in ℤ[L], where L is the class of the affine line in the
//! Grothendieck ring of varieties.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::polyops;

/// Integer polynomial in the Lefschetz class L, always in canonical form
/// (no trailing zero coefficients; the zero class has no coefficients).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct KClass {
    coeffs: Vec<BigInt>,
}

impl KClass {
    pub fn zero() -> Self {
        KClass { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        KClass::constant(1)
    }

    /// The Lefschetz class L = [ℂ].
    pub fn lefschetz() -> Self {
        KClass::monomial(1, 1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        KClass::monomial(0, c)
    }

    /// `c·L^deg`.
    pub fn monomial<T: Into<BigInt>>(deg: usize, c: T) -> Self {
        let c = c.into();
        if c.is_zero() {
            return KClass::zero();
        }
        let mut coeffs = alloc::vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        KClass { coeffs }
    }

    /// Builds from ascending-power coefficients; trailing zeros are trimmed.
    pub fn from_coeffs<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut coeffs: Vec<BigInt> = coeffs.into_iter().map(Into::into).collect();
        polyops::trim(&mut coeffs);
        KClass { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero class.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of L^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        polyops::eval(&self.coeffs, x)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    pub fn scale(&self, c: &BigInt) -> KClass {
        KClass {
            coeffs: polyops::scale(&self.coeffs, c),
        }
    }

    pub fn scale_i64(&self, c: i64) -> KClass {
        self.scale(&BigInt::from(c))
    }

    pub fn pretty(&self) -> String {
        polyops::pretty(&self.coeffs, "L")
    }
}

impl fmt::Display for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

// Debug delegates to Display so test failures show readable polynomials.
impl fmt::Debug for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &KClass {
    type Output = KClass;
    fn add(self, rhs: &KClass) -> KClass {
        KClass {
            coeffs: polyops::add(&self.coeffs, &rhs.coeffs),
        }
    }
}

impl Sub for &KClass {
    type Output = KClass;
    fn sub(self, rhs: &KClass) -> KClass {
        KClass {
            coeffs: polyops::sub(&self.coeffs, &rhs.coeffs),
        }
    }
}

impl Mul for &KClass {
    type Output = KClass;
    fn mul(self, rhs: &KClass) -> KClass {
        KClass {
            coeffs: polyops::mul(&self.coeffs, &rhs.coeffs),
        }
    }
}

impl Neg for &KClass {
    type Output = KClass;
    fn neg(self) -> KClass {
        self.scale(&BigInt::from(-1))
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for KClass {
            type Output = KClass;
            fn $method(self, rhs: KClass) -> KClass {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&KClass> for KClass {
            type Output = KClass;
            fn $method(self, rhs: &KClass) -> KClass {
                (&self).$method(rhs)
            }
        }
        impl $trait<KClass> for &KClass {
            type Output = KClass;
            fn $method(self, rhs: KClass) -> KClass {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Zero for KClass {
    fn zero() -> Self {
        KClass::zero()
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
}

impl One for KClass {
    fn one() -> Self {
        KClass::one()
    }
}
