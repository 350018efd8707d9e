//! Exact roots of unity as exponents modulo a declared order.

use num_integer::Integer;

use crate::{Error, Result};

/// The root of unity e^{2πik/order}, with 0 ≤ k < order.
///
/// Multiplication is exponent addition, powers are exponent multiplication;
/// everything stays exact. Equality of roots held at different orders is
/// decided after rescaling both to the lcm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootExp {
    order: u64,
    k: u64,
}

impl RootExp {
    pub fn new(k: i64, order: u64) -> Self {
        assert!(order >= 1, "order must be positive");
        let k = k.rem_euclid(order as i64) as u64;
        RootExp { k, order }
    }

    pub fn one(order: u64) -> Self {
        RootExp::new(0, order)
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn is_one(&self) -> bool {
        self.k == 0
    }

    /// Re-expresses the same root at a larger order (must be a multiple).
    pub fn with_order(&self, order: u64) -> Result<RootExp> {
        if order % self.order != 0 {
            return Err(Error::Internal("rescale target is not a multiple of order"));
        }
        let f = order / self.order;
        Ok(RootExp { k: self.k * f, order })
    }

    /// Multiplies two roots, rescaling to the lcm of the orders.
    pub fn mul(&self, other: &RootExp) -> RootExp {
        let order = self.order.lcm(&other.order);
        let a = self.k * (order / self.order);
        let b = other.k * (order / other.order);
        RootExp { k: (a + b) % order, order }
    }

    pub fn pow(&self, e: i64) -> RootExp {
        let k = (self.k as i128 * e as i128).rem_euclid(self.order as i128) as u64;
        RootExp { k, order: self.order }
    }

    pub fn inv(&self) -> RootExp {
        self.pow(-1)
    }

    /// True equality as complex numbers, regardless of declared orders.
    pub fn same_root(&self, other: &RootExp) -> bool {
        let order = self.order.lcm(&other.order);
        self.k * (order / self.order) == other.k * (order / other.order)
    }

    /// The angle 2πk/order as an f64 (for numeric consumers only).
    pub fn angle(&self) -> f64 {
        core::f64::consts::TAU * self.k as f64 / self.order as f64
    }
}
