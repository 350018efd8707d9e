//! Validated, normalized torus-knot parameters.

use num_integer::Integer;

use crate::{Error, Result};

/// Coprime pair (m, n), both ≥ 2, normalized so that `n` is odd.
///
/// All closed-form counts below are stated for odd n; since the knots
/// K_{m,n} and K_{n,m} coincide, the constructor swaps the inputs when
/// needed and records that it did.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KnotParams {
    m: u64,
    n: u64,
    swapped: bool,
}

impl KnotParams {
    pub fn new(m: u64, n: u64) -> Result<Self> {
        if m == 1 || n == 1 {
            return Err(Error::UnknotRejected { m, n });
        }
        if m.gcd(&n) != 1 {
            // Also catches m = 0 or n = 0 (gcd(0, n) = n ≥ 2).
            return Err(Error::NotCoprime { m, n });
        }
        // Coprimality leaves at most one even entry; make n the odd one.
        if n % 2 == 0 {
            Ok(KnotParams { m: n, n: m, swapped: true })
        } else {
            Ok(KnotParams { m, n, swapped: false })
        }
    }

    /// Normalized m (the even entry, when either input was even).
    pub fn m(&self) -> u64 {
        self.m
    }

    /// Normalized n (always odd).
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn swapped(&self) -> bool {
        self.swapped
    }

    /// The pair as ordered on input.
    pub fn input_pair(&self) -> (u64, u64) {
        if self.swapped {
            (self.n, self.m)
        } else {
            (self.m, self.n)
        }
    }

    /// The pair sorted ascending, the canonical answer of `recover_mn`.
    pub fn sorted_pair(&self) -> (u64, u64) {
        (self.m.min(self.n), self.m.max(self.n))
    }

    /// The same knot with the roles of m and n exchanged on input.
    pub fn swap(&self) -> KnotParams {
        let (a, b) = self.input_pair();
        KnotParams::new(b, a).expect("swap of valid params is valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_to_odd_n() {
        let p = KnotParams::new(3, 4).unwrap();
        assert_eq!((p.m(), p.n()), (4, 3));
        assert!(p.swapped());
        assert_eq!(p.input_pair(), (3, 4));

        let q = KnotParams::new(2, 3).unwrap();
        assert_eq!((q.m(), q.n()), (2, 3));
        assert!(!q.swapped());
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            KnotParams::new(1, 5).unwrap_err(),
            Error::UnknotRejected { m: 1, n: 5 }
        );
        assert_eq!(
            KnotParams::new(7, 1).unwrap_err(),
            Error::UnknotRejected { m: 7, n: 1 }
        );
        assert_eq!(
            KnotParams::new(4, 6).unwrap_err(),
            Error::NotCoprime { m: 4, n: 6 }
        );
        assert_eq!(
            KnotParams::new(0, 5).unwrap_err(),
            Error::NotCoprime { m: 0, n: 5 }
        );
        assert_eq!(
            KnotParams::new(3, 3).unwrap_err(),
            Error::NotCoprime { m: 3, n: 3 }
        );
    }

    #[test]
    fn sorted_pair_is_input_order_independent() {
        let p = KnotParams::new(3, 4).unwrap();
        let q = KnotParams::new(4, 3).unwrap();
        assert_eq!(p.sorted_pair(), (3, 4));
        assert_eq!(q.sorted_pair(), (3, 4));
        assert_eq!((q.m(), q.n()), (4, 3));
    }
}
