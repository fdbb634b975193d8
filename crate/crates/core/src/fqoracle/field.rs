use alloc::format;

use crate::{Error, Result};

/// The prime field `𝔽_q`, elements stored as residues `0..q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fq {
    q: u32,
}

/// Largest modulus accepted; products of two residues fit in `u64` with room
/// to spare.
pub const MAX_PRIME: u32 = 65_521;

pub fn is_prime(q: u32) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Fq {
    pub fn new(q: u32) -> Result<Self> {
        if !is_prime(q) || q > MAX_PRIME {
            return Err(Error::InvalidInput(format!("q = {q} is not a supported prime")));
        }
        Ok(Fq { q })
    }

    pub fn q(self) -> u32 {
        self.q
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.q {
            s - self.q
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.q - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.q as u64) as u32
    }

    /// Multiplicative inverse by Fermat.
    ///
    /// # Panics
    ///
    /// On zero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.q), "inverse of zero");
        let (mut base, mut e, mut acc) = (a as u64, self.q as u64 - 2, 1u64);
        let m = self.q as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            e >>= 1;
        }
        acc as u32
    }

    /// `a·x + y`, the workhorse of row reduction.
    #[inline]
    pub fn axpy(self, a: u32, x: u32, y: u32) -> u32 {
        ((a as u64 * x as u64 + y as u64) % self.q as u64) as u32
    }

    pub fn reduce(self, a: i64) -> u32 {
        a.rem_euclid(self.q as i64) as u32
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_only() {
        assert!(Fq::new(2).is_ok());
        assert!(Fq::new(3).is_ok());
        assert!(Fq::new(4).is_err());
        assert!(Fq::new(1).is_err());
        assert!(Fq::new(0).is_err());
    }

    #[test]
    fn inverses() {
        for q in [2, 3, 5, 7, 11] {
            let f = Fq::new(q).unwrap();
            for a in 1..q {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
        }
    }
}
