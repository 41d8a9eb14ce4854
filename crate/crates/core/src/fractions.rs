//! Elements of Q/Z in canonical form, and their splitting into prime-power
//! parts.
//!
//! A residue is stored as the reduced representative `a/b` with
//! `0 <= a < b` and `gcd(a, b) = 1`. Splitting sends `a/b` to the unique
//! family `p -> a_p / p^{s_p}` (over the primes dividing `b`) with
//! `0 <= a_p < p^{s_p}` summing back to `a/b` modulo 1; the computation is
//! Chinese-remainder splitting of the denominator.

use num_integer::Integer;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::group::PrimeSet;
use crate::primes;

/// A canonical representative of an element of Q/Z.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalMod1 {
    num: u64,
    den: u64,
}

impl RationalMod1 {
    pub fn zero() -> Self {
        RationalMod1 { num: 0, den: 1 }
    }

    /// Canonicalizes `num/den` modulo 1. Any representative of the same
    /// residue, including negative or unreduced ones, yields the same
    /// canonical value. Fails only for `den = 0`.
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidParameters("denominator must be nonzero".into()));
        }
        let den_u = den.unsigned_abs();
        // reduce num into [0, den) respecting the sign of the fraction
        let num_signed = if den < 0 { -(num as i128) } else { num as i128 };
        let num_u = num_signed.rem_euclid(den_u as i128) as u64;
        let g = num_u.gcd(&den_u);
        Ok(RationalMod1 {
            num: num_u / g,
            den: den_u / g,
        })
    }

    fn from_reduced(num: u64, den: u64) -> Self {
        debug_assert!(den >= 1 && num < den && num.gcd(&den) == 1);
        RationalMod1 { num, den }
    }

    pub fn numerator(&self) -> u64 {
        self.num
    }

    pub fn denominator(&self) -> u64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// Addition in Q/Z.
    pub fn add(&self, other: &RationalMod1) -> RationalMod1 {
        let den = (self.den as u128) * (other.den as u128);
        let num = (self.num as u128) * (other.den as u128)
            + (other.num as u128) * (self.den as u128);
        let num = num % den;
        let g = num.gcd(&den);
        let (num, den) = (num / g, den / g);
        assert!(den <= u64::MAX as u128, "denominator exceeds u64");
        RationalMod1::from_reduced(num as u64, den as u64)
    }

    /// Splits off one prime-power part per prime of the denominator.
    ///
    /// Errors with [`Error::PrimeOutsideSet`] if the denominator has a
    /// prime factor outside `set`. The zero residue splits into nothing.
    pub fn partial_fractions(&self, set: &PrimeSet) -> Result<BTreeMap<u64, RationalMod1>> {
        let mut out = BTreeMap::new();
        if self.is_zero() {
            return Ok(out);
        }
        for (p, e) in primes::factorize_u64(self.den) {
            if !set.contains(p) {
                return Err(Error::PrimeOutsideSet { prime: p });
            }
            let q = p.pow(e);
            let m = self.den / q;
            let inv = mod_inverse(m % q, q);
            let a_p = mulmod(self.num % q, inv, q);
            debug_assert!(a_p != 0, "reduced fractions have nonzero parts");
            out.insert(p, RationalMod1::from_reduced(a_p, q));
        }
        Ok(out)
    }
}

/// Sum of a prime-power family back into Q/Z.
pub fn sum_parts<'a, I: IntoIterator<Item = &'a RationalMod1>>(parts: I) -> RationalMod1 {
    parts
        .into_iter()
        .fold(RationalMod1::zero(), |acc, part| acc.add(part))
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Inverse of `a` modulo `m`, for coprime inputs.
fn mod_inverse(a: u64, m: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1, "inputs must be coprime");
    old_s.rem_euclid(m as i128) as u64
}

impl fmt::Display for RationalMod1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> RationalMod1 {
        RationalMod1::new(n, d).unwrap()
    }

    #[test]
    fn canonicalization() {
        assert_eq!(rat(5, 6), rat(11, 6));
        assert_eq!(rat(-1, 6), rat(5, 6));
        assert_eq!(rat(10, 12), rat(5, 6));
        assert_eq!(rat(3, -6), rat(1, 2));
        assert_eq!(rat(7, 7), RationalMod1::zero());
        assert!(RationalMod1::new(1, 0).is_err());
    }

    #[test]
    fn addition_mod_1() {
        assert_eq!(rat(1, 2).add(&rat(1, 3)), rat(5, 6));
        assert_eq!(rat(3, 4).add(&rat(1, 3)), rat(1, 12));
        assert_eq!(rat(1, 2).add(&rat(1, 2)), RationalMod1::zero());
    }

    #[test]
    fn split_five_sixths() {
        let i23 = PrimeSet::explicit([2, 3]).unwrap();
        let parts = rat(5, 6).partial_fractions(&i23).unwrap();
        assert_eq!(parts[&2], rat(1, 2));
        assert_eq!(parts[&3], rat(1, 3));
        assert_eq!(parts.len(), 2);
    }

    #[test]
    fn split_one_twelfth() {
        let i23 = PrimeSet::explicit([2, 3]).unwrap();
        let parts = rat(1, 12).partial_fractions(&i23).unwrap();
        assert_eq!(parts[&2], rat(3, 4));
        assert_eq!(parts[&3], rat(1, 3));
        assert_eq!(sum_parts(parts.values()), rat(1, 12));
    }

    #[test]
    fn split_zero_is_empty() {
        assert!(RationalMod1::zero()
            .partial_fractions(&PrimeSet::all())
            .unwrap()
            .is_empty());
        assert!(RationalMod1::zero()
            .partial_fractions(&PrimeSet::explicit([]).unwrap())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn split_rejects_outside_primes() {
        let i2 = PrimeSet::explicit([2]).unwrap();
        let err = rat(5, 6).partial_fractions(&i2).unwrap_err();
        assert_eq!(err, Error::PrimeOutsideSet { prime: 3 });
    }
}
