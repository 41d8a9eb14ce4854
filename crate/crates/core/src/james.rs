//! James numbers (also known as Atiyah–Todd numbers), exactly.
//!
//! The number `b_q` is defined through its p-adic valuations:
//! `v_p(b_q) = max{ s + v_p(s) : 1 <= s <= floor((q-1)/(p-1)) }` for
//! `q >= p`, and `0` otherwise. Values grow like `2^(q-1)` and are kept in
//! arbitrary precision; each number carries its factorization so
//! divisibility questions come with certificates.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

use crate::primes;

/// Largest `e` with `p^e | n`, for `p` prime and `n >= 1`.
pub fn padic_valuation(p: u64, n: u64) -> u32 {
    assert!(primes::is_prime(p), "{p} is not prime");
    primes::padic_valuation_u64(p, n)
}

/// The exponent of `p` in `b_q`.
pub fn james_valuation(p: u64, q: u64) -> u64 {
    assert!(primes::is_prime(p), "{p} is not prime");
    assert!(q >= 1, "q must be positive");
    if q < p {
        return 0;
    }
    let bound = (q - 1) / (p - 1);
    (1..=bound)
        .map(|s| s + primes::padic_valuation_u64(p, s) as u64)
        .max()
        .unwrap_or(0)
}

/// A James number `b_q` with its prime factorization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JamesFactorization {
    pub q: u64,
    /// Decimal string on the wire: the values outgrow fixed width fast.
    #[serde(serialize_with = "serialize_biguint_as_string")]
    pub value: BigUint,
    /// Positive exponents only, keyed by prime.
    #[serde(rename = "factorization")]
    pub exponents: BTreeMap<u64, u64>,
}

fn serialize_biguint_as_string<S: serde::Serializer>(
    value: &BigUint,
    serializer: S,
) -> Result<S::Ok, S::Error> {
    serializer.serialize_str(&value.to_string())
}

impl JamesFactorization {
    pub fn valuation(&self, p: u64) -> u64 {
        self.exponents.get(&p).copied().unwrap_or(0)
    }

    /// Does this number divide `n`? Answered prime by prime.
    pub fn divides(&self, n: u64) -> bool {
        assert!(n >= 1, "n must be positive");
        self.exponents
            .iter()
            .all(|(&p, &e)| primes::padic_valuation_u64(p, n) as u64 >= e)
    }
}

impl fmt::Display for JamesFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .exponents
            .iter()
            .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        write!(f, "{} = {}", parts.join(" * "), self.value)
    }
}

/// The James number `b_q`, assembled from the valuation formula over all
/// primes `p <= q`.
pub fn james_number(q: u64) -> JamesFactorization {
    assert!(q >= 1, "q must be positive");
    let mut exponents = BTreeMap::new();
    let mut value = BigUint::one();
    for p in primes::primes_up_to(q) {
        let e = james_valuation(p, q);
        if e > 0 {
            exponents.insert(p, e);
            value *= BigUint::from(p).pow(u32::try_from(e).expect("exponent fits u32"));
        }
    }
    JamesFactorization { q, exponents, value }
}

/// Certificate for a divisibility test against `b_r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DivisibilityWitness {
    /// `b_r | n`: the quotient and its factorization.
    Quotient {
        value: u64,
        factorization: BTreeMap<u64, u32>,
    },
    /// `b_r` does not divide `n`: a prime where the valuation fails.
    FailingPrime {
        prime: u64,
        required: u64,
        available: u64,
    },
}

/// Outcome of `b_r | n`, with a witness either way.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JamesDivisibility {
    pub divides: bool,
    pub james: JamesFactorization,
    pub witness: DivisibilityWitness,
}

/// Decides `b_r | n` and produces the certificate: the factorized quotient
/// on success, a prime with too small a valuation in `n` on failure.
pub fn james_divides(r: u64, n: u64) -> JamesDivisibility {
    assert!(r >= 1 && n >= 1, "r and n must be positive");
    let james = james_number(r);
    let failing = james
        .exponents
        .iter()
        .map(|(&p, &e)| (p, e, primes::padic_valuation_u64(p, n) as u64))
        .find(|&(_, required, available)| available < required);
    match failing {
        Some((prime, required, available)) => JamesDivisibility {
            divides: false,
            james,
            witness: DivisibilityWitness::FailingPrime { prime, required, available },
        },
        None => {
            let value = n / james.value.to_u64().expect("a divisor of a u64 fits in u64");
            JamesDivisibility {
                divides: true,
                james,
                witness: DivisibilityWitness::Quotient {
                    value,
                    factorization: primes::factorize_u64(value),
                },
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valuation_examples() {
        assert_eq!(padic_valuation(2, 48), 4);
        assert_eq!(padic_valuation(5, 48), 0);
        assert_eq!(padic_valuation(3, 27), 3);
    }

    #[test]
    fn james_valuations() {
        assert_eq!(james_valuation(2, 5), 6);
        assert_eq!(james_valuation(3, 5), 2);
        assert_eq!(james_valuation(5, 5), 1);
        assert_eq!(james_valuation(7, 5), 0);
        assert_eq!(james_valuation(2, 6), 6);
    }

    #[test]
    fn first_james_numbers() {
        let expected: [(u64, u64); 6] = [(1, 1), (2, 2), (3, 24), (4, 24), (5, 2880), (6, 2880)];
        for (q, value) in expected {
            assert_eq!(james_number(q).value, BigUint::from(value), "b_{q}");
        }
        assert!(james_number(1).exponents.is_empty());
        let b5 = james_number(5);
        assert_eq!(b5.exponents, BTreeMap::from([(2, 6), (3, 2), (5, 1)]));
    }

    #[test]
    fn divisibility_certificates() {
        let d = james_divides(3, 24);
        assert!(d.divides);
        assert_eq!(
            d.witness,
            DivisibilityWitness::Quotient { value: 1, factorization: BTreeMap::new() }
        );

        let d = james_divides(3, 25);
        assert!(!d.divides);
        assert_eq!(
            d.witness,
            DivisibilityWitness::FailingPrime { prime: 2, required: 3, available: 0 }
        );

        assert!(james_divides(1, 7).divides);
    }

    #[test]
    fn display_factorization() {
        assert_eq!(james_number(5).to_string(), "2^6 * 3^2 * 5 = 2880");
        assert_eq!(james_number(1).to_string(), "1");
    }
}
