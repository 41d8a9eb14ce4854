//! Completions of abelian groups at a set of primes.
//!
//! For a group in the representable class `Q^a + Z^r + finite`, the
//! completion at a prime set I is determined by one p-adic free rank
//! (shared by every prime of I, contributed by the Z-part) together with
//! the p-primary finite parts at primes of I. Rational summands contribute
//! nothing. The p-adic ranks are symbolic: no p-adic elements are ever
//! represented.

use num_bigint::BigUint;
use num_traits::One;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::group::{AbGroupFQ, FinAbGroup, PrimeSet};
use crate::primes;

/// The value of a completion at a prime set: per-prime p-adic free rank
/// plus finite p-primary parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ICompleteGroup {
    prime_set: PrimeSet,
    padic_rank: u32,
    finite_parts: BTreeMap<u64, FinAbGroup>,
}

impl ICompleteGroup {
    pub fn prime_set(&self) -> &PrimeSet {
        &self.prime_set
    }

    pub fn padic_rank(&self) -> u32 {
        self.padic_rank
    }

    pub fn finite_parts(&self) -> &BTreeMap<u64, FinAbGroup> {
        &self.finite_parts
    }

    pub fn is_trivial(&self) -> bool {
        self.padic_rank == 0 && self.finite_parts.is_empty()
    }

    /// Order of the underlying group when it is finite (`padic_rank = 0`).
    pub fn order(&self) -> Option<BigUint> {
        (self.padic_rank == 0).then(|| {
            self.finite_parts
                .values()
                .map(FinAbGroup::order)
                .fold(BigUint::one(), |acc, n| acc * n)
        })
    }
}

impl fmt::Display for ICompleteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.padic_rank > 0 {
            let rank = if self.padic_rank == 1 {
                String::new()
            } else {
                format!("^{}", self.padic_rank)
            };
            match &self.prime_set {
                PrimeSet::All => parts.push(format!("Zhat{rank}")),
                PrimeSet::Explicit(ps) => {
                    for p in ps {
                        parts.push(format!("Z_{p}{rank}"));
                    }
                }
            }
        }
        for part in self.finite_parts.values() {
            parts.push(part.to_string());
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// The completion of `a` at the prime set `set`.
///
/// The Z-part contributes the p-adic rank, the torsion contributes its
/// p-primary components at primes of the set, and the rational part
/// vanishes.
pub fn ext_completion(a: &AbGroupFQ, set: &PrimeSet) -> Result<ICompleteGroup> {
    let mut finite_parts = BTreeMap::new();
    match set {
        PrimeSet::Explicit(ps) => {
            for &p in ps {
                let part = a.torsion.primary_part(p)?;
                if !part.is_trivial() {
                    finite_parts.insert(p, part);
                }
            }
        }
        PrimeSet::All => {
            for p in torsion_primes(&a.torsion) {
                let part = a.torsion.primary_part(p)?;
                if !part.is_trivial() {
                    finite_parts.insert(p, part);
                }
            }
        }
    }
    Ok(ICompleteGroup {
        prime_set: set.clone(),
        padic_rank: a.free_rank,
        finite_parts,
    })
}

/// Primes dividing the order of a finite group, ascending.
fn torsion_primes(t: &FinAbGroup) -> Vec<u64> {
    // the largest invariant factor is divisible by every relevant prime
    match t.invariant_factors().last() {
        None => Vec::new(),
        Some(exponent) => primes::factorize_big(exponent).into_keys().collect(),
    }
}

/// The split decomposition realized by the completion map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletionDecomposition {
    /// The I-divisible subgroup: the rational part plus prime-to-I torsion.
    pub kernel: AbGroupFQ,
    /// The completion, a finite group of I-bounded torsion.
    pub completion: FinAbGroup,
    /// Image of the splitting section: the I-torsion subgroup.
    pub section_image: FinAbGroup,
}

/// Splits `a` along its completion at `set`.
///
/// Valid only when the completion has bounded torsion, which on this class
/// means `free_rank = 0`. The sum `kernel + section_image` recovers `a` in
/// canonical form.
pub fn completion_decomposition(a: &AbGroupFQ, set: &PrimeSet) -> Result<CompletionDecomposition> {
    if a.free_rank > 0 {
        return Err(Error::HypothesisViolated(format!(
            "the completion of {a} at {set} contains a p-adic free module of rank {}, \
             so it is not of I-bounded torsion",
            a.free_rank
        )));
    }
    let completion = match set {
        PrimeSet::All => a.torsion.clone(),
        PrimeSet::Explicit(ps) => {
            let mut acc = FinAbGroup::trivial();
            for &p in ps {
                acc = acc.direct_sum(&a.torsion.primary_part(p)?);
            }
            acc
        }
    };
    let kernel = AbGroupFQ::new(a.q_rank, 0, a.torsion.prime_to_part(set));
    Ok(CompletionDecomposition {
        section_image: completion.clone(),
        completion,
        kernel,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fin(orders: &[u64]) -> FinAbGroup {
        FinAbGroup::from_orders(&orders.iter().map(|&n| BigUint::from(n)).collect::<Vec<_>>())
    }

    #[test]
    fn completion_examples() {
        // Z/12 + Q^2 at {2}: the 2-part survives, Q dies
        let a = AbGroupFQ::new(2, 0, FinAbGroup::cyclic(12));
        let c = ext_completion(&a, &PrimeSet::explicit([2]).unwrap()).unwrap();
        assert_eq!(c.padic_rank(), 0);
        assert_eq!(c.finite_parts().len(), 1);
        assert_eq!(c.finite_parts()[&2], FinAbGroup::cyclic(4));
        assert_eq!(c.order(), Some(BigUint::from(4u32)));

        // Z at all primes: the profinite completion, recorded symbolically
        let z = AbGroupFQ::new(0, 1, FinAbGroup::trivial());
        let c = ext_completion(&z, &PrimeSet::all()).unwrap();
        assert_eq!(c.padic_rank(), 1);
        assert!(c.finite_parts().is_empty());
        assert_eq!(c.order(), None);
        assert_eq!(c.to_string(), "Zhat");

        let c = ext_completion(&AbGroupFQ::trivial(), &PrimeSet::all()).unwrap();
        assert!(c.is_trivial());
    }

    #[test]
    fn completion_at_all_primes_factorizes() {
        let a = AbGroupFQ::finite(fin(&[6, 12]));
        let c = ext_completion(&a, &PrimeSet::all()).unwrap();
        assert_eq!(c.finite_parts().len(), 2);
        assert_eq!(c.finite_parts()[&2], fin(&[2, 4]));
        assert_eq!(c.finite_parts()[&3], fin(&[3, 3]));
    }

    #[test]
    fn decomposition_examples() {
        let i2 = PrimeSet::explicit([2]).unwrap();
        let a = AbGroupFQ::new(1, 0, FinAbGroup::cyclic(12));
        let d = completion_decomposition(&a, &i2).unwrap();
        assert_eq!(d.kernel, AbGroupFQ::new(1, 0, FinAbGroup::cyclic(3)));
        assert_eq!(d.completion, FinAbGroup::cyclic(4));
        assert_eq!(d.section_image, FinAbGroup::cyclic(4));
        assert_eq!(d.kernel.direct_sum(&AbGroupFQ::finite(d.section_image)), a);

        let i23 = PrimeSet::explicit([2, 3]).unwrap();
        let d = completion_decomposition(&a, &i23).unwrap();
        assert_eq!(d.kernel, AbGroupFQ::new(1, 0, FinAbGroup::trivial()));
        assert_eq!(d.completion, FinAbGroup::cyclic(12));

        let z5 = AbGroupFQ::finite(FinAbGroup::cyclic(5));
        let d = completion_decomposition(&z5, &i2).unwrap();
        assert_eq!(d.kernel, z5);
        assert!(d.completion.is_trivial());
    }

    #[test]
    fn decomposition_rejects_free_rank() {
        let z = AbGroupFQ::new(0, 1, FinAbGroup::trivial());
        let err = completion_decomposition(&z, &PrimeSet::all()).unwrap_err();
        assert!(matches!(err, Error::HypothesisViolated(_)));
    }
}
