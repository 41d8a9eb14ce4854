//! Finitely generated abelian groups extended by rational vector spaces.
//!
//! The representable class is `Q^a + Z^r + finite`, with the finite part
//! held in invariant-factor form `Z/d_1 + ... + Z/d_k`, `d_1 | d_2 | ...`,
//! each `d_i >= 2`. Invariant-factor form is the unique canonical
//! representation, so isomorphism questions reduce to structural equality.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::ser::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::primes;
use crate::snf::smith_normal_form;

/// A finite abelian group in invariant-factor form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FinAbGroup {
    factors: Vec<BigUint>,
}

impl FinAbGroup {
    pub fn trivial() -> Self {
        FinAbGroup { factors: Vec::new() }
    }

    /// Cyclic group of order `n >= 1` (`n = 1` gives the trivial group).
    pub fn cyclic(n: u64) -> Self {
        assert!(n >= 1, "cyclic group order must be positive");
        if n == 1 {
            Self::trivial()
        } else {
            FinAbGroup { factors: vec![BigUint::from(n)] }
        }
    }

    /// Builds from an already-canonical chain `d_1 | d_2 | ...`, `d_i >= 2`.
    pub fn from_invariant_factors(factors: Vec<BigUint>) -> Result<Self> {
        let two = BigUint::from(2u32);
        for w in factors.windows(2) {
            if !(&w[1] % &w[0]).is_zero() {
                return Err(Error::InvalidGroup(format!(
                    "invariant factors must form a divisibility chain: {} does not divide {}",
                    w[0], w[1]
                )));
            }
        }
        if let Some(bad) = factors.iter().find(|d| **d < two) {
            return Err(Error::InvalidGroup(format!("invariant factor {bad} is below 2")));
        }
        Ok(FinAbGroup { factors })
    }

    /// Canonicalizes a direct sum of cyclic groups of the given orders.
    ///
    /// Goes through the Smith normal form of the diagonal presentation, so
    /// no factorization of the orders is ever needed.
    pub fn from_orders(orders: &[BigUint]) -> Self {
        assert!(orders.iter().all(|n| !n.is_zero()), "orders must be positive");
        let diag: Vec<BigInt> = orders.iter().map(|n| BigInt::from(n.clone())).collect();
        let snf = smith_normal_form(&Mat::diagonal(&diag));
        let factors = snf
            .nontrivial_factors()
            .into_iter()
            .map(|d| d.to_biguint().expect("diagonal entries are nonnegative"))
            .collect();
        FinAbGroup { factors }
    }

    pub fn invariant_factors(&self) -> &[BigUint] {
        &self.factors
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn order(&self) -> BigUint {
        self.factors.iter().product::<BigUint>().max(BigUint::one())
    }

    /// The exponent: smallest `n >= 1` with `n * x = 0` for all `x`.
    pub fn exponent(&self) -> BigUint {
        self.factors.last().cloned().unwrap_or_else(BigUint::one)
    }

    pub fn direct_sum(&self, other: &FinAbGroup) -> FinAbGroup {
        let mut orders = self.factors.clone();
        orders.extend(other.factors.iter().cloned());
        FinAbGroup::from_orders(&orders)
    }

    /// The subgroup of elements killed by `m`, i.e. `Hom(Z/m, -)`.
    pub fn m_torsion(&self, m: u64) -> FinAbGroup {
        assert!(m >= 1, "m must be positive");
        let m = BigUint::from(m);
        let factors = self
            .factors
            .iter()
            .map(|d| d.gcd(&m))
            .filter(|g| !g.is_one())
            .collect();
        // gcds of a divisibility chain with a fixed m form a chain
        FinAbGroup { factors }
    }

    /// The quotient by `m`-multiples, i.e. `Ext(Z/m, -)` on finite groups.
    pub fn mod_m(&self, m: u64) -> FinAbGroup {
        self.m_torsion(m)
    }

    /// The `p`-primary component. Requires `p` prime.
    pub fn primary_part(&self, p: u64) -> Result<FinAbGroup> {
        if !primes::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let big_p = BigUint::from(p);
        let factors = self
            .factors
            .iter()
            .map(|d| big_p.pow(primes::padic_valuation_big(p, d)))
            .filter(|g| !g.is_one())
            .collect();
        Ok(FinAbGroup { factors })
    }

    /// The subgroup of elements with order coprime to every prime in `set`.
    pub fn prime_to_part(&self, set: &PrimeSet) -> FinAbGroup {
        match set {
            PrimeSet::All => FinAbGroup::trivial(),
            PrimeSet::Explicit(ps) => {
                let factors: Vec<BigUint> = self
                    .factors
                    .iter()
                    .map(|d| {
                        let mut d = d.clone();
                        for &p in ps {
                            let bp = BigUint::from(p);
                            loop {
                                let (q, r) = d.div_rem(&bp);
                                if !r.is_zero() {
                                    break;
                                }
                                d = q;
                            }
                        }
                        d
                    })
                    .filter(|g| !g.is_one())
                    .collect();
                FinAbGroup { factors }
            }
        }
    }

    /// True when every invariant factor is a product of primes in `set`.
    pub fn is_torsion_bounded_by(&self, set: &PrimeSet) -> bool {
        match set {
            PrimeSet::All => true,
            PrimeSet::Explicit(_) => self.prime_to_part(set).is_trivial(),
        }
    }

    /// True when no prime of `set` divides any invariant factor.
    pub fn is_coprime_to(&self, set: &PrimeSet) -> bool {
        match set {
            PrimeSet::All => self.is_trivial(),
            PrimeSet::Explicit(ps) => ps.iter().all(|&p| {
                let bp = BigUint::from(p);
                self.factors.iter().all(|d| !(d % &bp).is_zero())
            }),
        }
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.factors.iter().map(|d| format!("Z/{d}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A set of prime numbers: all of them, or an explicit finite set.
///
/// The complement of an explicit set is never materialized; operations
/// against `All` only ever touch primes dividing the data at hand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrimeSet {
    All,
    Explicit(BTreeSet<u64>),
}

impl PrimeSet {
    pub fn all() -> Self {
        PrimeSet::All
    }

    /// Builds an explicit set, rejecting non-primes.
    pub fn explicit<I: IntoIterator<Item = u64>>(primes_iter: I) -> Result<Self> {
        let mut set = BTreeSet::new();
        for p in primes_iter {
            if !primes::is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            set.insert(p);
        }
        Ok(PrimeSet::Explicit(set))
    }

    /// Membership for a prime `p`.
    pub fn contains(&self, p: u64) -> bool {
        match self {
            PrimeSet::All => true,
            PrimeSet::Explicit(set) => set.contains(&p),
        }
    }

    /// True only for the explicit empty set: products of primes drawn from
    /// it are all 1, so divisibility conditions become vacuous.
    pub fn is_empty(&self) -> bool {
        matches!(self, PrimeSet::Explicit(set) if set.is_empty())
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeSet::All => write!(f, "all primes"),
            PrimeSet::Explicit(set) => {
                let parts: Vec<String> = set.iter().map(|p| p.to_string()).collect();
                write!(f, "{{{}}}", parts.join(", "))
            }
        }
    }
}

/// A group of shape `Q^q_rank + Z^free_rank + torsion`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AbGroupFQ {
    pub q_rank: u32,
    pub free_rank: u32,
    pub torsion: FinAbGroup,
}

impl AbGroupFQ {
    pub fn new(q_rank: u32, free_rank: u32, torsion: FinAbGroup) -> Self {
        AbGroupFQ { q_rank, free_rank, torsion }
    }

    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn finite(torsion: FinAbGroup) -> Self {
        AbGroupFQ { q_rank: 0, free_rank: 0, torsion }
    }

    pub fn is_trivial(&self) -> bool {
        self.q_rank == 0 && self.free_rank == 0 && self.torsion.is_trivial()
    }

    pub fn is_finite(&self) -> bool {
        self.q_rank == 0 && self.free_rank == 0
    }

    /// Uniquely divisible means a rational vector space: no free part, no
    /// torsion.
    pub fn is_uniquely_divisible(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_trivial()
    }

    pub fn direct_sum(&self, other: &AbGroupFQ) -> AbGroupFQ {
        AbGroupFQ {
            q_rank: self.q_rank + other.q_rank,
            free_rank: self.free_rank + other.free_rank,
            torsion: self.torsion.direct_sum(&other.torsion),
        }
    }

    /// The `m`-torsion subgroup `A[m] = Hom(Z/m, A)`. Requires `m >= 1`.
    pub fn m_torsion(&self, m: u64) -> AbGroupFQ {
        AbGroupFQ::finite(self.torsion.m_torsion(m))
    }

    /// The quotient `A/mA = Ext(Z/m, A)`. Requires `m >= 1`.
    ///
    /// The rational part dies; each `Z` contributes a `Z/m`.
    pub fn mod_m(&self, m: u64) -> AbGroupFQ {
        assert!(m >= 1, "m must be positive");
        let mut factors: Vec<BigUint> = self.torsion.mod_m(m).factors;
        if m >= 2 {
            factors.extend(std::iter::repeat_n(BigUint::from(m), self.free_rank as usize));
        }
        // each gcd divides m, so appending the m's keeps the chain
        AbGroupFQ::finite(FinAbGroup { factors })
    }

    /// The `p`-primary component of the torsion subgroup.
    pub fn primary_part(&self, p: u64) -> Result<FinAbGroup> {
        self.torsion.primary_part(p)
    }

    /// The divisibility and torsion predicates relative to a prime set.
    pub fn divisibility(&self, set: &PrimeSet) -> DivisibilityReport {
        if set.is_empty() {
            // only n = 1 qualifies, and x1 is always an isomorphism
            return DivisibilityReport {
                is_i_divisible: true,
                is_uniquely_i_divisible: true,
                is_i_torsion_free: true,
                is_i_bounded_torsion: self.is_finite() && self.torsion.is_trivial(),
            };
        }
        let torsion_coprime = self.torsion.is_coprime_to(set);
        // on this class, multiplication by p is epi on the torsion part
        // exactly when it is mono there, so divisible and uniquely
        // divisible coincide
        let divisible = self.free_rank == 0 && torsion_coprime;
        DivisibilityReport {
            is_i_divisible: divisible,
            is_uniquely_i_divisible: divisible,
            is_i_torsion_free: torsion_coprime,
            is_i_bounded_torsion: self.is_finite() && self.torsion.is_torsion_bounded_by(set),
        }
    }
}

impl fmt::Display for AbGroupFQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.q_rank {
            0 => {}
            1 => parts.push("Q".to_string()),
            q => parts.push(format!("Q^{q}")),
        }
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        if !self.torsion.is_trivial() {
            parts.push(self.torsion.to_string());
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Outcome of [`AbGroupFQ::divisibility`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DivisibilityReport {
    pub is_i_divisible: bool,
    pub is_uniquely_i_divisible: bool,
    pub is_i_torsion_free: bool,
    pub is_i_bounded_torsion: bool,
}

/// The cokernel of an integer matrix, in canonical form.
///
/// `M` presents `Z^rows / image(M)`: the free rank is `rows - rank(M)` and
/// the torsion is read off the Smith normal form diagonal.
pub fn group_from_presentation(m: &Mat<BigInt>) -> AbGroupFQ {
    let snf = smith_normal_form(m);
    let free_rank = (m.rows() - snf.rank()) as u32;
    let factors = snf
        .nontrivial_factors()
        .into_iter()
        .map(|d| d.to_biguint().expect("SNF diagonal entries are nonnegative"))
        .collect();
    AbGroupFQ {
        q_rank: 0,
        free_rank,
        torsion: FinAbGroup { factors },
    }
}

// JSON wire form: {"q_rank": n, "free_rank": n, "invariant_factors": [d1, ...]}
// with factors as plain numbers; groups whose factors exceed u64 do not
// serialize.

impl Serialize for AbGroupFQ {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            q_rank: u32,
            free_rank: u32,
            invariant_factors: &'a [u64],
        }
        let factors: Vec<u64> = self
            .torsion
            .factors
            .iter()
            .map(|d| {
                d.to_u64()
                    .ok_or_else(|| S::Error::custom(format!("invariant factor {d} exceeds u64")))
            })
            .collect::<std::result::Result<_, _>>()?;
        Wire {
            q_rank: self.q_rank,
            free_rank: self.free_rank,
            invariant_factors: &factors,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for AbGroupFQ {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Wire {
            #[serde(default)]
            q_rank: u32,
            #[serde(default)]
            free_rank: u32,
            #[serde(default)]
            invariant_factors: Vec<u64>,
        }
        let wire = Wire::deserialize(deserializer)?;
        let torsion =
            FinAbGroup::from_invariant_factors(wire.invariant_factors.iter().map(|&d| BigUint::from(d)).collect())
                .map_err(|e| D::Error::custom(e.to_string()))?;
        Ok(AbGroupFQ {
            q_rank: wire.q_rank,
            free_rank: wire.free_rank,
            torsion,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fin(orders: &[u64]) -> FinAbGroup {
        FinAbGroup::from_orders(&orders.iter().map(|&n| BigUint::from(n)).collect::<Vec<_>>())
    }

    #[test]
    fn canonicalization() {
        assert_eq!(fin(&[4, 6]).invariant_factors(), &[BigUint::from(2u32), BigUint::from(12u32)]);
        assert_eq!(fin(&[2, 3]), FinAbGroup::cyclic(6));
        assert_eq!(fin(&[1, 1]), FinAbGroup::trivial());
        assert_eq!(fin(&[6, 4]), fin(&[4, 6]));
    }

    #[test]
    fn chain_validation() {
        let ok = FinAbGroup::from_invariant_factors(vec![BigUint::from(2u32), BigUint::from(4u32)]);
        assert!(ok.is_ok());
        let bad = FinAbGroup::from_invariant_factors(vec![BigUint::from(4u32), BigUint::from(6u32)]);
        assert!(bad.is_err());
        let below = FinAbGroup::from_invariant_factors(vec![BigUint::from(1u32)]);
        assert!(below.is_err());
    }

    #[test]
    fn presentation_examples() {
        let m = Mat::new(1, 1, vec![BigInt::from(2)]).unwrap();
        assert_eq!(group_from_presentation(&m), AbGroupFQ::finite(FinAbGroup::cyclic(2)));

        let m = Mat::diagonal(&[BigInt::from(2), BigInt::from(3)]);
        assert_eq!(group_from_presentation(&m), AbGroupFQ::finite(FinAbGroup::cyclic(6)));

        let m = Mat::new(1, 1, vec![BigInt::from(0)]).unwrap();
        assert_eq!(group_from_presentation(&m), AbGroupFQ::new(0, 1, FinAbGroup::trivial()));
    }

    #[test]
    fn torsion_operations() {
        let z6 = AbGroupFQ::finite(FinAbGroup::cyclic(6));
        assert_eq!(z6.m_torsion(4), AbGroupFQ::finite(FinAbGroup::cyclic(2)));
        assert_eq!(z6.mod_m(4), AbGroupFQ::finite(FinAbGroup::cyclic(2)));

        let qz = AbGroupFQ::new(1, 1, FinAbGroup::trivial());
        assert!(qz.m_torsion(5).is_trivial());

        let z12 = AbGroupFQ::finite(FinAbGroup::cyclic(12));
        assert_eq!(z12.m_torsion(12), z12);

        let z = AbGroupFQ::new(0, 1, FinAbGroup::trivial());
        assert_eq!(z.mod_m(7), AbGroupFQ::finite(FinAbGroup::cyclic(7)));

        let q2 = AbGroupFQ::new(2, 0, FinAbGroup::trivial());
        assert!(q2.mod_m(3).is_trivial());
    }

    #[test]
    fn primary_parts() {
        let z12 = AbGroupFQ::finite(FinAbGroup::cyclic(12));
        assert_eq!(z12.primary_part(2).unwrap(), FinAbGroup::cyclic(4));
        assert_eq!(z12.primary_part(5).unwrap(), FinAbGroup::trivial());
        let g = AbGroupFQ::finite(fin(&[2, 4]));
        assert_eq!(g.primary_part(2).unwrap(), fin(&[2, 4]));
        assert!(z12.primary_part(4).is_err());
    }

    #[test]
    fn divisibility_examples() {
        let i2 = PrimeSet::explicit([2]).unwrap();
        let g = AbGroupFQ::new(1, 0, FinAbGroup::cyclic(3));
        let r = g.divisibility(&i2);
        assert!(r.is_i_divisible && r.is_uniquely_i_divisible && r.is_i_torsion_free);
        assert!(!r.is_i_bounded_torsion);

        let z = AbGroupFQ::new(0, 1, FinAbGroup::trivial());
        let r = z.divisibility(&PrimeSet::all());
        assert!(!r.is_i_divisible && r.is_i_torsion_free);

        let z8 = AbGroupFQ::finite(FinAbGroup::cyclic(8));
        let r = z8.divisibility(&i2);
        assert!(r.is_i_bounded_torsion && !r.is_i_divisible);

        // Z/9 is not {3}-divisible: x3 is not surjective there
        let z9 = AbGroupFQ::finite(FinAbGroup::cyclic(9));
        let r = z9.divisibility(&PrimeSet::explicit([3]).unwrap());
        assert!(!r.is_i_divisible);

        let empty = PrimeSet::explicit([]).unwrap();
        let r = z8.divisibility(&empty);
        assert!(r.is_i_divisible && r.is_uniquely_i_divisible && r.is_i_torsion_free);
        assert!(!r.is_i_bounded_torsion);
        assert!(AbGroupFQ::trivial().divisibility(&empty).is_i_bounded_torsion);
    }

    #[test]
    fn prime_set_validation() {
        assert!(PrimeSet::explicit([2, 3, 5]).is_ok());
        assert_eq!(PrimeSet::explicit([4]), Err(Error::NotPrime(4)));
        assert!(PrimeSet::all().contains(7919));
    }

    #[test]
    fn display_forms() {
        let g = AbGroupFQ::new(2, 1, fin(&[2, 12]));
        assert_eq!(g.to_string(), "Q^2 + Z + Z/2 + Z/12");
        assert_eq!(AbGroupFQ::trivial().to_string(), "0");
    }

    #[test]
    fn json_round_trip() {
        let g = AbGroupFQ::new(1, 2, fin(&[2, 6]));
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(json, r#"{"q_rank":1,"free_rank":2,"invariant_factors":[2,6]}"#);
        let back: AbGroupFQ = serde_json::from_str(&json).unwrap();
        assert_eq!(back, g);
        let bad: std::result::Result<AbGroupFQ, _> =
            serde_json::from_str(r#"{"invariant_factors":[4,6]}"#);
        assert!(bad.is_err());
    }
}
