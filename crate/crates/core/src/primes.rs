//! Prime utilities: deterministic primality, sieving, exact factorization.
//!
//! Everything here is deterministic. Primality of `u64` values uses the
//! Miller–Rabin test with a fixed witness set that is exact for the whole
//! `u64` range; iteration over small primes uses a plain sieve.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use std::collections::BTreeMap;

/// Sieve of Eratosthenes: all primes `<= limit`, ascending.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for p in 2..=n {
        if !composite[p] {
            out.push(p as u64);
            let mut q = p * p;
            while q <= n {
                composite[q] = true;
                q += p;
            }
        }
    }
    out
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc: u64 = 1;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for `u64`.
///
/// The witness set {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37} decides
/// primality exactly for all `n < 3.3 * 10^24`, which covers `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Largest `e` with `p^e | n`, by repeated division. Requires `n >= 1`.
pub fn padic_valuation_u64(p: u64, n: u64) -> u32 {
    assert!(p >= 2, "p must be at least 2");
    assert!(n >= 1, "valuation of 0 is infinite");
    let mut n = n;
    let mut e = 0;
    while n.is_multiple_of(p) {
        n /= p;
        e += 1;
    }
    e
}

/// Largest `e` with `p^e | n` for a big natural number `n >= 1`.
pub fn padic_valuation_big(p: u64, n: &BigUint) -> u32 {
    assert!(p >= 2, "p must be at least 2");
    assert!(!n.is_zero(), "valuation of 0 is infinite");
    let p = BigUint::from(p);
    let mut n = n.clone();
    let mut e = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return e;
        }
        n = q;
        e += 1;
    }
}

/// Exact factorization of a `u64`, as `prime -> exponent`.
pub fn factorize_u64(n: u64) -> BTreeMap<u64, u32> {
    assert!(n >= 1, "cannot factorize 0");
    let mut out = BTreeMap::new();
    let mut n = n;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.insert(p, e);
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.insert(n, 1);
    }
    out
}

/// Exact factorization of a big natural number `n >= 1`.
///
/// Trial division by primes up to 2^16 strips all small factors (and fully
/// factors anything below 2^32); remaining cofactors are split with Brent's
/// cycle-finding rho using a fixed parameter schedule, so the whole routine
/// is deterministic. Large semiprime cofactors cost time, not correctness.
pub fn factorize_big(n: &BigUint) -> BTreeMap<u64, BigUintExp> {
    assert!(!n.is_zero(), "cannot factorize 0");
    let mut out: BTreeMap<u64, BigUintExp> = BTreeMap::new();
    let mut n = n.clone();
    for p in primes_up_to(1 << 16) {
        if n.is_one() {
            break;
        }
        let bp = BigUint::from(p);
        loop {
            let (q, r) = n.div_rem(&bp);
            if !r.is_zero() {
                break;
            }
            n = q;
            *out.entry(p).or_insert(0) += 1;
        }
    }
    if !n.is_one() {
        split_cofactor(&n, &mut out);
    }
    out
}

type BigUintExp = u32;

fn split_cofactor(n: &BigUint, out: &mut BTreeMap<u64, BigUintExp>) {
    // cofactor has no prime factor below 2^16
    if let Some(small) = n.to_u64() {
        // no factor below 2^16 and n <= u64: at most two primes remain
        if is_prime(small) {
            *out.entry(small).or_insert(0) += 1;
            return;
        }
        let d = rho_u64(small);
        *out.entry(d).or_insert(0) += 1;
        *out.entry(small / d).or_insert(0) += 1;
        return;
    }
    if is_probable_prime_big(n) {
        panic!("prime factor {n} does not fit in 64 bits; such torsion orders are unsupported");
    }
    let d = rho_big(n);
    split_cofactor(&d, out);
    split_cofactor(&(n / &d), out);
}

fn rho_u64(n: u64) -> u64 {
    debug_assert!(n > 1 && !is_prime(n));
    for c in 1..64u64 {
        if let Some(d) = rho_round_u64(n, c) {
            if is_prime(d) {
                return d;
            }
            return rho_u64(d);
        }
    }
    unreachable!("rho failed to split {n}");
}

fn rho_round_u64(n: u64, c: u64) -> Option<u64> {
    let f = |x: u64| (mulmod(x, x, n) + c) % n;
    let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
    while d == 1 {
        x = f(x);
        y = f(f(y));
        d = num_integer::gcd(x.abs_diff(y), n);
    }
    (d != n).then_some(d)
}

fn is_probable_prime_big(n: &BigUint) -> bool {
    // Miller-Rabin with the first 25 prime witnesses; only consulted for
    // cofactors > 2^64 with no factor below 2^16
    let one = BigUint::one();
    let two = BigUint::from(2u32);
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for a in primes_up_to(100) {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn rho_big(n: &BigUint) -> BigUint {
    let one = BigUint::one();
    for c in 1u64..64 {
        let c = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut x = BigUint::from(2u32);
        let mut y = x.clone();
        loop {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            let d = diff.gcd(n);
            if d == one {
                continue;
            }
            if &d != n {
                return d;
            }
            break;
        }
    }
    unreachable!("rho failed to split {n}");
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sieve_small() {
        assert_eq!(primes_up_to(1), Vec::<u64>::new());
        assert_eq!(primes_up_to(2), vec![2]);
        assert_eq!(primes_up_to(20), vec![2, 3, 5, 7, 11, 13, 17, 19]);
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(!is_prime(1));
        assert!(!is_prime(0));
        assert!(!is_prime(4095));
        assert!(is_prime(4099));
        assert!(is_prime(2_147_483_647)); // 2^31 - 1
        assert!(!is_prime(2_147_483_649));
    }

    #[test]
    fn valuations() {
        assert_eq!(padic_valuation_u64(2, 48), 4);
        assert_eq!(padic_valuation_u64(5, 48), 0);
        assert_eq!(padic_valuation_u64(3, 27), 3);
        assert_eq!(padic_valuation_big(2, &BigUint::from(48u32)), 4);
    }

    #[test]
    fn factorize_small() {
        let f = factorize_u64(360);
        assert_eq!(f.get(&2), Some(&3));
        assert_eq!(f.get(&3), Some(&2));
        assert_eq!(f.get(&5), Some(&1));
        assert_eq!(factorize_u64(1).len(), 0);
    }

    #[test]
    fn factorize_big_matches_small() {
        let n = BigUint::from(2u32).pow(20) * BigUint::from(3u32).pow(7) * BigUint::from(65537u32);
        let f = factorize_big(&n);
        assert_eq!(f.get(&2), Some(&20));
        assert_eq!(f.get(&3), Some(&7));
        assert_eq!(f.get(&65537), Some(&1));
    }

    #[test]
    fn factorize_big_semiprime_above_sieve() {
        // both factors exceed the 2^16 trial-division bound
        let p = 2_147_483_647u64;
        let q = 67_280_421_310_721u64;
        let n = BigUint::from(p) * BigUint::from(q);
        let f = factorize_big(&n);
        assert_eq!(f.get(&p), Some(&1));
        assert_eq!(f.get(&q), Some(&1));
    }
}
