//! Brute-force enumeration oracles for small finite groups.
//!
//! These deliberately avoid the structural formulas used elsewhere in the
//! crate: elements are walked one by one, so the counts here serve as
//! independent cross-checks. Work is bounded by an element-pair budget;
//! exceeding it is an error, never a silent truncation.

use num_traits::ToPrimitive;
use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::group::FinAbGroup;

/// Default enumeration budget: 2^16 element-pairs.
pub const DEFAULT_BUDGET: u64 = 1 << 16;

/// Invariant factors as machine integers, available only under the budget.
fn small_factors(g: &FinAbGroup, budget: u64) -> Result<Vec<u64>> {
    let order = g.order();
    let required = order.to_u128().unwrap_or(u128::MAX);
    if required > budget as u128 {
        return Err(Error::BoundExceeded { required, budget });
    }
    Ok(g.invariant_factors()
        .iter()
        .map(|d| d.to_u64().expect("factors divide a budgeted order"))
        .collect())
}

fn order_of(factors: &[u64]) -> u64 {
    factors.iter().product()
}

/// Iterates all elements of `Z/d_1 + ... + Z/d_k` as coordinate tuples.
struct Elements {
    radices: Vec<u64>,
    current: Vec<u64>,
    done: bool,
}

impl Elements {
    fn new(radices: Vec<u64>) -> Self {
        let current = vec![0; radices.len()];
        Elements { radices, current, done: false }
    }
}

impl Iterator for Elements {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        self.done = true;
        for i in (0..self.radices.len()).rev() {
            self.current[i] += 1;
            if self.current[i] < self.radices[i] {
                self.done = false;
                break;
            }
            self.current[i] = 0;
        }
        Some(out)
    }
}

/// Counts elements `x` with `m * x = 0` by scanning the whole group.
pub fn m_torsion_count(g: &FinAbGroup, m: u64, budget: u64) -> Result<u64> {
    assert!(m >= 1, "m must be positive");
    let factors = small_factors(g, budget)?;
    let count = Elements::new(factors.clone())
        .filter(|x| kills(&factors, m, x))
        .count();
    Ok(count as u64)
}

/// Counts the cosets of `mA` in `A`: the image is enumerated, the index
/// follows by Lagrange.
pub fn mod_m_count(g: &FinAbGroup, m: u64, budget: u64) -> Result<u64> {
    assert!(m >= 1, "m must be positive");
    let factors = small_factors(g, budget)?;
    let mut image: HashSet<Vec<u64>> = HashSet::new();
    for x in Elements::new(factors.clone()) {
        let mx: Vec<u64> = x
            .iter()
            .zip(&factors)
            .map(|(&xi, &di)| ((m as u128 * xi as u128) % di as u128) as u64)
            .collect();
        image.insert(mx);
    }
    Ok(order_of(&factors) / image.len() as u64)
}

fn kills(factors: &[u64], m: u64, x: &[u64]) -> bool {
    x.iter()
        .zip(factors)
        .all(|(&xi, &di)| (m as u128 * xi as u128).is_multiple_of(di as u128))
}

/// Counts group homomorphisms `a -> b` by assigning an image to each
/// generator of `a` in turn and backtracking over the relations.
///
/// Requires `|a| * |b|` within the budget. The closed form
/// `prod_{i,j} gcd(d_i, e_j)` is the cross-check, not the implementation.
pub fn hom_count(a: &FinAbGroup, b: &FinAbGroup, budget: u64) -> Result<u64> {
    let required = a
        .order()
        .to_u128()
        .unwrap_or(u128::MAX)
        .saturating_mul(b.order().to_u128().unwrap_or(u128::MAX));
    if required > budget as u128 {
        return Err(Error::BoundExceeded { required, budget });
    }
    let a_factors = small_factors(a, budget)?;
    let b_factors = small_factors(b, budget)?;

    // per generator: which elements of b satisfy its relation d_i * y = 0
    let admissible: Vec<Vec<bool>> = a_factors
        .iter()
        .map(|&d| {
            Elements::new(b_factors.clone())
                .map(|y| kills(&b_factors, d, &y))
                .collect()
        })
        .collect();
    let b_order = order_of(&b_factors) as usize;

    fn walk(admissible: &[Vec<bool>], level: usize, b_order: usize, count: &mut u64) {
        if level == admissible.len() {
            *count += 1;
            return;
        }
        for y in 0..b_order {
            if admissible[level][y] {
                walk(admissible, level + 1, b_order, count);
            }
        }
    }

    let mut count = 0;
    walk(&admissible, 0, b_order, &mut count);
    Ok(count)
}

/// Counts I-torsion elements: those killed by `n`.
pub fn n_torsion_count(g: &FinAbGroup, n: u64, budget: u64) -> Result<u64> {
    m_torsion_count(g, n, budget)
}
