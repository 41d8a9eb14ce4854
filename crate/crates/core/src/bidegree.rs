//! Bigrading conventions for motivic spheres.
//!
//! Stem-weight `(s, w)` and coweight-weight `(c, w)` label the same
//! bidegree through `s = c + w`; the weight coordinate is shared. The
//! conversion is a bijection and its own inverse composed with itself.

use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Convention {
    StemWeight,
    CoweightWeight,
}

/// A point in one of the two bigrading conventions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Bidegree {
    pub convention: Convention,
    pub first: i64,
    pub second: i64,
}

impl Bidegree {
    pub fn stem_weight(s: i64, w: i64) -> Self {
        Bidegree { convention: Convention::StemWeight, first: s, second: w }
    }

    pub fn coweight_weight(c: i64, w: i64) -> Self {
        Bidegree { convention: Convention::CoweightWeight, first: c, second: w }
    }

    /// Rewrites the bidegree in the requested convention.
    pub fn convert(&self, target: Convention) -> Bidegree {
        match (self.convention, target) {
            (Convention::StemWeight, Convention::CoweightWeight) => {
                Bidegree::coweight_weight(self.first - self.second, self.second)
            }
            (Convention::CoweightWeight, Convention::StemWeight) => {
                Bidegree::stem_weight(self.first + self.second, self.second)
            }
            _ => *self,
        }
    }

    /// The stem coordinate, regardless of stored convention.
    pub fn stem(&self) -> i64 {
        match self.convention {
            Convention::StemWeight => self.first,
            Convention::CoweightWeight => self.first + self.second,
        }
    }

    pub fn weight(&self) -> i64 {
        self.second
    }

    pub fn coweight(&self) -> i64 {
        self.stem() - self.weight()
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.convention {
            Convention::StemWeight => write!(f, "({}, {})", self.first, self.second),
            Convention::CoweightWeight => write!(f, "{} + {}a", self.first, self.second),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conversion_examples() {
        let b = Bidegree::coweight_weight(3, 5).convert(Convention::StemWeight);
        assert_eq!(b, Bidegree::stem_weight(8, 5));

        let origin = Bidegree::stem_weight(0, 0);
        assert_eq!(origin.convert(Convention::CoweightWeight), Bidegree::coweight_weight(0, 0));

        let b = Bidegree::stem_weight(-1, -2).convert(Convention::CoweightWeight);
        assert_eq!(b, Bidegree::coweight_weight(1, -2));
    }

    #[test]
    fn round_trip_is_identity() {
        for s in -5..=5 {
            for w in -5..=5 {
                let b = Bidegree::stem_weight(s, w);
                assert_eq!(b.convert(Convention::CoweightWeight).convert(Convention::StemWeight), b);
                assert_eq!(b.convert(Convention::StemWeight), b);
            }
        }
    }

    #[test]
    fn coordinates() {
        let b = Bidegree::coweight_weight(2, -3);
        assert_eq!(b.stem(), -1);
        assert_eq!(b.weight(), -3);
        assert_eq!(b.coweight(), 2);
    }
}
