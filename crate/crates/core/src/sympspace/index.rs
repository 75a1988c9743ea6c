use std::fmt;

use crate::error::{QsympError, Result};

/// The rank `n >= 2`; generators are indexed by `{-n, ..., -1, 1, ..., n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rank(usize);

impl Rank {
    pub fn new(n: i64) -> Result<Rank> {
        if n < 2 {
            return Err(QsympError::InvalidRank(n));
        }
        Ok(Rank(n as usize))
    }

    pub fn get(self) -> usize {
        self.0
    }

    pub fn n(self) -> i32 {
        self.0 as i32
    }

    /// Number of generators, `2n`.
    pub fn dim(self) -> usize {
        2 * self.0
    }

    /// All indices in increasing order `-n < ... < -1 < 1 < ... < n`.
    pub fn indices(self) -> impl Iterator<Item = Index> {
        let n = self.n();
        (-n..=n).filter(|&i| i != 0).map(Index)
    }

    pub fn index(self, i: i64) -> Result<Index> {
        if i == 0 || i.unsigned_abs() as usize > self.0 {
            return Err(QsympError::InvalidIndex {
                index: i,
                rank: self.0,
            });
        }
        Ok(Index(i as i32))
    }

    /// Storage position of index `i` in an exponent vector.
    #[inline]
    pub fn pos(self, i: i32) -> usize {
        debug_assert!(i != 0 && i.unsigned_abs() as usize <= self.0);
        if i < 0 {
            (i + self.n()) as usize
        } else {
            (i + self.n() - 1) as usize
        }
    }

    /// Index stored at position `p`.
    #[inline]
    pub fn index_at(self, p: usize) -> i32 {
        let n = self.n();
        let p = p as i32;
        if p < n {
            p - n
        } else {
            p - n + 1
        }
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A generator index; nonzero, ordered as integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Index(pub(crate) i32);

impl Index {
    pub fn get(self) -> i32 {
        self.0
    }

    pub fn is_negative(self) -> bool {
        self.0 < 0
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_below_two_rejected() {
        assert!(Rank::new(1).is_err());
        assert!(Rank::new(2).is_ok());
    }

    #[test]
    fn positions_round_trip() {
        let r = Rank::new(3).unwrap();
        let idx: Vec<i32> = r.indices().map(Index::get).collect();
        assert_eq!(idx, vec![-3, -2, -1, 1, 2, 3]);
        for (p, i) in idx.iter().enumerate() {
            assert_eq!(r.pos(*i), p);
            assert_eq!(r.index_at(p), *i);
        }
        assert!(r.index(0).is_err());
        assert!(r.index(4).is_err());
        assert!(r.index(-3).is_ok());
    }
}
