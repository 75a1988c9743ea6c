use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use super::index::Rank;

pub(crate) type Exps = SmallVec<[u32; 8]>;

/// A normal monomial `x_{-n}^{a_{-n}} ... x_n^{a_n}`, stored positionally as
/// `(a_{-n}, ..., a_{-1}, a_1, ..., a_n)`.
///
/// The derived `Ord` is lexicographic on the exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Exps,
}

impl Monomial {
    pub fn one(rank: Rank) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, rank.dim()),
        }
    }

    pub fn from_exps(exps: &[u32]) -> Self {
        Monomial {
            exps: SmallVec::from_slice(exps),
        }
    }

    /// The single generator `x_i`.
    pub fn generator(rank: Rank, i: i32) -> Self {
        let mut m = Self::one(rank);
        m.exps[rank.pos(i)] = 1;
        m
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn rank(&self) -> Rank {
        Rank::new((self.exps.len() / 2) as i64).expect("monomial of invalid rank")
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Exponent `a_i` of index `i`.
    #[inline]
    pub fn exp(&self, rank: Rank, i: i32) -> u32 {
        self.exps[rank.pos(i)]
    }

    /// `a + delta * eps_i`; `None` if an exponent would become negative.
    pub fn shifted(&self, rank: Rank, i: i32, delta: i32) -> Option<Monomial> {
        let p = rank.pos(i);
        let v = self.exps[p] as i64 + delta as i64;
        if v < 0 {
            return None;
        }
        let mut m = self.clone();
        m.exps[p] = v as u32;
        Some(m)
    }

    pub(crate) fn bump(&mut self, rank: Rank, i: i32, delta: i32) {
        let p = rank.pos(i);
        self.exps[p] = (self.exps[p] as i64 + delta as i64) as u32;
    }

    /// Sum of exponents over indices `lo..=hi` (integer order, zero skipped).
    pub fn exp_sum(&self, rank: Rank, lo: i32, hi: i32) -> i64 {
        let n = rank.n();
        let lo = lo.max(-n);
        let hi = hi.min(n);
        if lo > hi {
            return 0;
        }
        (lo..=hi)
            .filter(|&i| i != 0)
            .map(|i| self.exps[rank.pos(i)] as i64)
            .sum()
    }

    /// The sorted index word `x_{w1} x_{w2} ...` of this monomial.
    pub fn word(&self, rank: Rank) -> Vec<i32> {
        let mut w = Vec::with_capacity(self.degree() as usize);
        for (p, &e) in self.exps.iter().enumerate() {
            for _ in 0..e {
                w.push(rank.index_at(p));
            }
        }
        w
    }

    /// Display order: descending lexicographic order of index words.
    pub fn display_cmp(&self, other: &Monomial, rank: Rank) -> Ordering {
        other.word(rank).cmp(&self.word(rank))
    }

    pub fn render(&self, rank: Rank) -> String {
        if self.degree() == 0 {
            return "1".to_string();
        }
        let mut s = String::new();
        for (p, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => s.push_str(&format!("x({})", rank.index_at(p))),
                _ => s.push_str(&format!("x({})^{}", rank.index_at(p), e)),
            }
        }
        s
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rank = Rank::new((self.exps.len() / 2).max(2) as i64).unwrap();
        if self.exps.len() == rank.dim() {
            write!(f, "{}", self.render(rank))
        } else {
            write!(f, "{:?}", self.exps.as_slice())
        }
    }
}
