use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use super::index::Rank;
use super::monomial::Monomial;
use crate::error::{QsympError, Result};
use crate::qfield::RatQ;

/// A finite linear combination of normal monomials with `Q(q)` coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Element {
    rank: Rank,
    terms: BTreeMap<Monomial, RatQ>,
}

impl Element {
    pub fn zero(rank: Rank) -> Self {
        Element {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: Rank) -> Self {
        Self::from_monomial(Monomial::one(rank), RatQ::one())
    }

    pub fn from_monomial(m: Monomial, c: RatQ) -> Self {
        let rank = m.rank();
        let mut e = Self::zero(rank);
        e.add_term(m, &c);
        e
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::from_monomial(m, RatQ::one())
    }

    /// The generator `x_i`.
    pub fn generator(rank: Rank, i: i32) -> Self {
        Self::monomial(Monomial::generator(rank, i))
    }

    pub fn constant(rank: Rank, c: RatQ) -> Self {
        Self::from_monomial(Monomial::one(rank), c)
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &RatQ)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> RatQ {
        self.terms.get(m).cloned().unwrap_or_else(RatQ::zero)
    }

    /// First monomial in storage order, if any.
    pub fn first_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next()
    }

    pub fn add_term(&mut self, m: Monomial, c: &RatQ) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.exps().len(), self.rank.dim());
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Element, c: &RatQ) {
        if c.is_zero() {
            return;
        }
        let unit = c.is_one();
        for (m, x) in &other.terms {
            if unit {
                self.add_term(m.clone(), x);
            } else {
                self.add_term(m.clone(), &(x * c));
            }
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut r = self.clone();
        r.add_scaled(other, &RatQ::one());
        r
    }

    pub fn sub(&self, other: &Element) -> Element {
        let mut r = self.clone();
        r.add_scaled(other, &RatQ::from_int(-1));
        r
    }

    pub fn scale(&self, c: &RatQ) -> Element {
        if c.is_zero() {
            return Element::zero(self.rank);
        }
        Element {
            rank: self.rank,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn neg(&self) -> Element {
        self.scale(&RatQ::from_int(-1))
    }

    /// Applies `f` to every basis monomial and sums the results linearly.
    pub fn map_linear<F>(&self, mut f: F) -> Element
    where
        F: FnMut(&Monomial, &mut Element, &RatQ),
    {
        let mut out = Element::zero(self.rank);
        for (m, c) in &self.terms {
            f(m, &mut out, c);
        }
        out
    }

    /// True when every term has total degree `d`.
    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub fn check_rank(&self, other: &Element) -> Result<()> {
        if self.rank != other.rank {
            return Err(QsympError::RankMismatch(self.rank.get(), other.rank.get()));
        }
        Ok(())
    }

    /// Terms in display order.
    pub fn display_terms(&self) -> Vec<(&Monomial, &RatQ)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.display_cmp(b.0, self.rank));
        v
    }

    /// Canonical text form, e.g. `q^2 * x(-1)x(1) + (q^3-q) * x(-2)x(2)`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.display_terms().into_iter().enumerate() {
            let term = render_term(m, c, self.rank);
            let (neg, body) = match term.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, term),
            };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        out
    }
}

/// Renders `c * m`; a leading `-` marks a negative single-term coefficient.
fn render_term(m: &Monomial, c: &RatQ, rank: Rank) -> String {
    let mono = m.render(rank);
    let is_unit_mono = m.degree() == 0;
    let simple = c.is_laurent() && c.numer().len() == 1;
    let coeff = if simple {
        c.numer().to_string()
    } else if c.is_laurent() {
        format!("({})", c.numer())
    } else {
        c.to_string()
    };
    if is_unit_mono {
        return coeff;
    }
    if c.is_one() {
        mono
    } else if c == &RatQ::from_int(-1) {
        format!("-{mono}")
    } else {
        format!("{coeff} * {mono}")
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element[n={}]({})", self.rank, self.render())
    }
}
