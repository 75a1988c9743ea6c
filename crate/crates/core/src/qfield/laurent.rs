//! Sparse Laurent polynomials in `q` with rational coefficients.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense exponent spans above this size fall back to sort-and-merge products.
const DENSE_PRODUCT_SPAN: i64 = 1 << 12;

/// A Laurent polynomial `sum c_k q^k` stored as `(k, c_k)` pairs sorted by
/// ascending exponent. No stored coefficient is zero; zero is the empty list.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent {
    terms: Vec<(i64, BigRational)>,
}

pub(crate) fn checked_exp(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("q-exponent overflow")
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(BigRational::one(), 0)
    }

    /// `c * q^k`.
    pub fn monomial(c: BigRational, k: i64) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Laurent {
                terms: vec![(k, c)],
            }
        }
    }

    pub fn q_pow(k: i64) -> Self {
        Self::monomial(BigRational::one(), k)
    }

    pub fn from_int(c: i64) -> Self {
        Self::monomial(BigRational::from_integer(BigInt::from(c)), 0)
    }

    /// Builds from arbitrary `(exponent, coefficient)` pairs, merging repeats.
    pub fn from_terms<I: IntoIterator<Item = (i64, BigRational)>>(terms: I) -> Self {
        let mut v: Vec<(i64, BigRational)> = terms.into_iter().collect();
        v.sort_by_key(|t| t.0);
        let mut out: Vec<(i64, BigRational)> = Vec::with_capacity(v.len());
        for (k, c) in v {
            match out.last_mut() {
                Some((lk, lc)) if *lk == k => *lc += c,
                _ => out.push((k, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        Laurent { terms: out }
    }

    pub fn terms(&self) -> &[(i64, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.first().map(|t| t.0)
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.last().map(|t| t.0)
    }

    /// Coefficient of the highest power of `q`.
    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.terms.last().map(|t| &t.1)
    }

    pub fn coeff(&self, k: i64) -> BigRational {
        match self.terms.binary_search_by_key(&k, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigRational::zero(),
        }
    }

    /// Single term `c q^k`, if the polynomial has exactly one.
    pub fn as_monomial(&self) -> Option<(i64, &BigRational)> {
        if self.terms.len() == 1 {
            Some((self.terms[0].0, &self.terms[0].1))
        } else {
            None
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if k == 0 {
            return self.clone();
        }
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (checked_exp(*e, k), c.clone()))
                .collect(),
        }
    }

    pub fn shift_in_place(&mut self, k: i64) {
        if k != 0 {
            for t in &mut self.terms {
                t.0 = checked_exp(t.0, k);
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Substitutes `q -> q^d`.
    pub fn substitute_power(&self, d: i64) -> Self {
        if d == 0 {
            let total = self
                .terms
                .iter()
                .fold(BigRational::zero(), |acc, t| acc + &t.1);
            return Self::monomial(total, 0);
        }
        Self::from_terms(
            self.terms
                .iter()
                .map(|(e, c)| (e.checked_mul(d).expect("q-exponent overflow"), c.clone())),
        )
    }

    pub fn neg(&self) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                Ordering::Greater
            } else if j == b.len() {
                Ordering::Less
            } else {
                a[i].0.cmp(&b[j].0)
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Laurent { terms: out }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if let Some((k, c)) = other.as_monomial() {
            let mut r = self.scale(c);
            r.shift_in_place(k);
            return r;
        }
        if let Some((k, c)) = self.as_monomial() {
            let mut r = other.scale(c);
            r.shift_in_place(k);
            return r;
        }
        let lo = checked_exp(self.terms[0].0, other.terms[0].0);
        let hi = checked_exp(self.terms[self.len() - 1].0, other.terms[other.len() - 1].0);
        let span = hi - lo + 1;
        if span <= DENSE_PRODUCT_SPAN {
            let mut acc = vec![BigRational::zero(); span as usize];
            for (ea, ca) in &self.terms {
                for (eb, cb) in &other.terms {
                    acc[(ea + eb - lo) as usize] += ca * cb;
                }
            }
            let terms = acc
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (lo + i as i64, c))
                .collect();
            Laurent { terms }
        } else {
            Self::from_terms(self.terms.iter().flat_map(|(ea, ca)| {
                other
                    .terms
                    .iter()
                    .map(move |(eb, cb)| (checked_exp(*ea, *eb), ca * cb))
            }))
        }
    }

    /// Exact evaluation at a nonzero rational point.
    pub fn eval(&self, q0: &BigRational) -> BigRational {
        let mut sum = BigRational::zero();
        for (e, c) in &self.terms {
            let p: i32 = (*e).try_into().expect("exponent too large to evaluate");
            sum += c * num_traits::pow::Pow::pow(q0, p);
        }
        sum
    }
}

pub(crate) fn fmt_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn fmt_power(k: i64) -> String {
    match k {
        0 => String::new(),
        1 => "q".to_string(),
        _ => format!("q^{k}"),
    }
}

impl fmt::Display for Laurent {
    /// Terms in descending exponent order, e.g. `q^3-q`, `2*q^2+1-1/2*q^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (k, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { "-" } else { "+" })?;
            }
            if *k == 0 {
                f.write_str(&fmt_rational(&abs))?;
            } else if abs.is_one() {
                f.write_str(&fmt_power(*k))?;
            } else {
                write!(f, "{}*{}", fmt_rational(&abs), fmt_power(*k))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn merge_cancels_to_empty() {
        let a = Laurent::from_terms([(1, r(1)), (-1, r(-1))]);
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.sub(&a).terms().len(), 0);
    }

    #[test]
    fn product_difference_of_squares() {
        let a = Laurent::from_terms([(1, r(1)), (-1, r(-1))]);
        let b = Laurent::from_terms([(1, r(1)), (-1, r(1))]);
        assert_eq!(a.mul(&b), Laurent::from_terms([(2, r(1)), (-2, r(-1))]));
    }

    #[test]
    fn display_matches_grammar() {
        let a = Laurent::from_terms([(3, r(1)), (1, r(-1))]);
        assert_eq!(a.to_string(), "q^3-q");
        let b = Laurent::from_terms([
            (2, r(2)),
            (0, r(1)),
            (-1, BigRational::new((-1).into(), 2.into())),
        ]);
        assert_eq!(b.to_string(), "2*q^2+1-1/2*q^-1");
        assert_eq!(Laurent::zero().to_string(), "0");
        assert_eq!(Laurent::q_pow(-1).neg().to_string(), "-q^-1");
    }

    #[test]
    fn substitute_power_doubles_exponents() {
        let a = Laurent::from_terms([(1, r(1)), (-1, r(1))]);
        assert_eq!(
            a.substitute_power(2),
            Laurent::from_terms([(2, r(1)), (-2, r(1))])
        );
    }

    #[test]
    #[should_panic(expected = "q-exponent overflow")]
    fn shift_overflow_is_hard_error() {
        Laurent::q_pow(i64::MAX).shift(1);
    }
}
