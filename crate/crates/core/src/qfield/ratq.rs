//! The field Q(q) of rational functions.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::Laurent;
use crate::error::{QsympError, Result};

/// A rational function `num / den` in canonical form.
///
/// `den` is an ordinary monic polynomial in `q` with nonzero constant term,
/// `gcd(num, den) = 1`, and any power of `q` lives in `num`. Two values are
/// equal exactly when their canonical forms coincide.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatQ {
    num: Laurent,
    den: Laurent,
}

impl RatQ {
    pub fn zero() -> Self {
        RatQ {
            num: Laurent::zero(),
            den: Laurent::one(),
        }
    }

    pub fn one() -> Self {
        RatQ::from_laurent(Laurent::one())
    }

    pub fn from_int(c: i64) -> Self {
        RatQ::from_laurent(Laurent::from_int(c))
    }

    pub fn from_rational(c: BigRational) -> Self {
        RatQ::from_laurent(Laurent::monomial(c, 0))
    }

    /// `q^k`.
    pub fn q_pow(k: i64) -> Self {
        RatQ::from_laurent(Laurent::q_pow(k))
    }

    /// `c * q^k` for an integer `c`.
    pub fn int_q_pow(c: i64, k: i64) -> Self {
        RatQ::from_laurent(Laurent::monomial(BigRational::from_integer(c.into()), k))
    }

    pub fn from_laurent(num: Laurent) -> Self {
        RatQ {
            num,
            den: Laurent::one(),
        }
    }

    /// Builds `num / den`, reducing to canonical form.
    pub fn from_fraction(num: Laurent, den: Laurent) -> Result<Self> {
        if den.is_zero() {
            return Err(QsympError::DivisionByZero);
        }
        Ok(canonicalize(num, den))
    }

    pub fn numer(&self) -> &Laurent {
        &self.num
    }

    pub fn denom(&self) -> &Laurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1, i.e. the value is a Laurent polynomial.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(QsympError::DivisionByZero);
        }
        Ok(canonicalize(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    /// Multiplies by `q^k`; cheap because powers of `q` live in the numerator.
    pub fn mul_q_pow(&self, k: i64) -> Self {
        RatQ {
            num: self.num.shift(k),
            den: self.den.clone(),
        }
    }

    pub fn mul_q_pow_in_place(&mut self, k: i64) {
        self.num.shift_in_place(k);
    }

    pub fn scale_rational(&self, c: &BigRational) -> Self {
        RatQ {
            num: self.num.scale(c),
            den: if c.is_zero() {
                Laurent::one()
            } else {
                self.den.clone()
            },
        }
    }

    /// Substitutes `q -> q^d` (`d != 0`).
    pub fn substitute_power(&self, d: i64) -> Self {
        assert!(d != 0, "substitution q -> q^0 is not a field map");
        canonicalize(self.num.substitute_power(d), self.den.substitute_power(d))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = RatQ::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Exact evaluation at a nonzero rational `q0`.
    pub fn eval_at(&self, q0: &BigRational) -> Result<BigRational> {
        if q0.is_zero() {
            return Err(QsympError::Pole(fmt_q0(q0)));
        }
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(QsympError::Pole(fmt_q0(q0)));
        }
        Ok(self.num.eval(q0) / d)
    }
}

fn fmt_q0(q0: &BigRational) -> String {
    super::laurent::fmt_rational(q0)
}

// ---------------------------------------------------------------------------
// canonical form
// ---------------------------------------------------------------------------

/// Dense polynomial, coefficient of `q^i` at index `i`, no trailing zeros.
type Dense = Vec<BigRational>;

fn to_dense(p: &Laurent, shift: i64) -> Dense {
    let top = p.max_exp().unwrap_or(0) - shift;
    let mut v = vec![BigRational::zero(); (top + 1).max(0) as usize];
    for (e, c) in p.terms() {
        v[(e - shift) as usize] = c.clone();
    }
    v
}

fn from_dense(v: &[BigRational], shift: i64) -> Laurent {
    Laurent::from_terms(
        v.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as i64 + shift, c.clone())),
    )
}

fn trim(v: &mut Dense) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Remainder of `a` modulo nonzero `b`.
fn rem(mut a: Dense, b: &Dense) -> Dense {
    let db = b.len() - 1;
    let lb = b[db].clone();
    trim(&mut a);
    while a.len() > db && !a.is_empty() {
        let shift = a.len() - 1 - db;
        let factor = a.last().unwrap() / &lb;
        for (i, c) in b.iter().enumerate() {
            if !c.is_zero() {
                a[shift + i] -= &factor * c;
            }
        }
        a.pop();
        trim(&mut a);
    }
    a
}

/// Exact quotient `a / b`, assuming `b | a`.
fn div_exact(a: &Dense, b: &Dense) -> Dense {
    let mut a = a.clone();
    trim(&mut a);
    let db = b.len() - 1;
    if a.len() <= db {
        return Vec::new();
    }
    let lb = b[db].clone();
    let mut quot = vec![BigRational::zero(); a.len() - db];
    while a.len() > db {
        let shift = a.len() - 1 - db;
        let factor = a.last().unwrap() / &lb;
        for (i, c) in b.iter().enumerate() {
            if !c.is_zero() {
                a[shift + i] -= &factor * c;
            }
        }
        quot[shift] = factor;
        a.pop();
        trim(&mut a);
    }
    debug_assert!(a.is_empty(), "inexact polynomial division");
    quot
}

fn make_monic(v: &mut Dense) {
    if let Some(l) = v.last().cloned() {
        if !l.is_one() {
            for c in v.iter_mut() {
                *c /= &l;
            }
        }
    }
}

/// Monic gcd over Q.
fn gcd(a: Dense, b: Dense) -> Dense {
    let (mut a, mut b) = (a, b);
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let mut r = rem(a, &b);
        make_monic(&mut r);
        a = b;
        b = r;
    }
    make_monic(&mut a);
    a
}

fn canonicalize(mut num: Laurent, mut den: Laurent) -> RatQ {
    debug_assert!(!den.is_zero());
    if num.is_zero() {
        return RatQ::zero();
    }
    let dmin = den.min_exp().unwrap();
    if dmin != 0 {
        den.shift_in_place(-dmin);
        num.shift_in_place(-dmin);
    }
    if den.len() == 1 {
        // constant denominator
        let c = den.terms()[0].1.clone();
        if !c.is_one() {
            num = num.scale(&c.recip());
        }
        return RatQ {
            num,
            den: Laurent::one(),
        };
    }
    let nmin = num.min_exp().unwrap();
    let nd = to_dense(&num, nmin);
    let dd = to_dense(&den, 0);
    let g = gcd(nd.clone(), dd.clone());
    let (nd, mut dd) = if g.len() > 1 {
        (div_exact(&nd, &g), div_exact(&dd, &g))
    } else {
        (nd, dd)
    };
    let lead = dd.last().unwrap().clone();
    let mut nd = nd;
    if !lead.is_one() {
        for c in nd.iter_mut() {
            *c /= &lead;
        }
        for c in dd.iter_mut() {
            *c /= &lead;
        }
    }
    RatQ {
        num: from_dense(&nd, nmin),
        den: from_dense(&dd, 0),
    }
}

// ---------------------------------------------------------------------------
// arithmetic
// ---------------------------------------------------------------------------

fn add_impl(a: &RatQ, b: &RatQ, negate: bool) -> RatQ {
    let bn = if negate { b.num.neg() } else { b.num.clone() };
    if a.is_zero() {
        return RatQ {
            num: bn,
            den: b.den.clone(),
        };
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.den.is_one() && b.den.is_one() {
        return RatQ::from_laurent(a.num.add(&bn));
    }
    if a.den == b.den {
        return canonicalize(a.num.add(&bn), a.den.clone());
    }
    let num = a.num.mul(&b.den).add(&bn.mul(&a.den));
    canonicalize(num, a.den.mul(&b.den))
}

fn mul_impl(a: &RatQ, b: &RatQ) -> RatQ {
    if a.is_zero() || b.is_zero() {
        return RatQ::zero();
    }
    if a.den.is_one() && b.den.is_one() {
        return RatQ::from_laurent(a.num.mul(&b.num));
    }
    if let Some((k, c)) = b.num.as_monomial() {
        if b.den.is_one() {
            let mut r = a.scale_rational(c);
            r.mul_q_pow_in_place(k);
            return r;
        }
    }
    if let Some((k, c)) = a.num.as_monomial() {
        if a.den.is_one() {
            let mut r = b.scale_rational(c);
            r.mul_q_pow_in_place(k);
            return r;
        }
    }
    canonicalize(a.num.mul(&b.num), a.den.mul(&b.den))
}

impl Add for &RatQ {
    type Output = RatQ;
    fn add(self, rhs: &RatQ) -> RatQ {
        add_impl(self, rhs, false)
    }
}

impl Sub for &RatQ {
    type Output = RatQ;
    fn sub(self, rhs: &RatQ) -> RatQ {
        add_impl(self, rhs, true)
    }
}

impl Mul for &RatQ {
    type Output = RatQ;
    fn mul(self, rhs: &RatQ) -> RatQ {
        mul_impl(self, rhs)
    }
}

impl Neg for &RatQ {
    type Output = RatQ;
    fn neg(self) -> RatQ {
        RatQ {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Add for RatQ {
    type Output = RatQ;
    fn add(self, rhs: RatQ) -> RatQ {
        &self + &rhs
    }
}

impl Sub for RatQ {
    type Output = RatQ;
    fn sub(self, rhs: RatQ) -> RatQ {
        &self - &rhs
    }
}

impl Mul for RatQ {
    type Output = RatQ;
    fn mul(self, rhs: RatQ) -> RatQ {
        &self * &rhs
    }
}

impl Neg for RatQ {
    type Output = RatQ;
    fn neg(mut self) -> RatQ {
        self.num = self.num.neg();
        self
    }
}

impl AddAssign<&RatQ> for RatQ {
    fn add_assign(&mut self, rhs: &RatQ) {
        if self.den.is_one() && rhs.den.is_one() {
            self.num = self.num.add(&rhs.num);
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&RatQ> for RatQ {
    fn sub_assign(&mut self, rhs: &RatQ) {
        if self.den.is_one() && rhs.den.is_one() {
            self.num = self.num.sub(&rhs.num);
        } else {
            *self = &*self - rhs;
        }
    }
}

impl From<i64> for RatQ {
    fn from(c: i64) -> Self {
        RatQ::from_int(c)
    }
}

impl From<BigInt> for RatQ {
    fn from(c: BigInt) -> Self {
        RatQ::from_rational(BigRational::from_integer(c))
    }
}

impl From<Laurent> for RatQ {
    fn from(p: Laurent) -> Self {
        RatQ::from_laurent(p)
    }
}

impl fmt::Display for RatQ {
    /// `num` alone when the denominator is 1, otherwise `(num)/(den)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatQ({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam() -> RatQ {
        RatQ::q_pow(1) - RatQ::q_pow(-1)
    }

    #[test]
    fn difference_of_squares() {
        let plus = RatQ::q_pow(1) + RatQ::q_pow(-1);
        assert_eq!(&lam() * &plus, RatQ::q_pow(2) - RatQ::q_pow(-2));
    }

    #[test]
    fn inverse_of_lambda() {
        let inv = lam().inv().unwrap();
        assert!(!inv.is_laurent());
        assert_eq!(&inv * &lam(), RatQ::one());
    }

    #[test]
    fn gcd_reduction() {
        let num = Laurent::from_terms(
            [(2, 1.into()), (0, (-1).into())]
                .map(|(e, c): (i64, i64)| (e, BigRational::from_integer(c.into()))),
        );
        let den = Laurent::from_terms(
            [(1, 1i64), (0, -1)].map(|(e, c)| (e, BigRational::from_integer(c.into()))),
        );
        let r = RatQ::from_fraction(num, den).unwrap();
        assert_eq!(r, RatQ::q_pow(1) + RatQ::one());
        assert!(r.is_laurent());
    }

    #[test]
    fn inverse_of_zero_is_error() {
        let err = RatQ::zero().inv().unwrap_err();
        assert_eq!(err.to_string(), "division by zero in ℚ(q)");
    }

    #[test]
    fn canonical_denominator_is_monic_with_constant_term() {
        // 1/(2q^3 + 2q) = q^-1 * (1/2) / (q^2 + 1)
        let den = RatQ::int_q_pow(2, 3) + RatQ::int_q_pow(2, 1);
        let r = den.inv().unwrap();
        assert_eq!(r.denom().to_string(), "q^2+1");
        assert_eq!(r.numer().to_string(), "1/2*q^-1");
        assert_eq!(r.to_string(), "(1/2*q^-1)/(q^2+1)");
    }

    #[test]
    fn eval_pole_is_error() {
        let r = (RatQ::q_pow(1) - RatQ::one()).inv().unwrap();
        assert!(r.eval_at(&BigRational::one()).is_err());
        assert!(RatQ::one().eval_at(&BigRational::zero()).is_err());
    }
}
