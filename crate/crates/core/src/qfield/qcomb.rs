//! q-integers, q-factorials and q-binomial coefficients.

use super::laurent::Laurent;
use super::ratq::RatQ;
use crate::error::{QsympError, Result};

/// `[m]_q = (q^m - q^-m) / (q - q^-1)`, expanded as the Laurent polynomial
/// `q^{m-1} + q^{m-3} + ... + q^{1-m}` (negated for `m < 0`).
pub fn qint(m: i64) -> RatQ {
    RatQ::from_laurent(qint_laurent(m))
}

pub(crate) fn qint_laurent(m: i64) -> Laurent {
    let k = m.abs();
    let sign: i64 = if m < 0 { -1 } else { 1 };
    let c = num_rational::BigRational::from_integer(sign.into());
    Laurent::from_terms((0..k).map(|t| (k - 1 - 2 * t, c.clone())))
}

/// `[m]_{q^d}`.
pub fn qint_base(m: i64, d: i64) -> RatQ {
    RatQ::from_laurent(qint_laurent(m).substitute_power(d))
}

/// `[m]_q! = [1]_q [2]_q ... [m]_q`, with `[0]_q! = 1`.
pub fn qfact(m: i64) -> Result<RatQ> {
    if m < 0 {
        return Err(QsympError::NegativeFactorial(m));
    }
    Ok((1..=m).fold(RatQ::one(), |acc, t| &acc * &qint(t)))
}

/// Gaussian binomial `[m choose k]_q` for any integer `m` and `k >= 0`.
pub fn qbinom(m: i64, k: i64) -> Result<RatQ> {
    if k < 0 {
        return Err(QsympError::NegativeBinomialIndex(k));
    }
    let top = (0..k).fold(RatQ::one(), |acc, t| &acc * &qint(m - t));
    top.checked_div(&qfact(k)?)
}

/// `[m choose k]_{q^d}`.
pub fn qbinom_base(m: i64, k: i64, d: i64) -> Result<RatQ> {
    Ok(qbinom(m, k)?.substitute_power(d))
}

/// `lambda = q - q^-1`.
pub fn lambda() -> RatQ {
    &RatQ::q_pow(1) - &RatQ::q_pow(-1)
}
