//! Closed-form normal ordering: multiplication of a normal monomial by a
//! single generator on either side, and the `Omega_i x^a` expansion.

use super::element::Element;
use super::index::{Index, Rank};
use super::monomial::Monomial;
use crate::error::Result;
use crate::qfield::RatQ;

/// `q^e * (q^m - q^-m)`, i.e. `q^e * lambda * [m]_q`.
fn lambda_qint(e: i64, m: i64) -> RatQ {
    &RatQ::q_pow(e + m) - &RatQ::q_pow(e - m)
}

/// `Omega_t x^b` expanded into normal monomials, each scaled by `c`.
/// `Omega_{n+1} = 0`.
pub(crate) fn omega_times_monomial(rank: Rank, t: i32, b: &Monomial, c: &RatQ, out: &mut Element) {
    let n = rank.n();
    if t > n {
        return;
    }
    let outer = 2 * b.exp_sum(rank, -n, -t);
    for j in t..=n {
        let inner = b.exp_sum(rank, 1 - j, j - 1);
        let e = outer + (j - t) as i64 + inner;
        let mut m = b.clone();
        m.bump(rank, -j, 1);
        m.bump(rank, j, 1);
        out.add_term(m, &c.mul_q_pow(e));
    }
}

/// Accumulates `c * x_k x^a` into `out`.
pub(crate) fn left_mul_monomial(rank: Rank, k: i32, a: &Monomial, c: &RatQ, out: &mut Element) {
    let n = rank.n();
    if k < 0 {
        let i = -k;
        let e = a.exp_sum(rank, -n, -i - 1);
        let mut m = a.clone();
        m.bump(rank, k, 1);
        out.add_term(m, &c.mul_q_pow(e));
        return;
    }
    let i = k;
    let a_neg = a.exp(rank, -i) as i64;
    let e1 = a.exp_sum(rank, -n, i - 1) + a_neg;
    let mut m = a.clone();
    m.bump(rank, i, 1);
    out.add_term(m, &c.mul_q_pow(e1));
    if a_neg > 0 && i < n {
        let e2 = -a.exp_sum(rank, -n, -i - 1) + a_neg + 1;
        let coeff = c * &lambda_qint(e2, a_neg);
        let mut b = a.clone();
        b.bump(rank, -i, -1);
        omega_times_monomial(rank, i + 1, &b, &coeff, out);
    }
}

/// Accumulates `c * x^a x_k` into `out`.
pub(crate) fn right_mul_monomial(rank: Rank, k: i32, a: &Monomial, c: &RatQ, out: &mut Element) {
    let n = rank.n();
    if k > 0 {
        let i = k;
        let e = a.exp_sum(rank, i + 1, n);
        let mut m = a.clone();
        m.bump(rank, k, 1);
        out.add_term(m, &c.mul_q_pow(e));
        return;
    }
    let i = -k;
    let a_pos = a.exp(rank, i) as i64;
    let e1 = a.exp_sum(rank, 1 - i, n) + a_pos;
    let mut m = a.clone();
    m.bump(rank, -i, 1);
    out.add_term(m, &c.mul_q_pow(e1));
    if a_pos > 0 && i < n {
        let e2 = a.exp_sum(rank, i, n) - 2 * a.exp_sum(rank, -n, -i - 1) + 1;
        let coeff = c * &lambda_qint(e2, a_pos);
        let mut b = a.clone();
        b.bump(rank, i, -1);
        omega_times_monomial(rank, i + 1, &b, &coeff, out);
    }
}

/// Normal form of `x_k * e`.
pub fn left_mul_gen(k: Index, e: &Element) -> Element {
    let rank = e.rank();
    e.map_linear(|m, out, c| left_mul_monomial(rank, k.get(), m, c, out))
}

/// Normal form of `e * x_k`.
pub fn right_mul_gen(k: Index, e: &Element) -> Element {
    let rank = e.rank();
    e.map_linear(|m, out, c| right_mul_monomial(rank, k.get(), m, c, out))
}

/// Normal form of `a * b`: each monomial of `a` is peeled into its generator
/// word, which is multiplied onto `b` from the left, last letter first.
pub fn product(a: &Element, b: &Element) -> Result<Element> {
    a.check_rank(b)?;
    let rank = a.rank();
    let mut out = Element::zero(rank);
    for (m, c) in a.terms() {
        let mut acc = b.scale(c);
        for &k in m.word(rank).iter().rev() {
            acc = acc.map_linear(|mm, o, cc| left_mul_monomial(rank, k, mm, cc, o));
        }
        out.add_scaled(&acc, &RatQ::one());
    }
    Ok(out)
}

/// `Omega_i = sum_{i <= j <= n} q^{j-i} x_{-j} x_j`, with `Omega_{n+1} = 0`.
pub fn omega(rank: Rank, i: i32) -> Element {
    assert!(i >= 1 && i <= rank.n() + 1, "omega index {i} out of range");
    let mut out = Element::zero(rank);
    omega_times_monomial(rank, i, &Monomial::one(rank), &RatQ::one(), &mut out);
    out
}

/// `Omega_i * e` via the closed-form expansion.
pub fn omega_times(i: i32, e: &Element) -> Element {
    let rank = e.rank();
    e.map_linear(|m, out, c| omega_times_monomial(rank, i, m, c, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfield::lambda;

    fn r2() -> Rank {
        Rank::new(2).unwrap()
    }

    fn x(rank: Rank, i: i32) -> Element {
        Element::generator(rank, i)
    }

    fn idx(rank: Rank, i: i64) -> Index {
        rank.index(i).unwrap()
    }

    fn mono(rank: Rank, word: &[i32]) -> Element {
        let mut m = Monomial::one(rank);
        for &i in word {
            m.bump(rank, i, 1);
        }
        Element::monomial(m)
    }

    #[test]
    fn left_mul_negative_generator_picks_up_prefactor() {
        let n = r2();
        let got = left_mul_gen(idx(n, -1), &x(n, -2));
        assert_eq!(got, mono(n, &[-2, -1]).scale(&RatQ::q_pow(1)));
    }

    #[test]
    fn left_mul_swaps_conjugate_pair() {
        let n = r2();
        let got = left_mul_gen(idx(n, 1), &x(n, -1));
        let mut want = mono(n, &[-1, 1]).scale(&RatQ::q_pow(2));
        want.add_scaled(&mono(n, &[-2, 2]), &(&RatQ::q_pow(2) * &lambda()));
        assert_eq!(got, want);
    }

    #[test]
    fn left_mul_on_one() {
        let n = r2();
        assert_eq!(left_mul_gen(idx(n, 2), &Element::one(n)), x(n, 2));
    }

    #[test]
    fn right_mul_examples() {
        let n = r2();
        assert_eq!(right_mul_gen(idx(n, 2), &x(n, 1)), mono(n, &[1, 2]));
        // the prefactor runs over j = 0..n, so a_1 contributes twice
        let got = right_mul_gen(idx(n, -1), &x(n, 1));
        let mut want = mono(n, &[-1, 1]).scale(&RatQ::q_pow(2));
        want.add_scaled(&mono(n, &[-2, 2]), &(&RatQ::q_pow(2) * &lambda()));
        assert_eq!(got, left_mul_gen(idx(n, 1), &x(n, -1)));
        assert_eq!(got, want);
        assert_eq!(right_mul_gen(idx(n, -2), &Element::one(n)), x(n, -2));
    }

    #[test]
    fn product_examples() {
        let n = r2();
        let a = mono(n, &[-1, 1]);
        assert_eq!(product(&a, &Element::one(n)).unwrap(), a);
        assert_eq!(
            product(&x(n, 2), &x(n, 1)).unwrap(),
            mono(n, &[1, 2]).scale(&RatQ::q_pow(1))
        );
        let r3 = Rank::new(3).unwrap();
        assert!(product(&x(n, 1), &x(r3, 1)).is_err());
    }

    #[test]
    fn omega_examples() {
        let n = r2();
        assert_eq!(omega(n, 2), mono(n, &[-2, 2]));
        let mut want = mono(n, &[-1, 1]);
        want.add_scaled(&mono(n, &[-2, 2]), &RatQ::q_pow(1));
        assert_eq!(omega(n, 1), want);
        assert!(omega(n, 3).is_zero());
    }
}
