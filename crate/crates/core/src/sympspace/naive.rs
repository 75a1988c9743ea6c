//! Normal ordering by plain rewriting with the two defining relations.
//!
//! Slow, but shares nothing with the closed-form multiplication, so it is
//! used to cross-check it.

use std::collections::HashMap;

use super::element::Element;
use super::index::{Index, Rank};
use super::monomial::Monomial;
use crate::error::{QsympError, Result};
use crate::qfield::{lambda, RatQ};

/// Default bound on the number of rewrite steps.
pub const DEFAULT_FUEL: usize = 5_000_000;

/// Normal form of `x_{w1} x_{w2} ...` using only the adjacent-pair rules
/// `x_j x_i -> q x_i x_j` (`i < j`, `j != -i`) and
/// `x_i x_{-i} -> q^2 x_{-i} x_i + q^2 lambda Omega_{i+1}` (`i > 0`).
pub fn naive_normalize(rank: Rank, word: &[Index]) -> Result<Element> {
    naive_normalize_with_fuel(rank, word, DEFAULT_FUEL)
}

pub fn naive_normalize_with_fuel(rank: Rank, word: &[Index], fuel: usize) -> Result<Element> {
    let n = rank.n();
    let q2lam = &RatQ::q_pow(2) * &lambda();
    let mut pending: HashMap<Vec<i32>, RatQ> = HashMap::new();
    pending.insert(word.iter().map(|i| i.get()).collect(), RatQ::one());
    let mut out = Element::zero(rank);
    let mut steps = 0usize;

    fn push(pending: &mut HashMap<Vec<i32>, RatQ>, w: Vec<i32>, c: RatQ) {
        if c.is_zero() {
            return;
        }
        let slot = pending.entry(w).or_insert_with(RatQ::zero);
        *slot += &c;
    }

    while let Some(w) = pending.keys().next().cloned() {
        let c = pending.remove(&w).unwrap();
        if c.is_zero() {
            continue;
        }
        let Some(k) = (0..w.len().saturating_sub(1)).find(|&k| w[k] > w[k + 1]) else {
            let mut m = Monomial::one(rank);
            for &i in &w {
                m.bump(rank, i, 1);
            }
            out.add_term(m, &c);
            continue;
        };
        steps += 1;
        if steps > fuel {
            return Err(QsympError::FuelExhausted(fuel));
        }
        let (hi, lo) = (w[k], w[k + 1]);
        if hi != -lo {
            let mut w2 = w.clone();
            w2.swap(k, k + 1);
            push(&mut pending, w2, c.mul_q_pow(1));
        } else {
            let i = hi;
            let mut w2 = w.clone();
            w2.swap(k, k + 1);
            push(&mut pending, w2, c.mul_q_pow(2));
            let base = &c * &q2lam;
            for j in (i + 1)..=n {
                let mut w3 = Vec::with_capacity(w.len());
                w3.extend_from_slice(&w[..k]);
                w3.push(-j);
                w3.push(j);
                w3.extend_from_slice(&w[k + 2..]);
                push(&mut pending, w3, base.mul_q_pow((j - i - 1) as i64));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sympspace::product;

    fn word(rank: Rank, w: &[i64]) -> Vec<Index> {
        w.iter().map(|&i| rank.index(i).unwrap()).collect()
    }

    fn mono(rank: Rank, word: &[i32]) -> Element {
        let mut m = Monomial::one(rank);
        for &i in word {
            m.bump(rank, i, 1);
        }
        Element::monomial(m)
    }

    #[test]
    fn swap_rule() {
        let n = Rank::new(2).unwrap();
        let got = naive_normalize(n, &word(n, &[2, 1])).unwrap();
        assert_eq!(got, mono(n, &[1, 2]).scale(&RatQ::q_pow(1)));
    }

    #[test]
    fn conjugate_rule() {
        let n = Rank::new(2).unwrap();
        let got = naive_normalize(n, &word(n, &[1, -1])).unwrap();
        let mut want = mono(n, &[-1, 1]).scale(&RatQ::q_pow(2));
        want.add_scaled(&mono(n, &[-2, 2]), &(&RatQ::q_pow(2) * &lambda()));
        assert_eq!(got, want);
    }

    #[test]
    fn agrees_with_product_chain() {
        let n = Rank::new(2).unwrap();
        let got = naive_normalize(n, &word(n, &[1, -1, 1])).unwrap();
        let x1 = Element::generator(n, 1);
        let xm1 = Element::generator(n, -1);
        let chain = product(&x1, &product(&xm1, &x1).unwrap()).unwrap();
        assert_eq!(got, chain);
    }

    #[test]
    fn fuel_exhaustion_is_reported() {
        let n = Rank::new(3).unwrap();
        let err = naive_normalize_with_fuel(n, &word(n, &[3, 2, 1, -1, -2, -3]), 3).unwrap_err();
        assert_eq!(err, QsympError::FuelExhausted(3));
    }

    #[test]
    fn empty_word_is_one() {
        let n = Rank::new(2).unwrap();
        assert_eq!(naive_normalize(n, &[]).unwrap(), Element::one(n));
    }
}
