use rayon::prelude::*;

use super::operator::Operator;
use crate::qfield::RatQ;
use crate::sympspace::{basis_up_to, Element, Monomial, Rank};

/// The first basis monomial on which two operators disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub monomial: Monomial,
    pub lhs: Element,
    pub rhs: Element,
}

impl Counterexample {
    /// First output monomial (in display order) whose coefficients differ,
    /// with the left and right coefficients.
    pub fn discrepancy(&self) -> Option<(Monomial, RatQ, RatQ)> {
        first_discrepancy(&self.lhs, &self.rhs)
    }
}

/// First monomial, in display order, where `a` and `b` differ.
pub fn first_discrepancy(a: &Element, b: &Element) -> Option<(Monomial, RatQ, RatQ)> {
    let diff = a.sub(b);
    let (m, _) = diff.display_terms().into_iter().next()?;
    Some((m.clone(), a.coeff(m), b.coeff(m)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Comparison {
    Equal,
    Counterexample(Box<Counterexample>),
}

impl Comparison {
    pub fn is_equal(&self) -> bool {
        matches!(self, Comparison::Equal)
    }
}

/// Compares `a` and `b` on every monomial of degree `<= d`; reports the first
/// mismatch in basis order. This is a bounded check, not a proof.
pub fn op_equal_up_to(a: &Operator, b: &Operator, rank: Rank, d: u32) -> Comparison {
    compare_on(&basis_up_to(rank, d), |m| {
        let x = Element::monomial(m.clone());
        (a.apply(&x), b.apply(&x))
    })
}

/// Runs `eval` on every monomial in parallel and returns the first one (in the
/// given order) where the two sides differ.
pub fn compare_on<F>(basis: &[Monomial], eval: F) -> Comparison
where
    F: Fn(&Monomial) -> (Element, Element) + Sync,
{
    let found = basis.par_iter().find_map_first(|m| {
        let (lhs, rhs) = eval(m);
        (lhs != rhs).then(|| Counterexample {
            monomial: m.clone(),
            lhs,
            rhs,
        })
    });
    match found {
        Some(c) => Comparison::Counterexample(Box::new(c)),
        None => Comparison::Equal,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffops::Realization;

    #[test]
    fn trivial_equalities() {
        let n = Rank::new(2).unwrap();
        let d1 = Operator::partial(1);
        assert!(op_equal_up_to(&d1, &d1, n, 3).is_equal());
        let a = &Operator::mu(1) * &Operator::mu(2);
        let b = &Operator::mu(2) * &Operator::mu(1);
        assert!(op_equal_up_to(&a, &b, n, 4).is_equal());
    }

    #[test]
    fn mismatch_reports_first_monomial() {
        let n = Rank::new(2).unwrap();
        let got = op_equal_up_to(&Operator::partial(1), &Operator::zero(), n, 2);
        let Comparison::Counterexample(c) = got else {
            panic!("expected a counterexample");
        };
        assert_eq!(c.monomial.render(n), "x(1)");
        let (m, l, r) = c.discrepancy().unwrap();
        assert_eq!(m.degree(), 0);
        assert!(l.is_one() && r.is_zero());
    }

    #[test]
    fn serre_bracket_form_vanishes() {
        let n = Rank::new(2).unwrap();
        let r = Realization::new(n);
        let e1 = r.e(1).unwrap();
        let e12 = Operator::bracket(&e1, &r.e(2).unwrap(), &RatQ::q_pow(2));
        let lhs = Operator::bracket(&e1, &e12, &RatQ::q_pow(-2));
        assert!(op_equal_up_to(&lhs, &Operator::zero(), n, 4).is_equal());
    }
}
