//! Compatibility of the action with multiplication and unit.

use super::check::{check_cases, timed_report};
use super::data::{counit, CoproductRule, HopfGen};
use super::report::{IdentityRecord, SuiteReport};
use crate::diffops::{Operator, Realization};
use crate::error::Result;
use crate::qfield::RatQ;
use crate::sympspace::{basis_up_to, product, Element, Monomial, Rank};

fn generators(n: i32) -> Vec<HopfGen> {
    (1..=n)
        .flat_map(|i| {
            [
                HopfGen::E(i),
                HopfGen::F(i),
                HopfGen::K(i),
                HopfGen::KInv(i),
            ]
        })
        .collect()
}

fn mul(a: &Element, b: &Element) -> Element {
    product(a, b).expect("same rank")
}

/// `h.(x^a x^b) = Σ (h1.x^a)(h2.x^b)` over pairs of monomials of degree
/// `<= d`, and `h.1 = ε(h) 1`.
pub fn module_algebra_suite(rank: Rank, d: u32) -> Result<SuiteReport> {
    let r = Realization::new(rank);
    let gens = generators(rank.n());
    let mut ops = Vec::new();
    for g in &gens {
        let rule = CoproductRule::of(*g);
        let terms = rule
            .terms
            .iter()
            .map(|(a, b)| Ok((a.operator(&r)?, b.operator(&r)?)))
            .collect::<Result<Vec<(Operator, Operator)>>>()?;
        ops.push((rule, g.operator(&r)?, terms));
    }
    let basis = basis_up_to(rank, d);
    let pairs: Vec<(Monomial, Monomial)> = basis
        .iter()
        .flat_map(|a| basis.iter().map(move |b| (a.clone(), b.clone())))
        .collect();
    let products: Vec<Element> = pairs
        .iter()
        .map(|(a, b)| mul(&Element::monomial(a.clone()), &Element::monomial(b.clone())))
        .collect();
    let cases: Vec<usize> = (0..pairs.len()).collect();

    Ok(timed_report("module-algebra", rank, d, || {
        let mut records: Vec<IdentityRecord> = Vec::new();
        for (rule, op, terms) in &ops {
            records.push(check_cases(
                rule.to_string(),
                &cases,
                |&k| {
                    let (a, b) = &pairs[k];
                    format!("{} ⊗ {}", a.render(rank), b.render(rank))
                },
                |&k| {
                    let (a, b) = &pairs[k];
                    let (xa, xb) = (Element::monomial(a.clone()), Element::monomial(b.clone()));
                    let lhs = op.apply(&products[k]);
                    let mut rhs = Element::zero(rank);
                    for (h1, h2) in terms {
                        rhs = rhs.add(&mul(&h1.apply(&xa), &h2.apply(&xb)));
                    }
                    (lhs, rhs)
                },
            ));
        }
        for (g, op) in gens.iter().zip(ops.iter().map(|o| &o.1)) {
            let one = [Element::one(rank)];
            records.push(check_cases(
                format!("{g}.1 = {}", counit(*g)),
                &one,
                |_| "1".to_string(),
                |x| (op.apply(x), x.scale(&RatQ::from_int(counit(*g)))),
            ));
        }
        records
    }))
}
