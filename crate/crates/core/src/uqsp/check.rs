use std::time::Instant;

use rayon::prelude::*;

use super::report::{CounterexampleRecord, IdentityRecord, SuiteReport};
use crate::diffops::{first_discrepancy, Operator};
use crate::sympspace::{basis_up_to, Element, Monomial, Rank};

/// An operator identity `lhs = rhs` to be checked on a bounded basis.
#[derive(Clone, Debug)]
pub struct OpIdentity {
    pub id: String,
    pub lhs: Operator,
    pub rhs: Operator,
}

impl OpIdentity {
    pub fn new(id: impl Into<String>, lhs: Operator, rhs: Operator) -> Self {
        OpIdentity {
            id: id.into(),
            lhs,
            rhs,
        }
    }

    pub fn vanishes(id: impl Into<String>, lhs: Operator) -> Self {
        OpIdentity::new(id, lhs, Operator::zero())
    }
}

pub fn counterexample(input: String, lhs: &Element, rhs: &Element) -> CounterexampleRecord {
    let disc = first_discrepancy(lhs, rhs);
    let rank = lhs.rank();
    CounterexampleRecord {
        input,
        lhs: lhs.render(),
        rhs: rhs.render(),
        term: disc.as_ref().map(|(m, _, _)| m.render(rank)),
        lhs_coeff: disc.as_ref().map(|(_, l, _)| l.to_string()),
        rhs_coeff: disc.as_ref().map(|(_, _, r)| r.to_string()),
    }
}

/// Evaluates both sides on every case and records the first case (in order)
/// where they differ.
pub fn check_cases<T, I, E>(id: impl Into<String>, cases: &[T], input: I, eval: E) -> IdentityRecord
where
    T: Sync,
    I: Fn(&T) -> String,
    E: Fn(&T) -> (Element, Element) + Sync,
{
    let found = cases.par_iter().find_map_first(|c| {
        let (l, r) = eval(c);
        (l != r).then_some((c, l, r))
    });
    match found {
        None => IdentityRecord::pass(id),
        Some((c, l, r)) => IdentityRecord::fail(id, counterexample(input(c), &l, &r)),
    }
}

/// Checks each identity on all monomials of degree `<= d`. Records keep the
/// order of `identities`.
pub fn check_operator_identities(
    rank: Rank,
    d: u32,
    identities: &[OpIdentity],
) -> Vec<IdentityRecord> {
    let basis = basis_up_to(rank, d);
    identities
        .par_iter()
        .map(|idn| {
            check_cases(
                idn.id.clone(),
                &basis,
                |m: &Monomial| m.render(rank),
                |m| {
                    let x = Element::monomial(m.clone());
                    (idn.lhs.apply(&x), idn.rhs.apply(&x))
                },
            )
        })
        .collect()
}

/// Runs `body` and wraps its records in a timed report.
pub fn timed_report<F>(suite: &str, rank: Rank, bound: u32, body: F) -> SuiteReport
where
    F: FnOnce() -> Vec<IdentityRecord>,
{
    let start = Instant::now();
    let records = body();
    SuiteReport {
        suite: suite.to_string(),
        n: rank.get(),
        bound,
        records,
        wall_ms: start.elapsed().as_millis(),
    }
}
