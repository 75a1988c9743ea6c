//! Root vectors: closed formulas against the bracket recursions.

use super::actions::e12_action;
use super::check::{check_cases, check_operator_identities, timed_report, OpIdentity};
use super::data::{enumerate_positive_roots, CartanData};
use super::report::{CounterexampleRecord, IdentityRecord, SuiteReport};
use crate::diffops::{Construction, Operator, Realization, RootLabel};
use crate::error::Result;
use crate::qfield::RatQ;
use crate::sympspace::{basis_up_to, Rank};

pub fn root_vector_identities(r: &Realization) -> Result<Vec<OpIdentity>> {
    let rank = r.rank();
    let n = rank.n();
    let cartan = CartanData::new(rank);
    let roots = enumerate_positive_roots(rank);
    let mut out = Vec::new();
    for &l in &roots {
        out.push(OpIdentity::new(
            format!("E{l} closed = recursive"),
            r.root(l, Construction::Closed)?,
            r.root(l, Construction::Recursive)?,
        ));
    }
    out.push(OpIdentity::new(
        "E(1,1) closed = e(1)",
        r.root(RootLabel::new(1, 1, rank)?, Construction::Closed)?,
        r.e(1)?,
    ));
    for i in 2..=n {
        out.push(OpIdentity::new(
            format!("E({},{i}) closed = e({i})", 1 - i),
            r.root(
                RootLabel::new((1 - i) as i64, i as i64, rank)?,
                Construction::Closed,
            )?,
            r.e(i)?,
        ));
    }
    for &l in &roots {
        let root = r.root(l, Construction::Closed)?;
        let beta = l.weight(rank);
        for i in 1..=n {
            let p = cartan.pairing_with_simple(i, &beta);
            out.push(OpIdentity::new(
                format!("k({i})E{l} = q^{p} E{l}k({i})"),
                &r.k(i)? * &root,
                (&root * &r.k(i)?).scale(&RatQ::q_pow(p)),
            ));
        }
    }
    Ok(out)
}

/// Builds every root vector both ways and compares them on all monomials of
/// degree `<= d`; also checks the simple-root identifications, the weights,
/// and the closed action of `e_{1,2}`.
pub fn root_vector_suite(rank: Rank, d: u32) -> Result<SuiteReport> {
    let r = Realization::new(rank);
    let ids = root_vector_identities(&r)?;
    let e12 = r.root(RootLabel::new(1, 2, rank)?, Construction::Closed)?;
    let count = enumerate_positive_roots(rank).len();
    let want = rank.get() * rank.get();
    Ok(timed_report("root-vectors", rank, d, || {
        let mut records = Vec::new();
        let id = format!("number of positive roots = {want}");
        records.push(if count == want {
            IdentityRecord::pass(id)
        } else {
            IdentityRecord::fail(
                id,
                CounterexampleRecord {
                    input: format!("n={}", rank.get()),
                    lhs: count.to_string(),
                    rhs: want.to_string(),
                    term: None,
                    lhs_coeff: None,
                    rhs_coeff: None,
                },
            )
        });
        records.extend(check_operator_identities(rank, d, &ids));
        let basis = basis_up_to(rank, d);
        records.push(check_cases(
            "E(1,2) closed matches its closed-form action",
            &basis,
            |m| m.render(rank),
            |m| (e12.apply_monomial(m), e12_action(rank, m)),
        ));
        records
    }))
}

/// Operators of the root vectors in enumeration order.
pub fn root_operators(r: &Realization, c: Construction) -> Result<Vec<(RootLabel, Operator)>> {
    enumerate_positive_roots(r.rank())
        .into_iter()
        .map(|l| Ok((l, r.root(l, c)?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n2_low_degree() {
        let rep = root_vector_suite(Rank::new(2).unwrap(), 2).unwrap();
        assert!(rep.all_pass(), "{}", rep.to_text());
        assert_eq!(rep.records.len(), 1 + 4 + 2 + 8 + 1);
    }
}
