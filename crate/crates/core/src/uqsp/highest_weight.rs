//! Highest-weight structure of the homogeneous components `X^m`.

use std::collections::{BTreeMap, VecDeque};

use super::check::{check_cases, timed_report};
use super::report::{CounterexampleRecord, IdentityRecord, SuiteReport};
use crate::diffops::Realization;
use crate::error::Result;
use crate::qfield::RatQ;
use crate::sympspace::{homogeneous_dim, Element, Monomial, Rank};

/// Row-reduced spanning set over `Q(q)`. Each stored row has coefficient 1 at
/// its pivot, which is its smallest monomial; pivots are distinct.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<Monomial, Element>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows until its smallest monomial is not
    /// a pivot.
    pub fn reduce(&self, v: &Element) -> Element {
        let mut v = v.clone();
        while let Some(m) = v.first_monomial().cloned() {
            let Some(row) = self.rows.get(&m) else { break };
            let c = -v.coeff(&m);
            v.add_scaled(row, &c);
        }
        v
    }

    /// Adds `v` to the span. Returns the new normalized row if `v` was
    /// independent of the existing rows.
    pub fn insert(&mut self, v: &Element) -> Option<Element> {
        let r = self.reduce(v);
        let m = r.first_monomial()?.clone();
        let c = r.coeff(&m).inv().expect("leading coefficient is nonzero");
        let row = r.scale(&c);
        self.rows.insert(m, row.clone());
        Some(row)
    }
}

/// `x_{-n}^m`.
pub fn highest_weight_vector(rank: Rank, m: u32) -> Element {
    let mut exps = vec![0u32; rank.dim()];
    exps[0] = m;
    Element::monomial(Monomial::from_exps(&exps))
}

/// Dimension of the span of all iterated `f_i`-images of `v`.
pub fn f_closure_dim(r: &Realization, v: &Element) -> Result<usize> {
    let fs = (1..=r.rank().n())
        .map(|i| r.f(i))
        .collect::<Result<Vec<_>>>()?;
    let mut ech = Echelon::new();
    let mut queue = VecDeque::new();
    if let Some(row) = ech.insert(v) {
        queue.push_back(row);
    }
    while let Some(w) = queue.pop_front() {
        for f in &fs {
            if let Some(row) = ech.insert(&f.apply(&w)) {
                queue.push_back(row);
            }
        }
    }
    Ok(ech.rank())
}

/// Checks that `x_{-n}^m` is annihilated by every `e_i`, has the expected
/// `k`-weight, and generates all of `X^m` under the `f_i`.
pub fn highest_weight_suite(rank: Rank, m: u32) -> Result<SuiteReport> {
    let r = Realization::new(rank);
    let n = rank.n();
    let v = highest_weight_vector(rank, m);
    let vname = format!("x({})^{m}", -n);
    let mut ops = Vec::new();
    for i in 1..=n {
        ops.push((format!("e({i}).{vname} = 0"), r.e(i)?, RatQ::zero()));
    }
    for i in 1..=n {
        let p = if i == n { m as i64 } else { 0 };
        ops.push((
            format!("k({i}).{vname} = q^{p} {vname}"),
            r.k(i)?,
            RatQ::q_pow(p),
        ));
    }
    let expected = homogeneous_dim(rank, m);
    Ok(timed_report("highest-weight", rank, m, || {
        let mut records: Vec<IdentityRecord> = ops
            .iter()
            .map(|(id, op, c)| {
                check_cases(
                    id.clone(),
                    std::slice::from_ref(&v),
                    |_| vname.clone(),
                    |x| (op.apply(x), x.scale(c)),
                )
            })
            .collect();
        let id = format!("dim span of f-images of {vname} = {expected}");
        let got = f_closure_dim(&r, &v).expect("f_i exist for every i in range") as u64;
        records.push(if got == expected {
            IdentityRecord::pass(id)
        } else {
            IdentityRecord::fail(
                id,
                CounterexampleRecord {
                    input: vname.clone(),
                    lhs: got.to_string(),
                    rhs: expected.to_string(),
                    term: None,
                    lhs_coeff: None,
                    rhs_coeff: None,
                },
            )
        });
        records
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn echelon_rank() {
        let rank = Rank::new(2).unwrap();
        let x1 = Element::generator(rank, 1);
        let x2 = Element::generator(rank, 2);
        let mut e = Echelon::new();
        assert!(e.insert(&x1.add(&x2)).is_some());
        assert!(e.insert(&x1.sub(&x2)).is_some());
        assert!(e.insert(&x1.scale(&RatQ::q_pow(3))).is_none());
        assert!(e.insert(&Element::zero(rank)).is_none());
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn small_closures() {
        let rank = Rank::new(2).unwrap();
        let r = Realization::new(rank);
        for (m, want) in [(0, 1), (1, 4), (2, 10)] {
            let d = f_closure_dim(&r, &highest_weight_vector(rank, m)).unwrap();
            assert_eq!(d, want);
        }
        let rep = highest_weight_suite(rank, 2).unwrap();
        assert!(rep.all_pass(), "{}", rep.to_text());
    }
}
