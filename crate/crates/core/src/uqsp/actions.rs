//! Closed-form actions of the generators on monomials, used as independent
//! references for the operator realization.

use super::check::{check_cases, timed_report};
use super::report::{IdentityRecord, SuiteReport};
use crate::diffops::{Operator, Realization, RootLabel};
use std::ops::Neg;

use crate::error::Result;
use crate::qfield::{lambda, qbinom, qint, qint_base, RatQ};
use crate::sympspace::{basis_up_to, omega, omega_times, product, Element, Monomial, Rank};

fn q(k: i64) -> RatQ {
    RatQ::q_pow(k)
}

fn push(out: &mut Element, m: Option<Monomial>, c: RatQ) {
    if let Some(m) = m {
        out.add_term(m, &c);
    }
}

fn shift2(rank: Rank, a: &Monomial, i: i32, di: i32, j: i32, dj: i32) -> Option<Monomial> {
    a.shifted(rank, i, di)?.shifted(rank, j, dj)
}

/// `λ [a choose 2]_q q^{2-2(a_{-n}+...+a_{-2})} Ω_2 x^{b}`.
fn omega_tail(rank: Rank, a: &Monomial, top: u32, b: Option<Monomial>) -> Element {
    let Some(b) = b else {
        return Element::zero(rank);
    };
    let c = &(&lambda() * &qbinom(top as i64, 2).expect("k >= 0"))
        * &q(2 - 2 * a.exp_sum(rank, -rank.n(), -2));
    omega_times(2, &Element::monomial(b)).scale(&c)
}

/// `e_i.x^a` by the closed formula.
pub fn e_action(rank: Rank, i: i32, a: &Monomial) -> Element {
    let mut out = Element::zero(rank);
    let ex = |k| a.exp(rank, k) as i64;
    if i == 1 {
        push(&mut out, shift2(rank, a, -1, 1, 1, -1), qint_base(ex(1), 2));
        out = out.add(&omega_tail(rank, a, ex(1) as u32, a.shifted(rank, 1, -2)));
        return out;
    }
    push(
        &mut out,
        shift2(rank, a, -i, 1, 1 - i, -1),
        &q(ex(i - 1) - ex(i)) * &qint(ex(1 - i)),
    );
    push(
        &mut out,
        shift2(rank, a, i - 1, 1, i, -1),
        qint(ex(i)).neg(),
    );
    out
}

/// `f_i.x^a` by the closed formula.
pub fn f_action(rank: Rank, i: i32, a: &Monomial) -> Element {
    let mut out = Element::zero(rank);
    let ex = |k| a.exp(rank, k) as i64;
    if i == 1 {
        push(
            &mut out,
            shift2(rank, a, -1, -1, 1, 1),
            qint_base(ex(-1), 2),
        );
        out = out.add(&omega_tail(rank, a, ex(-1) as u32, a.shifted(rank, -1, -2)));
        return out;
    }
    push(&mut out, shift2(rank, a, -i, -1, 1 - i, 1), qint(ex(-i)));
    push(
        &mut out,
        shift2(rank, a, i - 1, -1, i, 1),
        (&q(ex(1 - i) - ex(-i)) * &qint(ex(i - 1))).neg(),
    );
    out
}

/// `k_i.x^a` by the closed formula.
pub fn k_action(rank: Rank, i: i32, a: &Monomial) -> Element {
    let ex = |k| a.exp(rank, k) as i64;
    let p = if i == 1 {
        2 * (ex(-1) - ex(1))
    } else {
        ex(-i) - ex(1 - i) + ex(i - 1) - ex(i)
    };
    Element::from_monomial(a.clone(), q(p))
}

/// `e_{1,2}.x^a` by the closed formula.
pub fn e12_action(rank: Rank, a: &Monomial) -> Element {
    let ex = |k| a.exp(rank, k) as i64;
    let mut out = Element::zero(rank);
    push(
        &mut out,
        shift2(rank, a, -2, 1, 1, -1),
        (&qint(ex(1)) * &q(2 + ex(-1) - ex(2))).neg(),
    );
    push(
        &mut out,
        shift2(rank, a, -1, 1, 2, -1),
        (&qint(ex(2)) * &q(-2 * ex(1))).neg(),
    );
    if let Some(b) = shift2(rank, a, 1, -1, 2, -1) {
        let c = &(&lambda() * &(&qint(ex(1)) * &qint(ex(2))))
            * &q(3 - 2 * a.exp_sum(rank, -rank.n(), -2) - ex(1));
        out = out.sub(&omega_times(2, &Element::monomial(b)).scale(&c));
    }
    out
}

/// Compares `e_i`, `f_i`, `k_i`, `e_{1,2}` with their closed formulas on all
/// monomials of degree `<= d`, and checks the action on the `Ω_j`.
pub fn actions_suite(rank: Rank, d: u32) -> Result<SuiteReport> {
    let r = Realization::new(rank);
    let n = rank.n();
    type Reference = fn(Rank, i32, &Monomial) -> Element;
    type Closed = Box<dyn Fn(&Monomial) -> Element + Sync>;
    let mut cases: Vec<(String, Operator, Closed)> = Vec::new();
    for i in 1..=n {
        for (name, op, f) in [
            ("e", r.e(i)?, e_action as Reference),
            ("f", r.f(i)?, f_action as Reference),
            ("k", r.k(i)?, k_action as Reference),
        ] {
            cases.push((
                format!("{name}({i}) matches its closed-form action"),
                op,
                Box::new(move |m| f(rank, i, m)),
            ));
        }
    }
    let e12 = r.root(
        RootLabel::new(1, 2, rank)?,
        crate::diffops::Construction::Recursive,
    )?;
    cases.push((
        "[e(1),e(2)]_q^2 matches its closed-form action".into(),
        e12,
        Box::new(move |m| e12_action(rank, m)),
    ));

    let mut omega_ids = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for (name, op) in [("e", r.e(i)?), ("f", r.f(i)?)] {
                let want = if i != j {
                    Element::zero(rank)
                } else if i == 1 {
                    let x = Element::generator(rank, if name == "e" { -1 } else { 1 });
                    product(&x, &x)?
                } else if name == "e" {
                    product(
                        &Element::generator(rank, -j),
                        &Element::generator(rank, j - 1),
                    )?
                    .neg()
                } else {
                    product(
                        &Element::generator(rank, 1 - j),
                        &Element::generator(rank, j),
                    )?
                };
                omega_ids.push((
                    format!("{name}({i}).Omega({j}) = {}", want.render()),
                    j,
                    op,
                    want,
                ));
            }
        }
    }

    let basis = basis_up_to(rank, d);
    Ok(timed_report("actions", rank, d, || {
        let mut records: Vec<IdentityRecord> = cases
            .iter()
            .map(|(id, op, f)| {
                check_cases(
                    id.clone(),
                    &basis,
                    |m| m.render(rank),
                    |m| (op.apply_monomial(m), f(m)),
                )
            })
            .collect();
        for (id, j, op, want) in &omega_ids {
            let om = [omega(rank, *j)];
            records.push(check_cases(
                id.clone(),
                &om,
                |x| x.render(),
                |x| (op.apply(x), want.clone()),
            ));
        }
        records
    }))
}
