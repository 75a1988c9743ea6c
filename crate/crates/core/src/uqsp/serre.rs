//! Defining relations of U_q(sp_2n) evaluated on the realization.

use super::check::{check_operator_identities, timed_report, OpIdentity};
use super::data::CartanData;
use super::report::SuiteReport;
use crate::diffops::{Operator, Realization};
use crate::error::Result;
use crate::qfield::{qbinom_base, RatQ};
use crate::sympspace::Rank;

fn q(k: i64) -> RatQ {
    RatQ::q_pow(k)
}

/// `Σ_t (-1)^t [1-a_ij, t]_{q_i} g_i^t g_j g_i^{1-a_ij-t}`.
fn serre_sum(gi: &Operator, gj: &Operator, aij: i64, di: i64) -> Result<Operator> {
    let top = 1 - aij;
    let mut terms = Vec::new();
    for t in 0..=top {
        let sign = if t % 2 == 0 { 1 } else { -1 };
        let c = &qbinom_base(top, t, di)? * &RatQ::from_int(sign);
        let word = Operator::compose_all([gi.pow(t as u32), gj.clone(), gi.pow((top - t) as u32)]);
        terms.push(word.scale(&c));
    }
    Ok(Operator::sum_all(terms))
}

pub fn serre_identities(r: &Realization) -> Result<Vec<OpIdentity>> {
    let rank = r.rank();
    let n = rank.n();
    let cartan = CartanData::new(rank);
    let mut out = Vec::new();

    for i in 1..=n {
        for j in (i + 1)..=n {
            out.push(OpIdentity::new(
                format!("k({i})k({j}) = k({j})k({i})"),
                &r.k(i)? * &r.k(j)?,
                &r.k(j)? * &r.k(i)?,
            ));
        }
        out.push(OpIdentity::new(
            format!("k({i})k_inv({i}) = 1"),
            &r.k(i)? * &r.k_inv(i)?,
            Operator::identity(),
        ));
        out.push(OpIdentity::new(
            format!("k_inv({i})k({i}) = 1"),
            &r.k_inv(i)? * &r.k(i)?,
            Operator::identity(),
        ));
    }

    for i in 1..=n {
        for j in 1..=n {
            let p = cartan.d_of(i) * cartan.entry(i, j);
            out.push(OpIdentity::new(
                format!("k({i})e({j})k_inv({i}) = q^{p} e({j})"),
                Operator::compose_all([r.k(i)?, r.e(j)?, r.k_inv(i)?]),
                r.e(j)?.scale(&q(p)),
            ));
            out.push(OpIdentity::new(
                format!("k({i})f({j})k_inv({i}) = q^{} f({j})", -p),
                Operator::compose_all([r.k(i)?, r.f(j)?, r.k_inv(i)?]),
                r.f(j)?.scale(&q(-p)),
            ));
        }
    }

    for i in 1..=n {
        for j in 1..=n {
            let lhs = Operator::commutator(&r.e(i)?, &r.f(j)?);
            if i != j {
                out.push(OpIdentity::vanishes(format!("[e({i}),f({j})] = 0"), lhs));
            } else {
                let qi = cartan.qi(i);
                let denom = (&qi - &qi.inv()?).inv()?;
                let rhs = r.k(i)?.sub(&r.k_inv(i)?).scale(&denom);
                out.push(OpIdentity::new(
                    format!("[e({i}),f({i})] = (k({i}) - k_inv({i}))/(q_{i} - q_{i}^-1)"),
                    lhs,
                    rhs,
                ));
            }
        }
    }

    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            let (aij, di) = (cartan.entry(i, j), cartan.d_of(i));
            out.push(OpIdentity::vanishes(
                format!("quantum Serre sum for e({i}), e({j})"),
                serre_sum(&r.e(i)?, &r.e(j)?, aij, di)?,
            ));
            out.push(OpIdentity::vanishes(
                format!("quantum Serre sum for f({i}), f({j})"),
                serre_sum(&r.f(i)?, &r.f(j)?, aij, di)?,
            ));
        }
    }

    // bracket forms
    for (g, name) in [(0, "e"), (1, "f")] {
        let gen = |i: i32| if g == 0 { r.e(i) } else { r.f(i) };
        let g12 = Operator::bracket(&gen(1)?, &gen(2)?, &q(2));
        out.push(OpIdentity::vanishes(
            format!("[{name}(1),[{name}(1),{name}(2)]_q^2]_q^-2 = 0"),
            Operator::bracket(&gen(1)?, &g12, &q(-2)),
        ));
        out.push(OpIdentity::vanishes(
            format!("[{name}(2),[[{name}(1),{name}(2)]_q^2,{name}(2)]]_q^2 = 0"),
            Operator::bracket(&gen(2)?, &Operator::commutator(&g12, &gen(2)?), &q(2)),
        ));
        for i in 2..=n {
            for j in [i - 1, i + 1] {
                if j < 2 || j > n {
                    continue;
                }
                let inner = Operator::bracket(&gen(i)?, &gen(j)?, &q(1));
                out.push(OpIdentity::vanishes(
                    format!("[{name}({i}),[{name}({i}),{name}({j})]_q]_q^-1 = 0"),
                    Operator::bracket(&gen(i)?, &inner, &q(-1)),
                ));
            }
        }
    }
    Ok(out)
}

/// Checks the defining relations (including the bracket forms of the Serre
/// relations) on all monomials of degree `<= d`.
pub fn serre_suite(rank: Rank, d: u32) -> Result<SuiteReport> {
    let r = Realization::new(rank);
    let ids = serre_identities(&r)?;
    Ok(timed_report("serre", rank, d, || {
        check_operator_identities(rank, d, &ids)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ef_bracket_on_x1() {
        let rank = Rank::new(2).unwrap();
        let r = Realization::new(rank);
        let br = Operator::commutator(&r.e(1).unwrap(), &r.f(1).unwrap());
        let x1 = crate::sympspace::Element::generator(rank, 1);
        assert_eq!(br.apply(&x1), x1.neg());
    }

    #[test]
    fn serre_n2_low_degree() {
        let rep = serre_suite(Rank::new(2).unwrap(), 2).unwrap();
        assert!(rep.all_pass(), "{}", rep.to_text());
    }
}
