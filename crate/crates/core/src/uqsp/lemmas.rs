//! Commutation relations among the auxiliary operators `𝔇`, `𝔛`, `Φ`, `Ψ`
//! and the diagonal operators `μ`, checked as bounded operator identities.
//!
//! Ids use `D(k)` for `𝔇_k`, `XL(-i)` for `𝔛_{-i_L}`, `XR(i)` and `XR(-i)` for
//! `𝔛_{±i_R}`, and `[A,B]_v = AB - vBA`.

use super::check::{check_operator_identities, timed_report, OpIdentity};
use super::report::SuiteReport;
use crate::diffops::{Construction, Operator, Realization};
use crate::error::Result;
use crate::qfield::{lambda, RatQ};
use crate::sympspace::Rank;

fn q(k: i64) -> RatQ {
    RatQ::q_pow(k)
}

fn qs(k: i64) -> String {
    match k {
        0 => "1".into(),
        1 => "q".into(),
        _ => format!("q^{k}"),
    }
}

struct Battery<'a> {
    r: &'a Realization,
    n: i32,
    out: Vec<OpIdentity>,
}

impl Battery<'_> {
    fn d(&self, k: i32) -> Operator {
        self.r.d(k).expect("index in range")
    }
    fn xl(&self, i: i32) -> Operator {
        self.r.xl(i).expect("index in range")
    }
    fn xr(&self, i: i32) -> Operator {
        self.r.xr(i).expect("index in range")
    }
    fn xrn(&self, i: i32) -> Operator {
        self.r.xr_neg(i).expect("index in range")
    }
    fn phi(&self, i: i32) -> Operator {
        self.r.phi(i, Construction::Closed).expect("index in range")
    }
    fn psi(&self, i: i32) -> Operator {
        self.r.psi(i, Construction::Closed).expect("index in range")
    }
    fn mu(k: i32) -> Operator {
        Operator::mu(k)
    }
    fn br(a: &Operator, b: &Operator, p: i64) -> Operator {
        Operator::bracket(a, b, &q(p))
    }
    fn cm(a: &Operator, b: &Operator) -> Operator {
        Operator::commutator(a, b)
    }
    fn eq(&mut self, id: String, lhs: Operator, rhs: Operator) {
        self.out.push(OpIdentity::new(id, lhs, rhs));
    }
    fn zero(&mut self, id: String, lhs: Operator) {
        self.out.push(OpIdentity::vanishes(id, lhs));
    }
    fn indices(&self) -> Vec<i32> {
        (-self.n..=self.n).filter(|&k| k != 0).collect()
    }

    fn recursions(&mut self) {
        let r = self.r;
        for i in 1..=self.n + 1 {
            self.eq(
                format!("Psi({i}) closed = recursive"),
                r.psi(i, Construction::Closed).expect("in range"),
                r.psi(i, Construction::Recursive).expect("in range"),
            );
        }
        for i in 0..=self.n {
            self.eq(
                format!("Phi({i}) closed = recursive"),
                r.phi(i, Construction::Closed).expect("in range"),
                r.phi(i, Construction::Recursive).expect("in range"),
            );
        }
    }

    fn mu_commutation(&mut self) {
        let idx = self.indices();
        for &k in &idx {
            for &l in &idx {
                let p = i64::from(k == l);
                self.eq(
                    format!("D({k})mu({l}) = {} mu({l})D({k})", qs(p)),
                    &self.d(k) * &Self::mu(l),
                    (&Self::mu(l) * &self.d(k)).scale(&q(p)),
                );
            }
        }
        for i in 1..=self.n {
            for &k in &idx {
                let p = -i64::from(i == k);
                self.eq(
                    format!("XR({i})mu({k}) = {} mu({k})XR({i})", qs(p)),
                    &self.xr(i) * &Self::mu(k),
                    (&Self::mu(k) * &self.xr(i)).scale(&q(p)),
                );
                let p = -i64::from(-i == k);
                self.eq(
                    format!("XL({})mu({k}) = {} mu({k})XL({})", -i, qs(p), -i),
                    &self.xl(i) * &Self::mu(k),
                    (&Self::mu(k) * &self.xl(i)).scale(&q(p)),
                );
            }
        }
    }

    fn q_commuting_pairs(&mut self) {
        for i in 1..=self.n {
            for j in (i + 1)..=self.n {
                let (mi, mj) = (-i, -j);
                let list = [
                    (format!("[D({j}),D({i})]_q = 0"), self.d(j), self.d(i)),
                    (format!("[D({mi}),D({mj})]_q = 0"), self.d(-i), self.d(-j)),
                    (format!("[XR({j}),XR({i})]_q = 0"), self.xr(j), self.xr(i)),
                    (format!("[XL({mi}),XL({mj})]_q = 0"), self.xl(i), self.xl(j)),
                    (format!("[XR({i}),D({j})]_q = 0"), self.xr(i), self.d(j)),
                    (format!("[XL({mj}),D({mi})]_q = 0"), self.xl(j), self.d(-i)),
                    (format!("[D({i}),XR({j})]_q = 0"), self.d(i), self.xr(j)),
                    (format!("[D({mj}),XL({mi})]_q = 0"), self.d(-j), self.xl(i)),
                ];
                for (id, a, b) in list {
                    self.zero(id, Self::br(&a, &b, 1));
                }
            }
        }
        for i in 1..=self.n {
            for j in 1..=self.n {
                if i == j {
                    continue;
                }
                let (mi, mj) = (-i, -j);
                let list = [
                    (format!("[D({i}),D({mj})] = 0"), self.d(i), self.d(-j)),
                    (format!("[XL({mi}),XR({j})] = 0"), self.xl(i), self.xr(j)),
                    (format!("[D({i}),XL({mj})] = 0"), self.d(i), self.xl(j)),
                    (format!("[D({mi}),XR({j})] = 0"), self.d(-i), self.xr(j)),
                ];
                for (id, a, b) in list {
                    self.zero(id, Self::cm(&a, &b));
                }
            }
        }
        for i in 1..=self.n {
            let mi = -i;
            let list = [
                (format!("[D({i}),D({mi})]_q = 0"), self.d(i), self.d(-i)),
                (format!("[XR({i}),XL({mi})]_q = 0"), self.xr(i), self.xl(i)),
                (format!("[XL({mi}),D({i})]_q = 0"), self.xl(i), self.d(i)),
                (format!("[D({mi}),XR({i})]_q = 0"), self.d(-i), self.xr(i)),
            ];
            for (id, a, b) in list {
                self.zero(id, Self::br(&a, &b, 1));
            }
        }
    }

    fn number_operators(&mut self) {
        let li = lambda().inv().expect("lambda is nonzero");
        let one = Operator::identity();
        for i in 1..=self.n {
            let mi = -i;
            let (d, x, dm, xm) = (self.d(i), self.xr(i), self.d(-i), self.xl(i));
            let mu2 = Operator::mu_pow(i, 2);
            let mum2 = Operator::mu_pow(-i, 2);
            self.eq(
                format!("D({i})XR({i}) = q(q^2 mu({i})^2 - 1)/lambda"),
                &d * &x,
                mu2.scale(&q(2)).sub(&one).scale(&(&q(1) * &li)),
            );
            self.eq(
                format!("XR({i})D({i}) = q(mu({i})^2 - 1)/lambda"),
                &x * &d,
                mu2.sub(&one).scale(&(&q(1) * &li)),
            );
            self.eq(
                format!("D({mi})XL({mi}) = (q^2 mu({mi})^2 - 1)/lambda"),
                &dm * &xm,
                mum2.scale(&q(2)).sub(&one).scale(&li),
            );
            self.eq(
                format!("XL({mi})D({mi}) = (mu({mi})^2 - 1)/lambda"),
                &xm * &dm,
                mum2.sub(&one).scale(&li),
            );
            self.eq(
                format!("[D({i}),XR({i})] = q^2 mu({i})^2"),
                Self::cm(&d, &x),
                mu2.scale(&q(2)),
            );
            self.eq(
                format!("[D({i}),XR({i})]_q^2 = q^2"),
                Self::br(&d, &x, 2),
                Operator::scalar(q(2)),
            );
            self.eq(
                format!("[XR({i}),D({i})]_q^-2 = -1"),
                Self::br(&x, &d, -2),
                Operator::scalar(RatQ::from_int(-1)),
            );
            self.eq(
                format!("[D({mi}),XL({mi})] = q mu({mi})^2"),
                Self::cm(&dm, &xm),
                mum2.scale(&q(1)),
            );
            self.eq(
                format!("[D({mi}),XL({mi})]_q^2 = q"),
                Self::br(&dm, &xm, 2),
                Operator::scalar(q(1)),
            );
            self.eq(
                format!("[XL({mi}),D({mi})]_q^-2 = -q^-1"),
                Self::br(&xm, &dm, -2),
                Operator::scalar(RatQ::int_q_pow(-1, -1)),
            );
        }
    }

    fn phi_psi_mu(&mut self) {
        let idx = self.indices();
        for i in 1..=self.n {
            let (ps, ph) = (self.psi(i), self.phi(i));
            for &t in idx.iter().filter(|t| t.abs() < i) {
                self.zero(
                    format!("[Psi({i}),mu({t})] = 0"),
                    Self::cm(&ps, &Self::mu(t)),
                );
                self.zero(
                    format!("[Phi({i}),mu({t})]_q = 0"),
                    Self::br(&ph, &Self::mu(t), 1),
                );
            }
            for &k in idx.iter().filter(|k| k.abs() > i) {
                self.zero(
                    format!("[Phi({i}),mu({k})] = 0"),
                    Self::cm(&ph, &Self::mu(k)),
                );
                self.zero(
                    format!("[Psi({i}),mu({k})]_q^-1 = 0"),
                    Self::br(&ps, &Self::mu(k), -1),
                );
            }
            for k in [i, -i] {
                self.zero(
                    format!("[Psi({i}),mu({k})]_q^-1 = 0"),
                    Self::br(&ps, &Self::mu(k), -1),
                );
                self.zero(
                    format!("[Phi({i}),mu({k})]_q = 0"),
                    Self::br(&ph, &Self::mu(k), 1),
                );
            }
        }
    }

    fn phi_psi_brackets(&mut self) {
        let n = self.n;
        for i in 1..=n {
            for j in (i + 1)..=n {
                let (mi, mj) = (-i, -j);
                let psj = self.psi(j);
                let phi = self.phi(i);
                self.zero(
                    format!("[D({i}),Psi({j})]_q = 0"),
                    Self::br(&self.d(i), &psj, 1),
                );
                self.zero(
                    format!("[D({mi}),Psi({j})]_q^-1 = 0"),
                    Self::br(&self.d(-i), &psj, -1),
                );
                self.zero(
                    format!("[Psi({j}),XL({mi})]_q^-1 = 0"),
                    Self::br(&psj, &self.xl(i), -1),
                );
                self.zero(
                    format!("[Psi({j}),XR({i})]_q = 0"),
                    Self::br(&psj, &self.xr(i), 1),
                );
                self.zero(
                    format!("[Phi({i}),XL({mj})]_q^-1 = 0"),
                    Self::br(&phi, &self.xl(j), -1),
                );
                self.zero(
                    format!("[Phi({i}),XR({j})]_q = 0"),
                    Self::br(&phi, &self.xr(j), 1),
                );
            }
        }
        for i in 1..=n {
            for j in i..=n {
                let mj = -j;
                let phi = self.phi(i);
                self.zero(
                    format!("[Phi({i}),D({j})]_q^-1 = 0"),
                    Self::br(&phi, &self.d(j), -1),
                );
                self.zero(
                    format!("[Phi({i}),D({mj})]_q = 0"),
                    Self::br(&phi, &self.d(-j), 1),
                );
                if j == n {
                    continue;
                }
                let psi = self.psi(i);
                let (j1, mj1) = (j + 1, -j - 1);
                let core = Operator::compose_all([
                    self.r.tau_pow(-i, 2),
                    self.r.tau_pow(-j - 1, -2),
                    self.xl(j + 1),
                    self.xr(j),
                ]);
                let a = Self::cm(&psi, &(&self.xr(j) * &self.d(j + 1)));
                let b = Self::cm(&psi, &(&self.xl(j + 1) * &self.d(-j)));
                let p1 = (j + 2 - i) as i64;
                let p2 = (j + 1 - i) as i64;
                self.eq(
                    format!(
                        "[Psi({i}),XR({j})D({j1})] = -{} tau({})^2 tau({mj1})^-2 XL({mj1})XR({j})",
                        qs(p1),
                        -i
                    ),
                    a.clone(),
                    core.scale(&RatQ::int_q_pow(-1, p1)),
                );
                self.eq(
                    format!(
                        "[Psi({i}),XL({mj1})D({mj})] = -{} tau({})^2 tau({mj1})^-2 XL({mj1})XR({j})",
                        qs(p2),
                        -i
                    ),
                    b.clone(),
                    core.scale(&RatQ::int_q_pow(-1, p2)),
                );
                self.eq(
                    format!("[Psi({i}),XR({j})D({j1})] = q[Psi({i}),XL({mj1})D({mj})]"),
                    a,
                    b.scale(&q(1)),
                );
            }
        }
        for i in 1..=n {
            let mi = -i;
            let (psi, phi) = (self.psi(i), self.phi(i));
            self.eq(
                format!("[D({i}),Psi({i})]_q = q XL({mi})"),
                Self::br(&self.d(i), &psi, 1),
                self.xl(i).scale(&q(1)),
            );
            self.zero(
                format!("[Psi({i}),XL({mi})]_q = 0"),
                Self::br(&psi, &self.xl(i), 1),
            );
            self.eq(
                format!("[Phi({i}),XR({i})]_q = q^2 Lambda({i})^2 D({mi})"),
                Self::br(&phi, &self.xr(i), 1),
                (&self.r.lambda_pow(i, 2) * &self.d(-i)).scale(&q(2)),
            );
            self.eq(
                format!(
                    "[Phi({i}),XL({mi})]_q^-1 = Lambda({})^2 mu({mi})^2 D({i})",
                    i - 1
                ),
                Self::br(&phi, &self.xl(i), -1),
                Operator::compose_all([
                    self.r.lambda_pow(i - 1, 2),
                    Operator::mu_pow(-i, 2),
                    self.d(i),
                ]),
            );
            let tail = (&self.xl(i) * &self.phi(i - 1)).scale(&(&lambda() * &q(-1)));
            self.eq(
                format!(
                    "[Phi({i}),XL({mi})]_q = Lambda({})^2 D({i}) - lambda q^-1 XL({mi})Phi({})",
                    i - 1,
                    i - 1
                ),
                Self::br(&phi, &self.xl(i), 1),
                (&self.r.lambda_pow(i - 1, 2) * &self.d(i)).sub(&tail),
            );
        }
        for i in 1..=n {
            for k in 1..=n {
                let dk = self.d(k);
                let inner = Self::br(&dk, &self.psi(i), 1);
                self.zero(
                    format!("[D({k}),[D({k}),Psi({i})]_q]_q^-1 = 0"),
                    Self::br(&dk, &inner, -1),
                );
            }
        }
    }

    fn xr_neg(&mut self) {
        let n = self.n;
        let idx = self.indices();
        for i in 1..=n {
            let x = self.xrn(i);
            let mi = -i;
            for &k in idx.iter().filter(|k| k.abs() < i) {
                self.zero(
                    format!("[XR({mi}),mu({k})] = 0"),
                    Self::cm(&x, &Self::mu(k)),
                );
            }
            for &l in idx.iter().filter(|l| l.abs() != i) {
                self.zero(
                    format!("[XR({mi}),mu({l})mu({})^-1] = 0", -l),
                    Self::cm(&x, &Operator::mu_prod([(l, 1), (-l, -1)])),
                );
            }
            self.zero(
                format!("[XR({mi}),mu({i})mu({mi})^-1]_q = 0"),
                Self::br(&x, &Operator::mu_prod([(i, 1), (-i, -1)]), 1),
            );
            self.zero(
                format!("[D({i}),XR({mi})]_q = 0"),
                Self::br(&self.d(i), &x, 1),
            );
            self.zero(
                format!("[XR({mi}),XL({mi})] = 0"),
                Self::cm(&x, &self.xl(i)),
            );
            if i < n {
                let (i1, mi1) = (i + 1, -i - 1);
                let lm = Operator::compose_all([
                    self.r.lambda_pow(-i, 2),
                    Operator::mu_pow(i, 2),
                    self.xl(i + 1),
                ]);
                self.eq(
                    format!(
                        "[XR({mi}),XR({i})D({i1})]_q = q^2 XR({mi1}) - {} Lambda({mi})^2 mu({i})^2 XL({mi1})",
                        qs((i + 3) as i64)
                    ),
                    Self::br(&x, &(&self.xr(i) * &self.d(i + 1)), 1),
                    self.xrn(i + 1)
                        .scale(&q(2))
                        .sub(&lm.scale(&q((i + 3) as i64))),
                );
                self.eq(
                    format!(
                        "[XR({mi}),XL({mi1})D({mi})]_q = -{} Lambda({mi})^2 mu({i})^2 XL({mi1})",
                        qs((i + 2) as i64)
                    ),
                    Self::br(&x, &(&self.xl(i + 1) * &self.d(-i)), 1),
                    lm.scale(&RatQ::int_q_pow(-1, (i + 2) as i64)),
                );
            }
        }
        for i in 1..=n {
            for j in (i + 1)..=n {
                let (mi, mj) = (-i, -j);
                let xj = self.xrn(j);
                self.zero(
                    format!("[XR({i}),XR({mj})] = 0"),
                    Self::cm(&self.xr(i), &xj),
                );
                self.zero(
                    format!("[XR({mj}),XL({mi})]_q = 0"),
                    Self::br(&xj, &self.xl(i), 1),
                );
                self.zero(format!("[D({i}),XR({mj})] = 0"), Self::cm(&self.d(i), &xj));
                self.zero(
                    format!("[D({mi}),XR({mj})]_q = 0"),
                    Self::br(&self.d(-i), &xj, 1),
                );
            }
        }
        for i in 1..=n {
            for j in i..=n {
                let mj = -j;
                let inner = Self::br(&self.d(j), &self.psi(i), 1);
                self.zero(
                    format!("[XR({mj}),[D({j}),Psi({i})]_q] = 0"),
                    Self::cm(&self.xrn(j), &inner),
                );
            }
        }
    }
}

/// All identities of the battery, in a fixed order.
pub fn lemma_identities(r: &Realization) -> Vec<OpIdentity> {
    let mut b = Battery {
        r,
        n: r.rank().n(),
        out: Vec::new(),
    };
    b.recursions();
    b.mu_commutation();
    b.q_commuting_pairs();
    b.number_operators();
    b.phi_psi_mu();
    b.phi_psi_brackets();
    b.xr_neg();
    b.out
}

pub fn lemma_suite(rank: Rank, d: u32) -> Result<SuiteReport> {
    let r = Realization::new(rank);
    let ids = lemma_identities(&r);
    Ok(timed_report("lemmas", rank, d, || {
        check_operator_identities(rank, d, &ids)
    }))
}
