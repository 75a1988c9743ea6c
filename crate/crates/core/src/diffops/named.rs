//! Named operators: the Chevalley generators, the auxiliary operators used to
//! realize root vectors, and the root vectors themselves.

use std::collections::HashMap;
use std::fmt;
use std::sync::RwLock;

use serde::Serialize;

use super::operator::Operator;
use crate::error::{QsympError, Result};
use crate::qfield::{lambda, qint, RatQ};
use crate::sympspace::Rank;

/// Label of a positive root: `(i, j)` for `ε_i + ε_j` with `i <= j`, or
/// `(-i, j)` for `-ε_i + ε_j` with `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RootLabel {
    /// Signed first index: positive for `(i, j)`, negative for `(-i, j)`.
    pub first: i32,
    pub second: i32,
}

impl RootLabel {
    pub fn new(first: i64, second: i64, rank: Rank) -> Result<Self> {
        let n = rank.n() as i64;
        let i = first.abs();
        let ok =
            first != 0 && second <= n && i >= 1 && if first > 0 { i <= second } else { i < second };
        if !ok {
            return Err(QsympError::InvalidRootLabel(first, second, rank.get()));
        }
        Ok(RootLabel {
            first: first as i32,
            second: second as i32,
        })
    }

    /// `|first|`.
    pub fn i(self) -> i32 {
        self.first.abs()
    }

    pub fn j(self) -> i32 {
        self.second
    }

    pub fn is_negative(self) -> bool {
        self.first < 0
    }

    /// The root as a vector of `ε` coefficients, length `n`.
    pub fn weight(self, rank: Rank) -> Vec<i64> {
        let mut w = vec![0i64; rank.get()];
        w[(self.j() - 1) as usize] += 1;
        let s = if self.is_negative() { -1 } else { 1 };
        w[(self.i() - 1) as usize] += s;
        w
    }
}

impl fmt::Display for RootLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.first, self.second)
    }
}

/// Which construction of a root vector or of `Φ`/`Ψ` to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Construction {
    /// Directly from the defining sums and closed formulas.
    Closed,
    /// From the recursions (brackets of simpler operators).
    Recursive,
}

/// Names of the operators built by [`Realization`]. Indices are the actual
/// signed indices: `XL(k)` is `𝔛_{k_L}` with `k < 0`, `XRneg(k)` is `𝔛_{k_R}`
/// with `k < 0`, `XR(k)` is `𝔛_{k_R}` with `k > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedOp {
    Tau(i32),
    Lambda(i32),
    D(i32),
    XL(i32),
    XR(i32),
    XRneg(i32),
    Phi(i32, Construction),
    Psi(i32, Construction),
    E(i32),
    F(i32),
    K(i32, i8),
    Root(RootLabel, Construction),
}

/// Builds and memoizes the named operators for one rank.
pub struct Realization {
    rank: Rank,
    memo: RwLock<HashMap<NamedOp, Operator>>,
}

fn q(k: i64) -> RatQ {
    RatQ::q_pow(k)
}

fn inv_qint2() -> RatQ {
    qint(2).inv().expect("[2]_q is nonzero")
}

impl Realization {
    pub fn new(rank: Rank) -> Self {
        Realization {
            rank,
            memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    fn n(&self) -> i32 {
        self.rank.n()
    }

    fn bad(&self, what: &str, i: i32) -> QsympError {
        QsympError::InvalidOperator(format!("{what}({i}) is not defined for n = {}", self.n()))
    }

    /// Returns the operator for `name`, building it on first use.
    pub fn get(&self, name: NamedOp) -> Result<Operator> {
        if let Some(op) = self.memo.read().expect("memo lock").get(&name) {
            return Ok(op.clone());
        }
        let op = self.build(name)?;
        self.memo
            .write()
            .expect("memo lock")
            .entry(name)
            .or_insert_with(|| op.clone());
        Ok(op)
    }

    fn build(&self, name: NamedOp) -> Result<Operator> {
        let n = self.n();
        match name {
            NamedOp::Tau(i) => {
                if i == 0 || i.abs() > n + 1 {
                    return Err(self.bad("tau", i));
                }
                Ok(self.tau_pow(i, 1))
            }
            NamedOp::Lambda(i) => {
                if i.abs() > n {
                    return Err(self.bad("Lambda", i));
                }
                Ok(self.lambda_pow(i, 1))
            }
            NamedOp::D(k) => {
                if k == 0 || k.abs() > n {
                    return Err(self.bad("D", k));
                }
                Ok(if k < 0 {
                    let i = -k;
                    Operator::compose_all([
                        Operator::mu(i),
                        self.tau_pow(-i - 1, -1),
                        Operator::partial(k),
                    ])
                } else {
                    Operator::compose_all([
                        self.tau_pow(1, -1),
                        self.lambda_pow(k - 1, -1),
                        Operator::partial(k),
                    ])
                })
            }
            NamedOp::XL(k) => {
                if !(k < 0 && -k <= n) {
                    return Err(self.bad("XL", k));
                }
                Ok(Operator::compose_all([
                    Operator::mu_prod([(-k, -1), (k, 1)]),
                    Operator::left_mul(k),
                ]))
            }
            NamedOp::XR(k) => {
                if !(k > 0 && k <= n) {
                    return Err(self.bad("XR", k));
                }
                Ok(&self.lambda_pow(k, 2) * &Operator::right_mul(k))
            }
            NamedOp::XRneg(k) => {
                if !(k < 0 && -k <= n) {
                    return Err(self.bad("XRneg", k));
                }
                let i = -k;
                let inner = Operator::sum_all([
                    &Operator::mu_pow(i, 2) * &self.get(NamedOp::XL(-i))?,
                    Operator::compose_all([
                        Operator::mu_pow(-i, 2),
                        self.psi(i + 1, Construction::Closed)?,
                        self.get(NamedOp::D(i))?,
                    ])
                    .scale(&lambda()),
                ]);
                Ok((&self.lambda_pow(1 - i, 2) * &inner).scale(&q(i as i64)))
            }
            NamedOp::Phi(i, c) => {
                if i < 0 || i > n {
                    return Err(self.bad("Phi", i));
                }
                if i == 0 {
                    return Ok(Operator::zero());
                }
                Ok(match c {
                    Construction::Closed => Operator::sum_all(
                        (1..=i)
                            .map(|j| self.phi_summand(j).map(|t| t.scale(&q((j - i) as i64))))
                            .collect::<Result<Vec<_>>>()?,
                    ),
                    Construction::Recursive => self
                        .phi_summand(i)?
                        .add(&self.get(NamedOp::Phi(i - 1, c))?.scale(&q(-1))),
                })
            }
            NamedOp::Psi(i, c) => {
                if i < 1 || i > n + 1 {
                    return Err(self.bad("Psi", i));
                }
                if i == n + 1 {
                    return Ok(Operator::zero());
                }
                Ok(match c {
                    Construction::Closed => {
                        let sum = Operator::sum_all(
                            (i..=n)
                                .map(|j| {
                                    Ok(Operator::compose_all([
                                        self.tau_pow(-j, -2),
                                        self.get(NamedOp::XL(-j))?,
                                        self.get(NamedOp::XR(j))?,
                                    ])
                                    .scale(&q((j - i) as i64)))
                                })
                                .collect::<Result<Vec<_>>>()?,
                        );
                        &self.tau_pow(-i, 2) * &sum
                    }
                    Construction::Recursive => {
                        let head = &self.get(NamedOp::XL(-i))? * &self.get(NamedOp::XR(i))?;
                        let tail = (&Operator::mu_pow(-i, 2)
                            * &self.get(NamedOp::Psi(i + 1, c))?)
                            .scale(&q(1));
                        head.add(&tail)
                    }
                })
            }
            NamedOp::E(i) => self.chevalley_e(i),
            NamedOp::F(i) => self.chevalley_f(i),
            NamedOp::K(i, s) => {
                if i < 1 || i > n || !(s == 1 || s == -1) {
                    return Err(self.bad("k", i));
                }
                let s = s as i64;
                Ok(if i == 1 {
                    Operator::mu_prod([(-1, 2 * s), (1, -2 * s)])
                } else {
                    Operator::mu_prod([(-i, s), (1 - i, -s), (i - 1, s), (i, -s)])
                })
            }
            NamedOp::Root(label, c) => {
                RootLabel::new(label.first as i64, label.second as i64, self.rank)?;
                match c {
                    Construction::Closed => self.root_closed(label),
                    Construction::Recursive => self.root_recursive(label),
                }
            }
        }
    }

    /// `τ_i^s`; `τ_{±(n+1)} = 1`.
    pub fn tau_pow(&self, i: i32, s: i64) -> Operator {
        let n = self.n();
        if i > 0 {
            Operator::mu_prod((i..=n).map(|j| (j, s)))
        } else {
            Operator::mu_prod((-n..=i).map(|j| (j, s)))
        }
    }

    /// `Λ_i^s`; `Λ_0 = 1`.
    pub fn lambda_pow(&self, i: i32, s: i64) -> Operator {
        if i >= 0 {
            Operator::mu_prod((1..=i).map(|j| (j, s)))
        } else {
            Operator::mu_prod((i..=-1).map(|j| (j, s)))
        }
    }

    /// `Λ_{j-1}^2 𝔇_{-j} 𝔇_j`.
    fn phi_summand(&self, j: i32) -> Result<Operator> {
        Ok(Operator::compose_all([
            self.lambda_pow(j - 1, 2),
            self.get(NamedOp::D(-j))?,
            self.get(NamedOp::D(j))?,
        ]))
    }

    fn chevalley_e(&self, i: i32) -> Result<Operator> {
        let n = self.n();
        if i < 1 || i > n {
            return Err(self.bad("e", i));
        }
        if i == 1 {
            let inner = Operator::sum_all([
                &self.tau_pow(-2, -1) * &Operator::left_mul(-1),
                (&self.tau_pow(2, -1) * &Operator::right_mul(-1)).scale(&q(2)),
            ]);
            let c = &inv_qint2() * &q(-1);
            return Ok(Operator::compose_all([
                Operator::mu_pow(1, -1),
                inner,
                Operator::partial(1),
            ])
            .scale(&c));
        }
        let first = Operator::compose_all([
            Operator::mu_prod([(i - 1, 1), (i, -1)]),
            self.tau_pow(-i - 1, -1),
            Operator::left_mul(-i),
            Operator::partial(1 - i),
        ]);
        let second = Operator::compose_all([
            self.tau_pow(i, -1),
            Operator::right_mul(i - 1),
            Operator::partial(i),
        ]);
        Ok(first.sub(&second))
    }

    fn chevalley_f(&self, i: i32) -> Result<Operator> {
        let n = self.n();
        if i < 1 || i > n {
            return Err(self.bad("f", i));
        }
        if i == 1 {
            let inner = Operator::sum_all([
                &self.tau_pow(2, -1) * &Operator::right_mul(1),
                (&self.tau_pow(-2, -1) * &Operator::left_mul(1)).scale(&q(2)),
            ]);
            let c = &inv_qint2() * &q(-1);
            return Ok(Operator::compose_all([
                Operator::mu_pow(-1, -1),
                inner,
                Operator::partial(-1),
            ])
            .scale(&c));
        }
        let first = Operator::compose_all([
            Operator::mu_prod([(1 - i, 1), (-i, -1)]),
            self.tau_pow(i + 1, -1),
            Operator::right_mul(i),
            Operator::partial(i - 1),
        ]);
        let second = Operator::compose_all([
            self.tau_pow(-i, -1),
            Operator::left_mul(1 - i),
            Operator::partial(-i),
        ]);
        Ok(second.sub(&first))
    }

    fn root_closed(&self, label: RootLabel) -> Result<Operator> {
        let (i, j) = (label.i(), label.j());
        let d = |k| self.get(NamedOp::D(k));
        let t1 = self.tau_pow(1, 1);
        let tm1 = self.tau_pow(-1, -1);
        if label.is_negative() {
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            let dpsi = Operator::bracket(&d(j)?, &self.psi(i + 1, Construction::Closed)?, &q(1));
            let body = (&self.get(NamedOp::XR(i))? * &d(j)?).sub(&(&dpsi * &d(-i)?));
            return Ok(body.scale(&RatQ::int_q_pow(sign, -2)));
        }
        if i == j {
            let dpsi = Operator::bracket(&d(i)?, &self.psi(1, Construction::Closed)?, &q(1));
            let body = Operator::sum_all([
                &self.get(NamedOp::XRneg(-i))? * &d(i)?,
                (&dpsi * &d(i)?).scale(&q(-2)),
            ]);
            return Ok(Operator::compose_all([t1, tm1, body]).scale(&inv_qint2()));
        }
        let sign = if (j + 1) % 2 == 0 { 1 } else { -1 };
        let xl = self.get(NamedOp::XL(-i))?;
        let phix = Operator::bracket(
            &self.get(NamedOp::Phi(i, Construction::Closed))?,
            &xl,
            &q(1),
        );
        let body = Operator::sum_all([
            &xl * &d(j)?,
            (&self.get(NamedOp::XRneg(-j))? * &phix).scale(&q((i - 1) as i64)),
        ]);
        Ok(Operator::compose_all([t1, tm1, body]).scale(&RatQ::from_int(sign)))
    }

    fn root_recursive(&self, label: RootLabel) -> Result<Operator> {
        let (i, j) = (label.i(), label.j());
        let rec = |a: i32, b: i32| {
            self.get(NamedOp::Root(
                RootLabel::new(a as i64, b as i64, self.rank)?,
                Construction::Recursive,
            ))
        };
        if label.is_negative() {
            if i == j - 1 {
                return self.e(j);
            }
            return Ok(Operator::bracket(&rec(-i, j - 1)?, &self.e(j)?, &q(1)));
        }
        if i == j {
            if j == 1 {
                return self.e(1);
            }
            let br = Operator::commutator(&rec(1, j)?, &rec(-1, j)?);
            return Ok(br.scale(&inv_qint2()));
        }
        if (i, j) == (1, 2) {
            return Ok(Operator::bracket(&self.e(1)?, &self.e(2)?, &q(2)));
        }
        if i == j - 1 {
            return Ok(Operator::bracket(&self.e(j - 1)?, &rec(j - 2, j)?, &q(1)));
        }
        Ok(Operator::bracket(&rec(i, j - 1)?, &self.e(j)?, &q(1)))
    }

    pub fn e(&self, i: i32) -> Result<Operator> {
        self.get(NamedOp::E(i))
    }

    pub fn f(&self, i: i32) -> Result<Operator> {
        self.get(NamedOp::F(i))
    }

    pub fn k(&self, i: i32) -> Result<Operator> {
        self.get(NamedOp::K(i, 1))
    }

    pub fn k_inv(&self, i: i32) -> Result<Operator> {
        self.get(NamedOp::K(i, -1))
    }

    /// `𝔇_k` for `k ∈ I`.
    pub fn d(&self, k: i32) -> Result<Operator> {
        self.get(NamedOp::D(k))
    }

    /// `𝔛_{-i_L}` for `i ∈ I^+`.
    pub fn xl(&self, i: i32) -> Result<Operator> {
        self.get(NamedOp::XL(-i))
    }

    /// `𝔛_{i_R}` for `i ∈ I^+`.
    pub fn xr(&self, i: i32) -> Result<Operator> {
        self.get(NamedOp::XR(i))
    }

    /// `𝔛_{-i_R}` for `i ∈ I^+`.
    pub fn xr_neg(&self, i: i32) -> Result<Operator> {
        self.get(NamedOp::XRneg(-i))
    }

    pub fn phi(&self, i: i32, c: Construction) -> Result<Operator> {
        self.get(NamedOp::Phi(i, c))
    }

    pub fn psi(&self, i: i32, c: Construction) -> Result<Operator> {
        self.get(NamedOp::Psi(i, c))
    }

    pub fn root(&self, label: RootLabel, c: Construction) -> Result<Operator> {
        self.get(NamedOp::Root(label, c))
    }
}
