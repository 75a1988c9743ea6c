//! Symbolic operator expressions acting on the quantum symplectic space.

use std::fmt;
use std::sync::Arc;

use crate::error::{QsympError, Result};
use crate::qfield::{qint, RatQ};
use crate::sympspace::{left_mul_monomial, right_mul_monomial, Element, Monomial, Rank};

/// The generating operators: `∂_i`, `x_{i_L}`, `x_{i_R}` and `μ_i^s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorOp {
    Partial(i32),
    LeftMul(i32),
    RightMul(i32),
    Mu(i32, i64),
}

impl GeneratorOp {
    pub fn index(self) -> i32 {
        match self {
            GeneratorOp::Partial(i)
            | GeneratorOp::LeftMul(i)
            | GeneratorOp::RightMul(i)
            | GeneratorOp::Mu(i, _) => i,
        }
    }

    /// Accumulates `c * g.x^a` into `out`.
    pub(crate) fn apply_monomial(self, rank: Rank, a: &Monomial, c: &RatQ, out: &mut Element) {
        match self {
            GeneratorOp::Partial(i) => {
                let ai = a.exp(rank, i);
                if ai > 0 {
                    let m = a.shifted(rank, i, -1).expect("positive exponent");
                    out.add_term(m, &(c * &qint(ai as i64)));
                }
            }
            GeneratorOp::LeftMul(i) => left_mul_monomial(rank, i, a, c, out),
            GeneratorOp::RightMul(i) => right_mul_monomial(rank, i, a, c, out),
            GeneratorOp::Mu(i, s) => {
                let e = s * a.exp(rank, i) as i64;
                out.add_term(a.clone(), &c.mul_q_pow(e));
            }
        }
    }

    pub fn apply(self, e: &Element) -> Element {
        let rank = e.rank();
        e.map_linear(|m, out, c| self.apply_monomial(rank, m, c, out))
    }
}

impl fmt::Display for GeneratorOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GeneratorOp::Partial(i) => write!(f, "d({i})"),
            GeneratorOp::LeftMul(i) => write!(f, "xl({i})"),
            GeneratorOp::RightMul(i) => write!(f, "xr({i})"),
            GeneratorOp::Mu(i, 1) => write!(f, "mu({i})"),
            GeneratorOp::Mu(i, -1) => write!(f, "mu_inv({i})"),
            GeneratorOp::Mu(i, s) => write!(f, "mu({i})^{s}"),
        }
    }
}

#[derive(Debug, PartialEq, Eq)]
pub enum Node {
    Gen(GeneratorOp),
    Scale(RatQ, Operator),
    Sum(Vec<Operator>),
    /// Factors in written order; the last one acts first.
    Compose(Vec<Operator>),
    /// `[A, B]_v = AB - v BA`.
    Bracket(Operator, Operator, RatQ),
}

/// An immutable, cheaply clonable operator expression tree.
#[derive(Clone, PartialEq, Eq)]
pub struct Operator(Arc<Node>);

impl Operator {
    fn from_node(n: Node) -> Self {
        Operator(Arc::new(n))
    }

    pub fn node(&self) -> &Node {
        &self.0
    }

    pub fn gen(g: GeneratorOp) -> Self {
        match g {
            GeneratorOp::Mu(_, 0) => Self::identity(),
            _ => Self::from_node(Node::Gen(g)),
        }
    }

    pub fn partial(i: i32) -> Self {
        Self::gen(GeneratorOp::Partial(i))
    }

    pub fn left_mul(i: i32) -> Self {
        Self::gen(GeneratorOp::LeftMul(i))
    }

    pub fn right_mul(i: i32) -> Self {
        Self::gen(GeneratorOp::RightMul(i))
    }

    pub fn mu(i: i32) -> Self {
        Self::gen(GeneratorOp::Mu(i, 1))
    }

    pub fn mu_pow(i: i32, s: i64) -> Self {
        Self::gen(GeneratorOp::Mu(i, s))
    }

    /// `prod μ_i^{s_i}`.
    pub fn mu_prod<I: IntoIterator<Item = (i32, i64)>>(factors: I) -> Self {
        Self::compose_all(factors.into_iter().map(|(i, s)| Self::mu_pow(i, s)))
    }

    pub fn identity() -> Self {
        Self::from_node(Node::Compose(Vec::new()))
    }

    pub fn zero() -> Self {
        Self::from_node(Node::Sum(Vec::new()))
    }

    /// The scalar `c` acting as `c · id`.
    pub fn scalar(c: RatQ) -> Self {
        Self::identity().scale(&c)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.node(), Node::Sum(v) if v.is_empty())
    }

    pub fn is_identity(&self) -> bool {
        matches!(self.node(), Node::Compose(v) if v.is_empty())
    }

    pub fn scale(&self, c: &RatQ) -> Self {
        if c.is_zero() || self.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        match self.node() {
            Node::Scale(c2, inner) => {
                let c = c * c2;
                if c.is_one() {
                    inner.clone()
                } else {
                    Self::from_node(Node::Scale(c, inner.clone()))
                }
            }
            _ => Self::from_node(Node::Scale(c.clone(), self.clone())),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&RatQ::from_int(-1))
    }

    pub fn sum_all<I: IntoIterator<Item = Operator>>(ops: I) -> Self {
        let mut parts = Vec::new();
        for op in ops {
            match op.node() {
                Node::Sum(inner) => parts.extend(inner.iter().cloned()),
                _ => parts.push(op),
            }
        }
        match parts.len() {
            1 => parts.pop().unwrap(),
            _ => Self::from_node(Node::Sum(parts)),
        }
    }

    pub fn add(&self, other: &Operator) -> Self {
        Self::sum_all([self.clone(), other.clone()])
    }

    pub fn sub(&self, other: &Operator) -> Self {
        self.add(&other.neg())
    }

    /// Product in written order: the last factor acts first.
    pub fn compose_all<I: IntoIterator<Item = Operator>>(ops: I) -> Self {
        let mut coeff = RatQ::one();
        let mut parts: Vec<Operator> = Vec::new();
        for op in ops {
            let mut op = op;
            if let Node::Scale(c, inner) = op.node() {
                coeff = &coeff * c;
                op = inner.clone();
            }
            if op.is_zero() {
                return Self::zero();
            }
            match op.node() {
                Node::Compose(inner) => {
                    for f in inner {
                        push_factor(&mut parts, f.clone());
                    }
                }
                _ => push_factor(&mut parts, op),
            }
        }
        let core = match parts.len() {
            1 => parts.pop().unwrap(),
            _ => Self::from_node(Node::Compose(parts)),
        };
        core.scale(&coeff)
    }

    /// `self · other`: `other` acts first.
    pub fn then_after(&self, other: &Operator) -> Self {
        Self::compose_all([self.clone(), other.clone()])
    }

    /// `[A, B]_v = AB - v BA`.
    pub fn bracket(a: &Operator, b: &Operator, v: &RatQ) -> Self {
        if a.is_zero() || b.is_zero() {
            return Self::zero();
        }
        Self::from_node(Node::Bracket(a.clone(), b.clone(), v.clone()))
    }

    /// `[A, B] = AB - BA`.
    pub fn commutator(a: &Operator, b: &Operator) -> Self {
        Self::bracket(a, b, &RatQ::one())
    }

    pub fn pow(&self, k: u32) -> Self {
        Self::compose_all(std::iter::repeat_n(self.clone(), k as usize))
    }

    /// Visits every generator in the tree.
    pub fn for_each_generator<F: FnMut(GeneratorOp)>(&self, f: &mut F) {
        match self.node() {
            Node::Gen(g) => f(*g),
            Node::Scale(_, a) => a.for_each_generator(f),
            Node::Sum(v) | Node::Compose(v) => v.iter().for_each(|a| a.for_each_generator(f)),
            Node::Bracket(a, b, _) => {
                a.for_each_generator(f);
                b.for_each_generator(f);
            }
        }
    }

    /// Checks that every generator index is valid for `rank`.
    pub fn check_rank(&self, rank: Rank) -> Result<()> {
        let mut bad = None;
        self.for_each_generator(&mut |g| {
            let i = g.index();
            if bad.is_none() && (i == 0 || i.abs() > rank.n()) {
                bad = Some(i);
            }
        });
        match bad {
            Some(i) => Err(QsympError::InvalidIndex {
                index: i as i64,
                rank: rank.get(),
            }),
            None => Ok(()),
        }
    }

    /// Evaluates the operator on `e`. Indices must be valid for `e`'s rank.
    pub fn apply(&self, e: &Element) -> Element {
        if e.is_zero() {
            return e.clone();
        }
        match self.node() {
            Node::Gen(g) => g.apply(e),
            Node::Scale(c, a) => a.apply(e).scale(c),
            Node::Sum(v) => {
                let mut out = Element::zero(e.rank());
                for a in v {
                    out.add_scaled(&a.apply(e), &RatQ::one());
                }
                out
            }
            Node::Compose(v) => {
                let mut acc = e.clone();
                for a in v.iter().rev() {
                    acc = a.apply(&acc);
                    if acc.is_zero() {
                        break;
                    }
                }
                acc
            }
            Node::Bracket(a, b, v) => {
                let mut out = a.apply(&b.apply(e));
                if !v.is_zero() {
                    let ba = b.apply(&a.apply(e));
                    out.add_scaled(&ba, &(-v));
                }
                out
            }
        }
    }

    /// Evaluates the operator on a single basis monomial.
    pub fn apply_monomial(&self, m: &Monomial) -> Element {
        self.apply(&Element::monomial(m.clone()))
    }

    /// Like [`Operator::apply`] but checks indices against the rank first.
    pub fn try_apply(&self, e: &Element) -> Result<Element> {
        self.check_rank(e.rank())?;
        Ok(self.apply(e))
    }

    /// Text form in the operator grammar; parses back to an equal operator.
    pub fn render(&self) -> String {
        match self.node() {
            Node::Gen(g) => g.to_string(),
            Node::Scale(c, a) => format!("{} * {}", render_scalar(c), a.render_factor()),
            Node::Sum(v) if v.is_empty() => "0".into(),
            Node::Sum(v) => v.iter().map(|a| a.render()).collect::<Vec<_>>().join(" + "),
            Node::Compose(v) if v.is_empty() => "1".into(),
            Node::Compose(v) => v
                .iter()
                .map(|a| a.render_factor())
                .collect::<Vec<_>>()
                .join(" * "),
            Node::Bracket(a, b, v) if v.is_one() => format!("br({}, {})", a.render(), b.render()),
            Node::Bracket(a, b, v) => {
                format!("br_{}({}, {})", render_scalar(v), a.render(), b.render())
            }
        }
    }

    fn render_factor(&self) -> String {
        match self.node() {
            Node::Sum(v) if v.len() > 1 => format!("({})", self.render()),
            Node::Scale(..) => format!("({})", self.render()),
            _ => self.render(),
        }
    }
}

fn push_factor(parts: &mut Vec<Operator>, f: Operator) {
    if let (Some(last), Node::Gen(GeneratorOp::Mu(j, t))) = (parts.last(), f.node()) {
        if let Node::Gen(GeneratorOp::Mu(i, s)) = last.node() {
            if i == j {
                let merged = Operator::mu_pow(*i, s + t);
                parts.pop();
                if !merged.is_identity() {
                    parts.push(merged);
                }
                return;
            }
        }
    }
    parts.push(f);
}

/// Parenthesized rendering of a scalar, e.g. `(q^2)` or `(q^3-q)`.
fn render_scalar(c: &RatQ) -> String {
    format!("({c})")
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Operator({})", self.render())
    }
}

impl std::ops::Mul for &Operator {
    type Output = Operator;
    fn mul(self, rhs: &Operator) -> Operator {
        self.then_after(rhs)
    }
}

impl std::ops::Add for &Operator {
    type Output = Operator;
    fn add(self, rhs: &Operator) -> Operator {
        Operator::add(self, rhs)
    }
}

impl std::ops::Sub for &Operator {
    type Output = Operator;
    fn sub(self, rhs: &Operator) -> Operator {
        Operator::sub(self, rhs)
    }
}

impl std::ops::Neg for &Operator {
    type Output = Operator;
    fn neg(self) -> Operator {
        Operator::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfield::lambda;

    fn r2() -> Rank {
        Rank::new(2).unwrap()
    }

    fn mono(rank: Rank, word: &[i32]) -> Element {
        let mut e = Element::one(rank);
        for &i in word.iter().rev() {
            e = Operator::left_mul(i).apply(&e);
        }
        e
    }

    #[test]
    fn generator_actions() {
        let n = r2();
        let x1sq = mono(n, &[1, 1]);
        assert_eq!(
            Operator::partial(1).apply(&x1sq),
            Element::generator(n, 1).scale(&qint(2))
        );
        assert!(Operator::partial(2)
            .apply(&Element::generator(n, 1))
            .is_zero());
        let e = mono(n, &[-1, 1]);
        assert_eq!(Operator::mu(-1).apply(&e), e.scale(&RatQ::q_pow(1)));
    }

    #[test]
    fn compose_acts_right_to_left() {
        let n = r2();
        let op = &Operator::partial(1) * &Operator::left_mul(1);
        assert_eq!(op.apply(&Element::one(n)), Element::one(n));
        let rev = &Operator::left_mul(1) * &Operator::partial(1);
        assert!(rev.apply(&Element::one(n)).is_zero());
    }

    #[test]
    fn scale_and_bracket() {
        let n = r2();
        let op = Operator::mu(1).scale(&lambda());
        let x1 = Element::generator(n, 1);
        assert_eq!(op.apply(&x1), x1.scale(&(&lambda() * &RatQ::q_pow(1))));
        let br = Operator::bracket(
            &Operator::partial(-1),
            &Operator::left_mul(-1),
            &RatQ::q_pow(2),
        );
        assert_eq!(br.apply(&Element::one(n)), Element::one(n));
    }

    #[test]
    fn simplification() {
        assert!(Operator::zero().scale(&RatQ::q_pow(3)).is_zero());
        assert!(Operator::compose_all([Operator::mu(1), Operator::zero()]).is_zero());
        let m = Operator::compose_all([Operator::mu(1), Operator::mu_pow(1, -1)]);
        assert!(m.is_identity());
        let s = Operator::sum_all([Operator::zero(), Operator::mu(2)]);
        assert_eq!(s, Operator::mu(2));
        let c =
            Operator::compose_all([Operator::mu(1).scale(&RatQ::q_pow(1)), Operator::partial(1)]);
        assert!(matches!(c.node(), Node::Scale(..)));
    }

    #[test]
    fn rank_check() {
        let op = &Operator::partial(3) * &Operator::mu(1);
        assert!(op.check_rank(r2()).is_err());
        assert!(op.check_rank(Rank::new(3).unwrap()).is_ok());
    }

    #[test]
    fn render_forms() {
        let op = Operator::bracket(&Operator::partial(1), &Operator::mu(2), &RatQ::q_pow(2));
        assert_eq!(op.render(), "br_(q^2)(d(1), mu(2))");
        assert_eq!(Operator::mu_pow(-1, -1).render(), "mu_inv(-1)");
        assert_eq!(Operator::zero().render(), "0");
        assert_eq!(Operator::identity().render(), "1");
    }
}
