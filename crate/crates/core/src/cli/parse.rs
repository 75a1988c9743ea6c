//! Expression language for scalars, elements and operators.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/')? unary)*        juxtaposition multiplies
//! unary  := '-' unary | power
//! power  := atom ('^' ['+' | '-'] int)?
//! atom   := int | 'q' | '(' expr ')' | x(i)
//!         | d(i) | xl(i) | xr(i) | mu(i) | mu_inv(i)
//!         | e(i) | f(i) | k(i) | k_inv(i) | E(+|-, i, j)
//!         | D(k) | XL(k) | XR(k) | Phi(i) | Psi(i)
//!         | br(expr, expr) | br_ power (expr, expr)
//! ```
//!
//! Products of elements are normal-ordered; an operator followed by an
//! element applies the operator.

use crate::diffops::{Construction, GeneratorOp, Node, Operator, Realization, RootLabel};
use crate::error::{QsympError, Result};
use crate::qfield::RatQ;
use crate::sympspace::{product, Element, Rank};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Scalar(RatQ),
    Element(Element),
    Operator(Operator),
}

impl Value {
    pub fn render(&self) -> String {
        match self {
            Value::Scalar(c) => c.to_string(),
            Value::Element(e) => e.render(),
            Value::Operator(o) => o.render(),
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "scalar",
            Value::Element(_) => "element",
            Value::Operator(_) => "operator",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(u64),
    Ident(String),
    Sym(char),
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = s.char_indices().collect();
    let mut k = 0;
    while k < chars.len() {
        let (pos, c) = chars[k];
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].1.is_ascii_digit() {
                k += 1;
            }
            let text: String = chars[start..k].iter().map(|&(_, c)| c).collect();
            let v = text.parse().map_err(|_| QsympError::Parse {
                pos,
                msg: format!("integer '{text}' is too large"),
            })?;
            out.push((pos, Tok::Int(v)));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = k;
            while k < chars.len() && (chars[k].1.is_ascii_alphanumeric() || chars[k].1 == '_') {
                k += 1;
            }
            let word: String = chars[start..k].iter().map(|&(_, c)| c).collect();
            if word.len() > 3 && word.starts_with("br_") {
                // `br_q^2(...)`: the bracket parameter follows the prefix directly
                k = start + 3;
                out.push((pos, Tok::Ident("br_".into())));
            } else {
                out.push((pos, Tok::Ident(word)));
            }
        } else if "()+-*/^,".contains(c) {
            out.push((pos, Tok::Sym(c)));
            k += 1;
        } else {
            return Err(QsympError::Parse {
                pos,
                msg: format!("unexpected character '{c}'"),
            });
        }
    }
    Ok(out)
}

/// Parser bound to one rank; named operators come from `realization`.
pub struct Parser<'a> {
    realization: &'a Realization,
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

/// Parses `src` as a value at the realization's rank.
pub fn parse_value(realization: &Realization, src: &str) -> Result<Value> {
    let toks = lex(src)?;
    let mut p = Parser {
        realization,
        toks,
        at: 0,
        end: src.len(),
    };
    let v = p.expr()?;
    if p.at < p.toks.len() {
        return Err(p.err("unexpected trailing input"));
    }
    if let Value::Operator(o) = &v {
        o.check_rank(realization.rank())?;
    }
    Ok(v)
}

/// Parses `src` as an element; scalars become constants.
pub fn parse_element(realization: &Realization, src: &str) -> Result<Element> {
    match parse_value(realization, src)? {
        Value::Element(e) => Ok(e),
        Value::Scalar(c) => Ok(Element::constant(realization.rank(), c)),
        Value::Operator(_) => Err(QsympError::Parse {
            pos: 0,
            msg: "expected an element, found an operator".into(),
        }),
    }
}

/// Parses `src` as an operator; scalars become multiples of the identity.
pub fn parse_operator(realization: &Realization, src: &str) -> Result<Operator> {
    match parse_value(realization, src)? {
        Value::Operator(o) => Ok(o),
        Value::Scalar(c) => Ok(Operator::scalar(c)),
        Value::Element(_) => Err(QsympError::Parse {
            pos: 0,
            msg: "expected an operator, found an element".into(),
        }),
    }
}

impl Parser<'_> {
    fn rank(&self) -> Rank {
        self.realization.rank()
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.0)
    }

    fn err(&self, msg: impl Into<String>) -> QsympError {
        QsympError::Parse {
            pos: self.pos(),
            msg: msg.into(),
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn peek_sym(&self, c: char) -> bool {
        self.peek() == Some(&Tok::Sym(c))
    }

    fn expect_sym(&mut self, c: char) -> Result<()> {
        if self.peek_sym(c) {
            self.at += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected '{c}'")))
        }
    }

    fn signed_int(&mut self) -> Result<i64> {
        let mut sign = 1;
        if self.peek_sym('-') {
            sign = -1;
            self.at += 1;
        } else if self.peek_sym('+') {
            self.at += 1;
        }
        match self.peek() {
            Some(Tok::Int(v)) => {
                let v = i64::try_from(*v).map_err(|_| self.err("integer is too large"))?;
                self.at += 1;
                Ok(sign * v)
            }
            _ => Err(self.err("expected an integer")),
        }
    }

    fn expr(&mut self) -> Result<Value> {
        let mut acc = self.term()?;
        loop {
            let pos = self.pos();
            if self.peek_sym('+') {
                self.at += 1;
                let rhs = self.term()?;
                acc = self.add(acc, rhs, false, pos)?;
            } else if self.peek_sym('-') {
                self.at += 1;
                let rhs = self.term()?;
                acc = self.add(acc, rhs, true, pos)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Int(_) | Tok::Ident(_) | Tok::Sym('('))
        )
    }

    fn term(&mut self) -> Result<Value> {
        let mut acc = self.unary()?;
        loop {
            let pos = self.pos();
            if self.peek_sym('*') {
                self.at += 1;
                let rhs = self.unary()?;
                acc = self.mul(acc, rhs, pos)?;
            } else if self.peek_sym('/') {
                self.at += 1;
                let rhs = self.unary()?;
                acc = self.div(acc, rhs, pos)?;
            } else if self.starts_atom() {
                let rhs = self.unary()?;
                acc = self.mul(acc, rhs, pos)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Value> {
        if self.peek_sym('-') {
            self.at += 1;
            let v = self.unary()?;
            return Ok(match v {
                Value::Scalar(c) => Value::Scalar(-c),
                Value::Element(e) => Value::Element(e.neg()),
                Value::Operator(o) => Value::Operator(o.neg()),
            });
        }
        self.power()
    }

    fn power(&mut self) -> Result<Value> {
        let base = self.atom()?;
        if !self.peek_sym('^') {
            return Ok(base);
        }
        self.at += 1;
        let pos = self.pos();
        let k = self.signed_int()?;
        let bad = |msg: &str| QsympError::Parse {
            pos,
            msg: msg.to_string(),
        };
        match base {
            Value::Scalar(c) => Ok(Value::Scalar(c.pow(k)?)),
            Value::Element(e) => {
                let k = u32::try_from(k).map_err(|_| bad("element powers must be nonnegative"))?;
                let mut acc = Element::one(e.rank());
                for _ in 0..k {
                    acc = product(&acc, &e)?;
                }
                Ok(Value::Element(acc))
            }
            Value::Operator(o) => {
                if let Node::Gen(GeneratorOp::Mu(i, s)) = o.node() {
                    return Ok(Value::Operator(Operator::mu_pow(*i, s * k)));
                }
                let k =
                    u32::try_from(k).map_err(|_| bad("only mu has negative operator powers"))?;
                Ok(Value::Operator(o.pow(k)))
            }
        }
    }

    fn index_arg(&mut self) -> Result<i32> {
        let pos = self.pos();
        let v = self.signed_int()?;
        self.rank().index(v).map_err(|e| QsympError::Parse {
            pos,
            msg: e.to_string(),
        })?;
        Ok(v as i32)
    }

    fn positive_arg(&mut self, lo: i64, hi: i64) -> Result<i32> {
        let pos = self.pos();
        let v = self.signed_int()?;
        if v < lo || v > hi {
            return Err(QsympError::Parse {
                pos,
                msg: format!("argument {v} is outside {lo}..={hi}"),
            });
        }
        Ok(v as i32)
    }

    fn one_arg<F>(&mut self, f: F) -> Result<i32>
    where
        F: FnOnce(&mut Self) -> Result<i32>,
    {
        self.expect_sym('(')?;
        let v = f(self)?;
        self.expect_sym(')')?;
        Ok(v)
    }

    fn bracket_args(&mut self) -> Result<(Operator, Operator)> {
        self.expect_sym('(')?;
        let a = self.operator_expr()?;
        self.expect_sym(',')?;
        let b = self.operator_expr()?;
        self.expect_sym(')')?;
        Ok((a, b))
    }

    fn operator_expr(&mut self) -> Result<Operator> {
        let pos = self.pos();
        match self.expr()? {
            Value::Operator(o) => Ok(o),
            Value::Scalar(c) => Ok(Operator::scalar(c)),
            Value::Element(_) => Err(QsympError::Parse {
                pos,
                msg: "bracket arguments must be operators".into(),
            }),
        }
    }

    fn atom(&mut self) -> Result<Value> {
        let pos = self.pos();
        let Some(tok) = self.peek().cloned() else {
            return Err(self.err("unexpected end of input"));
        };
        self.at += 1;
        let name = match tok {
            Tok::Int(v) => {
                let v = i64::try_from(v).map_err(|_| QsympError::Parse {
                    pos,
                    msg: "integer is too large".into(),
                })?;
                return Ok(Value::Scalar(RatQ::from_int(v)));
            }
            Tok::Sym('(') => {
                let v = self.expr()?;
                self.expect_sym(')')?;
                return Ok(v);
            }
            Tok::Sym(c) => {
                return Err(QsympError::Parse {
                    pos,
                    msg: format!("unexpected '{c}'"),
                })
            }
            Tok::Ident(s) => s,
        };
        let n = self.rank().n() as i64;
        let r = self.realization;
        let op = |o: Result<Operator>| o.map(Value::Operator);
        match name.as_str() {
            "q" => Ok(Value::Scalar(RatQ::q_pow(1))),
            "x" => {
                let i = self.one_arg(Self::index_arg)?;
                Ok(Value::Element(Element::generator(self.rank(), i)))
            }
            "d" => op(Ok(Operator::partial(self.one_arg(Self::index_arg)?))),
            "xl" => op(Ok(Operator::left_mul(self.one_arg(Self::index_arg)?))),
            "xr" => op(Ok(Operator::right_mul(self.one_arg(Self::index_arg)?))),
            "mu" => op(Ok(Operator::mu(self.one_arg(Self::index_arg)?))),
            "mu_inv" => op(Ok(Operator::mu_pow(self.one_arg(Self::index_arg)?, -1))),
            "e" => op(r.e(self.one_arg(|p| p.positive_arg(1, n))?)),
            "f" => op(r.f(self.one_arg(|p| p.positive_arg(1, n))?)),
            "k" => op(r.k(self.one_arg(|p| p.positive_arg(1, n))?)),
            "k_inv" => op(r.k_inv(self.one_arg(|p| p.positive_arg(1, n))?)),
            "D" => op(r.d(self.one_arg(Self::index_arg)?)),
            "XL" => {
                let k = self.one_arg(|p| p.positive_arg(-n, -1))?;
                op(r.xl(-k))
            }
            "XR" => {
                let k = self.one_arg(Self::index_arg)?;
                op(if k > 0 { r.xr(k) } else { r.xr_neg(-k) })
            }
            "Phi" => op(r.phi(
                self.one_arg(|p| p.positive_arg(0, n))?,
                Construction::Closed,
            )),
            "Psi" => op(r.psi(
                self.one_arg(|p| p.positive_arg(1, n + 1))?,
                Construction::Closed,
            )),
            "E" => {
                self.expect_sym('(')?;
                let sign = if self.peek_sym('+') {
                    1
                } else if self.peek_sym('-') {
                    -1
                } else {
                    return Err(self.err("expected '+' or '-'"));
                };
                self.at += 1;
                self.expect_sym(',')?;
                let lpos = self.pos();
                let i = self.signed_int()?;
                self.expect_sym(',')?;
                let j = self.signed_int()?;
                self.expect_sym(')')?;
                let label =
                    RootLabel::new(sign * i, j, self.rank()).map_err(|e| QsympError::Parse {
                        pos: lpos,
                        msg: e.to_string(),
                    })?;
                op(r.root(label, Construction::Closed))
            }
            "br" => {
                let (a, b) = self.bracket_args()?;
                Ok(Value::Operator(Operator::commutator(&a, &b)))
            }
            "br_" => {
                let vpos = self.pos();
                let Value::Scalar(v) = self.power()? else {
                    return Err(QsympError::Parse {
                        pos: vpos,
                        msg: "bracket parameter must be a scalar".into(),
                    });
                };
                let (a, b) = self.bracket_args()?;
                Ok(Value::Operator(Operator::bracket(&a, &b, &v)))
            }
            other => Err(QsympError::Parse {
                pos,
                msg: format!("unknown name '{other}'"),
            }),
        }
    }

    fn add(&self, a: Value, b: Value, subtract: bool, pos: usize) -> Result<Value> {
        use Value::*;
        let rank = self.rank();
        let b = if subtract {
            match b {
                Scalar(c) => Scalar(-c),
                Element(e) => Element(e.neg()),
                Operator(o) => Operator(o.neg()),
            }
        } else {
            b
        };
        Ok(match (a, b) {
            (Scalar(x), Scalar(y)) => Scalar(&x + &y),
            (Element(x), Element(y)) => Element(x.add(&y)),
            (Element(x), Scalar(c)) | (Scalar(c), Element(x)) => {
                Element(x.add(&crate::sympspace::Element::constant(rank, c)))
            }
            (Operator(x), Operator(y)) => Operator(x.add(&y)),
            (Operator(x), Scalar(c)) => Operator(x.add(&crate::diffops::Operator::scalar(c))),
            (Scalar(c), Operator(x)) => Operator(crate::diffops::Operator::scalar(c).add(&x)),
            (x, y) => {
                return Err(QsympError::Parse {
                    pos,
                    msg: format!("cannot add {} and {}", x.kind(), y.kind()),
                })
            }
        })
    }

    fn mul(&self, a: Value, b: Value, pos: usize) -> Result<Value> {
        use Value::*;
        Ok(match (a, b) {
            (Scalar(x), Scalar(y)) => Scalar(&x * &y),
            (Scalar(c), Element(e)) | (Element(e), Scalar(c)) => Element(e.scale(&c)),
            (Scalar(c), Operator(o)) | (Operator(o), Scalar(c)) => Operator(o.scale(&c)),
            (Element(x), Element(y)) => Element(product(&x, &y)?),
            (Operator(x), Operator(y)) => Operator(&x * &y),
            (Operator(o), Element(e)) => {
                o.check_rank(e.rank())?;
                Element(o.apply(&e))
            }
            (Element(_), Operator(_)) => {
                return Err(QsympError::Parse {
                    pos,
                    msg: "an element cannot be multiplied by an operator on the right".into(),
                })
            }
        })
    }

    fn div(&self, a: Value, b: Value, pos: usize) -> Result<Value> {
        let Value::Scalar(d) = b else {
            return Err(QsympError::Parse {
                pos,
                msg: "can only divide by a scalar".into(),
            });
        };
        let inv = d.inv()?;
        self.mul(a, Value::Scalar(inv), pos)
    }
}
