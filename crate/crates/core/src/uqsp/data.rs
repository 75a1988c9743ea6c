//! Structural data of U_q(sp_2n): Cartan matrix, coproduct, counit, and the
//! ordered list of positive roots.

use std::fmt;

use crate::diffops::{Operator, Realization, RootLabel};
use crate::error::Result;
use crate::qfield::RatQ;
use crate::sympspace::Rank;

/// Cartan matrix with `α_1 = 2ε_1` long, and the symmetrizers `d_i` with
/// `q_i = q^{d_i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanData {
    pub rank: Rank,
    pub a: Vec<Vec<i64>>,
    pub d: Vec<i64>,
}

impl CartanData {
    pub fn new(rank: Rank) -> Self {
        let n = rank.get();
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
            if i + 1 < n {
                row[i + 1] = -1;
            }
            if i > 0 {
                row[i - 1] = -1;
            }
        }
        a[1][0] = -2;
        let d = (0..n).map(|i| if i == 0 { 2 } else { 1 }).collect();
        CartanData { rank, a, d }
    }

    /// `a_ij` for `1 <= i, j <= n`.
    pub fn entry(&self, i: i32, j: i32) -> i64 {
        self.a[(i - 1) as usize][(j - 1) as usize]
    }

    /// `d_i`, so that `q_i = q^{d_i}`.
    pub fn d_of(&self, i: i32) -> i64 {
        self.d[(i - 1) as usize]
    }

    pub fn qi(&self, i: i32) -> RatQ {
        RatQ::q_pow(self.d_of(i))
    }

    /// `(α_i, β)` for `β` given in `ε`-coordinates, with `(ε_k, ε_l) = δ_kl`.
    pub fn pairing_with_simple(&self, i: i32, beta: &[i64]) -> i64 {
        let i = i as usize;
        if i == 1 {
            2 * beta[0]
        } else {
            beta[i - 1] - beta[i - 2]
        }
    }
}

/// Generators of U_q(sp_2n) together with the unit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HopfGen {
    One,
    E(i32),
    F(i32),
    K(i32),
    KInv(i32),
}

impl HopfGen {
    /// The operator realizing this generator on the symplectic space.
    pub fn operator(self, r: &Realization) -> Result<Operator> {
        match self {
            HopfGen::One => Ok(Operator::identity()),
            HopfGen::E(i) => r.e(i),
            HopfGen::F(i) => r.f(i),
            HopfGen::K(i) => r.k(i),
            HopfGen::KInv(i) => r.k_inv(i),
        }
    }
}

impl fmt::Display for HopfGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HopfGen::One => write!(f, "1"),
            HopfGen::E(i) => write!(f, "e({i})"),
            HopfGen::F(i) => write!(f, "f({i})"),
            HopfGen::K(i) => write!(f, "k({i})"),
            HopfGen::KInv(i) => write!(f, "k_inv({i})"),
        }
    }
}

/// `Δ(g) = Σ left ⊗ right`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoproductRule {
    pub generator: HopfGen,
    pub terms: Vec<(HopfGen, HopfGen)>,
}

impl CoproductRule {
    pub fn of(g: HopfGen) -> Self {
        let terms = match g {
            HopfGen::One => vec![(HopfGen::One, HopfGen::One)],
            HopfGen::E(i) => vec![
                (HopfGen::E(i), HopfGen::K(i)),
                (HopfGen::One, HopfGen::E(i)),
            ],
            HopfGen::F(i) => vec![
                (HopfGen::F(i), HopfGen::One),
                (HopfGen::KInv(i), HopfGen::F(i)),
            ],
            HopfGen::K(i) => vec![(HopfGen::K(i), HopfGen::K(i))],
            HopfGen::KInv(i) => vec![(HopfGen::KInv(i), HopfGen::KInv(i))],
        };
        CoproductRule {
            generator: g,
            terms,
        }
    }
}

impl fmt::Display for CoproductRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rhs: Vec<String> = self.terms.iter().map(|(a, b)| format!("{a}⊗{b}")).collect();
        write!(f, "Δ({}) = {}", self.generator, rhs.join(" + "))
    }
}

/// `ε(g)`.
pub fn counit(g: HopfGen) -> i64 {
    match g {
        HopfGen::E(_) | HopfGen::F(_) => 0,
        HopfGen::One | HopfGen::K(_) | HopfGen::KInv(_) => 1,
    }
}

/// The `n^2` positive roots in the order induced by the reduced expression of
/// the longest Weyl group element:
/// `(1,1); (1,2), (2,2), (-1,2); (2,3), (1,3), (3,3), (-1,3), (-2,3); ...`.
pub fn enumerate_positive_roots(rank: Rank) -> Vec<RootLabel> {
    let n = rank.n();
    let mut out = vec![RootLabel {
        first: 1,
        second: 1,
    }];
    for j in 2..=n {
        for i in (1..j).rev() {
            out.push(RootLabel {
                first: i,
                second: j,
            });
        }
        out.push(RootLabel {
            first: j,
            second: j,
        });
        for i in 1..j {
            out.push(RootLabel {
                first: -i,
                second: j,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: i64) -> Vec<String> {
        enumerate_positive_roots(Rank::new(n).unwrap())
            .iter()
            .map(|l| l.to_string())
            .collect()
    }

    #[test]
    fn root_order() {
        assert_eq!(labels(2), ["(1,1)", "(1,2)", "(2,2)", "(-1,2)"]);
        let l3 = labels(3);
        assert_eq!(l3.len(), 9);
        assert_eq!(&l3[4..], ["(2,3)", "(1,3)", "(3,3)", "(-1,3)", "(-2,3)"]);
        assert_eq!(labels(4).len(), 16);
    }

    #[test]
    fn cartan_matrix() {
        let c = CartanData::new(Rank::new(3).unwrap());
        assert_eq!(c.a, vec![vec![2, -1, 0], vec![-2, 2, -1], vec![0, -1, 2]]);
        assert_eq!(c.qi(1), RatQ::q_pow(2));
        assert_eq!(c.qi(3), RatQ::q_pow(1));
        // d_i a_ij is symmetric
        for i in 1..=3 {
            for j in 1..=3 {
                assert_eq!(c.d_of(i) * c.entry(i, j), c.d_of(j) * c.entry(j, i));
                let mut beta = vec![0i64; 3];
                if j == 1 {
                    beta[0] = 2;
                } else {
                    beta[(j - 1) as usize] = 1;
                    beta[(j - 2) as usize] = -1;
                }
                assert_eq!(c.pairing_with_simple(i, &beta), c.d_of(i) * c.entry(i, j));
            }
        }
    }

    #[test]
    fn coproduct_and_counit() {
        let r = CoproductRule::of(HopfGen::E(2));
        assert_eq!(r.to_string(), "Δ(e(2)) = e(2)⊗k(2) + 1⊗e(2)");
        let r = CoproductRule::of(HopfGen::F(1));
        assert_eq!(r.to_string(), "Δ(f(1)) = f(1)⊗1 + k_inv(1)⊗f(1)");
        assert_eq!(counit(HopfGen::E(1)), 0);
        assert_eq!(counit(HopfGen::KInv(2)), 1);
    }
}
