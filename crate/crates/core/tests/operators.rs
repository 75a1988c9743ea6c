use proptest::prelude::*;
use qsymp::diffops::{op_equal_up_to, Construction, Operator, Realization, RootLabel};
use qsymp::qfield::RatQ;
use qsymp::sympspace::{Element, Rank};
use qsymp::uqsp::{actions_suite, e12_action};

const D: u32 = 3;

fn rank2() -> Rank {
    Rank::new(2).unwrap()
}

fn q(k: i64) -> RatQ {
    RatQ::q_pow(k)
}

fn br(a: &Operator, b: &Operator, v: &RatQ) -> Operator {
    Operator::bracket(a, b, v)
}

fn same(a: &Operator, b: &Operator) -> bool {
    op_equal_up_to(a, b, rank2(), D).is_equal()
}

fn generator(kind: u8, i: i32) -> Operator {
    match kind {
        0 => Operator::partial(i),
        1 => Operator::left_mul(i),
        2 => Operator::right_mul(i),
        3 => Operator::mu(i),
        _ => Operator::mu_pow(i, -1),
    }
}

fn gen_strategy() -> impl Strategy<Value = Operator> {
    (0u8..5, prop_oneof![Just(-2), Just(-1), Just(1), Just(2)]).prop_map(|(k, i)| generator(k, i))
}

/// A short product of generators.
fn word_strategy() -> impl Strategy<Value = Operator> {
    prop::collection::vec(gen_strategy(), 1..=2).prop_map(Operator::compose_all)
}

fn v_strategy() -> impl Strategy<Value = RatQ> {
    (-2i64..=2).prop_map(q)
}

/// The `u` with `AB = uBA`, among small powers of `q`, if any.
fn q_commutes(a: &Operator, b: &Operator) -> Option<RatQ> {
    (-4..=4).map(q).find(|u| same(&(a * b), &(b * a).scale(u)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bracket_antisymmetry(a in word_strategy(), b in word_strategy()) {
        let lhs = br(&a, &b, &q(1));
        let rhs = br(&b, &a, &q(-1)).scale(&-q(1));
        prop_assert!(same(&lhs, &rhs));
    }

    #[test]
    fn bracket_of_product(a in gen_strategy(), b in gen_strategy(), c in gen_strategy()) {
        let lhs = br(&(&a * &b), &c, &q(2));
        let rhs = (&a * &br(&b, &c, &q(1))).add(&(&br(&a, &c, &q(1)) * &b).scale(&q(1)));
        prop_assert!(same(&lhs, &rhs));
    }

    #[test]
    fn nested_bracket(a in gen_strategy(), b in gen_strategy(), c in gen_strategy()) {
        let lhs = br(&br(&a, &b, &q(1)), &c, &q(1));
        let rhs = br(&a, &Operator::commutator(&b, &c), &q(2))
            .add(&br(&br(&a, &c, &q(1)), &b, &q(1)));
        prop_assert!(same(&lhs, &rhs));
    }

    #[test]
    fn bracket_with_q_commuting_factor(
        a in gen_strategy(), b in gen_strategy(), c in word_strategy(), v in v_strategy()
    ) {
        if let Some(u) = q_commutes(&a, &b) {
            let vu = v.checked_div(&u).unwrap();
            prop_assert!(same(&br(&a, &(&b * &c), &v), &(&b * &br(&a, &c, &vu)).scale(&u)));
            prop_assert!(same(&br(&a, &(&c * &b), &v), &(&br(&a, &c, &vu) * &b)));
            prop_assert!(same(&br(&(&c * &a), &b, &v), &(&br(&c, &b, &vu) * &a).scale(&u)));
            prop_assert!(same(&br(&(&a * &c), &b, &v), &(&a * &br(&c, &b, &vu))));
        }
    }

    #[test]
    fn nested_bracket_with_q_commuting_pair(
        a in gen_strategy(), b in word_strategy(), c in gen_strategy(),
        v in v_strategy(), w in v_strategy()
    ) {
        if let Some(u) = q_commutes(&a, &c) {
            let wu = w.checked_div(&u).unwrap();
            let vu = v.checked_div(&u).unwrap();
            prop_assert!(same(
                &br(&br(&a, &b, &v), &c, &w),
                &br(&a, &br(&b, &c, &wu), &(&u * &v)),
            ));
            prop_assert!(same(
                &br(&br(&b, &a, &v), &c, &w),
                &br(&br(&b, &c, &wu), &a, &vu).scale(&u),
            ));
        }
    }
}

#[test]
fn plain_bracket_is_commutator() {
    let a = Operator::partial(1);
    let b = Operator::left_mul(-1);
    assert!(same(&br(&a, &b, &q(0)), &(&a * &b).sub(&(&b * &a))));
    assert!(same(
        &Operator::commutator(&a, &b),
        &(&a * &b).sub(&(&b * &a))
    ));
}

#[test]
fn generator_level_values() {
    let r = rank2();
    let one = Element::one(r);
    // ∂_{-1} x_{-1_L}.1 - q^2 x_{-1_L} ∂_{-1}.1 = [1]_q = 1
    let op = br(&Operator::partial(-1), &Operator::left_mul(-1), &q(2));
    assert_eq!(op.apply(&one), one);
    let x1 = Element::generator(r, 1);
    let rz = Realization::new(r);
    assert_eq!(rz.e(1).unwrap().apply(&x1), Element::generator(r, -1));
    assert_eq!(
        rz.k(1).unwrap().apply(&Element::generator(r, -1)),
        Element::generator(r, -1).scale(&q(2))
    );
}

#[test]
fn e12_matches_closed_action_on_low_degree() {
    let r = rank2();
    let rz = Realization::new(r);
    let e12 = rz
        .root(RootLabel::new(1, 2, r).unwrap(), Construction::Recursive)
        .unwrap();
    assert_eq!(
        e12.apply(&Element::generator(r, 1)).render(),
        "-q^2 * x(-2)"
    );
    for m in qsymp::sympspace::basis_up_to(r, 3) {
        assert_eq!(e12.apply_monomial(&m), e12_action(r, &m));
    }
}

#[test]
fn actions_match_closed_forms() {
    for n in [2, 3] {
        let rep = actions_suite(Rank::new(n).unwrap(), 3).unwrap();
        assert!(rep.all_pass(), "{}", rep.to_text());
    }
}

#[test]
fn psi_phi_commute_with_balanced_mu() {
    // every term of Psi(i) and Phi(i) shifts a_{-j} and a_j together
    for n in [2, 3] {
        let r = Rank::new(n).unwrap();
        let rz = Realization::new(r);
        for i in 1..=n as i32 {
            let ps = rz.psi(i, Construction::Closed).unwrap();
            let ph = rz.phi(i, Construction::Closed).unwrap();
            for k in 1..=n as i32 {
                let m = Operator::mu_prod([(k, 1), (-k, -1)]);
                for op in [&ps, &ph] {
                    let c = Operator::commutator(op, &m);
                    assert!(op_equal_up_to(&c, &Operator::zero(), r, 3).is_equal());
                }
            }
        }
    }
}
