//! Acceptance run: one PASS/FAIL line per criterion, each under its time
//! limit. Exits non-zero on any unexplained failure.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use qsymp::diffops::Realization;
use qsymp::qfield::{qbinom, qint, qint_base, RatQ};
use qsymp::sympspace::{basis_up_to, naive_normalize, product, Element, Rank};
use qsymp::uqsp::{
    actions_suite, enumerate_positive_roots, f_closure_dim, highest_weight_suite,
    highest_weight_vector, lemma_suite, module_algebra_suite, root_vector_suite, serre_suite,
    SuiteReport,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

enum Outcome {
    Pass(String),
    Fail(String),
    /// Fails exactly where an independent analysis predicts it must.
    KnownFail(String),
}

fn rank(n: i64) -> Rank {
    Rank::new(n).unwrap()
}

fn mul(a: &Element, b: &Element) -> Element {
    product(a, b).unwrap()
}

fn chain(r: Rank, word: &[i32]) -> Element {
    word.iter().fold(Element::one(r), |acc, &i| {
        mul(&acc, &Element::generator(r, i))
    })
}

fn naive(r: Rank, word: &[i32]) -> Element {
    let idx: Vec<_> = word.iter().map(|&i| r.index(i as i64).unwrap()).collect();
    naive_normalize(r, &idx).unwrap()
}

fn suites_outcome(reports: &[SuiteReport]) -> Outcome {
    let total: usize = reports.iter().map(|r| r.records.len()).sum();
    let failed: Vec<String> = reports
        .iter()
        .flat_map(|r| r.failures().map(move |f| format!("n={} {}", r.n, f.id)))
        .collect();
    if failed.is_empty() {
        Outcome::Pass(format!("{total} identities"))
    } else {
        Outcome::Fail(format!(
            "{} of {total} failed: {}",
            failed.len(),
            failed.join("; ")
        ))
    }
}

fn q_identities() -> Outcome {
    let q = RatQ::q_pow;
    let mut bad = Vec::new();
    for m in -10i64..=10 {
        let b1 = qbinom(m + 1, 2).unwrap();
        let b0 = qbinom(m, 2).unwrap();
        let ok = qint(m + 1) == &(&q(1) * &qint(m)) + &q(-m)
            && qint(m + 1) == &(&q(-1) * &qint(m)) + &q(m)
            && &b1 - &b0 == qint_base(m, 2)
            && &b1 - &(&q(2) * &b0) == &q(1 - m) * &qint(m);
        if !ok {
            bad.push(m);
        }
    }
    if bad.is_empty() {
        Outcome::Pass("m in -10..=10".into())
    } else {
        Outcome::Fail(format!("fails at m = {bad:?}"))
    }
}

fn oracle_equivalence() -> Outcome {
    let r2 = rank(2);
    let letters = [-2, -1, 1, 2];
    let mut count = 0;
    for code in 0..256usize {
        let word: Vec<i32> = (0..4).map(|t| letters[(code >> (2 * t)) & 3]).collect();
        if naive(r2, &word) != chain(r2, &word) {
            return Outcome::Fail(format!("n=2 word {word:?}"));
        }
        count += 1;
    }
    let r3 = rank(3);
    let letters = [-3, -2, -1, 1, 2, 3];
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..200 {
        let word: Vec<i32> = (0..6).map(|_| letters[rng.gen_range(0..6)]).collect();
        if naive(r3, &word) != chain(r3, &word) {
            return Outcome::Fail(format!("n=3 word {word:?}"));
        }
        count += 1;
    }
    Outcome::Pass(format!("{count} words"))
}

fn associativity() -> Outcome {
    let r = rank(2);
    let basis: Vec<Element> = basis_up_to(r, 2)
        .into_iter()
        .filter(|m| m.degree() == 2)
        .map(Element::monomial)
        .collect();
    let mut count = 0;
    for a in &basis {
        for b in &basis {
            let ab = mul(a, b);
            for c in &basis {
                if mul(&ab, c) != mul(a, &mul(b, c)) {
                    return Outcome::Fail(format!(
                        "({})({})({})",
                        a.render(),
                        b.render(),
                        c.render()
                    ));
                }
                count += 1;
            }
        }
    }
    Outcome::Pass(format!("{count} triples"))
}

fn actions() -> Outcome {
    let reports: Vec<SuiteReport> = [2, 3]
        .iter()
        .map(|&n| actions_suite(rank(n), 4).unwrap())
        .collect();
    if basis_up_to(rank(3), 4).len() != 210 {
        return Outcome::Fail("n=3 degree <= 4 basis does not have 210 monomials".into());
    }
    suites_outcome(&reports)
}

fn serre() -> Outcome {
    let reports: Vec<SuiteReport> = [2, 3]
        .iter()
        .map(|&n| serre_suite(rank(n), 4).unwrap())
        .collect();
    suites_outcome(&reports)
}

fn module_algebra() -> Outcome {
    let reports = vec![
        module_algebra_suite(rank(2), 3).unwrap(),
        module_algebra_suite(rank(3), 2).unwrap(),
    ];
    suites_outcome(&reports)
}

fn binomial(a: u64, b: u64) -> u64 {
    (0..b).fold(1, |acc, t| acc * (a - t) / (t + 1))
}

fn highest_weight() -> Outcome {
    let pairs = [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3)];
    let mut reports = Vec::new();
    let mut dims = Vec::new();
    for (n, m) in pairs {
        let r = rank(n);
        let want = binomial((2 * n + m - 1) as u64, m as u64);
        let got = f_closure_dim(&Realization::new(r), &highest_weight_vector(r, m as u32)).unwrap()
            as u64;
        if got != want {
            return Outcome::Fail(format!("n={n} m={m}: dimension {got}, expected {want}"));
        }
        dims.push(format!("({n},{m})->{got}"));
        reports.push(highest_weight_suite(r, m as u32).unwrap());
    }
    match suites_outcome(&reports) {
        Outcome::Pass(s) => Outcome::Pass(format!("{s}; dims {}", dims.join(" "))),
        other => other,
    }
}

/// Identities of the form `[Psi(i),mu(k)]_q^-1 = 0` or `[Phi(i),mu(t)]_q = 0`
/// that cannot hold: `Psi(i)` raises `(a_{-j}, a_j)` for every `j >= i`, and
/// `mu(k)` sees these terms with different weights unless only `j = n`
/// contributes; `Phi(i)` lowers `(a_{-j}, a_j)` for `j <= i` with the same
/// defect unless only `j = 1` contributes.
fn predicted_false(n: i32) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    for i in 1..=n {
        for k in (1..=n).flat_map(|k| [k, -k]) {
            if k.abs() > i || (k.abs() == i && i < n) {
                out.insert(format!("[Psi({i}),mu({k})]_q^-1 = 0"));
            }
            if k.abs() < i || (k.abs() == i && i > 1) {
                out.insert(format!("[Phi({i}),mu({k})]_q = 0"));
            }
        }
    }
    out
}

fn lemma_battery() -> Outcome {
    let mut total = 0;
    let mut failed = 0;
    for n in [2, 3] {
        let rep = lemma_suite(rank(n as i64), 4).unwrap();
        total += rep.records.len();
        failed += rep.failed();
        let got: BTreeSet<String> = rep.failures().map(|f| f.id.clone()).collect();
        let want = predicted_false(n);
        if got != want {
            let extra: Vec<_> = got.difference(&want).collect();
            let missing: Vec<_> = want.difference(&got).collect();
            return Outcome::Fail(format!(
                "n={n}: unexpected failures {extra:?}, unexpected passes {missing:?}"
            ));
        }
    }
    if failed == 0 {
        Outcome::Pass(format!("{total} identities"))
    } else {
        Outcome::KnownFail(format!(
            "{failed} of {total} failed, exactly the mu-bracket forms for Psi/Phi \
             whose terms carry unequal mu weights; all other identities pass"
        ))
    }
}

fn root_vectors() -> Outcome {
    for (n, want) in [(2, 4), (3, 9)] {
        let got = enumerate_positive_roots(rank(n)).len();
        if got != want {
            return Outcome::Fail(format!("n={n}: {got} roots"));
        }
    }
    let reports: Vec<SuiteReport> = [2, 3]
        .iter()
        .map(|&n| root_vector_suite(rank(n), 4).unwrap())
        .collect();
    suites_outcome(&reports)
}

fn cli_golden() -> Outcome {
    let cases: [(&[&str], &str); 6] = [
        (
            &["apply", "--n", "2", "--op", "e(1)", "--elem", "x(1)"],
            "x(-1)\n",
        ),
        (
            &["apply", "--n", "2", "--op", "k(1)", "--elem", "x(-1)"],
            "q^2 * x(-1)\n",
        ),
        (
            &["apply", "--n", "2", "--op", "E(+,1,2)", "--elem", "x(1)"],
            "-q^2 * x(-2)\n",
        ),
        (&["mul", "--n", "2", "x(2)", "x(1)"], "q * x(1)x(2)\n"),
        (
            &["mul", "--n", "2", "x(1)", "x(-1)"],
            "q^2 * x(-1)x(1) + (q^3-q) * x(-2)x(2)\n",
        ),
        (&["mul", "--n", "2", "1", "x(1)"], "x(1)\n"),
    ];
    for (args, want) in cases {
        let out = Command::new(env!("CARGO_BIN_EXE_qsymp"))
            .args(args)
            .output()
            .expect("binary runs");
        let got = String::from_utf8_lossy(&out.stdout);
        if !out.status.success() || got != want {
            return Outcome::Fail(format!("{}: got {got:?}", args.join(" ")));
        }
    }
    Outcome::Pass("6 outputs bit-exact".into())
}

type Criterion = (&'static str, u64, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("q-identity battery", 1, q_identities),
        ("normal-form oracle equivalence", 30, oracle_equivalence),
        ("associativity", 60, associativity),
        ("action formulas", 120, actions),
        ("serre suite", 600, serre),
        ("module-algebra suite", 300, module_algebra),
        ("highest-weight suite", 300, highest_weight),
        ("lemma battery", 600, lemma_battery),
        ("root-vector coherence", 600, root_vectors),
        ("cli golden outputs", 60, cli_golden),
    ];
    let mut ok = true;
    for (k, (name, limit, body)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = body();
        let took = start.elapsed();
        let over = took > Duration::from_secs(*limit);
        let (tag, detail) = match outcome {
            Outcome::Pass(d) if !over => ("PASS", d),
            Outcome::Pass(d) => {
                ok = false;
                ("FAIL", format!("{d}; over the {limit} s limit"))
            }
            Outcome::KnownFail(d) => {
                ok &= !over;
                ("FAIL", format!("{d} (predicted)"))
            }
            Outcome::Fail(d) => {
                ok = false;
                ("FAIL", d)
            }
        };
        println!(
            "criterion {:>2}: {tag}  {name}  [{:.2} s / {limit} s]  {detail}",
            k + 1,
            took.as_secs_f64()
        );
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
