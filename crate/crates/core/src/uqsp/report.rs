use std::fmt::Write as _;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Where an identity failed: the input it was evaluated on, both sides, and
/// the first output term whose coefficients differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CounterexampleRecord {
    pub input: String,
    pub lhs: String,
    pub rhs: String,
    pub term: Option<String>,
    pub lhs_coeff: Option<String>,
    pub rhs_coeff: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityRecord {
    pub id: String,
    pub status: Status,
    pub counterexample: Option<CounterexampleRecord>,
}

impl IdentityRecord {
    pub fn pass(id: impl Into<String>) -> Self {
        IdentityRecord {
            id: id.into(),
            status: Status::Pass,
            counterexample: None,
        }
    }

    pub fn fail(id: impl Into<String>, c: CounterexampleRecord) -> Self {
        IdentityRecord {
            id: id.into(),
            status: Status::Fail,
            counterexample: Some(c),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub n: usize,
    pub bound: u32,
    pub records: Vec<IdentityRecord>,
    pub wall_ms: u128,
}

#[derive(Serialize)]
struct JsonIdentity<'a> {
    kind: &'static str,
    suite: &'a str,
    n: usize,
    bound: u32,
    id: &'a str,
    status: Status,
    counterexample: &'a Option<CounterexampleRecord>,
}

#[derive(Serialize)]
struct JsonSummary<'a> {
    kind: &'static str,
    suite: &'a str,
    n: usize,
    bound: u32,
    passed: usize,
    failed: usize,
    wall_ms: u128,
}

impl SuiteReport {
    pub fn passed(&self) -> usize {
        self.records.iter().filter(|r| r.passed()).count()
    }

    pub fn failed(&self) -> usize {
        self.records.len() - self.passed()
    }

    pub fn all_pass(&self) -> bool {
        self.failed() == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityRecord> {
        self.records.iter().filter(|r| !r.passed())
    }

    /// Human-readable table.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "suite {}  n={}  bound={}",
            self.suite, self.n, self.bound
        );
        for r in &self.records {
            let tag = if r.passed() { "PASS" } else { "FAIL" };
            let _ = writeln!(s, "  {tag}  {}", r.id);
            if let Some(c) = &r.counterexample {
                let _ = writeln!(s, "        on {}", c.input);
                let _ = writeln!(s, "        lhs = {}", c.lhs);
                let _ = writeln!(s, "        rhs = {}", c.rhs);
                if let (Some(t), Some(l), Some(rc)) = (&c.term, &c.lhs_coeff, &c.rhs_coeff) {
                    let _ = writeln!(s, "        at {t}: {l} vs {rc}");
                }
            }
        }
        let _ = writeln!(
            s,
            "  {}/{} passed  ({} ms)",
            self.passed(),
            self.records.len(),
            self.wall_ms
        );
        s
    }

    /// One JSON object per identity followed by a summary line.
    pub fn to_json_lines(&self) -> String {
        let mut s = String::new();
        for r in &self.records {
            let rec = JsonIdentity {
                kind: "identity",
                suite: &self.suite,
                n: self.n,
                bound: self.bound,
                id: &r.id,
                status: r.status,
                counterexample: &r.counterexample,
            };
            s.push_str(&serde_json::to_string(&rec).expect("serializable"));
            s.push('\n');
        }
        let sum = JsonSummary {
            kind: "summary",
            suite: &self.suite,
            n: self.n,
            bound: self.bound,
            passed: self.passed(),
            failed: self.failed(),
            wall_ms: self.wall_ms,
        };
        s.push_str(&serde_json::to_string(&sum).expect("serializable"));
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> SuiteReport {
        SuiteReport {
            suite: "demo".into(),
            n: 2,
            bound: 3,
            records: vec![
                IdentityRecord::pass("a = a"),
                IdentityRecord::fail(
                    "b = 0",
                    CounterexampleRecord {
                        input: "x(1)".into(),
                        lhs: "x(-1)".into(),
                        rhs: "0".into(),
                        term: Some("x(-1)".into()),
                        lhs_coeff: Some("1".into()),
                        rhs_coeff: Some("0".into()),
                    },
                ),
            ],
            wall_ms: 7,
        }
    }

    #[test]
    fn counts() {
        let r = sample();
        assert_eq!((r.passed(), r.failed()), (1, 1));
        assert!(!r.all_pass());
        assert!(r
            .records
            .iter()
            .all(|x| x.passed() == x.counterexample.is_none()));
    }

    #[test]
    fn json_lines_are_stable() {
        let out = sample().to_json_lines();
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(
            lines[0],
            r#"{"kind":"identity","suite":"demo","n":2,"bound":3,"id":"a = a","status":"pass","counterexample":null}"#
        );
        assert!(lines[1].contains(r#""status":"fail","counterexample":{"input":"x(1)""#));
        assert_eq!(
            lines[2],
            r#"{"kind":"summary","suite":"demo","n":2,"bound":3,"passed":1,"failed":1,"wall_ms":7}"#
        );
    }

    #[test]
    fn text_table() {
        let t = sample().to_text();
        assert!(t.starts_with("suite demo  n=2  bound=3\n  PASS  a = a\n  FAIL  b = 0\n"));
        assert!(t.contains("at x(-1): 1 vs 0"));
    }
}
