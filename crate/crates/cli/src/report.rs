//! Check records and their JSON and table renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

/// One verified statement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    /// Where the check belongs: `acceptance/N` for acceptance criteria,
    /// otherwise the module it exercises.
    pub anchor: String,
    pub pass: bool,
    pub witness: String,
}

impl CheckRecord {
    pub fn new(
        name: impl Into<String>,
        anchor: impl Into<String>,
        pass: bool,
        witness: impl Into<String>,
    ) -> CheckRecord {
        CheckRecord { name: name.into(), anchor: anchor.into(), pass, witness: witness.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteTiming {
    pub suite: String,
    pub millis: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub total_millis: u64,
    pub suites: Vec<SuiteTiming>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    /// The argument vector, program name excluded.
    pub command: Vec<String>,
    pub checks: Vec<CheckRecord>,
    pub timing: Timing,
}

impl Report {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&CheckRecord> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    pub fn exit_code(&self) -> i32 {
        if self.pass() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Report> {
        serde_json::from_str(s)
    }

    /// One line per check, `PASS`/`FAIL` first, then a summary line.
    pub fn to_table(&self) -> String {
        let w = self.checks.iter().map(|c| c.name.chars().count()).max().unwrap_or(4);
        let a = self.checks.iter().map(|c| c.anchor.chars().count()).max().unwrap_or(6);
        let mut out = format!("# hopf {}\n", self.command.join(" "));
        for c in &self.checks {
            let status = if c.pass { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{status}  {:w$}  {:a$}  {}", c.name, c.anchor, one_line(&c.witness));
        }
        let failed = self.failures().len();
        let _ = writeln!(
            out,
            "# {} checks, {} passed, {} failed, {} ms",
            self.checks.len(),
            self.checks.len() - failed,
            failed,
            self.timing.total_millis
        );
        out
    }
}

fn one_line(s: &str) -> String {
    let flat = s.replace('\n', " ");
    if flat.chars().count() > 240 {
        format!("{}...", flat.chars().take(240).collect::<String>())
    } else {
        flat
    }
}

/// Pass/fail per check name, read back from a table rendering.
pub fn parse_table(t: &str) -> Vec<(String, bool)> {
    t.lines()
        .filter_map(|l| {
            let (status, rest) = l.split_once("  ")?;
            let pass = match status {
                "PASS" => true,
                "FAIL" => false,
                _ => return None,
            };
            Some((rest.split_whitespace().next()?.to_string(), pass))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn record() -> impl Strategy<Value = CheckRecord> {
        ("[a-z][a-z0-9._]{0,12}", "[a-z/0-9]{1,10}", any::<bool>(), ".{0,40}")
            .prop_map(|(n, a, p, w)| CheckRecord::new(n, a, p, w))
    }

    proptest! {
        #[test]
        fn json_round_trips(cmd in proptest::collection::vec("[ -~]{0,8}", 0..4),
                            checks in proptest::collection::vec(record(), 0..6),
                            ms in any::<u64>()) {
            let r = Report { command: cmd, checks, timing: Timing { total_millis: ms, suites: vec![SuiteTiming { suite: "s".into(), millis: ms / 2 }] } };
            prop_assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
        }

        #[test]
        fn table_agrees_with_json(checks in proptest::collection::vec(record(), 0..6)) {
            let r = Report { command: vec![], checks, timing: Timing::default() };
            let t: Vec<(String, bool)> = parse_table(&r.to_table());
            let j: Vec<(String, bool)> = r.checks.iter().map(|c| (c.name.clone(), c.pass)).collect();
            prop_assert_eq!(t, j);
            prop_assert_eq!(r.exit_code() == 0, r.failures().is_empty());
        }
    }
}
