//! Check results and machine-readable reports.
//!
//! Every verification produces a flat list of [`CheckResult`]s. A check
//! either passes, fails (carrying both the expected and computed values),
//! or records a fact imposed by a cited result that the ring models cannot
//! decide themselves; the distinction keeps derivation and citation
//! visibly separate in all output.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "imposed-by-citation")]
    ImposedByCitation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub status: Status,
    pub expected: String,
    pub computed: String,
    pub paper_anchor: String,
}

impl CheckResult {
    /// Compare two values; pass iff equal.
    pub fn eq_check<T: PartialEq>(
        id: &str,
        anchor: &str,
        expected: &T,
        computed: &T,
        render: impl Fn(&T) -> String,
    ) -> CheckResult {
        CheckResult {
            id: id.to_string(),
            status: if expected == computed { Status::Pass } else { Status::Fail },
            expected: render(expected),
            computed: render(computed),
            paper_anchor: anchor.to_string(),
        }
    }

    pub fn bool_check(id: &str, anchor: &str, expected: &str, computed: &str, ok: bool) -> CheckResult {
        CheckResult {
            id: id.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            expected: expected.to_string(),
            computed: computed.to_string(),
            paper_anchor: anchor.to_string(),
        }
    }

    /// A statement the models cannot decide, imposed on the strength of a
    /// cited fact; `evidence` records what was actually verified.
    pub fn imposed(id: &str, anchor: &str, statement: &str, evidence: &str) -> CheckResult {
        CheckResult {
            id: id.to_string(),
            status: Status::ImposedByCitation,
            expected: statement.to_string(),
            computed: evidence.to_string(),
            paper_anchor: anchor.to_string(),
        }
    }

    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub imposed_by_citation: usize,
    pub total: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub tool_version: String,
    pub summary: Summary,
    pub results: Vec<CheckResult>,
}

impl Report {
    /// Deterministic report: results sorted by id, counts tallied.
    pub fn from_results(mut results: Vec<CheckResult>) -> Report {
        results.sort_by(|a, b| a.id.cmp(&b.id));
        let pass = results.iter().filter(|r| r.status == Status::Pass).count();
        let fail = results.iter().filter(|r| r.status == Status::Fail).count();
        let imposed = results
            .iter()
            .filter(|r| r.status == Status::ImposedByCitation)
            .count();
        Report {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            summary: Summary { pass, fail, imposed_by_citation: imposed, total: results.len() },
            results,
        }
    }

    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0
    }
}

/// First failing check as a hard error string, if any.
pub fn first_failure(checks: &[CheckResult]) -> Option<&CheckResult> {
    checks.iter().find(|c| c.is_fail())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_orders_and_counts() {
        let results = vec![
            CheckResult::bool_check("b", "x", "1", "1", true),
            CheckResult::bool_check("a", "x", "1", "2", false),
            CheckResult::imposed("c", "x", "s", "e"),
        ];
        let report = Report::from_results(results);
        assert_eq!(report.results[0].id, "a");
        assert_eq!(report.summary.pass, 1);
        assert_eq!(report.summary.fail, 1);
        assert_eq!(report.summary.imposed_by_citation, 1);
        assert!(report.has_failures());
    }
}
