//! Runs the checks declared in a compiled spec and collects a report.

use std::fmt::Write;
use std::time::Instant;

use serde::Serialize;

use crate::dsl::{CheckKind, DeclaredCheck, SpecSource, SystemClass, SystemSpec};
use crate::engine::{AxiomReport, CheckMode, Checker, EngineError, Verdict};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpecIdentity {
    pub origin: String,
    pub hash: String,
    pub declared_class: SystemClass,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub report: AxiomReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
}

/// Overall verdict is `pass` exactly when every declared check passes.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub spec: SpecIdentity,
    pub checks: Vec<CheckOutcome>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct RunOptions {
    pub timing: bool,
    pub mode: CheckMode,
}

/// Evaluates one declared check. A skew brace whose tables are not groups
/// yields a failed report rather than an error.
pub fn run_check(checker: &Checker, spec: &SystemSpec, check: &DeclaredCheck) -> AxiomReport {
    let ops: Vec<_> = check.ops.iter().map(|&i| &spec.ops[i].table).collect();
    let single = || ops[0];
    let pair = || (ops[0], ops[1]);
    let result = match check.kind {
        CheckKind::Assoc => Ok(checker.associativity(single())),
        CheckKind::Interchange => checker.interchange(pair().0, pair().1),
        CheckKind::Idempotent => Ok(checker.idempotency(single())),
        CheckKind::Divisibility(side) => Ok(checker.divisibility(single(), side, true)),
        CheckKind::Distrib(side) => Ok(checker.self_distributivity(single(), side)),
        CheckKind::Group => Ok(checker.group(single())),
        CheckKind::Rack(side) => Ok(checker.rack_quandle(single(), side, false)),
        CheckKind::Quandle(side) => Ok(checker.rack_quandle(single(), side, true)),
        CheckKind::Dimonoid => checker.dimonoid(pair().0, pair().1),
        CheckKind::SkewBrace => checker.skew_brace(pair().0, pair().1),
        CheckKind::Multiquandle => checker.multiquandle_pair(pair().0, pair().1),
        CheckKind::NValuedAssoc => {
            let owned: Vec<_> = ops.iter().map(|&t| t.clone()).collect();
            checker.nvalued_associativity(&owned)
        }
    };
    match result {
        Ok(r) => r,
        Err(EngineError::NotAGroup { which, report }) => {
            let checked = report.checked;
            (*report).into_composite("skew brace", &format!("{which} group"), checked)
        }
        // a compiled spec has a single carrier, and families are never empty
        Err(e) => unreachable!("{e}"),
    }
}

pub fn run_spec(spec: &SystemSpec, source: &SpecSource, opts: RunOptions) -> RunReport {
    let checker = Checker::new(opts.mode);
    let checks: Vec<CheckOutcome> = spec
        .checks
        .iter()
        .map(|c| {
            let start = Instant::now();
            let report = run_check(&checker, spec, c);
            let wall_ms = opts.timing.then(|| (start.elapsed().as_secs_f64() * 1e6).round() / 1e3);
            CheckOutcome { name: c.label.clone(), report, wall_ms }
        })
        .collect();
    let verdict = if checks.iter().all(|c| c.report.passed()) { Verdict::Pass } else { Verdict::Fail };
    RunReport {
        spec: SpecIdentity { origin: source.origin.clone(), hash: source.hash(), declared_class: spec.declared_class },
        checks,
        verdict,
    }
}

/// One line per report: verdict, failing sub-axiom, witness, counts.
pub fn describe(report: &AxiomReport) -> String {
    let mut out = report.verdict.as_str().to_string();
    if let Some(at) = &report.failed_at {
        let _ = write!(out, " at {at}");
    }
    if let Some(w) = &report.witness {
        let _ = write!(out, ", witness ({})", w.elements.join(", "));
    }
    let _ = write!(out, " [{} checked{}]", report.checked, if report.exhaustive { "" } else { ", sampled" });
    if let Some(note) = &report.note {
        let _ = write!(out, " ({note})");
    }
    out
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.verdict.is_pass()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("spec {} (sha256 {})\n", self.spec.origin, &self.spec.hash[..16]);
        for c in &self.checks {
            let _ = write!(out, "  {}: {}", c.name, describe(&c.report));
            if let Some(ms) = c.wall_ms {
                let _ = write!(out, " in {ms} ms");
            }
            out.push('\n');
        }
        let _ = writeln!(out, "verdict: {}", self.verdict.as_str());
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carrier::DEFAULT_GUARD;
    use crate::dsl::load_spec;

    fn run(text: &str, timing: bool) -> RunReport {
        let src = SpecSource::new(text, "inline");
        let spec = load_spec(&src, DEFAULT_GUARD).unwrap();
        run_spec(&spec, &src, RunOptions { timing, mode: CheckMode::Exhaustive })
    }

    #[test]
    fn verdict_is_conjunction() {
        let r = run("carrier cyclic(5); op q = core_quandle(); check quandle q; check assoc q;", false);
        assert_eq!(r.checks.len(), 2);
        assert!(r.checks[0].report.passed());
        assert!(!r.checks[1].report.passed());
        assert_eq!(r.verdict, Verdict::Fail);
        let r = run("carrier cyclic(5); op q = core_quandle(); check quandle q;", false);
        assert!(r.passed());
    }

    #[test]
    fn json_shape_and_stability() {
        let text = "carrier symmetric(3); op a = conj_quandle(); op b = core_quandle(); check multiquandle a b; check group a;";
        let (x, y) = (run(text, false).to_json(), run(text, false).to_json());
        assert_eq!(x, y);
        let v: serde_json::Value = serde_json::from_str(&x).unwrap();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["checks", "spec", "verdict"]);
        assert_eq!(v["spec"]["origin"], "inline");
        assert_eq!(v["checks"][1]["name"], "group a");
        assert_eq!(v["checks"][1]["report"]["failed_at"], "associativity");
        assert!(v["checks"][0].get("wall_ms").is_none());
        let timed: serde_json::Value = serde_json::from_str(&run(text, true).to_json()).unwrap();
        assert!(timed["checks"][0]["wall_ms"].is_number());
    }

    #[test]
    fn non_group_brace_is_a_failed_check() {
        let r = run("carrier cyclic(4); op a = group_op(); op b = core_quandle(); check skew_brace a b;", false);
        assert_eq!(r.checks[0].report.failed_at.as_deref(), Some("circ group"));
        assert!(!r.passed());
        assert!(r.to_text().contains("skew_brace a b: fail at circ group"));
    }
}
