use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::carrier::Carrier;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    /// Divisibility only: some equation has more than one solution.
    ExistsButNotUnique,
}

impl Verdict {
    pub fn is_pass(self) -> bool {
        self == Verdict::Pass
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::ExistsButNotUnique => "exists_but_not_unique",
        }
    }
}

/// A violating tuple, as carrier positions and as rendered elements.
///
/// Serializes as the list of rendered elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub elements: Vec<String>,
}

impl Witness {
    pub fn new(carrier: &Carrier, indices: &[usize]) -> Witness {
        Witness {
            indices: indices.to_vec(),
            elements: indices.iter().map(|&i| carrier.element(i).to_string()).collect(),
        }
    }
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.elements.len()))?;
        for e in &self.elements {
            seq.serialize_element(e)?;
        }
        seq.end()
    }
}

/// Outcome of one axiom check.
///
/// `verdict != Pass` exactly when `witness` is present. For existential
/// failures (no unit at all) the witness is the empty tuple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub axiom: String,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub checked: u64,
    pub failed_at: Option<String>,
    pub exhaustive: bool,
    pub note: Option<String>,
}

impl AxiomReport {
    pub fn pass(axiom: &str, checked: u64) -> AxiomReport {
        AxiomReport {
            axiom: axiom.to_string(),
            verdict: Verdict::Pass,
            witness: None,
            checked,
            failed_at: None,
            exhaustive: true,
            note: None,
        }
    }

    pub fn fail(axiom: &str, witness: Witness, checked: u64) -> AxiomReport {
        AxiomReport {
            axiom: axiom.to_string(),
            verdict: Verdict::Fail,
            witness: Some(witness),
            checked,
            failed_at: None,
            exhaustive: true,
            note: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict.is_pass()
    }

    pub fn witness_indices(&self) -> Option<&[usize]> {
        self.witness.as_ref().map(|w| w.indices.as_slice())
    }

    pub(crate) fn with_verdict(mut self, verdict: Verdict) -> Self {
        self.verdict = verdict;
        self
    }

    pub(crate) fn at(mut self, sub: &str) -> Self {
        self.failed_at = Some(sub.to_string());
        self
    }

    pub(crate) fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub(crate) fn sampled(mut self, exhaustive: bool) -> Self {
        self.exhaustive = exhaustive;
        self
    }

    /// Re-labels a sub-check result as part of a composite check.
    pub(crate) fn into_composite(self, axiom: &str, sub: &str, checked: u64) -> AxiomReport {
        let passed = self.passed();
        AxiomReport {
            axiom: axiom.to_string(),
            verdict: if passed { Verdict::Pass } else { Verdict::Fail },
            witness: self.witness,
            checked,
            failed_at: if passed { None } else { Some(sub.to_string()) },
            exhaustive: self.exhaustive,
            note: self.note,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carrier::{group_carrier, GroupSpec};

    #[test]
    fn json_shape() {
        let z3 = group_carrier(&GroupSpec::Cyclic(3)).unwrap();
        let r = AxiomReport::fail("associativity", Witness::new(&z3, &[0, 0, 1]), 2);
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["axiom"], "associativity");
        assert_eq!(v["verdict"], "fail");
        assert_eq!(v["witness"], serde_json::json!(["0", "0", "1"]));
        assert_eq!(v["checked"], 2);
        let p = serde_json::to_value(AxiomReport::pass("associativity", 27)).unwrap();
        assert!(p["witness"].is_null());
        assert_eq!(
            serde_json::to_value(Verdict::ExistsButNotUnique).unwrap(),
            serde_json::json!("exists_but_not_unique")
        );
    }
}
