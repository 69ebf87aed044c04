//! Running identities over seeded samples and assembling the ledger.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::inputs::{ExactInputs, ExactSampler};
use super::registry::{self, Check, Identity};
use super::OracleError;

pub const DEFAULT_LEDGER_SAMPLES: usize = 100;
pub const DEFAULT_SEED: u64 = 7;

/// Small-denominator retries spent on shrinking a counterexample.
const MINIMIZE_ATTEMPTS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    HoldsExactly,
    HoldsAfterStatedCorrection,
    Fails,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::HoldsExactly => "holds-exactly",
            Verdict::HoldsAfterStatedCorrection => "holds-after-stated-correction",
            Verdict::Fails => "fails",
        }
    }
}

/// Exact inputs (as rational strings) plus what was observed on them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub inputs: BTreeMap<String, Vec<String>>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LedgerEntry {
    pub identity_id: String,
    pub paper_form: String,
    pub implemented_form: String,
    pub contested: bool,
    pub verdict: Verdict,
    pub witness: Witness,
    pub seed: u64,
    pub samples: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ledger {
    pub seed: u64,
    pub samples: usize,
    pub entries: Vec<LedgerEntry>,
}

impl Ledger {
    pub fn entry(&self, id: &str) -> Option<&LedgerEntry> {
        self.entries.iter().find(|e| e.identity_id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("ledger serializes")
    }
}

/// Per-identity seed so that adding identities never shifts the samples of
/// existing ones.
fn identity_seed(seed: u64, id: &str) -> u64 {
    id.bytes().fold(seed ^ 0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ u64::from(b)).wrapping_mul(0x0000_0100_0000_01b3)
    })
}

fn first_failure<'a>(
    check: Check,
    inputs: impl IntoIterator<Item = &'a ExactInputs>,
) -> Option<(&'a ExactInputs, String)> {
    inputs
        .into_iter()
        .find_map(|x| check(x).err().map(|detail| (x, detail)))
}

fn minimized(check: Check, seed: u64, found: (&ExactInputs, String)) -> (ExactInputs, String) {
    let canonical = ExactInputs::canonical();
    if let Err(detail) = check(&canonical) {
        return (canonical, detail);
    }
    let mut small = ExactSampler::new(seed ^ 0x5151);
    for _ in 0..MINIMIZE_ATTEMPTS {
        let x = small.small_sample();
        if let Err(detail) = check(&x) {
            return (x, detail);
        }
    }
    (found.0.clone(), found.1)
}

fn evaluate(ident: &Identity, samples: usize, seed: u64) -> LedgerEntry {
    let derived = identity_seed(seed, ident.id);
    let mut sampler = ExactSampler::new(derived);
    let mut pool = vec![ExactInputs::canonical()];
    pool.extend((0..samples).map(|_| sampler.sample()));

    let (verdict, inputs, detail) = match first_failure(ident.paper_check, &pool) {
        None => (
            Verdict::HoldsExactly,
            pool[0].clone(),
            format!("both sides agree on the canonical input and {samples} samples"),
        ),
        Some(found) => {
            let (x, printed) = minimized(ident.paper_check, derived, found);
            match ident.corrected_check {
                Some(fix) => match first_failure(fix, &pool) {
                    None => (
                        Verdict::HoldsAfterStatedCorrection,
                        x,
                        format!(
                            "printed form fails: {printed}; corrected form holds on all samples"
                        ),
                    ),
                    Some((_, again)) => (
                        Verdict::Fails,
                        x,
                        format!(
                            "printed form fails: {printed}; corrected form also fails: {again}"
                        ),
                    ),
                },
                None => (Verdict::Fails, x, printed),
            }
        }
    };

    LedgerEntry {
        identity_id: ident.id.to_string(),
        paper_form: ident.paper_form.to_string(),
        implemented_form: ident.implemented_form.to_string(),
        contested: ident.contested,
        verdict,
        witness: Witness {
            inputs: inputs.witness(ident.slots),
            detail,
        },
        seed,
        samples,
    }
}

pub fn verify_identity(id: &str, samples: usize, seed: u64) -> Result<LedgerEntry, OracleError> {
    let ident = registry::find(id).ok_or_else(|| OracleError::UnknownIdentity(id.to_string()))?;
    Ok(evaluate(ident, samples, seed))
}

pub fn ledger_with_samples(seed: u64, samples: usize) -> Ledger {
    Ledger {
        seed,
        samples,
        entries: registry::registry()
            .iter()
            .map(|ident| evaluate(ident, samples, seed))
            .collect(),
    }
}

pub fn full_ledger(seed: u64) -> Ledger {
    ledger_with_samples(seed, DEFAULT_LEDGER_SAMPLES)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_identity_is_an_error() {
        assert_eq!(
            verify_identity("9.99", 1, 0),
            Err(OracleError::UnknownIdentity("9.99".into()))
        );
    }

    #[test]
    fn neutral_claim_fails_with_reference_witness() {
        let e = verify_identity("3.28", 5, 1).unwrap();
        assert_eq!(e.verdict, Verdict::Fails);
        assert_eq!(e.witness.inputs["a"], vec!["1/10", "1/5", "3/10"]);
        assert_eq!(e.witness.inputs["pattern"], vec!["1"]);
    }

    #[test]
    fn group_law_holds() {
        let e = verify_identity("3.30", 10, 7).unwrap();
        assert_eq!(e.verdict, Verdict::HoldsExactly);
    }

    #[test]
    fn serializes_verdicts_in_kebab_case() {
        let e = verify_identity("2.43-factor", 3, 2).unwrap();
        let json = serde_json::to_string(&e).unwrap();
        assert!(json.contains("\"holds-after-stated-correction\""));
    }
}
