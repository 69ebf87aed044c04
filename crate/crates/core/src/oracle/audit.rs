//! Exact audit of the candidate invariant velocities ±ε_A.

use serde::{Deserialize, Serialize};

use super::exact::{compose, invert, k_factor, neg3, q, Q, SIGNS};
use super::inputs::ExactSampler;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateVerdict {
    pub candidate: [i64; 3],
    /// Name in the printed table (`c1`..`c4`), if the triple is listed there.
    pub listed_as: Option<String>,
    pub k: String,
    /// candidate⊕s = candidate for every sample.
    pub absorbing: bool,
    /// s⊕candidate = s for every sample.
    pub neutral: bool,
    pub inverse_defined: bool,
    pub inverse: Option<[String; 3]>,
    pub inverse_is_negation: bool,
    /// A sampled s that breaks the first failing property, if any.
    pub counterexample: Option<[String; 3]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantVelocityTable {
    pub seed: u64,
    pub samples: usize,
    pub candidates: Vec<CandidateVerdict>,
}

impl InvariantVelocityTable {
    pub fn candidate(&self, triple: [i64; 3]) -> Option<&CandidateVerdict> {
        self.candidates.iter().find(|c| c.candidate == triple)
    }
}

fn strings(s: &[Q; 3]) -> [String; 3] {
    s.clone().map(|x| x.to_string())
}

fn audit_one(triple: [i64; 3], listed_as: Option<String>, pool: &[[Q; 3]]) -> CandidateVerdict {
    let c = triple.map(|e| q(e, 1));
    let absorbs = |s: &[Q; 3]| compose(&c, s).as_ref() == Some(&c);
    let neutral_on = |s: &[Q; 3]| compose(s, &c).as_ref() == Some(s);
    let absorbing = pool.iter().all(absorbs);
    let neutral = pool.iter().all(neutral_on);
    let counterexample = if !absorbing {
        pool.iter().find(|s| !absorbs(s))
    } else {
        pool.iter().find(|s| !neutral_on(s))
    };
    let inverse = invert(&c);
    CandidateVerdict {
        candidate: triple,
        listed_as,
        k: k_factor(&c).to_string(),
        absorbing,
        neutral,
        inverse_defined: inverse.is_some(),
        inverse_is_negation: inverse.as_ref() == Some(&neg3(&c)),
        inverse: inverse.as_ref().map(strings),
        counterexample: counterexample.map(strings),
    }
}

/// For each of the eight triples ±ε_A, decides over `samples` exact domain
/// velocities (the reference velocity (1/10, 1/5, 3/10) first) whether it
/// absorbs, acts as a neutral element, and how ⊖ treats it.
pub fn invariant_velocity_audit(seed: u64, samples: usize) -> InvariantVelocityTable {
    let mut sampler = ExactSampler::new(seed);
    let mut pool = vec![[q(1, 10), q(1, 5), q(3, 10)]];
    pool.extend((0..samples).map(|_| sampler.velocity()));

    let mut candidates = Vec::with_capacity(8);
    for (a, e) in SIGNS.iter().enumerate() {
        candidates.push(audit_one(*e, None, &pool));
        candidates.push(audit_one(e.map(|x| -x), Some(format!("c{}", a + 1)), &pool));
    }
    InvariantVelocityTable {
        seed,
        samples,
        candidates,
    }
}
