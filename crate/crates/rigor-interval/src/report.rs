//! Machine-checkable outcome of a single bound claim.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::interval::{Interval, Prec, Verdict};

/// One checked inequality or identity: the enclosures that were compared,
/// the three-valued verdict, and free-form key/value context (sample point,
/// tolerances, precision used). BTreeMap keeps serialized output stable.
#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub claim_id: String,
    pub lhs: Interval,
    pub rhs: Interval,
    pub verdict: Verdict,
    pub metadata: BTreeMap<String, String>,
}

impl BoundReport {
    pub fn new(claim_id: impl Into<String>, lhs: Interval, rhs: Interval, verdict: Verdict) -> Self {
        BoundReport {
            claim_id: claim_id.into(),
            lhs,
            rhs,
            verdict,
            metadata: BTreeMap::new(),
        }
    }

    /// Report for the claim "lhs < rhs" (strict), decided by comparison.
    pub fn less_than(claim_id: impl Into<String>, lhs: Interval, rhs: Interval) -> Self {
        let verdict = lhs.lt(&rhs);
        BoundReport::new(claim_id, lhs, rhs, verdict)
    }

    /// Report for the claim "lhs <= rhs", decided by comparison.
    pub fn at_most(claim_id: impl Into<String>, lhs: Interval, rhs: Interval) -> Self {
        let verdict = lhs.le(&rhs);
        BoundReport::new(claim_id, lhs, rhs, verdict)
    }

    pub fn with_meta(mut self, key: impl Into<String>, value: impl Into<String>) -> Self {
        self.metadata.insert(key.into(), value.into());
        self
    }

    pub fn with_prec(self, p: Prec) -> Self {
        let bits = p.get().to_string();
        self.with_meta("precision_bits", bits)
    }

    pub fn is_verified(&self) -> bool {
        self.verdict == Verdict::Verified
    }
}

impl std::fmt::Display for BoundReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}: {} (lhs={}, rhs={})",
            self.claim_id, self.verdict, self.lhs, self.rhs
        )
    }
}
