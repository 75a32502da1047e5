use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::ExactInt;

/// Outcome of checking one claim at one parameter point.
///
/// `pass` holds exactly when `lhs == rhs`. Properties that are not numeric
/// identities are reported as counts: `lhs` is the number of cases where the
/// property held and `rhs` the number of cases examined.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub claim: String,
    pub params: BTreeMap<String, i64>,
    #[serde(serialize_with = "as_decimal")]
    pub lhs: ExactInt,
    #[serde(serialize_with = "as_decimal")]
    pub rhs: ExactInt,
    pub pass: bool,
}

fn as_decimal<S: Serializer>(value: &ExactInt, serializer: S) -> Result<S::Ok, S::Error> {
    serializer.collect_str(value)
}

impl Verdict {
    pub fn new<L, R>(claim: impl Into<String>, params: &[(&str, i64)], lhs: L, rhs: R) -> Self
    where
        L: Into<ExactInt>,
        R: Into<ExactInt>,
    {
        let lhs = lhs.into();
        let rhs = rhs.into();
        Verdict {
            claim: claim.into(),
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            pass: lhs == rhs,
            lhs,
            rhs,
        }
    }

    /// Count-style verdict: `held` of `total` cases satisfied the property.
    pub fn tally(claim: impl Into<String>, params: &[(&str, i64)], held: usize, total: usize) -> Self {
        Self::new(claim, params, held as u64, total as u64)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.pass { "PASS" } else { "FAIL" };
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{status}  {:<44} {:<10} lhs={} rhs={}", self.claim, params.join(","), self.lhs, self.rhs)
    }
}
