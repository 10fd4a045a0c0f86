use serde::{Deserialize, Serialize};

use crate::partition::OrderedPartition;

/// How a reported value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Oracle,
    ClosedForm,
    TreeAlgorithm,
    BcgTheorem,
}

/// A computed transitivity value with a witness partition of that size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveReport {
    pub value: usize,
    /// A partition of size `value`; absent only when no certificate could be
    /// built within the configured search cap.
    pub witness: Option<OrderedPartition>,
    pub method: Method,
    /// `(lower, upper)` bounds in force during the computation.
    pub bounds: (usize, usize),
    pub nodes_explored: u64,
}
