//! Serializable report types. Every scalar is an exact rational written as a
//! string (`"-3/2"`), so a report parses back to an equal value.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CohomologyReport {
    /// `compute`, `verify` or `tables`.
    pub command: String,
    pub scenario: ScenarioEcho,
    pub parameters: Parameters,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub koszul: Option<KoszulSummary>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub strands: Vec<StrandReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cup_tables: Vec<CupTableReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub paper_tables: Vec<TableDiff>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub identities: Vec<IdentityReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<Verification>,
}

impl CohomologyReport {
    /// False if any check, table entry or identity failed.
    pub fn success(&self) -> bool {
        self.verification.as_ref().map_or(true, |v| v.passed)
            && self.paper_tables.iter().all(|t| t.mismatches == 0)
            && self.identities.iter().all(|i| i.holds)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ScenarioEcho {
    pub name: String,
    /// The input document, unchanged.
    pub input: serde_json::Value,
    /// The effective value of `q` after command-line overrides.
    pub q: String,
    /// Whether the scenario is the Kac–Paljutkin action on the quantum (−1)-plane.
    pub kac_paljutkin_plane: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Parameters {
    pub q: String,
    pub weight_min: i64,
    pub weight_max: i64,
    pub index_max: usize,
    pub m_max: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct KoszulSummary {
    pub generators: Vec<String>,
    /// `dim A^!_m` from the quotient `T(V*)/(R^⊥)`.
    pub dual_dims: Vec<usize>,
    /// `dim ∩ V^u⊗R⊗V^v`, which must agree with `dual_dims`.
    pub intersection_dims: Vec<usize>,
    pub dual_basis: Vec<Vec<String>>,
    /// Exactness of the Koszul complex was checked for weights `0..=exact_weight_max`.
    pub exact_weight_max: usize,
    pub exact: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct StrandReport {
    pub weight: i64,
    /// `dim C^m_w` for `m = 0..=top`.
    pub chain_dims: Vec<usize>,
    /// `dim H^m(A, A#H)_w`.
    pub full_dims: Vec<usize>,
    /// `dim H^m(A, A#H)^H_w = dim HH^m(A#H)_w`.
    pub invariant_dims: Vec<usize>,
    /// Representative cocycles, per `m`.
    pub full_basis: Vec<Vec<String>>,
    pub invariant_basis: Vec<Vec<String>>,
}

/// Cup products between invariant classes of two bidegrees. Class `k` of
/// bidegree `(m, w)` is labelled `H^m_w[k]` and is the `k`-th entry of
/// `invariant_basis[m]` of strand `w`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CupTableReport {
    pub left: Bidegree,
    pub right: Bidegree,
    pub target: Bidegree,
    pub entries: Vec<CupEntry>,
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq, PartialOrd, Ord)]
pub struct Bidegree {
    pub m: usize,
    pub w: i64,
}

impl Bidegree {
    pub fn class_label(&self, k: usize) -> String {
        format!("H^{}_{}[{}]", self.m, self.w, k)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CupEntry {
    pub left: String,
    pub right: String,
    pub product: Vec<Term>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Term {
    pub label: String,
    pub coeff: String,
}

/// One expected table compared with the computed products.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TableDiff {
    pub name: String,
    pub entries: usize,
    pub mismatches: usize,
    pub cells: Vec<CellDiff>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CellDiff {
    pub row: String,
    pub col: String,
    pub expected: Vec<Term>,
    pub computed: Vec<Term>,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct IdentityReport {
    pub name: String,
    pub i: usize,
    pub j: usize,
    pub h: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Verification {
    pub passed: bool,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// Witness on failure, or a short summary.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckResult {
    pub fn new(name: impl Into<String>, passed: bool, detail: Option<String>) -> Self {
        CheckResult {
            name: name.into(),
            passed,
            detail,
        }
    }
}
