//! Machine-readable report documents. Field order is fixed by the struct
//! definitions, all collections are ordered, and every number is exact, so
//! identical inputs serialize to byte-identical JSON.

use serde::{Deserialize, Serialize};

/// Echo of the parsed problem; sufficient to reproduce the run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProblemEcho {
    pub field: String,
    pub vars: Vec<String>,
    pub gens: Vec<String>,
    pub options: OptionsEcho,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OptionsEcho {
    pub dmax: Option<u32>,
    pub kmax: u32,
    pub ecap: u32,
    pub smax: Option<u32>,
    pub strategy: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DegreeGens {
    pub degree: u32,
    pub gens: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FiberconeReport {
    pub command: String,
    pub problem: ProblemEcho,
    pub fiber_vars: Vec<String>,
    pub presentation: Vec<DegreeGens>,
    pub stabilized: bool,
    pub dim_check: usize,
    pub d_max_used: u32,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PrimeEntry {
    pub prime: String,
    pub degree: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DegradReport {
    pub command: String,
    pub problem: ProblemEcho,
    pub source: String,
    pub primes: Vec<PrimeEntry>,
    pub total: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FamilyDoc {
    pub provenance: String,
    pub fiber_vars: Vec<String>,
    /// Exact coefficient rows, one per form.
    pub rows: Vec<Vec<String>>,
    /// The forms rendered as polynomials in the fiber variables.
    pub forms: Vec<String>,
    pub independent: bool,
    pub note: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertificateDoc {
    pub problem: ProblemEcho,
    pub family: FamilyDoc,
    /// 1-based indices into the family, strictly increasing.
    pub indices: Vec<usize>,
    pub b_gens: Vec<String>,
    pub reduction_k: u32,
    pub sop: bool,
    pub claim_passed: bool,
    pub e_q: Option<u64>,
    pub e_b: Option<u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SearchFailureDoc {
    pub stabilized: bool,
    pub dim_check: usize,
    pub d_max: u32,
    pub candidates_tried: Vec<CandidateFailure>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CandidateFailure {
    pub indices: Vec<usize>,
    pub reason: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FindReductionReport {
    pub command: String,
    pub certificate: Option<CertificateDoc>,
    pub failure: Option<SearchFailureDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableRow {
    pub indices: Vec<usize>,
    /// "inf" for a non-m-primary tuple, else the multiplicity.
    pub e: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReesEntry {
    pub indices: Vec<usize>,
    pub verified_k: Option<u32>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MultiplicityReport {
    pub command: String,
    pub problem: ProblemEcho,
    pub family: FamilyDoc,
    pub e_q: u64,
    pub table: Vec<TableRow>,
    pub argmin: Vec<Vec<usize>>,
    pub min_is_e_q: Option<bool>,
    pub rees_verified: Vec<ReesEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyReport {
    pub command: String,
    pub verified: bool,
    pub sop_recheck: bool,
    pub recomputed_k: Option<u32>,
    pub stored_k: u32,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub expected: String,
    pub computed: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScenarioReport {
    pub name: String,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PaperExamplesReport {
    pub command: String,
    pub scenarios: Vec<ScenarioReport>,
    pub all_passed: bool,
}
