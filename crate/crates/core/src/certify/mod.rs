//! Certificate rules for the Tits alternative in ⟨x, y | x³ = y⁴ = w² = 1⟩
//! and verifiers for the lemmas behind them.

use core::fmt;

use alloc::string::String;
use alloc::vec::Vec;

use crate::groups::GroupError;
use crate::trace::TraceError;

mod cells;
mod dual_root;
mod forms;
mod lemma31;
mod suites;
mod verdict;

pub use cells::{cell_data, CellData};
pub use dual_root::{dual_root_certificate, dual_root_report};
pub use forms::{check_sigma_form, check_tau_form, mod12_check, sigma_constant_check, SigmaFormCheck, TauFormCheck};
pub use lemma31::{kernel_table, lemma31_generators, lemma31_suite, Lemma31Report};
pub use suites::{run_suite, suite_names, SUITES};
pub use verdict::{
    analyze, analyze_with, index_four_endgame, repeated_root_gate, IndexFourClass, IndexFourReport, screen, search, AnalyzeOptions, F2Witness, Outcome, Rule,
    Survivor, TrailEntry, Verdict, K5_SURVIVOR,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertifyError {
    /// A branch the proof shows to be impossible was reached.
    InternalContradiction(String),
    /// The word is a proper power.
    ProperPower,
    Precondition(String),
    /// Image order not divisible by 12.
    Divisibility(i64),
    Trace(TraceError),
    Group(GroupError),
}

impl fmt::Display for CertifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertifyError::InternalContradiction(m) => write!(f, "internal contradiction: {}", m),
            CertifyError::ProperPower => f.write_str("word is a proper power"),
            CertifyError::Precondition(m) => write!(f, "precondition failed: {}", m),
            CertifyError::Divisibility(n) => write!(f, "image order {} is not divisible by 12", n),
            CertifyError::Trace(e) => write!(f, "{}", e),
            CertifyError::Group(e) => write!(f, "{}", e),
        }
    }
}

impl core::error::Error for CertifyError {}

impl From<TraceError> for CertifyError {
    fn from(e: TraceError) -> Self {
        CertifyError::Trace(e)
    }
}

impl From<GroupError> for CertifyError {
    fn from(e: GroupError) -> Self {
        CertifyError::Group(e)
    }
}

/// One named check with its outcome and a short description of what was
/// compared.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }
}

/// The checks of a named suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}
