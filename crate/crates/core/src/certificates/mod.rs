//! Machine-checkable reports for the classification of real PCF
//! parameters and totally real parabolic parameters.
//!
//! Each report is an ordered list of steps. A step records what was
//! claimed, how it was checked, the inputs, and a witness that can be
//! re-checked independently. The report passes iff every step passes.

mod residues;
mod checks;
mod drivers;

use serde::Serialize;
use serde_json::Value;

use crate::algebraic::AlgebraicNumber;
use crate::exact::rational::format_rational;

pub use residues::{cubic_residue_certificate, ResidueRow};
pub use checks::{
    discriminant_bound_check, leading_coeff_check, required_leading_coeff, valuation_check, DiscriminantCheck,
    LeadingCoeffCheck, LeadingCoeffVerdict, PrimeValuation, ValuationCheck,
};
pub use drivers::{real_pcf_driver, quadratic_parabolic_driver, higher_degree_parabolic_driver, ARC_BOUND, SWEEP_N, SWEEP_SPAN};

pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(self) -> bool {
        self == Verdict::Pass
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Step {
    pub claim: String,
    pub method: String,
    pub inputs: Value,
    pub verdict: Verdict,
    pub witness: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateReport {
    pub theorem: String,
    pub version: u32,
    pub steps: Vec<Step>,
    pub verdict: Verdict,
}

impl CertificateReport {
    pub fn new(theorem: &str) -> Self {
        CertificateReport {
            theorem: theorem.to_string(),
            version: REPORT_VERSION,
            steps: Vec::new(),
            verdict: Verdict::Pass,
        }
    }

    pub fn push(&mut self, claim: impl Into<String>, method: &str, inputs: Value, ok: bool, witness: Value) {
        let verdict = Verdict::from_bool(ok);
        if !ok {
            self.verdict = Verdict::Fail;
        }
        self.steps.push(Step {
            claim: claim.into(),
            method: method.to_string(),
            inputs,
            verdict,
            witness,
        });
    }

    /// Appends every step of `other`, prefixing claims with `label`.
    pub fn absorb(&mut self, label: &str, other: CertificateReport) {
        for mut step in other.steps {
            step.claim = format!("{label}: {}", step.claim);
            if !step.verdict.passed() {
                self.verdict = Verdict::Fail;
            }
            self.steps.push(step);
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict.passed()
    }

    pub fn step(&self, claim_prefix: &str) -> Option<&Step> {
        self.steps.iter().find(|s| s.claim.starts_with(claim_prefix))
    }
}

/// Exact description of an algebraic number for report witnesses.
pub fn describe(a: &AlgebraicNumber) -> Value {
    let mut v = serde_json::json!({ "minpoly": a.minpoly().to_string() });
    if let Some(r) = a.as_rational() {
        v["value"] = Value::String(format_rational(&r));
    } else if let Some(e) = a.enclosure(64) {
        v["enclosure"] = serde_json::to_value(e).unwrap();
    } else {
        v["locator"] = serde_json::to_value(a.locator()).unwrap();
    }
    v
}
