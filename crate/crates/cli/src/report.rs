//! Machine-readable reports and the JSON encodings of core verdicts.

use serde::Serialize;
use serde_json::{json, Value};

use fpure_core::zoo::{CaseOutcome, CaseReport};
use fpure_core::{
    ClosureStatus, CmStatus, FinjectivityBasis, FinjectivityDetail, FinjectivityOutcome, FinjectivityVerdict,
    FpurityCertificate, FpurityMethod, FpurityOutcome, FpurityVerdict, FrobeniusClosureReport, Ideal, MonomialOrder,
    PolyRing, Polynomial,
};

/// Bumped only when the report layout changes, independently of the tool.
pub const SCHEMA_VERSION: &str = "1.0.0";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// The committed schema for [`Report`].
pub const SCHEMA: &str = include_str!("../schema/report.schema.json");

#[derive(Clone, Debug, Serialize)]
pub struct RingInfo {
    pub char: u32,
    pub vars: Vec<String>,
    pub order: String,
}

impl RingInfo {
    pub fn of(ring: &PolyRing) -> Self {
        RingInfo { char: ring.p(), vars: ring.vars().to_vec(), order: order_name(ring.order()) }
    }
}

fn order_name(order: MonomialOrder) -> String {
    match order {
        MonomialOrder::Lex => "lex".into(),
        MonomialOrder::GrevLex => "grevlex".into(),
        MonomialOrder::BlockElim(k) => format!("block_elim({k})"),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema_version: &'static str,
    pub tool_version: &'static str,
    pub command: String,
    pub ring: Option<RingInfo>,
    pub inputs: Value,
    pub verdict: Value,
    pub certificates: Vec<Value>,
    pub timing_ms: Option<f64>,
    /// Plain-text rendering for the terminal.
    #[serde(skip)]
    pub human: Vec<String>,
}

impl Report {
    pub fn new(command: &str, ring: Option<&PolyRing>, inputs: Value) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            tool_version: TOOL_VERSION,
            command: command.into(),
            ring: ring.map(RingInfo::of),
            inputs,
            verdict: Value::Null,
            certificates: Vec::new(),
            timing_ms: None,
            human: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

pub fn strings(polys: &[Polynomial]) -> Vec<String> {
    polys.iter().map(ToString::to_string).collect()
}

pub fn ideal_strings(ideal: &Ideal) -> Vec<String> {
    strings(ideal.generators())
}

pub fn fpurity_outcome(o: FpurityOutcome) -> &'static str {
    match o {
        FpurityOutcome::FPure => "FPure",
        FpurityOutcome::NotFPure => "NotFPure",
    }
}

pub fn finjectivity_outcome(o: FinjectivityOutcome) -> &'static str {
    match o {
        FinjectivityOutcome::FInjective => "FInjective",
        FinjectivityOutcome::NotFInjective => "NotFInjective",
        FinjectivityOutcome::Inconclusive => "Inconclusive",
    }
}

fn method_name(m: FpurityMethod) -> &'static str {
    match m {
        FpurityMethod::FedderHypersurface => "fedder_hypersurface",
        FpurityMethod::FedderProduct => "fedder_product",
        FpurityMethod::FedderGeneral => "fedder_general",
        FpurityMethod::PigeonholeBound => "pigeonhole_bound",
    }
}

pub fn fpurity_verdict(v: &FpurityVerdict) -> Value {
    json!({
        "kind": "fpurity",
        "outcome": fpurity_outcome(v.outcome),
        "method": method_name(v.method),
        "graded": v.graded,
    })
}

/// Enough data to recheck the verdict: for a nonzero Fedder remainder, one
/// surviving term of the power together with its coefficient.
pub fn fpurity_certificate(v: &FpurityVerdict) -> Value {
    match &v.certificate {
        FpurityCertificate::Fedder { factors, remainder } => {
            let witness = remainder.terms().next().map(|(m, c)| {
                json!({
                    "monomial": remainder.ring().monomial(m.clone()).to_string(),
                    "coefficient": c.value(),
                })
            });
            json!({
                "type": "fedder",
                "factors": strings(factors),
                "power": remainder.ring().p() - 1,
                "remainder_terms": remainder.num_terms(),
                "witness_term": witness,
            })
        }
        FpurityCertificate::Colon { ideal, colon, escaping } => json!({
            "type": "colon",
            "ideal": strings(ideal),
            "colon": strings(colon),
            "escaping": escaping.as_ref().map(ToString::to_string),
        }),
        FpurityCertificate::Pigeonhole { f, variables, order, power_order, threshold } => json!({
            "type": "pigeonhole",
            "f": f.to_string(),
            "variables": variables,
            "order": order,
            "power_order": power_order,
            "threshold": threshold,
        }),
    }
}

pub fn closure_certificate(report: &FrobeniusClosureReport) -> Value {
    let (status, level) = match report.status {
        ClosureStatus::ClosedUpTo(e) => ("closed_up_to", e),
        ClosureStatus::NotClosed { level } => ("not_closed", level),
        ClosureStatus::StabilizedHeuristic(e) => ("stabilized_heuristic", e),
    };
    json!({
        "type": "frobenius_closure",
        "status": status,
        "level": level,
        "witness": report.witness.as_ref().map(ToString::to_string),
        "base": ideal_strings(&report.base),
        "chain": report.chain.iter().map(ideal_strings).collect::<Vec<_>>(),
    })
}

pub fn closure_status(report: &FrobeniusClosureReport) -> String {
    match report.status {
        ClosureStatus::ClosedUpTo(e) => format!("closed up to e = {e}"),
        ClosureStatus::NotClosed { level } => format!("not closed at e = {level}"),
        ClosureStatus::StabilizedHeuristic(e) => format!("levels stabilized at e = {e} (heuristic)"),
    }
}

pub fn finjectivity_verdict(v: &FinjectivityVerdict) -> Value {
    let basis = match v.basis {
        FinjectivityBasis::CmfiParameterIdeal => "cmfi_parameter_ideal",
        FinjectivityBasis::GorensteinFPure => "gorenstein_fpure",
        FinjectivityBasis::UnionDecomposition => "union_decomposition",
    };
    let cm = match v.cm {
        CmStatus::Automatic => "automatic",
        CmStatus::Asserted => "asserted",
        CmStatus::Unknown => "unknown",
    };
    json!({
        "kind": "finjectivity",
        "outcome": finjectivity_outcome(v.outcome),
        "basis": basis,
        "cm": cm,
        "assuming_cm": v.assuming_cm(),
        "graded": v.graded,
    })
}

pub fn finjectivity_certificates(v: &FinjectivityVerdict) -> Vec<Value> {
    match &v.detail {
        FinjectivityDetail::Closure { params, report } => {
            let mut c = closure_certificate(report);
            c["params"] = json!(strings(params));
            vec![c]
        }
        FinjectivityDetail::Gorenstein { fpurity } => vec![fpurity_certificate(fpurity)],
        FinjectivityDetail::Union { first, second, intersection } => [("first", first), ("second", second), ("intersection", intersection)]
            .into_iter()
            .map(|(name, v)| {
                let mut c = fpurity_certificate(v);
                c["component"] = json!(name);
                c["outcome"] = json!(fpurity_outcome(v.outcome));
                c
            })
            .collect(),
    }
}

pub fn case_report(rep: &CaseReport, timing: bool) -> Value {
    let (status, reason, certificates) = match &rep.outcome {
        CaseOutcome::Verified { verdict, union, confirmation } => {
            let mut certs = vec![fpurity_certificate(verdict)];
            if let Some(u) = union {
                certs.extend(finjectivity_certificates(u));
            }
            if let Some(c) = confirmation {
                let mut cert = fpurity_certificate(c);
                cert["component"] = json!("confirmation");
                certs.push(cert);
            }
            ("verified", None, certs)
        }
        CaseOutcome::Excluded(reason) => ("excluded", Some(reason.clone()), Vec::new()),
        CaseOutcome::Failed(reason) => ("failed", Some(reason.clone()), Vec::new()),
    };
    json!({
        "case": rep.case.label(),
        "p": rep.p,
        "r": rep.r,
        "d": rep.d,
        "status": status,
        "reason": reason,
        "polynomials": strings(&rep.polynomials),
        "expected": fpurity_outcome(rep.expected),
        "computed": rep.computed.map(fpurity_outcome),
        "match": rep.matches,
        "certificates": certificates,
        "wall_time_ms": timing.then(|| millis(rep.wall_time)),
    })
}

pub fn millis(d: std::time::Duration) -> f64 {
    (d.as_secs_f64() * 1e6).round() / 1e3
}
