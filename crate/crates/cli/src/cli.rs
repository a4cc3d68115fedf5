//! Argument parsing and command dispatch.

use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use fpure_core::zoo::{self, CaseId, DohertyOptions, SweepOptions};
use fpure_core::{
    buchberger, decide_hypersurface, fedder_general, fedder_product, finjective_cm_quotient, frobenius_power,
    is_frobenius_closed, normal_form, pe_th_root, union_decomposition_check, ClosureOptions, Ideal, MonomialOrder,
    PolyRing, PrimeChar, QuotientPresentation,
};

use crate::parse::{parse_list, parse_polynomial, ParseError};
use crate::report::*;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Resource(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Resource(_) => 3,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Input(_) => "input",
            CliError::Resource(_) => "resource",
        }
    }
}

impl From<fpure_core::Error> for CliError {
    fn from(e: fpure_core::Error) -> Self {
        if e.is_resource() {
            CliError::Resource(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Input(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Lex,
    #[default]
    Grevlex,
}

#[derive(Debug, Parser)]
#[command(name = "fpure", version, about = "Exact F-purity, F-injectivity and ideal computations over prime fields")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Characteristic p of the coefficient field.
    #[arg(long = "char", global = true)]
    pub char: Option<u64>,
    /// Comma-separated variable names.
    #[arg(long, global = true, value_delimiter = ',')]
    pub vars: Vec<String>,
    #[arg(long, global = true, value_enum, default_value_t = OrderArg::Grevlex)]
    pub order: OrderArg,
    /// Print a JSON report on standard output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Largest Frobenius level searched for closure witnesses.
    #[arg(long = "max-e", global = true, default_value_t = 3)]
    pub max_e: u32,
    /// Seed for randomized inputs (the optional tail of the multiplicity-32 model).
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Report `timing_ms` as null so that output is byte-stable.
    #[arg(long = "no-timing", global = true)]
    pub no_timing: bool,
    /// Stop the closure search once two consecutive levels agree.
    #[arg(long = "early-stop", global = true)]
    pub early_stop: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fedder's criterion for a hypersurface, or for an ideal with --ideal.
    Fpure {
        /// A polynomial, or a comma-separated generator list with --ideal.
        input: String,
        #[arg(long)]
        ideal: bool,
    },
    /// Fedder's criterion for a complete intersection given by its factors.
    FpureProduct { factors: String },
    /// Reduced Gröbner basis.
    Groebner { ideal: String },
    /// Ideal membership.
    Member { poly: String, ideal: String },
    /// Frobenius power I^[p^e].
    Frobpow {
        ideal: String,
        #[arg(long, default_value_t = 1)]
        e: u32,
    },
    /// p^e-th root of an ideal.
    Frobroot {
        ideal: String,
        #[arg(long, default_value_t = 1)]
        e: u32,
    },
    /// Frobenius closure search for J in S/I.
    Frobclosure {
        ideal: String,
        /// Defining ideal I of the quotient; the polynomial ring if omitted.
        #[arg(long)]
        quotient: Option<String>,
    },
    /// F-injectivity of a Cohen–Macaulay quotient from one parameter ideal.
    FinjCm {
        #[arg(long)]
        params: String,
        #[arg(long)]
        quotient: Option<String>,
        /// Treat the quotient as Cohen–Macaulay without checking.
        #[arg(long = "assume-cm")]
        assume_cm: bool,
    },
    /// The three-ring F-injectivity check for (g·h).
    UnionCheck { g: String, h: String },
    /// Catalogue of local models.
    Zoo {
        #[command(subcommand)]
        command: ZooCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum ZooCommand {
    List,
    Verify {
        case: String,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        d: Option<usize>,
        /// Random tail terms for the multiplicity-32 model.
        #[arg(long = "doherty-tail", default_value_t = 0)]
        doherty_tail: usize,
    },
    Sweep {
        #[arg(long, value_delimiter = ',', required = true)]
        chars: Vec<u64>,
        #[arg(long = "min-r", default_value_t = 1)]
        min_r: usize,
        #[arg(long = "max-r", default_value_t = 5)]
        max_r: usize,
        #[arg(long = "no-doherty")]
        no_doherty: bool,
        #[arg(long = "doherty-tail", default_value_t = 0)]
        doherty_tail: usize,
    },
}

impl Global {
    fn prime(&self) -> CliResult<PrimeChar> {
        let p = self.char.ok_or_else(|| CliError::Input("--char is required".into()))?;
        Ok(PrimeChar::new(p)?)
    }

    fn ring(&self) -> CliResult<PolyRing> {
        let p = self.prime()?;
        if self.vars.is_empty() {
            return Err(CliError::Input("--vars is required".into()));
        }
        let order = match self.order {
            OrderArg::Lex => MonomialOrder::Lex,
            OrderArg::Grevlex => MonomialOrder::GrevLex,
        };
        Ok(PolyRing::new(p, self.vars.iter().map(|v| v.trim()), order)?)
    }

    fn closure_options(&self) -> ClosureOptions {
        ClosureOptions { e_max: self.max_e, early_stop: self.early_stop }
    }
}

fn ideal_of(text: &str, ring: &PolyRing) -> CliResult<Ideal> {
    Ok(Ideal::new(ring, parse_list(text, ring)?)?)
}

/// Runs one command. Errors carry the exit code; verdicts of any kind are `Ok`.
pub fn run(cli: &Cli) -> CliResult<Report> {
    let start = Instant::now();
    let mut report = dispatch(cli)?;
    if !cli.global.no_timing {
        report.timing_ms = Some(millis(start.elapsed()));
    }
    Ok(report)
}

/// The report emitted for a failed command under `--json`.
pub fn error_report(cli: &Cli, err: &CliError) -> Report {
    let mut report = Report::new(command_name(&cli.command), None, json!({}));
    report.verdict = json!({ "kind": "error", "error_kind": err.kind(), "message": err.to_string() });
    report
}

pub fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Fpure { .. } => "fpure",
        Command::FpureProduct { .. } => "fpure-product",
        Command::Groebner { .. } => "groebner",
        Command::Member { .. } => "member",
        Command::Frobpow { .. } => "frobpow",
        Command::Frobroot { .. } => "frobroot",
        Command::Frobclosure { .. } => "frobclosure",
        Command::FinjCm { .. } => "finj-cm",
        Command::UnionCheck { .. } => "union-check",
        Command::Zoo { command: ZooCommand::List } => "zoo list",
        Command::Zoo { command: ZooCommand::Verify { .. } } => "zoo verify",
        Command::Zoo { command: ZooCommand::Sweep { .. } } => "zoo sweep",
    }
}

fn dispatch(cli: &Cli) -> CliResult<Report> {
    let g = &cli.global;
    let name = command_name(&cli.command);
    match &cli.command {
        Command::Fpure { input, ideal } => {
            let ring = g.ring()?;
            if *ideal {
                let i = ideal_of(input, &ring)?;
                let mut rep = Report::new(name, Some(&ring), json!({ "ideal": ideal_strings(&i) }));
                let v = fedder_general(&i)?;
                fpurity_into(&mut rep, &v);
                Ok(rep)
            } else {
                let f = parse_polynomial(input, &ring)?;
                let mut rep = Report::new(name, Some(&ring), json!({ "polynomial": f.to_string() }));
                let v = decide_hypersurface(&f)?;
                fpurity_into(&mut rep, &v);
                Ok(rep)
            }
        }
        Command::FpureProduct { factors } => {
            let ring = g.ring()?;
            let fs = parse_list(factors, &ring)?;
            let mut rep = Report::new(name, Some(&ring), json!({ "factors": strings(&fs) }));
            let v = fedder_product(&fs)?;
            fpurity_into(&mut rep, &v);
            Ok(rep)
        }
        Command::Groebner { ideal } => {
            let ring = g.ring()?;
            let i = ideal_of(ideal, &ring)?;
            let mut rep = Report::new(name, Some(&ring), json!({ "ideal": ideal_strings(&i) }));
            let b = buchberger(&i, ring.order())?;
            let basis = strings(b.elements());
            rep.verdict = json!({ "kind": "groebner", "basis": basis, "size": basis.len(), "unit": b.is_unit_ideal() });
            rep.certificates.push(json!({
                "type": "buchberger_criterion",
                "satisfied": b.satisfies_buchberger_criterion(),
                "reduced": b.is_reduced(),
            }));
            rep.human.push(format!("reduced Gröbner basis ({} elements):", basis.len()));
            rep.human.extend(basis.iter().map(|s| format!("  {s}")));
            Ok(rep)
        }
        Command::Member { poly, ideal } => {
            let ring = g.ring()?;
            let f = parse_polynomial(poly, &ring)?;
            let i = ideal_of(ideal, &ring)?;
            let mut rep =
                Report::new(name, Some(&ring), json!({ "polynomial": f.to_string(), "ideal": ideal_strings(&i) }));
            let nf = if i.is_zero() { f.clone() } else { normal_form(&f, i.basis()?)? };
            let member = nf.is_zero();
            rep.verdict = json!({ "kind": "membership", "member": member });
            rep.certificates.push(json!({
                "type": "normal_form",
                "basis": if i.is_zero() { Vec::new() } else { strings(i.basis()?.elements()) },
                "remainder": nf.to_string(),
            }));
            rep.human.push(member.to_string());
            if !member {
                rep.human.push(format!("normal form: {nf}"));
            }
            Ok(rep)
        }
        Command::Frobpow { ideal, e } | Command::Frobroot { ideal, e } => {
            let ring = g.ring()?;
            let i = ideal_of(ideal, &ring)?;
            let mut rep = Report::new(name, Some(&ring), json!({ "ideal": ideal_strings(&i), "e": e }));
            if *e == 0 {
                return Err(CliError::Input("--e must be at least 1".into()));
            }
            let out = if matches!(cli.command, Command::Frobpow { .. }) { frobenius_power(&i, *e)? } else { pe_th_root(&i, *e)? };
            let gens = ideal_strings(&out);
            rep.verdict = json!({ "kind": "ideal", "generators": gens });
            rep.human.push(format!("({})", gens.join(", ")));
            Ok(rep)
        }
        Command::Frobclosure { ideal, quotient } => {
            let ring = g.ring()?;
            let j = ideal_of(ideal, &ring)?;
            let q = quotient_of(quotient.as_deref(), &ring)?;
            let mut rep = Report::new(
                name,
                Some(&ring),
                json!({ "ideal": ideal_strings(&j), "quotient": ideal_strings(q.defining()), "max_e": g.max_e }),
            );
            let report = is_frobenius_closed(&j, &q, g.closure_options())?;
            let verified = report.is_not_closed() && report.verify_witness(&j, &q)?;
            rep.verdict = json!({
                "kind": "frobenius_closure",
                "closed": !report.is_not_closed(),
                "status": closure_status(&report),
            });
            let mut cert = closure_certificate(&report);
            cert["witness_verified"] = json!(verified);
            rep.certificates.push(cert);
            rep.human.push(closure_status(&report));
            if let Some(w) = &report.witness {
                rep.human.push(format!("witness: {w}"));
            }
            Ok(rep)
        }
        Command::FinjCm { params, quotient, assume_cm } => {
            let ring = g.ring()?;
            let ps = parse_list(params, &ring)?;
            let q = quotient_of(quotient.as_deref(), &ring)?;
            let mut rep = Report::new(
                name,
                Some(&ring),
                json!({ "params": strings(&ps), "quotient": ideal_strings(q.defining()), "assume_cm": assume_cm, "max_e": g.max_e }),
            );
            let v = finjective_cm_quotient(&q, &ps, g.closure_options(), *assume_cm)?;
            finjectivity_into(&mut rep, &v);
            Ok(rep)
        }
        Command::UnionCheck { g: gs, h: hs } => {
            let ring = g.ring()?;
            let (gp, hp) = (parse_polynomial(gs, &ring)?, parse_polynomial(hs, &ring)?);
            let mut rep = Report::new(name, Some(&ring), json!({ "g": gp.to_string(), "h": hp.to_string() }));
            let v = union_decomposition_check(&gp, &hp)?;
            finjectivity_into(&mut rep, &v);
            Ok(rep)
        }
        Command::Zoo { command } => zoo_command(g, name, command),
    }
}

fn quotient_of(text: Option<&str>, ring: &PolyRing) -> CliResult<QuotientPresentation> {
    match text {
        None => Ok(QuotientPresentation::polynomial_ring(ring)),
        Some(t) => Ok(QuotientPresentation::new(ideal_of(t, ring)?)?),
    }
}

fn fpurity_into(rep: &mut Report, v: &fpure_core::FpurityVerdict) {
    rep.verdict = fpurity_verdict(v);
    let cert = fpurity_certificate(v);
    rep.human.push(format!("{} ({})", fpurity_outcome(v.outcome), rep.verdict["method"].as_str().unwrap_or("")));
    if let Some(w) = cert.get("witness_term").filter(|w| !w.is_null()) {
        rep.human.push(format!("surviving term: {} * {}", w["coefficient"], w["monomial"].as_str().unwrap_or("")));
    }
    if !v.graded {
        rep.human.push("note: inhomogeneous input, verdict holds at the origin".into());
    }
    rep.certificates.push(cert);
}

fn finjectivity_into(rep: &mut Report, v: &fpure_core::FinjectivityVerdict) {
    rep.verdict = finjectivity_verdict(v);
    rep.certificates = finjectivity_certificates(v);
    let mut line = finjectivity_outcome(v.outcome).to_string();
    if v.assuming_cm() {
        line.push_str(" (assuming Cohen–Macaulay)");
    }
    rep.human.push(line);
    for c in &rep.certificates {
        if let Some(w) = c.get("witness").and_then(|w| w.as_str()) {
            rep.human.push(format!("witness: {w} at e = {}", c["level"]));
        }
    }
}

fn zoo_command(g: &Global, name: &str, command: &ZooCommand) -> CliResult<Report> {
    let timing = !g.no_timing;
    match command {
        ZooCommand::List => {
            let mut rep = Report::new(name, None, json!({}));
            let cases: Vec<_> = CaseId::ALL
                .iter()
                .map(|c| {
                    json!({
                        "id": c.label(),
                        "constraints": c.constraints(),
                        "shape": c.shape(),
                        "expected": fpurity_outcome(c.expected()),
                    })
                })
                .collect();
            for c in CaseId::ALL {
                rep.human.push(format!(
                    "{:<8} {:<9} {:<24} {}",
                    c.label(),
                    fpurity_outcome(c.expected()),
                    c.constraints(),
                    c.shape()
                ));
            }
            rep.verdict = json!({ "kind": "zoo_catalog", "cases": cases });
            Ok(rep)
        }
        ZooCommand::Verify { case, r, d, doherty_tail } => {
            let id: CaseId = case.parse()?;
            let p = g.prime()?;
            let ring = zoo::zoo_ring(p, *r)?;
            let mut rep = Report::new(
                name,
                Some(&ring),
                json!({ "case": id.label(), "p": p.get(), "r": r, "d": d, "doherty_tail": doherty_tail, "seed": g.seed }),
            );
            let options = DohertyOptions { tail_terms: *doherty_tail, seed: g.seed };
            let case_rep = zoo::verify_case(id, p, *r, *d, options)?;
            let mut entry = case_report(&case_rep, timing);
            let certs = entry["certificates"].take();
            rep.certificates = serde_json::from_value(certs).unwrap_or_default();
            if let Some(obj) = entry.as_object_mut() {
                obj.remove("certificates");
            }
            rep.human.push(case_line(&case_rep));
            entry["kind"] = json!("zoo_case");
            rep.verdict = entry;
            Ok(rep)
        }
        ZooCommand::Sweep { chars, min_r, max_r, no_doherty, doherty_tail } => {
            if min_r > max_r || *min_r == 0 {
                return Err(CliError::Input("need 1 <= --min-r <= --max-r".into()));
            }
            for &p in chars {
                PrimeChar::new(p)?;
            }
            let ranks: Vec<usize> = (*min_r..=*max_r).collect();
            let mut rep = Report::new(
                name,
                None,
                json!({ "chars": chars, "ranks": ranks, "doherty": !no_doherty, "doherty_tail": doherty_tail, "seed": g.seed }),
            );
            let options = SweepOptions {
                include_doherty: !no_doherty,
                doherty: DohertyOptions { tail_terms: *doherty_tail, seed: g.seed },
            };
            let reports = zoo::verify_all(chars, &ranks, options);
            let verified: Vec<_> = reports.iter().filter(|r| !r.is_excluded()).collect();
            let all_match = verified.iter().all(|r| r.matches);
            let excluded = reports.len() - verified.len();
            for r in &reports {
                rep.human.push(case_line(r));
            }
            rep.human.push(format!(
                "{} verified, {} excluded, {}",
                verified.len(),
                excluded,
                if all_match { "all match" } else { "MISMATCH" }
            ));
            rep.verdict = json!({
                "kind": "zoo_sweep",
                "all_match": all_match,
                "verified": verified.len(),
                "excluded": excluded,
                "cases": reports.iter().map(|r| case_report(r, timing)).collect::<Vec<_>>(),
            });
            Ok(rep)
        }
    }
}

fn case_line(r: &zoo::CaseReport) -> String {
    let d = r.d.map(|d| format!(" d={d}")).unwrap_or_default();
    match &r.outcome {
        zoo::CaseOutcome::Excluded(why) => format!("case {:<7} p={:<3} r={}{d}: excluded ({why})", r.case.label(), r.p, r.r),
        zoo::CaseOutcome::Failed(why) => format!("case {:<7} p={:<3} r={}{d}: failed ({why})", r.case.label(), r.p, r.r),
        zoo::CaseOutcome::Verified { .. } => format!(
            "case {:<7} p={:<3} r={}{d}: {} expected {} {}",
            r.case.label(),
            r.p,
            r.r,
            r.computed.map(fpurity_outcome).unwrap_or("-"),
            fpurity_outcome(r.expected),
            if r.matches { "match" } else { "MISMATCH" }
        ),
    }
}

