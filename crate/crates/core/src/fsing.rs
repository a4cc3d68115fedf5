//! F-purity and F-injectivity at the origin.
//!
//! F-purity is decided with Fedder's criterion: `S/I` is F-pure at the origin
//! iff `(I^[p] : I) ⊄ m^[p]`, which for a hypersurface `(f)` reads
//! `f^(p-1) ∉ m^[p]` and for a complete intersection `(f_1, ..., f_c)` reads
//! `(f_1 ⋯ f_c)^(p-1) ∉ m^[p]`. Since `m^[p]` is a monomial ideal, powers are
//! computed modulo it by dropping every monomial with an exponent `>= p`.
//!
//! F-injectivity is never computed from local cohomology. It is decided
//! through surrogates: Frobenius closedness of a parameter ideal in a
//! Cohen–Macaulay quotient, the Gorenstein equivalence with F-purity for
//! hypersurfaces and complete intersections, and the union lemma for
//! `(g·h)` from the three rings `(g)`, `(h)`, `(g, h)`.

use crate::error::{Error, Result};
use crate::frobenius::{frobenius_power, is_frobenius_closed, ClosureOptions, FrobeniusClosureReport, QuotientPresentation};
use crate::groebner::{colon, contained_in_monomial_ideal, krull_dimension, radical_membership, bracket_power_of_maximal, Ideal};
use crate::poly::{Polynomial, PolyRing};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FpurityOutcome {
    FPure,
    NotFPure,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FpurityMethod {
    FedderHypersurface,
    FedderProduct,
    FedderGeneral,
    PigeonholeBound,
}

#[derive(Clone, Debug, PartialEq)]
pub enum FpurityCertificate {
    /// `(∏ factors)^(p-1)` reduced modulo `m^[p]`. Nonzero iff F-pure.
    Fedder { factors: Vec<Polynomial>, remainder: Polynomial },
    /// Generators of `(I^[p] : I)`; `escaping` is one outside `m^[p]`, if any.
    Colon { ideal: Vec<Polynomial>, colon: Vec<Polynomial>, escaping: Option<Polynomial> },
    /// `ord(f)·(p-1) >= n·(p-1) + 1`, so `f^(p-1) ∈ m^[p]` by pigeonhole.
    Pigeonhole { f: Polynomial, variables: usize, order: u64, power_order: u64, threshold: u64 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct FpurityVerdict {
    pub outcome: FpurityOutcome,
    pub method: FpurityMethod,
    pub certificate: FpurityCertificate,
    /// All input polynomials are homogeneous, so the origin decides the
    /// whole graded ring; otherwise the verdict is about the origin only.
    pub graded: bool,
}

impl FpurityVerdict {
    pub fn is_fpure(&self) -> bool {
        self.outcome == FpurityOutcome::FPure
    }

    /// Recomputes the certificate from its own data.
    pub fn verify(&self) -> Result<bool> {
        match &self.certificate {
            FpurityCertificate::Fedder { factors, remainder } => {
                let Some(first) = factors.first() else { return Ok(false) };
                let recomputed = fedder_remainder(first.ring(), factors);
                let pure = !recomputed.is_zero();
                Ok(&recomputed == remainder && pure == self.is_fpure())
            }
            FpurityCertificate::Colon { ideal, colon: gens, escaping } => {
                let Some(first) = ideal.first() else { return Ok(false) };
                let ring = first.ring();
                let bracket = bracket_power_of_maximal(ring, ring.p());
                let i = Ideal::new(ring, ideal.iter().cloned())?;
                let c = Ideal::new(ring, gens.iter().cloned())?;
                // every listed generator g satisfies g·I ⊆ I^[p]
                let ip = frobenius_power(&i, 1)?;
                for g in gens {
                    for f in ideal {
                        if !ip.contains(&(g * f))? {
                            return Ok(false);
                        }
                    }
                }
                let escapes = gens.iter().any(|g| !contained_in_monomial_ideal(g, &bracket));
                let witness_ok = match escaping {
                    Some(e) => c.contains(e)? && !contained_in_monomial_ideal(e, &bracket),
                    None => true,
                };
                Ok(witness_ok && escapes == self.is_fpure() && escaping.is_some() == escapes)
            }
            FpurityCertificate::Pigeonhole { f, variables, order, power_order, threshold } => {
                let p = f.ring().p() as u64;
                Ok(self.outcome == FpurityOutcome::NotFPure
                    && f.order_at_origin()? == *order
                    && *variables == f.ring().arity()
                    && *power_order == order * (p - 1)
                    && *threshold == *variables as u64 * (p - 1) + 1
                    && power_order >= threshold)
            }
        }
    }
}

fn in_maximal_ideal(f: &Polynomial) -> bool {
    f.constant_term().is_zero()
}

/// `(∏ factors)^(p-1)` modulo `m^[p]`.
fn fedder_remainder(ring: &PolyRing, factors: &[Polynomial]) -> Polynomial {
    let p = ring.p();
    let product = factors.iter().fold(ring.one(), |acc, f| acc.mul_bounded(f, Some(p)));
    product.pow_bounded(p as u64 - 1, Some(p))
}

fn fedder_verdict(ring: &PolyRing, factors: Vec<Polynomial>, method: FpurityMethod) -> FpurityVerdict {
    let remainder = fedder_remainder(ring, &factors);
    let outcome = if remainder.is_zero() { FpurityOutcome::NotFPure } else { FpurityOutcome::FPure };
    let graded = factors.iter().all(Polynomial::is_homogeneous);
    FpurityVerdict { outcome, method, certificate: FpurityCertificate::Fedder { factors, remainder }, graded }
}

/// Fedder's criterion for `S/(f)` at the origin.
pub fn fedder_hypersurface(f: &Polynomial) -> Result<FpurityVerdict> {
    if f.is_zero() {
        return Err(Error::domain("the zero polynomial does not define a hypersurface"));
    }
    if !in_maximal_ideal(f) {
        return Err(Error::domain(format!("`{f}` is a unit at the origin, not a singular model")));
    }
    Ok(fedder_verdict(f.ring(), vec![f.clone()], FpurityMethod::FedderHypersurface))
}

/// Fedder's criterion for the complete intersection `S/(f_1, ..., f_c)`.
pub fn fedder_product(factors: &[Polynomial]) -> Result<FpurityVerdict> {
    let Some(first) = factors.first() else {
        return Err(Error::domain("no factors given"));
    };
    let ring = first.ring();
    for f in factors {
        if f.ring() != ring {
            return Err(Error::RingMismatch);
        }
        if f.is_zero() || !in_maximal_ideal(f) {
            return Err(Error::domain(format!("factor `{f}` is not in the maximal ideal or is zero")));
        }
    }
    let ideal = Ideal::new(ring, factors.iter().cloned())?;
    let dim = krull_dimension(&ideal)?;
    if ideal.generators().len() != factors.len() || dim + factors.len() != ring.arity() {
        return Err(Error::domain(format!(
            "not a complete intersection at desk check: {} factors in {} variables give dimension {dim}",
            factors.len(),
            ring.arity()
        )));
    }
    Ok(fedder_verdict(ring, factors.to_vec(), FpurityMethod::FedderProduct))
}

/// Fedder's criterion in colon form, `(I^[p] : I) ⊄ m^[p]`.
pub fn fedder_general(ideal: &Ideal) -> Result<FpurityVerdict> {
    let ring = ideal.ring();
    if ideal.is_zero() {
        return Err(Error::domain("the zero ideal defines the ambient ring; nothing to check"));
    }
    if ideal.generators().iter().any(|g| !in_maximal_ideal(g)) {
        return Err(Error::domain("the ideal is not contained in the maximal ideal of the origin"));
    }
    let bracket = bracket_power_of_maximal(ring, ring.p());
    let c = colon(&frobenius_power(ideal, 1)?, ideal)?;
    let escaping = c.generators().iter().find(|g| !contained_in_monomial_ideal(g, &bracket)).cloned();
    let outcome = if escaping.is_some() { FpurityOutcome::FPure } else { FpurityOutcome::NotFPure };
    Ok(FpurityVerdict {
        outcome,
        method: FpurityMethod::FedderGeneral,
        certificate: FpurityCertificate::Colon {
            ideal: ideal.generators().to_vec(),
            colon: c.generators().to_vec(),
            escaping,
        },
        graded: ideal.generators().iter().all(Polynomial::is_homogeneous),
    })
}

/// `m^(n(p-1)+1) ⊆ m^[p]`: if `ord(f)·(p-1)` reaches that degree, `f` is not
/// F-pure. `None` when the bound does not apply.
pub fn pigeonhole_precheck(f: &Polynomial) -> Result<Option<FpurityVerdict>> {
    if f.is_zero() || !in_maximal_ideal(f) {
        return Err(Error::domain("pigeonhole check needs a nonzero f in the maximal ideal"));
    }
    let ring = f.ring();
    let p = ring.p() as u64;
    let n = ring.arity() as u64;
    let order = f.order_at_origin()?;
    let power_order = order * (p - 1);
    let threshold = n * (p - 1) + 1;
    if power_order < threshold {
        return Ok(None);
    }
    Ok(Some(FpurityVerdict {
        outcome: FpurityOutcome::NotFPure,
        method: FpurityMethod::PigeonholeBound,
        certificate: FpurityCertificate::Pigeonhole {
            f: f.clone(),
            variables: ring.arity(),
            order,
            power_order,
            threshold,
        },
        graded: f.is_homogeneous(),
    }))
}

/// Pigeonhole first, then Fedder's criterion.
pub fn decide_hypersurface(f: &Polynomial) -> Result<FpurityVerdict> {
    if let Some(v) = pigeonhole_precheck(f)? {
        return Ok(v);
    }
    fedder_hypersurface(f)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FinjectivityOutcome {
    FInjective,
    NotFInjective,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FinjectivityBasis {
    CmfiParameterIdeal,
    GorensteinFPure,
    UnionDecomposition,
}

/// How Cohen–Macaulayness of the quotient is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CmStatus {
    /// Polynomial ring, hypersurface or complete intersection.
    Automatic,
    /// Asserted by the caller, not verified.
    Asserted,
    Unknown,
}

#[derive(Clone, Debug)]
pub enum FinjectivityDetail {
    Closure { params: Vec<Polynomial>, report: FrobeniusClosureReport },
    Gorenstein { fpurity: FpurityVerdict },
    Union { first: FpurityVerdict, second: FpurityVerdict, intersection: FpurityVerdict },
}

#[derive(Clone, Debug)]
pub struct FinjectivityVerdict {
    pub outcome: FinjectivityOutcome,
    pub basis: FinjectivityBasis,
    pub cm: CmStatus,
    pub detail: FinjectivityDetail,
    pub graded: bool,
}

impl FinjectivityVerdict {
    /// True when the verdict rests on an unverified Cohen–Macaulay assertion.
    pub fn assuming_cm(&self) -> bool {
        self.cm == CmStatus::Asserted
    }
}

/// Whether the quotient is visibly Cohen–Macaulay: zero ideal, principal, or
/// generated by exactly `codim` elements.
pub fn automatic_cm(quotient: &QuotientPresentation) -> Result<bool> {
    let i = quotient.defining();
    let gens = i.generators().len();
    if gens <= 1 {
        return Ok(true);
    }
    let dim = krull_dimension(i)?;
    Ok(gens + dim == quotient.ring().arity())
}

/// F-injectivity of a Cohen–Macaulay quotient from Frobenius closedness of one
/// parameter ideal.
pub fn finjective_cm_quotient(
    quotient: &QuotientPresentation,
    params: &[Polynomial],
    options: ClosureOptions,
    assert_cm: bool,
) -> Result<FinjectivityVerdict> {
    let ring = quotient.ring();
    for f in params {
        if f.ring() != ring {
            return Err(Error::RingMismatch);
        }
        if !in_maximal_ideal(f) {
            return Err(Error::domain(format!("parameter `{f}` is not in the maximal ideal")));
        }
    }
    let i = quotient.defining();
    let dim = krull_dimension(i)?;
    if params.len() != dim {
        return Err(Error::domain(format!(
            "system of parameters needs {dim} elements, got {}",
            params.len()
        )));
    }
    let j = Ideal::new(ring, params.iter().cloned())?.with_limits(i.limits());
    let with_params = i.sum(&j)?;
    let cut = if with_params.is_unit()? { None } else { Some(krull_dimension(&with_params)?) };
    if cut != Some(dim - params.len()) {
        return Err(Error::domain(format!(
            "parameters do not cut the dimension from {dim} to {}",
            dim - params.len()
        )));
    }
    for v in 0..ring.arity() {
        if !radical_membership(&ring.var(v), &with_params)? {
            return Err(Error::domain(format!(
                "parameters are not primary to the maximal ideal: `{}` is not in the radical",
                ring.vars()[v]
            )));
        }
    }

    let cm = if automatic_cm(quotient)? {
        CmStatus::Automatic
    } else if assert_cm {
        CmStatus::Asserted
    } else {
        CmStatus::Unknown
    };
    let report = is_frobenius_closed(&j, quotient, options)?;
    let outcome = match (report.is_not_closed(), cm) {
        (_, CmStatus::Unknown) => FinjectivityOutcome::Inconclusive,
        (true, _) => FinjectivityOutcome::NotFInjective,
        (false, _) => FinjectivityOutcome::FInjective,
    };
    let graded = i.generators().iter().chain(params).all(Polynomial::is_homogeneous);
    Ok(FinjectivityVerdict {
        outcome,
        basis: FinjectivityBasis::CmfiParameterIdeal,
        cm,
        detail: FinjectivityDetail::Closure { params: params.to_vec(), report },
        graded,
    })
}

/// For a hypersurface (Gorenstein), F-injective iff F-pure.
pub fn finjective_hypersurface(f: &Polynomial) -> Result<FinjectivityVerdict> {
    let v = fedder_hypersurface(f)?;
    Ok(gorenstein_verdict(v))
}

/// For a complete intersection (Gorenstein), F-injective iff F-pure.
pub fn finjective_complete_intersection(factors: &[Polynomial]) -> Result<FinjectivityVerdict> {
    let v = fedder_product(factors)?;
    Ok(gorenstein_verdict(v))
}

fn gorenstein_verdict(v: FpurityVerdict) -> FinjectivityVerdict {
    let outcome = if v.is_fpure() { FinjectivityOutcome::FInjective } else { FinjectivityOutcome::NotFInjective };
    FinjectivityVerdict {
        outcome,
        basis: FinjectivityBasis::GorensteinFPure,
        cm: CmStatus::Automatic,
        graded: v.graded,
        detail: FinjectivityDetail::Gorenstein { fpurity: v },
    }
}

/// `(g·h)` is F-injective when `(g)`, `(h)` and `(g, h)` all are. The converse
/// is not claimed, so any failing component gives `Inconclusive`.
pub fn union_decomposition_check(g: &Polynomial, h: &Polynomial) -> Result<FinjectivityVerdict> {
    if g.ring() != h.ring() {
        return Err(Error::RingMismatch);
    }
    let ring = g.ring();
    for f in [g, h] {
        if f.is_zero() || !in_maximal_ideal(f) {
            return Err(Error::domain(format!("`{f}` is not a nonzero element of the maximal ideal")));
        }
    }
    let divides = |a: &Polynomial, b: &Polynomial| -> Result<bool> { Ideal::new(ring, [a.clone()])?.contains(b) };
    if divides(g, h)? || divides(h, g)? {
        return Err(Error::domain("one factor divides the other; the union is not a union of two components"));
    }
    let first = fedder_hypersurface(g)?;
    let second = fedder_hypersurface(h)?;
    let intersection = fedder_product(&[g.clone(), h.clone()])?;
    let all = first.is_fpure() && second.is_fpure() && intersection.is_fpure();
    let outcome = if all { FinjectivityOutcome::FInjective } else { FinjectivityOutcome::Inconclusive };
    Ok(FinjectivityVerdict {
        outcome,
        basis: FinjectivityBasis::UnionDecomposition,
        cm: CmStatus::Automatic,
        graded: g.is_homogeneous() && h.is_homogeneous(),
        detail: FinjectivityDetail::Union { first, second, intersection },
    })
}
