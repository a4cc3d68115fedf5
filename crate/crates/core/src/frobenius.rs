//! Bracket powers, `p^e`-th roots and Frobenius closure of ideals.
//!
//! Everything here assumes the coefficient field is F_p, where every element
//! is its own `p`-th power. The closure of `J` in `R = S/I` at level `e` is the
//! preimage of `J^[q] + I` under the `q = p^e` power map, computed exactly by
//! elimination.

use crate::error::{Error, Result};
use crate::groebner::{eliminate, Ideal};
use crate::poly::{Monomial, MonomialOrder, PolyRing, Polynomial};

use std::collections::BTreeMap;

/// `R = S/I`, with every question asked at the origin.
#[derive(Clone, Debug)]
pub struct QuotientPresentation {
    ring: PolyRing,
    defining: Ideal,
}

impl QuotientPresentation {
    pub fn new(defining: Ideal) -> Result<Self> {
        if defining.is_unit()? {
            return Err(Error::domain("the defining ideal is the unit ideal"));
        }
        Ok(QuotientPresentation { ring: defining.ring().clone(), defining })
    }

    /// The polynomial ring itself.
    pub fn polynomial_ring(ring: &PolyRing) -> Self {
        QuotientPresentation { ring: ring.clone(), defining: Ideal::zero(ring) }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn defining(&self) -> &Ideal {
        &self.defining
    }
}

fn q_of(ring: &PolyRing, e: u32) -> Result<u32> {
    if e == 0 {
        return Err(Error::domain("Frobenius exponent must be at least 1"));
    }
    ring.characteristic()
        .checked_pow(e)
        .ok_or_else(|| Error::resource(format!("p^e overflows for p = {}, e = {e}", ring.p())))
}

/// `I^[p^e]`, generated by the `p^e`-th powers of the generators.
pub fn frobenius_power(ideal: &Ideal, e: u32) -> Result<Ideal> {
    q_of(ideal.ring(), e)?;
    let gens = ideal.generators().iter().map(|g| g.frobenius(e)).collect::<Result<Vec<_>>>()?;
    Ideal::new(ideal.ring(), gens).map(|i| i.with_limits(ideal.limits()))
}

/// The smallest ideal `J` with `I ⊆ J^[p^e]`.
///
/// Each generator is split as `g = Σ_a g_a^(p^e) x^a` over exponents `0 ≤ a_i < p^e`,
/// and the pieces `g_a` generate the root.
pub fn pe_th_root(ideal: &Ideal, e: u32) -> Result<Ideal> {
    let ring = ideal.ring();
    let q = q_of(ring, e)?;
    let mut gens = Vec::new();
    for g in ideal.generators() {
        let mut pieces: BTreeMap<Vec<u32>, Vec<(Monomial, i64)>> = BTreeMap::new();
        for (m, c) in g.terms() {
            let rem: Vec<u32> = m.exponents().iter().map(|&a| a % q).collect();
            let quo: Vec<u32> = m.exponents().iter().map(|&a| a / q).collect();
            // c^(1/q) = c in F_p
            pieces.entry(rem).or_default().push((Monomial::new(quo), c.value() as i64));
        }
        for (_, terms) in pieces {
            gens.push(ring.from_terms(terms)?);
        }
    }
    Ideal::new(ring, gens).map(|i| i.with_limits(ideal.limits()))
}

/// `{u : u^(p^e) ∈ K}`, the preimage of `K` under the `p^e`-th power map.
///
/// Over F_p, `u^q = u(x_1^q, ..., x_n^q)`, so this is the kernel-style preimage
/// of `K` under the substitution `y_i ↦ x_i^q`: eliminate `x` from
/// `K(x) + (x_i^q − y_i)` and rename `y` back to `x`.
pub fn frobenius_preimage(ideal: &Ideal, e: u32) -> Result<Ideal> {
    let ring = ideal.ring();
    let q = q_of(ring, e)?;
    let n = ring.arity();
    if ideal.is_zero() {
        return Ok(ideal.clone());
    }
    let mut names: Vec<String> = ring.vars().to_vec();
    for v in ring.vars() {
        let mut candidate = format!("{v}_q");
        while names.contains(&candidate) {
            candidate.push('_');
        }
        names.push(candidate);
    }
    let ext = ring.with_vars(names, MonomialOrder::GrevLex)?;
    let lower: Vec<usize> = (0..n).collect();
    let mut gens = ideal.generators().iter().map(|g| g.embed(&ext, &lower)).collect::<Result<Vec<_>>>()?;
    for i in 0..n {
        gens.push(&ext.monomial(Monomial::var(2 * n, i, q)) - &ext.var(n + i));
    }
    let big = Ideal::new(&ext, gens)?.with_limits(ideal.limits());
    let eliminated = eliminate(&big, &lower)?;
    let upper_to_ring: Vec<usize> = (0..2 * n).map(|i| i.saturating_sub(n)).collect();
    let out = eliminated
        .generators()
        .iter()
        .map(|g| g.embed(ring, &upper_to_ring))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, out).map(|i| i.with_limits(ideal.limits()))
}

/// Ambient ideal whose image in `R = S/I` is the level-`e` slice of the
/// Frobenius closure of `J`: all `u` with `u^(p^e) ∈ J^[p^e] + I`.
pub fn frobenius_closure_level(j: &Ideal, quotient: &QuotientPresentation, e: u32) -> Result<Ideal> {
    if j.ring() != quotient.ring() {
        return Err(Error::RingMismatch);
    }
    let lifted = frobenius_power(j, e)?.sum(quotient.defining())?;
    frobenius_preimage(&lifted, e)?.sum(quotient.defining())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosureStatus {
    /// Every level `1..=e_max` equals `J + I`.
    ClosedUpTo(u32),
    /// Some level strictly contains `J + I`.
    NotClosed { level: u32 },
    /// Two consecutive levels agreed and the search stopped early; not a proof.
    StabilizedHeuristic(u32),
}

#[derive(Clone, Debug)]
pub struct FrobeniusClosureReport {
    pub status: ClosureStatus,
    pub witness: Option<Polynomial>,
    /// Level-`e` closures for `e = 1, 2, ...` as far as they were computed.
    pub chain: Vec<Ideal>,
    /// `J + I`.
    pub base: Ideal,
}

impl FrobeniusClosureReport {
    pub fn is_not_closed(&self) -> bool {
        matches!(self.status, ClosureStatus::NotClosed { .. })
    }

    /// Re-checks the witness: `u^(p^e) ∈ J^[p^e] + I` and `u ∉ J + I`.
    pub fn verify_witness(&self, j: &Ideal, quotient: &QuotientPresentation) -> Result<bool> {
        let (ClosureStatus::NotClosed { level }, Some(u)) = (self.status, &self.witness) else {
            return Ok(false);
        };
        let lifted = frobenius_power(j, level)?.sum(quotient.defining())?;
        let base = j.sum(quotient.defining())?;
        Ok(lifted.contains(&u.frobenius(level)?)? && !base.contains(u)?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosureOptions {
    pub e_max: u32,
    /// Stop when two consecutive levels agree, reporting a heuristic status.
    pub early_stop: bool,
}

impl Default for ClosureOptions {
    fn default() -> Self {
        ClosureOptions { e_max: 3, early_stop: false }
    }
}

/// Searches levels `1..=e_max` for an element of the Frobenius closure of `J`
/// outside `J + I`.
pub fn is_frobenius_closed(
    j: &Ideal,
    quotient: &QuotientPresentation,
    options: ClosureOptions,
) -> Result<FrobeniusClosureReport> {
    if options.e_max == 0 {
        return Err(Error::domain("e_max must be at least 1"));
    }
    let base = j.sum(quotient.defining())?;
    let mut chain: Vec<Ideal> = Vec::new();
    for e in 1..=options.e_max {
        let level = frobenius_closure_level(j, quotient, e)?;
        let mut witness = None;
        for g in level.generators() {
            if !base.contains(g)? {
                witness = Some(g.clone());
                break;
            }
        }
        chain.push(level);
        if witness.is_some() {
            return Ok(FrobeniusClosureReport { status: ClosureStatus::NotClosed { level: e }, witness, chain, base });
        }
        if options.early_stop && e >= 2 && chain[chain.len() - 2].same_ideal(&chain[chain.len() - 1])? {
            return Ok(FrobeniusClosureReport {
                status: ClosureStatus::StabilizedHeuristic(e),
                witness: None,
                chain,
                base,
            });
        }
    }
    Ok(FrobeniusClosureReport { status: ClosureStatus::ClosedUpTo(options.e_max), witness: None, chain, base })
}
