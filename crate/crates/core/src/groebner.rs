//! Buchberger's algorithm and the ideal operations built on it.
//!
//! Pairs are pruned with the Gebauer–Möller criteria and selected by the
//! normal strategy (smallest lcm first, ties broken by the monomial order and
//! then by generator index). Every computation is capped by [`GroebnerLimits`].

use std::fmt;
use std::sync::OnceLock;

use crate::arith::{inv_mod, mul_mod};
use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, PolyRing, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroebnerLimits {
    pub max_pairs: usize,
    pub max_degree: u64,
}

impl Default for GroebnerLimits {
    fn default() -> Self {
        GroebnerLimits { max_pairs: 1_000_000, max_degree: 512 }
    }
}

/// A reduced Gröbner basis, sorted by increasing leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: PolyRing,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> + '_ {
        self.elements.iter().filter_map(|g| g.leading_monomial())
    }

    /// Remainder of `f` on division by the basis, in `f`'s own ring.
    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        let g = if f.ring() == &self.ring { f.clone() } else { f.reorder(&self.ring)? };
        let r = reduce_full(&g, &self.elements);
        if f.ring() == &self.ring {
            Ok(r)
        } else {
            r.reorder(f.ring())
        }
    }

    /// Checks that every S-polynomial reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        for i in 0..self.elements.len() {
            for j in i + 1..self.elements.len() {
                let s = s_polynomial(&self.elements[i], &self.elements[j]);
                if !reduce_full(&s, &self.elements).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Checks monic leading coefficients and that no term of an element is
    /// divisible by another element's leading monomial.
    pub fn is_reduced(&self) -> bool {
        let lms: Vec<&Monomial> = self.leading_monomials().collect();
        self.elements.iter().enumerate().all(|(i, g)| {
            g.leading_coefficient().is_some_and(|c| c.value() == 1)
                && g.raw_terms().iter().all(|(m, _)| {
                    lms.iter().enumerate().all(|(j, lm)| j == i || !lm.divides(m))
                })
        })
    }
}

/// `S(f, g)` for monic or non-monic `f`, `g`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (lf, lg) = (f.leading_monomial().unwrap(), g.leading_monomial().unwrap());
    let p = f.ring().p();
    let cf = inv_mod(f.raw_terms()[0].1, p);
    let cg = inv_mod(g.raw_terms()[0].1, p);
    let l = lf.lcm(lg);
    let a = f.mul_term_raw(cf, &l.div(lf).unwrap());
    let b = g.mul_term_raw(cg, &l.div(lg).unwrap());
    &a - &b
}

fn find_reducer<'a>(m: &Monomial, basis: &'a [Polynomial]) -> Option<&'a Polynomial> {
    basis.iter().find(|g| g.leading_monomial().is_some_and(|lm| lm.divides(m)))
}

/// Full reduction: every term of the result is irreducible by `basis`.
fn reduce_full(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let ring = f.ring().clone();
    let p = ring.p();
    let mut rest = f.clone();
    let mut done: Vec<(Monomial, u32)> = Vec::new();
    while let Some((m, c)) = rest.raw_terms().first().cloned() {
        match find_reducer(&m, basis) {
            Some(g) => {
                let (lm, lc) = &g.raw_terms()[0];
                let factor = mul_mod(c, inv_mod(*lc, p), p);
                let shifted = g.mul_term_raw(factor, &m.div(lm).unwrap());
                rest = &rest - &shifted;
            }
            None => {
                done.push((m, c));
                let tail = rest.raw_terms()[1..].to_vec();
                rest = Polynomial::from_sorted(ring.clone(), tail);
            }
        }
    }
    Polynomial::from_sorted(ring, done)
}

pub fn normal_form(f: &Polynomial, basis: &GroebnerBasis) -> Result<Polynomial> {
    basis.reduce(f)
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Computes the reduced Gröbner basis of `gens` (all in `ring`, which carries the order).
fn buchberger_in(ring: &PolyRing, gens: &[Polynomial], limits: GroebnerLimits) -> Result<GroebnerBasis> {
    let order = ring.order();
    let mut polys: Vec<Polynomial> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut pairs_seen = 0usize;
    let mut pairs_done = 0usize;

    let unit = |ring: &PolyRing| GroebnerBasis { ring: ring.clone(), elements: vec![ring.one()] };

    let mut inputs: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.monic()).collect();
    inputs.sort_by(|a, b| order.compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));

    let diagnostics = |polys: &Vec<Polynomial>, active: &Vec<usize>, pairs_done: usize, pending: usize| {
        let maxdeg = active.iter().filter_map(|&k| polys[k].total_degree().ok()).max().unwrap_or(0);
        format!(
            "basis size {}, pairs reduced {}, pairs pending {}, max basis degree {}",
            active.len(),
            pairs_done,
            pending,
            maxdeg
        )
    };

    let mut queue: Vec<Polynomial> = inputs;
    let mut from_input = true;
    loop {
        // new polynomials are either the (reduced) inputs or S-polynomial remainders
        for h in std::mem::take(&mut queue) {
            let active_polys: Vec<Polynomial> = active.iter().map(|&k| polys[k].clone()).collect();
            let h = if from_input { reduce_full(&h, &active_polys).monic() } else { h };
            if h.is_zero() {
                continue;
            }
            if h.is_constant() {
                return Ok(unit(ring));
            }
            let deg = h.total_degree()?;
            if deg > limits.max_degree {
                return Err(Error::resource(format!(
                    "basis element of degree {deg} exceeds the cap {} ({})",
                    limits.max_degree,
                    diagnostics(&polys, &active, pairs_done, pairs.len())
                )));
            }
            let idx = polys.len();
            polys.push(h);
            let created = update(&polys, &mut active, &mut pairs, idx);
            pairs_seen += created;
            if pairs_seen > limits.max_pairs {
                return Err(Error::resource(format!(
                    "pair count exceeds the cap {} ({})",
                    limits.max_pairs,
                    diagnostics(&polys, &active, pairs_done, pairs.len())
                )));
            }
        }
        from_input = false;

        let Some(best) = select_pair(&pairs, order) else { break };
        let pair = pairs.swap_remove(best);
        pairs_done += 1;
        if pair.lcm.degree() > limits.max_degree {
            return Err(Error::resource(format!(
                "S-pair of degree {} exceeds the cap {} ({})",
                pair.lcm.degree(),
                limits.max_degree,
                diagnostics(&polys, &active, pairs_done, pairs.len())
            )));
        }
        let s = s_polynomial(&polys[pair.i], &polys[pair.j]);
        let active_polys: Vec<Polynomial> = active.iter().map(|&k| polys[k].clone()).collect();
        let h = reduce_full(&s, &active_polys);
        if !h.is_zero() {
            queue.push(h.monic());
        }
    }

    let elements = interreduce(active.iter().map(|&k| polys[k].clone()).collect(), order);
    Ok(GroebnerBasis { ring: ring.clone(), elements })
}

fn select_pair(pairs: &[Pair], order: MonomialOrder) -> Option<usize> {
    (0..pairs.len()).min_by(|&a, &b| {
        let (x, y) = (&pairs[a], &pairs[b]);
        x.lcm
            .degree()
            .cmp(&y.lcm.degree())
            .then_with(|| order.compare(&x.lcm, &y.lcm))
            .then_with(|| (x.i.max(x.j), x.i.min(x.j)).cmp(&(y.i.max(y.j), y.i.min(y.j))))
    })
}

/// Gebauer–Möller update with new element `h = polys[idx]`. Returns the number
/// of pairs added.
fn update(polys: &[Polynomial], active: &mut Vec<usize>, pairs: &mut Vec<Pair>, idx: usize) -> usize {
    let lm = |k: usize| polys[k].leading_monomial().unwrap();
    let lh = lm(idx);

    let mut candidates: Vec<(usize, Monomial)> = active.iter().map(|&g| (g, lh.lcm(lm(g)))).collect();
    let mut kept: Vec<(usize, Monomial)> = Vec::new();
    while let Some((g1, l1)) = candidates.pop() {
        let coprime = lh.coprime(lm(g1));
        let dominated = candidates.iter().chain(kept.iter()).any(|(_, l2)| l2.divides(&l1));
        if coprime || !dominated {
            kept.push((g1, l1));
        }
    }
    // pairs whose lcm is a product of coprime leading monomials reduce to zero
    let new_pairs: Vec<Pair> = kept
        .into_iter()
        .filter(|(g, _)| !lh.coprime(lm(*g)))
        .map(|(g, lcm)| Pair { i: g, j: idx, lcm })
        .collect();

    pairs.retain(|pr| {
        !(lh.divides(&pr.lcm)
            && lh.lcm(lm(pr.i)) != pr.lcm
            && lh.lcm(lm(pr.j)) != pr.lcm)
    });
    let added = new_pairs.len();
    pairs.extend(new_pairs);
    active.retain(|&g| !lh.divides(lm(g)));
    active.push(idx);
    added
}

fn interreduce(mut elements: Vec<Polynomial>, order: MonomialOrder) -> Vec<Polynomial> {
    elements.sort_by(|a, b| order.compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    // drop elements whose leading monomial is divisible by another's
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in elements {
        let lm = g.leading_monomial().unwrap();
        if !minimal.iter().any(|h| h.leading_monomial().unwrap().divides(lm)) {
            minimal.push(g);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> =
            minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.clone()).collect();
        out.push(reduce_full(&minimal[i], &others).monic());
    }
    out
}

/// An ideal given by generators, with a lazily computed Gröbner basis under
/// the ring's own order.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: PolyRing,
    generators: Vec<Polynomial>,
    limits: GroebnerLimits,
    cached: OnceLock<GroebnerBasis>,
}

impl PartialEq for Ideal {
    /// Equality of generator lists; use [`Ideal::same_ideal`] for ideal equality.
    fn eq(&self, other: &Ideal) -> bool {
        self.ring == other.ring && self.generators == other.generators
    }
}

impl Ideal {
    /// Zero and repeated generators are dropped. An empty list is the zero ideal.
    pub fn new(ring: &PolyRing, generators: impl IntoIterator<Item = Polynomial>) -> Result<Ideal> {
        let mut gens: Vec<Polynomial> = Vec::new();
        for g in generators {
            if g.ring() != ring {
                return Err(Error::RingMismatch);
            }
            if !g.is_zero() && !gens.contains(&g) {
                gens.push(g);
            }
        }
        Ok(Ideal { ring: ring.clone(), generators: gens, limits: GroebnerLimits::default(), cached: OnceLock::new() })
    }

    pub fn zero(ring: &PolyRing) -> Ideal {
        Ideal::new(ring, []).unwrap()
    }

    pub fn unit(ring: &PolyRing) -> Ideal {
        Ideal::new(ring, [ring.one()]).unwrap()
    }

    /// The ideal of the origin, `(x_1, ..., x_n)`.
    pub fn maximal(ring: &PolyRing) -> Ideal {
        Ideal::new(ring, (0..ring.arity()).map(|i| ring.var(i))).unwrap()
    }

    pub fn with_limits(mut self, limits: GroebnerLimits) -> Ideal {
        if limits != self.limits {
            self.limits = limits;
            self.cached = OnceLock::new();
        }
        self
    }

    pub fn limits(&self) -> GroebnerLimits {
        self.limits
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    fn derived(&self, generators: impl IntoIterator<Item = Polynomial>) -> Result<Ideal> {
        Ok(Ideal::new(&self.ring, generators)?.with_limits(self.limits))
    }

    /// Reduced basis under the ring's order, computed once.
    pub fn basis(&self) -> Result<&GroebnerBasis> {
        if let Some(b) = self.cached.get() {
            return Ok(b);
        }
        let b = buchberger_in(&self.ring, &self.generators, self.limits)?;
        Ok(self.cached.get_or_init(|| b))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        if f.is_zero() {
            return Ok(true);
        }
        Ok(self.basis()?.reduce(f)?.is_zero())
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.basis()?.is_unit_ideal())
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool> {
        for g in &self.generators {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn same_ideal(&self, other: &Ideal) -> Result<bool> {
        Ok(self.is_subset_of(other)? && other.is_subset_of(self)?)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        self.derived(self.generators.iter().chain(&other.generators).cloned())
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut gens = Vec::new();
        for f in &self.generators {
            for g in &other.generators {
                gens.push(f * g);
            }
        }
        self.derived(gens)
    }

    /// Adds more generators.
    pub fn extend(&self, more: impl IntoIterator<Item = Polynomial>) -> Result<Ideal> {
        self.derived(self.generators.iter().cloned().chain(more))
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return write!(f, "(0)");
        }
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", gens.join(", "))
    }
}

/// Reduced Gröbner basis of `ideal` under `order`. Recomputed whenever `order`
/// differs from the ring's own order.
pub fn buchberger(ideal: &Ideal, order: MonomialOrder) -> Result<GroebnerBasis> {
    if order == ideal.ring.order() {
        return ideal.basis().cloned();
    }
    let ring = ideal.ring.with_order(order)?;
    let gens = ideal.generators.iter().map(|g| g.reorder(&ring)).collect::<Result<Vec<_>>>()?;
    buchberger_in(&ring, &gens, ideal.limits)
}

pub fn ideal_membership(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    ideal.contains(f)
}

/// Whether every term of `f` is divisible by one of `gens`.
pub fn contained_in_monomial_ideal(f: &Polynomial, gens: &[Monomial]) -> bool {
    f.raw_terms().iter().all(|(m, _)| gens.iter().any(|g| g.divides(m)))
}

/// Membership in an ideal generated by monomials, without a Gröbner basis.
pub fn monomial_ideal_membership(f: &Polynomial, gens: &[Polynomial]) -> Result<bool> {
    let mut monos = Vec::with_capacity(gens.len());
    for g in gens {
        if g.ring() != f.ring() {
            return Err(Error::RingMismatch);
        }
        match g.raw_terms() {
            [(m, _)] => monos.push(m.clone()),
            _ => return Err(Error::domain(format!("`{g}` is not a monomial"))),
        }
    }
    Ok(contained_in_monomial_ideal(f, &monos))
}

/// The generators `x_i^q` of the bracket power of the maximal ideal.
pub fn bracket_power_of_maximal(ring: &PolyRing, q: u32) -> Vec<Monomial> {
    (0..ring.arity()).map(|i| Monomial::var(ring.arity(), i, q)).collect()
}

/// Drops the variables whose `keep` entry is `None`, renaming the rest.
/// The polynomial must not involve any dropped variable.
fn project(f: &Polynomial, target: &PolyRing, keep: &[Option<usize>]) -> Result<Polynomial> {
    let mut terms = Vec::with_capacity(f.num_terms());
    for (m, c) in f.raw_terms() {
        let mut exps = vec![0u32; target.arity()];
        for (i, &e) in m.exponents().iter().enumerate() {
            match keep[i] {
                Some(j) => exps[j] = e,
                None if e > 0 => return Err(Error::domain("projection would drop a used variable")),
                None => {}
            }
        }
        terms.push((Monomial::new(exps), *c as i64));
    }
    target.from_terms(terms)
}

/// `I ∩ k[variables not in drop]`, returned as an ideal of the original ring.
pub fn eliminate(ideal: &Ideal, drop: &[usize]) -> Result<Ideal> {
    let ring = &ideal.ring;
    if drop.iter().any(|&i| i >= ring.arity()) {
        return Err(Error::domain("elimination index out of range"));
    }
    let mut dropped: Vec<usize> = drop.to_vec();
    dropped.sort_unstable();
    dropped.dedup();
    if dropped.is_empty() {
        return Ok(ideal.clone());
    }
    // permute so the dropped variables come first
    let kept: Vec<usize> = (0..ring.arity()).filter(|i| !dropped.contains(i)).collect();
    let perm: Vec<usize> = dropped.iter().chain(&kept).copied().collect();
    let mut to_new = vec![0usize; ring.arity()];
    for (new, &old) in perm.iter().enumerate() {
        to_new[old] = new;
    }
    let elim_ring = ring.with_vars(
        perm.iter().map(|&i| ring.vars()[i].clone()),
        MonomialOrder::BlockElim(dropped.len()),
    )?;
    let gens = ideal.generators.iter().map(|g| g.embed(&elim_ring, &to_new)).collect::<Result<Vec<_>>>()?;
    let basis = buchberger_in(&elim_ring, &gens, ideal.limits)?;
    let block: Vec<usize> = (0..dropped.len()).collect();
    let back: Vec<Option<usize>> = perm.iter().map(|&old| Some(old)).collect();
    let mut out = Vec::new();
    for g in basis.elements() {
        if !g.involves_any(&block) {
            out.push(project(g, ring, &back)?);
        }
    }
    ideal.derived(out)
}

/// `I ∩ J` via `t·I + (1 − t)·J`, eliminating `t`.
pub fn intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    if a.ring != b.ring {
        return Err(Error::RingMismatch);
    }
    let ring = &a.ring;
    if a.is_zero() || b.is_zero() {
        return Ok(Ideal::zero(ring).with_limits(a.limits));
    }
    let t = ring.fresh_name("t");
    let ext = ring.with_vars(std::iter::once(t).chain(ring.vars().iter().cloned()), MonomialOrder::BlockElim(1))?;
    let shift: Vec<usize> = (1..=ring.arity()).collect();
    let tv = ext.var(0);
    let one_minus_t = &ext.one() - &tv;
    let mut gens = Vec::new();
    for f in &a.generators {
        gens.push(&tv * &f.embed(&ext, &shift)?);
    }
    for g in &b.generators {
        gens.push(&one_minus_t * &g.embed(&ext, &shift)?);
    }
    let basis = buchberger_in(&ext, &gens, a.limits)?;
    let keep: Vec<Option<usize>> = std::iter::once(None).chain((0..ring.arity()).map(Some)).collect();
    let mut out = Vec::new();
    for g in basis.elements() {
        if !g.involves_any(&[0]) {
            out.push(project(g, ring, &keep)?);
        }
    }
    a.derived(out)
}

/// Exact quotient `a / b`, or `None` if `b` does not divide `a`.
pub fn exact_division(a: &Polynomial, b: &Polynomial) -> Option<Polynomial> {
    let ring = a.ring();
    let (lm, lc) = b.raw_terms().first()?.clone();
    let p = ring.p();
    let inv = inv_mod(lc, p);
    let mut rest = a.clone();
    let mut quotient: Vec<(Monomial, u32)> = Vec::new();
    while let Some((m, c)) = rest.raw_terms().first().cloned() {
        let shift = m.div(&lm)?;
        let factor = mul_mod(c, inv, p);
        rest = &rest - &b.mul_term_raw(factor, &shift);
        quotient.push((shift, factor));
    }
    Some(Polynomial::from_unsorted(ring.clone(), quotient))
}

/// `(I : J)`, intersecting `(I : f)` over the generators `f` of `J`.
pub fn colon(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    if i.ring != j.ring {
        return Err(Error::RingMismatch);
    }
    if j.is_zero() {
        return Err(Error::domain("colon by the zero ideal"));
    }
    let mut acc: Option<Ideal> = None;
    for f in &j.generators {
        let principal = i.derived([f.clone()])?;
        let meet = intersect(i, &principal)?;
        let mut quotients = Vec::with_capacity(meet.generators.len());
        for g in &meet.generators {
            let q = exact_division(g, f)
                .ok_or_else(|| Error::domain("intersection generator not divisible by the colon element"))?;
            quotients.push(q);
        }
        let part = i.derived(quotients)?;
        acc = Some(match acc {
            None => part,
            Some(prev) => intersect(&prev, &part)?,
        });
    }
    Ok(acc.expect("nonempty generator list"))
}

/// Whether `f^N ∈ I` for some `N`, via `1 ∈ I + (1 − t·f)`.
pub fn radical_membership(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    let ring = &ideal.ring;
    if f.ring() != ring {
        return Err(Error::RingMismatch);
    }
    if f.is_zero() {
        return Ok(true);
    }
    let t = ring.fresh_name("t");
    let ext = ring.with_vars(ring.vars().iter().cloned().chain(std::iter::once(t)), MonomialOrder::GrevLex)?;
    let keep: Vec<usize> = (0..ring.arity()).collect();
    let tv = ext.var(ring.arity());
    let mut gens = ideal.generators.iter().map(|g| g.embed(&ext, &keep)).collect::<Result<Vec<_>>>()?;
    gens.push(&ext.one() - &(&tv * &f.embed(&ext, &keep)?));
    Ok(buchberger_in(&ext, &gens, ideal.limits)?.is_unit_ideal())
}

/// Dimension of `V(I)`: the largest set of variables containing the support
/// of no leading monomial of a Gröbner basis.
pub fn krull_dimension(ideal: &Ideal) -> Result<usize> {
    let basis = ideal.basis()?;
    if basis.is_unit_ideal() {
        return Err(Error::domain("the unit ideal defines the empty scheme"));
    }
    let supports: Vec<Vec<usize>> = basis.leading_monomials().map(|m| m.support().collect()).collect();
    let n = ideal.ring.arity();
    let mut best = 0;
    let mut chosen = vec![false; n];
    max_independent(0, n, &supports, &mut chosen, 0, &mut best);
    Ok(best)
}

fn max_independent(
    next: usize,
    n: usize,
    supports: &[Vec<usize>],
    chosen: &mut Vec<bool>,
    size: usize,
    best: &mut usize,
) {
    if size + (n - next) <= *best {
        return;
    }
    if next == n {
        *best = size;
        return;
    }
    chosen[next] = true;
    let ok = supports.iter().all(|s| !s.iter().all(|&v| chosen[v]));
    if ok {
        max_independent(next + 1, n, supports, chosen, size + 1, best);
    }
    chosen[next] = false;
    max_independent(next + 1, n, supports, chosen, size, best);
}
