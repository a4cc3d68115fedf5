//! Sparse multivariate polynomials over F_p.
//!
//! A [`Polynomial`] stores its terms sorted in descending order under the
//! monomial order of its [`PolyRing`], with no zero coefficients. Two rings are
//! equal when their characteristic, variable names and order agree.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::arith::{add_mod, mul_mod, neg_mod, pow_mod, sub_mod, inv_mod, FieldElement, PrimeChar};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    GrevLex,
    /// The first `n` variables form an elimination block; grevlex inside each block.
    BlockElim(usize),
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::GrevLex => grevlex(&a.exps, &b.exps),
            MonomialOrder::BlockElim(split) => {
                let split = split.min(a.exps.len());
                grevlex(&a.exps[..split], &b.exps[..split])
                    .then_with(|| grevlex(&a.exps[split..], &b.exps[split..]))
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::GrevLex => "grevlex".into(),
            MonomialOrder::BlockElim(k) => format!("elim({k})"),
        }
    }
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

/// An exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(arity: usize) -> Self {
        Monomial { exps: vec![0; arity] }
    }

    pub fn var(arity: usize, i: usize, e: u32) -> Self {
        let mut exps = vec![0; arity];
        exps[i] = e;
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect() }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a + b).collect() }
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = Vec::with_capacity(self.exps.len());
        for (&a, &b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_sub(b)?);
        }
        Some(Monomial { exps })
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }
}

#[derive(Debug, PartialEq, Eq, Hash)]
struct RingData {
    char: PrimeChar,
    vars: Vec<String>,
    order: MonomialOrder,
}

/// `F_p[x_1, ..., x_n]` with a fixed monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing(Arc<RingData>);

impl PolyRing {
    pub fn new<S: Into<String>>(
        char: PrimeChar,
        vars: impl IntoIterator<Item = S>,
        order: MonomialOrder,
    ) -> Result<Self> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        if vars.is_empty() {
            return Err(Error::domain("a ring needs at least one variable"));
        }
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::domain("empty variable name"));
            }
            if vars[..i].contains(v) {
                return Err(Error::domain(format!("duplicate variable `{v}`")));
            }
        }
        if let MonomialOrder::BlockElim(k) = order {
            if k > vars.len() {
                return Err(Error::domain(format!("elimination block {k} exceeds arity {}", vars.len())));
            }
        }
        Ok(PolyRing(Arc::new(RingData { char, vars, order })))
    }

    /// Ring in variables `z1, ..., zn`.
    pub fn indexed(char: PrimeChar, prefix: &str, n: usize, order: MonomialOrder) -> Result<Self> {
        PolyRing::new(char, (1..=n).map(|i| format!("{prefix}{i}")), order)
    }

    pub fn characteristic(&self) -> PrimeChar {
        self.0.char
    }

    pub fn p(&self) -> u32 {
        self.0.char.get()
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn arity(&self) -> usize {
        self.0.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.0.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    pub fn with_order(&self, order: MonomialOrder) -> Result<PolyRing> {
        PolyRing::new(self.0.char, self.0.vars.iter().cloned(), order)
    }

    /// Same characteristic, new variable list and order.
    pub fn with_vars<S: Into<String>>(
        &self,
        vars: impl IntoIterator<Item = S>,
        order: MonomialOrder,
    ) -> Result<PolyRing> {
        PolyRing::new(self.0.char, vars, order)
    }

    /// A variable name not already used by this ring.
    pub fn fresh_name(&self, base: &str) -> String {
        let mut name = base.to_string();
        let mut k = 0;
        while self.var_index(&name).is_some() {
            k += 1;
            name = format!("{base}{k}");
        }
        name
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial { ring: self.clone(), terms: Vec::new() }
    }

    pub fn one(&self) -> Polynomial {
        self.constant(1)
    }

    pub fn constant(&self, c: i64) -> Polynomial {
        let c = self.0.char.from_i64(c).value();
        self.term(c, Monomial::one(self.arity()))
    }

    pub fn var(&self, i: usize) -> Polynomial {
        assert!(i < self.arity(), "variable index {i} out of range");
        self.term(1, Monomial::var(self.arity(), i, 1))
    }

    pub fn monomial(&self, m: Monomial) -> Polynomial {
        self.term(1, m)
    }

    pub(crate) fn term(&self, c: u32, m: Monomial) -> Polynomial {
        debug_assert_eq!(m.arity(), self.arity());
        let c = c % self.p();
        let terms = if c == 0 { Vec::new() } else { vec![(m, c)] };
        Polynomial { ring: self.clone(), terms }
    }

    /// Builds a polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms(&self, terms: impl IntoIterator<Item = (Monomial, i64)>) -> Result<Polynomial> {
        let mut acc: HashMap<Monomial, u32> = HashMap::new();
        let p = self.p();
        for (m, c) in terms {
            if m.arity() != self.arity() {
                return Err(Error::domain(format!(
                    "monomial of arity {} in a ring of arity {}",
                    m.arity(),
                    self.arity()
                )));
            }
            let c = self.0.char.from_i64(c).value();
            let slot = acc.entry(m).or_insert(0);
            *slot = add_mod(*slot, c, p);
        }
        Ok(Polynomial::from_map(self.clone(), acc))
    }
}

/// A polynomial in a [`PolyRing`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: PolyRing,
    terms: Vec<(Monomial, u32)>,
}

impl Polynomial {
    fn from_map(ring: PolyRing, acc: HashMap<Monomial, u32>) -> Polynomial {
        let mut terms: Vec<(Monomial, u32)> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        let order = ring.order();
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        Polynomial { ring, terms }
    }

    /// Terms already canonical but not yet sorted.
    pub(crate) fn from_unsorted(ring: PolyRing, mut terms: Vec<(Monomial, u32)>) -> Polynomial {
        let order = ring.order();
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        Polynomial { ring, terms }
    }

    pub(crate) fn from_sorted(ring: PolyRing, terms: Vec<(Monomial, u32)>) -> Polynomial {
        Polynomial { ring, terms }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending order, coefficients as least residues.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, FieldElement)> + '_ {
        let f = self.ring.characteristic();
        self.terms.iter().map(move |(m, c)| (m, f.element(*c as u64)))
    }

    pub(crate) fn raw_terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self) -> Option<FieldElement> {
        self.terms.first().map(|(_, c)| self.ring.characteristic().element(*c as u64))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn coefficient_of(&self, m: &Monomial) -> FieldElement {
        let c = self.terms.iter().find(|(t, _)| t == m).map_or(0, |(_, c)| *c);
        self.ring.characteristic().element(c as u64)
    }

    /// Value at the origin, i.e. the constant coefficient.
    pub fn constant_term(&self) -> FieldElement {
        self.coefficient_of(&Monomial::one(self.ring.arity()))
    }

    pub fn total_degree(&self) -> Result<u64> {
        self.terms
            .iter()
            .map(|(m, _)| m.degree())
            .max()
            .ok_or_else(|| Error::domain("degree of the zero polynomial"))
    }

    /// Largest `s` with `f` in `m^s`, `m` the ideal of the origin.
    pub fn order_at_origin(&self) -> Result<u64> {
        self.terms
            .iter()
            .map(|(m, _)| m.degree())
            .min()
            .ok_or_else(|| Error::domain("order of the zero polynomial"))
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.mul_bounded(other, None))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let p = self.ring.p();
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match order.compare(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { neg_mod(b[j].1, p) } else { b[j].1 };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { sub_mod(a[i].1, b[j].1, p) } else { add_mod(a[i].1, b[j].1, p) };
                    if c != 0 {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), if negate { neg_mod(*c, p) } else { *c })));
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    /// Product, discarding any monomial with an exponent `>= bound`.
    ///
    /// With `bound = p` this computes the product modulo the monomial ideal
    /// `(x_1^p, ..., x_n^p)`, which is exact because that ideal absorbs multiples.
    pub fn mul_bounded(&self, other: &Polynomial, bound: Option<u32>) -> Polynomial {
        assert_eq!(self.ring, other.ring, "polynomials from different rings");
        let p = self.ring.p();
        let mut acc: HashMap<Monomial, u32> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                if let Some(b) = bound {
                    if m.exps.iter().any(|&e| e >= b) {
                        continue;
                    }
                }
                let slot = acc.entry(m).or_insert(0);
                *slot = add_mod(*slot, mul_mod(*ca, *cb, p), p);
            }
        }
        Polynomial::from_map(self.ring.clone(), acc)
    }

    pub fn neg(&self) -> Polynomial {
        let p = self.ring.p();
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), neg_mod(*c, p))).collect(),
        }
    }

    pub fn scale(&self, c: FieldElement) -> Polynomial {
        self.scale_raw(c.value())
    }

    pub(crate) fn scale_raw(&self, c: u32) -> Polynomial {
        let p = self.ring.p();
        if c.is_multiple_of(p) {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), mul_mod(*a, c, p))).collect(),
        }
    }

    /// `c * m * self`; multiplication by a monomial preserves term order.
    pub fn mul_term(&self, c: FieldElement, m: &Monomial) -> Polynomial {
        self.mul_term_raw(c.value(), m)
    }

    pub(crate) fn mul_term_raw(&self, c: u32, m: &Monomial) -> Polynomial {
        let p = self.ring.p();
        if c.is_multiple_of(p) {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), mul_mod(*a, c, p))).collect(),
        }
    }

    /// Divides by the leading coefficient. The zero polynomial is returned unchanged.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            Some((_, c)) if *c != 1 => self.scale_raw(inv_mod(*c, self.ring.p())),
            _ => self.clone(),
        }
    }

    /// `f^k` by square-and-multiply.
    pub fn pow(&self, k: u64) -> Polynomial {
        self.pow_bounded(k, None)
    }

    /// `f^k` with monomials having an exponent `>= bound` discarded at every step.
    pub fn pow_bounded(&self, mut k: u64, bound: Option<u32>) -> Polynomial {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_bounded(&base, bound);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_bounded(&base, bound);
            }
        }
        acc
    }

    /// The `e`-th Frobenius iterate `f^(p^e)`, computed termwise.
    pub fn frobenius(&self, e: u32) -> Result<Polynomial> {
        let p = self.ring.p();
        let q = self
            .ring
            .characteristic()
            .checked_pow(e)
            .ok_or_else(|| Error::resource(format!("p^e overflows for p = {p}, e = {e}")))?;
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let exps = m
                .exps
                .iter()
                .map(|&a| a.checked_mul(q))
                .collect::<Option<Vec<u32>>>()
                .ok_or_else(|| Error::resource(format!("exponent overflow raising to p^{e}")))?;
            terms.push((Monomial { exps }, pow_mod(*c, q as u64, p)));
        }
        // scaling every exponent by q preserves all supported orders
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    /// Re-expresses the polynomial in `target`, sending variable `i` to `var_map[i]`.
    pub fn embed(&self, target: &PolyRing, var_map: &[usize]) -> Result<Polynomial> {
        if target.characteristic() != self.ring.characteristic() {
            return Err(Error::CharMismatch(self.ring.p(), target.p()));
        }
        if var_map.len() != self.ring.arity() || var_map.iter().any(|&j| j >= target.arity()) {
            return Err(Error::domain("variable map does not fit the target ring"));
        }
        let mut acc: HashMap<Monomial, u32> = HashMap::with_capacity(self.terms.len());
        let p = self.ring.p();
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; target.arity()];
            for (i, &e) in m.exps.iter().enumerate() {
                exps[var_map[i]] += e;
            }
            let slot = acc.entry(Monomial { exps }).or_insert(0);
            *slot = add_mod(*slot, *c, p);
        }
        Ok(Polynomial::from_map(target.clone(), acc))
    }

    /// Same polynomial viewed in a ring with identical variables but another order.
    pub fn reorder(&self, target: &PolyRing) -> Result<Polynomial> {
        if target.vars() != self.ring.vars() || target.characteristic() != self.ring.characteristic() {
            return Err(Error::RingMismatch);
        }
        Ok(Polynomial::from_unsorted(target.clone(), self.terms.clone()))
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|(m, _)| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Whether any term involves one of the given variables.
    pub fn involves_any(&self, vars: &[usize]) -> bool {
        self.terms.iter().any(|(m, _)| vars.iter().any(|&i| m.exps[i] > 0))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let vars = self.ring.vars();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let mut factors = Vec::new();
            if *c != 1 || m.is_one() {
                factors.push(c.to_string());
            }
            for (i, &e) in m.exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(vars[i].clone()),
                    _ => factors.push(format!("{}^{}", vars[i], e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    /// Panics if the rings differ; use [`Polynomial::checked_add`] otherwise.
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomials from different rings")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomials from different rings")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomials from different rings")
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;

            fn $m(self, rhs: &Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}
