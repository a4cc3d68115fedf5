//! Arithmetic in the prime field F_p.
//!
//! Values are kept as least residues in `[0, p)`. The raw `u32` helpers at the
//! bottom are what the polynomial code uses internally; [`FieldElement`] is the
//! checked, characteristic-carrying wrapper exposed to callers.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported characteristic, `2^31 - 1`.
pub const MAX_CHAR: u64 = (1 << 31) - 1;

/// A prime characteristic `p`, verified prime at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeChar(u32);

impl PrimeChar {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..=MAX_CHAR).contains(&p) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeChar(p as u32))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    pub fn element(self, value: u64) -> FieldElement {
        FieldElement { value: (value % self.0 as u64) as u32, p: self }
    }

    /// Reduces a signed integer to its least residue.
    pub fn from_i64(self, value: i64) -> FieldElement {
        let p = self.0 as i64;
        FieldElement { value: value.rem_euclid(p) as u32, p: self }
    }

    pub fn zero(self) -> FieldElement {
        self.element(0)
    }

    pub fn one(self) -> FieldElement {
        self.element(1)
    }

    /// `p^e`, or `None` on `u32` overflow.
    pub fn checked_pow(self, e: u32) -> Option<u32> {
        self.0.checked_pow(e)
    }
}

impl fmt::Display for PrimeChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of F_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u32,
    p: PrimeChar,
}

impl FieldElement {
    #[inline]
    pub fn value(self) -> u32 {
        self.value
    }

    #[inline]
    pub fn characteristic(self) -> PrimeChar {
        self.p
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn check(self, other: FieldElement) -> Result<()> {
        if self.p != other.p {
            return Err(Error::CharMismatch(self.p.0, other.p.0));
        }
        Ok(())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(self, other: FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(FieldElement { value: add_mod(self.value, other.value, self.p.0), p: self.p })
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(self, other: FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(FieldElement { value: sub_mod(self.value, other.value, self.p.0), p: self.p })
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(FieldElement { value: mul_mod(self.value, other.value, self.p.0), p: self.p })
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> FieldElement {
        FieldElement { value: neg_mod(self.value, self.p.0), p: self.p }
    }

    pub fn inverse(self) -> Result<FieldElement> {
        if self.value == 0 {
            return Err(Error::DivisionByZero(self.p.0));
        }
        Ok(FieldElement { value: inv_mod(self.value, self.p.0), p: self.p })
    }

    pub fn pow(self, k: u64) -> FieldElement {
        FieldElement { value: pow_mod(self.value, k, self.p.0), p: self.p }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// `C(n, k) mod p` via Lucas' theorem. Zero when `k > n`.
pub fn binomial_mod_p(n: u64, k: u64, p: PrimeChar) -> FieldElement {
    if k > n {
        return p.zero();
    }
    let pp = p.get() as u64;
    let (mut n, mut k) = (n, k);
    let mut acc = 1u32;
    while k > 0 || n > 0 {
        let (nd, kd) = (n % pp, k % pp);
        if kd > nd {
            return p.zero();
        }
        acc = mul_mod(acc, small_binomial(nd, kd, p.get()), p.get());
        n /= pp;
        k /= pp;
    }
    p.element(acc as u64)
}

// C(n, k) mod p for n < p, so every factor of k! is invertible.
fn small_binomial(n: u64, k: u64, p: u32) -> u32 {
    let k = k.min(n - k);
    let mut num = 1u32;
    let mut den = 1u32;
    for i in 0..k {
        num = mul_mod(num, ((n - i) % p as u64) as u32, p);
        den = mul_mod(den, ((i + 1) % p as u64) as u32, p);
    }
    mul_mod(num, inv_mod(den, p), p)
}

#[inline]
pub(crate) fn add_mod(a: u32, b: u32, p: u32) -> u32 {
    let s = a as u64 + b as u64;
    (if s >= p as u64 { s - p as u64 } else { s }) as u32
}

#[inline]
pub(crate) fn sub_mod(a: u32, b: u32, p: u32) -> u32 {
    if a >= b {
        a - b
    } else {
        (a as u64 + p as u64 - b as u64) as u32
    }
}

#[inline]
pub(crate) fn neg_mod(a: u32, p: u32) -> u32 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

#[inline]
pub(crate) fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

pub(crate) fn pow_mod(a: u32, mut k: u64, p: u32) -> u32 {
    let mut base = a % p;
    let mut acc = 1 % p;
    while k > 0 {
        if k & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        k >>= 1;
    }
    acc
}

/// Inverse by Fermat; caller guarantees `a != 0`.
pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p as u64 - 2, p)
}
