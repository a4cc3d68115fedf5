//! Brute-force oracles and seeded generators shared by the integration tests.
//! Nothing here calls into the Gröbner, Frobenius or Fedder code paths.
#![allow(dead_code)]

use std::collections::HashMap;

use fpure_core::{Monomial, MonomialOrder, PolyRing, Polynomial, PrimeChar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ring(p: u64, vars: &[&str]) -> PolyRing {
    PolyRing::new(PrimeChar::new(p).unwrap(), vars.iter().copied(), MonomialOrder::GrevLex).unwrap()
}

/// All exponent vectors in `n` variables of total degree `<= d`.
pub fn monomials_up_to(n: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, d: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for e in 0..=d {
            cur.push(e);
            rec(n, d - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, &mut Vec::new(), &mut out);
    out
}

/// Random polynomial with up to `terms` terms of degree `<= deg`.
pub fn random_poly(r: &PolyRing, rng: &mut ChaCha8Rng, terms: usize, deg: u32, in_max_ideal: bool) -> Polynomial {
    let p = r.p() as i64;
    let n = r.arity();
    let mut out = Vec::new();
    let count = rng.gen_range(1..=terms);
    for _ in 0..count {
        let mut exps = vec![0u32; n];
        let d = rng.gen_range(if in_max_ideal { 1 } else { 0 }..=deg);
        for _ in 0..d {
            exps[rng.gen_range(0..n)] += 1;
        }
        out.push((Monomial::new(exps), rng.gen_range(1..p.max(2))));
    }
    r.from_terms(out).unwrap()
}

/// Random homogeneous polynomial of degree `deg`.
pub fn random_homogeneous(r: &PolyRing, rng: &mut ChaCha8Rng, terms: usize, deg: u32) -> Polynomial {
    let p = r.p() as i64;
    let n = r.arity();
    let mut out = Vec::new();
    for _ in 0..rng.gen_range(1..=terms) {
        let mut exps = vec![0u32; n];
        for _ in 0..deg {
            exps[rng.gen_range(0..n)] += 1;
        }
        out.push((Monomial::new(exps), rng.gen_range(1..p.max(2))));
    }
    r.from_terms(out).unwrap()
}

fn inv(a: u64, p: u64) -> u64 {
    let mut r = 1u64;
    let (mut b, mut k) = (a % p, p - 2);
    while k > 0 {
        if k & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        k >>= 1;
    }
    r
}

/// Macaulay-matrix membership: is `f` in the F_p-span of `{m·g : deg(m·g) <= bound}`?
///
/// Rows are reduced to echelon form by plain Gaussian elimination, then `f`
/// is reduced against them.
pub fn macaulay_member(f: &Polynomial, gens: &[Polynomial], bound: u32) -> bool {
    if f.is_zero() {
        return true;
    }
    let r = f.ring();
    let p = r.p() as u64;
    let n = r.arity();
    let mut columns: HashMap<Vec<u32>, usize> = HashMap::new();
    let col = |m: &Monomial, columns: &mut HashMap<Vec<u32>, usize>| {
        let k = columns.len();
        *columns.entry(m.exponents().to_vec()).or_insert(k)
    };
    let mut rows: Vec<HashMap<usize, u64>> = Vec::new();
    for g in gens {
        let Ok(dg) = g.total_degree() else { continue };
        if dg > bound as u64 {
            continue;
        }
        for m in monomials_up_to(n, bound - dg as u32) {
            let shifted = g * &r.monomial(Monomial::new(m));
            let mut row = HashMap::new();
            for (t, c) in shifted.terms() {
                row.insert(col(t, &mut columns), c.value() as u64);
            }
            rows.push(row);
        }
    }
    let mut target: HashMap<usize, u64> = HashMap::new();
    for (t, c) in f.terms() {
        target.insert(col(t, &mut columns), c.value() as u64);
    }

    // echelon form keyed by pivot column
    let mut pivots: HashMap<usize, HashMap<usize, u64>> = HashMap::new();
    let reduce = |mut v: HashMap<usize, u64>, pivots: &HashMap<usize, HashMap<usize, u64>>| -> HashMap<usize, u64> {
        loop {
            let Some(&c) = v.keys().filter(|c| pivots.contains_key(c)).min() else { return v };
            let a = v[&c];
            let prow = &pivots[&c];
            for (&k, &b) in prow {
                let e = v.entry(k).or_insert(0);
                *e = (*e + p - a * b % p) % p;
                if *e == 0 {
                    v.remove(&k);
                }
            }
        }
    };
    for row in rows {
        let v = reduce(row, &pivots);
        if let Some(&c) = v.keys().min() {
            let s = inv(v[&c], p);
            let normalized: HashMap<usize, u64> = v.into_iter().map(|(k, x)| (k, x * s % p)).collect();
            // keep earlier pivot rows free of the new pivot column
            for prow in pivots.values_mut() {
                if let Some(&a) = prow.get(&c) {
                    for (&k, &b) in &normalized {
                        let e = prow.entry(k).or_insert(0);
                        *e = (*e + p - a * b % p) % p;
                        if *e == 0 {
                            prow.remove(&k);
                        }
                    }
                }
            }
            pivots.insert(c, normalized);
        }
    }
    reduce(target, &pivots).is_empty()
}

/// Whether `f` lies in the monomial ideal `(x_1^q, ..., x_n^q)`, by inspection.
pub fn in_bracket_of_maximal(f: &Polynomial, q: u32) -> bool {
    f.terms().all(|(m, _)| m.exponents().iter().any(|&e| e >= q))
}

/// Number of multisets of size `k` from `terms` (indices) whose monomial
/// product equals `target`, with the product of their coefficients summed
/// as a multinomial-weighted integer.
pub fn multiset_contributions(terms: &[(Vec<u32>, i64)], k: usize, target: &[u32]) -> (usize, i128) {
    #[allow(clippy::too_many_arguments)]
    fn rec(
        terms: &[(Vec<u32>, i64)],
        start: usize,
        left: usize,
        acc: &mut Vec<u32>,
        counts: &mut Vec<usize>,
        target: &[u32],
        out: &mut (usize, i128),
        k: usize,
    ) {
        if acc.iter().zip(target).any(|(a, t)| a > t) {
            return;
        }
        if left == 0 {
            if acc == target {
                // multinomial k! / prod(c_i!) times prod coeff^c_i
                let mut coeff: i128 = (1..=k as i128).product();
                for (i, &c) in counts.iter().enumerate() {
                    let fact: i128 = (1..=c as i128).product();
                    coeff /= fact;
                    coeff *= (terms[i].1 as i128).pow(c as u32);
                }
                out.0 += 1;
                out.1 += coeff;
            }
            return;
        }
        for i in start..terms.len() {
            for (a, e) in acc.iter_mut().zip(&terms[i].0) {
                *a += e;
            }
            counts[i] += 1;
            rec(terms, i, left - 1, acc, counts, target, out, k);
            counts[i] -= 1;
            for (a, e) in acc.iter_mut().zip(&terms[i].0) {
                *a -= e;
            }
        }
    }
    let mut out = (0usize, 0i128);
    let mut acc = vec![0u32; target.len()];
    let mut counts = vec![0usize; terms.len()];
    rec(terms, 0, k, &mut acc, &mut counts, target, &mut out, k);
    out
}
