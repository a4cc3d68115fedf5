//! Catalogue of the analytic local models of generic projection hypersurfaces
//! in `P^(r+1)`, `r ≤ 5`, and of the high-multiplicity hypersurface in `P^31`.
//!
//! Variables are `z1, ..., z_(r+1)` and indices follow that 1-based naming.
//! Every admissible model is expected to be F-pure; the multiplicity-32 model
//! is expected not to be.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::PrimeChar;
use crate::error::{Error, Result};
use crate::fsing::{
    fedder_hypersurface, pigeonhole_precheck, union_decomposition_check, FinjectivityOutcome, FinjectivityVerdict,
    FpurityOutcome, FpurityVerdict,
};
use crate::poly::{Monomial, MonomialOrder, PolyRing, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseId {
    /// `z1 z2 ⋯ zd`, simple normal crossings.
    Snc,
    /// `z_r^2 - z1^2 z_(r+1)`, the pinch point.
    Pinch,
    /// `z_r^3 + Φ4 + Φ5`.
    Cubic,
    /// `z1 · (z_r^2 - z2^2 z_(r+1))`.
    HyperplanePinch,
    /// `z1 · (z_r^3 + Ψ4 + Ψ5)`.
    HyperplaneCubic,
    /// `(z_r^2 - z1^2 z_(r+1)) · (z_(r-2)^2 - z2^2 z_(r-1))`.
    TwoPinches,
    /// `z1 z2 · (z_r^2 - z3^2 z_(r+1))`.
    SncPinch,
    /// `z1 z2 z3 · (z_r^2 - z4^2 z_(r+1))`.
    TripleSncPinch,
    /// A hypersurface in 31 variables with multiplicity at least 32.
    Doherty,
}

impl CaseId {
    pub const ALL: [CaseId; 9] = [
        CaseId::Snc,
        CaseId::Pinch,
        CaseId::Cubic,
        CaseId::HyperplanePinch,
        CaseId::HyperplaneCubic,
        CaseId::TwoPinches,
        CaseId::SncPinch,
        CaseId::TripleSncPinch,
        CaseId::Doherty,
    ];

    pub fn label(self) -> &'static str {
        match self {
            CaseId::Snc => "0",
            CaseId::Pinch => "1a",
            CaseId::Cubic => "1b",
            CaseId::HyperplanePinch => "2a",
            CaseId::HyperplaneCubic => "2b",
            CaseId::TwoPinches => "2c",
            CaseId::SncPinch => "3",
            CaseId::TripleSncPinch => "4",
            CaseId::Doherty => "doherty",
        }
    }

    pub fn expected(self) -> FpurityOutcome {
        match self {
            CaseId::Doherty => FpurityOutcome::NotFPure,
            _ => FpurityOutcome::FPure,
        }
    }

    pub fn is_union(self) -> bool {
        matches!(
            self,
            CaseId::HyperplanePinch | CaseId::HyperplaneCubic | CaseId::TwoPinches | CaseId::SncPinch | CaseId::TripleSncPinch
        )
    }

    /// Human-readable admissibility constraints.
    pub fn constraints(self) -> &'static str {
        match self {
            CaseId::Snc => "r >= 1, 1 <= d <= r+1",
            CaseId::Pinch => "p != 2, r >= 2",
            CaseId::Cubic => "p != 3, r >= 4",
            CaseId::HyperplanePinch => "p != 2, r >= 3",
            CaseId::HyperplaneCubic => "p != 3, r = 5",
            CaseId::TwoPinches => "p != 2, r = 5",
            CaseId::SncPinch => "p != 2, r >= 4",
            CaseId::TripleSncPinch => "p != 2, r = 5",
            CaseId::Doherty => "r = 30 (31 variables)",
        }
    }

    pub fn shape(self) -> &'static str {
        match self {
            CaseId::Snc => "z1*z2*...*zd",
            CaseId::Pinch => "z_r^2 - z1^2*z_(r+1)",
            CaseId::Cubic => "z_r^3 + Phi4(z1,z2,z3,z_r,z_(r+1)) + Phi5(z1,z2,z3,z_r,z_(r+1))",
            CaseId::HyperplanePinch => "z1 * (z_r^2 - z2^2*z_(r+1))",
            CaseId::HyperplaneCubic => "z1 * (z_r^3 + Phi4(z2,z3,z4,z_r,z_(r+1)) + Phi5(z2,z3,z4,z_r,z_(r+1)))",
            CaseId::TwoPinches => "(z_r^2 - z1^2*z_(r+1)) * (z_(r-2)^2 - z2^2*z_(r-1))",
            CaseId::SncPinch => "z1*z2 * (z_r^2 - z3^2*z_(r+1))",
            CaseId::TripleSncPinch => "z1*z2*z3 * (z_r^2 - z4^2*z_(r+1))",
            CaseId::Doherty => "(z1*...*z8)^4 + optional tail in m^32",
        }
    }

    /// `Ok(())` if `(p, r, d)` is admissible, else the violated bound.
    pub fn check(self, p: u32, r: usize, d: Option<usize>) -> std::result::Result<(), String> {
        let need_p = |bad: u32| if p == bad { Err(format!("case {} excludes p = {bad}", self.label())) } else { Ok(()) };
        let need_r = |ok: bool, what: &str| if ok { Ok(()) } else { Err(format!("case {} needs {what}, got r = {r}", self.label())) };
        if self != CaseId::Snc && d.is_some() {
            return Err(format!("case {} takes no d", self.label()));
        }
        match self {
            CaseId::Snc => {
                need_r(r >= 1, "r >= 1")?;
                match d {
                    Some(d) if (1..=r + 1).contains(&d) => Ok(()),
                    Some(d) => Err(format!("case 0 needs 1 <= d <= r+1 = {}, got d = {d}", r + 1)),
                    None => Err("case 0 needs d".into()),
                }
            }
            CaseId::Pinch => need_p(2).and(need_r(r >= 2, "r >= 2")),
            CaseId::Cubic => need_p(3).and(need_r(r >= 4, "r >= 4")),
            CaseId::HyperplanePinch => need_p(2).and(need_r(r >= 3, "r >= 3")),
            CaseId::HyperplaneCubic => need_p(3).and(need_r(r == 5, "r = 5")),
            CaseId::TwoPinches => need_p(2).and(need_r(r == 5, "r = 5")),
            CaseId::SncPinch => need_p(2).and(need_r(r >= 4, "r >= 4")),
            CaseId::TripleSncPinch => need_p(2).and(need_r(r == 5, "r = 5")),
            CaseId::Doherty => need_r(r == 30, "r = 30"),
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for CaseId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CaseId::ALL
            .into_iter()
            .find(|c| c.label() == s)
            .ok_or_else(|| Error::domain(format!("unknown zoo case `{s}`")))
    }
}

/// Optional random tail for the multiplicity-32 model.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DohertyOptions {
    pub tail_terms: usize,
    pub seed: u64,
}

/// The ring `F_p[z1, ..., z_(r+1)]`.
pub fn zoo_ring(p: PrimeChar, r: usize) -> Result<PolyRing> {
    PolyRing::indexed(p, "z", r + 1, MonomialOrder::GrevLex)
}

struct Z<'a> {
    ring: &'a PolyRing,
}

impl Z<'_> {
    /// `z_i`, 1-based.
    fn z(&self, i: usize) -> Polynomial {
        self.ring.var(i - 1)
    }

    fn mono(&self, c: i64, factors: &[(usize, u32)]) -> Polynomial {
        let mut exps = vec![0u32; self.ring.arity()];
        for &(i, e) in factors {
            exps[i - 1] += e;
        }
        self.ring.from_terms([(Monomial::new(exps), c)]).unwrap()
    }

    fn pinch(&self, top: usize, base: usize, tail: usize) -> Polynomial {
        // z_top^2 - z_base^2 z_tail
        &self.mono(1, &[(top, 2)]) - &self.mono(1, &[(base, 2), (tail, 1)])
    }

    /// `z_r^3 + Φ4 + Φ5` with `Φ` evaluated at `(z_a, z_b, z_c, z_r, z_(r+1))`.
    fn cubic(&self, a: usize, b: usize, c: usize, r: usize, s: usize) -> Polynomial {
        let phi4 = [
            self.mono(1, &[(a, 2), (c, 1), (r, 1)]),
            self.mono(-1, &[(a, 3), (s, 1)]),
            self.mono(2, &[(b, 1), (c, 1), (r, 2)]),
            self.mono(-3, &[(a, 1), (b, 1), (r, 1), (s, 1)]),
        ];
        let phi5 = [
            self.mono(1, &[(a, 2), (c, 2), (r, 1)]),
            self.mono(-1, &[(a, 1), (b, 2), (c, 1), (s, 1)]),
            self.mono(-1, &[(b, 3), (s, 2)]),
        ];
        phi4.iter().chain(&phi5).fold(self.mono(1, &[(r, 3)]), |acc, t| &acc + t)
    }

    fn product(&self, idx: impl IntoIterator<Item = usize>) -> Polynomial {
        idx.into_iter().fold(self.ring.one(), |acc, i| &acc * &self.z(i))
    }
}

/// Defining data of a model: one polynomial, or the two components of a union.
pub fn instantiate(
    case: CaseId,
    p: PrimeChar,
    r: usize,
    d: Option<usize>,
    doherty: DohertyOptions,
) -> Result<Vec<Polynomial>> {
    case.check(p.get(), r, d).map_err(Error::Domain)?;
    let ring = zoo_ring(p, r)?;
    let z = Z { ring: &ring };
    let polys = match case {
        CaseId::Snc => vec![z.product(1..=d.unwrap())],
        CaseId::Pinch => vec![z.pinch(r, 1, r + 1)],
        CaseId::Cubic => vec![z.cubic(1, 2, 3, r, r + 1)],
        CaseId::HyperplanePinch => vec![z.z(1), z.pinch(r, 2, r + 1)],
        CaseId::HyperplaneCubic => vec![z.z(1), z.cubic(2, 3, 4, r, r + 1)],
        CaseId::TwoPinches => vec![z.pinch(r, 1, r + 1), z.pinch(r - 2, 2, r - 1)],
        CaseId::SncPinch => vec![z.product(1..=2), z.pinch(r, 3, r + 1)],
        CaseId::TripleSncPinch => vec![z.product(1..=3), z.pinch(r, 4, r + 1)],
        CaseId::Doherty => vec![doherty_polynomial(&ring, doherty)],
    };
    Ok(polys)
}

/// `(z1 ⋯ z8)^4` plus `tail_terms` random terms of degree 32 to 34.
fn doherty_polynomial(ring: &PolyRing, options: DohertyOptions) -> Polynomial {
    let base = (0..8).fold(ring.one(), |acc, i| &acc * &ring.var(i)).pow(4);
    if options.tail_terms == 0 {
        return base;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    let n = ring.arity();
    let p = ring.p() as i64;
    let mut terms = Vec::with_capacity(options.tail_terms);
    for _ in 0..options.tail_terms {
        let degree = rng.gen_range(32..=34u32);
        let mut exps = vec![0u32; n];
        for _ in 0..degree {
            exps[rng.gen_range(0..n)] += 1;
        }
        terms.push((Monomial::new(exps), rng.gen_range(1..p.max(2))));
    }
    &base + &ring.from_terms(terms).unwrap()
}

#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug)]
pub enum CaseOutcome {
    Verified {
        /// Fedder's criterion on the full defining polynomial, or the
        /// pigeonhole verdict for the multiplicity-32 model.
        verdict: FpurityVerdict,
        /// The three-ring check for union models.
        union: Option<FinjectivityVerdict>,
        /// Direct expansion backing a pigeonhole verdict, when small enough.
        confirmation: Option<FpurityVerdict>,
    },
    Excluded(String),
    Failed(String),
}

#[derive(Clone, Debug)]
pub struct CaseReport {
    pub case: CaseId,
    pub p: u32,
    pub r: usize,
    pub d: Option<usize>,
    pub polynomials: Vec<Polynomial>,
    pub outcome: CaseOutcome,
    pub expected: FpurityOutcome,
    pub computed: Option<FpurityOutcome>,
    pub matches: bool,
    pub wall_time: Duration,
}

impl CaseReport {
    pub fn is_excluded(&self) -> bool {
        matches!(self.outcome, CaseOutcome::Excluded(_))
    }

    fn sort_key(&self) -> (CaseId, u32, usize, Option<usize>) {
        (self.case, self.p, self.r, self.d)
    }
}

fn excluded(case: CaseId, p: u32, r: usize, d: Option<usize>, reason: String) -> CaseReport {
    CaseReport {
        case,
        p,
        r,
        d,
        polynomials: Vec::new(),
        outcome: CaseOutcome::Excluded(reason),
        expected: case.expected(),
        computed: None,
        matches: false,
        wall_time: Duration::ZERO,
    }
}

/// Instantiates a model and checks its F-purity verdict against the expected one.
pub fn verify_case(case: CaseId, p: PrimeChar, r: usize, d: Option<usize>, doherty: DohertyOptions) -> Result<CaseReport> {
    let start = Instant::now();
    let polys = instantiate(case, p, r, d, doherty)?;
    let expected = case.expected();
    let (outcome, computed, matches) = match case {
        CaseId::Doherty => {
            let f = &polys[0];
            let verdict = pigeonhole_precheck(f)?;
            let confirmation = if p.get() == 2 && f.num_terms() <= 20 && f.ring().arity() <= 32 {
                Some(fedder_hypersurface(f)?)
            } else {
                None
            };
            match verdict {
                Some(v) => {
                    let confirmed = confirmation.as_ref().is_none_or(|c| c.outcome == FpurityOutcome::NotFPure);
                    let computed = v.outcome;
                    (
                        CaseOutcome::Verified { verdict: v, union: None, confirmation },
                        Some(computed),
                        confirmed && computed == expected,
                    )
                }
                None => (CaseOutcome::Failed("pigeonhole bound did not apply".into()), None, false),
            }
        }
        _ if case.is_union() => {
            let (g, h) = (&polys[0], &polys[1]);
            let verdict = fedder_hypersurface(&(g * h))?;
            let union = union_decomposition_check(g, h)?;
            let computed = verdict.outcome;
            let ok = computed == expected && union.outcome == FinjectivityOutcome::FInjective;
            (CaseOutcome::Verified { verdict, union: Some(union), confirmation: None }, Some(computed), ok)
        }
        _ => {
            let verdict = fedder_hypersurface(&polys[0])?;
            let computed = verdict.outcome;
            (CaseOutcome::Verified { verdict, union: None, confirmation: None }, Some(computed), computed == expected)
        }
    };
    Ok(CaseReport {
        case,
        p: p.get(),
        r,
        d,
        polynomials: polys,
        outcome,
        expected,
        computed,
        matches,
        wall_time: start.elapsed(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepOptions {
    pub include_doherty: bool,
    pub doherty: DohertyOptions,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions { include_doherty: true, doherty: DohertyOptions::default() }
    }
}

/// Every case over `chars × ranks` (and every `d` for case 0), with
/// inadmissible combinations recorded as excluded. Sorted by `(case, p, r, d)`.
pub fn verify_all(chars: &[u64], ranks: &[usize], options: SweepOptions) -> Vec<CaseReport> {
    let mut jobs: Vec<(CaseId, u64, usize, Option<usize>)> = Vec::new();
    for &p in chars {
        for &r in ranks {
            for case in CaseId::ALL {
                match case {
                    CaseId::Doherty => {}
                    CaseId::Snc => jobs.extend((1..=r + 1).map(|d| (case, p, r, Some(d)))),
                    _ => jobs.push((case, p, r, None)),
                }
            }
        }
        if options.include_doherty {
            jobs.push((CaseId::Doherty, p, 30, None));
        }
    }

    let run = |&(case, p, r, d): &(CaseId, u64, usize, Option<usize>)| -> CaseReport {
        let pc = match PrimeChar::new(p) {
            Ok(pc) => pc,
            Err(e) => {
                let mut rep = excluded(case, p as u32, r, d, String::new());
                rep.outcome = CaseOutcome::Failed(e.to_string());
                return rep;
            }
        };
        if let Err(reason) = case.check(pc.get(), r, d) {
            return excluded(case, pc.get(), r, d, reason);
        }
        verify_case(case, pc, r, d, options.doherty).unwrap_or_else(|e| {
            let mut rep = excluded(case, pc.get(), r, d, String::new());
            rep.outcome = CaseOutcome::Failed(e.to_string());
            rep
        })
    };

    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(jobs.len().max(1));
    let mut reports: Vec<CaseReport> = if workers <= 1 {
        jobs.iter().map(run).collect()
    } else {
        let chunk = jobs.len().div_ceil(workers);
        std::thread::scope(|s| {
            let handles: Vec<_> = jobs.chunks(chunk).map(|c| s.spawn(move || c.iter().map(run).collect::<Vec<_>>())).collect();
            handles.into_iter().flat_map(|h| h.join().expect("sweep worker panicked")).collect()
        })
    };
    reports.sort_by_key(CaseReport::sort_key);
    reports
}
