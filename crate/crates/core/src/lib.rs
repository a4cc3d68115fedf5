//! Exact checks for F-purity and F-injectivity of quotients of polynomial
//! rings over prime fields, at the origin.

pub mod arith;
pub mod error;
pub mod frobenius;
pub mod fsing;
pub mod groebner;
pub mod poly;
pub mod zoo;

pub use arith::{binomial_mod_p, FieldElement, PrimeChar};
pub use error::{Error, Result};
pub use frobenius::{
    frobenius_closure_level, frobenius_power, frobenius_preimage, is_frobenius_closed, pe_th_root, ClosureOptions,
    ClosureStatus, FrobeniusClosureReport, QuotientPresentation,
};
pub use fsing::{
    decide_hypersurface, fedder_general, fedder_hypersurface, fedder_product, finjective_cm_quotient,
    finjective_complete_intersection, finjective_hypersurface, pigeonhole_precheck, union_decomposition_check,
    CmStatus, FinjectivityBasis, FinjectivityDetail, FinjectivityOutcome, FinjectivityVerdict, FpurityCertificate,
    FpurityMethod, FpurityOutcome, FpurityVerdict,
};
pub use groebner::{
    buchberger, colon, eliminate, ideal_membership, intersect, krull_dimension, monomial_ideal_membership,
    normal_form, radical_membership, GroebnerBasis, GroebnerLimits, Ideal,
};
pub use poly::{Monomial, MonomialOrder, PolyRing, Polynomial};
