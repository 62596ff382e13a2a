//! Exact symbolic computation with m-primary ideals of local rings
//! `k[[x_1,...,x_n]]`: fiber-cone presentations, degree-of-radical bounds,
//! reduction search over families of independent linear forms, and
//! Hilbert-Samuel multiplicities.
//!
//! Everything is carried out over exact coefficient fields (arbitrary
//! precision rationals or a prime field); there is no floating point
//! anywhere. Ideal computations in the local ring go through truncations
//! `R/m^E` with Nakayama-certified soundness, and the polynomial-ring side
//! (fiber variables) is served by a small Buchberger engine.

pub mod degrad;
pub mod error;
pub mod fiber;
pub mod field;
pub mod groebner;
pub mod linalg;
pub mod local;
pub mod mult;
pub mod parse;
pub mod poly;
pub mod sampling;
pub mod search;

pub use degrad::{
    check_degrad_monotonicity, degrad, degrad_from_decomposition, degrad_monomial,
    monomial_minimal_primes, radical_sum_primes_agree, CoordinatePrime, DegRadReport, DegRadSource,
};
pub use error::Error;
pub use fiber::{default_d_max, fiber_presentation, nullforms_at_degree, FiberPresentation};
pub use field::{FieldCtx, FieldElem, Rational};
pub use groebner::{
    buchberger, hilbert_series_monomial, is_groebner_basis, is_zero_dimensional, krull_dimension,
    leading_ideal, normal_form, quotient_degree, GroebnerBasis, HilbertData, HomogIdeal,
    MonomialIdeal,
};
pub use local::{
    contains_m_power, ideal_image, ideal_member, ideal_power, ideal_product, primary_witness,
    reduction_number, LocalIdeal, PrimaryWitness, ReductionNumber, TruncOpts, TruncatedSubspace,
};
pub use mult::{
    degree_vs_multiplicity_check, hs_multiplicity, min_multiplicity_search, newton_multiplicity,
    DegVsMult, MinMultSearch, Mult, MultOpts, MultiplicityResult,
};
pub use poly::{
    apply_form, monomial_cmp, LinearForm, Monomial, MonomialOrder, Poly, VarRole, VarSet,
};
pub use search::{
    check_independent, claim_crosscheck, ell, exhaustive_search, f2_family, find_reduction,
    greedy_select, vandermonde_family, ClaimCrossCheck, DirectVerdict, FormFamily, FormProvenance,
    ReductionCertificate, SearchDiagnostics, SearchOpts, Strategy,
};
