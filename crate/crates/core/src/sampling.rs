//! Deterministic sampling of random instances for the property and
//! regression suites: monomial m-primary ideals, sub-ideals, and independent
//! form families. Everything is seeded, so suite runs are reproducible.

use crate::error::Result;
use crate::field::FieldCtx;
use crate::groebner::MonomialIdeal;
use crate::local::LocalIdeal;
use crate::poly::{LinearForm, Monomial, Poly, VarSet};
use crate::search::{check_independent, FormFamily, FormProvenance};
use std::sync::Arc;

/// SplitMix64: tiny, seedable, good enough for instance sampling.
#[derive(Debug, Clone)]
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Rng {
        Rng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, n)`.
    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    /// Uniform in `[lo, hi]`.
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }
}

/// A random monomial m-primary ideal in two variables: pure powers
/// `x^a, y^b` plus up to `max_extra` interior staircase corners, all of
/// degree <= `max_deg`, at most 4 minimal generators.
pub fn random_monomial_mprimary_2var(
    rng: &mut Rng,
    field: FieldCtx,
    max_deg: u32,
    max_extra: usize,
) -> LocalIdeal {
    let vs = VarSet::local(2);
    loop {
        let a = rng.range(1, max_deg as i64) as u32;
        let b = rng.range(1, max_deg as i64) as u32;
        let mut exps: Vec<(u32, u32)> = vec![(a, 0), (0, b)];
        for _ in 0..rng.below(max_extra as u64 + 1) {
            if a <= 1 || b <= 1 {
                break;
            }
            let i = rng.range(1, (a - 1) as i64) as u32;
            let j = rng.range(1, (b - 1) as i64) as u32;
            if i + j <= max_deg {
                exps.push((i, j));
            }
        }
        let mi = MonomialIdeal::new(
            2,
            exps.iter().map(|(i, j)| Monomial(vec![*i, *j])).collect(),
        );
        if mi.min_gens().len() > 4 {
            continue;
        }
        let gens: Vec<Poly> = mi
            .min_gens()
            .iter()
            .map(|m| Poly::monomial(vs.clone(), field, m.clone(), field.one()))
            .collect();
        return LocalIdeal::new(vs.clone(), field, gens).unwrap();
    }
}

/// A random m-primary monomial sub-ideal of a 2-variable monomial `q`:
/// every generator is a monomial multiple of a generator of q, and pure
/// powers are preserved on both axes so the result stays m-primary.
pub fn random_monomial_subideal_2var(rng: &mut Rng, q: &LocalIdeal) -> LocalIdeal {
    let vs = q.varset().clone();
    let field = q.field();
    let mut gens: Vec<Poly> = Vec::new();
    for g in q.gens() {
        let m = g.as_monomial().unwrap().0.clone();
        let (dx, dy) = if m.0[1] == 0 {
            (rng.below(3) as u32, 0)
        } else if m.0[0] == 0 {
            (0, rng.below(3) as u32)
        } else {
            (rng.below(2) as u32, rng.below(2) as u32)
        };
        let shifted = Monomial(vec![m.0[0] + dx, m.0[1] + dy]);
        gens.push(Poly::monomial(vs.clone(), field, shifted, field.one()));
    }
    LocalIdeal::new(vs, field, gens).unwrap()
}

/// A random nonzero monomial ideal for the monotonicity and prime suites.
pub fn random_monomial_ideal(
    rng: &mut Rng,
    nvars: usize,
    max_gens: usize,
    max_exp: u32,
) -> MonomialIdeal {
    loop {
        let ngens = 1 + rng.below(max_gens as u64) as usize;
        let gens: Vec<Monomial> = (0..ngens)
            .map(|_| {
                let mut e = vec![0u32; nvars];
                loop {
                    for v in e.iter_mut() {
                        *v = rng.below(max_exp as u64 + 1) as u32;
                    }
                    if e.iter().any(|x| *x > 0) {
                        break;
                    }
                }
                Monomial(e.clone())
            })
            .collect();
        let mi = MonomialIdeal::new(nvars, gens);
        if !mi.is_zero() {
            return mi;
        }
    }
}

/// A random nonzero monomial of degree in `[1, max_exp]` per variable.
pub fn random_monomial(rng: &mut Rng, nvars: usize, max_exp: u32) -> Monomial {
    loop {
        let e: Vec<u32> = (0..nvars)
            .map(|_| rng.below(max_exp as u64 + 1) as u32)
            .collect();
        if e.iter().any(|x| *x > 0) {
            return Monomial(e);
        }
    }
}

/// A random linear form with small integer coefficients, not all zero.
pub fn random_form(rng: &mut Rng, field: FieldCtx, m: usize, coeff_bound: i64) -> LinearForm {
    loop {
        let coeffs: Vec<_> = (0..m)
            .map(|_| field.from_i64(rng.range(-coeff_bound, coeff_bound)))
            .collect();
        if coeffs.iter().any(|c| !c.is_zero()) {
            return LinearForm::new(field, coeffs).unwrap();
        }
    }
}

/// A random independent family of `count` forms (resampled until the
/// independence check passes).
pub fn random_independent_family(
    rng: &mut Rng,
    field: FieldCtx,
    m: usize,
    count: usize,
) -> Result<FormFamily> {
    loop {
        let forms: Vec<LinearForm> = (0..count).map(|_| random_form(rng, field, m, 3)).collect();
        if check_independent(&forms, m)? {
            return Ok(FormFamily {
                forms,
                provenance: FormProvenance::UserSupplied,
                independent: true,
                degenerate_note: None,
            });
        }
    }
}

/// Local variable set shared by the 2-variable samplers.
pub fn local2() -> Arc<VarSet> {
    VarSet::local(2)
}
