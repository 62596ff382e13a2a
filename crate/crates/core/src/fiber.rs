//! Degree-by-degree computation of the presentation ideal of the fiber cone
//! `F_q(R) = k[X_1..X_m]/Q` via exact linear algebra.
//!
//! A homogeneous degree-k form P is detected exactly: its evaluation at the
//! generators must land in `m q^k` (the null-form test, decided through the
//! truncated-local machinery). The scan is complete per degree, so the
//! accumulated ideal is an under-approximation of the true presentation
//! ideal that becomes exact once generation in low degrees is reached;
//! `stabilized` reports the two-degree heuristic and downstream consumers
//! never rely on exactness for the soundness of emitted certificates.

use crate::error::Result;
use crate::field::FieldElem;
use crate::groebner::{buchberger, krull_dimension, normal_form, HomogIdeal};
use crate::linalg::{kernel_of_rows, SparseVec};
use crate::local::{
    ideal_power, ideal_product, witness_search, witness_search_capped, LocalIdeal, TruncOpts,
};
use crate::poly::{Monomial, MonomialOrder, Poly, VarSet};
use std::sync::Arc;

/// Generators of the null-form ideal found up to a degree bound.
#[derive(Debug, Clone)]
pub struct FiberPresentation {
    pub fiber_vars: Arc<VarSet>,
    pub field: crate::field::FieldCtx,
    /// New generators grouped by the degree at which they appeared.
    pub gens_by_degree: Vec<(u32, Vec<Poly>)>,
    pub d_max: u32,
    /// No new generators appeared in the last two scanned degrees.
    pub stabilized: bool,
    /// Krull dimension of `k[X]/Q'` for the accumulated `Q'`.
    pub dim_check: usize,
}

impl FiberPresentation {
    pub fn all_gens(&self) -> Vec<Poly> {
        self.gens_by_degree
            .iter()
            .flat_map(|(_, v)| v.iter().cloned())
            .collect()
    }

    pub fn ideal(&self) -> HomogIdeal {
        HomogIdeal::new(self.fiber_vars.clone(), self.field, self.all_gens())
            .expect("null-forms are homogeneous")
    }

    pub fn is_empty(&self) -> bool {
        self.gens_by_degree.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.gens_by_degree
            .iter()
            .all(|(_, v)| v.iter().all(|p| p.num_terms() == 1))
    }
}

/// All monomials of degree `d` in `nvars` variables, ascending GrevLex.
fn degree_monomials(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(nvars: usize, pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if pos == nvars - 1 {
            cur.push(left);
            out.push(Monomial(cur.clone()));
            cur.pop();
            return;
        }
        for e in 0..=left {
            cur.push(e);
            rec(nvars, pos + 1, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(nvars, 0, d, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// A basis of the degree-k null-forms of q: homogeneous P of degree k with
/// `P(u_1,...,u_m)` in `m q^k`. Complete for the degree.
pub fn nullforms_at_degree(q: &LocalIdeal, k: u32, opts: &TruncOpts) -> Result<Vec<Poly>> {
    let m = q.gens().len();
    let field = q.field();
    let fiber_vs = VarSet::fiber(m);
    let m_ideal = LocalIdeal::maximal(q.varset().clone(), field);
    let mqk = ideal_product(&m_ideal, &ideal_power(q, k))?;
    // m^{1 + k E*(q)} lies in m q^k, a certified witness bound.
    let q_witness = witness_search(q, opts)?.witness.e_star;
    let ctx = witness_search_capped(&mqk, opts, Some(1 + k * q_witness))?;
    let bound = ctx.basis.offset(ctx.witness.e_star);

    let fiber_mons = degree_monomials(m, k);
    let mut residues: Vec<SparseVec> = Vec::with_capacity(fiber_mons.len());
    for alpha in &fiber_mons {
        // Evaluate u^alpha, truncated to the witness order as we go.
        let mut eval = Poly::one(q.varset().clone(), field);
        for (i, e) in alpha.0.iter().enumerate() {
            if *e > 0 {
                let p = q.gens()[i].pow_truncated(*e, Some(ctx.basis.e))?;
                eval = eval.mul_truncated(&p, Some(ctx.basis.e))?;
            }
        }
        let v = ctx.basis.vec_of(&eval);
        residues.push(ctx.ech.reduce_projected(v, bound));
    }
    let kernel = kernel_of_rows(field, ctx.basis.len(), &residues);
    let forms = kernel
        .into_iter()
        .map(|coeffs| {
            let terms: Vec<(Monomial, FieldElem)> = fiber_mons
                .iter()
                .zip(coeffs)
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| (m.clone(), c))
                .collect();
            Poly::from_terms(fiber_vs.clone(), field, terms)
        })
        .collect();
    Ok(forms)
}

/// Scan degrees `1..=d_max` and assemble the presentation; a form is a new
/// generator when it is not in the degree slice of the ideal generated by
/// earlier findings.
pub fn fiber_presentation(
    q: &LocalIdeal,
    d_max: u32,
    opts: &TruncOpts,
) -> Result<FiberPresentation> {
    let m = q.gens().len();
    let field = q.field();
    let fiber_vs = VarSet::fiber(m);
    let mut gens_by_degree: Vec<(u32, Vec<Poly>)> = Vec::new();
    let mut accumulated: Vec<Poly> = Vec::new();
    let mut last_new_degree = 0u32;

    for k in 1..=d_max {
        let nf = nullforms_at_degree(q, k, opts)?;
        let mut new_at_k: Vec<Poly> = Vec::new();
        for f in nf {
            let reduced = if accumulated.is_empty() && new_at_k.is_empty() {
                f
            } else {
                let mut gens = accumulated.clone();
                gens.extend(new_at_k.iter().cloned());
                let ideal = HomogIdeal::new(fiber_vs.clone(), field, gens)?;
                let gb = buchberger(&ideal, MonomialOrder::GrevLex);
                normal_form(&f, &gb)
            };
            if !reduced.is_zero() {
                new_at_k.push(reduced.monic());
            }
        }
        if !new_at_k.is_empty() {
            last_new_degree = k;
            accumulated.extend(new_at_k.iter().cloned());
            gens_by_degree.push((k, new_at_k));
        }
    }

    let stabilized = d_max >= 2 && last_new_degree + 2 <= d_max;
    let ideal = HomogIdeal::new(fiber_vs.clone(), field, accumulated)?;
    let dim_check = krull_dimension(&ideal);
    Ok(FiberPresentation {
        fiber_vars: fiber_vs,
        field,
        gens_by_degree,
        d_max,
        stabilized,
        dim_check,
    })
}

/// Default scan bound: twice the maximal generator degree, plus two.
pub fn default_d_max(q: &LocalIdeal) -> u32 {
    2 * q.max_gen_degree() + 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;
    use crate::groebner::is_zero_dimensional;
    use crate::local::ideal_member;
    use crate::parse::parse;

    fn qq() -> FieldCtx {
        FieldCtx::rationals()
    }

    fn ideal(gens: &[&str]) -> LocalIdeal {
        let vs = VarSet::local(2);
        let polys = gens.iter().map(|s| parse(s, &vs, qq()).unwrap()).collect();
        LocalIdeal::new(vs, qq(), polys).unwrap()
    }

    #[test]
    fn no_linear_nullforms_for_minimal_generators() {
        let q = ideal(&["x^2", "x*y", "y^3"]);
        let nf = nullforms_at_degree(&q, 1, &TruncOpts::default()).unwrap();
        assert!(nf.is_empty());
    }

    #[test]
    fn degree_two_nullform_is_xz() {
        let q = ideal(&["x^2", "x*y", "y^3"]);
        let nf = nullforms_at_degree(&q, 2, &TruncOpts::default()).unwrap();
        assert_eq!(nf.len(), 1);
        assert_eq!(nf[0].to_string(), "X*Z");
    }

    #[test]
    fn regular_system_has_no_nullforms() {
        let q = ideal(&["x", "y"]);
        for k in 1..=3 {
            assert!(nullforms_at_degree(&q, k, &TruncOpts::default())
                .unwrap()
                .is_empty());
        }
    }

    #[test]
    fn example_one_presentation() {
        let q = ideal(&["x^2", "x*y", "y^3"]);
        let pres = fiber_presentation(&q, 8, &TruncOpts::default()).unwrap();
        let gens = pres.all_gens();
        assert_eq!(gens.len(), 1);
        assert_eq!(gens[0].to_string(), "X*Z");
        assert!(pres.stabilized);
        assert_eq!(pres.dim_check, 2);
        assert!(pres.is_monomial());
    }

    #[test]
    fn regular_system_presentation_is_zero() {
        let q = ideal(&["x", "y"]);
        let pres = fiber_presentation(&q, 3, &TruncOpts::default()).unwrap();
        assert!(pres.is_empty());
        assert!(pres.stabilized);
        assert_eq!(pres.dim_check, 2);
    }

    #[test]
    fn cube_of_maximal_ideal_gives_veronese_relations() {
        // q = m^3 = (x^3, x^2 y, x y^2, y^3): the presentation is the ideal
        // of 2x2 minors (binomial), generated in degree 2 with 3 generators.
        let q = ideal(&["x^3", "x^2*y", "x*y^2", "y^3"]);
        let pres = fiber_presentation(&q, 6, &TruncOpts::default()).unwrap();
        assert!(pres.stabilized);
        assert_eq!(pres.gens_by_degree.len(), 1);
        let (deg, gens) = &pres.gens_by_degree[0];
        assert_eq!(*deg, 2);
        assert_eq!(gens.len(), 3);
        assert!(!pres.is_monomial());
        assert_eq!(pres.dim_check, 2);
        // The quotient is the cubic Veronese of the plane: dimension 2 and
        // the three expected binomials vanish on it.
        let vs = pres.fiber_vars.clone();
        let expected = ["Y^2 - X*U", "Y*U - X*V", "U^2 - Y*V"];
        let gb = buchberger(&pres.ideal(), MonomialOrder::GrevLex);
        for e in expected {
            let p = parse(e, &vs, qq()).unwrap();
            assert!(
                normal_form(&p, &gb).is_zero(),
                "{} should lie in the presentation ideal",
                e
            );
        }
    }

    #[test]
    fn unstabilized_when_bound_too_small() {
        let q = ideal(&["x^2", "x*y", "y^3"]);
        // Degree 2 finds XZ; scanning only to 2 leaves no stabilization
        // window.
        let pres = fiber_presentation(&q, 2, &TruncOpts::default()).unwrap();
        assert!(!pres.stabilized);
        let pres1 = fiber_presentation(&q, 1, &TruncOpts::default()).unwrap();
        assert!(!pres1.stabilized);
    }

    #[test]
    fn nullform_completeness_per_degree() {
        // Every spanned form passes the null-form membership test, and every
        // fiber monomial outside the span fails it.
        let opts = TruncOpts::default();
        let samples = [
            vec!["x^2", "x*y", "y^3"],
            vec!["x^3", "x*y", "y^2"],
            vec!["x^2", "y^2"],
            vec!["x^3", "x^2*y", "y^3"],
        ];
        for gens in &samples {
            let q = ideal(gens);
            let m_ideal = LocalIdeal::maximal(q.varset().clone(), qq());
            for k in 1..=3u32 {
                let nf = nullforms_at_degree(&q, k, &opts).unwrap();
                let mqk = ideal_product(&m_ideal, &ideal_power(&q, k)).unwrap();
                for f in &nf {
                    // Evaluate the form at the generators.
                    let mut eval = Poly::zero(q.varset().clone(), qq());
                    for (mon, c) in f.terms() {
                        let mut prod = Poly::one(q.varset().clone(), qq());
                        for (i, e) in mon.0.iter().enumerate() {
                            if *e > 0 {
                                prod = prod
                                    .mul(&q.gens()[i].pow_truncated(*e, None).unwrap())
                                    .unwrap();
                            }
                        }
                        eval = eval.add(&prod.scale(c)).unwrap();
                    }
                    assert!(
                        ideal_member(&eval, &mqk, &opts).unwrap(),
                        "spanned form {} fails the null-form test for {:?}",
                        f,
                        gens
                    );
                }
                // Monomials outside the span: test a few.
                let span_ideal =
                    HomogIdeal::new(VarSet::fiber(q.gens().len()), qq(), nf.clone()).unwrap();
                let gb = buchberger(&span_ideal, MonomialOrder::GrevLex);
                for alpha in degree_monomials(q.gens().len(), k) {
                    let mono = Poly::monomial(
                        VarSet::fiber(q.gens().len()),
                        qq(),
                        alpha.clone(),
                        qq().one(),
                    );
                    let in_span = normal_form(&mono, &gb).is_zero();
                    let mut eval = Poly::one(q.varset().clone(), qq());
                    for (i, e) in alpha.0.iter().enumerate() {
                        if *e > 0 {
                            eval = eval
                                .mul(&q.gens()[i].pow_truncated(*e, None).unwrap())
                                .unwrap();
                        }
                    }
                    let is_null = ideal_member(&eval, &mqk, &opts).unwrap();
                    if in_span {
                        assert!(is_null);
                    } else if nf.is_empty() {
                        // With no null-forms at all, no monomial evaluation
                        // may land in m q^k.
                        assert!(!is_null);
                    }
                }
            }
        }
    }

    #[test]
    fn winning_pair_closes_the_presentation() {
        // Adding the Example 1 winning forms to Q' gives a zero-dimensional
        // ideal.
        let q = ideal(&["x^2", "x*y", "y^3"]);
        let pres = fiber_presentation(&q, 8, &TruncOpts::default()).unwrap();
        let vs = pres.fiber_vars.clone();
        let y = parse("Y", &vs, qq()).unwrap();
        let s = parse("X + Y + Z", &vs, qq()).unwrap();
        let closed = pres.ideal().extended(&[y, s]).unwrap();
        assert!(is_zero_dimensional(&closed));
    }
}
