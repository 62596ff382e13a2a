//! Buchberger-based Groebner engine over the fiber variables: normal forms,
//! leading ideals, Krull dimension, Hilbert series of monomial ideals,
//! degrees of graded quotients, and zero-dimensionality.
//!
//! Pair selection follows the normal strategy (smallest lcm degree first)
//! with the coprimality and chain criteria. The returned basis is the
//! reduced Groebner basis, so results are deterministic regardless of the
//! reduction path.

use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::poly::{monomial_cmp, same_varset, Monomial, MonomialOrder, Poly, VarSet};
use std::collections::BTreeSet;
use std::sync::Arc;

/// A homogeneous ideal of the fiber polynomial ring. Inhomogeneous
/// generators are rejected rather than homogenized.
#[derive(Debug, Clone, PartialEq)]
pub struct HomogIdeal {
    varset: Arc<VarSet>,
    field: FieldCtx,
    gens: Vec<Poly>,
}

impl HomogIdeal {
    pub fn new(varset: Arc<VarSet>, field: FieldCtx, gens: Vec<Poly>) -> Result<HomogIdeal> {
        let mut kept = Vec::new();
        for g in gens {
            if !same_varset(&varset, g.varset()) {
                return Err(Error::VarSetMismatch);
            }
            if g.field() != field {
                return Err(Error::ContextMismatch);
            }
            if g.is_zero() {
                continue;
            }
            if g.homogeneous_degree().is_none() {
                return Err(Error::NonHomogeneous);
            }
            kept.push(g);
        }
        Ok(HomogIdeal {
            varset,
            field,
            gens: kept,
        })
    }

    pub fn varset(&self) -> &Arc<VarSet> {
        &self.varset
    }

    pub fn field(&self) -> FieldCtx {
        self.field
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub fn nvars(&self) -> usize {
        self.varset.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.num_terms() == 1)
    }

    /// The ideal extended by degree-one forms (or any homogeneous extras).
    pub fn extended(&self, extra: &[Poly]) -> Result<HomogIdeal> {
        let mut gens = self.gens.clone();
        gens.extend_from_slice(extra);
        HomogIdeal::new(self.varset.clone(), self.field, gens)
    }
}

/// A reduced Groebner basis for a fixed graded order.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    pub order: MonomialOrder,
    varset: Arc<VarSet>,
    polys: Vec<Poly>,
}

impl GroebnerBasis {
    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }

    pub fn varset(&self) -> &Arc<VarSet> {
        &self.varset
    }

    fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys
            .iter()
            .map(|p| p.leading_under(self.order).unwrap().0.clone())
            .collect()
    }
}

fn spoly(f: &Poly, g: &Poly, order: MonomialOrder) -> Poly {
    let (lmf, lcf) = {
        let (m, c) = f.leading_under(order).unwrap();
        (m.clone(), c.clone())
    };
    let (lmg, lcg) = {
        let (m, c) = g.leading_under(order).unwrap();
        (m.clone(), c.clone())
    };
    let field = f.field();
    let l = lmf.lcm(&lmg);
    let mf = lmf.quotient(&l);
    let mg = lmg.quotient(&l);
    let cf = field.inv(&lcf).unwrap();
    let cg = field.inv(&lcg).unwrap();
    let a = f.mul_term(&mf, &cf);
    let b = g.mul_term(&mg, &cg);
    a.sub(&b).unwrap()
}

/// Remainder of `f` on division by `basis`: no term of the result is
/// divisible by any leading monomial of the basis, and `f - result` lies in
/// the span.
fn reduce_full(f: &Poly, basis: &[Poly], order: MonomialOrder) -> Poly {
    let field = f.field();
    let mut rem = f.clone();
    'outer: loop {
        if rem.is_zero() {
            return rem;
        }
        // Scan terms from the top of the order.
        let mut terms: Vec<(Monomial, crate::field::FieldElem)> =
            rem.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| monomial_cmp(order, &b.0, &a.0).unwrap());
        for (m, c) in terms {
            for g in basis {
                let (lm, lc) = g.leading_under(order).unwrap();
                if lm.divides(&m) {
                    let factor = field.div(&c, lc).unwrap();
                    let quot = lm.quotient(&m);
                    rem = rem.sub(&g.mul_term(&quot, &factor)).unwrap();
                    continue 'outer;
                }
            }
        }
        return rem;
    }
}

/// Compute the reduced Groebner basis of a homogeneous ideal.
pub fn buchberger(ideal: &HomogIdeal, order: MonomialOrder) -> GroebnerBasis {
    let mut basis: Vec<Poly> = Vec::new();
    for g in &ideal.gens {
        let r = reduce_full(g, &basis, order);
        if !r.is_zero() {
            basis.push(r.monic());
        }
    }

    // Pair queue keyed by (lcm degree, i, j): the normal strategy.
    let mut queue: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let mut done: BTreeSet<(usize, usize)> = BTreeSet::new();
    let lm = |p: &Poly| p.leading_under(order).unwrap().0.clone();
    for i in 0..basis.len() {
        for j in 0..i {
            let l = lm(&basis[i]).lcm(&lm(&basis[j]));
            queue.insert((l.total_degree(), j, i));
        }
    }

    while let Some(&key) = queue.iter().next() {
        queue.remove(&key);
        let (_, i, j) = key;
        done.insert((i, j));
        let lmi = lm(&basis[i]);
        let lmj = lm(&basis[j]);
        // Coprimality criterion.
        if lmi.is_coprime_with(&lmj) {
            continue;
        }
        // Chain criterion: some k with lm_k | lcm(i, j) and both pairs done.
        let l = lmi.lcm(&lmj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lm(&basis[k]).divides(&l)
                && done.contains(&(i.min(k), i.max(k)))
                && done.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = spoly(&basis[i], &basis[j], order);
        let r = reduce_full(&s, &basis, order);
        if !r.is_zero() {
            let r = r.monic();
            let new = basis.len();
            for (t, other) in basis.iter().enumerate() {
                let l = lm(other).lcm(&lm(&r));
                queue.insert((l.total_degree(), t, new));
            }
            basis.push(r);
        }
    }

    // Minimalize: drop elements whose leading monomial is divisible by
    // another kept leading monomial.
    let lms: Vec<Monomial> = basis.iter().map(lm).collect();
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            if i != j && keep[j] && lms[j].divides(&lms[i]) && (lms[j] != lms[i] || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<Poly> = basis
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(p, _)| p)
        .collect();

    // Tail-reduce each element against the others.
    let mut reduced: Vec<Poly> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Poly> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, p)| p.clone())
            .collect();
        let r = reduce_full(&minimal[i], &others, order);
        if !r.is_zero() {
            reduced.push(r.monic());
        }
    }
    reduced.sort_by(|a, b| {
        monomial_cmp(
            order,
            a.leading_under(order).unwrap().0,
            b.leading_under(order).unwrap().0,
        )
        .unwrap()
    });
    GroebnerBasis {
        order,
        varset: ideal.varset.clone(),
        polys: reduced,
    }
}

/// Normal form of `f` against a Groebner basis.
pub fn normal_form(f: &Poly, basis: &GroebnerBasis) -> Poly {
    reduce_full(f, &basis.polys, basis.order)
}

/// Check the defining property: every S-polynomial of basis pairs reduces
/// to zero, and the basis is reduced (monic, leading monomials pairwise
/// non-divisible).
pub fn is_groebner_basis(basis: &GroebnerBasis) -> bool {
    let polys = &basis.polys;
    for (i, f) in polys.iter().enumerate() {
        let (lmf, lcf) = f.leading_under(basis.order).unwrap();
        if !lcf.is_one() {
            return false;
        }
        for (j, g) in polys.iter().enumerate() {
            if i == j {
                continue;
            }
            let lmg = g.leading_under(basis.order).unwrap().0;
            if lmg.divides(lmf) {
                return false;
            }
            if j < i {
                let s = spoly(f, g, basis.order);
                if !reduce_full(&s, polys, basis.order).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

/// An antichain of monomials under divisibility, generating a monomial ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    nvars: usize,
    min_gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalize and sort the generators.
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> MonomialIdeal {
        let mut gens: Vec<Monomial> = gens.into_iter().collect();
        gens.sort();
        gens.dedup();
        let mut keep = vec![true; gens.len()];
        for i in 0..gens.len() {
            for j in 0..gens.len() {
                if i != j && keep[j] && gens[j].divides(&gens[i]) && gens[j] != gens[i] {
                    keep[i] = false;
                    break;
                }
            }
        }
        let min_gens = gens
            .into_iter()
            .zip(keep)
            .filter(|(_, k)| *k)
            .map(|(m, _)| m)
            .collect();
        MonomialIdeal { nvars, min_gens }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn min_gens(&self) -> &[Monomial] {
        &self.min_gens
    }

    pub fn is_zero(&self) -> bool {
        self.min_gens.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.min_gens.iter().any(|g| g.divides(m))
    }
}

/// Leading ideal of a reduced basis.
pub fn leading_ideal(basis: &GroebnerBasis) -> MonomialIdeal {
    MonomialIdeal::new(basis.varset.len(), basis.leading_monomials())
}

fn dimension_of_monomial(m: &MonomialIdeal) -> usize {
    // Largest variable subset S such that no generator has support inside S;
    // the quotient dimension equals |S| (independent-set characterization).
    let n = m.nvars;
    let supports: Vec<Vec<usize>> = m.min_gens.iter().map(|g| g.support()).collect();
    let mut best = 0usize;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let independent = supports
            .iter()
            .all(|s| !s.iter().all(|v| mask & (1 << v) != 0));
        if independent {
            best = size;
        }
    }
    best
}

/// Krull dimension of `k[X]/I`, computed combinatorially from the GrevLex
/// leading ideal.
pub fn krull_dimension(ideal: &HomogIdeal) -> usize {
    if ideal.is_zero() {
        return ideal.nvars();
    }
    let gb = buchberger(ideal, MonomialOrder::GrevLex);
    dimension_of_monomial(&leading_ideal(&gb))
}

pub fn krull_dimension_under(ideal: &HomogIdeal, order: MonomialOrder) -> usize {
    if ideal.is_zero() {
        return ideal.nvars();
    }
    let gb = buchberger(ideal, order);
    dimension_of_monomial(&leading_ideal(&gb))
}

/// Is `(X_1,...,X_m)`-primary, i.e. is the quotient zero-dimensional?
pub fn is_zero_dimensional(ideal: &HomogIdeal) -> bool {
    krull_dimension(ideal) == 0
}

/// Hilbert series data of a graded quotient: the series is
/// `numerator(t) / (1-t)^m`; after cancelling, `h~(t) / (1-t)^dim` with
/// degree = h~(1) > 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertData {
    /// Coefficients of the numerator, index = power of t.
    pub numerator: Vec<i64>,
    pub dimension: usize,
    pub degree: u64,
    /// Number of ambient variables (the series denominator is `(1-t)^m_vars`).
    pub m_vars: usize,
}

impl HilbertData {
    /// Coefficient of `t^d` in the series expansion (the Hilbert function).
    pub fn hilbert_function(&self, d: usize) -> i64 {
        let m = self.m_vars;
        let mut total: i64 = 0;
        for (i, c) in self.numerator.iter().enumerate() {
            if i > d {
                break;
            }
            let k = (d - i) as u64;
            total += c * binom(m as u64 - 1 + k, m as u64 - 1) as i64;
        }
        total
    }
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= (n - i) as u128;
        den *= (i + 1) as u128;
    }
    (num / den) as u64
}

fn poly_mul_int(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn poly_add_int(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// Numerator of the Hilbert series of `k[X]/I` over `(1-t)^m` by the pivot
/// recursion `h(I) = h(I + (x)) + t * h(I : x)`.
fn hilbert_numerator(gens: &[Monomial], nvars: usize) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.total_degree() == 0) {
        return vec![];
    }
    // Base case: pairwise-coprime generators (in particular pure powers of
    // distinct variables): h = prod (1 - t^deg).
    let coprime = (0..gens.len()).all(|i| (0..i).all(|j| gens[i].is_coprime_with(&gens[j])));
    if coprime {
        let mut h = vec![1i64];
        for g in gens {
            let d = g.total_degree() as usize;
            let mut factor = vec![0i64; d + 1];
            factor[0] = 1;
            factor[d] = -1;
            h = poly_mul_int(&h, &factor);
        }
        return h;
    }
    // Pivot: the variable occurring in the most generators (ties to the
    // smallest index), which must appear in at least two.
    let mut counts = vec![0usize; nvars];
    for g in gens {
        for v in g.support() {
            counts[v] += 1;
        }
    }
    let pivot = (0..nvars).max_by_key(|&v| counts[v]).unwrap();

    // I + (x_pivot): generators not involving the pivot, plus the pivot.
    let mut plus: Vec<Monomial> = gens.iter().filter(|g| g.0[pivot] == 0).cloned().collect();
    let mut pv = Monomial::one(nvars);
    pv.0[pivot] = 1;
    plus.push(pv);
    let plus = MonomialIdeal::new(nvars, plus);

    // I : x_pivot.
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut e = g.clone();
            if e.0[pivot] > 0 {
                e.0[pivot] -= 1;
            }
            e
        })
        .collect();
    let colon = MonomialIdeal::new(nvars, colon);

    let h_plus = hilbert_numerator(plus.min_gens(), nvars);
    let h_colon = hilbert_numerator(colon.min_gens(), nvars);
    let mut shifted = vec![0i64];
    shifted.extend_from_slice(&h_colon);
    poly_add_int(&h_plus, &shifted)
}

/// Hilbert series of `k[X_1..X_m]/M` for a monomial ideal.
pub fn hilbert_series_monomial(m: &MonomialIdeal, nvars: usize) -> HilbertData {
    let mut h = hilbert_numerator(m.min_gens(), nvars);
    // Cancel (1 - t)^z.
    let mut z = 0usize;
    loop {
        if h.is_empty() {
            break;
        }
        let at_one: i64 = h.iter().sum();
        if at_one != 0 {
            break;
        }
        // Synthetic division by (1 - t): h(t) = (1 - t) g(t).
        let mut g = vec![0i64; h.len() - 1];
        let mut carry = 0i64;
        for i in 0..h.len() - 1 {
            g[i] = h[i] + carry;
            carry = g[i];
        }
        debug_assert_eq!(h.last().copied().unwrap_or(0), -carry);
        while g.last() == Some(&0) {
            g.pop();
        }
        h = g;
        z += 1;
    }
    let degree = if h.is_empty() {
        // Zero numerator: the quotient is the zero ring; treat as degree 0.
        0
    } else {
        let v: i64 = h.iter().sum();
        debug_assert!(v > 0, "numerator must be positive at t = 1");
        v as u64
    };
    HilbertData {
        numerator: hilbert_numerator(m.min_gens(), nvars),
        dimension: nvars - z,
        degree,
        m_vars: nvars,
    }
}

/// Degree of the graded quotient `k[X]/I` via the leading-ideal degeneration.
pub fn quotient_degree(ideal: &HomogIdeal) -> u64 {
    if ideal.is_zero() {
        return 1;
    }
    let gb = buchberger(ideal, MonomialOrder::GrevLex);
    let li = leading_ideal(&gb);
    hilbert_series_monomial(&li, ideal.nvars()).degree
}

#[cfg(test)]
fn monomials_of_degree_test(nvars: usize, d: u32) -> Vec<Monomial> {
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
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;
    use crate::poly::VarSet;

    fn qq() -> FieldCtx {
        FieldCtx::rationals()
    }

    fn fiber_ideal(m: usize, gens: &[&str]) -> HomogIdeal {
        let vs = VarSet::fiber(m);
        let polys = gens.iter().map(|s| parse(s, &vs, qq()).unwrap()).collect();
        HomogIdeal::new(vs, qq(), polys).unwrap()
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let i = fiber_ideal(3, &["X*Z"]);
        let gb = buchberger(&i, MonomialOrder::GrevLex);
        assert_eq!(gb.polys().len(), 1, "basis: {:?}", gb.polys());
        assert_eq!(gb.polys()[0].to_string(), "X*Z");
    }

    #[test]
    fn example_one_winning_pair_basis() {
        // (XZ, Y, X+Y+Z): reducing X+Y+Z by Y leaves a linear form, and XZ
        // collapses to a pure square; the quotient has colength 2.
        let i = fiber_ideal(3, &["X*Z", "Y", "X + Y + Z"]);
        let gb = buchberger(&i, MonomialOrder::GrevLex);
        let li = leading_ideal(&gb);
        // Colength of the leading ideal is 2: standard monomials 1 and one
        // surviving variable.
        let h = hilbert_series_monomial(&li, 3);
        assert_eq!(h.dimension, 0);
        assert_eq!(h.degree, 2);
    }

    #[test]
    fn linear_system_basis() {
        let i = fiber_ideal(3, &["X - Y", "Y - Z"]);
        let gb = buchberger(&i, MonomialOrder::GrevLex);
        assert_eq!(gb.polys().len(), 2);
        for p in gb.polys() {
            assert_eq!(p.homogeneous_degree(), Some(1));
        }
        assert_eq!(krull_dimension(&i), 1);
    }

    #[test]
    fn normal_form_examples() {
        let i = fiber_ideal(3, &["X*Z"]);
        let gb = buchberger(&i, MonomialOrder::GrevLex);
        let vs = gb.varset().clone();
        let xz = parse("X*Z", &vs, qq()).unwrap();
        assert!(normal_form(&xz, &gb).is_zero());
        let x2z = parse("X^2*Z", &vs, qq()).unwrap();
        assert!(normal_form(&x2z, &gb).is_zero());
        let y2 = parse("Y^2", &vs, qq()).unwrap();
        assert_eq!(normal_form(&y2, &gb), y2);
    }

    #[test]
    fn normal_form_iff_member_small() {
        // Cross-check normal_form == 0 against explicit cofactor
        // reconstruction on a small ideal: f = a*g1 + b*g2 must reduce to 0.
        let vs = VarSet::fiber(3);
        let g1 = parse("X*Y - Z^2", &vs, qq()).unwrap();
        let g2 = parse("X^2 - Y*Z", &vs, qq()).unwrap();
        let i = HomogIdeal::new(vs.clone(), qq(), vec![g1.clone(), g2.clone()]).unwrap();
        let gb = buchberger(&i, MonomialOrder::GrevLex);
        let a = parse("X + Y", &vs, qq()).unwrap();
        let b = parse("Z", &vs, qq()).unwrap();
        let f = a.mul(&g1).unwrap().add(&b.mul(&g2).unwrap()).unwrap();
        assert!(normal_form(&f, &gb).is_zero());
        // And something outside: the pure cube X^3.
        let x3 = parse("X^3", &vs, qq()).unwrap();
        assert!(!normal_form(&x3, &gb).is_zero());
    }

    #[test]
    fn leading_ideal_antichain() {
        let i = fiber_ideal(3, &["X*Z", "Y", "X + Y + Z"]);
        let gb = buchberger(&i, MonomialOrder::GrevLex);
        let li = leading_ideal(&gb);
        for (a, ga) in li.min_gens().iter().enumerate() {
            for (b, gb2) in li.min_gens().iter().enumerate() {
                if a != b {
                    assert!(!ga.divides(gb2));
                }
            }
        }
        let zero = MonomialIdeal::new(3, vec![]);
        assert!(zero.is_zero());
    }

    #[test]
    fn krull_dimension_examples() {
        assert_eq!(krull_dimension(&fiber_ideal(3, &["X*Z"])), 2);
        assert_eq!(
            krull_dimension(&fiber_ideal(3, &["X*Z", "Y", "X + Y + Z"])),
            0
        );
        let zero = HomogIdeal::new(VarSet::fiber(4), qq(), vec![]).unwrap();
        assert_eq!(krull_dimension(&zero), 4);
    }

    #[test]
    fn dimension_order_independent() {
        let samples = [
            vec!["X*Z"],
            vec!["X*Z", "Y^2"],
            vec!["X*Y - Z^2"],
            vec!["X*Y - Z^2", "X^2 - Y*Z"],
            vec!["X^2", "Y^2", "Z^2"],
        ];
        for gens in samples {
            let i = fiber_ideal(3, &gens);
            assert_eq!(
                krull_dimension_under(&i, MonomialOrder::GrevLex),
                krull_dimension_under(&i, MonomialOrder::GradedLex),
                "gens {:?}",
                gens
            );
        }
    }

    #[test]
    fn hilbert_examples() {
        // (XZ) in 3 vars: series (1 - t^2)/(1-t)^3, dim 2, degree 2.
        let xz = MonomialIdeal::new(3, vec![Monomial(vec![1, 0, 1])]);
        let h = hilbert_series_monomial(&xz, 3);
        assert_eq!(h.numerator, vec![1, 0, -1]);
        assert_eq!(h.dimension, 2);
        assert_eq!(h.degree, 2);

        // (X, U) in k[X, Y, U, V]: dim 2, degree 1.
        let xu = MonomialIdeal::new(
            4,
            vec![Monomial(vec![1, 0, 0, 0]), Monomial(vec![0, 0, 1, 0])],
        );
        let h = hilbert_series_monomial(&xu, 4);
        assert_eq!(h.dimension, 2);
        assert_eq!(h.degree, 1);

        // The full maximal ideal: dim 0, degree 1.
        let full = MonomialIdeal::new(
            3,
            vec![
                Monomial(vec![1, 0, 0]),
                Monomial(vec![0, 1, 0]),
                Monomial(vec![0, 0, 1]),
            ],
        );
        let h = hilbert_series_monomial(&full, 3);
        assert_eq!(h.dimension, 0);
        assert_eq!(h.degree, 1);

        // Zero ideal: dim = m, degree 1.
        let zero = MonomialIdeal::new(3, vec![]);
        let h = hilbert_series_monomial(&zero, 3);
        assert_eq!(h.dimension, 3);
        assert_eq!(h.degree, 1);
    }

    #[test]
    fn hilbert_function_vs_enumeration() {
        // Direct degree-by-degree enumeration up to degree 12.
        let ideals = [
            MonomialIdeal::new(3, vec![Monomial(vec![1, 0, 1])]),
            MonomialIdeal::new(
                4,
                vec![
                    Monomial(vec![1, 0, 2, 0]),
                    Monomial(vec![0, 2, 0, 1]),
                    Monomial(vec![1, 0, 0, 1]),
                ],
            ),
            MonomialIdeal::new(2, vec![Monomial(vec![3, 0]), Monomial(vec![1, 2])]),
        ];
        for mi in &ideals {
            let n = mi.nvars();
            let h = hilbert_series_monomial(mi, n);
            for d in 0..=12usize {
                let count = super::monomials_of_degree_test(n, d as u32)
                    .into_iter()
                    .filter(|m| !mi.contains(m))
                    .count() as i64;
                assert_eq!(h.hilbert_function(d), count, "degree {} of {:?}", d, mi);
            }
        }
    }

    #[test]
    fn zero_dimensionality() {
        assert!(is_zero_dimensional(&fiber_ideal(
            3,
            &["X*Z", "Y", "X + Y + Z"]
        )));
        assert!(!is_zero_dimensional(&fiber_ideal(3, &["X*Z", "X", "Y"])));
        assert!(is_zero_dimensional(&fiber_ideal(3, &["X^2", "Y^2", "Z^2"])));
    }

    #[test]
    fn quotient_degree_examples() {
        assert_eq!(quotient_degree(&fiber_ideal(3, &["X"])), 1);
        assert_eq!(quotient_degree(&fiber_ideal(3, &["X*Z"])), 2);
        // (XU^2, Y^2 V, XV) in k[X, Y, U, V]: Hilbert function 5d - 1 for
        // d >= 1, so dimension 2 and degree 5.
        let e2 = fiber_ideal(4, &["X*U^2", "Y^2*V", "X*V"]);
        assert_eq!(krull_dimension(&e2), 2);
        assert_eq!(quotient_degree(&e2), 5);
        let zero = HomogIdeal::new(VarSet::fiber(3), qq(), vec![]).unwrap();
        assert_eq!(quotient_degree(&zero), 1);
    }

    #[test]
    fn inhomogeneous_rejected() {
        let vs = VarSet::fiber(2);
        let p = parse("X^2 + Y", &vs, qq()).unwrap();
        assert_eq!(
            HomogIdeal::new(vs, qq(), vec![p]),
            Err(Error::NonHomogeneous)
        );
    }
}
