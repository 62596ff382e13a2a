//! Exact computation with ideals of the local ring `R = k[[x_1,...,x_n]]`
//! through their images in the finite-dimensional truncations `R/m^E`.
//!
//! Soundness rests on the Nakayama argument: if `m^E` is contained in
//! `I + m^{E+1}` then `m^E` is contained in `I`, so membership questions in
//! m-primary ideals become exact linear algebra at a certified truncation
//! order.

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};
use crate::linalg::{Echelon, SparseVec};
use crate::poly::{same_varset, Monomial, Poly, VarSet};
use std::collections::BTreeMap;
use std::collections::HashMap;
use std::sync::Arc;

/// Truncation escalation options. The probe order starts at
/// `max(2, max generator degree + 1)` and doubles; `e_cap` bounds the
/// escalation (a first probe above the cap is still attempted).
#[derive(Debug, Clone, Copy)]
pub struct TruncOpts {
    pub e_cap: u32,
}

impl Default for TruncOpts {
    fn default() -> Self {
        TruncOpts { e_cap: 64 }
    }
}

/// An ideal of `k[[x_1,...,x_n]]` given by polynomial generators inside m.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalIdeal {
    varset: Arc<VarSet>,
    field: FieldCtx,
    gens: Vec<Poly>,
    unit: bool,
}

impl LocalIdeal {
    /// Zero generators are dropped; every remaining generator must have
    /// order >= 1.
    pub fn new(varset: Arc<VarSet>, field: FieldCtx, gens: Vec<Poly>) -> Result<LocalIdeal> {
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
            if g.order() == Some(0) {
                return Err(Error::NonLocalGenerator);
            }
            kept.push(g);
        }
        Ok(LocalIdeal {
            varset,
            field,
            gens: kept,
            unit: false,
        })
    }

    /// The unit-ideal marker produced by `ideal_power(_, 0)`; it is absorbed
    /// by [`ideal_product`].
    pub fn unit(varset: Arc<VarSet>, field: FieldCtx) -> LocalIdeal {
        let one = Poly::one(varset.clone(), field);
        LocalIdeal {
            varset,
            field,
            gens: vec![one],
            unit: true,
        }
    }

    /// The maximal ideal m = (x_1, ..., x_n).
    pub fn maximal(varset: Arc<VarSet>, field: FieldCtx) -> LocalIdeal {
        let gens = (0..varset.len())
            .map(|i| Poly::var(varset.clone(), field, i))
            .collect();
        LocalIdeal {
            varset,
            field,
            gens,
            unit: false,
        }
    }

    pub fn is_unit(&self) -> bool {
        self.unit
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub fn varset(&self) -> &Arc<VarSet> {
        &self.varset
    }

    pub fn field(&self) -> FieldCtx {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.varset.len()
    }

    pub fn max_gen_degree(&self) -> u32 {
        self.gens
            .iter()
            .filter_map(|g| g.total_degree())
            .max()
            .unwrap_or(0)
    }

    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.num_terms() == 1)
    }
}

/// Monomials of total degree < E over a variable set, ordered by ascending
/// GrevLex (degree-major), with index lookups and per-degree offsets.
pub(crate) struct MonoBasis {
    pub e: u32,
    pub mons: Vec<Monomial>,
    index: HashMap<Monomial, u32>,
    offsets: Vec<u32>,
}

fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
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
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial(vec![]));
        }
        return out;
    }
    rec(nvars, 0, d, &mut Vec::new(), &mut out);
    out.sort();
    out
}

impl MonoBasis {
    pub fn new(varset: Arc<VarSet>, e: u32) -> MonoBasis {
        let nvars = varset.len();
        let mut mons = Vec::new();
        let mut offsets = Vec::with_capacity(e as usize + 1);
        for d in 0..e {
            offsets.push(mons.len() as u32);
            mons.extend(monomials_of_degree(nvars, d));
        }
        offsets.push(mons.len() as u32);
        let index = mons
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i as u32))
            .collect();
        MonoBasis {
            e,
            mons,
            index,
            offsets,
        }
    }

    pub fn len(&self) -> u32 {
        self.mons.len() as u32
    }

    /// Index of the first monomial of degree `d` (i.e. column bound for the
    /// projection onto degrees < d).
    pub fn offset(&self, d: u32) -> u32 {
        self.offsets[d.min(self.e) as usize]
    }

    /// Coefficient vector of `f` truncated to degrees < E.
    pub fn vec_of(&self, f: &Poly) -> SparseVec {
        SparseVec::new(
            f.terms()
                .filter(|(m, _)| m.total_degree() < self.e)
                .map(|(m, c)| (self.index[m], c.clone()))
                .collect(),
        )
    }
}

/// Membership context for one ideal: a spanning echelon of its image at a
/// probe order, together with the certified witness.
pub(crate) struct MemberCtx {
    pub basis: MonoBasis,
    pub ech: Echelon,
    pub witness: PrimaryWitness,
}

impl MemberCtx {
    /// Exact membership of `f` in the ideal (sound by the Nakayama witness).
    pub fn contains(&self, f: &Poly) -> bool {
        let bound = self.basis.offset(self.witness.e_star);
        let v = self.basis.vec_of(f);
        self.ech.contains_projected(v, bound)
    }
}

/// Certificate that an ideal is m-primary: a verified truncation order and
/// the colength.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimaryWitness {
    /// Smallest order within the probe schedule with `m^{E*}` inside the ideal.
    pub e_star: u32,
    /// `dim_k R/I`.
    pub colength: usize,
}

/// Row-echelon (fully reduced) basis of the image of an ideal in `R/m^E`.
#[derive(Debug, Clone)]
pub struct TruncatedSubspace {
    pub e: u32,
    /// Reduced echelon rows: each pivot monomial has coefficient 1 and
    /// appears in no other row. Sorted by ascending pivot monomial.
    pub basis: Vec<Vec<(Monomial, FieldElem)>>,
    pub pivot_map: BTreeMap<Monomial, usize>,
}

impl TruncatedSubspace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &Monomial> {
        self.pivot_map.keys()
    }
}

fn build_echelon(ideal: &LocalIdeal, basis: &MonoBasis) -> Echelon {
    let mut rows: Vec<(u32, usize, SparseVec)> = Vec::new();
    for (gi, g) in ideal.gens.iter().enumerate() {
        let Some(ord) = g.order() else { continue };
        if ord >= basis.e && !ideal.unit {
            continue;
        }
        let deg_left = basis.e.saturating_sub(ord);
        // Multipliers x^alpha with |alpha| + ord(g) < E.
        let upper = basis.offset(deg_left);
        for mi in 0..upper {
            let mult = &basis.mons[mi as usize];
            let prod = g.mul_term(mult, &ideal.field.one());
            let v = basis.vec_of(&prod);
            if let Some(lead) = v.lead() {
                rows.push((lead, gi, v));
            }
        }
    }
    // Deterministic insertion order; leading-column order keeps fill-in low.
    rows.sort_by_key(|a| (a.0, a.1));
    let mut ech = Echelon::new(ideal.field, basis.len());
    for (_, _, v) in rows {
        ech.insert(v);
    }
    ech
}

/// Reduced echelon basis of the image of `I` in `R/m^E`: the span of
/// `{x^alpha g : g generator, |alpha| + ord(g) < E}`.
pub fn ideal_image(ideal: &LocalIdeal, e: u32) -> TruncatedSubspace {
    let basis = MonoBasis::new(ideal.varset.clone(), e);
    let ech = build_echelon(ideal, &basis);
    let rows = ech.rref_rows();
    let mut out_rows = Vec::with_capacity(rows.len());
    let mut pivot_map = BTreeMap::new();
    for (i, r) in rows.iter().enumerate() {
        let terms: Vec<(Monomial, FieldElem)> = r
            .entries
            .iter()
            .map(|(c, v)| (basis.mons[*c as usize].clone(), v.clone()))
            .collect();
        pivot_map.insert(terms[0].0.clone(), i);
        out_rows.push(terms);
    }
    TruncatedSubspace {
        e,
        basis: out_rows,
        pivot_map,
    }
}

/// Does `m^E` lie inside the ideal? Decided exactly: true iff every monomial
/// of total degree E lies in the image of the ideal in `R/m^{E+1}`
/// (Nakayama).
pub fn contains_m_power(ideal: &LocalIdeal, e: u32) -> bool {
    let basis = MonoBasis::new(ideal.varset.clone(), e + 1);
    let ech = build_echelon(ideal, &basis);
    contains_at_field(&basis, &ech, e, ideal.field)
}

/// Probe schedule + witness search shared by the membership operations.
pub(crate) fn witness_search(ideal: &LocalIdeal, opts: &TruncOpts) -> Result<MemberCtx> {
    witness_search_capped(ideal, opts, None)
}

/// Like [`witness_search`], with a certified upper bound for the witness
/// order (derived for products of certified-primary ideals). Probes clamp
/// to the bound, so the search neither overshoots it nor reports
/// inconclusive, even past the user cap.
pub(crate) fn witness_search_capped(
    ideal: &LocalIdeal,
    opts: &TruncOpts,
    sound_bound: Option<u32>,
) -> Result<MemberCtx> {
    let field = ideal.field;
    let mut e0 = std::cmp::max(2, ideal.max_gen_degree() + 1);
    let cap = match sound_bound {
        Some(t) => {
            e0 = e0.min(t);
            t
        }
        None => std::cmp::max(opts.e_cap, e0),
    };
    let mut e = e0;
    loop {
        let basis = MonoBasis::new(ideal.varset.clone(), e + 1);
        let ech = build_echelon(ideal, &basis);
        if contains_at_field(&basis, &ech, e, field) {
            // Monotone in E, so binary search the smallest passing order.
            let mut lo = 1u32;
            let mut hi = e;
            while lo < hi {
                let mid = lo + (hi - lo) / 2;
                if contains_at_field(&basis, &ech, mid, field) {
                    hi = mid;
                } else {
                    lo = mid + 1;
                }
            }
            let e_star = lo;
            let bound = basis.offset(e_star);
            let colength = bound as usize - ech.pivot_count_below(bound);
            return Ok(MemberCtx {
                basis,
                ech,
                witness: PrimaryWitness { e_star, colength },
            });
        }
        if e >= cap {
            return Err(Error::NotPrimaryUpTo(e));
        }
        e = std::cmp::min(e * 2, cap);
    }
}

fn contains_at_field(basis: &MonoBasis, ech: &Echelon, e: u32, field: FieldCtx) -> bool {
    let lo = basis.offset(e);
    let hi = basis.offset(e + 1);
    for col in lo..hi {
        let v = SparseVec::new(vec![(col, field.one())]);
        if !ech.contains_projected(v, hi) {
            return false;
        }
    }
    true
}

/// Certify that the ideal is m-primary and report its colength. The error is
/// an inconclusive signal (no witness up to the cap), not a proof of
/// non-primariness.
pub fn primary_witness(ideal: &LocalIdeal, opts: &TruncOpts) -> Result<PrimaryWitness> {
    witness_search(ideal, opts).map(|ctx| ctx.witness)
}

/// Exact membership `f in I` for m-primary `I`.
pub fn ideal_member(f: &Poly, ideal: &LocalIdeal, opts: &TruncOpts) -> Result<bool> {
    if !same_varset(f.varset(), &ideal.varset) {
        return Err(Error::VarSetMismatch);
    }
    let ctx = witness_search(ideal, opts)?;
    Ok(ctx.contains(f))
}

/// Generator-wise product, deduplicated but not minimized.
pub fn ideal_product(a: &LocalIdeal, b: &LocalIdeal) -> Result<LocalIdeal> {
    if !same_varset(&a.varset, &b.varset) {
        return Err(Error::VarSetMismatch);
    }
    if a.field != b.field {
        return Err(Error::ContextMismatch);
    }
    if a.unit {
        return Ok(b.clone());
    }
    if b.unit {
        return Ok(a.clone());
    }
    let mut gens: Vec<Poly> = Vec::new();
    for f in &a.gens {
        for g in &b.gens {
            let p = f.mul(g)?;
            if !p.is_zero() && !gens.contains(&p) {
                gens.push(p);
            }
        }
    }
    Ok(LocalIdeal {
        varset: a.varset.clone(),
        field: a.field,
        gens,
        unit: false,
    })
}

/// `a^k`; `k = 0` yields the unit-ideal marker, only meaningful as a factor
/// in [`ideal_product`].
pub fn ideal_power(a: &LocalIdeal, k: u32) -> LocalIdeal {
    if k == 0 {
        return LocalIdeal::unit(a.varset.clone(), a.field);
    }
    let mut acc = a.clone();
    for _ in 1..k {
        acc = ideal_product(&acc, a).expect("power of a well-formed ideal");
    }
    acc
}

/// Outcome of the reduction-number search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionNumber {
    /// Smallest k with `q^{k+1} = b q^k`.
    Found(u32),
    /// No k up to the bound certified the reduction equation.
    NoneUpTo(u32),
}

/// Smallest `k <= k_max` with `q^{k+1} = b q^k`, verified generator by
/// generator in certified truncations. `k = 0` is reported when b and q
/// generate the same ideal.
pub fn reduction_number(
    q: &LocalIdeal,
    b: &LocalIdeal,
    k_max: u32,
    opts: &TruncOpts,
) -> Result<ReductionNumber> {
    let q_ctx = witness_search(q, opts)?;
    for g in &b.gens {
        if !q_ctx.contains(g) {
            return Err(Error::NotContained);
        }
    }
    // b itself must be m-primary for the membership tests below; this also
    // settles the k = 0 convention.
    let b_ctx = witness_search(b, opts)?;
    if q.gens.iter().all(|g| b_ctx.contains(g)) {
        return Ok(ReductionNumber::Found(0));
    }
    let e_q = q_ctx.witness.e_star;
    let e_b = b_ctx.witness.e_star;
    let mut q_pow = q.clone(); // q^k for the current k
    for k in 1..=k_max {
        let target = ideal_product(b, &q_pow)?;
        let q_next = ideal_product(&q_pow, q)?;
        // m^{E_b} m^{k E_q} lies in b q^k, a certified witness bound.
        let bound = e_b + k * e_q;
        let target_ctx = witness_search_capped(&target, opts, Some(bound))?;
        if q_next.gens.iter().all(|g| target_ctx.contains(g)) {
            return Ok(ReductionNumber::Found(k));
        }
        q_pow = q_next;
    }
    Ok(ReductionNumber::NoneUpTo(k_max))
}
