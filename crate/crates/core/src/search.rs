//! End-to-end reduction search: generate and validate independent linear
//! forms, select n of them greedily (dimension-drop steps) or exhaustively,
//! filter through the primary-ideal criterion on the computed presentation,
//! and certify every emitted reduction directly in the local ring.
//!
//! The presentation-side check is a filter only; the authority of a
//! certificate is the direct verification of `q^{k+1} = b q^k`, so emitted
//! certificates are sound even when the computed presentation ideal is a
//! strict under-approximation.

use crate::error::{Error, Result};
use crate::fiber::{default_d_max, fiber_presentation};
use crate::field::FieldCtx;
use crate::groebner::{is_zero_dimensional, krull_dimension, HomogIdeal};
use crate::linalg::det;
use crate::local::{primary_witness, reduction_number, LocalIdeal, ReductionNumber, TruncOpts};
use crate::poly::{apply_form, LinearForm, Poly};
use std::fmt;

/// How a form family was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormProvenance {
    Vandermonde,
    F2Canonical,
    UserSupplied,
}

/// An ordered family of linear forms over the m fiber variables, with its
/// verified independence status.
#[derive(Debug, Clone)]
pub struct FormFamily {
    pub forms: Vec<LinearForm>,
    pub provenance: FormProvenance,
    /// Every size-m subfamily is linearly independent (verified, not assumed).
    pub independent: bool,
    pub degenerate_note: Option<String>,
}

impl FormFamily {
    pub fn user_supplied(forms: Vec<LinearForm>, m: usize) -> Result<FormFamily> {
        let independent = check_independent(&forms, m)?;
        Ok(FormFamily {
            forms,
            provenance: FormProvenance::UserSupplied,
            independent,
            degenerate_note: None,
        })
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }
}

/// The form-count bound `l = d(m - n) + n`.
pub fn ell(d: u64, m: u64, n: u64) -> u64 {
    d * (m - n) + n
}

/// `l` forms `X_1 + a_j X_2 + ... + a_j^{m-1} X_m` with pairwise distinct
/// parameters `a_j = 0, 1, 2, ...`; independence follows from Vandermonde
/// determinants and is re-verified.
pub fn vandermonde_family(field: FieldCtx, m: usize, l: u64) -> Result<FormFamily> {
    if let Some(size) = field.size() {
        if size < l {
            return Err(Error::FieldTooSmall {
                needed: l,
                available: size,
            });
        }
    }
    let mut forms = Vec::with_capacity(l as usize);
    for j in 0..l {
        let a = field.nth_element(j)?;
        let mut coeffs = Vec::with_capacity(m);
        let mut power = field.one();
        for _ in 0..m {
            coeffs.push(power.clone());
            power = field.mul(&power, &a)?;
        }
        forms.push(LinearForm::new(field, coeffs)?);
    }
    let independent = check_independent(&forms, m)?;
    debug_assert!(independent);
    Ok(FormFamily {
        forms,
        provenance: FormProvenance::Vandermonde,
        independent,
        degenerate_note: None,
    })
}

/// Over F_2 the canonical independent family: `X_1, ..., X_m` and
/// `X_1 + ... + X_m`. For m = 1 the two coincide and the deduplicated
/// family is returned with a note.
pub fn f2_family(m: usize) -> FormFamily {
    let f2 = FieldCtx::prime_field(2).unwrap();
    let mut forms: Vec<LinearForm> = (0..m)
        .map(|i| {
            let coeffs = (0..m)
                .map(|j| if i == j { f2.one() } else { f2.zero() })
                .collect();
            LinearForm::new(f2, coeffs).unwrap()
        })
        .collect();
    let sum = LinearForm::new(f2, vec![f2.one(); m]).unwrap();
    let mut note = None;
    if forms.contains(&sum) {
        note = Some("degenerate family: the all-ones form coincides with X_1 at m = 1".into());
    } else {
        forms.push(sum);
    }
    let independent = check_independent(&forms, m).unwrap();
    FormFamily {
        forms,
        provenance: FormProvenance::F2Canonical,
        independent,
        degenerate_note: note,
    }
}

/// Is every m-element subfamily linearly independent? Families with fewer
/// than m forms are checked for full rank instead. Exact determinants.
pub fn check_independent(forms: &[LinearForm], m: usize) -> Result<bool> {
    if forms.is_empty() {
        return Ok(false);
    }
    let field = forms[0].field();
    for f in forms {
        if f.len() != m {
            return Err(Error::LengthMismatch {
                expected: m,
                got: f.len(),
            });
        }
    }
    if forms.len() < m {
        // Full-rank check via a determinant of a maximal square submatrix:
        // row-reduce instead.
        let mut ech = crate::linalg::Echelon::new(field, m as u32);
        for f in forms {
            ech.insert(crate::linalg::SparseVec::new(
                f.coeffs()
                    .iter()
                    .enumerate()
                    .map(|(i, c)| (i as u32, c.clone()))
                    .collect(),
            ));
        }
        return Ok(ech.rank() == forms.len());
    }
    for combo in combinations(forms.len(), m) {
        let matrix: Vec<Vec<crate::field::FieldElem>> = combo
            .iter()
            .map(|&i| forms[i - 1].coeffs().to_vec())
            .collect();
        if det(field, &matrix)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Strictly increasing `n`-tuples from `1..=l` in lexicographic order.
pub(crate) fn combinations(l: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if n == 0 || n > l {
        return out;
    }
    let mut cur: Vec<usize> = (1..=n).collect();
    loop {
        out.push(cur.clone());
        // Advance.
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < l - (n - 1 - i) {
                cur[i] += 1;
                for j in i + 1..n {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Greedy selection following the dimension-drop induction: at step t pick
/// the first unused form j with `dim k[X]/(J + N_j) <= n - t`. Returns the
/// sorted 1-based tuple, or None when some step finds no form.
pub fn greedy_select(q_ideal: &HomogIdeal, family: &FormFamily, n: usize) -> Option<Vec<usize>> {
    let mut current = q_ideal.clone();
    let mut used = vec![false; family.forms.len()];
    let mut picked: Vec<usize> = Vec::new();
    for t in 1..=n {
        let mut advanced = false;
        for (j, form) in family.forms.iter().enumerate() {
            if used[j] {
                continue;
            }
            let Ok(fp) = form.to_poly(q_ideal.varset()) else {
                return None;
            };
            let Ok(cand) = current.extended(&[fp]) else {
                return None;
            };
            if krull_dimension(&cand) <= n - t {
                used[j] = true;
                picked.push(j + 1);
                current = cand;
                advanced = true;
                break;
            }
        }
        if !advanced {
            return None;
        }
    }
    picked.sort_unstable();
    Some(picked)
}

/// All strictly increasing n-tuples whose forms make `Q + forms`
/// zero-dimensional, in lexicographic order.
pub fn exhaustive_search(q_ideal: &HomogIdeal, family: &FormFamily, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for combo in combinations(family.forms.len(), n) {
        let polys: Vec<Poly> = combo
            .iter()
            .filter_map(|&i| family.forms[i - 1].to_poly(q_ideal.varset()).ok())
            .collect();
        if polys.len() != n {
            continue;
        }
        if let Ok(cand) = q_ideal.extended(&polys) {
            if is_zero_dimensional(&cand) {
                out.push(combo);
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    GreedyThenExhaustive,
    ExhaustiveOnly,
}

/// Options for [`find_reduction`].
#[derive(Debug, Clone, Copy)]
pub struct SearchOpts {
    /// Presentation scan bound; None uses `2 * max generator degree + 2`.
    pub d_max: Option<u32>,
    pub k_max: u32,
    pub trunc: TruncOpts,
    pub strategy: Strategy,
}

impl Default for SearchOpts {
    fn default() -> Self {
        SearchOpts {
            d_max: None,
            k_max: 8,
            trunc: TruncOpts::default(),
            strategy: Strategy::GreedyThenExhaustive,
        }
    }
}

/// A certified reduction `b = (N_{i_1}(u), ..., N_{i_n}(u))`.
#[derive(Debug, Clone)]
pub struct ReductionCertificate {
    /// 1-based indices into the form family, strictly increasing.
    pub indices: Vec<usize>,
    pub forms: Vec<LinearForm>,
    /// The local generators `N_i(u)`.
    pub b_gens: Vec<Poly>,
    /// Certified reduction number: `q^{k+1} = b q^k` verified directly.
    pub reduction_k: u32,
    /// b is m-primary with n generators, hence a system of parameters.
    pub sop: bool,
    /// The tuple passed the zero-dimensionality filter on the computed
    /// presentation (advisory; the direct verification is the authority).
    pub claim_passed: bool,
    pub e_q: Option<u64>,
    pub e_b: Option<u64>,
}

/// Failure diagnostics for [`find_reduction`].
#[derive(Debug, Clone, PartialEq)]
pub struct SearchDiagnostics {
    pub stabilized: bool,
    pub dim_check: usize,
    pub d_max: u32,
    /// (tuple, reason) for every candidate that failed certification.
    pub candidates_tried: Vec<(Vec<usize>, String)>,
}

impl fmt::Display for SearchDiagnostics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "presentation stabilized: {}, dim check: {}, scanned to degree {}, candidates tried: {}",
            self.stabilized,
            self.dim_check,
            self.d_max,
            self.candidates_tried.len()
        )
    }
}

/// Run the full pipeline: presentation, candidate tuples (greedy first,
/// then lexicographic), primary filter, and direct certification. The first
/// fully certified candidate wins.
pub fn find_reduction(
    q: &LocalIdeal,
    family: &FormFamily,
    opts: &SearchOpts,
) -> Result<ReductionCertificate> {
    let n = q.nvars();
    let m = q.gens().len();
    for f in &family.forms {
        if f.len() != m {
            return Err(Error::LengthMismatch {
                expected: m,
                got: f.len(),
            });
        }
    }
    if family.forms.len() < n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: family.forms.len(),
        });
    }
    if !family.independent {
        return Err(Error::DependentFamily);
    }

    let d_max = opts.d_max.unwrap_or_else(|| default_d_max(q));
    let pres = fiber_presentation(q, d_max, &opts.trunc)?;
    let q_ideal = pres.ideal();

    let mut candidates: Vec<Vec<usize>> = Vec::new();
    if opts.strategy == Strategy::GreedyThenExhaustive {
        if let Some(t) = greedy_select(&q_ideal, family, n) {
            candidates.push(t);
        }
    }
    for t in exhaustive_search(&q_ideal, family, n) {
        if !candidates.contains(&t) {
            candidates.push(t);
        }
    }

    let mut tried: Vec<(Vec<usize>, String)> = Vec::new();
    for tuple in candidates {
        let forms: Vec<LinearForm> = tuple.iter().map(|&i| family.forms[i - 1].clone()).collect();
        let mut b_gens = Vec::with_capacity(n);
        for f in &forms {
            b_gens.push(apply_form(f, q.gens())?);
        }
        let b = match LocalIdeal::new(q.varset().clone(), q.field(), b_gens.clone()) {
            Ok(b) => b,
            Err(e) => {
                tried.push((tuple, e.to_string()));
                continue;
            }
        };
        if let Err(e) = primary_witness(&b, &opts.trunc) {
            tried.push((tuple, format!("not a system of parameters: {}", e)));
            continue;
        }
        match reduction_number(q, &b, opts.k_max, &opts.trunc) {
            Ok(ReductionNumber::Found(k)) => {
                return Ok(ReductionCertificate {
                    indices: tuple,
                    forms,
                    b_gens,
                    reduction_k: k,
                    sop: true,
                    claim_passed: true,
                    e_q: None,
                    e_b: None,
                });
            }
            Ok(ReductionNumber::NoneUpTo(km)) => {
                tried.push((
                    tuple,
                    format!("reduction equation not certified up to k = {}", km),
                ));
            }
            Err(e) => {
                tried.push((tuple, e.to_string()));
            }
        }
    }
    Err(Error::SearchFailed(Box::new(SearchDiagnostics {
        stabilized: pres.stabilized,
        dim_check: pres.dim_check,
        d_max,
        candidates_tried: tried,
    })))
}

/// Direct-verification verdict of [`claim_crosscheck`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DirectVerdict {
    Verified(u32),
    NotUpTo(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClaimCrossCheck {
    /// `(Q, l_1, ..., l_n)` is primary to the irrelevant maximal ideal.
    pub claim: bool,
    pub direct: DirectVerdict,
}

/// Evaluate both sides of the primary-ideal criterion for one tuple of
/// forms: the zero-dimensionality of `Q + forms` against the direct
/// reduction verification in the local ring.
pub fn claim_crosscheck(
    q: &LocalIdeal,
    q_ideal: &HomogIdeal,
    forms: &[LinearForm],
    k_max: u32,
    trunc: &TruncOpts,
) -> Result<ClaimCrossCheck> {
    let polys: Vec<Poly> = forms
        .iter()
        .map(|f| f.to_poly(q_ideal.varset()))
        .collect::<Result<_>>()?;
    let claim = is_zero_dimensional(&q_ideal.extended(&polys)?);

    let mut b_gens = Vec::with_capacity(forms.len());
    for f in forms {
        b_gens.push(apply_form(f, q.gens())?);
    }
    let direct = match LocalIdeal::new(q.varset().clone(), q.field(), b_gens) {
        Err(_) => DirectVerdict::NotUpTo(k_max),
        Ok(b) => match reduction_number(q, &b, k_max, trunc) {
            Ok(ReductionNumber::Found(k)) => DirectVerdict::Verified(k),
            Ok(ReductionNumber::NoneUpTo(km)) => DirectVerdict::NotUpTo(km),
            Err(Error::NotPrimaryUpTo(_)) | Err(Error::NotPrimary) => DirectVerdict::NotUpTo(k_max),
            Err(e) => return Err(e),
        },
    };
    Ok(ClaimCrossCheck { claim, direct })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;
    use crate::poly::VarSet;

    fn qq() -> FieldCtx {
        FieldCtx::rationals()
    }

    fn example1_ideal() -> LocalIdeal {
        let vs = VarSet::local(2);
        let gens = ["x^2", "x*y", "y^3"]
            .iter()
            .map(|s| parse(s, &vs, qq()).unwrap())
            .collect();
        LocalIdeal::new(vs, qq(), gens).unwrap()
    }

    fn example1_family() -> FormFamily {
        let q = qq();
        let forms = vec![
            LinearForm::new(q, vec![q.one(), q.zero(), q.zero()]).unwrap(),
            LinearForm::new(q, vec![q.zero(), q.one(), q.zero()]).unwrap(),
            LinearForm::new(q, vec![q.zero(), q.zero(), q.one()]).unwrap(),
            LinearForm::new(q, vec![q.one(), q.one(), q.one()]).unwrap(),
        ];
        FormFamily::user_supplied(forms, 3).unwrap()
    }

    fn xz_ideal() -> HomogIdeal {
        let vs = VarSet::fiber(3);
        HomogIdeal::new(vs.clone(), qq(), vec![parse("X*Z", &vs, qq()).unwrap()]).unwrap()
    }

    #[test]
    fn ell_examples() {
        assert_eq!(ell(2, 3, 2), 4);
        assert_eq!(ell(3, 4, 2), 8);
        assert_eq!(ell(5, 4, 4), 4);
    }

    #[test]
    fn vandermonde_over_q() {
        let fam = vandermonde_family(qq(), 3, 4).unwrap();
        assert!(fam.independent);
        let texts: Vec<String> = fam
            .forms
            .iter()
            .map(|f| f.to_poly(&VarSet::fiber(3)).unwrap().to_string())
            .collect();
        assert_eq!(
            texts,
            vec!["X", "X + Y + Z", "X + 2*Y + 4*Z", "X + 3*Y + 9*Z"]
        );
    }

    #[test]
    fn vandermonde_over_f5() {
        let f5 = FieldCtx::prime_field(5).unwrap();
        let fam = vandermonde_family(f5, 3, 4).unwrap();
        assert!(fam.independent);
        let last = fam.forms[3].to_poly(&VarSet::fiber(3)).unwrap().to_string();
        assert_eq!(last, "X + 3*Y + 4*Z");
    }

    #[test]
    fn vandermonde_field_too_small() {
        let f2 = FieldCtx::prime_field(2).unwrap();
        assert!(matches!(
            vandermonde_family(f2, 3, 4),
            Err(Error::FieldTooSmall { .. })
        ));
    }

    #[test]
    fn f2_families() {
        let fam = f2_family(3);
        assert_eq!(fam.forms.len(), 4);
        assert!(fam.independent);
        let fam = f2_family(2);
        assert_eq!(fam.forms.len(), 3);
        assert!(fam.independent);
        let fam = f2_family(1);
        assert_eq!(fam.forms.len(), 1);
        assert!(fam.degenerate_note.is_some());
    }

    #[test]
    fn independence_checks() {
        let fam = example1_family();
        assert!(fam.independent);
        let q = qq();
        // X, Y, X + Y as forms in 3 variables: the triple is dependent.
        let dep = vec![
            LinearForm::new(q, vec![q.one(), q.zero(), q.zero()]).unwrap(),
            LinearForm::new(q, vec![q.zero(), q.one(), q.zero()]).unwrap(),
            LinearForm::new(q, vec![q.one(), q.one(), q.zero()]).unwrap(),
        ];
        assert!(!check_independent(&dep, 3).unwrap());
    }

    #[test]
    fn greedy_example_one() {
        let fam = example1_family();
        let picked = greedy_select(&xz_ideal(), &fam, 2).unwrap();
        assert_eq!(picked, vec![2, 4]);
    }

    #[test]
    fn greedy_zero_ideal() {
        let vs = VarSet::fiber(2);
        let zero = HomogIdeal::new(vs, qq(), vec![]).unwrap();
        let q = qq();
        let fam = FormFamily::user_supplied(
            vec![
                LinearForm::new(q, vec![q.one(), q.zero()]).unwrap(),
                LinearForm::new(q, vec![q.zero(), q.one()]).unwrap(),
            ],
            2,
        )
        .unwrap();
        assert_eq!(greedy_select(&zero, &fam, 2).unwrap(), vec![1, 2]);
    }

    #[test]
    fn greedy_xy_ideal() {
        let vs = VarSet::fiber(2);
        let xy = HomogIdeal::new(vs.clone(), qq(), vec![parse("X*Y", &vs, qq()).unwrap()]).unwrap();
        let q = qq();
        let fam = FormFamily::user_supplied(
            vec![
                LinearForm::new(q, vec![q.one(), q.one()]).unwrap(),
                LinearForm::new(q, vec![q.one(), q.from_i64(-1)]).unwrap(),
            ],
            2,
        )
        .unwrap();
        assert_eq!(greedy_select(&xy, &fam, 2).unwrap(), vec![1, 2]);
    }

    #[test]
    fn exhaustive_example_one() {
        let fam = example1_family();
        let tuples = exhaustive_search(&xz_ideal(), &fam, 2);
        assert_eq!(tuples, vec![vec![2, 4]]);
    }

    #[test]
    fn exhaustive_zero_ideal_all_pairs() {
        let vs = VarSet::fiber(2);
        let zero = HomogIdeal::new(vs, qq(), vec![]).unwrap();
        let q = qq();
        let fam = FormFamily::user_supplied(
            vec![
                LinearForm::new(q, vec![q.one(), q.zero()]).unwrap(),
                LinearForm::new(q, vec![q.zero(), q.one()]).unwrap(),
                LinearForm::new(q, vec![q.one(), q.one()]).unwrap(),
            ],
            2,
        )
        .unwrap();
        let tuples = exhaustive_search(&zero, &fam, 2);
        assert_eq!(tuples.len(), 3);
    }

    #[test]
    fn greedy_result_appears_in_exhaustive() {
        let fam = example1_family();
        let qid = xz_ideal();
        let g = greedy_select(&qid, &fam, 2).unwrap();
        let all = exhaustive_search(&qid, &fam, 2);
        assert!(all.contains(&g));
    }

    #[test]
    fn find_reduction_example_one() {
        let q = example1_ideal();
        let fam = example1_family();
        let cert = find_reduction(&q, &fam, &SearchOpts::default()).unwrap();
        assert_eq!(cert.indices, vec![2, 4]);
        assert_eq!(cert.reduction_k, 1);
        assert!(cert.sop);
        assert!(cert.claim_passed);
        let texts: Vec<String> = cert.b_gens.iter().map(|g| g.to_string()).collect();
        assert_eq!(texts, vec!["x*y", "y^3 + x^2 + x*y"]);
    }

    #[test]
    fn find_reduction_regular_system() {
        let vs = VarSet::local(2);
        let q = LocalIdeal::new(
            vs.clone(),
            qq(),
            vec![
                parse("x", &vs, qq()).unwrap(),
                parse("y", &vs, qq()).unwrap(),
            ],
        )
        .unwrap();
        let f = qq();
        let fam = FormFamily::user_supplied(
            vec![
                LinearForm::new(f, vec![f.one(), f.zero()]).unwrap(),
                LinearForm::new(f, vec![f.zero(), f.one()]).unwrap(),
            ],
            2,
        )
        .unwrap();
        let cert = find_reduction(&q, &fam, &SearchOpts::default()).unwrap();
        assert_eq!(cert.indices, vec![1, 2]);
        assert_eq!(cert.reduction_k, 0);
    }

    #[test]
    fn claim_crosscheck_examples() {
        let q = example1_ideal();
        let qid = xz_ideal();
        let fam = example1_family();
        let opts = TruncOpts::default();

        // Winner (Y, X + Y + Z).
        let r = claim_crosscheck(
            &q,
            &qid,
            &[fam.forms[1].clone(), fam.forms[3].clone()],
            8,
            &opts,
        )
        .unwrap();
        assert!(r.claim);
        assert!(matches!(r.direct, DirectVerdict::Verified(k) if k <= 4));

        // (X, Y): b = (x^2, xy) is not even m-primary.
        let r = claim_crosscheck(
            &q,
            &qid,
            &[fam.forms[0].clone(), fam.forms[1].clone()],
            4,
            &TruncOpts { e_cap: 16 },
        )
        .unwrap();
        assert!(!r.claim);
        assert_eq!(r.direct, DirectVerdict::NotUpTo(4));

        // (X, Z): b = (x^2, y^3) is m-primary but not a reduction.
        let r = claim_crosscheck(
            &q,
            &qid,
            &[fam.forms[0].clone(), fam.forms[2].clone()],
            4,
            &opts,
        )
        .unwrap();
        assert!(!r.claim);
        assert_eq!(r.direct, DirectVerdict::NotUpTo(4));
    }

    #[test]
    fn search_failure_carries_diagnostics() {
        // A family too poor to cut the presentation to dimension zero: all
        // forms avoid the Z direction so (XZ, forms) keeps dimension >= 1.
        let q = example1_ideal();
        let f = qq();
        let fam = FormFamily::user_supplied(
            vec![
                LinearForm::new(f, vec![f.one(), f.zero(), f.zero()]).unwrap(),
                LinearForm::new(f, vec![f.zero(), f.one(), f.zero()]).unwrap(),
                LinearForm::new(f, vec![f.one(), f.one(), f.zero()]).unwrap(),
            ],
            3,
        )
        .unwrap();
        // Not independent (the triple X, Y, X+Y is dependent), so the search
        // refuses the family outright.
        assert!(matches!(
            find_reduction(&q, &fam, &SearchOpts::default()),
            Err(Error::DependentFamily)
        ));

        // An independent family whose pairs never pass the filter.
        let fam = FormFamily::user_supplied(
            vec![
                LinearForm::new(f, vec![f.one(), f.zero(), f.zero()]).unwrap(),
                LinearForm::new(f, vec![f.zero(), f.one(), f.zero()]).unwrap(),
            ],
            3,
        )
        .unwrap();
        match find_reduction(&q, &fam, &SearchOpts::default()) {
            Err(Error::SearchFailed(d)) => {
                assert!(d.stabilized);
                assert_eq!(d.dim_check, 2);
                assert!(d.candidates_tried.is_empty());
            }
            other => panic!("expected SearchFailed, got {:?}", other),
        }
    }

    #[test]
    fn combinations_lexicographic() {
        assert_eq!(
            combinations(4, 2),
            vec![
                vec![1, 2],
                vec![1, 3],
                vec![1, 4],
                vec![2, 3],
                vec![2, 4],
                vec![3, 4]
            ]
        );
        assert_eq!(combinations(3, 3), vec![vec![1, 2, 3]]);
        assert!(combinations(2, 3).is_empty());
    }
}
