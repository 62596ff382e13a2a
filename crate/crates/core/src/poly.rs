//! Multivariate polynomials over an exact field, with graded monomial
//! orderings, arithmetic, and substitution of linear forms into ideal
//! generators.
//!
//! The canonical internal term order is graded reverse lexicographic;
//! [`monomial_cmp`] exposes other graded orders as comparators without
//! changing the data layout.

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Whether a variable set names the local ring variables `x_1..x_n` or the
/// fiber-cone presentation variables `X_1..X_m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarRole {
    Local,
    Fiber,
}

/// An ordered list of distinct variable names. The order is semantically
/// meaningful: fiber variable `i` corresponds to ideal generator `i`.
#[derive(Debug, PartialEq, Eq)]
pub struct VarSet {
    names: Vec<String>,
    role: VarRole,
}

impl VarSet {
    pub fn new(names: Vec<String>, role: VarRole) -> Result<Arc<VarSet>> {
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || !n.chars().next().unwrap().is_ascii_alphabetic() {
                return Err(Error::Parse(format!("invalid variable name {:?}", n)));
            }
            if !n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(Error::Parse(format!("invalid variable name {:?}", n)));
            }
            if names[..i].contains(n) {
                return Err(Error::Parse(format!("duplicate variable name {:?}", n)));
            }
        }
        Ok(Arc::new(VarSet { names, role }))
    }

    /// Local variables named `x, y` (n = 2), `x, y, z` (n = 3) or `x1..xn`.
    pub fn local(n: usize) -> Arc<VarSet> {
        let names: Vec<String> = match n {
            1 => vec!["x".into()],
            2 => vec!["x".into(), "y".into()],
            3 => vec!["x".into(), "y".into(), "z".into()],
            _ => (1..=n).map(|i| format!("x{}", i)).collect(),
        };
        VarSet::new(names, VarRole::Local).unwrap()
    }

    /// Fiber variables following the naming convention of the worked
    /// examples: `X, Y, Z` for m = 3, `X, Y, U, V` for m = 4, else `X1..Xm`.
    pub fn fiber(m: usize) -> Arc<VarSet> {
        let names: Vec<String> = match m {
            1 => vec!["X".into()],
            2 => vec!["X".into(), "Y".into()],
            3 => vec!["X".into(), "Y".into(), "Z".into()],
            4 => vec!["X".into(), "Y".into(), "U".into(), "V".into()],
            _ => (1..=m).map(|i| format!("X{}", i)).collect(),
        };
        VarSet::new(names, VarRole::Fiber).unwrap()
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn role(&self) -> VarRole {
        self.role
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

pub(crate) fn same_varset(a: &Arc<VarSet>, b: &Arc<VarSet>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// An exponent vector; total order implementations refine total degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Monomial {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Variable indices with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    fn grevlex_cmp(&self, other: &Monomial) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {
                for i in (0..self.0.len()).rev() {
                    match self.0[i].cmp(&other.0[i]) {
                        Ordering::Equal => continue,
                        // Smaller exponent in the last differing position wins.
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                    }
                }
                Ordering::Equal
            }
            o => o,
        }
    }

    fn gradedlex_cmp(&self, other: &Monomial) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {
                for i in 0..self.0.len() {
                    match self.0[i].cmp(&other.0[i]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            o => o,
        }
    }
}

/// The canonical order on monomials is GrevLex.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grevlex_cmp(other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Selectable graded monomial orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrder {
    GrevLex,
    GradedLex,
}

/// Compare two monomials under the given graded order.
pub fn monomial_cmp(order: MonomialOrder, a: &Monomial, b: &Monomial) -> Result<Ordering> {
    if a.0.len() != b.0.len() {
        return Err(Error::LengthMismatch {
            expected: a.0.len(),
            got: b.0.len(),
        });
    }
    Ok(match order {
        MonomialOrder::GrevLex => a.grevlex_cmp(b),
        MonomialOrder::GradedLex => a.gradedlex_cmp(b),
    })
}

/// A multivariate polynomial: a finite set of (monomial, nonzero coefficient)
/// pairs over a fixed variable set. The zero polynomial has no terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    varset: Arc<VarSet>,
    field: FieldCtx,
    terms: BTreeMap<Monomial, FieldElem>,
}

impl Poly {
    pub fn zero(varset: Arc<VarSet>, field: FieldCtx) -> Poly {
        Poly {
            varset,
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(varset: Arc<VarSet>, field: FieldCtx) -> Poly {
        let nvars = varset.len();
        Poly::from_terms(varset, field, vec![(Monomial::one(nvars), field.one())])
    }

    pub fn var(varset: Arc<VarSet>, field: FieldCtx, i: usize) -> Poly {
        let nvars = varset.len();
        Poly::from_terms(varset, field, vec![(Monomial::var(nvars, i), field.one())])
    }

    pub fn monomial(varset: Arc<VarSet>, field: FieldCtx, m: Monomial, c: FieldElem) -> Poly {
        Poly::from_terms(varset, field, vec![(m, c)])
    }

    /// Build from terms, combining duplicates and dropping zeros.
    pub fn from_terms(
        varset: Arc<VarSet>,
        field: FieldCtx,
        terms: Vec<(Monomial, FieldElem)>,
    ) -> Poly {
        let mut map: BTreeMap<Monomial, FieldElem> = BTreeMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.0.len(), varset.len());
            match map.remove(&m) {
                None => {
                    if !c.is_zero() {
                        map.insert(m, c);
                    }
                }
                Some(old) => {
                    let s = field
                        .add(&old, &c)
                        .expect("term coefficients share the field");
                    if !s.is_zero() {
                        map.insert(m, s);
                    }
                }
            }
        }
        Poly {
            varset,
            field,
            terms: map,
        }
    }

    pub fn varset(&self) -> &Arc<VarSet> {
        &self.varset
    }

    pub fn field(&self) -> FieldCtx {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending GrevLex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FieldElem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&FieldElem> {
        self.terms.get(m)
    }

    /// Maximum total degree, or None for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// Minimum total degree among terms (the order of the power series).
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).min()
    }

    /// Degree if every term has the same total degree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|m| m.total_degree());
        let d = it.next()?;
        if it.all(|e| e == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.total_degree() == d)
    }

    /// Leading term under the canonical GrevLex order.
    pub fn leading(&self) -> Option<(&Monomial, &FieldElem)> {
        self.terms.iter().next_back()
    }

    /// Leading term under the given order.
    pub fn leading_under(&self, order: MonomialOrder) -> Option<(&Monomial, &FieldElem)> {
        match order {
            MonomialOrder::GrevLex => self.leading(),
            MonomialOrder::GradedLex => self
                .terms
                .iter()
                .max_by(|(a, _), (b, _)| a.gradedlex_cmp(b)),
        }
    }

    /// The single (monomial, coefficient) pair, if this is a monomial.
    pub fn as_monomial(&self) -> Option<(&Monomial, &FieldElem)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    fn check_compat(&self, other: &Poly) -> Result<()> {
        if !same_varset(&self.varset, &other.varset) {
            return Err(Error::VarSetMismatch);
        }
        if self.field != other.field {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check_compat(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            match terms.remove(m) {
                None => {
                    terms.insert(m.clone(), c.clone());
                }
                Some(old) => {
                    let s = self.field.add(&old, c)?;
                    if !s.is_zero() {
                        terms.insert(m.clone(), s);
                    }
                }
            }
        }
        Ok(Poly {
            varset: self.varset.clone(),
            field: self.field,
            terms,
        })
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), self.field.neg(c).unwrap()))
            .collect();
        Poly {
            varset: self.varset.clone(),
            field: self.field,
            terms,
        }
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.mul_truncated(other, None)
    }

    /// Product, optionally discarding all terms of total degree >= `bound`.
    pub fn mul_truncated(&self, other: &Poly, bound: Option<u32>) -> Result<Poly> {
        self.check_compat(other)?;
        let mut terms: BTreeMap<Monomial, FieldElem> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            let da = ma.total_degree();
            for (mb, cb) in &other.terms {
                if let Some(b) = bound {
                    if da + mb.total_degree() >= b {
                        continue;
                    }
                }
                let m = ma.mul(mb);
                let c = self.field.mul(ca, cb)?;
                match terms.remove(&m) {
                    None => {
                        if !c.is_zero() {
                            terms.insert(m, c);
                        }
                    }
                    Some(old) => {
                        let s = self.field.add(&old, &c)?;
                        if !s.is_zero() {
                            terms.insert(m, s);
                        }
                    }
                }
            }
        }
        Ok(Poly {
            varset: self.varset.clone(),
            field: self.field,
            terms,
        })
    }

    /// Multiply by a single term.
    pub fn mul_term(&self, m: &Monomial, c: &FieldElem) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.varset.clone(), self.field);
        }
        let terms = self
            .terms
            .iter()
            .map(|(mm, cc)| (mm.mul(m), self.field.mul(cc, c).unwrap()))
            .collect();
        Poly {
            varset: self.varset.clone(),
            field: self.field,
            terms,
        }
    }

    pub fn scale(&self, c: &FieldElem) -> Poly {
        self.mul_term(&Monomial::one(self.varset.len()), c)
    }

    /// Divide by the leading coefficient (canonical GrevLex).
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = self.field.inv(c).unwrap();
                self.scale(&inv)
            }
        }
    }

    /// Drop all terms of total degree >= `bound`.
    pub fn truncate(&self, bound: u32) -> Poly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.total_degree() < bound)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Poly {
            varset: self.varset.clone(),
            field: self.field,
            terms,
        }
    }

    pub fn pow_truncated(&self, mut e: u32, bound: Option<u32>) -> Result<Poly> {
        let mut acc = Poly::one(self.varset.clone(), self.field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_truncated(&base, bound)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_truncated(&base, bound)?;
            }
        }
        Ok(acc)
    }
}

/// A linear form `c_1 X_1 + ... + c_m X_m` over the fiber variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    field: FieldCtx,
    coeffs: Vec<FieldElem>,
}

impl LinearForm {
    /// At least one coefficient must be nonzero.
    pub fn new(field: FieldCtx, coeffs: Vec<FieldElem>) -> Result<LinearForm> {
        if coeffs.iter().all(|c| c.is_zero()) {
            return Err(Error::Parse("linear form must be nonzero".into()));
        }
        Ok(LinearForm { field, coeffs })
    }

    pub fn field(&self) -> FieldCtx {
        self.field
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The form as a degree-one polynomial over `varset`.
    pub fn to_poly(&self, varset: &Arc<VarSet>) -> Result<Poly> {
        if varset.len() != self.coeffs.len() {
            return Err(Error::LengthMismatch {
                expected: self.coeffs.len(),
                got: varset.len(),
            });
        }
        Ok(Poly::from_terms(
            varset.clone(),
            self.field,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(varset.len(), i), c.clone()))
                .collect(),
        ))
    }

    pub fn add(&self, other: &LinearForm) -> Result<LinearForm> {
        if self.coeffs.len() != other.coeffs.len() {
            return Err(Error::LengthMismatch {
                expected: self.coeffs.len(),
                got: other.coeffs.len(),
            });
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| self.field.add(a, b))
            .collect::<Result<Vec<_>>>()?;
        LinearForm::new(self.field, coeffs)
    }
}

/// Substitute the ideal generators into a linear form: `N(u) = sum c_i u_i`.
pub fn apply_form(form: &LinearForm, gens: &[Poly]) -> Result<Poly> {
    if form.coeffs().len() != gens.len() {
        return Err(Error::LengthMismatch {
            expected: form.coeffs().len(),
            got: gens.len(),
        });
    }
    let first = gens.first().ok_or(Error::ZeroIdeal)?;
    let mut acc = Poly::zero(first.varset().clone(), first.field());
    for (c, g) in form.coeffs().iter().zip(gens) {
        acc = acc.add(&g.scale(c))?;
    }
    Ok(acc)
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::parse::emit(self))
    }
}
