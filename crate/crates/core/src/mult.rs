//! Hilbert-Samuel multiplicities of m-primary ideals from exact colength
//! sequences, a Newton-polygon oracle for monomial ideals in two variables,
//! and the minimum-multiplicity search over form tuples.

use crate::error::{Error, Result};
use crate::fiber::{default_d_max, fiber_presentation};
use crate::groebner::quotient_degree;
use crate::local::{
    reduction_number, witness_search, witness_search_capped, LocalIdeal, ReductionNumber, TruncOpts,
};
use crate::poly::apply_form;
use crate::search::FormFamily;
use num_integer::Integer;

/// A multiplicity value; infinite when the ideal is not m-primary (within
/// the truncation bounds).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mult {
    Finite(u64),
    Infinite,
}

impl Mult {
    pub fn finite(&self) -> Option<u64> {
        match self {
            Mult::Finite(e) => Some(*e),
            Mult::Infinite => None,
        }
    }
}

impl std::fmt::Display for Mult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Mult::Finite(e) => write!(f, "{}", e),
            Mult::Infinite => write!(f, "inf"),
        }
    }
}

/// Result of the colength-sequence computation: `e` is n! times the leading
/// coefficient of the interpolating polynomial, certified by a stabilized
/// n-th finite difference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityResult {
    pub e: Mult,
    /// (s, colength of I^s) samples actually computed.
    pub samples: Vec<(u32, usize)>,
    /// Degree of the Hilbert-Samuel polynomial (= n).
    pub degree: usize,
    /// Leading coefficient e/n! as a reduced fraction (numerator, denominator).
    pub leading: Option<(u64, u64)>,
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product::<u64>().max(1)
}

/// Multiplicity by exact finite differences of `colength(R/I^s)` for
/// `s = 1..s_max`; the n-th forward difference must be constant over the
/// last three entries. Non-primary ideals (within the cap) give `Infinite`.
pub fn hs_multiplicity(
    ideal: &LocalIdeal,
    s_max: u32,
    trunc: &TruncOpts,
) -> Result<MultiplicityResult> {
    let n = ideal.nvars();
    if (s_max as usize) < n + 2 {
        return Err(Error::EscalateSamples { s_max });
    }
    // Not m-primary within the cap: infinite multiplicity.
    let Ok(base_ctx) = witness_search(ideal, trunc) else {
        return Ok(MultiplicityResult {
            e: Mult::Infinite,
            samples: Vec::new(),
            degree: n,
            leading: None,
        });
    };
    let e_base = base_ctx.witness.e_star;
    let mut samples: Vec<(u32, usize)> = Vec::with_capacity(s_max as usize);
    let mut power = ideal.clone();
    for s in 1..=s_max {
        if s > 1 {
            power = crate::local::ideal_product(&power, ideal)?;
        }
        // m^{s E*(I)} lies in I^s, a certified witness bound.
        let ctx = witness_search_capped(&power, trunc, Some(s * e_base))?;
        samples.push((s, ctx.witness.colength));
    }
    // Forward differences on the colength list.
    let mut row: Vec<i64> = samples.iter().map(|(_, c)| *c as i64).collect();
    for _ in 0..n {
        row = row.windows(2).map(|w| w[1] - w[0]).collect();
    }
    if row.len() < 3 {
        return Err(Error::EscalateSamples { s_max });
    }
    let tail = &row[row.len() - 3..];
    if tail[0] != tail[1] || tail[1] != tail[2] || tail[0] <= 0 {
        return Err(Error::EscalateSamples { s_max });
    }
    let e = tail[0] as u64;
    let g = e.gcd(&factorial(n));
    Ok(MultiplicityResult {
        e: Mult::Finite(e),
        samples,
        degree: n,
        leading: Some((e / g, factorial(n) / g)),
    })
}

/// Newton-polygon oracle in two variables: for a monomial m-primary ideal,
/// the multiplicity is twice the area between the axes and the lower-left
/// boundary of the Newton polyhedron, by a shoelace sum over the hull
/// vertices (axis intercepts included).
pub fn newton_multiplicity(ideal: &LocalIdeal) -> Result<u64> {
    if ideal.nvars() != 2 {
        return Err(Error::LengthMismatch {
            expected: 2,
            got: ideal.nvars(),
        });
    }
    if !ideal.is_monomial() {
        return Err(Error::NotMonomial);
    }
    let mut points: Vec<(i64, i64)> = ideal
        .gens()
        .iter()
        .map(|g| {
            let m = g.as_monomial().unwrap().0;
            (m.0[0] as i64, m.0[1] as i64)
        })
        .collect();
    // Minimalize (staircase corners only).
    points.sort();
    points.dedup();
    let minimal: Vec<(i64, i64)> = points
        .iter()
        .filter(|p| !points.iter().any(|q| *q != **p && q.0 <= p.0 && q.1 <= p.1))
        .cloned()
        .collect();
    // m-primary needs pure powers on both axes.
    let has_x = minimal.iter().any(|p| p.1 == 0);
    let has_y = minimal.iter().any(|p| p.0 == 0);
    if !has_x || !has_y {
        return Err(Error::NotPrimary);
    }
    // Lower-left convex hull, x ascending (y is then strictly descending).
    let mut pts = minimal;
    pts.sort();
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for p in pts {
        while hull.len() >= 2 {
            let p1 = hull[hull.len() - 2];
            let p2 = hull[hull.len() - 1];
            // Drop p2 when it lies on or above the segment p1 -> p.
            let cross = (p.0 - p1.0) * (p2.1 - p1.1) - (p.1 - p1.1) * (p2.0 - p1.0);
            if cross >= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    // Shoelace over (0,0), (0, b), hull..., (a, 0) back to (0,0); hull runs
    // from (0, b) to (a, 0) already.
    let mut poly_pts = vec![(0i64, 0i64)];
    poly_pts.extend(hull);
    let mut twice_area = 0i64;
    for i in 0..poly_pts.len() {
        let (x1, y1) = poly_pts[i];
        let (x2, y2) = poly_pts[(i + 1) % poly_pts.len()];
        twice_area += x1 * y2 - x2 * y1;
    }
    Ok(twice_area.unsigned_abs())
}

/// Options shared by the multiplicity searches.
#[derive(Debug, Clone, Copy)]
pub struct MultOpts {
    /// Colength samples per ideal; None uses n + 3.
    pub s_max: Option<u32>,
    pub k_max: u32,
    pub trunc: TruncOpts,
}

impl Default for MultOpts {
    fn default() -> Self {
        MultOpts {
            s_max: None,
            k_max: 8,
            trunc: TruncOpts::default(),
        }
    }
}

impl MultOpts {
    pub fn effective_s_max(&self, n: usize) -> u32 {
        self.s_max.unwrap_or(n as u32 + 3)
    }
}

/// The multiplicity table over all n-tuples of the family.
#[derive(Debug, Clone)]
pub struct MinMultSearch {
    pub e_q: u64,
    /// (1-based tuple, e(b)) in lexicographic tuple order.
    pub table: Vec<(Vec<usize>, Mult)>,
    /// Tuples achieving the finite minimum.
    pub argmin: Vec<Vec<usize>>,
    /// Whether the finite minimum equals e(q) (None if no entry is finite).
    pub min_is_e_q: Option<bool>,
    /// Direct verification of each argmin entry: the certified reduction
    /// number, when the equation check succeeds within k_max. In the
    /// power-series universe (formally equidimensional) a minimal entry is a
    /// reduction, so these should all verify.
    pub rees_verified: Vec<(Vec<usize>, Option<u32>)>,
}

/// Compute e(b) for every n-tuple of forms (infinite when b is not
/// m-primary), the minimum, and direct verification of the argmin entries.
pub fn min_multiplicity_search(
    q: &LocalIdeal,
    family: &FormFamily,
    n: usize,
    opts: &MultOpts,
) -> Result<MinMultSearch> {
    let s_max = opts.effective_s_max(q.nvars());
    let e_q = match hs_multiplicity(q, s_max, &opts.trunc)?.e {
        Mult::Finite(e) => e,
        Mult::Infinite => return Err(Error::NotPrimaryUpTo(opts.trunc.e_cap)),
    };
    let mut table: Vec<(Vec<usize>, Mult)> = Vec::new();
    for tuple in crate::search::combinations(family.forms.len(), n) {
        let mut b_gens = Vec::with_capacity(n);
        for &i in &tuple {
            b_gens.push(apply_form(&family.forms[i - 1], q.gens())?);
        }
        let e_b = match LocalIdeal::new(q.varset().clone(), q.field(), b_gens) {
            Err(_) => Mult::Infinite,
            Ok(b) => hs_multiplicity(&b, s_max, &opts.trunc)?.e,
        };
        table.push((tuple, e_b));
    }
    let min = table.iter().filter_map(|(_, e)| e.finite()).min();
    let (argmin, min_is_e_q) = match min {
        None => (Vec::new(), None),
        Some(m) => (
            table
                .iter()
                .filter(|(_, e)| e.finite() == Some(m))
                .map(|(t, _)| t.clone())
                .collect(),
            Some(m == e_q),
        ),
    };
    let mut rees_verified = Vec::new();
    for tuple in &argmin {
        let mut b_gens = Vec::with_capacity(n);
        for &i in tuple {
            b_gens.push(apply_form(&family.forms[i - 1], q.gens())?);
        }
        let b = LocalIdeal::new(q.varset().clone(), q.field(), b_gens)?;
        let k = match reduction_number(q, &b, opts.k_max, &opts.trunc) {
            Ok(ReductionNumber::Found(k)) => Some(k),
            _ => None,
        };
        rees_verified.push((tuple.clone(), k));
    }
    Ok(MinMultSearch {
        e_q,
        table,
        argmin,
        min_is_e_q,
        rees_verified,
    })
}

/// The degree-versus-multiplicity inequality `deg k[X]/Q' <= e(q)`,
/// evaluated on a stabilized presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegVsMult {
    pub deg_f: u64,
    pub e_q: u64,
    pub ok: bool,
}

pub fn degree_vs_multiplicity_check(
    q: &LocalIdeal,
    d_max: Option<u32>,
    opts: &MultOpts,
) -> Result<DegVsMult> {
    let d_max = d_max.unwrap_or_else(|| default_d_max(q));
    let pres = fiber_presentation(q, d_max, &opts.trunc)?;
    if !pres.stabilized {
        return Err(Error::NotStabilized { d_max });
    }
    let deg_f = quotient_degree(&pres.ideal());
    let e_q = match hs_multiplicity(q, opts.effective_s_max(q.nvars()), &opts.trunc)?.e {
        Mult::Finite(e) => e,
        Mult::Infinite => return Err(Error::NotPrimaryUpTo(opts.trunc.e_cap)),
    };
    Ok(DegVsMult {
        deg_f,
        e_q,
        ok: deg_f <= e_q,
    })
}
