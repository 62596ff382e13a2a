//! deg.rad of a graded quotient: the sum of degrees of `k[X]/p` over the
//! minimal primes p. Exact for monomial presentations via minimal variable
//! covers (each coordinate prime has quotient degree 1); non-monomial input
//! goes through a caller-supplied decomposition whose primality is trusted
//! and loudly labeled.

use crate::error::{Error, Result};
use crate::fiber::FiberPresentation;
use crate::groebner::{
    buchberger, krull_dimension, normal_form, quotient_degree, HomogIdeal, MonomialIdeal,
};
use crate::poly::{Monomial, MonomialOrder, VarSet};
use std::sync::Arc;

/// A coordinate prime: the ideal generated by a subset of the variables.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CoordinatePrime {
    /// Sorted variable indices.
    pub vars: Vec<usize>,
}

impl CoordinatePrime {
    pub fn describe(&self, vs: &Arc<VarSet>) -> String {
        let names: Vec<&str> = self.vars.iter().map(|&i| vs.name(i)).collect();
        format!("({})", names.join(", "))
    }

    fn contains_subset(&self, other: &CoordinatePrime) -> bool {
        other.vars.iter().all(|v| self.vars.contains(v))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegRadSource {
    MonomialExact,
    UserDecomposition,
}

/// The minimal primes with their quotient degrees and the total.
#[derive(Debug, Clone)]
pub struct DegRadReport {
    pub primes: Vec<(String, u64)>,
    pub total: u64,
    pub source: DegRadSource,
}

/// Minimal primes of a nonzero monomial ideal: the inclusion-minimal
/// variable subsets meeting the support of every generator.
pub fn monomial_minimal_primes(m: &MonomialIdeal) -> Result<Vec<CoordinatePrime>> {
    if m.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let n = m.nvars();
    let supports: Vec<Vec<usize>> = m.min_gens().iter().map(|g| g.support()).collect();
    let mut covers: Vec<CoordinatePrime> = Vec::new();
    for mask in 0u32..(1 << n) {
        let is_cover = supports
            .iter()
            .all(|s| s.iter().any(|v| mask & (1 << v) != 0));
        if !is_cover {
            continue;
        }
        // Keep only if no kept cover is a subset.
        let vars: Vec<usize> = (0..n).filter(|v| mask & (1 << v) != 0).collect();
        let cand = CoordinatePrime { vars };
        if covers.iter().any(|c| cand.contains_subset(c)) {
            continue;
        }
        covers.retain(|c| !c.contains_subset(&cand));
        covers.push(cand);
    }
    covers.sort();
    Ok(covers)
}

/// deg.rad of a monomial ideal: each coordinate prime has degree 1, so the
/// total is the number of minimal covers. The zero ideal is a domain with
/// the single minimal prime (0) of degree 1.
pub fn degrad_monomial(m: &MonomialIdeal, vs: &Arc<VarSet>) -> DegRadReport {
    if m.is_zero() {
        return DegRadReport {
            primes: vec![("(0)".to_string(), 1)],
            total: 1,
            source: DegRadSource::MonomialExact,
        };
    }
    let covers = monomial_minimal_primes(m).expect("nonzero ideal");
    let primes: Vec<(String, u64)> = covers.iter().map(|c| (c.describe(vs), 1)).collect();
    DegRadReport {
        total: primes.len() as u64,
        primes,
        source: DegRadSource::MonomialExact,
    }
}

/// deg.rad of a fiber presentation; requires monomial generators (use
/// [`degrad_from_decomposition`] otherwise).
pub fn degrad(p: &FiberPresentation) -> Result<DegRadReport> {
    let gens = p.all_gens();
    if gens.is_empty() {
        return Ok(DegRadReport {
            primes: vec![("(0)".to_string(), 1)],
            total: 1,
            source: DegRadSource::MonomialExact,
        });
    }
    if !p.is_monomial() {
        return Err(Error::NotMonomial);
    }
    let mons: Vec<Monomial> = gens
        .iter()
        .map(|g| g.as_monomial().unwrap().0.clone())
        .collect();
    let mi = MonomialIdeal::new(p.fiber_vars.len(), mons);
    Ok(degrad_monomial(&mi, &p.fiber_vars))
}

/// deg.rad from a trusted decomposition: verifies containment `Q` in each p
/// and the dimension agreement, but NOT primality; the report is labeled
/// `UserDecomposition`.
pub fn degrad_from_decomposition(q: &HomogIdeal, primes: &[HomogIdeal]) -> Result<DegRadReport> {
    let q_dim = krull_dimension(q);
    let mut min_dim = usize::MAX;
    let mut out: Vec<(String, u64)> = Vec::new();
    for p in primes {
        let gb = buchberger(p, MonomialOrder::GrevLex);
        for g in q.gens() {
            if !normal_form(g, &gb).is_zero() {
                let desc: Vec<String> = p.gens().iter().map(|x| x.to_string()).collect();
                return Err(Error::ContainmentFailure(format!("({})", desc.join(", "))));
            }
        }
        let dim = krull_dimension(p);
        min_dim = min_dim.min(dim);
        let desc: Vec<String> = p.gens().iter().map(|x| x.to_string()).collect();
        out.push((format!("({})", desc.join(", ")), quotient_degree(p)));
    }
    if min_dim != q_dim {
        return Err(Error::DimensionMismatch {
            ideal: q_dim,
            primes: min_dim,
        });
    }
    Ok(DegRadReport {
        total: out.iter().map(|(_, d)| d).sum(),
        primes: out,
        source: DegRadSource::UserDecomposition,
    })
}

/// Behavior of deg.rad under adding one coordinate hyperplane `X_j`:
/// (before, after, after <= before). The sum ideal is pushed into the
/// remaining variables so it stays monomial-computable.
pub fn check_degrad_monotonicity(
    q: &MonomialIdeal,
    j: usize,
    vs: &Arc<VarSet>,
) -> (u64, u64, bool) {
    let before = degrad_monomial(q, vs).total;
    // Set X_j = 0: generators involving X_j vanish, others survive in the
    // remaining m-1 variables.
    let n = q.nvars();
    let survivors: Vec<Monomial> = q
        .min_gens()
        .iter()
        .filter(|g| g.0[j] == 0)
        .map(|g| {
            let mut e: Vec<u32> = g.0.clone();
            e.remove(j);
            Monomial(e)
        })
        .collect();
    let pushed = MonomialIdeal::new(n - 1, survivors);
    let reduced_names: Vec<String> = (0..n)
        .filter(|v| *v != j)
        .map(|v| vs.name(v).to_string())
        .collect();
    let reduced_vs = VarSet::new(reduced_names, vs.role()).unwrap();
    let after = degrad_monomial(&pushed, &reduced_vs).total;
    (before, after, after <= before)
}

/// Compare the minimal primes of `I + (a)` computed directly with the union
/// of minimal primes of `P_i + (a)` over the minimal primes `P_i` of `I`,
/// discarding non-minimal members on the right.
pub fn radical_sum_primes_agree(i: &MonomialIdeal, a: &Monomial) -> Result<bool> {
    let n = i.nvars();
    let mut left_gens: Vec<Monomial> = i.min_gens().to_vec();
    left_gens.push(a.clone());
    let left = monomial_minimal_primes(&MonomialIdeal::new(n, left_gens))?;

    let mut right: Vec<CoordinatePrime> = Vec::new();
    for p in monomial_minimal_primes(i)? {
        let mut gens: Vec<Monomial> = p.vars.iter().map(|&v| Monomial::var(n, v)).collect();
        gens.push(a.clone());
        for q in monomial_minimal_primes(&MonomialIdeal::new(n, gens))? {
            if !right.contains(&q) {
                right.push(q);
            }
        }
    }
    // Discard non-minimal members.
    let minimal: Vec<CoordinatePrime> = right
        .iter()
        .filter(|c| !right.iter().any(|d| *d != **c && c.contains_subset(d)))
        .cloned()
        .collect();
    let mut minimal = minimal;
    minimal.sort();
    Ok(minimal == left)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;
    use crate::parse::parse;

    fn qq() -> FieldCtx {
        FieldCtx::rationals()
    }

    fn mi(nvars: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(nvars, gens.iter().map(|e| Monomial(e.to_vec())).collect())
    }

    #[test]
    fn primes_of_principal_xz() {
        let m = mi(3, &[&[1, 0, 1]]);
        let primes = monomial_minimal_primes(&m).unwrap();
        assert_eq!(
            primes,
            vec![
                CoordinatePrime { vars: vec![0] },
                CoordinatePrime { vars: vec![2] }
            ]
        );
    }

    #[test]
    fn primes_of_example_two_ideal() {
        // (X U^2, Y^2 V, X V) -> {(X,Y), (X,V), (U,V)}.
        let m = mi(4, &[&[1, 0, 2, 0], &[0, 2, 0, 1], &[1, 0, 0, 1]]);
        let primes = monomial_minimal_primes(&m).unwrap();
        assert_eq!(
            primes,
            vec![
                CoordinatePrime { vars: vec![0, 1] },
                CoordinatePrime { vars: vec![0, 3] },
                CoordinatePrime { vars: vec![2, 3] },
            ]
        );
    }

    #[test]
    fn primes_of_single_variable() {
        let m = mi(4, &[&[1, 0, 0, 0]]);
        assert_eq!(
            monomial_minimal_primes(&m).unwrap(),
            vec![CoordinatePrime { vars: vec![0] }]
        );
    }

    #[test]
    fn zero_ideal_rejected() {
        let m = mi(3, &[]);
        assert_eq!(monomial_minimal_primes(&m), Err(Error::ZeroIdeal));
    }

    #[test]
    fn primes_agree_with_exhaustive_search() {
        // Randomized: minimal covers match brute-force
        // containment-plus-minimality over all coordinate primes.
        let mut state = 7u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..300 {
            let n = 2 + (next() % 4) as usize; // up to 5 variables
            let ngens = 1 + (next() % 4) as usize;
            let gens: Vec<Monomial> = (0..ngens)
                .map(|_| {
                    let mut e = vec![0u32; n];
                    loop {
                        for v in e.iter_mut() {
                            *v = (next() % 3) as u32;
                        }
                        if e.iter().any(|x| *x > 0) {
                            break;
                        }
                    }
                    Monomial(e.clone())
                })
                .collect();
            let ideal = MonomialIdeal::new(n, gens);
            if ideal.is_zero() {
                continue;
            }
            let fast = monomial_minimal_primes(&ideal).unwrap();
            // Brute force: all subsets containing the ideal, then minimal.
            let supports: Vec<Vec<usize>> = ideal.min_gens().iter().map(|g| g.support()).collect();
            let mut containing: Vec<Vec<usize>> = Vec::new();
            for mask in 0u32..(1 << n) {
                let vars: Vec<usize> = (0..n).filter(|v| mask & (1 << v) != 0).collect();
                if supports.iter().all(|s| s.iter().any(|v| vars.contains(v))) {
                    containing.push(vars);
                }
            }
            let minimal: Vec<CoordinatePrime> = containing
                .iter()
                .filter(|c| {
                    !containing
                        .iter()
                        .any(|d| d.len() < c.len() && d.iter().all(|v| c.contains(v)))
                        && !containing.iter().any(|d| {
                            d.len() == c.len() && *d != **c && d.iter().all(|v| c.contains(v))
                        })
                })
                .map(|c| CoordinatePrime { vars: c.clone() })
                .collect();
            let mut minimal = minimal;
            minimal.sort();
            assert_eq!(fast, minimal);
        }
    }

    #[test]
    fn degrad_monomial_examples() {
        let vs3 = VarSet::fiber(3);
        let r = degrad_monomial(&mi(3, &[&[1, 0, 1]]), &vs3);
        assert_eq!(r.total, 2);
        assert_eq!(r.primes.len(), 2);
        assert!(matches!(r.source, DegRadSource::MonomialExact));

        let vs4 = VarSet::fiber(4);
        let r = degrad_monomial(&mi(4, &[&[1, 0, 2, 0], &[0, 2, 0, 1], &[1, 0, 0, 1]]), &vs4);
        assert_eq!(r.total, 3);

        let zero = mi(3, &[]);
        let r = degrad_monomial(&zero, &vs3);
        assert_eq!(r.total, 1);
        assert_eq!(r.primes[0].0, "(0)");
    }

    #[test]
    fn decomposition_checks() {
        let vs = VarSet::fiber(3);
        let xz = HomogIdeal::new(vs.clone(), qq(), vec![parse("X*Z", &vs, qq()).unwrap()]).unwrap();
        let px = HomogIdeal::new(vs.clone(), qq(), vec![parse("X", &vs, qq()).unwrap()]).unwrap();
        let pz = HomogIdeal::new(vs.clone(), qq(), vec![parse("Z", &vs, qq()).unwrap()]).unwrap();
        let py = HomogIdeal::new(vs.clone(), qq(), vec![parse("Y", &vs, qq()).unwrap()]).unwrap();

        let full = degrad_from_decomposition(&xz, &[px.clone(), pz.clone()]).unwrap();
        assert_eq!(full.total, 2);
        assert!(matches!(full.source, DegRadSource::UserDecomposition));

        // Caller-trusted single prime: dims agree, total 1.
        let partial = degrad_from_decomposition(&xz, &[px]).unwrap();
        assert_eq!(partial.total, 1);

        // (Y) does not contain (XZ).
        assert!(matches!(
            degrad_from_decomposition(&xz, &[py]),
            Err(Error::ContainmentFailure(_))
        ));
    }

    #[test]
    fn degrad_monotonicity_examples() {
        let vs = VarSet::fiber(3);
        let xz = mi(3, &[&[1, 0, 1]]);
        assert_eq!(check_degrad_monotonicity(&xz, 1, &vs), (2, 2, true));
        assert_eq!(check_degrad_monotonicity(&xz, 0, &vs), (2, 1, true));

        let vs4 = VarSet::fiber(4);
        let e2 = mi(4, &[&[1, 0, 2, 0], &[0, 2, 0, 1], &[1, 0, 0, 1]]);
        assert_eq!(check_degrad_monotonicity(&e2, 0, &vs4), (3, 2, true));
    }

    #[test]
    fn radical_sum_prime_examples() {
        let xz = mi(3, &[&[1, 0, 1]]);
        let y = Monomial(vec![0, 1, 0]);
        assert!(radical_sum_primes_agree(&xz, &y).unwrap());
        let x = Monomial(vec![1, 0, 0]);
        assert!(radical_sum_primes_agree(&xz, &x).unwrap());
        let just_x = mi(3, &[&[1, 0, 0]]);
        assert!(radical_sum_primes_agree(&just_x, &x).unwrap());
    }
}
