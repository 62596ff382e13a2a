//! Parsing of problem descriptions from command-line flags and form files,
//! and the reverse rendering into report echoes.

use crate::report::{FamilyDoc, OptionsEcho, ProblemEcho};
use fibred::parse::parse;
use fibred::poly::{LinearForm, VarRole, VarSet};
use fibred::{
    degrad, ell, f2_family, fiber_presentation, vandermonde_family, Error, FieldCtx, FieldElem,
    FormFamily, FormProvenance, LocalIdeal, MultOpts, SearchOpts, Strategy, TruncOpts,
};
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct Problem {
    pub field: FieldCtx,
    pub varset: Arc<VarSet>,
    pub ideal: LocalIdeal,
    pub echo: ProblemEcho,
    pub search: SearchOpts,
    pub mult: MultOpts,
}

pub fn parse_field(s: &str) -> Result<FieldCtx, Error> {
    if s == "Q" || s == "q" {
        return Ok(FieldCtx::rationals());
    }
    if let Some(p) = s.strip_prefix("Fp:").or_else(|| s.strip_prefix("fp:")) {
        let p: u64 = p
            .parse()
            .map_err(|_| Error::Parse(format!("invalid modulus {:?}", p)))?;
        return FieldCtx::prime_field(p);
    }
    Err(Error::Parse(format!(
        "unknown field {:?}; expected Q or Fp:<prime>",
        s
    )))
}

#[allow(clippy::too_many_arguments)]
pub fn build_problem(
    field: &str,
    vars: &str,
    gens: &str,
    dmax: Option<u32>,
    kmax: Option<u32>,
    ecap: Option<u32>,
    smax: Option<u32>,
    strategy: &str,
) -> Result<Problem, Error> {
    let field_ctx = parse_field(field)?;
    let names: Vec<String> = vars
        .split(',')
        .map(|v| v.trim().to_string())
        .filter(|v| !v.is_empty())
        .collect();
    if names.is_empty() {
        return Err(Error::Parse("no variables declared".into()));
    }
    let varset = VarSet::new(names.clone(), VarRole::Local)?;
    let gen_texts: Vec<String> = gens
        .split(',')
        .map(|g| g.trim().to_string())
        .filter(|g| !g.is_empty())
        .collect();
    if gen_texts.is_empty() {
        return Err(Error::Parse("no generators given".into()));
    }
    let polys = gen_texts
        .iter()
        .map(|g| parse(g, &varset, field_ctx))
        .collect::<Result<Vec<_>, _>>()?;
    let ideal = LocalIdeal::new(varset.clone(), field_ctx, polys)?;
    let strategy_enum = match strategy {
        "greedy" => Strategy::GreedyThenExhaustive,
        "exhaustive" => Strategy::ExhaustiveOnly,
        other => {
            return Err(Error::Parse(format!(
                "unknown strategy {:?}; expected greedy or exhaustive",
                other
            )))
        }
    };
    let trunc = TruncOpts {
        e_cap: ecap.unwrap_or(64),
    };
    let search = SearchOpts {
        d_max: dmax,
        k_max: kmax.unwrap_or(8),
        trunc,
        strategy: strategy_enum,
    };
    let mult = MultOpts {
        s_max: smax,
        k_max: search.k_max,
        trunc,
    };
    // Canonical echo: generators re-emitted from the parsed polynomials.
    let echo = ProblemEcho {
        field: field_ctx.to_string(),
        vars: names,
        gens: ideal.gens().iter().map(|g| g.to_string()).collect(),
        options: OptionsEcho {
            dmax,
            kmax: search.k_max,
            ecap: trunc.e_cap,
            smax,
            strategy: strategy.to_string(),
        },
    };
    Ok(Problem {
        field: field_ctx,
        varset,
        ideal,
        echo,
        search,
        mult,
    })
}

/// Parse one exact coefficient: an optionally signed integer or `a/b`.
pub fn parse_coeff(field: FieldCtx, s: &str) -> Result<FieldElem, Error> {
    let s = s.trim();
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let val = if let Some((num, den)) = body.split_once('/') {
        let n: i64 = num
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad coefficient {:?}", s)))?;
        let d: i64 = den
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad coefficient {:?}", s)))?;
        field.from_ratio(n, d)?
    } else {
        let n: i64 = body
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad coefficient {:?}", s)))?;
        field.from_i64(n)
    };
    if neg {
        field.neg(&val)
    } else {
        Ok(val)
    }
}

/// Read a form family from a JSON file: an array of coefficient rows
/// (strings or integers), one row per form.
pub fn family_from_file(path: &str, field: FieldCtx, m: usize) -> Result<FormFamily, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {}", path, e)))?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| Error::Parse(format!("invalid JSON in {}: {}", path, e)))?;
    let rows = value
        .as_array()
        .or_else(|| value.get("forms").and_then(|f| f.as_array()))
        .ok_or_else(|| Error::Parse("expected an array of coefficient rows".into()))?;
    let mut forms = Vec::with_capacity(rows.len());
    for row in rows {
        let entries = row
            .as_array()
            .ok_or_else(|| Error::Parse("each form must be an array of coefficients".into()))?;
        if entries.len() != m {
            return Err(Error::LengthMismatch {
                expected: m,
                got: entries.len(),
            });
        }
        let coeffs = entries
            .iter()
            .map(|e| match e {
                serde_json::Value::String(s) => parse_coeff(field, s),
                serde_json::Value::Number(n) => {
                    let i = n
                        .as_i64()
                        .ok_or_else(|| Error::Parse(format!("bad coefficient {}", n)))?;
                    Ok(field.from_i64(i))
                }
                other => Err(Error::Parse(format!("bad coefficient {}", other))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        forms.push(LinearForm::new(field, coeffs)?);
    }
    FormFamily::user_supplied(forms, m)
}

/// Resolve `--forms auto|f2|<path>` into a verified family. The automatic
/// path sizes a Vandermonde family by `l = ell(deg.rad, m, n)` computed from
/// the presentation.
pub fn resolve_family(problem: &Problem, source: &str) -> Result<FormFamily, Error> {
    let m = problem.ideal.gens().len();
    let n = problem.ideal.nvars();
    match source {
        "auto" => {
            let d_max = problem
                .search
                .d_max
                .unwrap_or_else(|| fibred::fiber::default_d_max(&problem.ideal));
            let pres = fiber_presentation(&problem.ideal, d_max, &problem.search.trunc)?;
            let d = degrad(&pres)?.total;
            let l = ell(d, m as u64, n as u64).max(m as u64);
            vandermonde_family(problem.field, m, l)
        }
        "f2" => {
            if problem.field != FieldCtx::prime_field(2)? {
                return Err(Error::Parse("--forms f2 requires --field Fp:2".into()));
            }
            Ok(f2_family(m))
        }
        path => family_from_file(path, problem.field, m),
    }
}

/// Render a family into its report document.
pub fn family_doc(family: &FormFamily, m: usize) -> FamilyDoc {
    let fiber_vs = VarSet::fiber(m);
    FamilyDoc {
        provenance: match family.provenance {
            FormProvenance::Vandermonde => "vandermonde".to_string(),
            FormProvenance::F2Canonical => "f2-canonical".to_string(),
            FormProvenance::UserSupplied => "user".to_string(),
        },
        fiber_vars: fiber_vs.names().to_vec(),
        rows: family
            .forms
            .iter()
            .map(|f| f.coeffs().iter().map(|c| c.to_string()).collect())
            .collect(),
        forms: family
            .forms
            .iter()
            .map(|f| {
                f.to_poly(&fiber_vs)
                    .map(|p| p.to_string())
                    .unwrap_or_default()
            })
            .collect(),
        independent: family.independent,
        note: family.degenerate_note.clone(),
    }
}

/// Rebuild a family from report rows (used by verify-reduction).
pub fn family_from_rows(
    rows: &[Vec<String>],
    field: FieldCtx,
    m: usize,
) -> Result<FormFamily, Error> {
    let mut forms = Vec::with_capacity(rows.len());
    for row in rows {
        if row.len() != m {
            return Err(Error::LengthMismatch {
                expected: m,
                got: row.len(),
            });
        }
        let coeffs = row
            .iter()
            .map(|s| parse_coeff(field, s))
            .collect::<Result<Vec<_>, _>>()?;
        forms.push(LinearForm::new(field, coeffs)?);
    }
    FormFamily::user_supplied(forms, m)
}
