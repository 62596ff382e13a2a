//! Command-line front end: parse ideal descriptions, dispatch to the
//! library, and emit human-readable or machine-readable reports.
//!
//! Exit status contract: 0 success; 1 worked-example regression mismatch;
//! 2 not m-primary (within the truncation cap); 3 parse/usage error;
//! 4 reduction search failed; 5 certificate verification mismatch.

mod examples;
mod problem;
mod report;

use clap::{Args, Parser, Subcommand};
use fibred::{
    degrad, fiber_presentation, find_reduction, min_multiplicity_search, primary_witness,
    reduction_number, Error, LocalIdeal, ReductionNumber,
};
use problem::{build_problem, family_doc, family_from_rows, resolve_family, Problem};
use report::*;

/// Print to stdout, ignoring a closed pipe (e.g. when piped into `head`).
macro_rules! say {
    ($($arg:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout(), $($arg)*);
    }};
}

#[derive(Parser)]
#[command(
    name = "fibred",
    version,
    about = "Fiber cones, reductions and multiplicities of m-primary ideals in k[[x_1,...,x_n]], computed exactly"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct ProblemArgs {
    /// Coefficient field: Q or Fp:<prime>.
    #[arg(long, default_value = "Q")]
    field: String,
    /// Comma-separated local variable names, e.g. "x,y".
    #[arg(long)]
    vars: String,
    /// Comma-separated generators, e.g. "x^2,x*y,y^3".
    #[arg(long)]
    gens: String,
    /// Presentation scan bound (default: 2 * max generator degree + 2).
    #[arg(long)]
    dmax: Option<u32>,
    /// Reduction-number search bound.
    #[arg(long)]
    kmax: Option<u32>,
    /// Truncation escalation cap.
    #[arg(long)]
    ecap: Option<u32>,
    /// Colength samples per multiplicity (default: n + 3).
    #[arg(long)]
    smax: Option<u32>,
    /// Form family: auto | f2 | <path to JSON rows>.
    #[arg(long, default_value = "auto")]
    forms: String,
    /// Candidate strategy: greedy | exhaustive.
    #[arg(long, default_value = "greedy")]
    strategy: String,
    /// Machine-readable JSON output.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Path to a certificate JSON emitted by find-reduction.
    certificate: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct PaperArgs {
    /// Override the presentation scan bound for all scenarios.
    #[arg(long)]
    dmax: Option<u32>,
    /// Override the reduction-number bound for all scenarios.
    #[arg(long)]
    kmax: Option<u32>,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the fiber-cone presentation ideal degree by degree.
    Fibercone(ProblemArgs),
    /// Sum of degrees of the minimal primes of the presentation ideal.
    Degrad(ProblemArgs),
    /// Search for a certified reduction generated by linear combinations.
    FindReduction(ProblemArgs),
    /// Re-verify a stored reduction certificate from scratch.
    VerifyReduction(VerifyArgs),
    /// Multiplicity table over all n-tuples of the form family.
    Multiplicity(ProblemArgs),
    /// Run the bundled worked-example regressions.
    PaperExamples(PaperArgs),
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotPrimaryUpTo(_) | Error::NotPrimary => 2,
        Error::SearchFailed(_) => 4,
        _ => 3,
    }
}

fn fail(e: Error) -> ! {
    eprintln!("error: {}", e);
    std::process::exit(exit_code(&e));
}

fn problem_from_args(a: &ProblemArgs) -> Problem {
    match build_problem(
        &a.field,
        &a.vars,
        &a.gens,
        a.dmax,
        a.kmax,
        a.ecap,
        a.smax,
        &a.strategy,
    ) {
        Ok(p) => p,
        Err(e) => fail(e),
    }
}

fn emit_json<T: serde::Serialize>(doc: &T) {
    say!(
        "{}",
        serde_json::to_string_pretty(doc).expect("serializable report")
    );
}

fn cmd_fibercone(a: &ProblemArgs) {
    let p = problem_from_args(a);
    let d_max = p
        .search
        .d_max
        .unwrap_or_else(|| fibred::default_d_max(&p.ideal));
    let pres = match fiber_presentation(&p.ideal, d_max, &p.search.trunc) {
        Ok(x) => x,
        Err(e) => fail(e),
    };
    let doc = FiberconeReport {
        command: "fibercone".into(),
        problem: p.echo.clone(),
        fiber_vars: pres.fiber_vars.names().to_vec(),
        presentation: pres
            .gens_by_degree
            .iter()
            .map(|(d, gs)| DegreeGens {
                degree: *d,
                gens: gs.iter().map(|g| g.to_string()).collect(),
            })
            .collect(),
        stabilized: pres.stabilized,
        dim_check: pres.dim_check,
        d_max_used: d_max,
    };
    if a.json {
        emit_json(&doc);
    } else {
        say!("fiber cone presentation of ({})", p.echo.gens.join(", "));
        say!("  fiber variables: {}", doc.fiber_vars.join(", "));
        if doc.presentation.is_empty() {
            say!("  Q = (0): the fiber cone is a polynomial ring");
        } else {
            for dg in &doc.presentation {
                say!("  degree {}: {}", dg.degree, dg.gens.join(", "));
            }
        }
        say!(
            "  stabilized: {} (scanned to degree {}), dim check: {}",
            doc.stabilized,
            doc.d_max_used,
            doc.dim_check
        );
    }
    if !pres.stabilized {
        std::process::exit(4);
    }
}

fn cmd_degrad(a: &ProblemArgs) {
    let p = problem_from_args(a);
    let d_max = p
        .search
        .d_max
        .unwrap_or_else(|| fibred::default_d_max(&p.ideal));
    let pres = match fiber_presentation(&p.ideal, d_max, &p.search.trunc) {
        Ok(x) => x,
        Err(e) => fail(e),
    };
    let rep = match degrad(&pres) {
        Ok(r) => r,
        Err(e) => fail(e),
    };
    let doc = DegradReport {
        command: "degrad".into(),
        problem: p.echo.clone(),
        source: match rep.source {
            fibred::DegRadSource::MonomialExact => "monomial-exact".into(),
            fibred::DegRadSource::UserDecomposition => "user-decomposition".into(),
        },
        primes: rep
            .primes
            .iter()
            .map(|(p, d)| PrimeEntry {
                prime: p.clone(),
                degree: *d,
            })
            .collect(),
        total: rep.total,
    };
    if a.json {
        emit_json(&doc);
    } else {
        say!("deg.rad of the fiber cone of ({})", p.echo.gens.join(", "));
        for e in &doc.primes {
            say!("  {}  (degree {})", e.prime, e.degree);
        }
        say!("  total: {}", doc.total);
    }
}

fn make_certificate_doc(
    p: &Problem,
    family: &fibred::FormFamily,
    cert: &fibred::ReductionCertificate,
    with_mult: bool,
) -> CertificateDoc {
    let m = p.ideal.gens().len();
    let (e_q, e_b) = if with_mult {
        let s_max = p.mult.effective_s_max(p.ideal.nvars());
        let e_q = fibred::hs_multiplicity(&p.ideal, s_max, &p.mult.trunc)
            .ok()
            .and_then(|r| r.e.finite());
        let b = LocalIdeal::new(p.varset.clone(), p.field, cert.b_gens.clone()).ok();
        let e_b = b.and_then(|b| {
            fibred::hs_multiplicity(&b, s_max, &p.mult.trunc)
                .ok()
                .and_then(|r| r.e.finite())
        });
        (e_q, e_b)
    } else {
        (None, None)
    };
    CertificateDoc {
        problem: p.echo.clone(),
        family: family_doc(family, m),
        indices: cert.indices.clone(),
        b_gens: cert.b_gens.iter().map(|g| g.to_string()).collect(),
        reduction_k: cert.reduction_k,
        sop: cert.sop,
        claim_passed: cert.claim_passed,
        e_q,
        e_b,
    }
}

fn cmd_find_reduction(a: &ProblemArgs) {
    let p = problem_from_args(a);
    let family = match resolve_family(&p, &a.forms) {
        Ok(f) => f,
        Err(e) => fail(e),
    };
    match find_reduction(&p.ideal, &family, &p.search) {
        Ok(cert) => {
            let doc = FindReductionReport {
                command: "find-reduction".into(),
                certificate: Some(make_certificate_doc(&p, &family, &cert, true)),
                failure: None,
            };
            if a.json {
                emit_json(&doc);
            } else {
                let c = doc.certificate.as_ref().unwrap();
                say!("reduction found: forms {:?} of the family", c.indices);
                for (i, g) in c.b_gens.iter().enumerate() {
                    say!("  b_{} = {}", i + 1, g);
                }
                say!(
                    "  reduction number k = {}; system of parameters: {}",
                    c.reduction_k,
                    c.sop
                );
                if let (Some(eq), Some(eb)) = (c.e_q, c.e_b) {
                    say!("  e(q) = {}, e(b) = {}", eq, eb)
                }
            }
        }
        Err(Error::SearchFailed(d)) => {
            let doc = FindReductionReport {
                command: "find-reduction".into(),
                certificate: None,
                failure: Some(SearchFailureDoc {
                    stabilized: d.stabilized,
                    dim_check: d.dim_check,
                    d_max: d.d_max,
                    candidates_tried: d
                        .candidates_tried
                        .iter()
                        .map(|(t, r)| CandidateFailure {
                            indices: t.clone(),
                            reason: r.clone(),
                        })
                        .collect(),
                }),
            };
            if a.json {
                emit_json(&doc);
            } else {
                let f = doc.failure.as_ref().unwrap();
                say!("no reduction certified");
                say!(
                    "  presentation stabilized: {}, dim check: {}, scanned to degree {}",
                    f.stabilized,
                    f.dim_check,
                    f.d_max
                );
                for c in &f.candidates_tried {
                    say!("  tried {:?}: {}", c.indices, c.reason);
                }
            }
            std::process::exit(4);
        }
        Err(e) => fail(e),
    }
}

fn cmd_multiplicity(a: &ProblemArgs) {
    let p = problem_from_args(a);
    let family = match resolve_family(&p, &a.forms) {
        Ok(f) => f,
        Err(e) => fail(e),
    };
    let n = p.ideal.nvars();
    let r = match min_multiplicity_search(&p.ideal, &family, n, &p.mult) {
        Ok(r) => r,
        Err(e) => fail(e),
    };
    let doc = MultiplicityReport {
        command: "multiplicity".into(),
        problem: p.echo.clone(),
        family: family_doc(&family, p.ideal.gens().len()),
        e_q: r.e_q,
        table: r
            .table
            .iter()
            .map(|(t, e)| TableRow {
                indices: t.clone(),
                e: e.to_string(),
            })
            .collect(),
        argmin: r.argmin.clone(),
        min_is_e_q: r.min_is_e_q,
        rees_verified: r
            .rees_verified
            .iter()
            .map(|(t, k)| ReesEntry {
                indices: t.clone(),
                verified_k: *k,
            })
            .collect(),
    };
    if a.json {
        emit_json(&doc);
    } else {
        say!("multiplicity table for ({})", p.echo.gens.join(", "));
        say!("  e(q) = {}", doc.e_q);
        for row in &doc.table {
            say!("  {:?}  e = {}", row.indices, row.e);
        }
        say!(
            "  argmin: {:?} (min equals e(q): {:?})",
            doc.argmin,
            doc.min_is_e_q
        );
        for r in &doc.rees_verified {
            match r.verified_k {
                Some(k) => say!("  {:?} verified as a reduction, k = {}", r.indices, k),
                None => say!("  {:?} NOT verified within kmax", r.indices),
            }
        }
    }
}

fn cmd_verify(a: &VerifyArgs) {
    let text = match std::fs::read_to_string(&a.certificate) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {}", a.certificate, e);
            std::process::exit(3);
        }
    };
    // Accept either a bare certificate or a find-reduction report.
    let cert: CertificateDoc = match serde_json::from_str::<CertificateDoc>(&text) {
        Ok(c) => c,
        Err(_) => match serde_json::from_str::<FindReductionReport>(&text) {
            Ok(r) => match r.certificate {
                Some(c) => c,
                None => {
                    eprintln!("error: report carries no certificate");
                    std::process::exit(3);
                }
            },
            Err(e) => {
                eprintln!("error: invalid certificate JSON: {}", e);
                std::process::exit(3);
            }
        },
    };
    let mut notes: Vec<String> = Vec::new();
    let p = match build_problem(
        &cert.problem.field,
        &cert.problem.vars.join(","),
        &cert.problem.gens.join(","),
        cert.problem.options.dmax,
        Some(cert.problem.options.kmax),
        Some(cert.problem.options.ecap),
        cert.problem.options.smax,
        &cert.problem.options.strategy,
    ) {
        Ok(p) => p,
        Err(e) => fail(e),
    };
    let m = p.ideal.gens().len();
    let family = match family_from_rows(&cert.family.rows, p.field, m) {
        Ok(f) => f,
        Err(e) => fail(e),
    };
    // Rebuild b from the stored indices and re-certify from scratch.
    let mut b_gens = Vec::new();
    for &i in &cert.indices {
        if i == 0 || i > family.forms.len() {
            eprintln!("error: certificate index {} out of range", i);
            std::process::exit(5);
        }
        match fibred::poly::apply_form(&family.forms[i - 1], p.ideal.gens()) {
            Ok(g) => b_gens.push(g),
            Err(e) => fail(e),
        }
    }
    let stored_texts: Vec<String> = b_gens.iter().map(|g| g.to_string()).collect();
    if stored_texts != cert.b_gens {
        notes.push(format!(
            "stored generators {:?} do not match recomputed {:?}",
            cert.b_gens, stored_texts
        ));
    }
    let b = match LocalIdeal::new(p.varset.clone(), p.field, b_gens) {
        Ok(b) => b,
        Err(e) => fail(e),
    };
    let sop_recheck = primary_witness(&b, &p.search.trunc).is_ok();
    if !sop_recheck {
        notes.push("b is not certified m-primary".into());
    }
    let recomputed_k = match reduction_number(&p.ideal, &b, p.search.k_max, &p.search.trunc) {
        Ok(ReductionNumber::Found(k)) => Some(k),
        Ok(ReductionNumber::NoneUpTo(km)) => {
            notes.push(format!("reduction equation not certified up to k = {}", km));
            None
        }
        Err(e) => {
            notes.push(format!("re-verification error: {}", e));
            None
        }
    };
    if recomputed_k != Some(cert.reduction_k) {
        notes.push(format!(
            "stored reduction number {} does not match recomputed {:?}",
            cert.reduction_k, recomputed_k
        ));
    }
    let verified =
        sop_recheck && recomputed_k == Some(cert.reduction_k) && stored_texts == cert.b_gens;
    let doc = VerifyReport {
        command: "verify-reduction".into(),
        verified,
        sop_recheck,
        recomputed_k,
        stored_k: cert.reduction_k,
        notes,
    };
    if a.json {
        emit_json(&doc);
    } else {
        say!(
            "certificate {}: {}",
            a.certificate,
            if doc.verified { "VERIFIED" } else { "MISMATCH" }
        );
        for n in &doc.notes {
            say!("  note: {}", n);
        }
    }
    if !verified {
        std::process::exit(5);
    }
}

fn cmd_paper_examples(a: &PaperArgs) {
    let doc = examples::run_all(a.dmax, a.kmax);
    if a.json {
        emit_json(&doc);
    } else {
        for s in &doc.scenarios {
            say!("[{}] {}", if s.passed { "PASS" } else { "FAIL" }, s.name);
            for c in &s.checks {
                if c.passed {
                    say!("    ok   {}", c.name);
                } else {
                    say!(
                        "    FAIL {}: expected {}, computed {}",
                        c.name,
                        c.expected,
                        c.computed
                    );
                }
            }
        }
        say!(
            "{} of {} scenarios passed",
            doc.scenarios.iter().filter(|s| s.passed).count(),
            doc.scenarios.len()
        );
    }
    if !doc.all_passed {
        // Distinguish a stabilization failure (diagnostics path) from a
        // value mismatch.
        let stab_failure = doc.scenarios.iter().any(|s| {
            s.checks
                .iter()
                .any(|c| !c.passed && c.name.ends_with("stabilized"))
        });
        std::process::exit(if stab_failure { 4 } else { 1 });
    }
}

fn main() {
    let cli = Cli::parse();
    match cli.command {
        Command::Fibercone(a) => cmd_fibercone(&a),
        Command::Degrad(a) => cmd_degrad(&a),
        Command::FindReduction(a) => cmd_find_reduction(&a),
        Command::VerifyReduction(a) => cmd_verify(&a),
        Command::Multiplicity(a) => cmd_multiplicity(&a),
        Command::PaperExamples(a) => cmd_paper_examples(&a),
    }
}
