//! The twelve acceptance criteria, one PASS/FAIL line each. Exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use akalg::algebra::Algebra;
use akalg::coeff::{Backend, Eval, EvalPoint, Symbolic};
use akalg::combinatorics::{gamma_recursive, multipartitions, std_tableaux, Multipartition};
use akalg::report::{values, CheckRecord};
use akalg::schur::{self, Method};
use akalg::seminormal::{self as sn, Seminormal};
use akalg::verify::{self, Suite};
use akalg::Result;

fn sym(r: usize, n: usize) -> Result<Algebra<Symbolic>> {
    Algebra::new(Symbolic::new(r)?, n)
}

fn eval(r: usize, n: usize, seed: u64) -> Result<Algebra<Eval>> {
    Algebra::new(Eval::new(EvalPoint::from_seed(r, n, seed)?), n)
}

/// Seeds of the evaluation points used wherever a criterion asks for EVAL.
const SEEDS: [u64; 3] = [1, 2, 3];

fn agreement() -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    for (r, n) in [(1, 2), (1, 3), (1, 4), (2, 2), (3, 2)] {
        out.extend(schur::agreement_checks(&Seminormal::new(&sym(r, n)?)?, &Method::ALL)?);
    }
    for seed in SEEDS {
        out.extend(schur::agreement_checks(&Seminormal::new(&eval(2, 3, seed)?)?, &Method::ALL)?);
    }
    Ok(out)
}

fn eta_trace<B: Backend>(alg: &Algebra<B>) -> Result<Vec<CheckRecord>> {
    let s = Seminormal::new(alg)?;
    (1..=alg.r())
        .map(|t| {
            let shape = Multipartition::eta(alg.n(), alg.r(), t);
            let v = schur::schur_trace(&s, &shape)?;
            let expect = alg.lift(&schur::schur_eta_closed(alg.n(), alg.r(), t))?;
            let w = (v != expect).then(|| values([("trace", v.to_string()), ("closed", expect.to_string())]));
            Ok(CheckRecord::from_failure("eta_trace", Some(shape.to_string()), w))
        })
        .collect()
}

fn eta_closed() -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    for r in 1..=3 {
        for n in 1..=3 {
            out.extend(schur::eta_checks(r, n, &[Method::Gamma, Method::Hook, Method::Symbol])?);
            if n <= 2 {
                out.extend(eta_trace(&sym(r, n)?)?);
            }
        }
    }
    Ok(out)
}

fn z_trace() -> Result<Vec<CheckRecord>> {
    let mut out = schur::z_trace_checks(&Seminormal::new(&sym(2, 2)?)?)?;
    out.extend(schur::z_trace_checks(&Seminormal::new(&sym(3, 2)?)?)?);
    out.extend(schur::z_trace_checks(&Seminormal::new(&eval(2, 3, SEEDS[0])?)?)?);
    Ok(out)
}

fn matrix_unit_laws<B: Backend>(alg: &Algebra<B>) -> Result<Vec<CheckRecord>> {
    let s = Seminormal::new(alg)?;
    let mut out = sn::matrix_unit_checks(&s)?;
    out.extend(sn::idempotent_checks(&s)?);
    out.extend(sn::central_checks(&s)?);
    Ok(out)
}

fn matrix_units() -> Result<Vec<CheckRecord>> {
    let mut out = matrix_unit_laws(&sym(2, 2)?)?;
    out.extend(matrix_unit_laws(&eval(2, 3, SEEDS[0])?)?);
    Ok(out)
}

fn spectral() -> Result<Vec<CheckRecord>> {
    let mut out = sn::spectral_checks(&Seminormal::new(&sym(2, 2)?)?)?;
    out.extend(sn::spectral_checks(&Seminormal::new(&sym(3, 2)?)?)?);
    Ok(out)
}

fn fixtures() -> Result<Vec<CheckRecord>> {
    let mut out = vec![verify::example_w_lambda_check()];
    for r in 1..=3 {
        for n in 1..=6 {
            out.extend(verify::length_checks(r, n));
        }
    }
    Ok(out)
}

fn gamma_all<B: Backend>(alg: &Algebra<B>) -> Result<Vec<CheckRecord>> {
    let s = Seminormal::new(alg)?;
    let mut out = sn::gamma_checks(&s)?;
    out.extend(schur::gamma_closed_checks(alg.r(), alg.n()));
    for shape in multipartitions(alg.n(), alg.r()) {
        let mut failure = None;
        for t in std_tableaux(&shape) {
            let algebraic = s.gamma_algebraic(&t)?;
            let recursive = alg.lift(&gamma_recursive(&t))?;
            if failure.is_none() && algebraic != recursive {
                failure = Some(values([("t", t.to_string()), ("algebraic", algebraic.to_string())]));
            }
        }
        out.push(CheckRecord::from_failure("gamma_algebraic_per_tableau", Some(shape.to_string()), failure));
    }
    Ok(out)
}

fn gamma_consistency() -> Result<Vec<CheckRecord>> {
    let mut out = gamma_all(&sym(2, 2)?)?;
    out.extend(gamma_all(&sym(3, 2)?)?);
    out.extend(gamma_all(&eval(2, 3, SEEDS[0])?)?);
    Ok(out)
}

fn decomposition_at<B: Backend>(alg: &Algebra<B>) -> Result<CheckRecord> {
    let s = Seminormal::new(alg)?;
    let vals = multipartitions(alg.n(), alg.r())
        .into_iter()
        .map(|l| schur::schur_trace(&s, &l).map(|v| (l, v)))
        .collect::<Result<Vec<_>>>()?;
    sn::trace_decomposition_check(alg, &vals)
}

fn trace_decomposition() -> Result<Vec<CheckRecord>> {
    let mut out = vec![decomposition_at(&sym(2, 2)?)?, decomposition_at(&eval(2, 3, SEEDS[0])?)?];
    out.extend(schur::schur_sum_checks(2, 2)?);
    out.extend(schur::schur_sum_checks(2, 3)?);
    Ok(out)
}

fn group_algebra() -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    for r in 1..=2 {
        for n in 1..=3 {
            out.extend(schur::group_algebra_checks(r, n)?);
        }
    }
    Ok(out)
}

fn involution() -> Result<Vec<CheckRecord>> {
    sn::dual_checks(&Seminormal::new(&sym(2, 2)?)?)
}

fn psi_phi() -> Result<Vec<CheckRecord>> {
    sn::psi_phi_checks(&Seminormal::new(&sym(2, 2)?)?)
}

fn engine() -> Result<Vec<CheckRecord>> {
    let mut out = verify::run_suite(&sym(2, 2)?, Suite::Engine, &[], 0)?;
    for r in 1..=3 {
        for n in 1..=3 {
            out.extend(verify::run_suite(&eval(r, n, SEEDS[0])?, Suite::Engine, &[], 0)?);
        }
    }
    Ok(out)
}

type Criterion = (&'static str, fn() -> Result<Vec<CheckRecord>>);

const CRITERIA: [Criterion; 12] = [
    ("four-way Schur agreement", agreement),
    ("one-row closed form", eta_closed),
    ("z-trace closed form", z_trace),
    ("matrix-unit laws", matrix_units),
    ("spectral identities", spectral),
    ("combinatorial fixtures", fixtures),
    ("gamma consistency", gamma_consistency),
    ("trace decomposition", trace_decomposition),
    ("group-algebra specialization", group_algebra),
    ("involution suite", involution),
    ("Psi/Phi suite", psi_phi),
    ("engine health", engine),
];

fn main() -> ExitCode {
    let mut failed = 0;
    for (i, (name, run)) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let line = match run() {
            Ok(recs) if recs.is_empty() => format!("FAIL {:>2} {name}: no checks ran", i + 1),
            Ok(recs) => match recs.iter().find(|r| !r.passed()) {
                None => format!("PASS {:>2} {name}: {} checks ({:.1?})", i + 1, recs.len(), start.elapsed()),
                Some(bad) => format!("FAIL {:>2} {name}: {} {:?} {:?}", i + 1, bad.check, bad.lambda, bad.witness),
            },
            Err(e) => format!("FAIL {:>2} {name}: error: {e}", i + 1),
        };
        if line.starts_with("FAIL") {
            failed += 1;
        }
        println!("{line}");
    }
    println!("acceptance: {} of {} criteria pass", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
