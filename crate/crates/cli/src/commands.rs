use akalg::algebra::Algebra;
use akalg::coeff::{Backend, CoeffError, Eval, EvalPoint, RatFunc, Symbolic};
use akalg::combinatorics::{gamma_product, multipartitions, std_tableaux, Multipartition, StdTableau};
use akalg::report::Status;
use akalg::schur::{schur_formula, schur_trace, Method};
use akalg::seminormal::Seminormal;
use akalg::verify::{run_suite, Suite};
use akalg::Error;
use num_rational::BigRational;

use crate::args::{BackendKind, Common, SchurArgs, ShapeArgs, VerifyArgs};
use crate::output::{MethodValue, SchurRecord, Sink, Summary, TableauRecord, UnitRecord};

/// Exit codes: 0 pass, 1 verification failure, 2 usage error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
}

pub type CmdResult = Result<Outcome, Error>;

/// Usage errors exit with 2; anything else raised during a computation exits with 1.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Usage(_) | Error::ShapeMismatch { .. } | Error::Comb(_) | Error::TooLarge { .. } | Error::NotSemisimple(_) => 2,
        Error::Coeff(
            CoeffError::PoleAtPoint { .. }
            | CoeffError::ZeroQ
            | CoeffError::TooManyParams(_)
            | CoeffError::ZeroR
            | CoeffError::NoSemisimplePoint,
        ) => 2,
        _ => 1,
    }
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}

fn io_err(e: std::io::Error) -> Error {
    Error::Internal(format!("writing output: {e}"))
}

fn r_of(c: &Common) -> usize {
    c.r as usize
}

fn seeded_point(c: &Common) -> Result<EvalPoint, Error> {
    let seed = c.seed.ok_or_else(|| usage("--backend eval needs --seed"))?;
    Ok(EvalPoint::from_seed(r_of(c), c.n, seed)?)
}

/// `r^n n!`, saturating.
fn algebra_dim(r: usize, n: usize) -> usize {
    (1..=n).fold(1usize, |acc, k| acc.saturating_mul(r).saturating_mul(k))
}

fn symbolic_algebra(c: &Common) -> Result<Algebra<Symbolic>, Error> {
    let dim = algebra_dim(r_of(c), c.n);
    if dim > c.max_dim {
        return Err(Error::TooLarge { dim, max: c.max_dim });
    }
    Algebra::new(Symbolic::new(r_of(c))?, c.n)
}

fn eval_algebra(c: &Common, point: EvalPoint) -> Result<Algebra<Eval>, Error> {
    Algebra::new(Eval::new(point), c.n)
}

fn parse_shape(c: &Common, s: &str) -> Result<Multipartition, Error> {
    let shape: Multipartition = s.parse()?;
    if shape.r() != r_of(c) || shape.n() != c.n {
        return Err(Error::ShapeMismatch { shape: shape.to_string(), r: r_of(c), n: c.n });
    }
    Ok(shape)
}

fn shapes(c: &Common, filter: Option<&str>) -> Result<Vec<Multipartition>, Error> {
    match filter {
        Some(s) => Ok(vec![parse_shape(c, s)?]),
        None => Ok(multipartitions(c.n, r_of(c))),
    }
}

fn parse_methods(names: &[String]) -> Result<Vec<Method>, Error> {
    let mut out = names.iter().map(|s| s.trim().parse()).collect::<Result<Vec<Method>, Error>>()?;
    out.dedup();
    if out.is_empty() {
        return Err(usage("no method given"));
    }
    Ok(out)
}

/// `q=a,Q1=b,…` with every parameter present exactly once.
pub fn parse_specialization(spec: &str, r: usize) -> Result<EvalPoint, Error> {
    let mut q = None;
    let mut params: Vec<Option<BigRational>> = vec![None; r];
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, value) = item.split_once('=').ok_or_else(|| usage(format!("expected name=value, got `{item}`")))?;
        let v: BigRational = value
            .trim()
            .parse()
            .map_err(|_| usage(format!("`{value}` is not a rational number")))?;
        let slot = match key.trim() {
            "q" => &mut q,
            k => {
                let s: usize = k
                    .strip_prefix('Q')
                    .and_then(|i| i.parse().ok())
                    .filter(|&s| (1..=r).contains(&s))
                    .ok_or_else(|| usage(format!("unknown parameter `{k}`; expected q or Q1..Q{r}")))?;
                &mut params[s - 1]
            }
        };
        if slot.replace(v).is_some() {
            return Err(usage(format!("parameter `{}` given twice", key.trim())));
        }
    }
    let q = q.ok_or_else(|| usage("specialization must set q"))?;
    let params = params
        .into_iter()
        .enumerate()
        .map(|(i, p)| p.ok_or_else(|| usage(format!("specialization must set Q{}", i + 1))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(EvalPoint::new(q, params)?)
}

fn schur_values<B: Backend>(
    backend: &B,
    sn: Option<&Seminormal<B>>,
    shape: &Multipartition,
    methods: &[Method],
) -> Result<Vec<(Method, B::C)>, Error> {
    methods
        .iter()
        .map(|&m| {
            let v = match (m, sn) {
                (Method::Trace, Some(sn)) => schur_trace(sn, shape)?,
                (Method::Trace, None) => return Err(Error::Internal("trace method without an algebra".into())),
                (m, _) => backend.lift(&schur_formula(shape, m)?)?,
            };
            Ok((m, v))
        })
        .collect()
}

fn schur_record<T: PartialEq + ToString>(shape: &Multipartition, backend: String, vals: Vec<(Method, T)>) -> SchurRecord {
    let agree = vals.windows(2).all(|w| w[0].1 == w[1].1);
    SchurRecord {
        lambda: shape.to_string(),
        backend,
        dim: std_tableaux(shape).len(),
        values: vals
            .into_iter()
            .map(|(m, v)| MethodValue { method: m.to_string(), value: v.to_string() })
            .collect(),
        agree,
        status: if agree { Status::Pass } else { Status::Fail },
    }
}

/// Computes over `backend`, then optionally evaluates the symbolic values at `point`.
fn emit_schur<B: Backend>(
    sink: &mut Sink,
    backend: &B,
    alg: Option<&Algebra<B>>,
    shapes: &[Multipartition],
    methods: &[Method],
    specialize: Option<(&EvalPoint, fn(&B::C, &EvalPoint) -> Result<BigRational, Error>)>,
) -> CmdResult {
    let sn = alg.map(Seminormal::new).transpose()?;
    let label = match specialize {
        Some((p, _)) => format!("specialized[{p}]"),
        None => backend.label(),
    };
    let mut failed = 0;
    for shape in shapes {
        let vals = schur_values(backend, sn.as_ref(), shape, methods)?;
        let rec = match specialize {
            Some((p, eval)) => {
                let at = vals.iter().map(|(m, v)| Ok((*m, eval(v, p)?))).collect::<Result<Vec<_>, Error>>()?;
                schur_record(shape, label.clone(), at)
            }
            None => schur_record(shape, label.clone(), vals),
        };
        failed += usize::from(!rec.agree);
        sink.schur(&rec).map_err(io_err)?;
    }
    finish(sink, "schur", label, shapes.len(), failed)
}

fn finish(sink: &mut Sink, command: &str, backend: String, total: usize, failed: usize) -> CmdResult {
    let status = if failed == 0 { Status::Pass } else { Status::Fail };
    sink.summary(&Summary { command, backend, total, failed, status }).map_err(io_err)?;
    Ok(if failed == 0 { Outcome::Pass } else { Outcome::Fail })
}

pub fn cmd_schur(a: &SchurArgs, sink: &mut Sink) -> CmdResult {
    let c = &a.common;
    let methods = parse_methods(&a.method)?;
    let shapes = shapes(c, a.lambda.as_deref())?;
    let needs_alg = methods.contains(&Method::Trace);
    if let Some(spec) = &a.specialize {
        if c.backend == BackendKind::Eval {
            return Err(usage("--specialize fixes the point itself; drop --backend eval"));
        }
        let point = parse_specialization(spec, r_of(c))?.checked_for(c.n);
        if needs_alg && point.ph_zero {
            return Err(Error::NotSemisimple(format!(
                "{point} (the trace method needs P_H(q) ≠ 0, the semisimplicity criterion; \
                 use --method gamma,hook,symbol for the rational functions alone)"
            )));
        }
        // Every method yields a rational function in q, Q_1..Q_r; the seminormal
        // construction itself needs separated residues, which q = 1 destroys.
        let backend = Symbolic::new(r_of(c))?;
        let alg = needs_alg.then(|| symbolic_algebra(c)).transpose()?;
        let eval: fn(&RatFunc, &EvalPoint) -> Result<BigRational, Error> = |v, p| Ok(v.evaluate(p)?);
        return emit_schur(sink, &backend, alg.as_ref(), &shapes, &methods, Some((&point, eval)));
    }
    match c.backend {
        BackendKind::Symbolic => {
            let backend = Symbolic::new(r_of(c))?;
            let alg = needs_alg.then(|| symbolic_algebra(c)).transpose()?;
            emit_schur(sink, &backend, alg.as_ref(), &shapes, &methods, None)
        }
        BackendKind::Eval => {
            let point = seeded_point(c)?;
            let backend = Eval::new(point.clone());
            let alg = needs_alg.then(|| eval_algebra(c, point)).transpose()?;
            emit_schur(sink, &backend, alg.as_ref(), &shapes, &methods, None)
        }
    }
}

fn run_verify<B: Backend>(alg: &Algebra<B>, a: &VerifyArgs, sink: &mut Sink) -> CmdResult {
    let suites = Suite::parse_list(&a.suite)?;
    let methods = parse_methods(&a.method)?;
    let filter = a.lambda.as_deref().map(|s| parse_shape(&a.common, s)).transpose()?.map(|l| l.to_string());
    let seed = a.common.seed.unwrap_or(0);
    let (mut total, mut failed) = (0, 0);
    for suite in suites {
        for rec in run_suite(alg, suite, &methods, seed)? {
            if filter.as_ref().is_some_and(|f| rec.lambda.as_ref().is_some_and(|l| l != f)) {
                continue;
            }
            total += 1;
            failed += usize::from(!rec.passed());
            sink.check(suite.name(), &rec).map_err(io_err)?;
        }
    }
    finish(sink, "verify", alg.backend().label(), total, failed)
}

pub fn cmd_verify(a: &VerifyArgs, sink: &mut Sink) -> CmdResult {
    // Reject bad names before any algebra is built.
    Suite::parse_list(&a.suite)?;
    parse_methods(&a.method)?;
    match a.common.backend {
        BackendKind::Symbolic => run_verify(&symbolic_algebra(&a.common)?, a, sink),
        BackendKind::Eval => run_verify(&eval_algebra(&a.common, seeded_point(&a.common)?)?, a, sink),
    }
}

fn run_tableaux<B: Backend>(backend: &B, shape: &Multipartition, sink: &mut Sink) -> CmdResult {
    let bottom = StdTableau::col_tableau(shape);
    sink.note("marker", "t_top", &StdTableau::row_tableau(shape).to_string()).map_err(io_err)?;
    sink.note("marker", "t_bottom", &bottom.to_string()).map_err(io_err)?;
    sink.note("marker", "w_lambda", &bottom.d().cycle_string()).map_err(io_err)?;
    let tabs = std_tableaux(shape);
    for (index, t) in tabs.iter().enumerate() {
        let d = t.d();
        let rec = TableauRecord {
            lambda: shape.to_string(),
            index,
            tableau: t.to_string(),
            d: d.one_line().to_vec(),
            d_cycles: d.cycle_string(),
            length: d.length(),
            residues: t.residues().iter().map(ToString::to_string).collect(),
            gamma: backend.lift(&gamma_product(t))?.to_string(),
        };
        sink.tableau(&rec).map_err(io_err)?;
        if sink.closed() {
            break;
        }
    }
    finish(sink, "tableaux", backend.label(), tabs.len(), 0)
}

pub fn cmd_tableaux(a: &ShapeArgs, sink: &mut Sink) -> CmdResult {
    let shape = parse_shape(&a.common, &a.lambda)?;
    match a.common.backend {
        BackendKind::Symbolic => run_tableaux(&Symbolic::new(r_of(&a.common))?, &shape, sink),
        BackendKind::Eval => run_tableaux(&Eval::new(seeded_point(&a.common)?), &shape, sink),
    }
}

fn run_units<B: Backend>(alg: &Algebra<B>, shape: &Multipartition, sink: &mut Sink) -> CmdResult {
    let sn = Seminormal::new(alg)?;
    let tabs = std_tableaux(shape);
    for s in &tabs {
        for t in &tabs {
            let f = sn.matrix_unit(s, t)?;
            let rec = UnitRecord {
                lambda: shape.to_string(),
                backend: alg.backend().label(),
                s: s.to_string(),
                t: t.to_string(),
                terms: alg.serialize(&f),
            };
            sink.unit(&rec).map_err(io_err)?;
        }
    }
    finish(sink, "units", alg.backend().label(), tabs.len() * tabs.len(), 0)
}

pub fn cmd_units(a: &ShapeArgs, sink: &mut Sink) -> CmdResult {
    let shape = parse_shape(&a.common, &a.lambda)?;
    match a.common.backend {
        BackendKind::Symbolic => run_units(&symbolic_algebra(&a.common)?, &shape, sink),
        BackendKind::Eval => run_units(&eval_algebra(&a.common, seeded_point(&a.common)?)?, &shape, sink),
    }
}
