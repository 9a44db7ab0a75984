//! Named verification suites over one algebra, plus the engine and combinatorics checks they use.
//!
//! Suites run in the fixed order of [`Suite::ALL`]; within a suite, records follow multipartition
//! enumeration order, so repeated runs produce identical output.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, Elem};
use crate::cellular::{basis_check, eta_check, prime_check, star_check, triangularity_check, CellularBasis, Kind};
use crate::coeff::{Backend, Field, RatFunc};
use crate::combinatorics::{
    multipartitions, row_shape, w_ab, w_lambda, w_lambda_factorization, Multipartition, Perm, StdTableau,
};
use crate::error::{Error, Result};
use crate::report::{values, CheckRecord, Witness};
use crate::schur::{self, Method};
use crate::seminormal::{self as sn, Seminormal};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Engine,
    Combinatorics,
    Cellular,
    Seminormal,
    Psi,
    Dual,
    Trace,
    Schur,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Engine,
        Suite::Combinatorics,
        Suite::Cellular,
        Suite::Seminormal,
        Suite::Psi,
        Suite::Dual,
        Suite::Trace,
        Suite::Schur,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Engine => "engine",
            Suite::Combinatorics => "combinatorics",
            Suite::Cellular => "cellular",
            Suite::Seminormal => "seminormal",
            Suite::Psi => "psi",
            Suite::Dual => "dual",
            Suite::Trace => "trace",
            Suite::Schur => "schur",
        }
    }

    /// Needs a semisimple specialization.
    pub fn needs_semisimple(self) -> bool {
        matches!(self, Suite::Seminormal | Suite::Psi | Suite::Dual | Suite::Trace | Suite::Schur)
    }

    /// Expands `all` and removes duplicates, keeping the canonical order.
    pub fn parse_list(names: &[String]) -> Result<Vec<Suite>> {
        let mut out = Vec::new();
        for name in names {
            if name == "all" {
                out.extend(Suite::ALL);
            } else {
                out.push(name.parse()?);
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                let known: Vec<_> = Suite::ALL.iter().map(|x| x.name()).collect();
                Error::Usage(format!("unknown suite `{s}`; expected all or one of {}", known.join(", ")))
            })
    }
}

/// Whether the backend carries the `′` involution (symbolic only).
pub fn has_involution<B: Backend>(alg: &Algebra<B>) -> bool {
    alg.backend().prime_coeff(&B::C::one()).is_ok()
}

/// Runs one suite. `seed` drives the random triples of the engine suite.
pub fn run_suite<B: Backend>(alg: &Algebra<B>, suite: Suite, methods: &[Method], seed: u64) -> Result<Vec<CheckRecord>> {
    let (r, n) = (alg.r(), alg.n());
    if suite.needs_semisimple() {
        alg.require_semisimple()?;
    }
    let mut out = Vec::new();
    match suite {
        Suite::Engine => {
            out.extend(relation_checks(alg)?);
            out.extend(jucys_murphy_checks(alg)?);
            out.extend(trace_form_checks(alg)?);
            out.extend(law_checks(alg, seed, 8)?);
            out.push(dimension_check(alg));
        }
        Suite::Combinatorics => {
            out.push(example_w_lambda_check());
            out.extend(length_checks(r, n));
        }
        Suite::Cellular => {
            let m = CellularBasis::new(alg, Kind::Murphy)?;
            let d = CellularBasis::new(alg, Kind::Dual)?;
            for b in [&m, &d] {
                out.push(basis_check(alg, b));
                out.extend(triangularity_check(alg, b)?);
                out.push(star_check(alg, b));
            }
            if has_involution(alg) {
                out.push(prime_check(alg, &m, &d)?);
            }
            out.extend(eta_check(alg)?);
        }
        Suite::Seminormal => {
            let s = Seminormal::new(alg)?;
            out.extend(sn::idempotent_checks(&s)?);
            out.extend(sn::matrix_unit_checks(&s)?);
            out.extend(sn::central_checks(&s)?);
            out.extend(sn::spectral_checks(&s)?);
            out.extend(sn::gamma_checks(&s)?);
            out.extend(sn::orthogonality_checks(&s)?);
            out.extend(sn::submodule_checks(&s)?);
            out.extend(sn::eta_rep_check(alg)?);
        }
        Suite::Psi => out.extend(sn::psi_phi_checks(&Seminormal::new(alg)?)?),
        Suite::Dual => {
            if has_involution(alg) {
                out.extend(sn::dual_checks(&Seminormal::new(alg)?)?);
            }
            out.extend(schur::symmetry_checks(r, n));
        }
        Suite::Trace => {
            let s = Seminormal::new(alg)?;
            out.extend(schur::z_trace_checks(&s)?);
            let values = multipartitions(n, r)
                .into_iter()
                .map(|l| schur::schur_trace(&s, &l).map(|v| (l, v)))
                .collect::<Result<Vec<_>>>()?;
            out.push(sn::trace_decomposition_check(alg, &values)?);
            out.extend(schur::schur_sum_checks(r, n)?);
            out.extend(schur::eta_checks(r, n, &[Method::Hook, Method::Symbol])?);
        }
        Suite::Schur => {
            out.extend(schur::agreement_checks(&Seminormal::new(alg)?, methods)?);
            out.extend(schur::gamma_closed_checks(r, n));
            out.extend(schur::shift_invariance_checks(r, n, 1)?);
            if r <= 2 {
                out.extend(schur::group_algebra_checks(r, n)?);
            }
        }
    }
    Ok(out)
}

fn mul<B: Backend>(alg: &Algebra<B>, a: &Elem<B::C>, b: &Elem<B::C>) -> Result<Elem<B::C>> {
    alg.mul(a, b)
}

fn commutes<B: Backend>(alg: &Algebra<B>, a: &Elem<B::C>, b: &Elem<B::C>) -> Result<bool> {
    Ok(mul(alg, a, b)? == mul(alg, b, a)?)
}

fn minus_scalar<B: Backend>(alg: &Algebra<B>, a: &Elem<B::C>, f: &RatFunc) -> Result<Elem<B::C>> {
    Ok(a.sub(&alg.scalar(alg.lift(f)?)))
}

fn record(check: &str, failure: Option<String>) -> CheckRecord {
    CheckRecord::from_failure(check, None, failure.map(Witness::Text))
}

/// Every defining relation on the generators, one record per relation family.
pub fn relation_checks<B: Backend>(alg: &Algebra<B>) -> Result<Vec<CheckRecord>> {
    let n = alg.n();
    let t = (0..n).map(|i| alg.gen_t(i)).collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    if n == 0 {
        return Ok(out);
    }
    let mut cyc = alg.unit();
    for s in 1..=alg.r() {
        cyc = mul(alg, &cyc, &minus_scalar(alg, &t[0], &RatFunc::big_q(s))?)?;
    }
    out.push(record("engine.cyclotomic", (!cyc.is_zero()).then(|| "∏(T_0 − Q_s) ≠ 0".into())));

    let mut quad = None;
    for (i, ti) in t.iter().enumerate().skip(1) {
        let a = ti.add(&alg.unit());
        let b = ti.sub(&alg.unit().scale(alg.q()));
        if quad.is_none() && !mul(alg, &a, &b)?.is_zero() {
            quad = Some(format!("T_{i}"));
        }
    }
    out.push(record("engine.quadratic", quad));

    let mut braid = None;
    if n >= 2 {
        let l = mul(alg, &mul(alg, &t[0], &t[1])?, &mul(alg, &t[0], &t[1])?)?;
        let rr = mul(alg, &mul(alg, &t[1], &t[0])?, &mul(alg, &t[1], &t[0])?)?;
        if l != rr {
            braid = Some("T_0T_1T_0T_1".into());
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let ok = if i >= 1 && j == i + 1 {
                mul(alg, &mul(alg, &t[i], &t[j])?, &t[i])? == mul(alg, &mul(alg, &t[j], &t[i])?, &t[j])?
            } else if j >= i + 2 {
                commutes(alg, &t[i], &t[j])?
            } else {
                true
            };
            if braid.is_none() && !ok {
                braid = Some(format!("T_{i}, T_{j}"));
            }
        }
    }
    out.push(record("engine.braid", braid));
    Ok(out)
}

/// `L_m = q^{1−m} T_{m−1}⋯T_0⋯T_{m−1}` and the four commutation properties of the `L_m`.
pub fn jucys_murphy_checks<B: Backend>(alg: &Algebra<B>) -> Result<Vec<CheckRecord>> {
    let n = alg.n();
    let t = (0..n).map(|i| alg.gen_t(i)).collect::<Result<Vec<_>>>()?;
    let l = (1..=n).map(|k| alg.elem_l(k)).collect::<Result<Vec<_>>>()?;
    let mut def = None;
    for k in 1..=n {
        let mut w = t[0].clone();
        for ti in &t[1..k] {
            w = mul(alg, &mul(alg, ti, &w)?, ti)?;
        }
        if def.is_none() && w.scale(&alg.lift(&RatFunc::q_pow(1 - k as i64))?) != l[k - 1] {
            def = Some(format!("L_{k}"));
        }
    }
    let mut comm = None;
    for a in 0..n {
        for b in a + 1..n {
            if comm.is_none() && !commutes(alg, &l[a], &l[b])? {
                comm = Some(format!("L_{}, L_{}", a + 1, b + 1));
            }
        }
    }
    let (mut far, mut sym, mut prefix) = (None, None, None);
    for i in 1..n {
        for m in 1..=n {
            if far.is_none() && m != i && m != i + 1 && !commutes(alg, &t[i], &l[m - 1])? {
                far = Some(format!("T_{i}, L_{m}"));
            }
        }
        let prod = mul(alg, &l[i - 1], &l[i])?;
        let sum = l[i - 1].add(&l[i]);
        if sym.is_none() && !(commutes(alg, &t[i], &prod)? && commutes(alg, &t[i], &sum)?) {
            sym = Some(format!("T_{i}"));
        }
        for a in [RatFunc::big_q(1), RatFunc::q()] {
            let mut p = alg.unit();
            for m in 1..=n {
                p = mul(alg, &p, &minus_scalar(alg, &l[m - 1], &a)?)?;
                if prefix.is_none() && m != i && !commutes(alg, &t[i], &p)? {
                    prefix = Some(format!("T_{i}, m={m}, a={a}"));
                }
            }
        }
    }
    Ok(vec![
        record("engine.jm_definition", def),
        record("engine.jm_commute", comm),
        record("engine.jm_far_commute", far),
        record("engine.jm_symmetric", sym),
        record("engine.jm_prefix_product", prefix),
    ])
}

/// `τ(L^c T_x T_y) = q^{ℓ(x)}` when `c = 0` and `x = y^{−1}`, and zero otherwise.
pub fn trace_form_checks<B: Backend>(alg: &Algebra<B>) -> Result<Vec<CheckRecord>> {
    let n = alg.n();
    let perms = Perm::all(n);
    let ty: Vec<_> = perms.iter().map(|y| alg.t_w(y)).collect();
    let mut failure = None;
    'outer: for idx in 0..alg.dim() as u32 {
        let b = alg.basis_index(idx);
        let lhs = alg.basis(idx);
        for (y, t) in perms.iter().zip(&ty) {
            let v = alg.tau(&mul(alg, &lhs, t)?);
            let expect = if b.c.iter().all(|&c| c == 0) && b.w == y.inverse() {
                alg.lift(&RatFunc::q_pow(b.w.length() as i64))?
            } else {
                B::C::zero()
            };
            if v != expect {
                failure = Some(values([("basis", format!("{b:?}")), ("y", y.cycle_string()), ("tau", v.to_string())]));
                break 'outer;
            }
        }
    }
    Ok(vec![CheckRecord::from_failure("engine.trace_pairing", None, failure)])
}

/// Ring laws and the trace symmetry `τ(ab) = τ(ba)` on seeded random triples. `*` must be an
/// anti-involution there; with the symbolic backend `′` must also be multiplicative.
pub fn law_checks<B: Backend>(alg: &Algebra<B>, seed: u64, trials: usize) -> Result<Vec<CheckRecord>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let prime = has_involution(alg);
    let (mut assoc, mut unit, mut trace, mut star, mut inv) = (None, None, None, None, None);
    for trial in 0..trials {
        let [a, b, c] = [0; 3].map(|_| alg.random_elem(&mut rng, 4));
        let ab = mul(alg, &a, &b)?;
        let tag = || Some(format!("trial {trial}"));
        if assoc.is_none() && mul(alg, &ab, &c)? != mul(alg, &a, &mul(alg, &b, &c)?)? {
            assoc = tag();
        }
        if unit.is_none() && (mul(alg, &a, &alg.unit())? != a || mul(alg, &alg.unit(), &a)? != a) {
            unit = tag();
        }
        if trace.is_none() && alg.tau(&ab) != alg.tau(&mul(alg, &b, &a)?) {
            trace = tag();
        }
        if star.is_none() && (alg.star(&ab) != mul(alg, &alg.star(&b), &alg.star(&a))? || alg.star(&alg.star(&a)) != a) {
            star = tag();
        }
        if prime && inv.is_none() {
            let (pa, pb) = (alg.prime(&a)?, alg.prime(&b)?);
            if alg.prime(&ab)? != mul(alg, &pa, &pb)? || alg.prime(&pa)? != a {
                inv = tag();
            }
        }
    }
    let mut out = vec![
        record("engine.associative", assoc),
        record("engine.unit", unit),
        record("engine.trace_symmetric", trace),
        record("engine.star_anti", star),
    ];
    if prime {
        out.push(record("engine.prime_involution", inv));
    }
    Ok(out)
}

/// `dim = r^n n!`.
pub fn dimension_check<B: Backend>(alg: &Algebra<B>) -> CheckRecord {
    record("engine.dimension", alg.dim_check().err().map(|e| e.to_string()))
}

/// `t^λ`, `t_λ`, `w_λ = (1,6,5,3,7,4,8)(2,9)` and its factorization for `λ = ((2,1,1),(2,1),(2))`.
pub fn example_w_lambda_check() -> CheckRecord {
    let lam: Multipartition = "((2,1,1),(2,1),(2))".parse().expect("valid literal");
    let w = w_lambda(&lam);
    let bar = w_lambda(&row_shape(&lam));
    let (factors, rest) = w_lambda_factorization(&lam);
    let got = [
        w.cycle_string(),
        bar.cycle_string(),
        rest.cycle_string(),
        factors.iter().map(Perm::cycle_string).collect::<Vec<_>>().join(" "),
        StdTableau::row_tableau(&lam).to_string(),
        StdTableau::col_tableau(&lam).to_string(),
    ];
    let expect = [
        "(1,6,5,3,7,4,8)(2,9)",
        "(1,6,4,9,2,7,5,3,8)",
        "(4,5)(7,9,8)",
        "(1,6,2,7,3,8,4,9,5) (1,3,5,2,4)",
        "([[1,2],[3],[4]],[[5,6],[7]],[[8,9]])",
        "([[6,9],[7],[8]],[[3,5],[4]],[[1,2]])",
    ];
    let failure = (got != expect).then(|| values(["w", "w_bar", "rest", "factors", "t_top", "t_bottom"].into_iter().zip(got)));
    CheckRecord::from_failure("combinatorics.example_w_lambda", Some(lam.to_string()), failure)
}

/// Length additivity of `w_λ = w_{λ̄,1}⋯w_{λ̄,r−1} w_{λ/λ̄}`, `ℓ(w_{a,n−a}) = a(n−a)` and
/// `ℓ(w_{λ̄}) = Σ_{s<t} |λ^{(s)}||λ^{(t)}|`.
pub fn length_checks(r: usize, n: usize) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    let bad = (0..=n).find(|&a| w_ab(a, n - a).length() != a * (n - a));
    out.push(record("combinatorics.w_ab_length", bad.map(|a| format!("a={a}"))));
    for lam in multipartitions(n, r) {
        let (factors, rest) = w_lambda_factorization(&lam);
        let w = w_lambda(&lam);
        let bar = w_lambda(&row_shape(&lam));
        let product = factors.iter().fold(Perm::identity(n), |acc, f| acc.then(f));
        let sizes: Vec<usize> = lam.comps().iter().map(|p| p.size()).collect();
        let cross: usize = (0..r).flat_map(|s| (s + 1..r).map(move |t| (s, t))).map(|(s, t)| sizes[s] * sizes[t]).sum();
        let failure = if product != bar || product.then(&rest) != w {
            Some("factorization")
        } else if w.length() != factors.iter().map(Perm::length).sum::<usize>() + rest.length() {
            Some("length additivity")
        } else if bar.length() != cross {
            Some("length of w_bar")
        } else {
            None
        };
        out.push(CheckRecord::from_failure(
            "combinatorics.w_lambda_lengths",
            Some(lam.to_string()),
            failure.map(|f| Witness::Text(f.into())),
        ));
    }
    out
}
