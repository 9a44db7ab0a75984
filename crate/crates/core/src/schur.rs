//! Schur elements `s_λ` by four independent routes, plus their symmetries.
//!
//! * `Trace`: `1/τ(F_{t^λ})` computed inside the algebra.
//! * `Gamma`: the product of `γ_{t_λ}` and the primed `γ_{t^{λ'}}`.
//! * `Hook`: a closed product over hook lengths and residues.
//! * `Symbol`: a closed product over beta numbers.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use serde::Serialize;

use crate::algebra::Algebra;
use crate::coeff::{q_fact, q_int, semisimplicity_poly, Backend, Factored, Field, RatFunc};
use crate::combinatorics::{
    beta_symbol, gamma_recursive, gamma_row_closed, multipartitions, std_tableaux, w_lambda, Multipartition,
    StdTableau,
};
use crate::error::{Error, Result};
use crate::report::{values, CheckRecord, Status, Witness};
use crate::seminormal::Seminormal;

/// A route to `s_λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Trace,
    Gamma,
    Hook,
    Symbol,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Trace, Method::Gamma, Method::Hook, Method::Symbol];

    /// Needs only combinatorics and coefficient arithmetic.
    pub fn is_combinatorial(self) -> bool {
        self != Method::Trace
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Trace => "trace",
            Method::Gamma => "gamma",
            Method::Hook => "hook",
            Method::Symbol => "symbol",
        })
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "trace" => Ok(Method::Trace),
            "gamma" => Ok(Method::Gamma),
            "hook" => Ok(Method::Hook),
            "symbol" => Ok(Method::Symbol),
            _ => Err(Error::Usage(format!("unknown method `{s}`"))),
        }
    }
}

/// `P_H`: nonzero exactly in the semisimple regime.
pub fn p_h(r: usize, n: usize) -> RatFunc {
    semisimplicity_poly(r, n)
}

fn sign(e: i64) -> RatFunc {
    RatFunc::from_int(if e.rem_euclid(2) == 0 { 1 } else { -1 })
}

/// `q^a Q_s − q^b Q_t`.
fn binom(a: i64, s: usize, b: i64, t: usize) -> RatFunc {
    &RatFunc::q_mono(a, s) - &RatFunc::q_mono(b, t)
}

fn product(items: impl IntoIterator<Item = RatFunc>) -> RatFunc {
    items.into_iter().fold(RatFunc::one(), |acc, x| &acc * &x)
}

/// `∏_s Q_s^{e_s}`.
fn q_params(r: usize, e: impl Fn(usize) -> i64) -> RatFunc {
    product((1..=r).map(|s| RatFunc::big_q(s).pow(e(s)).expect("Q_s is nonzero")))
}

/// `1/τ(F_{t^λ})`.
pub fn schur_trace<B: Backend>(sn: &Seminormal<B>, shape: &Multipartition) -> Result<B::C> {
    let f = sn.idempotent(&StdTableau::row_tableau(shape))?;
    let t = sn.alg().tau(&f);
    if t.is_zero() {
        return Err(Error::Internal(format!("τ(F_t) vanishes for {shape}")));
    }
    Ok(t.inv()?)
}

/// `γ'_{t^{λ'}}`: the row-tableau closed form on `λ'`, primed.
pub fn gamma_dual_top(shape: &Multipartition) -> RatFunc {
    gamma_row_closed(&shape.conjugate()).prime_involution(shape.r())
}

/// `(−1)^{n(r−1)} q^{−ℓ(w_λ)} γ_{t_λ} γ'_{t^{λ'}} ∏_s Q_s^{|λ^{(s)}|−n}`.
pub fn schur_gamma(shape: &Multipartition) -> RatFunc {
    let (n, r) = (shape.n() as i64, shape.r());
    let gamma_col = gamma_recursive(&StdTableau::col_tableau(shape));
    let len = w_lambda(shape).length() as i64;
    let qs = q_params(r, |s| shape.comp(s).size() as i64 - n);
    product([sign(n * (r as i64 - 1)), RatFunc::q_pow(-len), gamma_col, gamma_dual_top(shape), qs])
}

/// `∏_{k=1}^{λ_1^{(t)}} (x − q^{k−1−λ'_k} Q_t)/(x − q^{k−λ'_k} Q_t)` with `x = q^c Q_s`.
fn column_ratio(c: i64, s: usize, shape: &Multipartition, t: usize) -> RatFunc {
    let comp = shape.comp(t);
    let cols = comp.conjugate();
    product((1..=comp.row(1)).map(|k| {
        let lk = cols.row(k) as i64;
        let k = k as i64;
        &binom(c, s, k - 1 - lk, t) / &binom(c, s, k - lk, t)
    }))
}

/// Closed product for `γ_{t_λ}`: `q^{ℓ(w_λ)}` times, over nodes `(i,j,s)`, `[h_ij]/[λ'_j − i + 1]`
/// and the interaction with every later component.
pub fn gamma_col_closed(shape: &Multipartition) -> RatFunc {
    let r = shape.r();
    let mut acc = RatFunc::q_pow(w_lambda(shape).length() as i64);
    for s in 1..=r {
        let comp = shape.comp(s);
        let cols = comp.conjugate();
        for ((i, j), h) in comp.hooks() {
            let leg = cols.row(j) + 1 - i;
            acc = &acc * &(&q_int(h as i64) / &q_int(leg as i64));
            let c = j as i64 - i as i64;
            for t in s + 1..=r {
                let lead = shape.comp(t).row(1) as i64;
                acc = &acc * &(&binom(c, s, lead, t) * &column_ratio(c, s, shape, t));
            }
        }
    }
    acc
}

/// `∏_{k=1}^{λ_1^{(t)}} (x − q^{k−1−λ'_k} Q_t)/(x − q^{k−λ'_k} Q_t)` with `x = q^c Q_s`, factored.
fn column_ratio_into(acc: &mut Factored, c: i64, s: usize, shape: &Multipartition, t: usize) {
    let comp = shape.comp(t);
    let cols = comp.conjugate();
    for k in 1..=comp.row(1) {
        let lk = cols.row(k) as i64;
        let k = k as i64;
        acc.mul_binomial(c, s, k - 1 - lk, t, 1);
        acc.mul_binomial(c, s, k - lk, t, -1);
    }
}

/// `X_st = ∏_{λ^{(t)}} (q^{j−i}Q_t − Q_s) · ∏_{λ^{(s)}} (q^{j−i}Q_s − q^{λ_1^{(t)}}Q_t) · ratio`.
fn x_factor_into(acc: &mut Factored, shape: &Multipartition, s: usize, t: usize) {
    for (i, j) in shape.comp(t).cells() {
        acc.mul_binomial(j as i64 - i as i64, t, 0, s, 1);
    }
    let lead = shape.comp(t).row(1) as i64;
    for (i, j) in shape.comp(s).cells() {
        let c = j as i64 - i as i64;
        acc.mul_binomial(c, s, lead, t, 1);
        column_ratio_into(acc, c, s, shape, t);
    }
}

/// `(−1)^{n(r−1)} (Q_1⋯Q_r)^{−n} q^{−α(λ')} ∏_{(i,j,s)} Q_s [h_ij]_q · ∏_{s<t} X_st`.
pub fn schur_hook(shape: &Multipartition) -> RatFunc {
    let (n, r) = (shape.n() as i64, shape.r());
    let mut acc = Factored::one();
    acc.negate_pow(n * (r as i64 - 1));
    acc.mul_var(0, -shape.conjugate().alpha());
    for s in 1..=r {
        acc.mul_var(s, shape.comp(s).size() as i64 - n);
        for (_, h) in shape.comp(s).hooks() {
            acc.mul_q_int(h as u32, 1);
        }
    }
    for s in 1..=r {
        for t in s + 1..=r {
            x_factor_into(&mut acc, shape, s, t);
        }
    }
    acc.to_ratfunc()
}

/// `(a_{rL}, b_{rL}) = (n(r−1) + C(r,2)C(L,2), rL(L−1)(2rL−r−3)/12)`.
pub fn symbol_exponents(r: usize, n: usize, l: usize) -> (i64, i64) {
    let (r, n, l) = (r as i64, n as i64, l as i64);
    let a = n * (r - 1) + r * (r - 1) / 2 * (l * (l - 1) / 2);
    let b = r * l * (l - 1) * (2 * r * l - r - 3);
    debug_assert_eq!(b % 12, 0);
    (a, b / 12)
}

/// `max(1, ℓ(λ))`.
pub fn default_symbol_length(shape: &Multipartition) -> usize {
    shape.length().max(1)
}

/// The beta-number formula for a symbol with `L ≥ ℓ(λ)` rows.
pub fn schur_symbol(shape: &Multipartition, l: usize) -> Result<RatFunc> {
    let beta = beta_symbol(shape, l)?;
    let (n, r) = (shape.n(), shape.r());
    let (a, b) = symbol_exponents(r, n, l);
    let mut acc = Factored::one();
    acc.negate_pow(a);
    acc.mul_var(0, b);
    for s in 1..=r {
        acc.mul_var(s, -(n as i64));
        for t in s + 1..=r {
            acc.mul_binomial(0, s, 0, t, l as i64);
        }
    }
    acc.mul_q_power_minus_one(1, -(n as i64));
    for s in 1..=r {
        for &alpha in beta.row(s) {
            for t in 1..=r {
                for k in 1..=alpha as i64 {
                    acc.mul_binomial(k, s, 0, t, 1);
                }
            }
        }
    }
    for s in 1..=r {
        for t in s..=r {
            for &x in beta.row(s) {
                for &y in beta.row(t) {
                    if s == t && x <= y {
                        continue;
                    }
                    acc.mul_binomial(x as i64, s, y as i64, t, -1);
                }
            }
        }
    }
    Ok(acc.to_ratfunc())
}

/// `s_λ` by one combinatorial method, as a rational function.
pub fn schur_formula(shape: &Multipartition, method: Method) -> Result<RatFunc> {
    match method {
        Method::Gamma => Ok(schur_gamma(shape)),
        Method::Hook => Ok(schur_hook(shape)),
        Method::Symbol => schur_symbol(shape, default_symbol_length(shape)),
        Method::Trace => Err(Error::Usage("the trace method needs an algebra".into())),
    }
}

/// `s_λ` in the backend's field.
pub fn schur_value<B: Backend>(sn: &Seminormal<B>, shape: &Multipartition, method: Method) -> Result<B::C> {
    match method {
        Method::Trace => schur_trace(sn, shape),
        m => sn.alg().lift(&schur_formula(shape, m)?),
    }
}

/// `(−1)^{n(r−1)} [n]_q! ∏_{s≠t} Q_s^{−n} ∏_{s≠t} ∏_{k=0}^{n−1} (q^k Q_t − Q_s)`: the one-row Schur element.
pub fn schur_eta_closed(n: usize, r: usize, t: usize) -> RatFunc {
    let ni = n as i64;
    let mut acc = &sign(ni * (r as i64 - 1)) * &q_fact(ni).expect("nonnegative");
    for s in (1..=r).filter(|&s| s != t) {
        acc = &acc * &RatFunc::big_q(s).pow(-ni).expect("Q_s is nonzero");
        for k in 0..ni {
            acc = &acc * &binom(k, t, 0, s);
        }
    }
    acc
}

/// `(−1)^{n(r−1)} q^{ℓ(w_λ)} ∏_s Q_s^{n−|λ^{(s)}|}`: the trace of `z_λ T_{w_λ}^*`.
pub fn z_trace_closed(shape: &Multipartition) -> RatFunc {
    let (n, r) = (shape.n() as i64, shape.r());
    let len = w_lambda(shape).length() as i64;
    product([sign(n * (r as i64 - 1)), RatFunc::q_pow(len), q_params(r, |s| n - shape.comp(s).size() as i64)])
}

/// `s_{η_1} / s_λ`.
pub fn generic_degree_ratio(shape: &Multipartition) -> Result<RatFunc> {
    let eta = Multipartition::eta(shape.n(), shape.r(), 1);
    Ok(schur_gamma(&eta).checked_div(&schur_gamma(shape))?)
}

/// One value per method for a single `λ`.
#[derive(Clone, Debug, Serialize)]
pub struct SchurReport {
    pub lambda: String,
    pub backend: String,
    pub values: Vec<MethodValue>,
    /// Every pair of values agrees.
    pub agree: bool,
    pub status: Status,
}

#[derive(Clone, Debug, Serialize)]
pub struct MethodValue {
    pub method: Method,
    pub value: String,
}

impl SchurReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Computes `s_λ` by each method and compares them exactly.
pub fn schur_report<B: Backend>(sn: &Seminormal<B>, shape: &Multipartition, methods: &[Method]) -> Result<SchurReport> {
    let vals = methods.iter().map(|&m| Ok((m, schur_value(sn, shape, m)?))).collect::<Result<Vec<_>>>()?;
    let agree = vals.windows(2).all(|w| w[0].1 == w[1].1);
    Ok(SchurReport {
        lambda: shape.to_string(),
        backend: sn.alg().backend().label(),
        values: vals.into_iter().map(|(method, v)| MethodValue { method, value: v.to_string() }).collect(),
        agree,
        status: if agree { Status::Pass } else { Status::Fail },
    })
}

/// `γ_{t_λ}` from the recursion equals its closed product, for every `λ`.
pub fn gamma_closed_checks(r: usize, n: usize) -> Vec<CheckRecord> {
    multipartitions(n, r)
        .into_iter()
        .map(|shape| {
            let rec = gamma_recursive(&StdTableau::col_tableau(&shape));
            let closed = gamma_col_closed(&shape);
            let w = (rec != closed).then(|| values([("recursive", rec.to_string()), ("closed", closed.to_string())]));
            CheckRecord::from_failure("schur.gamma_col_closed", Some(shape.to_string()), w)
        })
        .collect()
}

/// The beta-number formula does not depend on `L`.
pub fn shift_invariance_checks(r: usize, n: usize, extra: usize) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    for shape in multipartitions(n, r) {
        let l0 = default_symbol_length(&shape);
        let base = schur_symbol(&shape, l0)?;
        let mut failure = None;
        for l in l0 + 1..=l0 + extra {
            let v = schur_symbol(&shape, l)?;
            if failure.is_none() && v != base {
                failure = Some(values([("L", l.to_string()), ("value", v.to_string())]));
            }
        }
        out.push(CheckRecord::from_failure("schur.symbol_shift", Some(shape.to_string()), failure));
    }
    Ok(out)
}

/// `s_{λ'} = (s_λ)'`, and a transposition of components permutes the `Q_s`.
pub fn symmetry_checks(r: usize, n: usize) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for shape in multipartitions(n, r) {
        let s = schur_gamma(&shape);
        let conj = schur_gamma(&shape.conjugate());
        let primed = s.prime_involution(r);
        let w = (primed != conj).then(|| values([("primed", primed.to_string()), ("conjugate", conj.to_string())]));
        out.push(CheckRecord::from_failure("schur.prime_conjugate", Some(shape.to_string()), w));
        let mut failure = None;
        for a in 1..=r {
            for b in a + 1..=r {
                let mut v: Vec<usize> = (1..=r).collect();
                v.swap(a - 1, b - 1);
                let moved = schur_gamma(&shape.permute(&v));
                let permuted = s.permute_params(&v);
                if failure.is_none() && moved != permuted {
                    failure = Some(values([("swap", format!("{a}<->{b}")), ("value", moved.to_string())]));
                }
            }
        }
        out.push(CheckRecord::from_failure("schur.component_swap", Some(shape.to_string()), failure));
    }
    out
}

/// `s_λ` has a monomial denominator and `Σ_λ |Std(λ)| / s_λ = 1`.
pub fn schur_sum_checks(r: usize, n: usize) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    let mut total = RatFunc::zero();
    for shape in multipartitions(n, r) {
        let s = schur_gamma(&shape);
        let dim = RatFunc::from_int(std_tableaux(&shape).len() as i64);
        total = &total + &dim.checked_div(&s)?;
        let ok = !s.is_zero() && s.denom().is_monomial();
        let w = (!ok).then(|| Witness::Text(s.to_string()));
        out.push(CheckRecord::from_failure("schur.monomial_denominator", Some(shape.to_string()), w));
    }
    let w = (!total.is_one()).then(|| Witness::Text(total.to_string()));
    out.push(CheckRecord::from_failure("schur.dimension_sum", None, w));
    Ok(out)
}

/// The one-row Schur elements match their closed form, for every combinatorial method.
pub fn eta_checks(r: usize, n: usize, methods: &[Method]) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    for t in 1..=r {
        let shape = Multipartition::eta(n, r, t);
        let expect = schur_eta_closed(n, r, t);
        let mut failure = None;
        for &m in methods.iter().filter(|m| m.is_combinatorial()) {
            let v = schur_formula(&shape, m)?;
            if failure.is_none() && v != expect {
                failure = Some(values([("method", m.to_string()), ("value", v.to_string())]));
            }
        }
        out.push(CheckRecord::from_failure("schur.eta_closed", Some(shape.to_string()), failure));
    }
    Ok(out)
}

/// `τ(z_λ T_{w_λ}^*)` equals its closed form.
pub fn z_trace_checks<B: Backend>(sn: &Seminormal<B>) -> Result<Vec<CheckRecord>> {
    let alg = sn.alg();
    let mut out = Vec::new();
    for shape in multipartitions(alg.n(), alg.r()) {
        let z = sn.z_elem(&shape)?;
        let tw_star = alg.t_w(&w_lambda(&shape).inverse());
        let v = alg.tau(&alg.mul(&z, &tw_star)?);
        let expect = alg.lift(&z_trace_closed(&shape))?;
        let w = (v != expect).then(|| values([("tau", v.to_string()), ("expected", expect.to_string())]));
        out.push(CheckRecord::from_failure("schur.z_trace", Some(shape.to_string()), w));
    }
    Ok(out)
}

/// At `q = 1` with `Q_s` the `r`-th roots of unity (`r ≤ 2`): `|Std(λ)| · s_λ = r^n n!`.
pub fn group_algebra_checks(r: usize, n: usize) -> Result<Vec<CheckRecord>> {
    let params: Vec<i64> = match r {
        1 => vec![1],
        2 => vec![-1, 1],
        _ => return Err(Error::Usage("group-algebra specialization needs r ≤ 2".into())),
    };
    let point = crate::coeff::EvalPoint::new(BigRational::from_integer(1.into()), params.iter().map(|&p| BigRational::from_integer(p.into())).collect())?;
    let order = BigRational::from_integer(((r as u64).pow(n as u32) * (1..=n as u64).product::<u64>()).into());
    let mut out = Vec::new();
    for shape in multipartitions(n, r) {
        let dim = BigRational::from_integer(std_tableaux(&shape).len().into());
        let mut failure = None;
        for m in [Method::Gamma, Method::Hook, Method::Symbol] {
            let v = schur_formula(&shape, m)?.evaluate(&point)?;
            if failure.is_none() && &v * &dim != order {
                failure = Some(values([("method", m.to_string()), ("value", v.to_string())]));
            }
        }
        out.push(CheckRecord::from_failure("schur.group_algebra", Some(shape.to_string()), failure));
    }
    Ok(out)
}

/// Four-way agreement for every `λ`, one record each.
pub fn agreement_checks<B: Backend>(sn: &Seminormal<B>, methods: &[Method]) -> Result<Vec<CheckRecord>> {
    let alg: &Algebra<B> = sn.alg();
    multipartitions(alg.n(), alg.r())
        .iter()
        .map(|shape| {
            let rep = schur_report(sn, shape, methods)?;
            let w = (!rep.agree).then(|| Witness::Values(rep.values.iter().map(|v| (v.method.to_string(), v.value.clone())).collect()));
            Ok(CheckRecord::from_failure("schur.agreement", Some(shape.to_string()), w))
        })
        .collect()
}
