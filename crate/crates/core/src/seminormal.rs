//! Seminormal forms built from the idempotents `F_t` and the orthogonal basis `f_st`.
//! Matrix units, Specht representations and the `Ψ_t`/`Φ_t` recursion are derived from them.

use std::collections::HashMap;

use parking_lot::Mutex;

use crate::algebra::{Algebra, Elem, Gen};
use crate::cellular::{self, check_shape};
use crate::coeff::{Backend, Field, RatFunc};
use crate::combinatorics::{
    chain_to, gamma_product, gamma_recursive, gamma_row_closed, gamma_step, multipartitions, residue_set,
    std_tableaux, Multipartition, Perm, StdTableau,
};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::report::{values, CheckRecord, Witness};

type Pair = (StdTableau, StdTableau);

/// The residue `q^d Q_s`.
fn residue_value(d: i64, s: usize) -> RatFunc {
    RatFunc::q_mono(d, s)
}

/// `(q−1) res_t(i) / (res_t(i) − res_s(i))`: the diagonal entry of `T_i` at `f_s`, with `t = s(i,i+1)`.
fn diag_coeff(rs: &RatFunc, rt: &RatFunc) -> RatFunc {
    let qm1 = &RatFunc::q() - &RatFunc::one();
    &(&qm1 * rt) / &(rt - rs)
}

/// `(q res_s − res_t)(res_s − q res_t) / (res_t − res_s)²`.
fn lower_coeff(rs: &RatFunc, rt: &RatFunc) -> RatFunc {
    let q = RatFunc::q();
    let d = rt - rs;
    &(&(&(&q * rs) - rt) * &(rs - &(&q * rt))) / &(&d * &d)
}

/// Seminormal data of one algebra with memoized `F_t`, `m_λ` and `f_st`.
pub struct Seminormal<B: Backend> {
    alg: Algebra<B>,
    idem: Mutex<HashMap<StdTableau, Elem<B::C>>>,
    m_lam: Mutex<HashMap<Multipartition, Elem<B::C>>>,
    n_lam: Mutex<HashMap<Multipartition, Elem<B::C>>>,
    f: Mutex<HashMap<Pair, Elem<B::C>>>,
}

impl<B: Backend> Seminormal<B> {
    pub fn new(alg: &Algebra<B>) -> Result<Self> {
        alg.require_semisimple()?;
        Ok(Seminormal {
            alg: alg.clone(),
            idem: Mutex::default(),
            m_lam: Mutex::default(),
            n_lam: Mutex::default(),
            f: Mutex::default(),
        })
    }

    pub fn alg(&self) -> &Algebra<B> {
        &self.alg
    }

    fn lift(&self, f: &RatFunc) -> Result<B::C> {
        self.alg.lift(f)
    }

    /// `F_t = ∏_k ∏_{c∈R(k), c≠res_t(k)} (L_k − c)/(res_t(k) − c)`.
    pub fn idempotent(&self, t: &StdTableau) -> Result<Elem<B::C>> {
        check_shape(&self.alg, t.shape())?;
        if let Some(e) = self.idem.lock().get(t) {
            return Ok(e.clone());
        }
        let mut acc = self.alg.unit();
        for k in 1..=t.n() {
            let own = t.residue_exp(k);
            for (d, s) in residue_set(k, self.alg.r()) {
                if (d, s) == own {
                    continue;
                }
                let c = self.lift(&residue_value(d, s))?;
                let den = self.lift(&(&t.residue(k)? - &residue_value(d, s)))?.inv()?;
                let lk = self.alg.apply_gen(Gen::L(k), &acc);
                acc = lk.sub(&acc.scale(&c)).scale(&den);
            }
        }
        self.idem.lock().insert(t.clone(), acc.clone());
        Ok(acc)
    }

    fn m_lambda(&self, shape: &Multipartition) -> Result<Elem<B::C>> {
        if let Some(e) = self.m_lam.lock().get(shape) {
            return Ok(e.clone());
        }
        let m = cellular::m_lambda(&self.alg, shape)?;
        self.m_lam.lock().insert(shape.clone(), m.clone());
        Ok(m)
    }

    fn n_lambda(&self, shape: &Multipartition) -> Result<Elem<B::C>> {
        if let Some(e) = self.n_lam.lock().get(shape) {
            return Ok(e.clone());
        }
        let m = cellular::n_lambda(&self.alg, shape)?;
        self.n_lam.lock().insert(shape.clone(), m.clone());
        Ok(m)
    }

    /// `T_{d(s)}^* h T_{d(t)}`.
    fn sandwich(&self, h: &Elem<B::C>, s: &StdTableau, t: &StdTableau) -> Result<Elem<B::C>> {
        let left = self.alg.mul(&self.alg.t_w(&s.d().inverse()), h)?;
        self.alg.mul(&left, &self.alg.t_w(&t.d()))
    }

    pub fn m_st(&self, s: &StdTableau, t: &StdTableau) -> Result<Elem<B::C>> {
        same_shape(s, t)?;
        self.sandwich(&self.m_lambda(s.shape())?, s, t)
    }

    pub fn n_st(&self, s: &StdTableau, t: &StdTableau) -> Result<Elem<B::C>> {
        same_shape(s, t)?;
        self.sandwich(&self.n_lambda(s.shape())?, s, t)
    }

    /// `f_st = F_s m_st F_t`.
    pub fn f_st(&self, s: &StdTableau, t: &StdTableau) -> Result<Elem<B::C>> {
        let key = (s.clone(), t.clone());
        if let Some(e) = self.f.lock().get(&key) {
            return Ok(e.clone());
        }
        let m = self.m_st(s, t)?;
        let e = self.alg.mul(&self.alg.mul(&self.idempotent(s)?, &m)?, &self.idempotent(t)?)?;
        self.f.lock().insert(key, e.clone());
        Ok(e)
    }

    /// `g_st = F_{s'} n_st F_{t'}`.
    pub fn g_st(&self, s: &StdTableau, t: &StdTableau) -> Result<Elem<B::C>> {
        let n = self.n_st(s, t)?;
        let left = self.alg.mul(&self.idempotent(&s.conjugate())?, &n)?;
        self.alg.mul(&left, &self.idempotent(&t.conjugate())?)
    }

    /// `γ_t` from the combinatorial recursion, in the backend.
    pub fn gamma(&self, t: &StdTableau) -> Result<B::C> {
        self.lift(&gamma_recursive(t))
    }

    /// `γ_t` as the scalar with `f_{t^λ t} f_{t t^λ} = γ_t f_{t^λ t^λ}`.
    pub fn gamma_algebraic(&self, t: &StdTableau) -> Result<B::C> {
        let top = StdTableau::row_tableau(t.shape());
        let prod = self.alg.mul(&self.f_st(&top, t)?, &self.f_st(t, &top)?)?;
        let base = self.f_st(&top, &top)?;
        if base.is_zero() {
            return Err(Error::Internal(format!("f_(t^λ,t^λ) vanishes for {}", t.shape())));
        }
        prod.ratio_to(&base).ok_or_else(|| Error::Internal(format!("f-product for {t} is not a multiple")))
    }

    /// `f̃_st = γ_t^{−1} f_st`.
    pub fn matrix_unit(&self, s: &StdTableau, t: &StdTableau) -> Result<Elem<B::C>> {
        Ok(self.f_st(s, t)?.scale(&self.gamma(t)?.inv()?))
    }

    /// `F_λ = Σ_{t∈Std(λ)} F_t`.
    pub fn central_idempotent(&self, shape: &Multipartition) -> Result<Elem<B::C>> {
        let mut acc = self.alg.zero();
        for t in std_tableaux(shape) {
            acc = acc.add(&self.idempotent(&t)?);
        }
        Ok(acc)
    }

    /// `(Ψ_t, Φ_t)` along the chain from `t^λ`: `Ψ ← Ψ(T_i − β)`, `Φ ← Φ(T_i − α)`.
    pub fn psi_phi(&self, t: &StdTableau) -> Result<(Elem<B::C>, Elem<B::C>)> {
        let mut s = StdTableau::row_tableau(t.shape());
        let (mut psi, mut phi) = (self.alg.unit(), self.alg.unit());
        for i in chain_to(t) {
            let next = s.swap(i).expect("chain steps are standard");
            let (rs, rt) = (s.residue(i)?, next.residue(i)?);
            let qm1 = &RatFunc::q() - &RatFunc::one();
            let alpha = self.lift(&(&(&qm1 * &rt) / &(&rt - &rs)))?;
            let beta = self.lift(&(&(&qm1 * &rs) / &(&rs - &rt)))?;
            let ti = self.alg.gen_t(i)?;
            psi = self.alg.mul(&psi, &ti.sub(&self.alg.scalar(beta)))?;
            phi = self.alg.mul(&phi, &ti.sub(&self.alg.scalar(alpha)))?;
            s = next;
        }
        Ok((psi, phi))
    }

    /// `z_λ`, with `m_λ` and `n_{λ'}` taken from the caches.
    pub fn z_elem(&self, shape: &Multipartition) -> Result<Elem<B::C>> {
        let left = self.alg.mul(&self.m_lambda(shape)?, &self.alg.t_w(&crate::combinatorics::w_lambda(shape)))?;
        self.alg.mul(&left, &self.n_lambda(&shape.conjugate())?)
    }
}

fn same_shape(s: &StdTableau, t: &StdTableau) -> Result<()> {
    if s.shape() != t.shape() {
        return Err(Error::ShapeMismatch { shape: t.shape().to_string(), r: s.shape().r(), n: s.n() });
    }
    Ok(())
}

/// `γ_t` for every `t ∈ Std(λ)`, from the recursion.
#[derive(Clone, Debug)]
pub struct GammaTable {
    pub shape: Multipartition,
    pub entries: Vec<(StdTableau, RatFunc)>,
}

impl GammaTable {
    pub fn new(shape: &Multipartition) -> Self {
        let entries = std_tableaux(shape).into_iter().map(|t| (t.clone(), gamma_recursive(&t))).collect();
        GammaTable { shape: shape.clone(), entries }
    }

    pub fn get(&self, t: &StdTableau) -> Option<&RatFunc> {
        self.entries.iter().find(|(u, _)| u == t).map(|(_, g)| g)
    }

    /// Each recursive `γ_t` equals its node product and obeys the step ratio; `γ_{t^λ}` has its closed form.
    pub fn check(&self) -> CheckRecord {
        let top = StdTableau::row_tableau(&self.shape);
        let mut failure = None;
        if self.get(&top) != Some(&gamma_row_closed(&self.shape)) {
            failure = Some(values([("t", top.to_string())]));
        }
        for (t, g) in &self.entries {
            if failure.is_some() {
                break;
            }
            if *g != gamma_product(t) {
                failure = Some(values([("t", t.to_string()), ("recursive", g.to_string())]));
                continue;
            }
            for i in 1..t.n() {
                if let Some(s) = t.swap(i).filter(|s| s.dominates(t)) {
                    let ratio = &(g / self.get(&s).expect("same shape"));
                    if *ratio != gamma_step(&s, t, i) {
                        failure = Some(values([("t", t.to_string()), ("i", i.to_string())]));
                    }
                }
            }
        }
        CheckRecord::from_failure("seminormal.gamma_table", Some(self.shape.to_string()), failure)
    }
}

/// A seminormal Specht representation, acting on the right of row vectors indexed by `Std(λ)`.
#[derive(Clone, Debug)]
pub struct SpechtRep<C> {
    pub shape: Multipartition,
    pub basis: Vec<StdTableau>,
    /// `ρ(T_0), …, ρ(T_{n−1})`.
    pub t: Vec<Matrix<C>>,
    /// `ρ(L_1), …, ρ(L_n)`, diagonal.
    pub l: Vec<Matrix<C>>,
}

impl<C: Field> SpechtRep<C> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn position(&self, t: &StdTableau) -> usize {
        self.basis.iter().position(|u| u == t).expect("tableau of this shape")
    }

    /// `ρ(T_w)` along the reduced word of `w`.
    pub fn perm_matrix(&self, w: &Perm) -> Matrix<C> {
        w.reduced_word().iter().fold(Matrix::identity(self.dim()), |acc, &i| acc.mul(&self.t[i]))
    }

    /// `ρ(L_1^{c_1} ⋯ L_n^{c_n} T_w)`.
    pub fn monomial(&self, c: &[usize], w: &Perm) -> Matrix<C> {
        let mut diag = vec![C::one(); self.dim()];
        for (k, &e) in c.iter().enumerate() {
            for (j, d) in diag.iter_mut().enumerate() {
                for _ in 0..e {
                    *d = d.mul(self.l[k].get(j, j));
                }
            }
        }
        let p = self.perm_matrix(w);
        let mut out = p.clone();
        for (i, d) in diag.iter().enumerate() {
            for j in 0..self.dim() {
                out.set(i, j, d.mul(p.get(i, j)));
            }
        }
        out
    }
}

/// Builds `ρ` from residues alone.
pub fn specht_rep<B: Backend>(alg: &Algebra<B>, shape: &Multipartition) -> Result<SpechtRep<B::C>> {
    check_shape(alg, shape)?;
    let basis = std_tableaux(shape);
    let d = basis.len();
    let n = alg.n();
    let mut l = Vec::with_capacity(n);
    for k in 1..=n {
        let mut m = Matrix::zeros(d, d);
        for (j, s) in basis.iter().enumerate() {
            m.set(j, j, alg.lift(&s.residue(k)?)?);
        }
        l.push(m);
    }
    let mut t = Vec::with_capacity(n);
    if n > 0 {
        t.push(l[0].clone());
    }
    let pos = |u: &StdTableau| basis.iter().position(|v| v == u).expect("standard");
    for i in 1..n {
        let mut m = Matrix::zeros(d, d);
        for (a, s) in basis.iter().enumerate() {
            match s.swap(i) {
                Some(u) => {
                    let (rs, ru) = (s.residue(i)?, u.residue(i)?);
                    m.set(a, a, alg.lift(&diag_coeff(&rs, &ru))?);
                    let off = if s.dominates(&u) { RatFunc::one() } else { lower_coeff(&rs, &ru) };
                    m.set(a, pos(&u), alg.lift(&off)?);
                }
                None if s.same_row(i, i + 1) => m.set(a, a, alg.q().clone()),
                None => m.set(a, a, B::C::from_i64(-1)),
            }
        }
        t.push(m);
    }
    Ok(SpechtRep { shape: shape.clone(), basis, t, l })
}

/// `χ^λ(a)`: trace of `ρ(a)` summed over the basis expansion of `a`.
pub fn character<B: Backend>(alg: &Algebra<B>, rep: &SpechtRep<B::C>, a: &Elem<B::C>) -> B::C {
    let mut acc = B::C::zero();
    for (idx, c) in a.terms() {
        let b = alg.basis_index(*idx);
        acc = acc.add(&c.mul(&rep.monomial(&b.c, &b.w).trace()));
    }
    acc
}

/// Every defining relation holds for the matrices, and `ρ(L_k) = q^{1−k} ρ(T_{k−1}) ⋯ ρ(T_0) ⋯ ρ(T_{k−1})`.
pub fn rep_relations_check<B: Backend>(alg: &Algebra<B>, rep: &SpechtRep<B::C>) -> CheckRecord {
    let n = alg.n();
    let d = rep.dim();
    let id = Matrix::<B::C>::identity(d);
    let q = alg.q().clone();
    let mut bad: Option<&str> = None;
    if n > 0 {
        let mut cyc = id.clone();
        for s in 1..=alg.r() {
            cyc = cyc.mul(&rep.t[0].add(&id.scale(&alg.backend().big_q(s).neg())));
        }
        if !cyc.is_zero() {
            bad = Some("cyclotomic");
        }
    }
    for i in 1..n {
        let ti = &rep.t[i];
        if !ti.add(&id).mul(&ti.add(&id.scale(&q.neg()))).is_zero() {
            bad = Some("quadratic");
        }
    }
    if n >= 2 {
        let (t0, t1) = (&rep.t[0], &rep.t[1]);
        if t0.mul(t1).mul(t0).mul(t1) != t1.mul(t0).mul(t1).mul(t0) {
            bad = Some("T0T1T0T1");
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (&rep.t[i], &rep.t[j]);
            if j == i + 1 && i >= 1 {
                if a.mul(b).mul(a) != b.mul(a).mul(b) {
                    bad = Some("braid");
                }
            } else if j > i + 1 && a.mul(b) != b.mul(a) {
                bad = Some("commuting");
            }
        }
    }
    for k in 2..=n {
        let mut m = rep.t[0].clone();
        for i in 1..k {
            m = rep.t[i].mul(&m).mul(&rep.t[i]);
        }
        let scale = alg.lift(&RatFunc::q_pow(1 - k as i64)).expect("polynomial");
        if m.scale(&scale) != rep.l[k - 1] {
            bad = Some("jucys-murphy");
        }
    }
    CheckRecord::from_failure("seminormal.rep_relations", Some(rep.shape.to_string()), bad.map(|b| Witness::Text(b.into())))
}

fn fail_elem<B: Backend>(alg: &Algebra<B>, e: &Elem<B::C>) -> Option<Witness> {
    Some(Witness::Element(alg.serialize(e)))
}

/// `F_t² = F_t`, `F_t L_k = res_t(k) F_t`, `F_t = f_tt / γ_t`, `Σ_t F_t = 1`.
pub fn idempotent_checks<B: Backend>(sn: &Seminormal<B>) -> Result<Vec<CheckRecord>> {
    let alg = sn.alg();
    let mut out = Vec::new();
    let mut total = alg.zero();
    for shape in multipartitions(alg.n(), alg.r()) {
        let (mut sq, mut eig, mut ft) = (None, None, None);
        for t in std_tableaux(&shape) {
            let f = sn.idempotent(&t)?;
            total = total.add(&f);
            if sq.is_none() && alg.mul(&f, &f)? != f {
                sq = fail_elem(alg, &f);
            }
            for k in 1..=alg.n() {
                let prod = alg.mul(&f, &alg.elem_l(k)?)?;
                if eig.is_none() && prod != f.scale(&alg.lift(&t.residue(k)?)?) {
                    eig = Some(values([("t", t.to_string()), ("k", k.to_string())]));
                }
            }
            let ftt = sn.f_st(&t, &t)?.scale(&sn.gamma(&t)?.inv()?);
            if ft.is_none() && ftt != f {
                ft = Some(values([("t", t.to_string())]));
            }
        }
        let lam = Some(shape.to_string());
        out.push(CheckRecord::from_failure("seminormal.idempotent", lam.clone(), sq));
        out.push(CheckRecord::from_failure("seminormal.idempotent_eigen", lam.clone(), eig));
        out.push(CheckRecord::from_failure("seminormal.idempotent_from_f", lam, ft));
    }
    out.push(CheckRecord::from_failure("seminormal.idempotent_sum", None, (total != alg.unit()).then(|| Witness::Element(alg.serialize(&total)))));
    Ok(out)
}

/// `f_st f_uv = δ_ut γ_t f_sv` on every 4-tuple, and the same law for the matrix units.
pub fn matrix_unit_checks<B: Backend>(sn: &Seminormal<B>) -> Result<Vec<CheckRecord>> {
    let alg = sn.alg();
    let shapes = multipartitions(alg.n(), alg.r());
    let mut all: Vec<(Multipartition, StdTableau, StdTableau, Elem<B::C>)> = Vec::new();
    for shape in &shapes {
        let tabs = std_tableaux(shape);
        for s in &tabs {
            for t in &tabs {
                all.push((shape.clone(), s.clone(), t.clone(), sn.f_st(s, t)?));
            }
        }
    }
    let gammas: HashMap<StdTableau, B::C> = all
        .iter()
        .filter(|(_, s, t, _)| s == t)
        .map(|(_, t, _, _)| Ok((t.clone(), sn.gamma(t)?)))
        .collect::<Result<_>>()?;
    let find = |s: &StdTableau, v: &StdTableau| all.iter().find(|x| &x.1 == s && &x.2 == v).map(|x| &x.3);
    let mut out = Vec::new();
    for shape in &shapes {
        let mut failure = None;
        let mut unit_failure = None;
        for (lam, s, t, f) in &all {
            if lam != shape {
                continue;
            }
            for (_, u, v, g) in &all {
                let prod = alg.mul(f, g)?;
                let expect = if t == u {
                    find(s, v).expect("same shape").scale(&gammas[t])
                } else {
                    alg.zero()
                };
                if failure.is_none() && prod != expect {
                    failure = Some(values([("s", s), ("t", t), ("u", u), ("v", v)].map(|(a, b)| (a, b.to_string()))));
                }
                // f̃_st f̃_uv = δ_tu f̃_sv, i.e. f_st f_uv / (γ_t γ_v) = δ_tu f_sv / γ_v
                if t == u && unit_failure.is_none() {
                    let lhs = prod.scale(&gammas[t].mul(&gammas[v]).inv()?);
                    let rhs = find(s, v).expect("same shape").scale(&gammas[v].inv()?);
                    if lhs != rhs {
                        unit_failure = Some(values([("s", s), ("t", t), ("v", v)].map(|(a, b)| (a, b.to_string()))));
                    }
                }
            }
        }
        out.push(CheckRecord::from_failure("seminormal.f_product", Some(shape.to_string()), failure));
        out.push(CheckRecord::from_failure("seminormal.matrix_units", Some(shape.to_string()), unit_failure));
    }
    let mut sum = alg.zero();
    for (_, s, t, f) in &all {
        if s == t {
            sum = sum.add(&f.scale(&gammas[t].inv()?));
        }
    }
    out.push(CheckRecord::from_failure("seminormal.matrix_unit_sum", None, (sum != alg.unit()).then(|| Witness::Element(alg.serialize(&sum)))));
    Ok(out)
}

/// Each `F_λ` is a central idempotent; distinct ones are orthogonal and they sum to `1`.
pub fn central_checks<B: Backend>(sn: &Seminormal<B>) -> Result<Vec<CheckRecord>> {
    let alg = sn.alg();
    let shapes = multipartitions(alg.n(), alg.r());
    let cents = shapes.iter().map(|s| sn.central_idempotent(s)).collect::<Result<Vec<_>>>()?;
    let gens = (0..alg.n()).map(|i| alg.gen_t(i)).collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    let mut total = alg.zero();
    for (a, (shape, f)) in shapes.iter().zip(&cents).enumerate() {
        total = total.add(f);
        let mut failure = None;
        if alg.mul(f, f)? != *f {
            failure = Some(Witness::Text("not idempotent".into()));
        }
        for (i, g) in gens.iter().enumerate() {
            if failure.is_none() && alg.mul(f, g)? != alg.mul(g, f)? {
                failure = Some(values([("generator", format!("T{i}"))]));
            }
        }
        for (b, other) in cents.iter().enumerate() {
            if failure.is_none() && a != b && !alg.mul(f, other)?.is_zero() {
                failure = Some(values([("other", shapes[b].to_string())]));
            }
        }
        out.push(CheckRecord::from_failure("seminormal.central", Some(shape.to_string()), failure));
    }
    out.push(CheckRecord::from_failure("seminormal.central_sum", None, (total != alg.unit()).then(|| Witness::Element(alg.serialize(&total)))));
    Ok(out)
}

/// `L_k = Σ_t res_t(k) F_t`, and `∏_{c∈R(k)} (L_k − c)` is the minimum polynomial of `L_k`.
pub fn spectral_checks<B: Backend>(sn: &Seminormal<B>) -> Result<Vec<CheckRecord>> {
    let alg = sn.alg();
    let tabs: Vec<StdTableau> = multipartitions(alg.n(), alg.r()).iter().flat_map(std_tableaux).collect();
    let mut out = Vec::new();
    for k in 1..=alg.n() {
        let mut sum = alg.zero();
        for t in &tabs {
            sum = sum.add(&sn.idempotent(t)?.scale(&alg.lift(&t.residue(k)?)?));
        }
        let lk = alg.elem_l(k)?;
        let lam = Some(format!("k={k}"));
        out.push(CheckRecord::from_failure("seminormal.spectral", lam.clone(), (sum != lk).then(|| Witness::Element(alg.serialize(&sum)))));

        let roots = residue_set(k, alg.r());
        let apply = |skip: Option<usize>| -> Result<Elem<B::C>> {
            let mut acc = alg.unit();
            for (j, &(d, s)) in roots.iter().enumerate() {
                if Some(j) != skip {
                    let c = alg.lift(&residue_value(d, s))?;
                    acc = alg.apply_gen(Gen::L(k), &acc).sub(&acc.scale(&c));
                }
            }
            Ok(acc)
        };
        let mut failure = None;
        let full = apply(None)?;
        if !full.is_zero() {
            failure = fail_elem(alg, &full);
        }
        for j in 0..roots.len() {
            if failure.is_none() && apply(Some(j))?.is_zero() {
                let (d, s) = roots[j];
                failure = Some(values([("dropped", residue_value(d, s).to_string())]));
            }
        }
        out.push(CheckRecord::from_failure("seminormal.min_poly", lam, failure));
    }
    Ok(out)
}

/// The recursive `γ` matches both the node product and the `f`-products; the Gram matrix
/// `f_{t^λ t} f_{u t^λ} = ⟨f_t, f_u⟩ f_{t^λ t^λ}` is `diag(γ_t)`.
pub fn gamma_checks<B: Backend>(sn: &Seminormal<B>) -> Result<Vec<CheckRecord>> {
    let alg = sn.alg();
    let mut out = Vec::new();
    for shape in multipartitions(alg.n(), alg.r()) {
        let table = GammaTable::new(&shape);
        out.push(table.check());
        let tabs = std_tableaux(&shape);
        let top = StdTableau::row_tableau(&shape);
        let base = sn.f_st(&top, &top)?;
        let mut failure = None;
        for t in &tabs {
            for u in &tabs {
                let prod = alg.mul(&sn.f_st(&top, t)?, &sn.f_st(u, &top)?)?;
                let expect = if t == u { alg.lift(table.get(t).expect("tableau"))? } else { B::C::zero() };
                if failure.is_none() && prod != base.scale(&expect) {
                    failure = Some(values([("t", t.to_string()), ("u", u.to_string())]));
                }
            }
        }
        out.push(CheckRecord::from_failure("seminormal.gamma_algebraic", Some(shape.to_string()), failure));
    }
    Ok(out)
}

/// `f_st L_k = res_t(k) f_st`, `L_k f_st = res_s(k) f_st`, and trace orthogonality
/// `τ(f_st f_uv^*) = δ_su δ_tv γ_s τ(f_tt)`.
pub fn orthogonality_checks<B: Backend>(sn: &Seminormal<B>) -> Result<Vec<CheckRecord>> {
    let alg = sn.alg();
    let mut all = Vec::new();
    for shape in multipartitions(alg.n(), alg.r()) {
        let tabs = std_tableaux(&shape);
        for s in &tabs {
            for t in &tabs {
                all.push((s.clone(), t.clone(), sn.f_st(s, t)?));
            }
        }
    }
    let ls = (1..=alg.n()).map(|k| alg.elem_l(k)).collect::<Result<Vec<_>>>()?;
    let mut eig = None;
    for (s, t, f) in &all {
        for (k, l) in ls.iter().enumerate() {
            let right = alg.mul(f, l)? == f.scale(&alg.lift(&t.residue(k + 1)?)?);
            let left = alg.mul(l, f)? == f.scale(&alg.lift(&s.residue(k + 1)?)?);
            if eig.is_none() && !(right && left) {
                eig = Some(values([("s", s.to_string()), ("t", t.to_string()), ("k", (k + 1).to_string())]));
            }
        }
    }
    let stars: Vec<_> = all.iter().map(|(_, _, f)| alg.star(f)).collect();
    let mut orth = None;
    for (a, (s, t, f)) in all.iter().enumerate() {
        for (b, (u, v, _)) in all.iter().enumerate() {
            let val = alg.tau(&alg.mul(f, &stars[b])?);
            let ok = if a == b { !val.is_zero() } else { val.is_zero() };
            if orth.is_none() && !ok {
                orth = Some(values([("st", format!("{s} {t}")), ("uv", format!("{u} {v}")), ("tau", val.to_string())]));
            }
        }
    }
    Ok(vec![
        CheckRecord::from_failure("seminormal.f_eigen", None, eig),
        CheckRecord::from_failure("seminormal.trace_orthogonal", None, orth),
    ])
}

/// `span{f_sv : v}` is a right submodule on which `T_i` acts by `ρ(T_i)`.
pub fn submodule_checks<B: Backend>(sn: &Seminormal<B>) -> Result<Vec<CheckRecord>> {
    let alg = sn.alg();
    let gens = (0..alg.n()).map(|i| alg.gen_t(i)).collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    for shape in multipartitions(alg.n(), alg.r()) {
        let rep = specht_rep(alg, &shape)?;
        out.push(rep_relations_check(alg, &rep));
        let s = StdTableau::row_tableau(&shape);
        let row: Vec<_> = rep.basis.iter().map(|v| sn.f_st(&s, v)).collect::<Result<_>>()?;
        let mut failure = None;
        for (i, g) in gens.iter().enumerate() {
            for (a, v) in rep.basis.iter().enumerate() {
                let lhs = alg.mul(&row[a], g)?;
                let items: Vec<_> = (0..rep.dim()).map(|b| (rep.t[i].get(a, b).clone(), &row[b])).collect();
                if failure.is_none() && lhs != alg.combine(&items) {
                    failure = Some(values([("v", v.to_string()), ("generator", format!("T{i}"))]));
                }
            }
        }
        out.push(CheckRecord::from_failure("seminormal.specht_submodule", Some(shape.to_string()), failure));
    }
    Ok(out)
}

/// `τ(b) = Σ_λ χ^λ(b) / s_λ` for every Ariki–Koike basis element `b`.
pub fn trace_decomposition_check<B: Backend>(alg: &Algebra<B>, schur: &[(Multipartition, B::C)]) -> Result<CheckRecord> {
    let reps = schur.iter().map(|(l, _)| specht_rep(alg, l)).collect::<Result<Vec<_>>>()?;
    let inv = schur.iter().map(|(_, s)| s.inv()).collect::<std::result::Result<Vec<_>, _>>()?;
    for idx in 0..alg.dim() as u32 {
        let b = alg.basis_index(idx);
        let mut total = B::C::zero();
        for (rep, w) in reps.iter().zip(&inv) {
            total = total.add(&rep.monomial(&b.c, &b.w).trace().mul(w));
        }
        let expect = alg.tau(&alg.basis(idx));
        if total != expect {
            return Ok(CheckRecord::fail("seminormal.trace_decomposition", None, values([("basis", b.to_string()), ("sum", total.to_string())])));
        }
    }
    Ok(CheckRecord::pass("seminormal.trace_decomposition", None))
}

/// `Ψ_t F_t = F_{t^λ} Φ_t`, `γ_{t^λ} Φ_t Ψ_t^* = γ_t`, `F_{t^λ} = (γ_{t^λ}/γ_t) Ψ_t F_t Ψ_t^*`,
/// `f_st = Φ_s^* f_{t^λ t^λ} Φ_t`, and the expressions of `F_{t^λ}` through `f_{t^λ t_λ}` and `z_λ`.
pub fn psi_phi_checks<B: Backend>(sn: &Seminormal<B>) -> Result<Vec<CheckRecord>> {
    let alg = sn.alg();
    let mut out = Vec::new();
    for shape in multipartitions(alg.n(), alg.r()) {
        let tabs = std_tableaux(&shape);
        let top = StdTableau::row_tableau(&shape);
        let f_top = sn.idempotent(&top)?;
        let g_top = sn.gamma(&top)?;
        let pp: Vec<_> = tabs.iter().map(|t| sn.psi_phi(t)).collect::<Result<_>>()?;
        let (mut intertwine, mut norm, mut conj, mut fst) = (None, None, None, None);
        for (t, (psi, phi)) in tabs.iter().zip(&pp) {
            let ft = sn.idempotent(t)?;
            let label = || values([("t", t.to_string())]);
            if intertwine.is_none() && alg.mul(psi, &ft)? != alg.mul(&f_top, phi)? {
                intertwine = Some(label());
            }
            let g_t = sn.gamma(t)?;
            let psi_star = alg.star(psi);
            if norm.is_none() && alg.mul(phi, &psi_star)?.scale(&g_top) != alg.scalar(g_t.clone()) {
                norm = Some(label());
            }
            let rhs = alg.mul(&alg.mul(psi, &ft)?, &psi_star)?.scale(&g_top.div(&g_t)?);
            if conj.is_none() && rhs != f_top {
                conj = Some(label());
            }
        }
        let base = sn.f_st(&top, &top)?;
        for (s, (_, phi_s)) in tabs.iter().zip(&pp) {
            let left = alg.mul(&alg.star(phi_s), &base)?;
            for (t, (_, phi_t)) in tabs.iter().zip(&pp) {
                if fst.is_none() && alg.mul(&left, phi_t)? != sn.f_st(s, t)? {
                    fst = Some(values([("s", s.to_string()), ("t", t.to_string())]));
                }
            }
        }
        let lam = Some(shape.to_string());
        out.push(CheckRecord::from_failure("seminormal.psi_intertwine", lam.clone(), intertwine));
        out.push(CheckRecord::from_failure("seminormal.psi_phi_norm", lam.clone(), norm));
        out.push(CheckRecord::from_failure("seminormal.psi_conjugate", lam.clone(), conj));
        out.push(CheckRecord::from_failure("seminormal.f_from_phi", lam.clone(), fst));

        // F_{t^λ} = f_{t^λ t_λ} Ψ_{t_λ}^* / γ_{t_λ} = z_λ Ψ_{t_λ}^* / (γ_{t_λ} γ'_{t^{λ'}})
        let bottom = &StdTableau::col_tableau(&shape);
        let at = tabs.iter().position(|t| t == bottom).expect("t_λ is standard");
        let psi_star = alg.star(&pp[at].0);
        let g_bottom = sn.gamma(bottom)?;
        let via_f = alg.mul(&sn.f_st(&top, bottom)?, &psi_star)?.scale(&g_bottom.inv()?);
        let g_dual = alg.lift(&gamma_row_closed(&shape.conjugate()).prime_involution(alg.r()))?;
        let via_z = alg.mul(&sn.z_elem(&shape)?, &psi_star)?.scale(&g_bottom.mul(&g_dual).inv()?);
        let failure = if via_f != f_top {
            Some(Witness::Text("f-form".into()))
        } else if via_z != f_top {
            Some(Witness::Text("z-form".into()))
        } else {
            None
        };
        out.push(CheckRecord::from_failure("seminormal.top_idempotent_from_z", lam, failure));
    }
    Ok(out)
}

/// `F_t' = F_{t'}`, `f_st g_uv = 0` for `t ≠ u'`, and `z_λ = γ'_{t^{λ'}} f_{t^λ t_λ}`.
pub fn dual_checks<B: Backend>(sn: &Seminormal<B>) -> Result<Vec<CheckRecord>> {
    let alg = sn.alg();
    let shapes = multipartitions(alg.n(), alg.r());
    let mut out = Vec::new();
    let mut prime_fail = None;
    for shape in &shapes {
        for t in std_tableaux(shape) {
            if prime_fail.is_none() && alg.prime(&sn.idempotent(&t)?)? != sn.idempotent(&t.conjugate())? {
                prime_fail = Some(values([("t", t.to_string())]));
            }
        }
    }
    out.push(CheckRecord::from_failure("dual.prime_idempotent", None, prime_fail));

    let mut fs = Vec::new();
    let mut gs = Vec::new();
    for shape in &shapes {
        let tabs = std_tableaux(shape);
        for s in &tabs {
            for t in &tabs {
                fs.push((s.clone(), t.clone(), sn.f_st(s, t)?));
                gs.push((s.clone(), t.clone(), sn.g_st(s, t)?));
            }
        }
    }
    let mut orth = None;
    for (s, t, f) in &fs {
        for (u, v, g) in &gs {
            if *t != u.conjugate() && orth.is_none() && !alg.mul(f, g)?.is_zero() {
                orth = Some(values([("st", format!("{s} {t}")), ("uv", format!("{u} {v}"))]));
            }
        }
    }
    out.push(CheckRecord::from_failure("dual.f_g_orthogonal", None, orth));

    for shape in &shapes {
        let tabs = std_tableaux(shape);
        let (top, bottom) = (&tabs[0], &StdTableau::col_tableau(shape));
        let g_dual = alg.lift(&gamma_row_closed(&shape.conjugate()).prime_involution(alg.r()))?;
        let z = sn.z_elem(shape)?;
        let expect = sn.f_st(top, bottom)?.scale(&g_dual);
        out.push(CheckRecord::from_failure("dual.z_from_f", Some(shape.to_string()), (z != expect).then(|| Witness::Element(alg.serialize(&z)))));
    }
    Ok(out)
}

/// `1`-dimensional representations of the one-row shapes: `T_i ↦ q`, `L_k ↦ q^{k−1} Q_t`.
pub fn eta_rep_check<B: Backend>(alg: &Algebra<B>) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    for t in 1..=alg.r() {
        let shape = Multipartition::eta(alg.n(), alg.r(), t);
        let rep = specht_rep(alg, &shape)?;
        let mut ok = rep.dim() == 1;
        for i in 1..alg.n() {
            ok &= rep.t[i].get(0, 0) == alg.q();
        }
        for k in 1..=alg.n() {
            ok &= *rep.l[k - 1].get(0, 0) == alg.lift(&RatFunc::q_mono(k as i64 - 1, t))?;
        }
        out.push(CheckRecord::from_failure("seminormal.eta_rep", Some(shape.to_string()), (!ok).then(|| Witness::Text("one-row representation".into()))));
    }
    Ok(out)
}
