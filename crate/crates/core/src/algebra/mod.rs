//! Normal-form arithmetic in the Ariki–Koike algebra on the basis `L^c T_w`.
//!
//! Products are computed through the left regular action of the generators:
//!
//! * `L_1 · L^c T_w` raises `c_1`; at `c_1 = r` the cyclotomic relation
//!   `∏_s (L_1 − Q_s) = 0` rewrites `L_1^r` in lower powers.
//! * `T_i · L^c T_w` (`i ≥ 1`) moves `T_i` past `L^c` with
//!   `T_i f = (s_i f) T_i + (q−1) L_{i+1} (f − s_i f)/(L_{i+1} − L_i)`,
//!   which never raises an exponent to `r`, then multiplies `T_i T_w` with the
//!   quadratic relation `T_i² = (q−1)T_i + q`.
//! * `L_k · L^c T_w` raises `c_k`; at `c_k = r` it expands
//!   `L_k = q^{−1} T_{k−1} L_{k−1} T_{k−1}`.
//!
//! Generator actions and products of basis pairs are memoized per algebra.

mod basis;
mod elem;

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use parking_lot::RwLock;
use rand::Rng;
use serde::{Deserialize, Serialize};

pub use basis::BasisIndex;
pub use elem::Elem;

use crate::coeff::{semisimplicity_poly, Backend, Field, RatFunc};
use crate::combinatorics::Perm;
use crate::error::{Error, Result};
use basis::BasisTable;
pub(crate) use elem::Accum;

/// A generator acting on the left.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Gen {
    /// `T_0 = L_1` for `i = 0`, otherwise `T_i`.
    T(usize),
    /// The Jucys–Murphy element `L_k`.
    L(usize),
}

type Terms<C> = Arc<Vec<(u32, C)>>;

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

struct Inner<B: Backend> {
    id: u64,
    backend: B,
    table: BasisTable,
    q: B::C,
    qm1: B::C,
    qinv: B::C,
    /// `L_1^r = Σ_j cyc[j] L_1^j`.
    cyc: Vec<B::C>,
    semisimple: bool,
    gen_cache: RwLock<HashMap<(u32, Gen), Terms<B::C>>>,
    pair_cache: RwLock<HashMap<(u32, u32), Terms<B::C>>>,
    star_cache: RwLock<HashMap<u32, Terms<B::C>>>,
}

/// The algebra `H_{r,n}` over a coefficient backend; cheap to clone.
#[derive(Clone)]
pub struct Algebra<B: Backend> {
    inner: Arc<Inner<B>>,
}

impl<B: Backend> std::fmt::Debug for Algebra<B> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Algebra(r={}, n={}, {})", self.r(), self.n(), self.inner.backend.label())
    }
}

/// One serialized term `{c, w, coeff}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub c: Vec<usize>,
    pub w: Vec<usize>,
    pub coeff: String,
}

impl<B: Backend> Algebra<B> {
    pub fn new(backend: B, n: usize) -> Result<Self> {
        let r = backend.r();
        crate::coeff::check_r(r)?;
        // ∏_s (x − Q_s) = Σ_j poly[j] x^j
        let mut poly = vec![RatFunc::one()];
        for s in 1..=r {
            let qs = RatFunc::big_q(s);
            let mut next = vec![RatFunc::zero(); poly.len() + 1];
            for (j, a) in poly.iter().enumerate() {
                next[j + 1] = &next[j + 1] + a;
                next[j] = &next[j] - &(&qs * a);
            }
            poly = next;
        }
        let cyc = poly[..r].iter().map(|p| backend.lift(&-p)).collect::<Result<Vec<_>, _>>()?;
        let q = backend.q();
        let semisimple = backend.lift(&semisimplicity_poly(r, n)).map(|v| !v.is_zero()).unwrap_or(false);
        let inner = Inner {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            table: BasisTable::new(n, r),
            qm1: q.sub(&B::C::one()),
            qinv: q.inv()?,
            q,
            cyc,
            semisimple,
            backend,
            gen_cache: RwLock::new(HashMap::new()),
            pair_cache: RwLock::new(HashMap::new()),
            star_cache: RwLock::new(HashMap::new()),
        };
        Ok(Algebra { inner: Arc::new(inner) })
    }

    pub fn n(&self) -> usize {
        self.inner.table.n
    }

    pub fn r(&self) -> usize {
        self.inner.table.r
    }

    /// `r^n · n!`.
    pub fn dim(&self) -> usize {
        self.inner.table.dim()
    }

    pub fn backend(&self) -> &B {
        &self.inner.backend
    }

    /// Whether `P_H` is nonzero in this backend.
    pub fn is_semisimple(&self) -> bool {
        self.inner.semisimple
    }

    pub fn require_semisimple(&self) -> Result<()> {
        if self.inner.semisimple {
            Ok(())
        } else {
            Err(Error::NotSemisimple(self.inner.backend.label()))
        }
    }

    pub fn lift(&self, f: &RatFunc) -> Result<B::C> {
        Ok(self.inner.backend.lift(f)?)
    }

    pub fn q(&self) -> &B::C {
        &self.inner.q
    }

    fn id(&self) -> u64 {
        self.inner.id
    }

    fn same(&self, a: &Elem<B::C>) -> Result<()> {
        if a.alg == self.id() {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn zero(&self) -> Elem<B::C> {
        Elem::zero_in(self.id())
    }

    pub fn unit(&self) -> Elem<B::C> {
        self.scalar(B::C::one())
    }

    pub fn scalar(&self, c: B::C) -> Elem<B::C> {
        Elem::from_sorted(self.id(), vec![(0, c)])
    }

    /// The basis element with number `idx`.
    pub fn basis(&self, idx: u32) -> Elem<B::C> {
        Elem::from_sorted(self.id(), vec![(idx, B::C::one())])
    }

    pub fn basis_number(&self, b: &BasisIndex) -> Result<u32> {
        self.inner
            .table
            .index(b)
            .ok_or(Error::IndexOutOfRange { what: "basis index", value: b.c.len(), bound: self.n() })
    }

    pub fn basis_index(&self, idx: u32) -> BasisIndex {
        self.inner.table.basis_index(idx)
    }

    pub fn basis_elem(&self, b: &BasisIndex) -> Result<Elem<B::C>> {
        Ok(self.basis(self.basis_number(b)?))
    }

    /// `T_0 = L_1` for `i = 0`, `T_i` otherwise.
    pub fn gen_t(&self, i: usize) -> Result<Elem<B::C>> {
        let n = self.n();
        if i >= n.max(1) || n == 0 {
            return Err(Error::IndexOutOfRange { what: "generator T", value: i, bound: n.saturating_sub(1) });
        }
        if i == 0 {
            return self.elem_l(1);
        }
        Ok(self.t_w(&Perm::simple(i, n)?))
    }

    /// `L_k` as the basis element with `c_k = 1` (when `r ≥ 2`).
    pub fn elem_l(&self, k: usize) -> Result<Elem<B::C>> {
        if k == 0 || k > self.n() {
            return Err(Error::IndexOutOfRange { what: "Jucys–Murphy index", value: k, bound: self.n() });
        }
        Ok(self.apply_gen(Gen::L(k), &self.unit()))
    }

    /// `T_w`.
    pub fn t_w(&self, w: &Perm) -> Elem<B::C> {
        let t = &self.inner.table;
        let p = t.perm_number(w).expect("permutation of degree n");
        self.basis(t.encode(&vec![0; self.n()], p))
    }

    /// Product of generators, leftmost first.
    pub fn word(&self, gens: &[Gen]) -> Elem<B::C> {
        gens.iter().rev().fold(self.unit(), |acc, &g| self.apply_gen(g, &acc))
    }

    /// `g · a`.
    pub fn apply_gen(&self, g: Gen, a: &Elem<B::C>) -> Elem<B::C> {
        debug_assert_eq!(a.alg, self.id());
        if a.terms.len() == 1 && a.terms[0].1.is_one() {
            return Elem::from_sorted(self.id(), self.gen_act(g, a.terms[0].0).to_vec());
        }
        let mut acc = Accum::new();
        for (idx, c) in &a.terms {
            acc.add_scaled(c, &self.gen_act(g, *idx));
        }
        acc.finish(self.id())
    }

    fn gen_act(&self, g: Gen, idx: u32) -> Terms<B::C> {
        if let Some(v) = self.inner.gen_cache.read().get(&(idx, g)) {
            return v.clone();
        }
        let v = Arc::new(self.compute_gen(g, idx));
        self.inner.gen_cache.write().insert((idx, g), v.clone());
        v
    }

    fn compute_gen(&self, g: Gen, idx: u32) -> Vec<(u32, B::C)> {
        let inner = &*self.inner;
        let t = &inner.table;
        let (mut c, p) = t.decode(idx);
        let r = t.r;
        match g {
            Gen::T(0) | Gen::L(1) => {
                if c[0] + 1 < r {
                    c[0] += 1;
                    return vec![(t.encode(&c, p), B::C::one())];
                }
                let mut out: Vec<(u32, B::C)> = (0..r)
                    .filter(|&j| !inner.cyc[j].is_zero())
                    .map(|j| {
                        c[0] = j;
                        (t.encode(&c, p), inner.cyc[j].clone())
                    })
                    .collect();
                out.sort_by_key(|x| x.0);
                out
            }
            Gen::T(i) => {
                let (a, b) = (c[i - 1], c[i]);
                let mut acc = Accum::new();
                let one = B::C::one();
                let mut sc = c.clone();
                sc.swap(i - 1, i);
                let up = t.left_simple(p, i);
                if t.perm(p).left_ascent(i) {
                    acc.add_term(t.encode(&sc, up), &one, &one);
                } else {
                    acc.add_term(t.encode(&sc, p), &inner.qm1, &one);
                    acc.add_term(t.encode(&sc, up), &inner.q, &one);
                }
                let mut cc = c.clone();
                if a < b {
                    for k in 0..b - a {
                        cc[i - 1] = a + k;
                        cc[i] = b - k;
                        acc.add_term(t.encode(&cc, p), &inner.qm1, &one);
                    }
                } else {
                    let neg = inner.qm1.neg();
                    for k in 0..a - b {
                        cc[i - 1] = b + k;
                        cc[i] = a - k;
                        acc.add_term(t.encode(&cc, p), &neg, &one);
                    }
                }
                acc.finish_terms()
            }
            Gen::L(k) => {
                if c[k - 1] + 1 < r {
                    c[k - 1] += 1;
                    return vec![(t.encode(&c, p), B::C::one())];
                }
                let e = self.basis(idx);
                let e = self.apply_gen(Gen::T(k - 1), &e);
                let e = self.apply_gen(Gen::L(k - 1), &e);
                let e = self.apply_gen(Gen::T(k - 1), &e);
                e.scale(&inner.qinv).terms
            }
        }
    }

    /// `B_i · B_j` for basis numbers.
    fn pair(&self, i: u32, j: u32) -> Terms<B::C> {
        if i == 0 {
            return Arc::new(vec![(j, B::C::one())]);
        }
        if let Some(v) = self.inner.pair_cache.read().get(&(i, j)) {
            return v.clone();
        }
        let t = &self.inner.table;
        let (mut c, p) = t.decode(i);
        // B_i = g · B_rest
        let (g, rest) = match c.iter().position(|&e| e > 0) {
            Some(k) => {
                c[k] -= 1;
                (Gen::L(k + 1), t.encode(&c, p))
            }
            None => {
                let s = t.word(p)[0];
                (Gen::T(s), t.encode(&c, t.left_simple(p, s)))
            }
        };
        let tail = Elem::from_sorted(self.id(), self.pair(rest, j).to_vec());
        let v = Arc::new(self.apply_gen(g, &tail).terms);
        self.inner.pair_cache.write().insert((i, j), v.clone());
        v
    }

    pub fn mul(&self, a: &Elem<B::C>, b: &Elem<B::C>) -> Result<Elem<B::C>> {
        self.same(a)?;
        self.same(b)?;
        let mut acc = Accum::new();
        for (i, x) in &a.terms {
            for (j, y) in &b.terms {
                let s = x.mul(y);
                acc.add_scaled(&s, &self.pair(*i, *j));
            }
        }
        Ok(acc.finish(self.id()))
    }

    /// Left-to-right product of several elements.
    pub fn product(&self, factors: &[&Elem<B::C>]) -> Result<Elem<B::C>> {
        let mut acc = self.unit();
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    /// The antiautomorphism with `T_i^* = T_i`: `(L^c T_w)^* = T_{w^{-1}} L^c`.
    pub fn star(&self, a: &Elem<B::C>) -> Elem<B::C> {
        debug_assert_eq!(a.alg, self.id());
        let mut acc = Accum::new();
        for (idx, c) in &a.terms {
            acc.add_scaled(c, &self.star_basis(*idx));
        }
        acc.finish(self.id())
    }

    fn star_basis(&self, idx: u32) -> Terms<B::C> {
        if let Some(v) = self.inner.star_cache.read().get(&idx) {
            return v.clone();
        }
        let t = &self.inner.table;
        let (c, p) = t.decode(idx);
        let mut e = self.basis(t.encode(&c, 0));
        for &s in t.word(t.inverse(p)).iter().rev() {
            e = self.apply_gen(Gen::T(s), &e);
        }
        let v = Arc::new(e.terms);
        self.inner.star_cache.write().insert(idx, v.clone());
        v
    }

    /// The semilinear involution: coefficients primed, `L^c T_w ↦ (−q)^{−ℓ(w)} L^c T_w`.
    pub fn prime(&self, a: &Elem<B::C>) -> Result<Elem<B::C>> {
        self.same(a)?;
        let t = &self.inner.table;
        let mut terms = Vec::with_capacity(a.terms.len());
        for (idx, c) in &a.terms {
            let len = t.perm(t.decode(*idx).1).length() as i64;
            let sign = if len % 2 == 0 { RatFunc::one() } else { -RatFunc::one() };
            let f = self.lift(&(&sign * &RatFunc::q_pow(-len)))?;
            terms.push((*idx, self.inner.backend.prime_coeff(c)?.mul(&f)));
        }
        Ok(Elem::from_sorted(self.id(), terms))
    }

    /// `τ(a)`: the coefficient of the identity.
    pub fn tau(&self, a: &Elem<B::C>) -> B::C {
        a.coeff(0)
    }

    /// Counts the basis and compares with `r^n n!`.
    pub fn dim_check(&self) -> Result<usize> {
        let expect = self.r().pow(self.n() as u32) * (1..=self.n()).product::<usize>();
        let t = &self.inner.table;
        let distinct: std::collections::HashSet<BasisIndex> =
            (0..t.dim() as u32).map(|i| t.basis_index(i)).collect();
        if distinct.len() != expect || t.dim() != expect {
            return Err(Error::Internal(format!("basis has {} elements, expected {expect}", distinct.len())));
        }
        Ok(expect)
    }

    /// A random element with `terms` entries and small integer coefficients.
    pub fn random_elem(&self, rng: &mut impl Rng, terms: usize) -> Elem<B::C> {
        let mut acc = Accum::new();
        let one = B::C::one();
        for _ in 0..terms {
            let idx = rng.gen_range(0..self.dim() as u32);
            let v = rng.gen_range(-3i64..=3);
            acc.add_term(idx, &B::C::from_i64(v), &one);
        }
        acc.finish(self.id())
    }

    /// Coordinates in the basis, indexed by basis number.
    pub fn dense(&self, a: &Elem<B::C>) -> Vec<B::C> {
        let mut v = vec![B::C::zero(); self.dim()];
        for (idx, c) in &a.terms {
            v[*idx as usize] = c.clone();
        }
        v
    }

    pub fn from_dense(&self, v: &[B::C]) -> Elem<B::C> {
        let terms = v.iter().enumerate().map(|(i, c)| (i as u32, c.clone())).collect();
        Elem::from_sorted(self.id(), terms)
    }

    /// `Σ c_i · e_i`.
    pub fn combine(&self, items: &[(B::C, &Elem<B::C>)]) -> Elem<B::C> {
        let mut acc = Accum::new();
        for (c, e) in items {
            acc.add_scaled(c, &e.terms);
        }
        acc.finish(self.id())
    }

    /// `{c, w, coeff}` per term, in basis order.
    pub fn serialize(&self, a: &Elem<B::C>) -> Vec<TermRecord> {
        a.terms
            .iter()
            .map(|(idx, c)| {
                let b = self.basis_index(*idx);
                TermRecord { c: b.c, w: b.w.one_line().to_vec(), coeff: c.to_string() }
            })
            .collect()
    }

    /// Human-readable expansion, e.g. `(q - 1)*T[2,1] + q`.
    pub fn display(&self, a: &Elem<B::C>) -> String {
        if a.is_zero() {
            return "0".to_string();
        }
        a.terms
            .iter()
            .map(|(idx, c)| {
                let b = self.basis_index(*idx);
                if b.c.iter().all(|&e| e == 0) && b.w.is_identity() {
                    format!("({c})")
                } else {
                    format!("({c})*{b}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}
