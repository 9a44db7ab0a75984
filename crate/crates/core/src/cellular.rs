//! The Murphy-type cellular basis `m_st`, its dual `n_st`, and `z_λ`.

use crate::algebra::{Algebra, Elem};
use crate::coeff::{q_fact, Backend, Field, RatFunc};
use crate::combinatorics::{multipartitions, std_tableaux, w_lambda, Multipartition, Perm, StdTableau};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::report::{values, CheckRecord, Witness};

pub(crate) fn check_shape<B: Backend>(alg: &Algebra<B>, shape: &Multipartition) -> Result<()> {
    if shape.r() != alg.r() || shape.n() != alg.n() {
        return Err(Error::ShapeMismatch { shape: shape.to_string(), r: alg.r(), n: alg.n() });
    }
    Ok(())
}

fn check_pair(s: &StdTableau, t: &StdTableau) -> Result<()> {
    if s.shape() != t.shape() {
        return Err(Error::ShapeMismatch { shape: t.shape().to_string(), r: s.shape().r(), n: s.n() });
    }
    Ok(())
}

/// `S_λ`: permutations preserving every row of `t^λ`.
pub fn row_stabilizer(shape: &Multipartition) -> Vec<Perm> {
    let top = StdTableau::row_tableau(shape);
    Perm::all(shape.n())
        .into_iter()
        .filter(|w| (1..=shape.n()).all(|k| top.same_row(k, w.apply(k))))
        .collect()
}

/// `x_λ = Σ_{w∈S_λ} T_w`.
pub fn x_elem<B: Backend>(alg: &Algebra<B>, shape: &Multipartition) -> Result<Elem<B::C>> {
    check_shape(alg, shape)?;
    let terms: Vec<_> = row_stabilizer(shape).iter().map(|w| alg.t_w(w)).collect();
    let one = B::C::one();
    Ok(alg.combine(&terms.iter().map(|e| (one.clone(), e)).collect::<Vec<_>>()))
}

/// `y_λ = Σ_{w∈S_λ} (−q)^{−ℓ(w)} T_w`.
pub fn y_elem<B: Backend>(alg: &Algebra<B>, shape: &Multipartition) -> Result<Elem<B::C>> {
    check_shape(alg, shape)?;
    let mut items = Vec::new();
    for w in row_stabilizer(shape) {
        let len = w.length() as i64;
        let sign = if len % 2 == 0 { RatFunc::one() } else { -RatFunc::one() };
        items.push((alg.lift(&(&sign * &RatFunc::q_pow(-len)))?, alg.t_w(&w)));
    }
    Ok(alg.combine(&items.iter().map(|(c, e)| (c.clone(), e)).collect::<Vec<_>>()))
}

/// `∏ (L_k − Q_s)` over the given `(k, s)` pairs.
fn jm_product<B: Backend>(alg: &Algebra<B>, factors: &[(usize, usize)]) -> Result<Elem<B::C>> {
    let mut acc = alg.unit();
    for &(k, s) in factors {
        let qs = alg.lift(&RatFunc::big_q(s))?;
        let lk = alg.apply_gen(crate::algebra::Gen::L(k), &acc);
        acc = lk.sub(&acc.scale(&qs));
    }
    Ok(acc)
}

/// `u_λ^+ = ∏_{s=2}^r ∏_{k=1}^{a_s} (L_k − Q_s)`.
pub fn u_plus<B: Backend>(alg: &Algebra<B>, shape: &Multipartition) -> Result<Elem<B::C>> {
    check_shape(alg, shape)?;
    let f: Vec<_> = (2..=shape.r()).flat_map(|s| (1..=shape.a(s)).map(move |k| (k, s))).collect();
    jm_product(alg, &f)
}

/// `u_λ^− = ∏_{s=2}^r ∏_{k=1}^{a_s} (L_k − Q_{r−s+1})`.
pub fn u_minus<B: Backend>(alg: &Algebra<B>, shape: &Multipartition) -> Result<Elem<B::C>> {
    check_shape(alg, shape)?;
    let r = shape.r();
    let f: Vec<_> = (2..=r).flat_map(|s| (1..=shape.a(s)).map(move |k| (k, r - s + 1))).collect();
    jm_product(alg, &f)
}

/// `m_λ = x_λ u_λ^+`.
pub fn m_lambda<B: Backend>(alg: &Algebra<B>, shape: &Multipartition) -> Result<Elem<B::C>> {
    alg.mul(&x_elem(alg, shape)?, &u_plus(alg, shape)?)
}

/// `n_λ = y_λ u_λ^−`.
pub fn n_lambda<B: Backend>(alg: &Algebra<B>, shape: &Multipartition) -> Result<Elem<B::C>> {
    alg.mul(&y_elem(alg, shape)?, &u_minus(alg, shape)?)
}

/// `T_{d(s)}^* h T_{d(t)}`.
fn sandwich<B: Backend>(alg: &Algebra<B>, h: &Elem<B::C>, s: &StdTableau, t: &StdTableau) -> Result<Elem<B::C>> {
    let left = alg.mul(&alg.t_w(&s.d().inverse()), h)?;
    alg.mul(&left, &alg.t_w(&t.d()))
}

/// `m_st = T_{d(s)}^* m_λ T_{d(t)}`.
pub fn m_st<B: Backend>(alg: &Algebra<B>, s: &StdTableau, t: &StdTableau) -> Result<Elem<B::C>> {
    check_pair(s, t)?;
    sandwich(alg, &m_lambda(alg, s.shape())?, s, t)
}

/// `n_st = T_{d(s)}^* n_λ T_{d(t)}`.
pub fn n_st<B: Backend>(alg: &Algebra<B>, s: &StdTableau, t: &StdTableau) -> Result<Elem<B::C>> {
    check_pair(s, t)?;
    sandwich(alg, &n_lambda(alg, s.shape())?, s, t)
}

/// `z_λ = m_λ T_{w_λ} n_{λ'}`.
pub fn z_elem<B: Backend>(alg: &Algebra<B>, shape: &Multipartition) -> Result<Elem<B::C>> {
    let left = alg.mul(&m_lambda(alg, shape)?, &alg.t_w(&w_lambda(shape)))?;
    alg.mul(&left, &n_lambda(alg, &shape.conjugate())?)
}

/// `m_{η_t} = x u` with `x = Σ_{w∈S_n} T_w`, `u = ∏_{s≠t} ∏_{k=1}^n (L_k − Q_s)`.
pub fn eta_element<B: Backend>(alg: &Algebra<B>, t: usize) -> Result<Elem<B::C>> {
    let n = alg.n();
    let shape = Multipartition::eta(n, alg.r(), t);
    let f: Vec<_> = (1..=alg.r()).filter(|&s| s != t).flat_map(|s| (1..=n).map(move |k| (k, s))).collect();
    alg.mul(&x_elem(alg, &shape)?, &jm_product(alg, &f)?)
}

/// `[n]_q! ∏_{s≠t} ∏_{k=1}^n (q^{k−1} Q_t − Q_s)`, the eigenvalue of `m_{η_t}` on itself.
pub fn eta_scalar(r: usize, n: usize, t: usize) -> RatFunc {
    let mut acc = q_fact(n as i64).expect("nonnegative");
    for s in (1..=r).filter(|&s| s != t) {
        for k in 1..=n as i64 {
            acc = &acc * &(&RatFunc::q_mono(k - 1, t) - &RatFunc::big_q(s));
        }
    }
    acc
}

/// Which of the two cellular bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Murphy,
    Dual,
}

/// All `m_st` (or `n_st`) with coordinates relative to them.
pub struct CellularBasis<B: Backend> {
    pub kind: Kind,
    pub labels: Vec<(Multipartition, StdTableau, StdTableau)>,
    pub elems: Vec<Elem<B::C>>,
    inverse: Option<Matrix<B::C>>,
}

impl<B: Backend> CellularBasis<B> {
    pub fn new(alg: &Algebra<B>, kind: Kind) -> Result<Self> {
        let mut labels = Vec::new();
        let mut elems = Vec::new();
        for shape in multipartitions(alg.n(), alg.r()) {
            let core = match kind {
                Kind::Murphy => m_lambda(alg, &shape)?,
                Kind::Dual => n_lambda(alg, &shape)?,
            };
            let tabs = std_tableaux(&shape);
            let lefts =
                tabs.iter().map(|s| alg.mul(&alg.t_w(&s.d().inverse()), &core)).collect::<Result<Vec<_>>>()?;
            for (s, left) in tabs.iter().zip(&lefts) {
                for t in &tabs {
                    elems.push(alg.mul(left, &alg.t_w(&t.d()))?);
                    labels.push((shape.clone(), s.clone(), t.clone()));
                }
            }
        }
        let dim = alg.dim();
        let mut m = Matrix::zeros(dim, elems.len());
        for (j, e) in elems.iter().enumerate() {
            for (i, c) in e.terms() {
                m.set(*i as usize, j, c.clone());
            }
        }
        let inverse = if elems.len() == dim { m.inverse() } else { None };
        Ok(CellularBasis { kind, labels, elems, inverse })
    }

    /// Whether the elements form a basis of the algebra.
    pub fn is_basis(&self) -> bool {
        self.inverse.is_some()
    }

    /// Coordinates of `e` in this basis.
    pub fn coords(&self, alg: &Algebra<B>, e: &Elem<B::C>) -> Result<Vec<B::C>> {
        let inv = self.inverse.as_ref().ok_or(Error::NotInSpan)?;
        Ok(inv.apply(&alg.dense(e)))
    }

    pub fn position(&self, s: &StdTableau, t: &StdTableau) -> Option<usize> {
        self.labels.iter().position(|(_, a, b)| a == s && b == t)
    }
}

/// The basis property: `r^n n!` elements with an invertible change of basis.
pub fn basis_check<B: Backend>(alg: &Algebra<B>, basis: &CellularBasis<B>) -> CheckRecord {
    let name = match basis.kind {
        Kind::Murphy => "cellular.m_basis",
        Kind::Dual => "cellular.n_basis",
    };
    let failure = (!basis.is_basis()).then(|| values([("count", basis.elems.len()), ("dim", alg.dim())]));
    CheckRecord::from_failure(name, None, failure)
}

/// `m_st L_k ≡ res_t(k) m_st + Σ_{v▷t} a_v m_sv` modulo more dominant shapes, and the dual
/// statement `n_st L_k ≡ res_{t'}(k) n_st + Σ_{v▷t} a_v n_sv`.
pub fn triangularity_check<B: Backend>(alg: &Algebra<B>, basis: &CellularBasis<B>) -> Result<Vec<CheckRecord>> {
    let name = match basis.kind {
        Kind::Murphy => "cellular.jm_triangular",
        Kind::Dual => "cellular.jm_triangular_dual",
    };
    let mut out = Vec::new();
    for shape in multipartitions(alg.n(), alg.r()) {
        let mut failure = None;
        'outer: for (pos, (lam, s, t)) in basis.labels.iter().enumerate() {
            if *lam != shape {
                continue;
            }
            for k in 1..=alg.n() {
                let prod = alg.mul(&basis.elems[pos], &alg.elem_l(k)?)?;
                let coords = basis.coords(alg, &prod)?;
                let res = match basis.kind {
                    Kind::Murphy => t.residue(k)?,
                    Kind::Dual => t.conjugate().residue(k)?,
                };
                let res = alg.lift(&res)?;
                for (j, c) in coords.iter().enumerate() {
                    let (mu, u, v) = &basis.labels[j];
                    let ok = if j == pos {
                        *c == res
                    } else if mu == lam && u == s && v.dominates(t) {
                        true
                    } else if mu.strictly_dominates(lam)? {
                        true
                    } else {
                        c.is_zero()
                    };
                    if !ok {
                        failure = Some(values([
                            ("s", s.to_string()),
                            ("t", t.to_string()),
                            ("k", k.to_string()),
                            ("term", format!("{u} {v}")),
                            ("coeff", c.to_string()),
                        ]));
                        break 'outer;
                    }
                }
            }
        }
        out.push(CheckRecord::from_failure(name, Some(shape.to_string()), failure));
    }
    Ok(out)
}

/// `m_st^* = m_ts` for every pair.
pub fn star_check<B: Backend>(alg: &Algebra<B>, basis: &CellularBasis<B>) -> CheckRecord {
    let failure = basis.labels.iter().enumerate().find_map(|(i, (_, s, t))| {
        let j = basis.position(t, s)?;
        (alg.star(&basis.elems[i]) != basis.elems[j]).then(|| Witness::Element(alg.serialize(&basis.elems[i])))
    });
    CheckRecord::from_failure("cellular.star_transpose", None, failure)
}

/// `m_st' = (−q)^{−ℓ(d(s))−ℓ(d(t))} n_st`.
pub fn prime_check<B: Backend>(
    alg: &Algebra<B>,
    murphy: &CellularBasis<B>,
    dual: &CellularBasis<B>,
) -> Result<CheckRecord> {
    for (i, (_, s, t)) in murphy.labels.iter().enumerate() {
        let len = (s.d().length() + t.d().length()) as i64;
        let sign = if len % 2 == 0 { RatFunc::one() } else { -RatFunc::one() };
        let c = alg.lift(&(&sign * &RatFunc::q_pow(-len)))?;
        let lhs = alg.prime(&murphy.elems[i])?;
        if lhs != dual.elems[i].scale(&c) {
            return Ok(CheckRecord::fail("cellular.prime_dual", None, Witness::Element(alg.serialize(&lhs))));
        }
    }
    Ok(CheckRecord::pass("cellular.prime_dual", None))
}

/// `m_{η_t}² = [n]_q! ∏_{s≠t} ∏_k (q^{k−1}Q_t − Q_s) · m_{η_t}` for every `t`.
pub fn eta_check<B: Backend>(alg: &Algebra<B>) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    for t in 1..=alg.r() {
        let m = eta_element(alg, t)?;
        let sq = alg.mul(&m, &m)?;
        let c = alg.lift(&eta_scalar(alg.r(), alg.n(), t))?;
        let failure = (sq != m.scale(&c)).then(|| Witness::Element(alg.serialize(&sq)));
        let shape = Multipartition::eta(alg.n(), alg.r(), t);
        out.push(CheckRecord::from_failure("cellular.eta_square", Some(shape.to_string()), failure));
    }
    Ok(out)
}
